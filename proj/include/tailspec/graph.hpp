// graph.hpp — finite weighted graphs, tail attachments, and truncations.
//
// Vertices are labeled 1..n. Tails are one-sided infinite paths attached by a
// bridge edge; a TailedGraph never materializes the infinite operator, it is
// a finite description consumed by the reduction and by the truncation oracle.
#pragma once

#include <Eigen/Dense>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tailspec/numeric.hpp"

namespace tailspec {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Symmetric matrix with structurally enforced symmetry: set(i, j) writes
/// both triangles, construction from a full matrix rejects asymmetry.
template <class S>
class SymmetricMatrix {
 public:
  SymmetricMatrix() : m_(0, 0) {}
  explicit SymmetricMatrix(Eigen::Index order) : m_(DenseMatrix<S>::Zero(order, order)) {}

  static SymmetricMatrix from_matrix(const DenseMatrix<S>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("SymmetricMatrix: not square");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = i + 1; j < m.cols(); ++j)
        if (!(m(i, j) == m(j, i))) throw std::invalid_argument("SymmetricMatrix: not symmetric");
    SymmetricMatrix out;
    out.m_ = m;
    return out;
  }

  Eigen::Index order() const { return m_.rows(); }
  const S& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  void set(Eigen::Index i, Eigen::Index j, const S& v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  const DenseMatrix<S>& mat() const { return m_; }

  SymmetricMatrix<double> to_double() const {
    SymmetricMatrix<double> out(order());
    for (Eigen::Index i = 0; i < order(); ++i)
      for (Eigen::Index j = i; j < order(); ++j) out.set(i, j, tailspec::to_double(m_(i, j)));
    return out;
  }

 private:
  DenseMatrix<S> m_;
};

/// Finite simple weighted graph; unordered edge pairs, strictly positive weights.
template <class S>
struct WeightedGraph {
  int n = 0;                              // vertices labeled 1..n
  std::map<std::pair<int, int>, S> edges;  // key (i, j) with i < j

  WeightedGraph() = default;
  explicit WeightedGraph(int order) : n(order) {
    if (order < 1) throw std::invalid_argument("WeightedGraph: order must be >= 1");
  }

  void add_edge(int i, int j, const S& w = S(1)) {
    if (i == j) throw std::invalid_argument("WeightedGraph: self-loops are not allowed");
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::invalid_argument("WeightedGraph: vertex out of range");
    if (!(w > S(0))) throw std::invalid_argument("WeightedGraph: edge weight must be positive");
    auto key = std::minmax(i, j);
    auto [it, inserted] = edges.emplace(std::make_pair(key.first, key.second), w);
    if (!inserted && !(it->second == w))
      throw std::invalid_argument("WeightedGraph: conflicting duplicate edge");
  }

  const S* weight(int i, int j) const {
    auto key = std::minmax(i, j);
    auto it = edges.find({key.first, key.second});
    return it == edges.end() ? nullptr : &it->second;
  }

  SymmetricMatrix<S> adjacency() const {
    SymmetricMatrix<S> a(n);
    for (const auto& [e, w] : edges) a.set(e.first - 1, e.second - 1, w);
    return a;
  }

  template <class T>
  WeightedGraph<T> cast() const {
    WeightedGraph<T> g(n);
    for (const auto& [e, w] : edges) g.add_edge(e.first, e.second, scalar_from_rational<T>(Rational(w)));
    return g;
  }
};

inline WeightedGraph<double> to_double(const WeightedGraph<Rational>& g) {
  WeightedGraph<double> out(g.n);
  for (const auto& [e, w] : g.edges) out.add_edge(e.first, e.second, tailspec::to_double(w));
  return out;
}

/// One attachment point: `rays` parallel unweighted-by-default infinite paths
/// joined to `vertex` by bridges of weight `bridge`. `tail_weights` is a
/// finite exception list: weight of the tail edge between path vertices j and
/// j+1 (1-based); unspecified indices are 1, which makes the tail eventually
/// free by construction.
template <class S>
struct TailAttachment {
  int vertex = 1;
  int rays = 1;
  S bridge = S(1);
  std::map<int, S> tail_weights;

  bool weighted() const {
    for (const auto& [k, w] : tail_weights)
      if (!(w == S(1))) return true;
    return false;
  }
};

template <class S>
struct TailedGraph {
  WeightedGraph<S> base;
  std::vector<TailAttachment<S>> attachments;

  int total_rays() const {
    int r = 0;
    for (const auto& a : attachments) r += a.rays;
    return r;
  }
};

template <class S>
TailedGraph<S> attach_tails(WeightedGraph<S> base, std::vector<TailAttachment<S>> attachments) {
  if (attachments.empty())
    throw std::invalid_argument("attach_tails: at least one tail required");
  for (const auto& a : attachments) {
    if (a.vertex < 1 || a.vertex > base.n)
      throw std::invalid_argument("attach_tails: attachment vertex out of range");
    if (a.rays < 1) throw std::invalid_argument("attach_tails: ray count must be >= 1");
    if (!(a.bridge > S(0))) throw std::invalid_argument("attach_tails: bridge weight must be positive");
    for (const auto& [j, w] : a.tail_weights) {
      if (j < 1) throw std::invalid_argument("attach_tails: tail weight index must be >= 1");
      if (!(w > S(0))) throw std::invalid_argument("attach_tails: tail weight must be positive");
    }
  }
  return TailedGraph<S>{std::move(base), std::move(attachments)};
}

inline TailedGraph<double> to_double(const TailedGraph<Rational>& t) {
  TailedGraph<double> out;
  out.base = to_double(t.base);
  for (const auto& a : t.attachments) {
    TailAttachment<double> b;
    b.vertex = a.vertex;
    b.rays = a.rays;
    b.bridge = tailspec::to_double(a.bridge);
    for (const auto& [j, w] : a.tail_weights) b.tail_weights[j] = tailspec::to_double(w);
    out.attachments.push_back(std::move(b));
  }
  return out;
}

/// Adjacency matrix of the finite graph obtained by cutting every ray after N
/// tail vertices. Vertex order: base vertices first, then ray vertices
/// generation by generation (rays in attachment order within a generation),
/// so truncate(T, N) is the leading principal block of truncate(T, N + 1).
/// N = 0 yields the bare base graph.
template <class S>
SymmetricMatrix<S> truncate(const TailedGraph<S>& t, int depth) {
  if (depth < 0) throw std::invalid_argument("truncate: depth must be >= 0");
  const int n = t.base.n;
  const int rays = t.total_rays();
  SymmetricMatrix<S> a(n + static_cast<Eigen::Index>(depth) * rays);
  for (const auto& [e, w] : t.base.edges) a.set(e.first - 1, e.second - 1, w);
  if (depth == 0) return a;

  auto ray_index = [&](int ray, int gen) {  // 0-based ray id, 1-based generation
    return n + (gen - 1) * rays + ray;
  };
  int ray0 = 0;
  for (const auto& att : t.attachments) {
    for (int r = 0; r < att.rays; ++r) {
      const int id = ray0 + r;
      a.set(att.vertex - 1, ray_index(id, 1), att.bridge);
      for (int g = 1; g < depth; ++g) {
        auto it = att.tail_weights.find(g);
        const S w = it == att.tail_weights.end() ? S(1) : it->second;
        a.set(ray_index(id, g), ray_index(id, g + 1), w);
      }
    }
    ray0 += att.rays;
  }
  return a;
}

}  // namespace tailspec
