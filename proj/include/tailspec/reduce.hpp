// reduce.hpp — constructive reduction of a finite symmetric block coupled to
// an eventually free Jacobi tail into (finite symmetric block) + (finite-rank
// Jacobi extension), plus the special-case decompositions: parallel rays at
// one vertex, rays at every vertex ("sun" graphs), and Bethe-tree tails.
//
// The algorithm builds the Krylov chain started from the attachment column of
// the finite block, exactly as the unnormalized recursion
//   b_{., next} = w - y_k b_{., k} - z_k b_{., k-1},
//   y_k = <w, b_k>/||b_k||^2,  z_k = <w, b_{k-1}>/||b_{k-1}||^2,
// with w = A b_k. In exact-rational mode termination (next vector == 0) is
// decided exactly; in float mode the chain is fully reorthogonalized and a
// scale-aware threshold decides termination. Norms appear only through their
// squares, so the produced Jacobi off-diagonals stay in the rational field as
// a^2 entries.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tailspec/eig.hpp"
#include "tailspec/graph.hpp"
#include "tailspec/jacobi.hpp"
#include "tailspec/numeric.hpp"

namespace tailspec {

/// Attachments at several distinct vertices have no symbolic reduction here;
/// callers route such inputs to the truncation oracle.
struct OracleOnlyConfiguration : std::domain_error {
  using std::domain_error::domain_error;
};

template <class S>
struct FreeCopies {
  long long count = 0;
  bool unbounded = false;
  S scale_sq = S(1);
};

template <class S>
struct CanonicalForm {
  SymmetricMatrix<double> finite_block;  // compression of A onto the orthogonal complement
  FiniteRankJacobi<S> jacobi;            // extension of the tail (normalized by the scale below)
  S jacobi_scale_sq = S(1);              // actual Jacobi component = sqrt(scale_sq) * jacobi
  FreeCopies<S> free_copies;
  Eigen::MatrixXd basis;  // n x k: normalized Jacobi-chain vectors inside the finite span,
                          // deepest first; the last column is the attachment vector e_n.
};

template <class S>
struct ReductionTrace {
  std::vector<S> y, z;      // recursion coefficients, z_k > 0 until termination
  std::vector<S> norm_sq;   // ||unnormalized vector||^2 per step
  DenseMatrix<S> columns;   // (n-1) x K unnormalized Krylov columns, generation order
  bool zero_attachment = false;
  int steps = 0;  // K = number of constructed vectors beyond e_n
};

namespace detail {

template <class S>
bool is_zero_vector(const DenseVector<S>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!(v[i] == S(0))) return false;
  return true;
}

inline double max_abs_entry(const Eigen::MatrixXd& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

// Deterministic orthonormal completion: Gram-Schmidt over standard basis
// vectors in index order against the (normalized) Krylov chain, skipping
// near-dependent candidates.
inline Eigen::MatrixXd complete_basis(const Eigen::MatrixXd& ortho, Eigen::Index dim,
                                      Eigen::Index want, double threshold = 1e-8) {
  Eigen::MatrixXd out(dim, want);
  Eigen::Index got = 0;
  for (Eigen::Index cand = 0; cand < dim && got < want; ++cand) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    v[cand] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      v -= ortho * (ortho.transpose() * v);
      v -= out.leftCols(got) * (out.leftCols(got).transpose() * v);
    }
    const double norm = v.norm();
    if (norm < threshold) continue;
    out.col(got++) = v / norm;
  }
  if (got != want) throw std::logic_error("complete_basis: completion fell short");
  return out;
}

}  // namespace detail

/// Reduction to canonical form for a single tail attached (by a bridge of squared
/// weight bridge_sq) at the last vertex of the symmetric matrix `a`. The
/// returned Jacobi component extends `tail`: deepest generated entries first,
/// then the attachment diagonal, the bridge, and the tail's own entries.
/// A zero attachment row short-circuits: the block matrix is already in
/// canonical form, with e_n alone carrying the Jacobi chain.
template <class S>
std::pair<CanonicalForm<S>, ReductionTrace<S>> reduce_single_tail(const SymmetricMatrix<S>& a,
                                                                  const S& bridge_sq,
                                                                  const FiniteRankJacobi<S>& tail) {
  const Eigen::Index n = a.order();
  if (n < 1) throw std::invalid_argument("reduce_single_tail: empty matrix");
  if (!(bridge_sq > S(0))) throw std::invalid_argument("reduce_single_tail: bridge weight must be positive");

  const DenseMatrix<S> inner = a.mat().topLeftCorner(n - 1, n - 1);
  const DenseVector<S> attach = a.mat().col(n - 1).head(n - 1);

  ReductionTrace<S> trace;
  std::vector<DenseVector<S>> cols;
  std::vector<S> norms;

  const double float_tol = [&] {
    if constexpr (is_exact_v<S>) {
      return 0.0;
    } else {
      return 1e-10 * detail::max_abs_entry(a.to_double().mat()) * std::sqrt(double(n));
    }
  }();

  if (n == 1 || detail::is_zero_vector(attach)) {
    trace.zero_attachment = true;
  } else {
    DenseVector<S> cur = attach;
    S cur_norm_sq = cur.dot(cur);
    for (;;) {
      cols.push_back(cur);
      norms.push_back(cur_norm_sq);
      const int k = static_cast<int>(cols.size());
      DenseVector<S> w = inner * cur;
      const S y = w.dot(cur) / cur_norm_sq;
      trace.y.push_back(y);
      if (k >= 2) {
        const S zk = w.dot(cols[k - 2]) / norms[k - 2];
        trace.z.push_back(zk);
      }
      DenseVector<S> next = w - y * cur;
      if (k >= 2) next -= trace.z.back() * cols[k - 2];
      if constexpr (!is_exact_v<S>) {
        for (int pass = 0; pass < 2; ++pass)
          for (int j = 0; j < k; ++j) next -= (next.dot(cols[j]) / norms[j]) * cols[j];
      }
      bool done;
      if constexpr (is_exact_v<S>) {
        done = detail::is_zero_vector(next);
      } else {
        done = std::sqrt(to_double(next.dot(next))) < float_tol;
      }
      if (done || k == n - 1) break;
      cur = std::move(next);
      cur_norm_sq = cur.dot(cur);
    }
  }

  const int steps = static_cast<int>(cols.size());
  trace.steps = steps;
  trace.norm_sq = norms;
  trace.columns.resize(n - 1, steps);
  for (int k = 0; k < steps; ++k) trace.columns.col(k) = cols[k];

  CanonicalForm<S> cf;

  // Jacobi component, deepest constructed vector first. Off-diagonal squares
  // between chain levels are exactly the z_k (z_1 := ||attachment||^2).
  std::vector<S> jb, jasq;
  for (int k = steps; k >= 1; --k) {
    jb.push_back(trace.y[k - 1]);
    jasq.push_back(k >= 2 ? trace.z[k - 2] : norms[0]);
  }
  jb.push_back(a(n - 1, n - 1));
  jasq.push_back(bridge_sq);
  for (std::size_t m = 0; m < tail.b.size() || m < tail.a_sq.size(); ++m) {
    jb.push_back(m < tail.b.size() ? tail.b[m] : S(0));
    jasq.push_back(m < tail.a_sq.size() ? tail.a_sq[m] : S(1));
  }
  cf.jacobi = FiniteRankJacobi<S>(std::move(jb), std::move(jasq));

  // Normalized chain restricted to the finite span, plus e_n.
  Eigen::MatrixXd chain(n, steps + 1);
  chain.setZero();
  for (int k = 0; k < steps; ++k) {
    const Eigen::VectorXd col = [&] {
      Eigen::VectorXd v(n - 1);
      for (Eigen::Index i = 0; i < n - 1; ++i) v[i] = to_double(cols[k][i]);
      return v;
    }();
    chain.col(steps - 1 - k).head(n - 1) = col / col.norm();
  }
  chain(n - 1, steps) = 1.0;
  cf.basis = chain;

  // Finite block: compress onto a deterministic completion of the chain
  // within the first n - 1 coordinates.
  const Eigen::Index block_order = (n - 1) - steps;
  Eigen::MatrixXd inner_d(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n - 1; ++i)
    for (Eigen::Index j = 0; j < n - 1; ++j) inner_d(i, j) = to_double(inner(i, j));
  const Eigen::MatrixXd completion =
      detail::complete_basis(chain.topLeftCorner(n - 1, steps), n - 1, block_order);
  Eigen::MatrixXd f = completion.transpose() * inner_d * completion;
  f = ((f + f.transpose()) / 2.0).eval();  // kill rounding asymmetry
  cf.finite_block = SymmetricMatrix<double>::from_matrix(f);
  return {std::move(cf), std::move(trace)};
}

template <class S>
struct VerificationReport {
  double orthogonality = 0.0;  // max |<e~_i, e~_j>| over i != j (exact data)
  double three_term = 0.0;     // max residual of the recursion relations
  bool exact_zero = false;     // exact-mode residuals vanish identically
};

/// Residual check of a canonical form against its inputs: pairwise
/// orthogonality of the unnormalized chain and the three-term relations, both
/// on the exact trace data and on the normalized basis against the Jacobi
/// entries actually stored in `cf` (so corrupted entries are caught).
template <class S>
VerificationReport<S> verify_canonical(const SymmetricMatrix<S>& a, const S& bridge_sq,
                                       const FiniteRankJacobi<S>& tail, const CanonicalForm<S>& cf,
                                       const ReductionTrace<S>& trace) {
  const Eigen::Index n = a.order();
  if (trace.columns.rows() != n - 1 || cf.basis.rows() != n)
    throw std::invalid_argument("verify_canonical: dimension mismatch");

  VerificationReport<S> rep;
  const int steps = trace.steps;
  const DenseMatrix<S> inner = a.mat().topLeftCorner(n - 1, n - 1);

  bool exact_ok = true;

  // The Jacobi component must extend the tail: bridge at position steps + 1,
  // the tail's own entries beyond.
  {
    auto track = [&](const S& got, const S& want) {
      rep.three_term = std::max(rep.three_term, std::fabs(to_double(got - want)));
      if (!(got == want)) exact_ok = false;
    };
    track(cf.jacobi.a_sq_at(steps + 1), bridge_sq);
    track(cf.jacobi.b_at(steps + 1), a(n - 1, n - 1));
    const int horizon = std::max(tail.rank_window(), cf.jacobi.rank_window() - steps - 1) + 1;
    for (int m = 1; m <= horizon; ++m) {
      track(cf.jacobi.b_at(steps + 1 + m), tail.b_at(m));
      track(cf.jacobi.a_sq_at(steps + 1 + m), tail.a_sq_at(m));
    }
  }
  // Orthogonality of the unnormalized columns.
  for (int i = 0; i < steps; ++i)
    for (int j = i + 1; j < steps; ++j) {
      const S dot = trace.columns.col(i).dot(trace.columns.col(j));
      rep.orthogonality = std::max(rep.orthogonality, std::fabs(to_double(dot)));
      if (!(dot == S(0))) exact_ok = false;
    }
  // Three-term relations on the trace: A e~_k = e~_{k+1} + y_k e~_k + z_k e~_{k-1}.
  for (int k = 0; k < steps; ++k) {
    DenseVector<S> r = inner * trace.columns.col(k) - trace.y[k] * trace.columns.col(k);
    if (k + 1 < steps) r -= trace.columns.col(k + 1);
    if (k >= 1) r -= trace.z[k - 1] * trace.columns.col(k - 1);
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      rep.three_term = std::max(rep.three_term, std::fabs(to_double(r[i])));
      if (!(r[i] == S(0))) exact_ok = false;
    }
  }
  rep.exact_zero = is_exact_v<S> && exact_ok;

  // Recompute against the Jacobi entries stored in cf (normalized basis).
  Eigen::MatrixXd ad(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) ad(i, j) = to_double(a(i, j));
  const int chain_len = static_cast<int>(cf.basis.cols());
  for (int pos = 0; pos < chain_len; ++pos) {
    // Jacobi position pos+1; the relation at the attachment column leaves the
    // finite span through the bridge, which is not representable here, so the
    // bridge term is dropped for the last position.
    Eigen::VectorXd r = ad * cf.basis.col(pos) - to_double(cf.jacobi.b_at(pos + 1)) * cf.basis.col(pos);
    if (pos > 0) r -= std::sqrt(to_double(cf.jacobi.a_sq_at(pos))) * cf.basis.col(pos - 1);
    if (pos + 1 < chain_len) r -= std::sqrt(to_double(cf.jacobi.a_sq_at(pos + 1))) * cf.basis.col(pos + 1);
    rep.three_term = std::max(rep.three_term, r.lpNorm<Eigen::Infinity>());
  }
  for (int i = 0; i < chain_len; ++i)
    for (int j = i + 1; j < chain_len; ++j)
      rep.orthogonality =
          std::max(rep.orthogonality, std::fabs(cf.basis.col(i).dot(cf.basis.col(j))));
  return rep;
}

template <class S>
struct SingleTailProblem {
  SymmetricMatrix<S> adjacency;  // attachment vertex permuted to the last row
  S bridge_sq = S(1);
  FiniteRankJacobi<S> tail;
  long long free_copies = 0;
  int vertex = 1;                 // original label of the attachment vertex
  std::vector<int> permutation;   // permutation[i] = original label at position i+1
};

/// Merges all attachments (which must share one vertex) into an equivalent
/// single-tail problem: p parallel unweighted rays with bridges d_i collapse
/// to one ray with bridge^2 = sum_i d_i^2, leaving p - 1 free Jacobi copies.
template <class S>
SingleTailProblem<S> normalize_multiray(const TailedGraph<S>& t) {
  if (t.attachments.empty()) throw std::invalid_argument("normalize_multiray: no attachments");
  const int v = t.attachments.front().vertex;
  for (const auto& att : t.attachments)
    if (att.vertex != v)
      throw OracleOnlyConfiguration(
          "oracle-only configuration: tails attached at several distinct vertices");

  const int total = t.total_rays();
  SingleTailProblem<S> out;
  out.vertex = v;
  out.free_copies = total - 1;
  if (total == 1) {
    const auto& att = t.attachments.front();
    out.bridge_sq = att.bridge * att.bridge;
    std::vector<S> asq;
    int maxidx = 0;
    for (const auto& [j, w] : att.tail_weights) maxidx = std::max(maxidx, j);
    for (int j = 1; j <= maxidx; ++j) {
      auto it = att.tail_weights.find(j);
      const S w = it == att.tail_weights.end() ? S(1) : it->second;
      asq.push_back(w * w);
    }
    out.tail = FiniteRankJacobi<S>(std::vector<S>(asq.size(), S(0)), std::move(asq));
  } else {
    out.bridge_sq = S(0);
    for (const auto& att : t.attachments) {
      if (att.weighted())
        throw std::invalid_argument("normalize_multiray: parallel rays must be unweighted");
      out.bridge_sq += S(att.rays) * att.bridge * att.bridge;
    }
    out.tail = FiniteRankJacobi<S>::free_matrix();
  }

  // Permute the attachment vertex to the last position.
  const int n = t.base.n;
  std::vector<int> perm;
  for (int i = 1; i <= n; ++i)
    if (i != v) perm.push_back(i);
  perm.push_back(v);
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i;
  SymmetricMatrix<S> adj(n);
  for (const auto& [e, w] : t.base.edges) adj.set(pos[e.first], pos[e.second], w);
  out.adjacency = std::move(adj);
  out.permutation = std::move(perm);
  return out;
}

struct SunDecomposition {
  std::vector<FiniteRankJacobi<double>> blocks;  // J(lambda_j, sqrt(p)) per eigenvalue of G
  long long free_copies = 0;
};

/// p rays at every vertex: unitarily equivalent to one J(lambda_j, sqrt(p))
/// block per eigenvalue of the base graph plus (p - 1) n free copies.
template <class S>
SunDecomposition sun_decompose(const WeightedGraph<S>& g, int p) {
  if (p < 1) throw std::invalid_argument("sun_decompose: p must be >= 1");
  SunDecomposition out;
  const auto eigs = eig_symmetric(g.adjacency().to_double());
  for (double lambda : eigs)
    out.blocks.push_back(FiniteRankJacobi<double>({lambda}, {double(p)}));
  out.free_copies = static_cast<long long>(p - 1) * g.n;
  return out;
}

/// Coupling with a Bethe tree of degree d at `vertex`: generation-wise
/// symmetrization turns the tree into a tail with all weights sqrt(d), so the
/// canonical Jacobi component is sqrt(d) times an eventually free matrix; the
/// orthogonal complement contributes unboundedly many sqrt(d)-scaled free
/// copies (none for d = 1, where the tree is the plain path).
template <class S>
CanonicalForm<S> bethe_coupling(const WeightedGraph<S>& g, int degree, int vertex,
                                const S& bridge = S(1)) {
  if (degree < 1) throw std::invalid_argument("bethe_coupling: degree must be >= 1");
  if (vertex < 1 || vertex > g.n) throw std::invalid_argument("bethe_coupling: vertex out of range");

  TailedGraph<S> shim;
  shim.base = g;
  TailAttachment<S> att;
  att.vertex = vertex;
  att.bridge = bridge;
  shim.attachments.push_back(att);
  auto problem = normalize_multiray(shim);

  auto [cf, trace] = reduce_single_tail(problem.adjacency, problem.bridge_sq,
                                        FiniteRankJacobi<S>::free_matrix());
  if (degree == 1) return std::move(cf);

  // Rebuild the Jacobi entries over the full generated window (trace.steps
  // chain vectors plus the attachment/bridge position) and divide the whole
  // component by sqrt(d); beyond that window the actual tree tail has weight
  // sqrt(d) everywhere, i.e. exactly free after scaling.
  const S d(degree);
  const int window = trace.steps + 1;
  FiniteRankJacobi<S> scaled;
  for (int j = 1; j <= window; ++j) {
    const S bval = cf.jacobi.b_at(j);
    if constexpr (is_exact_v<S>) {
      if (!(bval == S(0)))
        throw std::invalid_argument(
            "bethe_coupling: nonzero diagonal with d > 1 requires float mode (b / sqrt(d) leaves "
            "the rational field)");
      scaled.b.push_back(S(0));
    } else {
      scaled.b.push_back(bval / std::sqrt(to_double(d)));
    }
    scaled.a_sq.push_back(cf.jacobi.a_sq_at(j) / d);
  }
  scaled.trim();
  cf.jacobi = std::move(scaled);
  cf.jacobi_scale_sq = d;
  cf.free_copies.unbounded = true;
  cf.free_copies.scale_sq = d;
  return std::move(cf);
}

}  // namespace tailspec
