// jacobi.hpp — eventually free Jacobi matrices, one- and two-sided.
//
// Off-diagonal entries a_j are strictly positive but frequently irrational
// (sqrt(3), sqrt(2/3), ...) while their squares are rational in every example
// this library cares about. Entries are therefore stored as squares a_j^2;
// the exact pipeline never forms a_j itself.
#pragma once

#include <stdexcept>
#include <vector>

#include "tailspec/numeric.hpp"

namespace tailspec {

template <class S>
struct FiniteRankJacobi {
  // One-sided J({b_j},{a_j}), indices 1-based; beyond the stored window the
  // matrix is free: b = 0, a = 1.
  std::vector<S> b;
  std::vector<S> a_sq;

  FiniteRankJacobi() = default;
  FiniteRankJacobi(std::vector<S> diag, std::vector<S> offdiag_sq)
      : b(std::move(diag)), a_sq(std::move(offdiag_sq)) {
    for (const auto& v : a_sq)
      if (!(v > S(0))) throw std::invalid_argument("FiniteRankJacobi: a_j^2 must be positive");
    trim();
  }

  static FiniteRankJacobi free_matrix() { return {}; }

  S b_at(int j) const {  // 1-based
    if (j < 1) throw std::out_of_range("FiniteRankJacobi::b_at");
    return j <= static_cast<int>(b.size()) ? b[j - 1] : S(0);
  }
  S a_sq_at(int j) const {  // 1-based
    if (j < 1) throw std::out_of_range("FiniteRankJacobi::a_sq_at");
    return j <= static_cast<int>(a_sq.size()) ? a_sq[j - 1] : S(1);
  }

  /// Rank window q: entries with index > q are exactly free.
  int rank_window() const {
    int q = 0;
    for (int j = static_cast<int>(b.size()); j >= 1; --j)
      if (!(b[j - 1] == S(0))) {
        q = j;
        break;
      }
    for (int j = static_cast<int>(a_sq.size()); j >= 1; --j)
      if (!(a_sq[j - 1] == S(1))) {
        q = std::max(q, j);
        break;
      }
    return q;
  }

  bool is_free() const { return rank_window() == 0; }

  void trim() {
    const int q = rank_window();
    if (static_cast<int>(b.size()) > q) b.resize(q);
    if (static_cast<int>(a_sq.size()) > q) a_sq.resize(q);
  }

  FiniteRankJacobi<double> to_double() const {
    FiniteRankJacobi<double> out;
    for (const auto& v : b) out.b.push_back(tailspec::to_double(v));
    for (const auto& v : a_sq) out.a_sq.push_back(tailspec::to_double(v));
    return out;
  }
};

template <class S>
struct TwoSidedJacobi {
  // Window [n_minus, n_plus], n_minus < n_plus. b_n stored on the window,
  // a_n on [n_minus, n_plus - 1]; free outside.
  int n_minus = 0;
  int n_plus = 1;
  std::vector<S> b;     // b[n - n_minus]
  std::vector<S> a_sq;  // a_sq[n - n_minus], n in [n_minus, n_plus - 1]

  TwoSidedJacobi() : b(2, S(0)), a_sq(1, S(1)) {}
  TwoSidedJacobi(int lo, int hi) : n_minus(lo), n_plus(hi) {
    if (!(lo < hi)) throw std::invalid_argument("TwoSidedJacobi: window must satisfy N- < N+");
    b.assign(hi - lo + 1, S(0));
    a_sq.assign(hi - lo, S(1));
  }

  S b_at(int n) const { return (n < n_minus || n > n_plus) ? S(0) : b[n - n_minus]; }
  S a_sq_at(int n) const { return (n < n_minus || n > n_plus - 1) ? S(1) : a_sq[n - n_minus]; }

  void set_b(int n, const S& v) {
    if (n < n_minus || n > n_plus) throw std::out_of_range("TwoSidedJacobi::set_b");
    b[n - n_minus] = v;
  }
  void set_a_sq(int n, const S& v) {
    if (n < n_minus || n > n_plus - 1) throw std::out_of_range("TwoSidedJacobi::set_a_sq");
    if (!(v > S(0))) throw std::invalid_argument("TwoSidedJacobi: a_n^2 must be positive");
    a_sq[n - n_minus] = v;
  }

  TwoSidedJacobi<double> to_double() const {
    TwoSidedJacobi<double> out(n_minus, n_plus);
    for (std::size_t i = 0; i < b.size(); ++i) out.b[i] = tailspec::to_double(b[i]);
    for (std::size_t i = 0; i < a_sq.size(); ++i) out.a_sq[i] = tailspec::to_double(a_sq[i]);
    return out;
  }
};

/// Coupling of two infinite stars with p and q rays, bridge weight d:
/// a_1 = sqrt(p), a_{-1} = sqrt(q), a_0 = d, zero diagonal.
template <class S>
TwoSidedJacobi<S> double_star_jacobi(int p, int q, const S& d) {
  if (p < 2 || q < 2) throw std::invalid_argument("double_star_jacobi: p, q must be >= 2");
  if (!(d > S(0))) throw std::invalid_argument("double_star_jacobi: bridge weight must be positive");
  TwoSidedJacobi<S> j(-1, 2);
  j.set_a_sq(-1, S(q));
  j.set_a_sq(0, d * d);
  j.set_a_sq(1, S(p));
  return j;
}

}  // namespace tailspec
