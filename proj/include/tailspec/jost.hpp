// jost.hpp — Jost solutions, Jost polynomials, perturbation determinants,
// and two-sided Wronskians for eventually free Jacobi matrices.
//
// The three-term recurrence a_{n-1} u_{n-1} + b_n u_n + a_n u_{n+1} =
// (z + 1/z) u_n (a_0 = 1) is run in rescaled form: with
//   u~_k := (prod_{j=k+1..q} a_j) * a_k * u_k   for k <= q,  u~_k = z^k beyond,
// the recursion becomes u~_{n-1} = (z + 1/z - b_n) u~_n - a_n^2 u~_{n+1} and
// only ever touches b_n and a_n^2, so rational data stays rational. The value
// u~_0 equals the perturbation determinant; dividing by prod a_j recovers the
// Jost function itself. The rescale factor is positive, so root sets in
// (-1, 1) are unchanged.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tailspec/jacobi.hpp"
#include "tailspec/laurent.hpp"
#include "tailspec/numeric.hpp"
#include "tailspec/radical.hpp"

namespace tailspec {

template <class S>
struct JostSolution {
  LaurentPoly<S> poly;  // rescaled solution u~_k
  S rescale_sq;         // square of the positive rescale constant
};

/// Rescaled Jost solution u~_k. The rescale constant is
/// prod_{j=k+1..q} a_j * a_k (with a_0 = 1), reported as its square.
template <class S>
JostSolution<S> jost_solution(const FiniteRankJacobi<S>& j, int k) {
  if (k < 0) throw std::invalid_argument("jost_solution: index must be >= 0");
  const int q = j.rank_window();
  if (k > q) return {LaurentPoly<S>::zpow(k), S(1)};

  LaurentPoly<S> above = LaurentPoly<S>::zpow(q + 2);  // u~_{n+1}
  LaurentPoly<S> cur = LaurentPoly<S>::zpow(q + 1);    // u~_n
  for (int n = q + 1; n > k; --n) {
    LaurentPoly<S> next = cur.shifted(1) + cur.shifted(-1) - LaurentPoly<S>::constant(j.b_at(n)) * cur -
                          j.a_sq_at(n) * above;
    above = std::move(cur);
    cur = std::move(next);
  }
  // (prod_{j=k+1..q} a_j * a_k)^2 = prod_{j=max(k,1)..q} a_j^2 (a_0 = 1).
  S rescale_sq(1);
  for (int i = std::max(k, 1); i <= q; ++i) rescale_sq *= j.a_sq_at(i);
  return {std::move(cur), std::move(rescale_sq)};
}

template <class S>
struct JostPolynomial {
  LaurentPoly<S> u;  // u~_0, an ordinary polynomial; equals the perturbation determinant
  S rescale_sq;      // (prod_{j=1..q} a_j)^2, all rational data
  int window;        // rank window q of the input
};

/// Jost polynomial u~_0 = L^(z). Degree <= 2q, u~_0(0) = 1.
template <class S>
JostPolynomial<S> jost_polynomial(const FiniteRankJacobi<S>& j) {
  auto sol = jost_solution(j, 0);
  if constexpr (!is_exact_v<S>) sol.poly = flush_small(sol.poly);
  if (sol.poly.is_zero() || sol.poly.low != 0)
    throw std::logic_error("jost_polynomial: negative exponents or vanishing constant term");
  const int q = j.rank_window();
  if (sol.poly.degree() > 2 * q) throw std::logic_error("jost_polynomial: degree bound 2q violated");
  return {std::move(sol.poly), std::move(sol.rescale_sq), q};
}

namespace detail {

// Free resolvent entry r_uv(z) = (z^|u-v| - z^(u+v)) / (z - 1/z), a genuine
// polynomial after the division (asserted by divide_exact).
template <class K>
LaurentPoly<K> resolvent_entry(int u, int v) {
  LaurentPoly<K> num = LaurentPoly<K>::zpow(std::abs(u - v)) - LaurentPoly<K>::zpow(u + v);
  LaurentPoly<K> den(-1, {K(-1), K(0), K(1)});  // z - z^{-1}
  return divide_exact(num, den);
}

struct PerturbationRow {
  int u;  // psi = coeff * e_u
  int v;  // phi = e_v
};

template <class S>
std::vector<PerturbationRow> perturbation_rows(const FiniteRankJacobi<S>& j) {
  std::vector<PerturbationRow> rows;
  const int q = j.rank_window();
  for (int idx = 1; idx <= q; ++idx) {
    if (!(j.b_at(idx) == S(0))) rows.push_back({idx, idx});
    if (!(j.a_sq_at(idx) == S(1))) {
      rows.push_back({idx + 1, idx});
      rows.push_back({idx, idx + 1});
    }
  }
  return rows;
}

// det of the p x p matrix M(i, k) = delta_ik + coeff_i * r(u_i, v_k) by
// minor expansion with memoization on column subsets. Division free, so K may
// be the quadratic-extension ring.
template <class K>
LaurentPoly<K> determinant_symbolic(const std::vector<PerturbationRow>& rows,
                                    const std::vector<K>& coeff) {
  const int p = static_cast<int>(rows.size());
  std::vector<LaurentPoly<K>> entry(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) {
      LaurentPoly<K> e = coeff[i] * resolvent_entry<K>(rows[i].u, rows[k].v);
      if (i == k) e = e + LaurentPoly<K>::constant(K(1));
      entry[i * p + k] = std::move(e);
    }
  std::vector<LaurentPoly<K>> dp(std::size_t(1) << p);
  dp[0] = LaurentPoly<K>::constant(K(1));
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    const int row = __builtin_popcount(mask) - 1;
    LaurentPoly<K> acc;
    int pos = 0;
    for (int c = 0; c < p; ++c) {
      if (!(mask >> c & 1)) continue;
      const LaurentPoly<K> term = entry[row * p + c] * dp[mask ^ (1u << c)];
      acc = (((row + pos) % 2) == 0) ? acc + term : acc - term;
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

// Exact determinant by evaluation at integer points and Newton interpolation;
// used when the perturbation rank is too large for symbolic expansion.
// Requires rational coefficients.
inline LaurentPoly<Rational> determinant_interpolated(const std::vector<PerturbationRow>& rows,
                                                      const std::vector<Rational>& coeff) {
  const int p = static_cast<int>(rows.size());
  long long bound = 0;  // sum over rows of the max entry degree
  for (int i = 0; i < p; ++i) {
    int dmax = 0;
    for (int k = 0; k < p; ++k) dmax = std::max(dmax, rows[i].u + rows[k].v - 1);
    bound += dmax;
  }
  const int npts = static_cast<int>(bound) + 1;

  std::vector<Rational> xs(npts), ys(npts);
  for (int t = 0; t < npts; ++t) {
    const Rational z(t + 2);
    const Rational zinv = Rational(1) / z;
    auto rpow = [&](int e) {
      Rational acc(1);
      for (int i = 0; i < e; ++i) acc *= z;
      return acc;
    };
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(p, p);
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < p; ++k) {
        Rational r = (rpow(std::abs(rows[i].u - rows[k].v)) - rpow(rows[i].u + rows[k].v)) / (z - zinv);
        m(i, k) = coeff[i] * r + (i == k ? Rational(1) : Rational(0));
      }
    // Gaussian elimination over Q.
    Rational det(1);
    for (int c = 0; c < p; ++c) {
      int piv = -1;
      for (int r = c; r < p; ++r)
        if (m(r, c) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != c) {
        m.row(piv).swap(m.row(c));
        det = -det;
      }
      det *= m(c, c);
      for (int r = c + 1; r < p; ++r) {
        if (m(r, c) == 0) continue;
        const Rational f = m(r, c) / m(c, c);
        for (int k = c; k < p; ++k) m(r, k) -= f * m(c, k);
      }
    }
    xs[t] = z;
    ys[t] = det;
  }

  // Newton divided differences, expanded to monomial coefficients.
  std::vector<Rational> dd = ys;
  for (int k = 1; k < npts; ++k)
    for (int i = npts - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  std::vector<Rational> out(1, dd[npts - 1]);
  for (int k = npts - 2; k >= 0; --k) {
    out.insert(out.begin(), Rational(0));
    for (std::size_t i = 0; i < out.size() - 1; ++i) out[i] -= xs[k] * out[i + 1];
    out[0] += dd[k];
  }
  return LaurentPoly<Rational>(0, std::move(out));
}

constexpr int kSymbolicRankCap = 10;

inline LaurentPoly<Rational> determinant_direct_exact(const FiniteRankJacobi<Rational>& j) {
  const auto rows = perturbation_rows(j);
  if (rows.empty()) return LaurentPoly<Rational>::constant(Rational(1));
  if (static_cast<int>(rows.size()) <= kSymbolicRankCap) {
    std::vector<QuadExt> coeff;
    for (const auto& row : rows) {
      if (row.u == row.v) {
        coeff.emplace_back(j.b_at(row.u));
      } else {
        const int idx = std::min(row.u, row.v);
        coeff.push_back(QuadExt::sqrt_of(j.a_sq_at(idx)) - QuadExt(Rational(1)));
      }
    }
    LaurentPoly<QuadExt> det = determinant_symbolic(rows, coeff);
    std::vector<Rational> c;
    c.reserve(det.coeffs.size());
    for (const auto& term : det.coeffs) {
      if (!term.is_rational())
        throw std::logic_error("perturbation determinant: irrational residue survived");
      c.push_back(term.rational_part());
    }
    return LaurentPoly<Rational>(det.low, std::move(c));
  }
  std::vector<Rational> coeff;
  for (const auto& row : rows) {
    if (row.u == row.v) {
      coeff.push_back(j.b_at(row.u));
    } else {
      Rational a;
      if (!rational_sqrt(j.a_sq_at(std::min(row.u, row.v)), a))
        throw std::invalid_argument(
            "perturbation_determinant_direct: window too large for irrational off-diagonals");
      coeff.push_back(a - 1);
    }
  }
  return determinant_interpolated(rows, coeff);
}

}  // namespace detail

/// Independent route to the perturbation determinant: the p x p determinant
/// det(delta_ij + <R(z + 1/z, J0) psi_i, phi_j>) over the rank-one pieces of
/// J - J0, expanded symbolically in z. Intended as a cross-check for
/// jost_polynomial; cost grows combinatorially, hence the window cap.
template <class S>
LaurentPoly<S> perturbation_determinant_direct(const FiniteRankJacobi<S>& j) {
  if (j.rank_window() > 6)
    throw std::invalid_argument("perturbation_determinant_direct: window too large (q > 6)");
  if constexpr (is_exact_v<S>) {
    return detail::determinant_direct_exact(j);
  } else {
    const auto rows = detail::perturbation_rows(j);
    if (rows.empty()) return LaurentPoly<double>::constant(1.0);
    if (static_cast<int>(rows.size()) <= detail::kSymbolicRankCap) {
      std::vector<double> coeff;
      for (const auto& row : rows) {
        if (row.u == row.v)
          coeff.push_back(j.b_at(row.u));
        else
          coeff.push_back(std::sqrt(j.a_sq_at(std::min(row.u, row.v))) - 1.0);
      }
      // Exact cancellation above degree 2q survives only approximately here.
      return flush_small(detail::determinant_symbolic(rows, coeff));
    }
    // Wide windows go through the exact path on exactly rationalized data.
    FiniteRankJacobi<Rational> jr;
    for (double v : j.b) jr.b.push_back(rational_from_double(v));
    for (double v : j.a_sq) jr.a_sq.push_back(rational_from_double(v));
    const auto exact = detail::determinant_direct_exact(jr);
    std::vector<double> c;
    c.reserve(exact.coeffs.size());
    for (const auto& v : exact.coeffs) c.push_back(to_double(v));
    return LaurentPoly<double>(exact.low, std::move(c));
  }
}

/// Wronskian of the two Jost solutions of a finite-rank two-sided Jacobi
/// matrix, rescaled by prod a_j over the window (positive, zero set in the
/// unit disk unchanged). Evaluated at n = N- - 1 and n = N+; the two must
/// agree, which is asserted.
template <class S>
LaurentPoly<S> wronskian(const TwoSidedJacobi<S>& j) {
  const int lo = j.n_minus, hi = j.n_plus;
  // Backward sweep for u~+: seeds z^n at n = hi, hi + 1.
  std::vector<LaurentPoly<S>> up(static_cast<std::size_t>(hi - lo + 3));
  auto up_at = [&](int n) -> LaurentPoly<S>& { return up[n - (lo - 1)]; };
  up_at(hi + 1) = LaurentPoly<S>::zpow(hi + 1);
  up_at(hi) = LaurentPoly<S>::zpow(hi);
  for (int n = hi; n > lo - 1; --n)
    up_at(n - 1) = up_at(n).shifted(1) + up_at(n).shifted(-1) -
                   LaurentPoly<S>::constant(j.b_at(n)) * up_at(n) - j.a_sq_at(n) * up_at(n + 1);
  // Forward sweep for u~-: seeds z^{-n} at n = lo - 1, lo.
  std::vector<LaurentPoly<S>> um(static_cast<std::size_t>(hi - lo + 3));
  auto um_at = [&](int n) -> LaurentPoly<S>& { return um[n - (lo - 1)]; };
  um_at(lo - 1) = LaurentPoly<S>::zpow(1 - lo);
  um_at(lo) = LaurentPoly<S>::zpow(-lo);
  for (int n = lo; n < hi + 1; ++n)
    um_at(n + 1) = um_at(n).shifted(1) + um_at(n).shifted(-1) -
                   LaurentPoly<S>::constant(j.b_at(n)) * um_at(n) - j.a_sq_at(n - 1) * um_at(n - 1);

  auto w_at = [&](int n) {
    return up_at(n) * um_at(n + 1) - j.a_sq_at(n) * (up_at(n + 1) * um_at(n));
  };
  LaurentPoly<S> w_left = w_at(lo - 1);
  LaurentPoly<S> w_right = w_at(hi);
  if constexpr (is_exact_v<S>) {
    if (!(w_left == w_right)) throw std::logic_error("wronskian: n-dependence detected");
  } else {
    LaurentPoly<S> diff = flush_small(w_left - w_right, 1e-10);
    double peak = 0;
    for (double c : w_left.coeffs) peak = std::max(peak, std::fabs(c));
    for (double c : diff.coeffs)
      if (std::fabs(c) > 1e-9 * std::max(1.0, peak))
        throw std::logic_error("wronskian: n-dependence detected");
  }
  return w_left;
}

}  // namespace tailspec
