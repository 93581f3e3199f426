// laurent.hpp — finite Laurent polynomials, the carrier for Jost recursions
// and Wronskians. Coefficients live in an arbitrary commutative ring scalar
// (Rational, double, or the quadratic-extension ring used by the direct
// perturbation determinant).
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tailspec/numeric.hpp"

namespace tailspec {

template <class S>
struct LaurentPoly {
  // p(z) = sum_i coeffs[i] * z^(low + i); canonical form keeps the first and
  // last coefficient nonzero, the zero polynomial has empty coeffs.
  int low = 0;
  std::vector<S> coeffs;

  LaurentPoly() = default;
  LaurentPoly(int lowest, std::vector<S> c) : low(lowest), coeffs(std::move(c)) { trim(); }

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(const S& c) { return LaurentPoly(0, {c}); }
  static LaurentPoly zpow(int k, const S& c = S(1)) { return LaurentPoly(k, {c}); }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return low + static_cast<int>(coeffs.size()) - 1; }  // valid when nonzero

  void trim() {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == S(0)) ++lead;
    coeffs.erase(coeffs.begin(), coeffs.begin() + lead);
    low += static_cast<int>(lead);
    while (!coeffs.empty() && coeffs.back() == S(0)) coeffs.pop_back();
    if (coeffs.empty()) low = 0;
  }

  const S coeff(int power) const {
    if (is_zero() || power < low || power > degree()) return S(0);
    return coeffs[power - low];
  }

  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low += k;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.low, b.low);
    const int hi = std::max(a.degree(), b.degree());
    std::vector<S> c(static_cast<std::size_t>(hi - lo + 1), S(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[a.low - lo + i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[b.low - lo + i] += b.coeffs[i];
    return LaurentPoly(lo, std::move(c));
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<S> c(a.coeffs.size() + b.coeffs.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return LaurentPoly(a.low + b.low, std::move(c));
  }

  friend LaurentPoly operator*(const S& s, const LaurentPoly& p) {
    LaurentPoly r = p;
    for (auto& c : r.coeffs) c = s * c;
    r.trim();
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low == b.low && a.coeffs == b.coeffs;
  }

  /// Evaluation; z must be a unit when negative exponents are present.
  template <class T>
  T eval(const T& z) const {
    if (is_zero()) return T(0);
    T acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + T(*it);
    if (low == 0) return acc;
    if (low > 0) {
      T zp(1);
      for (int i = 0; i < low; ++i) zp = zp * z;
      return acc * zp;
    }
    T zp(1);
    for (int i = 0; i < -low; ++i) zp = zp * z;
    return acc / zp;
  }

  /// Ordinary-polynomial coefficient list (ascending from z^0); requires low >= 0.
  std::vector<S> dense() const {
    if (is_zero()) return {};
    if (low < 0) throw std::logic_error("LaurentPoly::dense: negative exponents present");
    std::vector<S> out(static_cast<std::size_t>(low), S(0));
    out.insert(out.end(), coeffs.begin(), coeffs.end());
    return out;
  }
};

/// Exact division; throws when the remainder is nonzero. Scalar must be a field.
template <class S>
LaurentPoly<S> divide_exact(const LaurentPoly<S>& num, const LaurentPoly<S>& den) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (num.is_zero()) return LaurentPoly<S>::zero();
  // Shift both to ordinary polynomials, divide, shift back.
  std::vector<S> r = num.coeffs, d = den.coeffs;
  if (r.size() < d.size()) throw std::domain_error("divide_exact: inexact division");
  std::vector<S> q(r.size() - d.size() + 1, S(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    S f = r[k + d.size() - 1] / d.back();
    q[k] = f;
    if (f != S(0))
      for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= f * d[j];
  }
  for (const S& c : r)
    if (c != S(0)) throw std::domain_error("divide_exact: inexact division");
  return LaurentPoly<S>(num.low - den.low, std::move(q));
}

/// Flushes coefficients below rel * max|c| to zero (float-mode guard before
/// root isolation).
inline LaurentPoly<double> flush_small(LaurentPoly<double> p, double rel = 1e-13) {
  double peak = 0;
  for (double c : p.coeffs) peak = std::max(peak, std::fabs(c));
  for (double& c : p.coeffs)
    if (std::fabs(c) < rel * peak) c = 0.0;
  p.trim();
  return p;
}

}  // namespace tailspec
