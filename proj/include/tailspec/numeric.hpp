// numeric.hpp — scalar field tags and exact-rational helpers.
//
// The library runs every algorithm over one of two coefficient fields:
//   * Rational — GMP-backed exact rationals; termination tests and root
//     counting are decided exactly.
//   * double   — IEEE floating point with tolerance-based decisions.
// Off-diagonal Jacobi entries are carried as squares (a_j^2), so values like
// sqrt(3) never leave the rational field in exact mode.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace tailspec {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

template <class S>
inline constexpr bool is_exact_v = !std::is_floating_point_v<S>;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Rational abs_val(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline double abs_val(double x) { return std::fabs(x); }

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [1/2, 1)
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

/// Parses "p/q", integer, or plain decimal strings ("-1.25") exactly.
Rational parse_rational(const std::string& text);

/// Canonical form: "p/q" with reduced terms, "p" when the denominator is 1.
std::string format_rational(const Rational& x);

/// True when a rational is the square of a rational; root returned via out.
bool rational_sqrt(const Rational& x, Rational& root);

template <class S>
S scalar_from_rational(const Rational& x) {
  if constexpr (std::is_same_v<S, double>)
    return to_double(x);
  else
    return S(x);
}

template <class S>
S scalar_from_int(long long v) {
  return S(v);
}

}  // namespace tailspec
