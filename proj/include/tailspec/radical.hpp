// radical.hpp — exact arithmetic in Q(sqrt(m1), sqrt(m2), ...).
//
// Elements are finite sums c_m * sqrt(m) over squarefree positive integers m
// (m = 1 is the rational part). Addition and multiplication are closed:
// sqrt(m1) * sqrt(m2) = g * sqrt(m1 m2 / g^2) with g = gcd(m1, m2). This is
// all the direct perturbation determinant needs — its cofactor expansion is
// division free, and the theory guarantees a rational end result.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "tailspec/numeric.hpp"

namespace tailspec {

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : QuadExt(Rational(v)) {}          // NOLINT: ring-scalar conversions
  QuadExt(const Rational& v) {                       // NOLINT
    if (v != 0) terms_[1] = v;
  }

  /// sqrt(r) for rational r >= 0, split into (rational factor) * sqrt(squarefree).
  static QuadExt sqrt_of(const Rational& r) {
    if (r < 0) throw std::invalid_argument("QuadExt::sqrt_of: negative radicand");
    if (r == 0) return QuadExt();
    // sqrt(p/q) = sqrt(p*q) / q
    BigInt radicand = numerator(r) * denominator(r);
    BigInt square_part = 1;
    BigInt m = 1;
    // Trial division; radicands in this library are tiny (graph weights).
    for (BigInt d = 2; d * d <= radicand; ++d) {
      int e = 0;
      while (radicand % d == 0) {
        radicand /= d;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) square_part *= d;
      if (e % 2) m *= d;
    }
    m *= radicand;  // leftover prime
    QuadExt out;
    out.terms_[m.convert_to<std::uint64_t>()] = Rational(square_part) / Rational(denominator(r));
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  double to_double() const {
    double acc = 0;
    for (const auto& [m, c] : terms_)
      acc += tailspec::to_double(c) * std::sqrt(static_cast<double>(m));
    return acc;
  }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    QuadExt out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
  QuadExt operator-() const {
    QuadExt out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    QuadExt out;
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_) {
        const std::uint64_t g = gcd_u64(m1, m2);
        out.add_term((m1 / g) * (m2 / g), c1 * c2 * Rational(g));
      }
    return out;
  }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  // Division is only ever needed by a nonzero rational (polynomial division
  // by z - 1/z, whose extreme coefficients are +-1).
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (!b.is_rational() || b.is_zero())
      throw std::logic_error("QuadExt: division restricted to nonzero rationals");
    const Rational d = b.rational_part();
    QuadExt out = a;
    for (auto& [m, c] : out.terms_) c /= d;
    return out;
  }

  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

 private:
  static std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
      const std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void add_term(std::uint64_t m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<std::uint64_t, Rational> terms_;  // squarefree radicand -> coefficient
};

}  // namespace tailspec
