// roots.hpp — exact real-root isolation in (-1, 1) and the Zhukovsky map.
//
// Root counting is done with Sturm sequences over exact rationals — float
// inputs are rationalized exactly first — so statements like "exactly two
// roots" are certified, not estimated. Isolated roots are then refined by
// rational bisection and polished with a bracketed Newton step in doubles.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tailspec/laurent.hpp"
#include "tailspec/numeric.hpp"

namespace tailspec {

using RatPoly = std::vector<Rational>;  // ascending coefficients, trimmed

namespace polyq {

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline double eval(const std::vector<double>& p, double x) {
  double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(i) * p[i]);
  return d;
}

// Remainder of a by b; b nonzero.
inline RatPoly rem(RatPoly a, const RatPoly& b) {
  while (degree(a) >= degree(b)) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Positive normalization: divide by |leading coefficient| (keeps all signs).
inline void normalize(RatPoly& p) {
  if (p.empty()) return;
  const Rational s = abs_val(p.back());
  for (auto& c : p) c /= s;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
    normalize(b);
  }
  normalize(a);
  return a;
}

// Exact quotient a / b (remainder must vanish).
inline RatPoly quot(RatPoly a, const RatPoly& b) {
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (degree(a) >= degree(b)) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("polyq::quot: inexact division");
  return q;
}

inline RatPoly squarefree_part(const RatPoly& p) {
  const RatPoly g = gcd(p, derivative(p));
  if (degree(g) < 1) return p;
  return quot(p, g);
}

}  // namespace polyq

/// Number of sign changes in the coefficient sequence (zeros skipped).
/// Descartes: nu - (#positive roots) is a nonnegative even number.
template <class S>
int descartes_bound(const std::vector<S>& coeffs) {
  int changes = 0, last = 0;
  bool any = false;
  for (const auto& c : coeffs) {
    const int s = sign_of(c);
    if (s == 0) continue;
    any = true;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  if (!any) throw std::invalid_argument("descartes_bound: zero polynomial");
  return changes;
}

namespace detail {

struct SturmChain {
  std::vector<RatPoly> seq;

  explicit SturmChain(const RatPoly& p) {
    seq.push_back(p);
    RatPoly d = polyq::derivative(p);
    polyq::trim(d);
    if (!d.empty()) seq.push_back(std::move(d));
    while (seq.back().size() > 1) {
      RatPoly r = polyq::rem(seq[seq.size() - 2], seq.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      polyq::normalize(r);
      seq.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
      const int s = sign_of(polyq::eval(p, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }
};

// Isolating intervals (a, b) with exactly one root each; p squarefree,
// p(a) != 0, p(b) != 0. Split points are nudged off roots, so every produced
// bracket has a strict sign change.
inline void isolate(const RatPoly& p, const Rational& a, const Rational& b,
                    std::vector<std::pair<Rational, Rational>>& intervals) {
  const SturmChain chain(p);
  struct Span {
    Rational a, b;
    int va, vb;
  };
  std::vector<Span> stack{{a, b, chain.variations(a), chain.variations(b)}};
  while (!stack.empty()) {
    Span s = stack.back();
    stack.pop_back();
    const int count = s.va - s.vb;
    if (count <= 0) continue;
    if (count == 1) {
      intervals.emplace_back(s.a, s.b);
      continue;
    }
    // (a + k b)/(k + 1) for k = 1, 2, ...: more candidates than p has roots.
    Rational mid;
    for (int k = 1;; ++k) {
      mid = (s.a + Rational(k) * s.b) / Rational(k + 1);
      if (polyq::eval(p, mid) != 0) break;
      if (k > polyq::degree(p) + 1) throw std::logic_error("isolate: no root-free split point");
    }
    const int vm = chain.variations(mid);
    stack.push_back({s.a, mid, s.va, vm});
    stack.push_back({mid, s.b, vm, s.vb});
  }
}

// Refine a sign-changing bracket to a double root value: rational bisection
// down to ~2^-40, then bracket-safeguarded Newton in doubles.
inline double refine_root(const RatPoly& p, Rational lo, Rational hi) {
  int sign_lo = sign_of(polyq::eval(p, lo));
  for (int it = 0; it < 40 && hi - lo > Rational(1, BigInt(1) << 40); ++it) {
    const Rational mid = (lo + hi) / 2;
    const int sm = sign_of(polyq::eval(p, mid));
    if (sm == 0) return to_double(mid);
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  std::vector<double> pd, dd;
  for (const auto& c : p) pd.push_back(to_double(c));
  for (std::size_t i = 1; i < p.size(); ++i) dd.push_back(to_double(Rational(i) * p[i]));
  double a = to_double(lo), b = to_double(hi);
  double x = 0.5 * (a + b);
  for (int it = 0; it < 60; ++it) {
    const double f = polyq::eval(pd, x);
    const double fp = polyq::eval(dd, x);
    double next = (fp != 0.0) ? x - f / fp : 0.5 * (a + b);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::fabs(next - x) <= 1e-16 * std::max(1.0, std::fabs(x))) return next;
    const double fn = polyq::eval(pd, next);
    if ((fn < 0) == (polyq::eval(pd, a) < 0))
      a = next;
    else
      b = next;
    x = next;
  }
  return x;
}

}  // namespace detail

/// All real roots of a nonzero polynomial in the open interval (-1, 1),
/// sorted ascending, each certified simple. Float coefficients are
/// rationalized exactly before counting. Roots exactly at +-1 are excluded.
/// A non-simple root inside (-1, 1) is a hard error: for Jost input it
/// violates the simplicity guarantee and signals an upstream bug.
inline std::vector<double> real_roots_unit_interval(const RatPoly& poly) {
  RatPoly p = poly;
  polyq::trim(p);
  if (p.empty()) throw std::invalid_argument("real_roots_unit_interval: zero polynomial");
  if (polyq::degree(p) == 0) return {};

  const RatPoly g = polyq::gcd(p, polyq::derivative(p));
  if (polyq::degree(g) >= 1) {
    // Repeated roots exist somewhere; they are fatal only inside (-1, 1).
    RatPoly probe = polyq::squarefree_part(g);
    for (const Rational& e : {Rational(1), Rational(-1)})
      while (polyq::degree(probe) >= 1 && polyq::eval(probe, e) == 0)
        probe = polyq::quot(probe, RatPoly{-e, Rational(1)});
    if (polyq::degree(probe) >= 1) {
      std::vector<std::pair<Rational, Rational>> hits;
      detail::isolate(probe, Rational(-1), Rational(1), hits);
      if (!hits.empty())
        throw std::domain_error("real_roots_unit_interval: non-simple root inside (-1, 1)");
    }
    p = polyq::quot(p, g);
  }

  for (const Rational& e : {Rational(1), Rational(-1)})
    while (polyq::degree(p) >= 1 && polyq::eval(p, e) == 0)
      p = polyq::quot(p, RatPoly{-e, Rational(1)});
  if (polyq::degree(p) < 1) return {};

  std::vector<std::pair<Rational, Rational>> intervals;
  detail::isolate(p, Rational(-1), Rational(1), intervals);

  std::vector<double> roots;
  for (const auto& [lo, hi] : intervals) roots.push_back(detail::refine_root(p, lo, hi));
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline RatPoly rationalize(const std::vector<double>& coeffs) {
  RatPoly p;
  p.reserve(coeffs.size());
  for (double c : coeffs) p.push_back(rational_from_double(c));
  polyq::trim(p);
  return p;
}

inline std::vector<double> real_roots_unit_interval(const std::vector<double>& coeffs) {
  return real_roots_unit_interval(rationalize(coeffs));
}

template <class S>
std::vector<double> real_roots_unit_interval(const LaurentPoly<S>& p) {
  if constexpr (is_exact_v<S>) {
    RatPoly d;
    for (const auto& c : p.dense()) d.push_back(Rational(c));
    return real_roots_unit_interval(d);
  } else {
    return real_roots_unit_interval(flush_small(p).dense());
  }
}

/// Zhukovsky map lambda = z + 1/z; maps (-1,0) and (0,1) onto (-inf,-2) and
/// (2,inf), strictly decreasing on (0, 1).
template <class S>
S zhukovsky(const S& z) {
  if (z == S(0)) throw std::domain_error("zhukovsky: z = 0");
  return z + S(1) / z;
}

}  // namespace tailspec
