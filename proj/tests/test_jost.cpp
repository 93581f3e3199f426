#include <doctest.h>

#include "tailspec/jost.hpp"
#include "tailspec/roots.hpp"
#include "test_helpers.hpp"

using namespace tailspec;

namespace {

using LP = LaurentPoly<Rational>;

LP zpow(int k) { return LP::zpow(k); }
LP con(Rational c) { return LP::constant(c); }

// (z^{2k} - 1) / (z^2 - 1) = 1 + z^2 + ... + z^{2(k-1)}
LP geom_even(int k) {
  LP acc;
  for (int l = 0; l < k; ++l) acc = acc + zpow(2 * l);
  return acc;
}

FiniteRankJacobi<Rational> diag_only(int q, Rational bq) {
  std::vector<Rational> b(q, Rational(0)), a(q, Rational(1));
  b[q - 1] = bq;
  return {b, a};
}

FiniteRankJacobi<Rational> offdiag_only(int q, Rational aq_sq) {
  std::vector<Rational> b(q, Rational(0)), a(q, Rational(1));
  a[q - 1] = aq_sq;
  return {b, a};
}

}  // namespace

TEST_CASE("jost solution of the free matrix is z^k") {
  const auto j = FiniteRankJacobi<Rational>::free_matrix();
  for (int k : {0, 1, 3}) {
    const auto sol = jost_solution(j, k);
    CHECK(sol.poly == zpow(k));
    CHECK(sol.rescale_sq == Rational(1));
  }
  CHECK(jost_polynomial(j).u == con(1));
}

TEST_CASE("jost solution with a single off-diagonal weight") {
  // Only a_q != 1, zero diagonal. The displayed small cases are
  //   a_q u_{q-1} = alpha z^{q+1} + z^{q-1},
  //   a_q u_{q-2} = alpha (z^{q+2} + z^q) + z^{q-2},   alpha = 1 - a_q^2,
  // and by induction a_q u_{q-k} = alpha z^{q-k+2} (z^{2k}-1)/(z^2-1) + z^{q-k}.
  // (The induction's closed form is stated in the source without the z^{q-k}
  // term, which contradicts its own k = 1, 2 displays; the recursion is
  // authoritative and the displays confirm the corrected form.)
  const int q = 5;
  const Rational aq_sq(7, 2);
  const Rational alpha = Rational(1) - aq_sq;
  const auto j = offdiag_only(q, aq_sq);
  for (int k = 1; k <= q - 1; ++k) {
    const auto sol = jost_solution(j, q - k);
    const LP expect = con(alpha) * zpow(q - k + 2) * geom_even(k) + zpow(q - k);
    CHECK(sol.poly == expect);
    CHECK(sol.rescale_sq == aq_sq);  // prod_{j=q-k..q} a_j^2 with only a_q != 1
  }
  // Rescale constant at k = 0 is prod a_j = a_q.
  CHECK(jost_solution(j, 0).rescale_sq == aq_sq);
}

TEST_CASE("rank-one diagonal perturbation: L = 1 - b_q z (z^{2q}-1)/(z^2-1)") {
  for (int q : {1, 2, 3, 4}) {
    for (const Rational bq : {Rational(2), Rational(-3, 2)}) {
      const auto u = jost_polynomial(diag_only(q, bq));
      const LP expect = con(1) - con(bq) * zpow(1) * geom_even(q);
      CHECK(u.u == expect);
      CHECK(u.u == perturbation_determinant_direct(diag_only(q, bq)));
    }
  }
}

TEST_CASE("rank-two off-diagonal perturbation: L = 1 + (1 - a_q^2) z^2 (z^{2q}-1)/(z^2-1)") {
  for (int q : {1, 2, 3}) {
    for (const Rational asq : {Rational(2), Rational(9, 4), Rational(1, 3)}) {
      const auto j = offdiag_only(q, asq);
      const auto u = jost_polynomial(j);
      const LP expect = con(1) + con(Rational(1) - asq) * zpow(2) * geom_even(q);
      CHECK(u.u == expect);
      CHECK(u.u == perturbation_determinant_direct(j));
    }
  }
}

TEST_CASE("window-1 and window-2 closed forms") {
  // q = 1: a_1 u = (1 - a_1^2) z^2 - b_1 z + 1.
  const Rational b1(3, 2), a1_sq(2);
  const auto j1 = FiniteRankJacobi<Rational>({b1}, {a1_sq});
  CHECK(jost_polynomial(j1).u == con(Rational(1) - a1_sq) * zpow(2) - con(b1) * zpow(1) + con(1));

  // q = 2: a_1 a_2 u = al2 z^4 - (b2 + b1 al2) z^3 + (al1 + al2 + b1 b2) z^2 - (b1+b2) z + 1.
  const Rational b2(-1), a2_sq(3);
  const Rational al1 = Rational(1) - a1_sq, al2 = Rational(1) - a2_sq;
  const auto j2 = FiniteRankJacobi<Rational>({b1, b2}, {a1_sq, a2_sq});
  const LP expect = con(al2) * zpow(4) - con(b2 + b1 * al2) * zpow(3) +
                    con(al1 + al2 + b1 * b2) * zpow(2) - con(b1 + b2) * zpow(1) + con(1);
  CHECK(jost_polynomial(j2).u == expect);
  CHECK(jost_polynomial(j2).u == perturbation_determinant_direct(j2));
}

TEST_CASE("mixed closed forms for b_1/a_q, b_q/a_1 and a_1/a_q patterns") {
  for (int q : {2, 3, 4}) {
    // b_1 != 0, a_q != 1:  u~ (z^2-1) = alq (z - b1) z^{2q+1} - b1 aq^2 z^3 + aq^2 z^2 + b1 z - 1.
    {
      const Rational b1(1, 2), aq_sq(3);
      const Rational alq = Rational(1) - aq_sq;
      std::vector<Rational> b(q, Rational(0)), a(q, Rational(1));
      b[0] = b1;
      a[q - 1] = aq_sq;
      const auto u = jost_polynomial(FiniteRankJacobi<Rational>(b, a)).u;
      const LP denom(0, {Rational(-1), Rational(0), Rational(1)});
      const LP rhs = con(alq) * (zpow(1) - con(b1)) * zpow(2 * q + 1) -
                     con(b1 * aq_sq) * zpow(3) + con(aq_sq) * zpow(2) + con(b1) * zpow(1) - con(1);
      CHECK(u * denom == rhs);
      CHECK(u == perturbation_determinant_direct(FiniteRankJacobi<Rational>(b, a)));
    }
    // b_q != 0, a_1 != 1:  u~ = -bq (z^{2q+1} + al1 z^{2q-1} - al1 z^3 - z)/(z^2-1) + al1 z^2 + 1.
    {
      const Rational bq(-2), a1_sq(2);
      const Rational al1 = Rational(1) - a1_sq;
      std::vector<Rational> b(q, Rational(0)), a(q, Rational(1));
      b[q - 1] = bq;
      a[0] = a1_sq;
      const auto u = jost_polynomial(FiniteRankJacobi<Rational>(b, a)).u;
      const LP num = zpow(2 * q + 1) + con(al1) * zpow(2 * q - 1) - con(al1) * zpow(3) - zpow(1);
      const LP denom(0, {Rational(-1), Rational(0), Rational(1)});
      const LP expect = con(-bq) * divide_exact(num, denom) + con(al1) * zpow(2) + con(1);
      CHECK(u == expect);
    }
    // a_1, a_q != 1:  u~ = alq (z^{2q+2} + al1 z^{2q} - al1 z^4 - z^2)/(z^2-1) + al1 z^2 + 1.
    {
      const Rational a1_sq(2), aq_sq(1, 2);
      const Rational al1 = Rational(1) - a1_sq, alq = Rational(1) - aq_sq;
      std::vector<Rational> b(q, Rational(0)), a(q, Rational(1));
      a[0] = a1_sq;
      a[q - 1] = aq_sq;
      const auto u = jost_polynomial(FiniteRankJacobi<Rational>(b, a)).u;
      const LP num = zpow(2 * q + 2) + con(al1) * zpow(2 * q) - con(al1) * zpow(4) - zpow(2);
      const LP denom(0, {Rational(-1), Rational(0), Rational(1)});
      const LP expect = con(alq) * divide_exact(num, denom) + con(al1) * zpow(2) + con(1);
      CHECK(u == expect);
      CHECK(u == perturbation_determinant_direct(FiniteRankJacobi<Rational>(b, a)));
    }
  }
}

TEST_CASE("example-graph Jost polynomials") {
  // Star tail J({0},{sqrt 3, 1, ...}) -> 1 - 2z^2; roots +-1/sqrt(2).
  const auto star = FiniteRankJacobi<Rational>({Rational(0)}, {Rational(3)});
  CHECK(jost_polynomial(star).u == LP(0, {1, 0, -2}));
  CHECK(jost_polynomial(star).rescale_sq == Rational(3));

  // sqrt(2)-star: 1 - z^2, no roots strictly inside (-1, 1).
  const auto s2 = FiniteRankJacobi<Rational>({Rational(0)}, {Rational(2)});
  CHECK(jost_polynomial(s2).u == LP(0, {1, 0, -1}));
  CHECK(real_roots_unit_interval(jost_polynomial(s2).u).empty());

  // Sword tail J({0},{1/sqrt3, sqrt(2/3), sqrt3, 1, ...}) -> 1 - z^2 - 3z^4 - 2z^6.
  const auto sword = FiniteRankJacobi<Rational>(
      {Rational(0), Rational(0), Rational(0)}, {Rational(1, 3), Rational(2, 3), Rational(3)});
  CHECK(jost_polynomial(sword).u == LP(0, {1, 0, -1, 0, -3, 0, -2}));

  // Umbrella tail J({-1/2, 3/2, 0...},{1/2, 2, 1...}) -> 1 - z - 3z^2 - 3z^3 - 3z^4.
  const auto umb = FiniteRankJacobi<Rational>({Rational(-1, 2), Rational(3, 2)},
                                              {Rational(1, 4), Rational(4)});
  CHECK(jost_polynomial(umb).u == LP(0, {1, -1, -3, -3, -3}));
  CHECK(jost_polynomial(umb).u == perturbation_determinant_direct(umb));

  // Wheel tail J({2,0,...},{sqrt n,1,...}) -> (1-n) z^2 - 2z + 1.
  for (int n : {4, 5, 6}) {
    const auto wheel = FiniteRankJacobi<Rational>({Rational(2)}, {Rational(n)});
    CHECK(jost_polynomial(wheel).u == LP(0, {Rational(1), Rational(-2), Rational(1 - n)}));
  }

  // Even kite C_{2n}: tail J({0},{sqrt2 at 1 and n}) -> 1 - 2z^2 - z^{2n}.
  for (int n : {2, 3, 4}) {
    std::vector<Rational> b(n, Rational(0)), a(n, Rational(1));
    a[0] = Rational(2);
    a[n - 1] = Rational(2);
    const auto u = jost_polynomial(FiniteRankJacobi<Rational>(b, a)).u;
    CHECK(u == con(1) - con(2) * zpow(2) - zpow(2 * n));
  }

  // Complete bipartite tail J({0},{sqrt(p(n-p)), sqrt p, 1...}):
  // u~ = (1-p) z^4 + (2 - p - p(n-p)) z^2 + 1.
  for (const auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {1, 4}}) {
    const int n = p + q - 1;
    const auto j = FiniteRankJacobi<Rational>({Rational(0), Rational(0)},
                                              {Rational(p * (n - p)), Rational(p)});
    const LP expect =
        con(Rational(1 - p)) * zpow(4) + con(Rational(2 - p - p * (n - p))) * zpow(2) + con(1);
    CHECK(jost_polynomial(j).u == expect);
  }

  // Multiple star tail J({0},{a_p = sqrt n}): u~ = 1 - (n-1) z^2 (z^{2p}-1)/(z^2-1).
  for (const auto [n, p] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}}) {
    std::vector<Rational> b(p, Rational(0)), a(p, Rational(1));
    a[p - 1] = Rational(n);
    const auto u = jost_polynomial(FiniteRankJacobi<Rational>(b, a)).u;
    CHECK(u == con(1) - con(Rational(n - 1)) * zpow(2) * geom_even(p));
  }
}

TEST_CASE("direct determinant equals the recursion on radical fixtures and random matrices") {
  // Fixtures with irrational off-diagonals exercise the quadratic-extension path.
  const auto sword = FiniteRankJacobi<Rational>(
      {Rational(0), Rational(0), Rational(0)}, {Rational(1, 3), Rational(2, 3), Rational(3)});
  CHECK(perturbation_determinant_direct(sword) == jost_polynomial(sword).u);

  const auto star = FiniteRankJacobi<Rational>({Rational(0)}, {Rational(3)});
  CHECK(perturbation_determinant_direct(star) == jost_polynomial(star).u);

  CHECK(perturbation_determinant_direct(FiniteRankJacobi<Rational>::free_matrix()) == con(1));

  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto j = th::random_jacobi(rng, 4);
    CHECK(perturbation_determinant_direct(j) == jost_polynomial(j).u);
  }
}

TEST_CASE("direct determinant: full-window interpolation path") {
  // q = 4 with every entry perturbed has 12 rank-one pieces, beyond the
  // symbolic-expansion cap; the evaluate-and-interpolate route must agree.
  const FiniteRankJacobi<Rational> j(
      {Rational(1), Rational(-1, 2), Rational(2), Rational(1, 3)},
      {Rational(4), Rational(1, 4), Rational(9, 4), Rational(16, 9)});
  CHECK(perturbation_determinant_direct(j) == jost_polynomial(j).u);

  // The wide-window route needs rational off-diagonals; irrational ones are
  // rejected rather than approximated.
  std::vector<Rational> b(4, Rational(1)), a(4, Rational(2));
  CHECK_THROWS_AS(perturbation_determinant_direct(FiniteRankJacobi<Rational>(b, a)),
                  std::invalid_argument);
}

TEST_CASE("direct determinant: float path") {
  const FiniteRankJacobi<double> sword =
      FiniteRankJacobi<Rational>({Rational(0), Rational(0), Rational(0)},
                                 {Rational(1, 3), Rational(2, 3), Rational(3)})
          .to_double();
  const auto det = perturbation_determinant_direct(sword);
  const auto u = jost_polynomial(sword).u;
  REQUIRE(det.low == u.low);
  REQUIRE(det.coeffs.size() == u.coeffs.size());
  for (std::size_t i = 0; i < det.coeffs.size(); ++i)
    CHECK(det.coeffs[i] == doctest::Approx(u.coeffs[i]).epsilon(1e-12));
}

TEST_CASE("direct determinant window cap") {
  std::vector<Rational> b(7, Rational(1)), a(7, Rational(1));
  CHECK_THROWS_AS(perturbation_determinant_direct(FiniteRankJacobi<Rational>(b, a)),
                  std::invalid_argument);
}

TEST_CASE("rescale constant equals prod a_j in a float cross-check") {
  // Unrescaled float recursion, straight from the three-term relation:
  // u_{n-1} = ((z + 1/z - b_n) u_n - a_n u_{n+1}) / a_{n-1}, a_0 = 1.
  auto unrescaled = [](const FiniteRankJacobi<double>& j) {
    const int q = j.rank_window();
    LaurentPoly<double> above = LaurentPoly<double>::zpow(q + 2);
    LaurentPoly<double> cur = LaurentPoly<double>::zpow(q + 1);
    for (int n = q + 1; n >= 1; --n) {
      const double a_prev = (n - 1 >= 1) ? std::sqrt(j.a_sq_at(n - 1)) : 1.0;
      LaurentPoly<double> num = cur.shifted(1) + cur.shifted(-1) -
                                LaurentPoly<double>::constant(j.b_at(n)) * cur -
                                std::sqrt(j.a_sq_at(n)) * above;
      for (auto& c : num.coeffs) c /= a_prev;
      above = std::move(cur);
      cur = std::move(num);
    }
    return cur;
  };

  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto jr = th::random_jacobi(rng, 4);
    if (jr.rank_window() == 0) continue;
    const auto jd = jr.to_double();
    const auto u0 = unrescaled(jd);
    const auto scaled = jost_polynomial(jd);
    double prod_a = 1;
    for (int i = 1; i <= jd.rank_window(); ++i) prod_a *= std::sqrt(jd.a_sq_at(i));
    CHECK(std::sqrt(scaled.rescale_sq) == doctest::Approx(prod_a).epsilon(1e-12));
    for (int k = 0; k <= scaled.u.degree(); ++k) {
      const double lhs = scaled.u.coeff(k);
      const double rhs = u0.coeff(k) * prod_a;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("parity: zero-diagonal Jost polynomials are even") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto j = th::random_jacobi(rng, 4);
    std::fill(j.b.begin(), j.b.end(), Rational(0));
    const auto u = jost_polynomial(j).u;
    for (int k = u.low; k <= u.degree(); ++k)
      if (k % 2 != 0) CHECK(u.coeff(k) == Rational(0));
  }
}

TEST_CASE("degree bound: deg u~ <= 2q with equality iff a_q != 1") {
  std::mt19937 rng(29);
  int saw_equality = 0, saw_strict = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto j = th::random_jacobi(rng, 4);
    const int q = j.rank_window();
    const auto u = jost_polynomial(j);
    CHECK(u.u.coeff(0) == Rational(1));  // u~(0) = 1 exactly
    if (q == 0) continue;
    CHECK(u.u.degree() <= 2 * q);
    if (j.a_sq_at(q) != Rational(1)) {
      CHECK(u.u.degree() == 2 * q);
      ++saw_equality;
    } else {
      CHECK(u.u.degree() < 2 * q);
      ++saw_strict;
    }
  }
  CHECK(saw_equality > 0);
  CHECK(saw_strict > 0);
}

TEST_CASE("two-sided wronskian: single weight a_0") {
  // z w(z) = 1 - a_0^2 z^2 (up to the positive rescale prod a_j = a_0).
  for (const Rational a0_sq : {Rational(4), Rational(1, 4), Rational(1)}) {
    TwoSidedJacobi<Rational> j(0, 1);
    j.set_a_sq(0, a0_sq);
    const auto w = wronskian(j);
    CHECK(w.shifted(1) == con(1) - con(a0_sq) * zpow(2));
  }
}

TEST_CASE("two-sided wronskian: weights at +-1 give the quadratic Q(z^2)") {
  // z w~(z) = (p-1)(q-1) z^4 - (p+q-1) z^2 + 1 with p = a_1^2, q = a_{-1}^2.
  for (const auto [p, q] :
       std::vector<std::pair<Rational, Rational>>{{2, 2}, {3, 3}, {4, 5}, {Rational(9, 4), 2}}) {
    TwoSidedJacobi<Rational> j(-1, 2);
    j.set_a_sq(-1, q);
    j.set_a_sq(1, p);
    const auto w = wronskian(j);
    const LP expect = con((p - 1) * (q - 1)) * zpow(4) - con(p + q - 1) * zpow(2) + con(1);
    CHECK(w.shifted(1) == expect);
  }
}

TEST_CASE("two-sided wronskian: free matrix and random windows") {
  TwoSidedJacobi<Rational> free_j(0, 1);
  CHECK(wronskian(free_j) == LP(-1, {1, 0, -1}));  // 1/z - z

  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> lo(-3, 0), width(1, 4);
    const int l = lo(rng), h = l + width(rng);
    TwoSidedJacobi<Rational> j(l, h);
    for (int n = l; n <= h; ++n) j.set_b(n, th::random_rational(rng));
    for (int n = l; n < h; ++n) j.set_a_sq(n, th::random_positive_rational(rng));
    CHECK_NOTHROW(wronskian(j));  // n-independence is asserted inside
  }
}

TEST_CASE("double star Jacobi matrix") {
  const auto j = double_star_jacobi(3, 2, Rational(1, 2));
  CHECK(j.a_sq_at(1) == Rational(3));
  CHECK(j.a_sq_at(-1) == Rational(2));
  CHECK(j.a_sq_at(0) == Rational(1, 4));
  CHECK(j.a_sq_at(5) == Rational(1));
  CHECK_THROWS_AS(double_star_jacobi(1, 2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(double_star_jacobi(2, 2, Rational(0)), std::invalid_argument);
}
