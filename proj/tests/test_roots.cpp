#include <doctest.h>

#include "tailspec/eig.hpp"
#include "tailspec/roots.hpp"
#include "test_helpers.hpp"

using namespace tailspec;

TEST_CASE("real roots: star Jost polynomial 1 - 2z^2") {
  const auto roots = real_roots_unit_interval(RatPoly{1, 0, -2});
  REQUIRE(roots.size() == 2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(roots[0] == doctest::Approx(-r).epsilon(1e-14));
  CHECK(roots[1] == doctest::Approx(r).epsilon(1e-14));
}

TEST_CASE("real roots: kite quartic z^4 + 2z^2 - 1") {
  const auto roots = real_roots_unit_interval(RatPoly{-1, 0, 2, 0, 1});
  REQUIRE(roots.size() == 2);
  // Independent oracle: scan-and-bisect the same quartic.
  const auto expect = th::bisect_roots(
      [](double z) { return ((z * z + 2) * z * z) - 1; }, -1, 1);
  REQUIRE(expect.size() == 2);
  CHECK(roots[0] == doctest::Approx(expect[0]).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(expect[1]).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(std::sqrt(std::sqrt(2.0) - 1.0)).epsilon(1e-12));
}

TEST_CASE("real roots: no real roots and rational roots") {
  CHECK(real_roots_unit_interval(RatPoly{1, 0, 1}).empty());  // 1 + z^2
  const auto r = real_roots_unit_interval(RatPoly{1, -2});    // 1 - 2z
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("real roots: boundary roots at +-1 are excluded") {
  // (z^2 - 1)(z - 1/2) = z^3 - z^2/2 - z + 1/2
  const auto r = real_roots_unit_interval(RatPoly{Rational(1, 2), -1, Rational(-1, 2), 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.5).epsilon(1e-14));

  // Kite m = 3: z^3 + 2z^2 - 1 has x = -1 on the boundary; one interior root.
  const auto kite3 = real_roots_unit_interval(RatPoly{-1, 0, 2, 1});
  REQUIRE(kite3.size() == 1);
  CHECK(kite3[0] == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-13));
}

TEST_CASE("real roots: non-simple root inside (-1,1) is a hard error") {
  // (2z - 1)^2
  CHECK_THROWS_AS(real_roots_unit_interval(RatPoly{1, -4, 4}), std::domain_error);
  // (z - 3)^2 (2z - 1): repeated root outside is harmless.
  const auto r = real_roots_unit_interval(RatPoly{-9, 24, -13, 2});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("real roots: zero polynomial rejected") {
  CHECK_THROWS_AS(real_roots_unit_interval(RatPoly{}), std::invalid_argument);
  CHECK_THROWS_AS(real_roots_unit_interval(RatPoly{0, 0}), std::invalid_argument);
}

TEST_CASE("descartes bound") {
  // (n-1)x^{p+1} - nx + 1 at (n,p) = (3,2): 2x^3 - 3x + 1
  CHECK(descartes_bound(std::vector<Rational>{1, -3, 0, 2}) == 2);
  // Sword cubic 2x^3 + 3x^2 + x - 1
  CHECK(descartes_bound(std::vector<Rational>{-1, 1, 3, 2}) == 1);
  CHECK(descartes_bound(std::vector<double>{1.0, 0.0, 1.0}) == 0);
  CHECK_THROWS_AS(descartes_bound(std::vector<Rational>{0, 0}), std::invalid_argument);
}

namespace {

// Independent grid count of sign changes over (-1, 1).
int grid_count(const RatPoly& p, int grid = 1000000) {
  std::vector<double> pd;
  for (const auto& c : p) pd.push_back(to_double(c));
  int count = 0;
  double prev = polyq::eval(pd, -1.0 + 2.0 * 0.5 / grid);
  for (int i = 1; i < grid; ++i) {
    const double x = -1.0 + 2.0 * (i + 0.5) / grid;
    const double fx = polyq::eval(pd, x);
    if ((prev < 0 && fx > 0) || (prev > 0 && fx < 0)) ++count;
    prev = fx;
  }
  return count;
}

// Positive-root count via the same Sturm chain type, on (0, B] with B a
// Cauchy-style bound.
int positive_roots(const RatPoly& p) {
  RatPoly sf = polyq::squarefree_part(p);
  while (!sf.empty() && sf.front() == 0) sf.erase(sf.begin());  // strip z^k
  if (polyq::degree(sf) < 1) return 0;
  Rational bound(1);
  for (const auto& c : sf) bound = std::max(bound, Rational(1) + abs_val(c / sf.back()));
  tailspec::detail::SturmChain chain(sf);
  return chain.variations(Rational(0)) - chain.variations(bound);
}

}  // namespace

TEST_CASE("sturm counts match a brute-force grid scan on random polynomials") {
  // Sturm counts distinct roots, so the scan runs on the squarefree part
  // (even-multiplicity roots produce no sign change on a grid).
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> degree(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    RatPoly p;
    const int d = degree(rng);
    for (int i = 0; i <= d; ++i) p.push_back(th::random_rational(rng, 6, 4));
    polyq::trim(p);
    if (polyq::degree(p) < 1) continue;
    if (polyq::eval(p, Rational(1)) == 0 || polyq::eval(p, Rational(-1)) == 0) continue;
    const RatPoly sf = polyq::squarefree_part(p);
    std::vector<std::pair<Rational, Rational>> intervals;
    tailspec::detail::isolate(sf, Rational(-1), Rational(1), intervals);
    CHECK(static_cast<int>(intervals.size()) == grid_count(sf));
  }
}

TEST_CASE("descartes parity: nu - mu is even and nonnegative") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> degree(1, 9);
  for (int trial = 0; trial < 120; ++trial) {
    RatPoly p;
    const int d = degree(rng);
    for (int i = 0; i <= d; ++i) p.push_back(th::random_rational(rng, 5, 3));
    polyq::trim(p);
    if (polyq::degree(p) < 1 || polyq::eval(p, Rational(0)) == 0) continue;
    const int nu = descartes_bound(p);
    const int mu = positive_roots(p);
    CHECK(nu >= mu);
    CHECK((nu - mu) % 2 == 0);
  }
}

TEST_CASE("zhukovsky map") {
  CHECK(zhukovsky(Rational(1, 2)) == Rational(5, 2));
  CHECK(zhukovsky(Rational(-1, 3)) == Rational(-10, 3));
  CHECK(zhukovsky(1.0 / std::sqrt(2.0)) == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(zhukovsky(Rational(0)), std::domain_error);

  double prev = zhukovsky(0.05);
  for (double z = 0.1; z < 1.0; z += 0.05) {
    const double cur = zhukovsky(z);
    CHECK(cur < prev);  // strictly decreasing on (0, 1)
    prev = cur;
  }
}

TEST_CASE("eig_symmetric: closed forms") {
  GenParams p;
  p.m = 5;
  const auto path_eigs = eig_symmetric(th::gen("path", p).adjacency().to_double());
  std::vector<double> expect{-std::sqrt(3.0), -1, 0, 1, std::sqrt(3.0)};
  CHECK(th::multiset_close(path_eigs, expect, 1e-12));

  SymmetricMatrix<double> zero(3);
  CHECK(th::multiset_close(eig_symmetric(zero), {0, 0, 0}, 1e-13));

  GenParams c;
  c.m = 5;
  const auto cyc = eig_symmetric(th::gen("cycle", c).adjacency().to_double());
  std::vector<double> circulant;
  for (int k = 0; k < 5; ++k) circulant.push_back(2 * std::cos(2 * M_PI * k / 5));
  CHECK(th::multiset_close(cyc, circulant, 1e-12));
}

TEST_CASE("eig_symmetric: tridiagonal bisection agrees with the dense path") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 12;
    std::vector<double> d(n), e(n - 1);
    for (auto& v : d) v = u(rng);
    for (auto& v : e) v = std::fabs(u(rng)) + 0.1;
    SymmetricMatrix<double> m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, d[i]);
    for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, e[i]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(m.mat(), Eigen::EigenvaluesOnly);
    std::vector<double> expect(dense.eigenvalues().data(), dense.eigenvalues().data() + n);
    CHECK(th::multiset_close(eig_tridiagonal(d, e), expect, 1e-11));
  }
}

TEST_CASE("eig_symmetric rejects nonsymmetric input") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 2, 0;
  CHECK_THROWS_AS(eig_symmetric(m), std::invalid_argument);
}
