// spectrum.hpp — discrete-spectrum assembly and the spectral measure of a
// finite-rank Jacobi matrix.
//
// Eigenvalues off the essential band come from Jost-polynomial roots in
// (-1, 1) through the Zhukovsky map lambda = z + 1/z; eigenvalues of the
// finite block may land inside the band (embedded eigenvalues) and are kept
// with their provenance. Coinciding values merge with tolerance 1e-9, which
// separates genuine multiplicities (computed to <= 1e-12) from near misses.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "tailspec/eig.hpp"
#include "tailspec/jost.hpp"
#include "tailspec/reduce.hpp"
#include "tailspec/roots.hpp"

namespace tailspec {

enum class Provenance { finite_block, jost_root, wronskian_root, sun_block };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::finite_block: return "finite_block";
    case Provenance::jost_root: return "jost_root";
    case Provenance::wronskian_root: return "wronskian_root";
    case Provenance::sun_block: return "sun_block";
  }
  return "?";
}

struct AcBand {
  double lo = -2.0;
  double hi = 2.0;
  long long multiplicity = 1;
  bool infinite = false;
};

struct DiscreteEig {
  double lambda = 0.0;
  int multiplicity = 1;
  Provenance provenance = Provenance::finite_block;
};

struct Spectrum {
  std::vector<AcBand> ac_bands;
  std::vector<DiscreteEig> discrete;  // sorted ascending by lambda

  static constexpr double kMergeTol = 1e-9;

  void add_eigenvalue(double lambda, Provenance prov, int mult = 1) {
    for (auto& d : discrete)
      if (std::fabs(d.lambda - lambda) <= kMergeTol) {
        d.multiplicity += mult;
        return;
      }
    discrete.push_back({lambda, mult, prov});
    std::sort(discrete.begin(), discrete.end(),
              [](const DiscreteEig& a, const DiscreteEig& b) { return a.lambda < b.lambda; });
  }

  void add_band(double lo, double hi, long long mult, bool inf = false) {
    for (auto& b : ac_bands)
      if (std::fabs(b.lo - lo) <= kMergeTol && std::fabs(b.hi - hi) <= kMergeTol) {
        b.multiplicity += mult;
        b.infinite = b.infinite || inf;
        return;
      }
    ac_bands.push_back({lo, hi, mult, inf});
    std::sort(ac_bands.begin(), ac_bands.end(),
              [](const AcBand& a, const AcBand& b) { return a.hi - a.lo < b.hi - b.lo; });
  }

  double band_hull_radius() const {
    double r = 0;
    for (const auto& b : ac_bands) r = std::max({r, std::fabs(b.lo), std::fabs(b.hi)});
    return r;
  }
};

namespace detail {

// Threshold guard for floating inputs: an eigenvalue sitting exactly on the
// spectral threshold maps to |z| = 1, and solver noise of order 1e-15 can
// push the rationalized root just inside the open interval. Exact inputs are
// decided exactly and keep every root.
inline std::vector<double> guard_boundary(std::vector<double> roots, bool exact) {
  if (!exact) std::erase_if(roots, [](double z) { return std::fabs(z) >= 1.0 - 1e-9; });
  return roots;
}

}  // namespace detail

/// Full spectrum of a canonical form: finite-block eigenvalues, Zhukovsky
/// images of the Jost roots of the (possibly scaled) Jacobi component, the
/// essential band, and bands of the free copies.
template <class S>
Spectrum discrete_spectrum(const CanonicalForm<S>& cf) {
  Spectrum spec;
  const double scale = std::sqrt(to_double(cf.jacobi_scale_sq));

  spec.add_band(-2.0 * scale, 2.0 * scale, 1, false);
  if (cf.free_copies.count > 0 || cf.free_copies.unbounded) {
    const double fs = std::sqrt(to_double(cf.free_copies.scale_sq));
    spec.add_band(-2.0 * fs, 2.0 * fs, cf.free_copies.unbounded ? 0 : cf.free_copies.count,
                  cf.free_copies.unbounded);
  }

  for (double lambda : eig_symmetric(cf.finite_block))
    spec.add_eigenvalue(lambda, Provenance::finite_block);

  const auto jost = jost_polynomial(cf.jacobi);
  for (double z : detail::guard_boundary(real_roots_unit_interval(jost.u), is_exact_v<S>))
    spec.add_eigenvalue(scale * zhukovsky(z), Provenance::jost_root);
  return spec;
}

/// Spectrum of a finite-rank two-sided Jacobi matrix (times an optional
/// positive scale): eigenvalues are Zhukovsky images of the Wronskian zeros
/// in (-1, 1) \ {0}.
template <class S>
Spectrum two_sided_spectrum(const TwoSidedJacobi<S>& j, const S& scale_sq = S(1)) {
  Spectrum spec;
  const double scale = std::sqrt(to_double(scale_sq));
  spec.add_band(-2.0 * scale, 2.0 * scale, 1, false);
  const LaurentPoly<S> w = wronskian(j);
  if (w.is_zero()) throw std::logic_error("two_sided_spectrum: zero Wronskian");
  // Clear the pole: roots of z^{-low} w(z) in (-1,1); z = 0 never qualifies.
  const LaurentPoly<S> cleared = w.shifted(-w.low);
  for (double z : detail::guard_boundary(real_roots_unit_interval(cleared), is_exact_v<S>)) {
    if (z == 0.0) continue;
    spec.add_eigenvalue(scale * zhukovsky(z), Provenance::wronskian_root);
  }
  return spec;
}

/// Spectrum of a sun decomposition (p rays at every vertex of an n-vertex
/// graph): the band carries multiplicity p n, the discrete part collects the
/// spectral roots of (p - 1) x^2 + lambda_k x - 1 per block.
inline Spectrum sun_spectrum(const SunDecomposition& sun, int p, int n) {
  Spectrum spec;
  spec.add_band(-2.0, 2.0, static_cast<long long>(p) * n, false);
  for (const auto& block : sun.blocks) {
    const auto jost = jost_polynomial(block);
    for (double z : detail::guard_boundary(real_roots_unit_interval(jost.u), false))
      spec.add_eigenvalue(zhukovsky(z), Provenance::sun_block);
  }
  return spec;
}

struct PointMass {
  double lambda = 0.0;
  double mass = 0.0;
  double z = 0.0;  // Jost root generating this eigenvalue
};

/// Spectral measure of a finite-rank one-sided Jacobi matrix with respect to
/// e_1: density w(x) = sqrt(4 - x^2) / (2 pi |u(e^it)|^2), x = 2 cos t, plus
/// point masses sigma_j = z_j (1 - z_j^{-2})^2 / (u'(z_j) u(1/z_j)).
class SpectralMeasure {
 public:
  template <class S>
  explicit SpectralMeasure(const FiniteRankJacobi<S>& j) {
    const auto jost = jost_polynomial(j);
    const double prod_a_sq = to_double(jost.rescale_sq);
    for (const auto& c : jost.u.dense()) u_.push_back(to_double(c) / std::sqrt(prod_a_sq));
    std::vector<double> du;
    for (std::size_t i = 1; i < u_.size(); ++i) du.push_back(double(i) * u_[i]);
    for (double z : real_roots_unit_interval(jost.u)) {
      PointMass pm;
      pm.z = z;
      pm.lambda = zhukovsky(z);
      const double zi = 1.0 / z;
      pm.mass = z * std::pow(1.0 - zi * zi, 2) / (polyq::eval(du, z) * polyq::eval(u_, zi));
      masses_.push_back(pm);
    }
    std::sort(masses_.begin(), masses_.end(),
              [](const PointMass& a, const PointMass& b) { return a.lambda < b.lambda; });
  }

  const std::vector<PointMass>& point_masses() const { return masses_; }

  /// Density of the absolutely continuous part on the open band (-2, 2).
  double density(double x) const {
    if (!(std::fabs(x) < 2.0)) throw std::domain_error("SpectralMeasure::density: |x| >= 2");
    const double t = std::acos(x / 2.0);
    const std::complex<double> eit(std::cos(t), std::sin(t));
    std::complex<double> u(0.0, 0.0);
    for (auto it = u_.rbegin(); it != u_.rend(); ++it) u = u * eit + *it;
    return std::sqrt(4.0 - x * x) / (2.0 * M_PI * std::norm(u));
  }

  /// Quadrature of the density over the band: substitution x = 2 cos t with a
  /// uniform midpoint t-grid, which absorbs the square-root edge behavior.
  double quadrature_mass(int nodes = 2048) const {
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double t = M_PI * (i + 0.5) / nodes;
      acc += density(2.0 * std::cos(t)) * 2.0 * std::sin(t);
    }
    return acc * M_PI / nodes;
  }

  double total_mass(int nodes = 2048) const {
    double m = quadrature_mass(nodes);
    for (const auto& pm : masses_) m += pm.mass;
    return m;
  }

 private:
  std::vector<double> u_;  // unrescaled Jost polynomial coefficients
  std::vector<PointMass> masses_;
};

template <class S>
SpectralMeasure spectral_measure(const FiniteRankJacobi<S>& j) {
  return SpectralMeasure(j);
}

}  // namespace tailspec
