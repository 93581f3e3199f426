// eig.hpp — symmetric eigenvalues: dense via Eigen, tridiagonal via
// Sturm-count bisection on the three-term characteristic recurrence.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tailspec/graph.hpp"

namespace tailspec {

/// Eigenvalues of a symmetric tridiagonal matrix (diag d, off-diagonal e),
/// sorted ascending. Bisection on the LDL^T inertia count; each eigenvalue is
/// located independently to ~1e-13 relative accuracy.
inline std::vector<double> eig_tridiagonal(const std::vector<double>& diag,
                                           const std::vector<double>& off) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  if (static_cast<int>(off.size()) != n - 1)
    throw std::invalid_argument("eig_tridiagonal: off-diagonal length must be n - 1");

  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::fabs(off[i - 1]) : 0.0) + (i < n - 1 ? std::fabs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double scale = std::max({1.0, std::fabs(lo), std::fabs(hi)});
  lo -= 1e-12 * scale;
  hi += 1e-12 * scale;

  // Count of eigenvalues strictly below x.
  auto count_below = [&](double x) {
    int cnt = 0;
    double q = diag[0] - x;
    if (q < 0) ++cnt;
    for (int i = 1; i < n; ++i) {
      const double denom = (q == 0.0) ? 1e-300 : q;
      q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
      if (q < 0) ++cnt;
    }
    return cnt;
  };

  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) {
    double a = lo, b = hi;
    while (b - a > 1e-14 * std::max(1.0, std::max(std::fabs(a), std::fabs(b)))) {
      const double mid = 0.5 * (a + b);
      if (!(mid > a && mid < b)) break;  // hit float resolution
      if (count_below(mid) <= k)
        a = mid;
      else
        b = mid;
    }
    out[k] = 0.5 * (a + b);
  }
  return out;
}

inline bool is_tridiagonal(const SymmetricMatrix<double>& m) {
  for (Eigen::Index i = 0; i < m.order(); ++i)
    for (Eigen::Index j = i + 2; j < m.order(); ++j)
      if (m(i, j) != 0.0) return false;
  return true;
}

/// Sorted eigenvalues of a symmetric matrix. Tridiagonal inputs take the
/// bisection path (scales to ~1e4); dense inputs go through Eigen's
/// self-adjoint solver.
inline std::vector<double> eig_symmetric(const SymmetricMatrix<double>& m) {
  const Eigen::Index n = m.order();
  if (n == 0) return {};
  if (is_tridiagonal(m)) {
    if (n > 20000) throw std::invalid_argument("eig_symmetric: tridiagonal order cap exceeded");
    std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
    for (Eigen::Index i = 0; i < n; ++i) d[i] = m(i, i);
    for (Eigen::Index i = 0; i + 1 < n; ++i) e[i] = m(i, i + 1);
    return eig_tridiagonal(d, e);
  }
  if (n > 2000) throw std::invalid_argument("eig_symmetric: dense order cap exceeded");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.mat(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_symmetric: solver failed");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Convenience overload with an explicit symmetry check (throws on asymmetry).
inline std::vector<double> eig_symmetric(const Eigen::MatrixXd& m) {
  return eig_symmetric(SymmetricMatrix<double>::from_matrix(m));
}

}  // namespace tailspec
