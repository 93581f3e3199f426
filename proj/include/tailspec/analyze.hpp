// analyze.hpp — end-to-end pipeline: tailed graph -> canonical form ->
// spectrum (+ spectral measure, + truncation oracle).
//
// Attachments at several distinct vertices have no symbolic reduction; the
// analysis then degrades to oracle-only mode with an explicit notice, and the
// report carries the persistent truncated outliers as observed candidates.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tailspec/oracle.hpp"
#include "tailspec/reduce.hpp"
#include "tailspec/spectrum.hpp"

namespace tailspec {

enum class Mode { exact, floating };

struct AnalyzeOptions {
  bool with_measure = false;
  int oracle_depth = 0;         // 0 = oracle off
  double oracle_delta = 0.05;
  double oracle_tol = 1e-8;
};

template <class S>
struct AnalysisResult {
  Mode mode = Mode::exact;
  bool oracle_only = false;
  std::string notice;
  std::optional<CanonicalForm<S>> canonical;
  std::optional<JostPolynomial<S>> jost;
  double verification_residual = 0.0;
  bool verification_exact_zero = false;
  std::optional<Spectrum> spectrum;
  std::optional<SpectralMeasure> measure;
  std::optional<OracleReport> oracle;
  std::vector<double> observed_discrete;  // oracle-only mode: persistent outliers
  std::vector<int> oracle_sizes;
};

namespace detail {

template <class S>
TailedGraph<double> tailed_to_double(const TailedGraph<S>& t) {
  if constexpr (is_exact_v<S>)
    return to_double(t);
  else
    return t;
}

}  // namespace detail

template <class S>
AnalysisResult<S> analyze(const TailedGraph<S>& input, const AnalyzeOptions& opts = {}) {
  AnalysisResult<S> result;
  result.mode = is_exact_v<S> ? Mode::exact : Mode::floating;
  if (input.attachments.empty())
    throw std::invalid_argument("analyze: at least one tail required");

  SingleTailProblem<S> problem;
  try {
    problem = normalize_multiray(input);
  } catch (const OracleOnlyConfiguration& e) {
    result.oracle_only = true;
    result.notice = e.what();
    if (opts.oracle_depth > 0) {
      const auto td = detail::tailed_to_double(input);
      const int n1 = opts.oracle_depth, n2 = opts.oracle_depth + 17;
      result.oracle_sizes = {n1, n2};
      const auto e1 = truncated_eigenvalues(td, n1);
      const auto e2 = truncated_eigenvalues(td, n2);
      for (double v1 : e1) {
        if (std::fabs(v1) <= 2.0 + opts.oracle_delta) continue;
        for (double v2 : e2)
          if (std::fabs(v1 - v2) < 1e-3) {
            result.observed_discrete.push_back(v1);
            break;
          }
      }
    }
    return result;
  }

  auto [cf, trace] = reduce_single_tail(problem.adjacency, problem.bridge_sq, problem.tail);
  cf.free_copies.count = problem.free_copies;
  const auto verification =
      verify_canonical(problem.adjacency, problem.bridge_sq, problem.tail, cf, trace);
  result.verification_residual = std::max(verification.orthogonality, verification.three_term);
  result.verification_exact_zero = verification.exact_zero;

  result.jost = jost_polynomial(cf.jacobi);
  result.spectrum = discrete_spectrum(cf);
  if (opts.with_measure) result.measure = spectral_measure(cf.jacobi);
  if (opts.oracle_depth > 0)
    result.oracle = compare(*result.spectrum, detail::tailed_to_double(input), opts.oracle_depth,
                            opts.oracle_delta, opts.oracle_tol);
  result.canonical = std::move(cf);
  return result;
}

}  // namespace tailspec
