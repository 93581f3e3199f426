// io.hpp — graph-spec files, analysis reports (JSON), density CSV.
//
// Graph-spec format (one JSON document):
//   { "order": n,
//     "edges": [[i, j, "w"], ...],                 // weights "p/q" or decimal strings
//     "tails": [{"vertex": v, "rays": p, "bridge": "d",
//                "tail_weights": {"j": "w", ...}}] }
// Rational weights round-trip exactly: they are parsed into exact rationals
// and re-serialized in reduced "p/q" form. Reports are deterministic: equal
// inputs produce byte-identical JSON.
#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

#include "tailspec/analyze.hpp"
#include "tailspec/graph.hpp"

namespace tailspec {

using Json = nlohmann::ordered_json;

Json graph_spec_to_json(const TailedGraph<Rational>& t);
TailedGraph<Rational> graph_spec_from_json(const Json& j);
TailedGraph<Rational> load_graph_spec(const std::string& path);
void save_graph_spec(const TailedGraph<Rational>& t, const std::string& path, bool force);

std::string format_double(double v);  // 17 significant digits

namespace detail {

template <class S>
Json scalar_to_json(const S& v) {
  if constexpr (is_exact_v<S>)
    return format_rational(v);
  else
    return v;
}

template <class S>
Json jacobi_to_json(const FiniteRankJacobi<S>& j, const S& scale_sq) {
  Json out;
  out["window"] = j.rank_window();
  out["b"] = Json::array();
  out["a_sq"] = Json::array();
  for (const auto& v : j.b) out["b"].push_back(scalar_to_json(v));
  for (const auto& v : j.a_sq) out["a_sq"].push_back(scalar_to_json(v));
  out["scale_sq"] = scalar_to_json(scale_sq);
  return out;
}

Json spectrum_to_json(const Spectrum& s);
Json oracle_to_json(const OracleReport& r);
Json measure_to_json(const SpectralMeasure& m);

}  // namespace detail

/// Versioned analysis report; schema 1. Rationals appear as "p/q" strings in
/// exact mode and as doubles in float mode.
template <class S>
Json report_to_json(const AnalysisResult<S>& r, const Json& input_echo) {
  Json out;
  out["schema"] = 1;
  out["mode"] = r.mode == Mode::exact ? "exact" : "float";
  out["input"] = input_echo;
  out["oracle_only"] = r.oracle_only;
  if (!r.notice.empty()) out["notice"] = r.notice;

  if (r.canonical) {
    const auto& cf = *r.canonical;
    Json canon;
    canon["finite_block_order"] = cf.finite_block.order();
    Json block = Json::array();
    for (Eigen::Index i = 0; i < cf.finite_block.order(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < cf.finite_block.order(); ++j) row.push_back(cf.finite_block(i, j));
      block.push_back(row);
    }
    canon["finite_block"] = block;
    canon["jacobi"] = detail::jacobi_to_json(cf.jacobi, cf.jacobi_scale_sq);
    canon["free_copies"] = {{"count", cf.free_copies.count},
                            {"infinite", cf.free_copies.unbounded},
                            {"scale_sq", detail::scalar_to_json(cf.free_copies.scale_sq)}};
    canon["verification_residual"] = r.verification_residual;
    canon["verification_exact_zero"] = r.verification_exact_zero;
    out["canonical"] = canon;
  }
  if (r.jost) {
    Json jost;
    jost["coefficients"] = Json::array();
    for (const auto& c : r.jost->u.dense()) jost["coefficients"].push_back(detail::scalar_to_json(c));
    jost["rescale_sq"] = detail::scalar_to_json(r.jost->rescale_sq);
    jost["window"] = r.jost->window;
    out["jost"] = jost;
  }
  if (r.spectrum) out["spectrum"] = detail::spectrum_to_json(*r.spectrum);
  if (r.measure) out["measure"] = detail::measure_to_json(*r.measure);
  if (r.oracle) out["oracle"] = detail::oracle_to_json(*r.oracle);
  if (r.oracle_only && !r.oracle_sizes.empty()) {
    out["oracle"] = {{"sizes", r.oracle_sizes}, {"observed_discrete", r.observed_discrete}};
  }
  return out;
}

void write_density_csv(const SpectralMeasure& m, int samples, const std::string& csv_path,
                       bool force);

}  // namespace tailspec
