// tailspec_cli.cpp — command-line front end: graph generation, end-to-end
// analysis, truncation-oracle runs, density export, Jost inspection.
//
// Exit codes: 0 success, 2 input error, 3 oracle failure.
#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "tailspec/analyze.hpp"
#include "tailspec/gen.hpp"
#include "tailspec/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitOracle = 3;

struct GenCli {
  std::string kind;
  int n = 0, m = 0, p = 0, q = 0;
  std::vector<std::string> weights;
  std::string out;
  bool force = false;
  bool tail = false;
  int tail_vertex = 0;  // 0 = canonical attachment (last vertex)
  int rays = 1;
  std::string bridge = "1";
};

int run_gen(const GenCli& cli) {
  tailspec::GenParams params;
  params.n = cli.n;
  params.m = cli.m;
  params.p = cli.p;
  params.q = cli.q;
  for (const auto& w : cli.weights) params.weights.push_back(tailspec::parse_rational(w));
  auto g = tailspec::gen(cli.kind, params);

  tailspec::TailedGraph<tailspec::Rational> t;
  if (cli.tail) {
    tailspec::TailAttachment<tailspec::Rational> att;
    att.vertex = cli.tail_vertex > 0 ? cli.tail_vertex : tailspec::canonical_attachment(g);
    att.rays = cli.rays;
    att.bridge = tailspec::parse_rational(cli.bridge);
    t = tailspec::attach_tails(std::move(g), {att});
  } else {
    t.base = std::move(g);
  }
  if (cli.out.empty()) {
    std::cout << tailspec::graph_spec_to_json(t).dump(2) << "\n";
  } else {
    tailspec::save_graph_spec(t, cli.out, cli.force);
  }
  return kExitOk;
}

void emit(const tailspec::Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
}

int run_analyze(const std::string& spec_path, bool use_float, bool with_measure, int oracle_depth,
                const std::string& out_path) {
  const auto input = tailspec::load_graph_spec(spec_path);
  const tailspec::Json echo = tailspec::graph_spec_to_json(input);
  tailspec::AnalyzeOptions opts;
  opts.with_measure = with_measure;
  opts.oracle_depth = oracle_depth;

  bool oracle_failed = false;
  if (use_float) {
    const auto result = tailspec::analyze(tailspec::to_double(input), opts);
    emit(tailspec::report_to_json(result, echo), out_path);
    oracle_failed = result.oracle && !result.oracle->pass;
  } else {
    const auto result = tailspec::analyze(input, opts);
    emit(tailspec::report_to_json(result, echo), out_path);
    oracle_failed = result.oracle && !result.oracle->pass;
  }
  return oracle_failed ? kExitOracle : kExitOk;
}

int run_density(const std::string& spec_path, int samples, const std::string& out_csv, bool force) {
  const auto input = tailspec::load_graph_spec(spec_path);
  const auto result = tailspec::analyze(input, {});
  if (!result.canonical)
    throw std::invalid_argument("density: configuration has no Jacobi component (oracle-only)");
  const auto measure = tailspec::spectral_measure(result.canonical->jacobi);
  tailspec::write_density_csv(measure, samples, out_csv, force);
  return kExitOk;
}

int run_jost(const std::string& spec_path, const std::string& out_path) {
  const auto input = tailspec::load_graph_spec(spec_path);
  const auto result = tailspec::analyze(input, {});
  if (!result.jost)
    throw std::invalid_argument("jost: configuration has no Jacobi component (oracle-only)");
  tailspec::Json out;
  out["coefficients"] = tailspec::Json::array();
  for (const auto& c : result.jost->u.dense())
    out["coefficients"].push_back(tailspec::format_rational(c));
  out["rescale_sq"] = tailspec::format_rational(result.jost->rescale_sq);
  out["roots"] = tailspec::Json::array();
  out["eigenvalues"] = tailspec::Json::array();
  for (double z : tailspec::real_roots_unit_interval(result.jost->u)) {
    out["roots"].push_back(z);
    out["eigenvalues"].push_back(tailspec::zhukovsky(z));
  }
  emit(out, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of finite graphs with infinite tails"};
  app.require_subcommand(1);

  GenCli gen_cli;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph-spec file for a named example graph");
  gen_cmd->add_option("kind", gen_cli.kind, "one of: path cycle star weighted_star multiple_star "
                                            "complete_bipartite wheel sword umbrella propeller")
      ->required();
  gen_cmd->add_option("-n", gen_cli.n, "star leaves / wheel rim size / multiple-star rays / propeller half-girth");
  gen_cmd->add_option("-m", gen_cli.m, "path or cycle length");
  gen_cmd->add_option("-p", gen_cli.p, "bipartite first part / multiple-star ray length");
  gen_cmd->add_option("-q", gen_cli.q, "bipartite second part");
  gen_cmd->add_option("--weights", gen_cli.weights, "weighted_star edge weights (\"p/q\" or decimal)");
  gen_cmd->add_flag("--tail", gen_cli.tail, "attach a tail at the canonical vertex");
  gen_cmd->add_option("--tail-vertex", gen_cli.tail_vertex, "override the tail attachment vertex");
  gen_cmd->add_option("--rays", gen_cli.rays, "parallel rays for the attached tail");
  gen_cmd->add_option("--bridge", gen_cli.bridge, "bridge weight for the attached tail");
  gen_cmd->add_option("-o,--out", gen_cli.out, "output path (stdout when omitted)");
  gen_cmd->add_flag("--force", gen_cli.force, "overwrite an existing output file");

  std::string spec_path, out_path;
  bool use_float = false, with_measure = false, force = false;
  int oracle_depth = 0, samples = 512;

  auto* analyze_cmd = app.add_subcommand("analyze", "full spectral analysis of a graph-spec file");
  analyze_cmd->add_option("spec", spec_path, "graph-spec JSON path")->required();
  auto* exact_flag = analyze_cmd->add_flag("--exact", "exact rational pipeline (default)");
  analyze_cmd->add_flag("--float", use_float, "floating-point pipeline")->excludes(exact_flag);
  analyze_cmd->add_flag("--measure", with_measure, "include the spectral measure");
  analyze_cmd->add_option("--oracle", oracle_depth, "run the truncation oracle at this depth");
  analyze_cmd->add_option("-o,--out", out_path, "report path (stdout when omitted)");

  auto* density_cmd = app.add_subcommand("density", "export the spectral density as CSV");
  density_cmd->add_option("spec", spec_path, "graph-spec JSON path")->required();
  density_cmd->add_option("--samples", samples, "subdivisions of [-2, 2] (>= 8)");
  density_cmd->add_option("-o,--out", out_path, "CSV output path")->required();
  density_cmd->add_flag("--force", force, "overwrite existing outputs");

  auto* jost_cmd = app.add_subcommand("jost", "Jost polynomial coefficients and roots");
  jost_cmd->add_option("spec", spec_path, "graph-spec JSON path")->required();
  jost_cmd->add_option("-o,--out", out_path, "output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_cmd->parsed()) return run_gen(gen_cli);
    if (analyze_cmd->parsed())
      return run_analyze(spec_path, use_float, with_measure, oracle_depth, out_path);
    if (density_cmd->parsed()) return run_density(spec_path, samples, out_path, force);
    if (jost_cmd->parsed()) return run_jost(spec_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
