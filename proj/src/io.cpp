#include "tailspec/io.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace tailspec {

namespace {

Rational weight_from_json(const Json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument(std::string("graph spec: ") + what +
                              " must be a string (\"p/q\" or decimal) or an integer");
}

}  // namespace

Json graph_spec_to_json(const TailedGraph<Rational>& t) {
  Json out;
  out["order"] = t.base.n;
  Json edges = Json::array();
  for (const auto& [e, w] : t.base.edges)
    edges.push_back(Json::array({e.first, e.second, format_rational(w)}));
  out["edges"] = edges;
  Json tails = Json::array();
  for (const auto& a : t.attachments) {
    Json att;
    att["vertex"] = a.vertex;
    att["rays"] = a.rays;
    att["bridge"] = format_rational(a.bridge);
    Json tw = Json::object();
    for (const auto& [j, w] : a.tail_weights) tw[std::to_string(j)] = format_rational(w);
    att["tail_weights"] = tw;
    tails.push_back(att);
  }
  out["tails"] = tails;
  return out;
}

TailedGraph<Rational> graph_spec_from_json(const Json& j) {
  if (!j.contains("order")) throw std::invalid_argument("graph spec: missing 'order'");
  WeightedGraph<Rational> g(j.at("order").get<int>());
  for (const auto& e : j.value("edges", Json::array())) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw std::invalid_argument("graph spec: each edge is [i, j] or [i, j, weight]");
    const Rational w = e.size() == 3 ? weight_from_json(e[2], "edge weight") : Rational(1);
    g.add_edge(e[0].get<int>(), e[1].get<int>(), w);
  }
  std::vector<TailAttachment<Rational>> atts;
  for (const auto& a : j.value("tails", Json::array())) {
    TailAttachment<Rational> att;
    att.vertex = a.at("vertex").get<int>();
    att.rays = a.value("rays", 1);
    if (a.contains("bridge")) att.bridge = weight_from_json(a.at("bridge"), "bridge weight");
    const Json weights = a.value("tail_weights", Json::object());
    for (const auto& [key, val] : weights.items())
      att.tail_weights[std::stoi(key)] = weight_from_json(val, "tail weight");
    atts.push_back(std::move(att));
  }
  if (atts.empty()) {
    TailedGraph<Rational> bare;
    bare.base = std::move(g);
    return bare;  // tails may be attached later; analyze() rejects bare graphs
  }
  return attach_tails(std::move(g), std::move(atts));
}

TailedGraph<Rational> load_graph_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph spec '" + path + "'");
  Json j;
  in >> j;
  return graph_spec_from_json(j);
}

void save_graph_spec(const TailedGraph<Rational>& t, const std::string& path, bool force) {
  if (!force && std::filesystem::exists(path))
    throw std::invalid_argument("refusing to overwrite '" + path + "' (use --force)");
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << graph_spec_to_json(t).dump(2) << "\n";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

Json spectrum_to_json(const Spectrum& s) {
  Json out;
  out["ac_bands"] = Json::array();
  for (const auto& b : s.ac_bands) {
    Json band;
    band["lo"] = b.lo;
    band["hi"] = b.hi;
    if (b.infinite)
      band["multiplicity"] = "infinite";
    else
      band["multiplicity"] = b.multiplicity;
    out["ac_bands"].push_back(band);
  }
  out["discrete"] = Json::array();
  for (const auto& d : s.discrete) {
    out["discrete"].push_back({{"lambda", d.lambda},
                               {"multiplicity", d.multiplicity},
                               {"provenance", provenance_name(d.provenance)}});
  }
  return out;
}

Json oracle_to_json(const OracleReport& r) {
  Json out;
  out["sizes"] = r.sizes;
  out["matches"] = Json::array();
  for (const auto& m : r.matches)
    out["matches"].push_back({{"predicted", m.predicted},
                              {"matched", m.matched},
                              {"abs_err", m.abs_err},
                              {"embedded", m.embedded},
                              {"ok", m.ok}});
  out["spurious"] = r.spurious;
  out["pass"] = r.pass;
  return out;
}

Json measure_to_json(const SpectralMeasure& m) {
  Json out;
  out["point_masses"] = Json::array();
  for (const auto& pm : m.point_masses())
    out["point_masses"].push_back({{"lambda", pm.lambda}, {"mass", pm.mass}, {"z", pm.z}});
  const double quad = m.quadrature_mass();
  out["density_mass"] = quad;
  double total = quad;
  for (const auto& pm : m.point_masses()) total += pm.mass;
  out["total_mass"] = total;
  return out;
}

}  // namespace detail

void write_density_csv(const SpectralMeasure& m, int samples, const std::string& csv_path,
                       bool force) {
  if (samples < 8) throw std::invalid_argument("density: at least 8 samples required");
  if (!force && std::filesystem::exists(csv_path))
    throw std::invalid_argument("refusing to overwrite '" + csv_path + "' (use --force)");
  std::ofstream out(csv_path);
  if (!out) throw std::invalid_argument("cannot write '" + csv_path + "'");
  out << "x,w\n";
  // Interior nodes of a `samples`-fold subdivision of [-2, 2]; x = 0 is on
  // the grid for even sample counts.
  for (int i = 1; i < samples; ++i) {
    const double x = -2.0 + 4.0 * i / samples;
    out << format_double(x) << "," << format_double(m.density(x)) << "\n";
  }

  Json sidecar;
  sidecar["point_masses"] = Json::array();
  for (const auto& pm : m.point_masses())
    sidecar["point_masses"].push_back({{"lambda", pm.lambda}, {"mass", pm.mass}});
  std::ofstream side(csv_path + ".masses.json");
  side << sidecar.dump(2) << "\n";
}

}  // namespace tailspec
