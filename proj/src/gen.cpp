#include "tailspec/gen.hpp"

#include <stdexcept>

namespace tailspec {

namespace {

WeightedGraph<Rational> gen_path(int m) {
  if (m < 1) throw std::invalid_argument("gen path: m must be >= 1");
  WeightedGraph<Rational> g(m);
  for (int i = 1; i < m; ++i) g.add_edge(i, i + 1);
  return g;
}

WeightedGraph<Rational> gen_cycle(int m) {
  if (m < 3) throw std::invalid_argument("gen cycle: m must be >= 3");
  WeightedGraph<Rational> g(m);
  for (int i = 1; i < m; ++i) g.add_edge(i, i + 1);
  g.add_edge(m, 1);
  return g;
}

WeightedGraph<Rational> gen_star(int n) {
  if (n < 1) throw std::invalid_argument("gen star: n must be >= 1");
  WeightedGraph<Rational> g(n + 1);
  for (int k = 1; k <= n; ++k) g.add_edge(k, n + 1);
  return g;
}

WeightedGraph<Rational> gen_weighted_star(const std::vector<Rational>& w) {
  if (w.empty()) throw std::invalid_argument("gen weighted_star: at least one weight required");
  const int n = static_cast<int>(w.size());
  WeightedGraph<Rational> g(n + 1);
  for (int k = 1; k <= n; ++k) g.add_edge(k, n + 1, w[k - 1]);
  return g;
}

WeightedGraph<Rational> gen_multiple_star(int n, int p) {
  if (n < 2) throw std::invalid_argument("gen multiple_star: n must be >= 2");
  if (p < 1) throw std::invalid_argument("gen multiple_star: p must be >= 1");
  WeightedGraph<Rational> g(n * p + 1);
  // Ray k (1..n) runs leaf-first: k, n+k, ..., (p-1)n+k, then the root pn+1.
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j < p; ++j) g.add_edge((j - 1) * n + k, j * n + k);
    g.add_edge((p - 1) * n + k, n * p + 1);
  }
  return g;
}

WeightedGraph<Rational> gen_complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("gen complete_bipartite: sizes must be >= 1");
  WeightedGraph<Rational> g(p + q);
  for (int i = 1; i <= p; ++i)
    for (int j = p + 1; j <= p + q; ++j) g.add_edge(i, j);
  return g;
}

WeightedGraph<Rational> gen_wheel(int n) {
  if (n < 3) throw std::invalid_argument("gen wheel: n must be >= 3");
  WeightedGraph<Rational> g(n + 1);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n, 1);
  for (int i = 1; i <= n; ++i) g.add_edge(i, n + 1);
  return g;
}

WeightedGraph<Rational> gen_sword() {
  WeightedGraph<Rational> g(6);
  g.add_edge(1, 6);
  g.add_edge(2, 3);
  g.add_edge(3, 6);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  return g;
}

WeightedGraph<Rational> gen_umbrella() {
  WeightedGraph<Rational> g(5);
  for (int i = 1; i < 4; ++i) g.add_edge(i, i + 1);
  for (int i = 1; i <= 4; ++i) g.add_edge(i, 5);
  return g;
}

WeightedGraph<Rational> gen_propeller(int n) {
  if (n < 1) throw std::invalid_argument("gen propeller: n must be >= 1");
  WeightedGraph<Rational> g(4 * n + 1);
  const int hub = 4 * n + 1;
  auto add_blade = [&](int first) {  // (2n+1)-cycle hub, first, ..., first+2n-1, hub
    g.add_edge(hub, first);
    for (int i = 0; i < 2 * n - 1; ++i) g.add_edge(first + i, first + i + 1);
    g.add_edge(first + 2 * n - 1, hub);
  };
  add_blade(1);
  add_blade(2 * n + 1);
  return g;
}

}  // namespace

WeightedGraph<Rational> gen(const std::string& kind, const GenParams& params) {
  if (kind == "path") return gen_path(params.m);
  if (kind == "cycle") return gen_cycle(params.m);
  if (kind == "star") return gen_star(params.n);
  if (kind == "weighted_star") return gen_weighted_star(params.weights);
  if (kind == "multiple_star") return gen_multiple_star(params.n, params.p);
  if (kind == "complete_bipartite") return gen_complete_bipartite(params.p, params.q);
  if (kind == "wheel") return gen_wheel(params.n);
  if (kind == "sword") return gen_sword();
  if (kind == "umbrella") return gen_umbrella();
  if (kind == "propeller") return gen_propeller(params.n);
  throw std::invalid_argument("gen: unknown kind '" + kind + "'");
}

int canonical_attachment(const WeightedGraph<Rational>& g) { return g.n; }

std::vector<std::string> known_kinds() {
  return {"path",  "cycle",    "star",     "weighted_star", "multiple_star",
          "complete_bipartite", "wheel", "sword", "umbrella", "propeller"};
}

}  // namespace tailspec
