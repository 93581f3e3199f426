// gen.hpp — generators for the example graphs (exact rational weights).
#pragma once

#include <string>
#include <vector>

#include "tailspec/graph.hpp"

namespace tailspec {

struct GenParams {
  int n = 0;                       // star leaves / wheel rim / multiple-star rays / propeller half-girth
  int m = 0;                       // path / cycle length
  int p = 0, q = 0;                // bipartite part sizes / multiple-star ray length (p)
  std::vector<Rational> weights;   // weighted_star edge weights
};

/// Generates a named example graph. Labeling conventions (the canonical tail
/// attachment vertex is always the last one):
///   path(m)                vertices 1..m along the path
///   cycle(m), m >= 3       1..m around the cycle; tails attach at m
///   star(n)                leaves 1..n, root n+1
///   weighted_star(w)       leaf k joined to root n+1 with weight w_k
///   multiple_star(n, p)    n rays of p vertices, leaf-first labels
///                          {k, n+k, ..., (p-1)n+k}, root pn+1
///   complete_bipartite(p,q) parts {1..p} and {p+1..p+q}; attach at p+q
///   wheel(n), n >= 3       rim 1..n, hub n+1
///   sword                  T(1,2,2): legs {1}, {2,3}, {4,5} from center 6
///   umbrella               path 1-2-3-4 plus apex 5 joined to all of 1..4
///   propeller(n)           two (2n+1)-cycles sharing vertex 4n+1
WeightedGraph<Rational> gen(const std::string& kind, const GenParams& params);

/// The vertex the worked examples attach their tail to (always the last label).
int canonical_attachment(const WeightedGraph<Rational>& g);

std::vector<std::string> known_kinds();

}  // namespace tailspec
