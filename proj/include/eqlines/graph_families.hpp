#pragma once

#include <vector>

#include "eqlines/graph.hpp"
#include "eqlines/random.hpp"

namespace eqlines::families {

Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
// K_{1,leaves}, center is vertex 0.
Graph star(int leaves);
Graph petersen();
// Paley graph on q vertices; q must be a prime = 1 mod 4 or the square of a
// prime = 3 mod 4.
Graph paley(int q);

Graph disjoint_union(const std::vector<Graph>& parts);
// m vertex-disjoint copies of K_k.
Graph clique_union(int m, int k);
// Disjoint union of the parts plus one bridge edge joining the first vertex of
// part i+1 to the last vertex of part i.
Graph chained(const std::vector<Graph>& parts);

// Erdos-Renyi G(n, p).
Graph random_graph(Rng& rng, int n, double p);
// Random spanning tree (random attachment) plus G(n, p) extra edges.
Graph random_connected(Rng& rng, int n, double p);

}  // namespace eqlines::families
