#pragma once

#include <string>
#include <vector>

#include "eqlines/graph.hpp"

namespace eqlines {

// Relabeling that depends only on the isomorphism class: isomorphic inputs
// give identical outputs. Individualization-refinement; among the leaves of
// the search tree the relabeling with the least adjacency encoding is kept.
Graph canonical_form(const Graph& g);

// to_compact(canonical_form(g))
std::string canonical_key(const Graph& g);

// One graph per isomorphism class on n vertices (n <= 8), each in canonical
// form, ordered by edge count and then encoding.
std::vector<Graph> nonisomorphic_graphs(int n);
std::vector<Graph> nonisomorphic_connected_graphs(int n);

inline constexpr int kMaxEnumeratedOrder = 8;

}  // namespace eqlines
