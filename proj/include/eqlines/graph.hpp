#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqlines/rational_matrix.hpp"

namespace eqlines {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the dense vertex set {0, ..., n-1}.
// Immutable after construction; edges are stored with u < v, sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws ParameterError on self-loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  int max_degree() const;
  int min_degree() const;
  bool is_regular() const;

  RationalMatrix adjacency_rational() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Induced subgraph together with the map back into the parent graph:
// local vertex i is parent vertex `vertices[i]`.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertices;
};

// `vertices` may be in any order; it is sorted and deduplicated.
Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices);
// G \ S
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

struct Ball {
  Vertex center = 0;
  int radius = 0;
  std::vector<Vertex> vertices;  // sorted
  Graph induced;
};

Ball ball(const Graph& g, Vertex v, int r);

// Graph distance from `source` to every vertex, -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
// Distance to the nearest vertex of `sources`, -1 where unreachable.
std::vector<int> distances_to_set(const Graph& g, std::span<const Vertex> sources);

std::vector<Subgraph> components(const Graph& g);
bool is_connected(const Graph& g);

// Complements the edges across the cut (S, V \ S).
Graph switch_graph(const Graph& g, std::span<const Vertex> s);

// Relabels so that new vertex i is old vertex `order[i]`.
Graph relabel(const Graph& g, std::span<const Vertex> order);

// Upper-triangle adjacency bits in row-major order over pairs (0,1), (0,2), ...,
// (1,2), ... as a '0'/'1' string; lexicographic order on these strings is the
// order used for canonical representatives.
std::string adjacency_bits(const Graph& g);
Graph from_adjacency_bits(int n, const std::string& bits);

// Single-line compact form "n:bits".
std::string to_compact(const Graph& g);

// Vertices reordered by non-increasing degree, ties by original id.
Graph degree_sorted(const Graph& g);

}  // namespace eqlines
