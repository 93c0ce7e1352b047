#include "eqlines/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "eqlines/errors.hpp"

namespace eqlines {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw ParameterError("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    const auto dup = *std::adjacent_find(edges.begin(), edges.end());
    throw ParameterError("duplicate edge (" + std::to_string(dup.first) + "," + std::to_string(dup.second) + ")");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (const auto& list : adj_) d = std::min(d, static_cast<int>(list.size()));
  return d;
}

bool Graph::is_regular() const { return max_degree() == min_degree(); }

RationalMatrix Graph::adjacency_rational() const {
  const auto n = static_cast<std::size_t>(n_);
  RationalMatrix a(n, n);
  for (const auto& [u, v] : edges_) {
    a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
    a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
  }
  return a;
}

Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.n()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
    local[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const int lu = local[static_cast<std::size_t>(u)];
    const int lv = local[static_cast<std::size_t>(v)];
    if (lu >= 0 && lv >= 0) edges.emplace_back(lu, lv);
  }
  return {Graph(static_cast<int>(vertices.size()), std::move(edges)), std::move(vertices)};
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(static_cast<std::size_t>(g.n()), false);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.n()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
    gone[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  return induced_subgraph(g, std::move(keep));
}

std::vector<int> distances_to_set(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (s < 0 || s >= g.n()) throw ParameterError("vertex " + std::to_string(s) + " out of range");
    if (dist[static_cast<std::size_t>(s)] < 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  const Vertex s[1] = {source};
  return distances_to_set(g, s);
}

Ball ball(const Graph& g, Vertex v, int r) {
  if (v < 0 || v >= g.n()) throw ParameterError("ball center out of range");
  if (r < 0) throw ParameterError("ball radius must be non-negative");
  const auto dist = bfs_distances(g, v);
  std::vector<Vertex> members;
  for (Vertex u = 0; u < g.n(); ++u) {
    const int d = dist[static_cast<std::size_t>(u)];
    if (d >= 0 && d <= r) members.push_back(u);
  }
  auto sub = induced_subgraph(g, members);
  return {v, r, std::move(sub.vertices), std::move(sub.graph)};
}

std::vector<Subgraph> components(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
  std::vector<Subgraph> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const auto dist = bfs_distances(g, s);
    std::vector<Vertex> members;
    for (Vertex u = 0; u < g.n(); ++u) {
      if (dist[static_cast<std::size_t>(u)] >= 0) {
        label[static_cast<std::size_t>(u)] = static_cast<int>(out.size());
        members.push_back(u);
      }
    }
    out.push_back(induced_subgraph(g, std::move(members)));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

Graph switch_graph(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> in_s(static_cast<std::size_t>(g.n()), false);
  for (Vertex v : s) {
    if (v < 0 || v >= g.n()) throw ParameterError("switching set vertex out of range");
    in_s[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const bool across = in_s[static_cast<std::size_t>(u)] != in_s[static_cast<std::size_t>(v)];
      if (g.has_edge(u, v) != across) edges.emplace_back(u, v);
    }
  }
  return Graph(g.n(), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.n()) throw ParameterError("relabel order has wrong length");
  std::vector<int> new_id(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= g.n() || new_id[static_cast<std::size_t>(v)] >= 0) throw ParameterError("relabel order is not a permutation");
    new_id[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
  return Graph(g.n(), std::move(edges));
}

std::string adjacency_bits(const Graph& g) {
  std::string bits;
  bits.reserve(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(std::max(g.n() - 1, 0)) / 2);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) bits.push_back(g.has_edge(u, v) ? '1' : '0');
  }
  return bits;
}

Graph from_adjacency_bits(int n, const std::string& bits) {
  if (n < 0) throw ParseError("negative vertex count in compact graph");
  const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  if (bits.size() != expected) {
    throw ParseError("compact graph on " + std::to_string(n) + " vertices needs " + std::to_string(expected) + " bits, got " + std::to_string(bits.size()));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if (bits[k] == '1') {
        edges.emplace_back(u, v);
      } else if (bits[k] != '0') {
        throw ParseError("compact graph bits must be 0 or 1");
      }
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_compact(const Graph& g) { return std::to_string(g.n()) + ":" + adjacency_bits(g); }

Graph degree_sorted(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return relabel(g, order);
}

}  // namespace eqlines
