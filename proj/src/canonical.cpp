#include "eqlines/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Bit matrix for fast adjacency tests at small n.
struct Adjacency {
  int n;
  std::vector<std::uint32_t> rows;

  explicit Adjacency(const Graph& g) : n(g.n()), rows(static_cast<std::size_t>(g.n()), 0) {
    for (const auto& [u, v] : g.edges()) {
      rows[static_cast<std::size_t>(u)] |= 1u << v;
      rows[static_cast<std::size_t>(v)] |= 1u << u;
    }
  }
  bool edge(int u, int v) const { return (rows[static_cast<std::size_t>(u)] >> v) & 1u; }
};

// Splits cells by neighbor counts into every cell until stable. The order of
// the new cells is determined by the count signatures, so the procedure
// commutes with relabeling.
Cells refine(const Adjacency& adj, Cells cells) {
  for (;;) {
    std::vector<std::uint32_t> masks;
    masks.reserve(cells.size());
    for (const auto& cell : cells) {
      std::uint32_t m = 0;
      for (Vertex v : cell) m |= 1u << v;
      masks.push_back(m);
    }
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<Vertex>> groups;
      for (Vertex v : cell) {
        std::vector<int> sig(masks.size());
        for (std::size_t c = 0; c < masks.size(); ++c) {
          sig[c] = __builtin_popcount(adj.rows[static_cast<std::size_t>(v)] & masks[c]);
        }
        groups[sig].push_back(v);
      }
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

// All members are interchangeable: the cell is a clique or independent set
// and its members see the same vertices outside it.
bool is_twin_cell(const Adjacency& adj, const std::vector<Vertex>& cell) {
  std::uint32_t inside = 0;
  for (Vertex v : cell) inside |= 1u << v;
  const std::uint32_t outside0 = adj.rows[static_cast<std::size_t>(cell[0])] & ~inside;
  const bool clique = adj.edge(cell[0], cell[1]);
  for (Vertex v : cell) {
    const std::uint32_t row = adj.rows[static_cast<std::size_t>(v)];
    if ((row & ~inside) != outside0) return false;
    const std::uint32_t expected = clique ? inside & ~(1u << v) : 0u;
    if ((row & inside) != expected) return false;
  }
  return true;
}

std::string leaf_bits(const Adjacency& adj, const Cells& cells) {
  std::vector<Vertex> order;
  for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
  std::string bits;
  bits.reserve(static_cast<std::size_t>(adj.n * (adj.n - 1) / 2));
  for (int i = 0; i < adj.n; ++i) {
    for (int j = i + 1; j < adj.n; ++j) bits.push_back(adj.edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? '1' : '0');
  }
  return bits;
}

void search(const Adjacency& adj, Cells cells, std::string& best) {
  cells = refine(adj, std::move(cells));
  std::size_t target = cells.size();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() < 2 || is_twin_cell(adj, cells[c])) continue;
    if (target == cells.size() || cells[c].size() < cells[target].size()) target = c;
  }
  if (target == cells.size()) {
    std::string bits = leaf_bits(adj, cells);
    if (best.empty() || bits < best) best = std::move(bits);
    return;
  }
  for (Vertex v : cells[target]) {
    Cells child;
    child.reserve(cells.size() + 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != target) {
        child.push_back(cells[c]);
        continue;
      }
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex x : cells[c]) {
        if (x != v) rest.push_back(x);
      }
      child.push_back(std::move(rest));
    }
    search(adj, std::move(child), best);
  }
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.n() > 32) throw ParameterError("canonical form supports at most 32 vertices");
  if (g.n() <= 1) return g;
  const Adjacency adj(g);
  Cells start(1);
  for (Vertex v = 0; v < g.n(); ++v) start[0].push_back(v);
  std::string best;
  search(adj, std::move(start), best);
  return from_adjacency_bits(g.n(), best);
}

std::string canonical_key(const Graph& g) { return to_compact(canonical_form(g)); }

namespace {

bool by_edges_then_bits(const Graph& a, const Graph& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return adjacency_bits(a) < adjacency_bits(b);
}

std::vector<Graph> extend(const std::vector<Graph>& smaller, int n) {
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  for (const Graph& base : smaller) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> edges = base.edges();
      for (int u = 0; u < n - 1; ++u) {
        if ((mask >> u) & 1u) edges.emplace_back(u, n - 1);
      }
      Graph canon = canonical_form(Graph(n, std::move(edges)));
      if (seen.insert(adjacency_bits(canon)).second) out.push_back(std::move(canon));
    }
  }
  std::sort(out.begin(), out.end(), by_edges_then_bits);
  return out;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1) throw ParameterError("graph order must be positive");
  if (n > kMaxEnumeratedOrder) {
    throw BudgetError("isomorphism-class enumeration is limited to n <= " + std::to_string(kMaxEnumeratedOrder));
  }
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> cache{{}, {Graph(1)}};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    const int next = static_cast<int>(cache.size());
    cache.push_back(extend(cache.back(), next));
  }
  return cache[static_cast<std::size_t>(n)];
}

std::vector<Graph> nonisomorphic_connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : nonisomorphic_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace eqlines
