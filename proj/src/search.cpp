#include "eqlines/search.hpp"

#include <algorithm>
#include <map>

#include "eqlines/canonical.hpp"
#include "eqlines/errors.hpp"
#include "eqlines/parallel.hpp"

namespace eqlines {

Feasibility feasibility(const Graph& g, const Rational& alpha, int r) {
  const GramMatrix gm = gram_from_graph(g, alpha);
  const PsdCertificate cert = psd_certificate(gm.m);
  Feasibility out;
  out.psd = cert.is_psd;
  if (!cert.is_psd) {
    out.witness = cert.witness;
    out.witness_value = cert.witness_value;
    out.rank = rank(gm.m);
    return out;
  }
  out.rank = cert.rank;
  out.feasible = cert.rank <= static_cast<std::size_t>(r);
  return out;
}

Graph with_isolated_vertex(const Graph& h) {
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + 1, v + 1);
  return Graph(h.n() + 1, std::move(edges));
}

namespace {

bool by_edges_then_bits(const Graph& a, const Graph& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return adjacency_bits(a) < adjacency_bits(b);
}

std::vector<Graph> all_labeled(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::string bits(static_cast<std::size_t>(pairs), '0');
    for (int b = 0; b < pairs; ++b) {
      if ((mask >> b) & 1u) bits[static_cast<std::size_t>(b)] = '1';
    }
    out.push_back(from_adjacency_bits(n, bits));
  }
  std::sort(out.begin(), out.end(), by_edges_then_bits);
  return out;
}

// Switch the neighborhood of v away so that v becomes isolated.
Graph isolate(const Graph& g, Vertex v) { return switch_graph(g, g.neighbors(v)); }

std::vector<Graph> candidates(const SearchTask& task, int n) {
  const bool canon = task.resolved_canonicalize();
  if (task.switching_reduction) {
    return switching_class_reps(n, canon ? ClassMode::isomorphism : ClassMode::labeled);
  }
  return canon ? nonisomorphic_graphs(n) : all_labeled(n);
}

}  // namespace

void check_budget(const SearchTask& task) {
  check_alpha(task.alpha);
  if (task.r < 1) throw ParameterError("dimension r must be positive");
  if (task.n_max < 1) throw ParameterError("n_max must be positive");
  if (task.n_max > kSearchMaxN) {
    throw BudgetError("n_max = " + std::to_string(task.n_max) + " exceeds the exhaustive budget n_max <= " + std::to_string(kSearchMaxN));
  }
  const bool canon = task.resolved_canonicalize();
  if (task.switching_reduction && !canon && task.n_max > 7) {
    throw BudgetError("labeled switching-class enumeration is limited to n_max <= 7; enable canonicalize");
  }
  if (!task.switching_reduction && canon && task.n_max > kMaxEnumeratedOrder) {
    throw BudgetError("isomorphism-class enumeration without switching reduction is limited to n_max <= 8");
  }
  if (!task.switching_reduction && !canon && task.n_max > 6) {
    throw BudgetError("raw labeled enumeration is limited to n_max <= 6");
  }
}

SearchResult max_lines(const SearchTask& task) {
  check_budget(task);
  SearchResult result;
  result.candidates_per_n.assign(static_cast<std::size_t>(task.n_max) + 1, 0);
  constexpr std::size_t kBlock = 256;
  for (int n = task.n_max; n >= 1; --n) {
    const std::vector<Graph> list = candidates(task, n);
    result.candidates_per_n[static_cast<std::size_t>(n)] = list.size();
    for (std::size_t start = 0; start < list.size(); start += kBlock) {
      const std::size_t count = std::min(kBlock, list.size() - start);
      const auto ok = parallel_map<char>(count, [&](std::size_t i) -> char {
        return feasible(list[start + i], task.alpha, task.r) ? 1 : 0;
      });
      const auto hit = std::find(ok.begin(), ok.end(), 1);
      if (hit == ok.end()) continue;
      const Graph& g = list[start + static_cast<std::size_t>(hit - ok.begin())];
      result.best_n = n;
      result.witness_graph = g;
      result.witness_code = realize_code(gram_from_graph(g, task.alpha), task.r);
      result.exhausted = true;
      return result;
    }
  }
  result.exhausted = true;
  return result;
}

std::string switching_class_key(const Graph& g) {
  if (g.n() == 0) return to_compact(g);
  std::string best;
  for (Vertex v = 0; v < g.n(); ++v) {
    std::string bits = adjacency_bits(canonical_form(isolate(g, v)));
    if (v == 0 || bits < best) best = std::move(bits);
  }
  return std::to_string(g.n()) + ":" + best;
}

std::vector<Graph> switching_class_reps(int n, ClassMode mode) {
  if (n < 1) throw ParameterError("graph order must be positive");
  std::vector<Graph> out;
  if (mode == ClassMode::labeled) {
    if (n > 7) throw BudgetError("labeled switching classes are listed for n <= 7");
    if (n == 1) return {Graph(1)};
    for (const Graph& h : all_labeled(n - 1)) out.push_back(with_isolated_vertex(h));
    std::sort(out.begin(), out.end(), by_edges_then_bits);
    return out;
  }
  if (n > kMaxEnumeratedOrder + 1) {
    throw BudgetError("switching classes up to isomorphism are listed for n <= " + std::to_string(kMaxEnumeratedOrder + 1));
  }
  if (n == 1) return {Graph(1)};
  std::map<std::string, Graph> reps;
  for (const Graph& h : nonisomorphic_graphs(n - 1)) {
    const Graph g = with_isolated_vertex(h);
    std::string key = switching_class_key(g);
    if (reps.count(key)) continue;
    const std::string bits = key.substr(key.find(':') + 1);
    reps.emplace(std::move(key), from_adjacency_bits(n, bits));
  }
  for (auto& [key, g] : reps) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), by_edges_then_bits);
  return out;
}

nlohmann::json to_json(const SearchTask& task) {
  return {
      {"r", task.r},
      {"alpha", to_string(task.alpha)},
      {"n_max", task.n_max},
      {"canonicalize", task.resolved_canonicalize()},
      {"switching_reduction", task.switching_reduction},
  };
}

}  // namespace eqlines
