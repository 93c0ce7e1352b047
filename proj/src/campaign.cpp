#include "eqlines/campaign.hpp"

#include <algorithm>

#include "eqlines/canonical.hpp"
#include "eqlines/errors.hpp"
#include "eqlines/graph_families.hpp"
#include "eqlines/parallel.hpp"
#include "eqlines/spectrum.hpp"

namespace eqlines {

void CampaignSummary::add(const BoundCertificate& cert) {
  switch (cert.verdict()) {
    case Verdict::holds: ++holds; break;
    case Verdict::vacuous: ++vacuous; break;
    case Verdict::violated: ++violated; break;
  }
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

std::vector<Vertex> members(std::uint32_t mask, int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1u) out.push_back(v);
  }
  return out;
}

std::uint32_t neighborhood_mask(const Graph& g, std::uint32_t set) {
  std::uint32_t out = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (!((set >> v) & 1u)) continue;
    for (Vertex u : g.neighbors(v)) out |= 1u << u;
  }
  return out;
}

void disjoint_pairs(const Graph& g, std::vector<BoundCertificate>& out) {
  const int n = g.n();
  if (n > 12) throw BudgetError("exhaustive disjoint-support pairs are limited to n <= 12");
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t u = 1; u <= full; ++u) {
    const std::uint32_t blocked = u | neighborhood_mask(g, u);
    const std::uint32_t free = full & ~blocked;
    // Submasks v of the free vertices with v > u give each unordered pair once.
    for (std::uint32_t v = free; v != 0; v = (v - 1) & free) {
      if (v > u) out.push_back(check_disjoint_supports(g, members(u, n), members(v, n)));
    }
  }
}

void connected_subsets(const Graph& g, std::vector<BoundCertificate>& out) {
  const int n = g.n();
  if (n > 12) throw BudgetError("exhaustive induced subgraphs are limited to n <= 12");
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const auto h = members(s, n);
    if (!is_connected(induced_subgraph(g, h).graph)) continue;
    out.push_back(check_small_eval(g, h));
  }
}

}  // namespace

std::vector<BoundCertificate> statement_instances(const Graph& g, StatementId id, const CampaignOptions& options,
                                                  std::uint64_t graph_index) {
  std::vector<BoundCertificate> out;
  const int n = g.n();
  const bool connected = is_connected(g);
  Rng rng(mix_seed(options.seed ^ mix_seed(graph_index * 64 + static_cast<std::uint64_t>(id))));
  switch (id) {
    case StatementId::partial_net:
      if (g.edge_count() == 0) break;
      for (int i = 0; i < options.random_instances; ++i) {
        if (auto inst = random_partial_net_instance(rng, g)) out.push_back(check_partial_net(*inst));
      }
      break;
    case StatementId::disjoint_supports:
      if (connected && n >= 2) disjoint_pairs(g, out);
      break;
    case StatementId::small_eval:
      if (connected && n >= 2) connected_subsets(g, out);
      break;
    case StatementId::ball_cover:
      if (!connected) break;
      for (int r : {1, 2}) {
        for (double b : {2.0, 3.0}) out.push_back(ball_cover_reduce(g, r, b).certificate);
      }
      for (int i = 0; i < options.random_instances; ++i) {
        const int r = uniform_int(rng, 1, 3);
        const double b = 1.0 + uniform_unit(rng) * n;
        out.push_back(ball_cover_reduce(g, r, b).certificate);
      }
      break;
    case StatementId::random_deletion:
      if (n < 2) break;
      for (auto [ell, s] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        out.push_back(random_support_deletion(g, ell, s, rng()).certificate);
      }
      for (int i = 0; i < options.random_instances; ++i) {
        const int ell = uniform_int(rng, 2, 4);
        const int s = uniform_int(rng, ell, ell + 2);
        out.push_back(random_support_deletion(g, ell, s, rng()).certificate);
      }
      break;
    case StatementId::interlacing:
      for (int lam = -2; lam <= 2; ++lam) {
        for (Vertex a = 0; a < n; ++a) {
          out.push_back(interlacing_check(g, std::vector<Vertex>{a}, Rational(lam)));
          for (Vertex b = a + 1; b < n; ++b) out.push_back(interlacing_check(g, std::vector<Vertex>{a, b}, Rational(lam)));
        }
      }
      break;
    case StatementId::walk_count:
      if (n == 0) break;
      for (int r = 1; r <= 3; ++r) out.push_back(walk_count_identity(g, r));
      break;
    case StatementId::dense_regime:
    case StatementId::combined:
      if (n >= 2) out.push_back(evaluate_bounds(g, id, {std::nullopt, options.epsilon}));
      break;
    case StatementId::connected_corollary:
      if (n >= 2 && connected) out.push_back(evaluate_bounds(g, id));
      break;
  }
  return out;
}

CampaignSummary run_campaign(const std::vector<Graph>& graphs, const std::vector<StatementId>& ids,
                             const CampaignOptions& options, const CertificateSink& sink) {
  CampaignSummary summary;
  constexpr std::size_t kBlock = 64;
  for (std::size_t start = 0; start < graphs.size(); start += kBlock) {
    const std::size_t count = std::min(kBlock, graphs.size() - start);
    const auto batches = parallel_map<std::vector<BoundCertificate>>(count, [&](std::size_t i) {
      std::vector<BoundCertificate> certs;
      for (StatementId id : ids) {
        auto part = statement_instances(graphs[start + i], id, options, start + i);
        std::move(part.begin(), part.end(), std::back_inserter(certs));
      }
      return certs;
    });
    for (const auto& batch : batches) {
      for (const auto& cert : batch) {
        summary.add(cert);
        if (sink) sink(cert);
      }
    }
  }
  return summary;
}

std::vector<Graph> family(const std::string& name, int n_max, std::uint64_t seed, int count) {
  if (n_max < 1) throw ParameterError("n_max must be positive");
  std::vector<Graph> out;
  if (name == "all" || name == "all-connected") {
    for (int n = 1; n <= n_max; ++n) {
      auto part = name == "all" ? nonisomorphic_graphs(n) : nonisomorphic_connected_graphs(n);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }
  if (name == "random" || name == "random-connected") {
    if (n_max < 2) throw ParameterError("random families need n_max >= 2");
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
      const int n = uniform_int(rng, 2, n_max);
      const double p = 0.1 + 0.6 * uniform_unit(rng);
      out.push_back(name == "random" ? families::random_graph(rng, n, p) : families::random_connected(rng, n, p));
    }
    return out;
  }
  if (name == "cliques") {
    for (int k = 2; k <= n_max; ++k) {
      for (int m = 2; m * k <= n_max; ++m) out.push_back(families::clique_union(m, k));
    }
    return out;
  }
  if (name == "cycles") {
    for (int n = 3; n <= n_max; ++n) out.push_back(families::cycle(n));
    return out;
  }
  if (name == "paths") {
    for (int n = 1; n <= n_max; ++n) out.push_back(families::path(n));
    return out;
  }
  throw ParameterError("unknown family '" + name + "' (all, all-connected, random, random-connected, cliques, cycles, paths)");
}

}  // namespace eqlines
