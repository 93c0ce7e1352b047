#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqlines/bounds.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

struct CampaignOptions {
  std::uint64_t seed = 1;
  // Seeded random instances per graph for partial_net, ball_cover and random_deletion.
  int random_instances = 2;
  std::optional<double> epsilon;  // passed to the combined bound
};

struct CampaignSummary {
  std::size_t holds = 0;
  std::size_t vacuous = 0;
  std::size_t violated = 0;

  void add(const BoundCertificate& cert);
  std::size_t total() const { return holds + vacuous + violated; }
};

// Every instance of `id` derived from g, in a fixed order:
//   partial_net        random valid instances on K = g
//   disjoint_supports  all unordered pairs (U, V) of non-empty disjoint sets with no crossing edge
//   small_eval         every connected induced subgraph H
//   ball_cover         r in {1, 2} with B in {2, 3} plus random (r, B)
//   random_deletion    (ell, S) in {(2,2), (2,3), (3,3)} plus random seeds
//   interlacing        every 1- and 2-vertex deletion at lam in {-2, ..., 2}, exact
//   walk_count         R in {1, 2, 3}
//   dense_regime, combined, connected_corollary: one evaluation
// Statements whose preconditions g does not meet (connectivity, n >= 2,
// at least one edge) yield no instances. `graph_index` decorrelates seeds
// across the graphs of a campaign.
std::vector<BoundCertificate> statement_instances(const Graph& g, StatementId id, const CampaignOptions& options,
                                                  std::uint64_t graph_index = 0);

using CertificateSink = std::function<void(const BoundCertificate&)>;

// Runs every statement over every graph, computing graphs in parallel
// (EQLINES_THREADS) and delivering certificates to `sink` in input order.
CampaignSummary run_campaign(const std::vector<Graph>& graphs, const std::vector<StatementId>& ids,
                             const CampaignOptions& options, const CertificateSink& sink = {});

// Named generators: "all" and "all-connected" (isomorphism classes on
// 1..n_max vertices, n_max <= 8), "random" and "random-connected" (`count`
// seeded graphs on 2..n_max vertices), "cliques" (m K_k with 2 <= m, k and
// mk <= n_max), "cycles", "paths". Throws ParameterError for unknown names.
std::vector<Graph> family(const std::string& name, int n_max, std::uint64_t seed = 1, int count = 100);

// SplitMix64 step, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace eqlines
