#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "eqlines/equiangular.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

// Exact feasibility of a corresponding graph: gram_from_graph(g, alpha) is PSD
// with rank <= r.
struct Feasibility {
  bool feasible = false;
  std::size_t rank = 0;
  bool psd = false;
  // x with x^T M x < 0 when not PSD.
  RationalVector witness;
  Rational witness_value;
};

Feasibility feasibility(const Graph& g, const Rational& alpha, int r);
inline bool feasible(const Graph& g, const Rational& alpha, int r) { return feasibility(g, alpha, r).feasible; }

inline constexpr int kSearchMaxN = 9;

struct SearchTask {
  int r = 2;
  Rational alpha{1, 3};
  int n_max = 4;
  // Isomorph rejection; defaults to on when n_max >= 7.
  std::optional<bool> canonicalize;
  // One candidate per switching class (vertex 0 isolated); when off every
  // graph is a candidate.
  bool switching_reduction = true;

  bool resolved_canonicalize() const { return canonicalize.value_or(n_max >= 7); }
};

struct SearchResult {
  int best_n = 0;
  Graph witness_graph;
  SphericalCode witness_code;
  bool exhausted = false;  // every candidate at n = best_n + 1 .. n_max was rejected
  std::vector<std::size_t> candidates_per_n;  // index n
};

// Throws BudgetError before any work when the task exceeds the enumeration
// budget: n_max <= 9; n_max <= 8 without isomorph rejection; n_max <= 6 with
// neither isomorph rejection nor switching reduction.
void check_budget(const SearchTask& task);

// Scans n = n_max down to 1 and stops at the first feasible n. Within an n,
// candidates are ordered by edge count then encoding, evaluated in parallel,
// and the first feasible one in that order is the witness.
SearchResult max_lines(const SearchTask& task);

enum class ClassMode { labeled, isomorphism };

// One graph per switching class, the one with vertex 0 isolated (the least
// encoding in its class). Labeled mode lists classes of labeled graphs
// (n <= 7); isomorphism mode lists classes up to relabeling (n <= 9), with the
// least canonical encoding over the class as representative.
std::vector<Graph> switching_class_reps(int n, ClassMode mode = ClassMode::labeled);

// Key shared by exactly the graphs that are switching equivalent up to relabeling.
std::string switching_class_key(const Graph& g);

// Graph on n vertices with vertex 0 isolated and h on vertices 1..n-1.
Graph with_isolated_vertex(const Graph& h);

nlohmann::json to_json(const SearchTask& task);

}  // namespace eqlines
