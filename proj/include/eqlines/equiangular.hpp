#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqlines/graph.hpp"
#include "eqlines/rational_matrix.hpp"

namespace eqlines {

inline constexpr double kConstructionTol = 1e-9;
inline constexpr double kVerificationTol = 1e-8;

// Unit vectors in R^r with pairwise inner products +alpha or -alpha.
// alpha stays exact; only the coordinates are floating point.
struct SphericalCode {
  int r = 0;
  Rational alpha;
  std::vector<std::vector<double>> vectors;

  int n() const noexcept { return static_cast<int>(vectors.size()); }
};

struct CodeCheck {
  bool ok = true;
  double worst_norm_error = 0.0;
  int worst_norm_index = -1;
  double worst_inner_error = 0.0;  // distance of |<u,v>| from alpha
  std::pair<int, int> worst_pair{-1, -1};
  std::string message;  // names the worst offender when !ok
};

// Dimensions, norms within norm_tol of 1, and |<u,v>| within inner_tol of alpha.
CodeCheck verify_code(const SphericalCode& c, double norm_tol = kVerificationTol, double inner_tol = kVerificationTol);

// Unit diagonal, off-diagonal entries +alpha / -alpha, exact.
struct GramMatrix {
  Rational alpha;
  RationalMatrix m;
};

// M = (1 - alpha) I + alpha J - 2 alpha A. Throws ParameterError unless 0 < alpha < 1.
GramMatrix gram_from_graph(const Graph& g, const Rational& alpha);

// Edge uv iff <u,v> is within tol of -alpha. Throws CodeIntegrityError when a
// norm or an inner product is off.
Graph graph_from_code(const SphericalCode& c, double tol = kVerificationTol);

// Vectors in R^r whose Gram matrix is m. PSD and rank <= r are certified
// exactly first; InfeasibleError carries the exact witness otherwise. The
// realization uses the top rank(m) eigenpairs in descending order, each
// eigenvector signed so its first nonzero coordinate is positive, then pads
// with zeros up to r.
SphericalCode realize_code(const GramMatrix& m, int r);

// r - 1 + floor((r - 1) / (k - 1))
long long construction_count(long long k, long long r);

// floor((r-1)/(k-1)) copies of K_k plus isolated vertices, r - 1 + t vertices.
Graph tight_construction_graph(int k, int r);
// The code of that graph at alpha = 1/(2k-1). Throws ParameterError unless
// k >= 2 and r >= k.
SphericalCode tight_construction(int k, int r);

// Negates the vectors indexed by s.
SphericalCode switch_code(const SphericalCode& c, std::span<const int> s);

struct NormalizedCode {
  SphericalCode code;  // anchor at index 0
  Graph graph;         // corresponding graph of `code`
  std::vector<int> switched;  // T, as indices into the code
  int anchor_degree = 0;
  int max_degree_without_anchor = 0;  // maximum degree of graph - anchor
  Rational low_threshold;             // 1/alpha^4
  Rational degree_cap;                // 6/alpha^4
};

// Re-signs every vector to make <v, w> = +alpha with the first vector w as
// anchor, then switches T = {u : |C| - 1 - d(u) <= 1/alpha^4} in the graph of
// the remaining vectors C. Throws CodeIntegrityError when a vertex of C breaks
// the degree dichotomy d(u) <= 1/alpha^4 or d(u) >= |C| - 1 - 1/alpha^4, when
// |T| > 4/alpha^4, or when the final degree exceeds 6/alpha^4.
NormalizedCode normalize_max_degree(const SphericalCode& c);

struct BetaResult {
  double value = 0.0;
  // Set when a candidate was supplied: whether ker(A - candidate I) meets 1^perp.
  std::optional<bool> is_eigenvalue_exact;
};

// max x^T A x / x^T x over nonzero x orthogonal to the all-ones vector.
// Requires n >= 2.
BetaResult beta(const Graph& g, const std::optional<Rational>& candidate = std::nullopt);

// (1 - alpha) / (2 alpha)
Rational beta_target(const Rational& alpha);

enum class Regime { main, superpolynomial };
std::string_view to_string(Regime r);

struct LinesBoundReport {
  long long r = 0;
  Rational alpha;
  // r - 1 + floor((r - 1) 2 alpha / (1 - alpha))
  BigInt term_construction;
  // Set when alpha = 1/(2k-1).
  std::optional<long long> k;

  // Lemma-style two-branch bound, for a concrete code.
  std::optional<long long> n;
  std::optional<long long> mc_value;
  std::optional<Rational> branch_construction;  // (r-1) 2 alpha / (1 - alpha)
  std::optional<long long> branch_multiplicity;  // MC + 2
  std::optional<Rational> bound;                 // r - 1 + max of the branches
  std::optional<bool> holds;
  std::optional<bool> construction_branch_holds;
  std::optional<bool> multiplicity_branch_holds;

  // Theorem-style bound.
  std::optional<Regime> regime;
  double value = 0.0;
  std::optional<BigInt> exact_value;
  bool hypothesis_met = false;
  std::string hypothesis;
};

// n <= r - 1 + max{(r - 1) 2 alpha / (1 - alpha), mc_value + 2} for n = |c|.
LinesBoundReport lines_to_multiplicity_bound(const SphericalCode& c, long long mc_value);

// main: floor((1 + 2 alpha / (1 - alpha)) (r - 1)), hypothesis r >= 2^(1/alpha^20).
// superpolynomial: r + r max{66 log^2(log_{1/alpha} r) / log_{1/alpha} r,
// 17 alpha log(2/alpha)}, hypothesis r >= 1/alpha^4. Logs are base 2.
LinesBoundReport max_lines_bound(long long r, const Rational& alpha, Regime regime);

nlohmann::json to_json(const LinesBoundReport& report);

// Throws ParameterError unless 0 < alpha < 1.
void check_alpha(const Rational& alpha);

}  // namespace eqlines
