#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eqlines/certificate.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/random.hpp"
#include "eqlines/spectrum.hpp"

namespace eqlines {

// lambda_2 with the size of its eigenvalue cluster.
struct SecondEigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  double tol = 0.0;  // window used when counting this value in other graphs
};

// Requires n >= 2.
SecondEigenvalue second_eigenvalue(const Graph& g);

// Number of closed walks of `length` starting at each vertex, i.e. the
// diagonal of A^length, with arbitrary-precision integers.
std::vector<BigInt> closed_walk_counts(const Graph& g, int length);
BigInt closed_walk_total(const Graph& g, int length);

// Vertex-set description of the partial-net setting: F = K[f], with f split
// into C (vertices near the outside of F) and L.
struct PartialNetInstance {
  Graph k;
  std::vector<Vertex> f;
  std::vector<Vertex> c;
  std::vector<Vertex> l;
  int ell = 1;
  double eps = 1.0;
};

// Checks lambda_1(F)^(2 ell) <= lambda_1(K)^(2 ell) - eps^2. The instance's
// conditions are verified and recorded as hypotheses. Throws StructureError
// when K has no edges.
BoundCertificate check_partial_net(const PartialNetInstance& inst);

// Random valid instance on a given K (K needs an edge): F is a ball of K that
// misses at least one vertex, C is drawn from the vertices of F within ell of
// the outside, and eps is set below the largest admissible value.
// Returns nullopt when no valid instance exists on this K.
std::optional<PartialNetInstance> random_partial_net_instance(Rng& rng, const Graph& k);

// Two disjoint vertex sets with no edges between them in a connected graph:
// lambda_1(G[U]) < lambda_2 or lambda_1(G[V]) < lambda_2 or both equal lambda_2.
BoundCertificate check_disjoint_supports(const Graph& g, std::span<const Vertex> u, std::span<const Vertex> v);

// h is a vertex set inducing H. Hypothesis lambda_1(H) > lambda_2(G);
// conclusion m_G(lambda_2) <= |H| * Delta(G).
BoundCertificate check_small_eval(const Graph& g, std::span<const Vertex> h);

struct BallCoverResult {
  std::vector<Vertex> removed_centers;
  BoundCertificate certificate;
};

// Greedy maximal family of disjoint radius-r balls of size >= b (centers
// scanned by ascending id), the centers deleted, and the interlacing step
// m_G(lambda_2) <= |N| + m_{G\N}(lambda_2) checked. The ball-cover theorem's
// own hypothesis and conclusion are evaluated and recorded; the conclusion is
// only required when the hypothesis holds.
BallCoverResult ball_cover_reduce(const Graph& g, int r, double b);

// trace(A^(2R)) computed by integer matrix powers, compared with the power
// sum of the numeric spectrum (relative 1e-6) and with the per-vertex counts
// ||A^R e_v||^2; also m_G(lambda_2) * lambda_2^(2R) <= trace(A^(2R)).
BoundCertificate walk_count_identity(const Graph& g, int big_r);

struct DeletionResult {
  std::vector<Vertex> removed;
  BoundCertificate certificate;
};

// Deletes t = ceil(n log2(ell) / ell) uniformly random vertices (seeded),
// records closed 2S-walks of the remainder against the short/long support
// bound, and checks m_G(lambda_2) <= t + m_H(lambda_2).
// Throws ParameterError unless 2 <= ell <= S.
DeletionResult random_support_deletion(const Graph& g, int ell, int big_s, std::uint64_t seed);

struct BoundOptions {
  // Use exact multiplicity at this value in place of the numeric lambda_2.
  std::optional<Rational> lambda2;
  // Exponent for the n/(lambda_2+1) + n^eps form of the combined bound.
  std::optional<double> epsilon;
};

// Evaluates the closed-form multiplicity bounds: dense_regime, combined or
// connected_corollary. Other ids throw ParameterError.
BoundCertificate evaluate_bounds(const Graph& g, StatementId which, const BoundOptions& options = {});

}  // namespace eqlines
