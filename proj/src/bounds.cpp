#include "eqlines/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {

using BigMatrix = std::vector<BigInt>;  // row-major n x n

BigMatrix adjacency_big(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  BigMatrix a(n * n, 0);
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
    a[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
  }
  return a;
}

BigMatrix multiply(const BigMatrix& x, const BigMatrix& y, std::size_t n) {
  BigMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& xik = x[i * n + k];
      if (sgn(xik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += xik * y[k * n + j];
    }
  }
  return out;
}

BigMatrix matrix_power(const Graph& g, int k) {
  const auto n = static_cast<std::size_t>(g.n());
  BigMatrix result(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1;
  BigMatrix base = adjacency_big(g);
  while (k > 0) {
    if (k & 1) result = multiply(result, base, n);
    k >>= 1;
    if (k > 0) base = multiply(base, base, n);
  }
  return result;
}

double log2_base(double x, double base) { return std::log2(x) / std::log2(base); }

double numeric_tol(double scale) { return 1e-9 * std::max(1.0, std::abs(scale)); }

std::vector<Vertex> sorted_unique(std::span<const Vertex> s) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_range(const Graph& g, std::span<const Vertex> s, const char* what) {
  for (Vertex v : s) {
    if (v < 0 || v >= g.n()) {
      throw ParameterError(std::string(what) + " contains vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.n() - 1));
    }
  }
}

double lambda1_of(const Graph& g, std::span<const Vertex> s) {
  return largest_eigenvalue(induced_subgraph(g, std::vector<Vertex>(s.begin(), s.end())).graph);
}

// Count of eigenvalues of h near lam, tolerant to the graph being empty.
long long count_near(const Graph& h, double lam, double tol) {
  if (h.n() == 0) return 0;
  return static_cast<long long>(spectrum(h).multiplicity(lam, tol));
}

}  // namespace

SecondEigenvalue second_eigenvalue(const Graph& g) {
  if (g.n() < 2) throw ParameterError("lambda_2 needs at least two vertices");
  const Spectrum sp = spectrum(g);
  const double l2 = sp.lambda2();
  for (const auto& c : sp.clusters()) {
    if (c.first <= 1 && 1 < c.first + c.count) {
      return {l2, c.count, 1e-8 * std::max(1.0, std::abs(sp.lambda1()))};
    }
  }
  throw std::logic_error("lambda_2 belongs to no cluster");
}

std::vector<BigInt> closed_walk_counts(const Graph& g, int length) {
  if (length < 0) throw ParameterError("walk length must be non-negative");
  const auto n = static_cast<std::size_t>(g.n());
  const BigMatrix p = matrix_power(g, length);
  std::vector<BigInt> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = p[i * n + i];
  return diag;
}

BigInt closed_walk_total(const Graph& g, int length) {
  BigInt total = 0;
  for (const auto& c : closed_walk_counts(g, length)) total += c;
  return total;
}

// ---------------------------------------------------------------------------

BoundCertificate check_partial_net(const PartialNetInstance& inst) {
  const Graph& k = inst.k;
  if (k.n() == 0 || k.edge_count() == 0) throw StructureError("partial net needs a graph K with at least one edge");
  check_range(k, inst.f, "F");
  check_range(k, inst.c, "C");
  check_range(k, inst.l, "L");

  const auto f = sorted_unique(inst.f);
  const auto c = sorted_unique(inst.c);
  const auto l = sorted_unique(inst.l);

  nlohmann::json inputs = {{"K", to_compact(k)}, {"F", f}, {"C", c}, {"L", l}, {"ell", inst.ell}, {"eps", inst.eps}};
  BoundCertificate cert(StatementId::partial_net, std::move(inputs));

  std::vector<Vertex> joined;
  std::set_union(c.begin(), c.end(), l.begin(), l.end(), std::back_inserter(joined));
  std::vector<Vertex> common;
  std::set_intersection(c.begin(), c.end(), l.begin(), l.end(), std::back_inserter(common));

  std::vector<char> in_f(static_cast<std::size_t>(k.n()), 0);
  for (Vertex v : f) in_f[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < k.n(); ++v) {
    if (!in_f[static_cast<std::size_t>(v)]) outside.push_back(v);
  }
  const auto dist = distances_to_set(k, outside);
  const bool near = std::all_of(c.begin(), c.end(), [&](Vertex v) {
    const int d = dist[static_cast<std::size_t>(v)];
    return d >= 0 && d <= inst.ell;
  });

  const double lam_k = largest_eigenvalue(k);
  const double lam_f = lambda1_of(k, f);
  const double lam_fl = l.empty() ? 0.0 : lambda1_of(k, l);
  cert.set("lambda1(K)", lam_k);
  cert.set("lambda1(F)", lam_f);
  if (!l.empty()) cert.set("lambda1(F[L])", lam_fl);

  const bool eps_ok = (inst.eps > 0 && inst.eps <= 0.25) || (l.empty() && inst.eps == 1.0);
  const bool split_ok = l.empty() || lam_fl <= lam_f * (1 - 4 * inst.eps) + numeric_tol(lam_f);

  cert.hypothesis("F has a vertex", !f.empty());
  cert.hypothesis("C and L partition F", joined == f && common.empty());
  cert.hypothesis("ell >= 1", inst.ell >= 1);
  cert.hypothesis("0 < eps <= 1/4, or eps = 1 with L empty", eps_ok);
  cert.hypothesis("C within ell of V(K) \\ F", near);
  cert.hypothesis("lambda1(F[L]) <= lambda1(F)(1 - 4 eps)", split_ok);

  const double lhs = std::pow(lam_f, 2 * inst.ell);
  const double top = std::pow(lam_k, 2 * inst.ell);
  const double rhs = top - inst.eps * inst.eps;
  cert.set("lambda1(F)^(2 ell)", lhs);
  cert.set("lambda1(K)^(2 ell) - eps^2", rhs);
  cert.require_le("partial net growth", "lambda1(F)^(2 ell)", "lambda1(K)^(2 ell) - eps^2", numeric_tol(top));
  return cert;
}

std::optional<PartialNetInstance> random_partial_net_instance(Rng& rng, const Graph& k) {
  if (k.n() < 2 || k.edge_count() == 0) return std::nullopt;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Vertex center = uniform_int(rng, 0, k.n() - 1);
    const int radius = uniform_int(rng, 0, 3);
    const Ball b = ball(k, center, radius);
    if (static_cast<int>(b.vertices.size()) == k.n()) continue;

    PartialNetInstance inst{k, b.vertices, {}, {}, uniform_int(rng, 1, 3), 1.0};
    std::vector<Vertex> outside;
    std::vector<char> in_f(static_cast<std::size_t>(k.n()), 0);
    for (Vertex v : inst.f) in_f[static_cast<std::size_t>(v)] = 1;
    for (Vertex v = 0; v < k.n(); ++v) {
      if (!in_f[static_cast<std::size_t>(v)]) outside.push_back(v);
    }
    const auto dist = distances_to_set(k, outside);
    for (Vertex v : inst.f) {
      const int d = dist[static_cast<std::size_t>(v)];
      const bool near = d >= 0 && d <= inst.ell;
      if (near && bernoulli(rng, 0.7)) {
        inst.c.push_back(v);
      } else {
        inst.l.push_back(v);
      }
    }
    if (inst.l.empty()) {
      inst.eps = bernoulli(rng, 0.5) ? 1.0 : 0.25 * (0.05 + 0.95 * uniform_unit(rng));
      return inst;
    }
    const double lam_f = lambda1_of(k, inst.f);
    const double lam_l = lambda1_of(k, inst.l);
    // lambda1(F[L]) <= lambda1(F)(1 - 4 eps)  <=>  eps <= (1 - ratio) / 4
    double eps_max = 0.25;
    if (lam_f > 0) eps_max = std::min(0.25, (1.0 - lam_l / lam_f) / 4.0);
    if (eps_max <= 1e-6) continue;
    inst.eps = eps_max * (0.5 + 0.499 * uniform_unit(rng));
    return inst;
  }
  return std::nullopt;
}

BoundCertificate check_disjoint_supports(const Graph& g, std::span<const Vertex> u, std::span<const Vertex> v) {
  if (!is_connected(g)) throw StructureError("disjoint supports requires a connected graph");
  check_range(g, u, "U");
  check_range(g, v, "V");
  const auto us = sorted_unique(u);
  const auto vs = sorted_unique(v);
  std::vector<Vertex> common;
  std::set_intersection(us.begin(), us.end(), vs.begin(), vs.end(), std::back_inserter(common));
  if (!common.empty()) throw ParameterError("U and V must be disjoint");
  for (Vertex a : us) {
    for (Vertex b : vs) {
      if (g.has_edge(a, b)) throw ParameterError("U and V are joined by edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  if (g.n() < 2) throw ParameterError("lambda_2 needs at least two vertices");

  BoundCertificate cert(StatementId::disjoint_supports, {{"graph", to_compact(g)}, {"U", us}, {"V", vs}});
  const Spectrum sp = spectrum(g);
  const double l2 = sp.lambda2();
  const double a = lambda1_of(g, us);
  const double b = lambda1_of(g, vs);
  const double tol = numeric_tol(sp.lambda1());
  cert.set("lambda1(G[U])", a);
  cert.set("lambda1(G[V])", b);
  cert.set("lambda2(G)", l2);
  cert.set("tol", tol);
  cert.hypothesis("U and V non-empty", !us.empty() && !vs.empty());

  const bool u_below = a < l2 - tol;
  const bool v_below = b < l2 - tol;
  const bool both_equal = std::abs(a - l2) <= tol && std::abs(b - l2) <= tol;
  cert.require("trichotomy",
               "lambda1(G[U]) < lambda2(G) or lambda1(G[V]) < lambda2(G) or both equal lambda2(G)",
               u_below || v_below || both_equal);
  return cert;
}

BoundCertificate check_small_eval(const Graph& g, std::span<const Vertex> h) {
  check_range(g, h, "H");
  const auto hs = sorted_unique(h);
  if (hs.empty()) throw ParameterError("H must be non-empty");
  BoundCertificate cert(StatementId::small_eval, {{"graph", to_compact(g)}, {"H", hs}});
  cert.hypothesis("G connected", is_connected(g));
  cert.hypothesis("G has a second eigenvalue", g.n() >= 2);
  if (g.n() < 2) return cert;

  const SecondEigenvalue l2 = second_eigenvalue(g);
  const double lam_h = lambda1_of(g, hs);
  const auto size_h = static_cast<long long>(hs.size());
  cert.set("lambda1(H)", lam_h);
  cert.set("lambda2(G)", l2.value);
  cert.hypothesis("lambda1(H) > lambda2(G)", lam_h > l2.value + numeric_tol(l2.value));
  cert.set_count("m_G(lambda2)", static_cast<long long>(l2.multiplicity));
  cert.set_count("|H|", size_h);
  cert.set_count("Delta(G)", g.max_degree());
  cert.set_count("|H| * Delta(G)", size_h * g.max_degree());
  cert.require_le("small eigenvalue multiplicity", "m_G(lambda2)", "|H| * Delta(G)");
  return cert;
}

BallCoverResult ball_cover_reduce(const Graph& g, int r, double b) {
  if (!is_connected(g)) throw StructureError("ball cover requires a connected graph");
  if (r < 1) throw ParameterError("ball radius must be at least 1");
  if (!(b >= 1)) throw ParameterError("ball size threshold B must be at least 1");

  const int n = g.n();
  std::vector<Ball> balls;
  balls.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) balls.push_back(ball(g, v, r));

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  auto disjoint = [&](const Ball& bl) {
    return std::none_of(bl.vertices.begin(), bl.vertices.end(), [&](Vertex x) { return covered[static_cast<std::size_t>(x)] != 0; });
  };
  auto large = [&](const Ball& bl) { return static_cast<double>(bl.vertices.size()) >= b; };

  std::vector<Vertex> centers;
  for (Vertex v = 0; v < n; ++v) {
    const Ball& bl = balls[static_cast<std::size_t>(v)];
    if (large(bl) && disjoint(bl)) {
      centers.push_back(v);
      for (Vertex x : bl.vertices) covered[static_cast<std::size_t>(x)] = 1;
    }
  }

  BoundCertificate cert(StatementId::ball_cover, {{"graph", to_compact(g)}, {"r", r}, {"B", b}});
  const auto count_n = static_cast<long long>(centers.size());

  bool pairwise_disjoint = true;
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  bool all_large = true;
  for (Vertex c : centers) {
    const Ball& bl = balls[static_cast<std::size_t>(c)];
    all_large = all_large && large(bl);
    for (Vertex x : bl.vertices) {
      if (++hits[static_cast<std::size_t>(x)] > 1) pairwise_disjoint = false;
    }
  }
  bool maximal = true;
  for (Vertex v = 0; v < n; ++v) {
    const Ball& bl = balls[static_cast<std::size_t>(v)];
    if (!large(bl)) continue;
    const bool free = std::none_of(bl.vertices.begin(), bl.vertices.end(), [&](Vertex x) { return hits[static_cast<std::size_t>(x)] > 0; });
    if (free) maximal = false;
  }
  cert.require("chosen balls pairwise disjoint", "each vertex in at most one chosen ball", pairwise_disjoint);
  cert.require("chosen balls large", "|B(c, r)| >= B for every center c", all_large);
  cert.require("collection maximal", "no remaining radius-r ball of size >= B avoids the chosen balls", maximal);

  cert.set_count("|N|", count_n);
  cert.set("n / B", static_cast<double>(n) / b);
  cert.require_le("center count", "|N|", "n / B", numeric_tol(n));

  cert.hypothesis("B > 1", b > 1);
  cert.hypothesis("G has a second eigenvalue", n >= 2);
  if (n < 2) return {centers, std::move(cert)};

  const SecondEigenvalue l2 = second_eigenvalue(g);
  const Subgraph rest = remove_vertices(g, centers);
  const long long m_g = static_cast<long long>(l2.multiplicity);
  const long long m_h = count_near(rest.graph, l2.value, l2.tol);
  cert.set("lambda2(G)", l2.value);
  cert.set_count("m_G(lambda2)", m_g);
  cert.set_count("m_{G\\N}(lambda2)", m_h);
  cert.set_count("|N| + m_{G\\N}(lambda2)", count_n + m_h);
  cert.require_le("interlacing step", "m_G(lambda2)", "|N| + m_{G\\N}(lambda2)");

  // The theorem itself: recorded, and enforced only when its hypothesis holds.
  const int delta = g.max_degree();
  bool degree_condition = true;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > l2.value - 1 + numeric_tol(l2.value) && !large(balls[static_cast<std::size_t>(v)])) degree_condition = false;
  }
  double lhs = std::numeric_limits<double>::infinity();
  double log_delta_n = 0.0;
  if (delta >= 2 && b > 1) {
    lhs = 512.0 * r * std::pow(l2.value, 4 * r + 2) * std::log2(b);
    log_delta_n = log2_base(n, delta);
  }
  const bool theorem_hyp = l2.value >= 1 - numeric_tol(1) && delta >= 2 && b > 1 && degree_condition && lhs <= log_delta_n;
  cert.set("2^9 r lambda2^(4r+2) log B", lhs);
  cert.set("log_Delta n", log_delta_n);
  cert.set("theorem_hypotheses_met", Quantity::boolean(theorem_hyp));
  if (b > 1) {
    const double conclusion = static_cast<double>(n) / (b - 1);
    cert.set("n / (B - 1)", conclusion);
    const bool concl = static_cast<double>(m_g) <= conclusion + numeric_tol(conclusion);
    cert.set("theorem_conclusion_holds", Quantity::boolean(concl));
    if (theorem_hyp) cert.require("ball cover theorem", "m_G(lambda2) <= n / (B - 1)", concl);
  }
  return {centers, std::move(cert)};
}

BoundCertificate walk_count_identity(const Graph& g, int big_r) {
  if (big_r < 1) throw ParameterError("walk half-length R must be at least 1");
  if (g.n() == 0) throw StructureError("walk counts of the graph on zero vertices");
  BoundCertificate cert(StatementId::walk_count, {{"graph", to_compact(g)}, {"R", big_r}});
  const auto n = static_cast<std::size_t>(g.n());

  BigInt trace = 0;
  for (const auto& c : closed_walk_counts(g, 2 * big_r)) trace += c;

  // Per-vertex route: closed 2R-walks at v = ||A^R e_v||^2.
  const BigMatrix half = matrix_power(g, big_r);
  BigInt per_vertex_total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    BigInt walks = 0;
    for (std::size_t u = 0; u < n; ++u) walks += half[u * n + v] * half[u * n + v];
    cert.set_exact("walks_at_" + std::to_string(v), Rational(walks));
    per_vertex_total += walks;
  }
  cert.set_exact("trace(A^(2R))", Rational(trace));
  cert.set_exact("sum_v walks_at_v", Rational(per_vertex_total));
  cert.require_le("per-vertex decomposition (<=)", "sum_v walks_at_v", "trace(A^(2R))");
  cert.require_le("per-vertex decomposition (>=)", "trace(A^(2R))", "sum_v walks_at_v");

  const Spectrum sp = spectrum(g);
  const double power_sum = sp.power_sum(2 * big_r);
  const double t = trace.get_d();
  const double rel = std::abs(power_sum - t) / std::max(1.0, std::abs(t));
  cert.set("sum_i lambda_i^(2R)", power_sum);
  cert.set("relative_gap", rel);
  cert.require("trace identity", "|trace(A^(2R)) - sum_i lambda_i^(2R)| <= 1e-6 max(1, trace)", rel <= 1e-6);

  if (g.n() >= 2) {
    const SecondEigenvalue l2 = second_eigenvalue(g);
    const double lhs = static_cast<double>(l2.multiplicity) * std::pow(l2.value, 2 * big_r);
    cert.set("lambda2(G)", l2.value);
    cert.set_count("m_G(lambda2)", static_cast<long long>(l2.multiplicity));
    cert.set("m_G(lambda2) lambda2^(2R)", lhs);
    cert.require_le("second eigenvalue walk bound", "m_G(lambda2) lambda2^(2R)", "trace(A^(2R))", 1e-6 * std::max(1.0, t));
  }
  return cert;
}

DeletionResult random_support_deletion(const Graph& g, int ell, int big_s, std::uint64_t seed) {
  if (ell < 2) throw ParameterError("ell must be at least 2 so that log2(ell) > 0");
  if (ell > big_s) throw ParameterError("ell must not exceed S");
  if (g.n() < 2) throw ParameterError("lambda_2 needs at least two vertices");

  const int n = g.n();
  // ceil(n log2(ell) / ell), guarded against rounding just above an integer.
  const double raw = static_cast<double>(n) * std::log2(static_cast<double>(ell)) / ell;
  const int t = std::min(n, static_cast<int>(std::ceil(raw - 1e-9)));

  Rng rng(seed);
  const auto removed = sample_without_replacement(rng, n, t);
  const Subgraph rest = remove_vertices(g, removed);

  BoundCertificate cert(StatementId::random_deletion,
                        {{"graph", to_compact(g)}, {"ell", ell}, {"S", big_s}, {"seed", seed}, {"removed", removed}});
  const SecondEigenvalue l2 = second_eigenvalue(g);
  const long long m_g = static_cast<long long>(l2.multiplicity);
  const long long m_h = count_near(rest.graph, l2.value, l2.tol);
  const BigInt walks = rest.graph.n() == 0 ? BigInt(0) : closed_walk_total(rest.graph, 2 * big_s);
  const double bound = n * std::pow(l2.value, 2 * ell) * std::pow(static_cast<double>(ell), 2 * big_s) +
                       n * std::pow(l2.value, 2 * big_s) / ell;

  cert.set("lambda2(G)", l2.value);
  cert.set_count("t", t);
  cert.set_exact("closed_2S_walks(H)", Rational(walks));
  cert.set("n lambda2^(2 ell) ell^(2S) + n lambda2^(2S) / ell", bound);
  cert.set("walk_bound_satisfied", Quantity::boolean(walks.get_d() <= bound * (1 + 1e-12)));
  cert.set_count("m_G(lambda2)", m_g);
  cert.set_count("m_H(lambda2)", m_h);
  cert.set_count("t + m_H(lambda2)", t + m_h);
  cert.require_le("deletion interlacing", "m_G(lambda2)", "t + m_H(lambda2)");
  if (rest.graph.n() > 0) {
    cert.set("m_H(lambda2) lambda2^(2S)", static_cast<double>(m_h) * std::pow(l2.value, 2 * big_s));
    cert.require_le("remainder walk count", "m_H(lambda2) lambda2^(2S)", "closed_2S_walks(H)",
                    1e-6 * std::max(1.0, walks.get_d()));
  }
  return {removed, std::move(cert)};
}

BoundCertificate evaluate_bounds(const Graph& g, StatementId which, const BoundOptions& options) {
  if (which != StatementId::dense_regime && which != StatementId::combined && which != StatementId::connected_corollary) {
    throw ParameterError("evaluate_bounds handles dense_regime, combined and connected_corollary, not " + std::string(to_string(which)));
  }
  if (g.n() == 0) throw StructureError("bounds of the graph on zero vertices");
  const bool connected = is_connected(g);
  if (which == StatementId::connected_corollary && !connected) throw StructureError("connected_corollary requires a connected graph");
  if (g.n() < 2) throw ParameterError("lambda_2 needs at least two vertices");

  nlohmann::json inputs = {{"graph", to_compact(g)}};
  if (options.lambda2) inputs["lambda2"] = to_string(*options.lambda2);
  if (options.epsilon) inputs["epsilon"] = *options.epsilon;
  BoundCertificate cert(which, std::move(inputs));

  const SecondEigenvalue numeric = second_eigenvalue(g);
  double l2 = numeric.value;
  long long m = static_cast<long long>(numeric.multiplicity);
  if (options.lambda2) {
    l2 = options.lambda2->get_d();
    m = static_cast<long long>(multiplicity(g, *options.lambda2, Mode::exact));
    cert.set_exact("lambda2", *options.lambda2);
    cert.set("numeric lambda2", numeric.value);
    cert.hypothesis("supplied lambda2 is the second eigenvalue", std::abs(l2 - numeric.value) <= 1e-8 * std::max(1.0, std::abs(l2)));
  } else {
    // A numeric zero is reported as zero, so that sign tests below are not decided by rounding.
    if (std::abs(l2) <= numeric.tol) l2 = 0.0;
    cert.set("lambda2", l2);
  }
  const int n = g.n();
  const int delta = g.max_degree();
  const int min_deg = g.min_degree();
  cert.set_count("n", n);
  cert.set_count("Delta", delta);
  cert.set_count("delta", min_deg);
  cert.set_count("m_G(lambda2)", m);
  cert.hypothesis("Delta >= 2", delta >= 2);
  if (delta < 2) return cert;

  const double y = log2_base(n, delta);  // log_Delta n
  cert.set("log_Delta n", y);
  const double inf = std::numeric_limits<double>::infinity();

  switch (which) {
    case StatementId::dense_regime: {
      cert.hypothesis("G connected", connected);
      cert.hypothesis("lambda2 > 0", l2 > 0);
      if (!(l2 > 0)) break;
      const double x = l2 * std::log2(l2);
      const bool first = x >= y && y > 2;
      const bool second = x <= y;
      cert.set("lambda2 log lambda2", x);
      cert.hypothesis("lambda2 log lambda2 >= log_Delta n > 2 or lambda2 log lambda2 <= log_Delta n", first || second);
      double rhs = inf;
      if (first) {
        const double ll = std::log2(y);
        rhs = std::min(rhs, 4.0 * n * ll * ll / y);
      }
      if (second) rhs = std::min(rhs, 4.0 * n * std::log2(l2 + 1) / l2);
      cert.set("regime", Quantity::integer(first ? 1 : 2));
      cert.set("rhs", rhs);
      cert.require_le("dense regime bound", "m_G(lambda2)", "rhs", numeric_tol(rhs));
      break;
    }
    case StatementId::combined: {
      double term1 = inf;
      if (l2 > -1) {
        term1 = l2 == 0.0 ? 1.0 / std::log(2.0) : std::log2(l2 + 1) / l2;
      }
      const double ly = std::log2(1 + y);
      const double term2 = ly * ly / y;
      const double rhs = 5.0 * n * std::max(term1, term2);
      cert.set("log(lambda2 + 1) / lambda2", term1);
      cert.set("log^2(1 + log_Delta n) / log_Delta n", term2);
      cert.set("rhs", rhs);
      cert.require_le("combined bound", "m_G(lambda2)", "rhs", numeric_tol(rhs));
      if (l2 > -1) cert.set("n / (lambda2 + 1)", n / (l2 + 1));
      if (options.epsilon) {
        const double eps = *options.epsilon;
        const bool eps_ok = eps > 0 && eps <= 1;
        const double need = eps_ok && l2 > -1 ? std::pow(2 * l2 + 2, 14) * std::log2(l2 + 2) / eps : inf;
        const bool moreover = eps_ok && l2 > -1 && y >= need;
        const double rhs2 = l2 > -1 ? n / (l2 + 1) + std::pow(static_cast<double>(n), eps) : inf;
        cert.set("moreover threshold", need);
        cert.set("n / (lambda2 + 1) + n^eps", rhs2);
        cert.set("moreover_hypothesis_met", Quantity::boolean(moreover));
        cert.set("moreover_bound_satisfied", Quantity::boolean(m <= rhs2 + numeric_tol(rhs2)));
        if (moreover) cert.require_le("moreover bound", "m_G(lambda2)", "n / (lambda2 + 1) + n^eps", numeric_tol(rhs2));
      }
      break;
    }
    case StatementId::connected_corollary: {
      const double log_n = std::log2(static_cast<double>(n));
      const double threshold = std::pow(static_cast<double>(delta), 48);
      cert.set("log n", log_n);
      cert.set("Delta^48", threshold);
      cert.hypothesis("log n >= Delta^48", log_n >= threshold);
      const double denom = l2 + (log_n > 1 ? min_deg * log2_base(log_n, delta) / 42.0 : -inf);
      const double rhs = denom > 0 ? n / denom : inf;
      cert.set("rhs", rhs);
      cert.require_le("connected corollary bound", "m_G(lambda2)", "rhs", numeric_tol(rhs));
      break;
    }
    default:
      break;
  }
  return cert;
}

}  // namespace eqlines
