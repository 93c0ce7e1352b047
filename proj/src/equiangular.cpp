#include "eqlines/equiangular.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "eqlines/errors.hpp"
#include "eqlines/graph_families.hpp"

namespace eqlines {

void check_alpha(const Rational& alpha) {
  if (sgn(alpha) <= 0 || alpha >= 1) throw ParameterError("alpha must satisfy 0 < alpha < 1, got " + to_string(alpha));
}

Rational beta_target(const Rational& alpha) {
  check_alpha(alpha);
  return Rational(1 - alpha) / Rational(2 * alpha);
}

namespace {

double inner(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

CodeCheck verify_code(const SphericalCode& c, double norm_tol, double inner_tol) {
  CodeCheck out;
  if (c.r < 1) {
    out.ok = false;
    out.message = "dimension r must be positive";
    return out;
  }
  if (sgn(c.alpha) <= 0 || c.alpha >= 1) {
    out.ok = false;
    out.message = "alpha must satisfy 0 < alpha < 1";
    return out;
  }
  for (int i = 0; i < c.n(); ++i) {
    if (static_cast<int>(c.vectors[static_cast<std::size_t>(i)].size()) != c.r) {
      out.ok = false;
      out.message = "vector " + std::to_string(i) + " has " + std::to_string(c.vectors[static_cast<std::size_t>(i)].size()) +
                    " coordinates, expected " + std::to_string(c.r);
      return out;
    }
  }
  const double a = c.alpha.get_d();
  for (int i = 0; i < c.n(); ++i) {
    const auto& v = c.vectors[static_cast<std::size_t>(i)];
    const double err = std::abs(std::sqrt(inner(v, v)) - 1.0);
    if (err > out.worst_norm_error || out.worst_norm_index < 0) {
      out.worst_norm_error = err;
      out.worst_norm_index = i;
    }
    for (int j = i + 1; j < c.n(); ++j) {
      const double err_ij = std::abs(std::abs(inner(v, c.vectors[static_cast<std::size_t>(j)])) - a);
      if (err_ij > out.worst_inner_error || out.worst_pair.first < 0) {
        out.worst_inner_error = err_ij;
        out.worst_pair = {i, j};
      }
    }
  }
  if (out.worst_norm_index >= 0 && out.worst_norm_error > norm_tol) {
    out.ok = false;
    out.message = "vector " + std::to_string(out.worst_norm_index) + " has norm off by " + format_decimal(out.worst_norm_error);
  } else if (out.worst_pair.first >= 0 && out.worst_inner_error > inner_tol) {
    out.ok = false;
    out.message = "inner product of vectors " + std::to_string(out.worst_pair.first) + " and " +
                  std::to_string(out.worst_pair.second) + " is off from +-alpha by " + format_decimal(out.worst_inner_error);
  }
  return out;
}

GramMatrix gram_from_graph(const Graph& g, const Rational& raw_alpha) {
  check_alpha(raw_alpha);
  Rational alpha = raw_alpha;
  alpha.canonicalize();
  const auto n = static_cast<std::size_t>(g.n());
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? Rational(1) : alpha;
  }
  for (const auto& [u, v] : g.edges()) {
    m(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = -alpha;
    m(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = -alpha;
  }
  return {alpha, std::move(m)};
}

Graph graph_from_code(const SphericalCode& c, double tol) {
  const CodeCheck check = verify_code(c, tol, tol);
  if (!check.ok) throw CodeIntegrityError(check.message);
  const double a = c.alpha.get_d();
  std::vector<Edge> edges;
  for (int i = 0; i < c.n(); ++i) {
    for (int j = i + 1; j < c.n(); ++j) {
      const double ip = inner(c.vectors[static_cast<std::size_t>(i)], c.vectors[static_cast<std::size_t>(j)]);
      if (std::abs(ip + a) <= tol) edges.emplace_back(i, j);
    }
  }
  return Graph(c.n(), std::move(edges));
}

SphericalCode realize_code(const GramMatrix& gm, int r) {
  check_alpha(gm.alpha);
  if (r < 1) throw ParameterError("dimension r must be positive");
  const RationalMatrix& m = gm.m;
  if (!m.is_square()) throw ParameterError("Gram matrix must be square");
  const PsdCertificate cert = psd_certificate(m);
  if (!cert.is_psd) {
    std::vector<std::string> witness;
    for (const auto& x : cert.witness) witness.push_back(to_string(x));
    throw InfeasibleError("Gram matrix is not positive semidefinite: x^T M x = " + to_string(cert.witness_value), witness);
  }
  if (cert.rank > static_cast<std::size_t>(r)) {
    throw InfeasibleError("Gram matrix has rank " + std::to_string(cert.rank) + " > r = " + std::to_string(r), {});
  }

  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd md(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) md(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  }
  SphericalCode out{r, gm.alpha, std::vector<std::vector<double>>(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(r), 0.0))};
  if (n == 0) return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(md);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  const auto rk = static_cast<Eigen::Index>(cert.rank);
  for (Eigen::Index c = 0; c < rk; ++c) {
    const Eigen::Index idx = n - 1 - c;  // descending eigenvalues
    const double lam = solver.eigenvalues()(idx);
    if (lam < kConstructionTol) continue;
    Eigen::VectorXd vec = solver.eigenvectors().col(idx);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(vec(i)) > kConstructionTol) {
        if (vec(i) < 0) vec = -vec;
        break;
      }
    }
    const double s = std::sqrt(lam);
    for (Eigen::Index i = 0; i < n; ++i) out.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = vec(i) * s;
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double got = inner(out.vectors[static_cast<std::size_t>(i)], out.vectors[static_cast<std::size_t>(j)]);
      if (std::abs(got - md(i, j)) > kVerificationTol) {
        throw CodeIntegrityError("realized Gram entry (" + std::to_string(i) + "," + std::to_string(j) + ") is off by " +
                                 format_decimal(std::abs(got - md(i, j))));
      }
    }
  }
  return out;
}

long long construction_count(long long k, long long r) {
  if (k < 2) throw ParameterError("k must be at least 2");
  if (r < 1) throw ParameterError("r must be positive");
  return r - 1 + (r - 1) / (k - 1);
}

Graph tight_construction_graph(int k, int r) {
  if (k < 2) throw ParameterError("k must be at least 2");
  if (r < k) throw ParameterError("r must be at least k so that one clique fits (k=" + std::to_string(k) + ", r=" + std::to_string(r) + ")");
  const int t = (r - 1) / (k - 1);
  const int isolated = r - t * (k - 1) - 1;
  return families::disjoint_union({families::clique_union(t, k), families::empty(isolated)});
}

SphericalCode tight_construction(int k, int r) {
  const Graph g = tight_construction_graph(k, r);
  const Rational alpha(1, 2 * k - 1);
  const GramMatrix gm = gram_from_graph(g, alpha);
  const PsdCertificate cert = psd_certificate(gm.m);
  if (!cert.is_psd || cert.rank > static_cast<std::size_t>(r)) {
    throw std::logic_error("tight construction Gram matrix failed its exact certificate");
  }
  return realize_code(gm, r);
}

SphericalCode switch_code(const SphericalCode& c, std::span<const int> s) {
  SphericalCode out = c;
  std::vector<char> flip(static_cast<std::size_t>(c.n()), 0);
  for (int i : s) {
    if (i < 0 || i >= c.n()) throw ParameterError("switch index " + std::to_string(i) + " outside the code");
    flip[static_cast<std::size_t>(i)] = 1;
  }
  for (int i = 0; i < c.n(); ++i) {
    if (!flip[static_cast<std::size_t>(i)]) continue;
    for (double& x : out.vectors[static_cast<std::size_t>(i)]) x = -x;
  }
  return out;
}

NormalizedCode normalize_max_degree(const SphericalCode& c) {
  if (c.n() < 2) throw ParameterError("normalization needs at least two vectors");
  const CodeCheck check = verify_code(c);
  if (!check.ok) throw CodeIntegrityError(check.message);

  SphericalCode work = c;
  const auto& w = work.vectors[0];
  for (int i = 1; i < work.n(); ++i) {
    auto& v = work.vectors[static_cast<std::size_t>(i)];
    if (inner(v, w) < 0) {
      for (double& x : v) x = -x;
    }
  }

  // Graph of C = all vectors but the anchor.
  SphericalCode rest{work.r, work.alpha, {work.vectors.begin() + 1, work.vectors.end()}};
  const Graph gc = graph_from_code(rest);
  const int size_c = gc.n();
  const Rational alpha4 = work.alpha * work.alpha * work.alpha * work.alpha;
  const Rational low = Rational(1) / alpha4;

  std::vector<int> t_local;
  for (Vertex u = 0; u < size_c; ++u) {
    const Rational d = gc.degree(u);
    const Rational co = Rational(size_c - 1) - d;
    if (co <= low) {
      t_local.push_back(u);
    } else if (d > low) {
      throw CodeIntegrityError("vertex " + std::to_string(u + 1) + " has degree " + std::to_string(gc.degree(u)) +
                               " strictly between 1/alpha^4 and |C| - 1 - 1/alpha^4; the code is corrupted");
    }
  }
  if (Rational(static_cast<long>(t_local.size())) > 4 * low) {
    throw CodeIntegrityError("switched set has " + std::to_string(t_local.size()) + " > 4/alpha^4 vertices");
  }

  NormalizedCode out;
  for (int u : t_local) out.switched.push_back(u + 1);
  out.code = switch_code(work, out.switched);
  out.graph = graph_from_code(out.code);
  out.anchor_degree = out.graph.degree(0);
  const Graph without_anchor = remove_vertices(out.graph, std::vector<Vertex>{0}).graph;
  out.max_degree_without_anchor = without_anchor.n() > 0 ? without_anchor.max_degree() : 0;
  out.low_threshold = low;
  out.degree_cap = 6 * low;
  if (Rational(out.graph.max_degree()) > out.degree_cap) {
    throw CodeIntegrityError("normalized graph has maximum degree " + std::to_string(out.graph.max_degree()) + " > 6/alpha^4");
  }
  return out;
}

BetaResult beta(const Graph& g, const std::optional<Rational>& candidate) {
  const int n = g.n();
  if (n < 2) throw ParameterError("beta needs at least two vertices");
  // Orthonormal (Helmert) basis of the hyperplane orthogonal to the all-ones vector.
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n - 1);
  for (int j = 1; j < n; ++j) {
    const double s = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
    for (int i = 0; i < j; ++i) q(i, j - 1) = s;
    q(j, j - 1) = -j * s;
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  const Eigen::MatrixXd b = q.transpose() * a * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  BetaResult out;
  out.value = solver.eigenvalues()(n - 2);
  if (candidate) out.is_eigenvalue_exact = eigenspace_meets_hyperplane(g.adjacency_rational(), *candidate).meets_ones_perp;
  return out;
}

std::string_view to_string(Regime r) { return r == Regime::main ? "main" : "superpolynomial"; }

namespace {

LinesBoundReport base_report(long long r, const Rational& alpha) {
  check_alpha(alpha);
  if (r < 2) throw ParameterError("r must be at least 2");
  LinesBoundReport rep;
  rep.r = r;
  rep.alpha = alpha;
  const Rational ratio = Rational(2 * alpha) / Rational(1 - alpha);
  rep.term_construction = BigInt(static_cast<long>(r - 1)) + floor(Rational(static_cast<long>(r - 1)) * ratio);
  if (alpha.get_num() == 1 && alpha.get_den() >= 3 && alpha.get_den() % 2 == 1) {
    rep.k = (alpha.get_den().get_si() + 1) / 2;
  }
  return rep;
}

}  // namespace

LinesBoundReport lines_to_multiplicity_bound(const SphericalCode& c, long long mc_value) {
  LinesBoundReport rep = base_report(c.r, c.alpha);
  const Rational ratio = Rational(2 * c.alpha) / Rational(1 - c.alpha);
  const Rational first = Rational(static_cast<long>(c.r - 1)) * ratio;
  const long long second = mc_value + 2;
  const Rational base(static_cast<long>(c.r - 1));
  const Rational n(static_cast<long>(c.n()));
  rep.n = c.n();
  rep.mc_value = mc_value;
  rep.branch_construction = first;
  rep.branch_multiplicity = second;
  rep.bound = base + std::max(first, Rational(static_cast<long>(second)));
  rep.holds = n <= *rep.bound;
  rep.construction_branch_holds = n <= base + first;
  rep.multiplicity_branch_holds = n <= base + Rational(static_cast<long>(second));
  rep.value = rep.bound->get_d();
  rep.hypothesis_met = true;
  rep.hypothesis = "none";
  return rep;
}

LinesBoundReport max_lines_bound(long long r, const Rational& alpha, Regime regime) {
  LinesBoundReport rep = base_report(r, alpha);
  rep.regime = regime;
  const double a = alpha.get_d();
  const double rd = static_cast<double>(r);
  if (regime == Regime::main) {
    rep.exact_value = rep.term_construction;
    rep.value = rep.term_construction.get_d();
    rep.hypothesis = "r >= 2^(1/alpha^20)";
    rep.hypothesis_met = std::log2(rd) >= std::pow(1.0 / a, 20);
  } else {
    const double lr = std::log2(rd) / std::log2(1.0 / a);  // log_{1/alpha} r
    const double llr = std::log2(lr);
    const double first = 66.0 * llr * llr / lr;
    const double second = 17.0 * a * std::log2(2.0 / a);
    rep.value = rd + rd * std::max(first, second);
    rep.hypothesis = "r >= 1/alpha^4";
    rep.hypothesis_met = Rational(static_cast<long>(r)) * alpha * alpha * alpha * alpha >= 1;
  }
  return rep;
}

nlohmann::json to_json(const LinesBoundReport& rep) {
  nlohmann::json j = {
      {"r", rep.r},
      {"alpha", to_string(rep.alpha)},
      {"term_construction", to_string(rep.term_construction)},
      {"value", format_decimal(rep.value)},
      {"hypothesis", rep.hypothesis},
      {"hypothesis_met", rep.hypothesis_met},
  };
  if (rep.k) j["k"] = *rep.k;
  if (rep.regime) j["regime"] = std::string(to_string(*rep.regime));
  if (rep.exact_value) j["exact_value"] = to_string(*rep.exact_value);
  if (rep.n) j["n"] = *rep.n;
  if (rep.mc_value) j["mc_value"] = *rep.mc_value;
  if (rep.branch_construction) j["branch_construction"] = to_string(*rep.branch_construction);
  if (rep.branch_multiplicity) j["branch_multiplicity"] = *rep.branch_multiplicity;
  if (rep.bound) j["bound"] = to_string(*rep.bound);
  if (rep.holds) j["holds"] = *rep.holds;
  if (rep.construction_branch_holds) j["construction_branch_holds"] = *rep.construction_branch_holds;
  if (rep.multiplicity_branch_holds) j["multiplicity_branch_holds"] = *rep.multiplicity_branch_holds;
  if (!rep.hypothesis_met && rep.regime) j["note"] = "formula value, hypothesis unmet at this scale";
  return j;
}

}  // namespace eqlines
