#include "eqlines/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eqlines/errors.hpp"

namespace eqlines {

Spectrum::Spectrum(std::vector<double> values, double cluster_tol)
    : values_(std::move(values)), cluster_tol_(cluster_tol) {
  if (!std::is_sorted(values_.begin(), values_.end(), std::greater<>())) {
    throw ParameterError("spectrum values must be sorted non-increasing");
  }
  if (cluster_tol_ < 0) throw ParameterError("cluster tolerance must be non-negative");
}

double Spectrum::lambda(std::size_t i) const {
  if (i == 0 || i > values_.size()) {
    throw StructureError("lambda_" + std::to_string(i) + " requested from a spectrum of size " + std::to_string(values_.size()));
  }
  return values_[i - 1];
}

std::vector<Cluster> Spectrum::clusters() const {
  std::vector<Cluster> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values_.size(); ++i) {
    if (i == values_.size() || values_[i - 1] - values_[i] > cluster_tol_) {
      double sum = 0;
      for (std::size_t k = start; k < i; ++k) sum += values_[k];
      out.push_back({sum / static_cast<double>(i - start), i - start, start});
      start = i;
    }
  }
  return out;
}

std::size_t Spectrum::multiplicity(double lam, double tol) const {
  std::vector<std::size_t> counts;
  for (const auto& c : clusters()) {
    std::size_t inside = 0;
    for (std::size_t k = c.first; k < c.first + c.count; ++k) {
      if (std::abs(values_[k] - lam) <= tol) ++inside;
    }
    if (inside > 0) counts.push_back(inside);
  }
  if (counts.size() > 1) {
    throw AmbiguityError("eigenvalue window around " + format_decimal(lam) + " touches " + std::to_string(counts.size()) + " clusters",
                         counts);
  }
  return counts.empty() ? 0 : counts.front();
}

double Spectrum::power_sum(int k) const {
  double acc = 0;
  for (double v : values_) acc += std::pow(v, k);
  return acc;
}

double default_cluster_tol(double lambda1) { return 1e-9 * std::max(1.0, std::abs(lambda1)); }

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

namespace {

std::vector<double> sorted_eigenvalues(const Graph& g) {
  if (g.n() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  std::reverse(values.begin(), values.end());
  return values;
}

}  // namespace

Spectrum spectrum(const Graph& g, Mode mode, std::optional<double> cluster_tol) {
  if (mode == Mode::exact) {
    throw CapabilityError("exact mode does not compute full spectra; use multiplicity at a rational point");
  }
  if (g.n() == 0) throw StructureError("spectrum of the graph on zero vertices");
  if (cluster_tol && *cluster_tol <= 0) throw ParameterError("numeric tolerance must be positive");
  auto values = sorted_eigenvalues(g);
  const double tol = cluster_tol.value_or(default_cluster_tol(values.front()));
  return Spectrum(std::move(values), tol);
}

std::size_t multiplicity(const Graph& g, const Rational& lam, Mode mode, double tol) {
  if (mode == Mode::numeric) return multiplicity(g, lam.get_d(), mode, tol);
  RationalMatrix shifted = g.adjacency_rational();
  for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lam;
  return nullity(shifted);
}

std::size_t multiplicity(const Graph& g, double lam, Mode mode, double tol) {
  if (mode == Mode::exact) throw ParameterError("exact multiplicity needs a rational eigenvalue");
  if (tol <= 0) throw ParameterError("numeric tolerance must be positive");
  if (g.n() == 0) return 0;
  return spectrum(g).multiplicity(lam, tol);
}

double largest_eigenvalue(const Graph& g) {
  if (g.n() == 0 || g.edge_count() == 0) return 0.0;
  return sorted_eigenvalues(g).front();
}

std::vector<double> perron_vector(const Graph& g, double tol) {
  if (g.n() == 0) throw StructureError("Perron vector of an empty graph");
  if (!is_connected(g)) throw StructureError("Perron vector requires a connected graph");
  if (g.n() == 1) return {1.0};
  const Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  const Eigen::Index top = g.n() - 1;
  Eigen::VectorXd x = solver.eigenvectors().col(top);
  if (x.sum() < 0) x = -x;
  x.normalize();
  const double lambda1 = solver.eigenvalues()(top);
  const double residual = (a * x - lambda1 * x).norm();
  if (residual > tol || x.minCoeff() <= 0) {
    throw std::runtime_error("Perron vector residual " + format_decimal(residual) + " exceeds tolerance");
  }
  return {x.data(), x.data() + x.size()};
}

BoundCertificate interlacing_check(const Graph& g, std::span<const Vertex> s, const Rational& lam, Mode mode, double tol) {
  const Subgraph rest = remove_vertices(g, s);
  nlohmann::json inputs = {
      {"graph", to_compact(g)},
      {"removed", std::vector<Vertex>(s.begin(), s.end())},
      {"lambda", to_string(lam)},
      {"mode", mode == Mode::exact ? "exact" : "numeric"},
  };
  BoundCertificate cert(StatementId::interlacing, std::move(inputs));
  const auto removed = static_cast<long long>(g.n() - rest.graph.n());
  const auto m_g = static_cast<long long>(multiplicity(g, lam, mode, tol));
  const auto m_h = rest.graph.n() == 0 ? 0LL : static_cast<long long>(multiplicity(rest.graph, lam, mode, tol));
  cert.set_count("m_G", m_g);
  cert.set_count("m_G_minus_S", m_h);
  cert.set_count("removed", removed);
  cert.set_count("m_G - |S|", m_g - removed);
  cert.set_count("m_G_minus_S - |S|", m_h - removed);
  cert.require_le("deletion loses at most |S|", "m_G - |S|", "m_G_minus_S");
  cert.require_le("deletion gains at most |S|", "m_G_minus_S - |S|", "m_G");
  return cert;
}

}  // namespace eqlines
