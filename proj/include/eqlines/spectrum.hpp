#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "eqlines/certificate.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

enum class Mode { exact, numeric };

struct Cluster {
  double value = 0.0;  // mean of the member eigenvalues
  std::size_t count = 0;
  std::size_t first = 0;  // index of the largest member in the spectrum
};

// Adjacency eigenvalues in non-increasing order. Consecutive values closer
// than `cluster_tol` belong to the same cluster.
class Spectrum {
 public:
  Spectrum(std::vector<double> values, double cluster_tol);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double cluster_tol() const noexcept { return cluster_tol_; }

  // 1-based, matching lambda_1 >= lambda_2 >= ...
  double lambda(std::size_t i) const;
  double lambda1() const { return lambda(1); }
  double lambda2() const { return lambda(2); }

  std::vector<Cluster> clusters() const;

  // Count of eigenvalues within tol of lam. Throws AmbiguityError when the
  // window touches more than one cluster.
  std::size_t multiplicity(double lam, double tol) const;

  // sum_i lambda_i^k
  double power_sum(int k) const;

 private:
  std::vector<double> values_;
  double cluster_tol_;
};

// 1e-9 * max(1, lambda_1)
double default_cluster_tol(double lambda1);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

// Numeric spectrum by Householder tridiagonalization and implicit QL
// (Eigen::SelfAdjointEigenSolver), which is backward stable for symmetric
// matrices. Mode::exact throws CapabilityError: exact mode only serves
// multiplicities at rational points.
Spectrum spectrum(const Graph& g, Mode mode = Mode::numeric, std::optional<double> cluster_tol = std::nullopt);

// Exact: n - rank(A - lam I) over Q. Numeric: eigenvalues within tol of lam.
std::size_t multiplicity(const Graph& g, const Rational& lam, Mode mode, double tol = 1e-8);
// Numeric only; Mode::exact with a floating lam throws ParameterError.
std::size_t multiplicity(const Graph& g, double lam, Mode mode, double tol = 1e-8);

// lambda_1 of g; 0 for the graph on zero vertices.
double largest_eigenvalue(const Graph& g);

// Unit Perron vector with positive entries. Throws StructureError when g is
// disconnected or empty.
std::vector<double> perron_vector(const Graph& g, double tol = 1e-9);

// Interlacing after deleting S: m_{G\S}(lam) >= m_G(lam) - |S| and
// m_G(lam) >= m_{G\S}(lam) - |S|.
BoundCertificate interlacing_check(const Graph& g, std::span<const Vertex> s, const Rational& lam,
                                   Mode mode = Mode::exact, double tol = 1e-8);

}  // namespace eqlines
