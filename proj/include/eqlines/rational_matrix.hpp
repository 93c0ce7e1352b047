#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqlines/rational.hpp"

namespace eqlines {

using RationalVector = std::vector<Rational>;

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  RationalVector apply(const RationalVector& x) const;
  RationalMatrix transpose() const;

  // Rows stacked below this matrix; column counts must agree.
  RationalMatrix stacked(const RationalMatrix& below) const;

  // Fraction strings, row by row, for JSON debug dumps.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(const RationalVector& x, const RationalVector& y);
Rational quadratic_form(const RationalMatrix& m, const RationalVector& x);

// Rank over Q. Rows are cleared to integers and reduced with Bareiss'
// fraction-free elimination, so all intermediate values are integer minors.
std::size_t rank(const RationalMatrix& m);
inline std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

// Basis of {x : m x = 0}, from the reduced row echelon form.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

// Exact positive semidefiniteness certificate from a symmetrically pivoted
// LDL^T factorization.
//
// At each step the remaining diagonal of the Schur complement is scanned:
// a negative entry proves indefiniteness; otherwise the largest positive entry
// is taken as pivot. Once every remaining diagonal entry is zero the matrix is
// PSD iff the remaining block is zero; a nonzero off-diagonal entry yields a
// 2-vector with negative form. Witness vectors are lifted back to the original
// coordinates and checked exactly before being returned.
struct PsdCertificate {
  bool is_psd = false;
  // Number of positive pivots; equals the rank when is_psd.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_order;
  std::vector<Rational> pivots;
  // Populated when !is_psd: witness^T m witness = witness_value < 0.
  RationalVector witness;
  Rational witness_value;
};

PsdCertificate psd_certificate(const RationalMatrix& m);

struct EigenspaceIntersection {
  std::size_t dim_nullspace = 0;
  // dim of ker(a - lam I) ∩ 1^⊥
  std::size_t dim_in_ones_perp = 0;
  bool meets_ones_perp = false;
  // A nonzero vector of the intersection, when it exists.
  std::optional<RationalVector> witness;
};

EigenspaceIntersection eigenspace_meets_hyperplane(const RationalMatrix& a, const Rational& lam);

}  // namespace eqlines
