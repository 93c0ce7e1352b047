#include "eqlines/rational_matrix.hpp"

#include <stdexcept>

#include "eqlines/errors.hpp"

namespace eqlines {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (auto& x : m.data_) x = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ParameterError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ParameterError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw ParameterError("vector length does not match matrix columns");
  RationalVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0 && x[j] != 0) acc += (*this)(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& below) const {
  if (below.cols_ != cols_) throw ParameterError("column mismatch when stacking matrices");
  RationalMatrix out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = to_string((*this)(i, j));
  }
  return out;
}

Rational dot(const RationalVector& x, const RationalVector& y) {
  if (x.size() != y.size()) throw ParameterError("dot product of vectors with different lengths");
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

Rational quadratic_form(const RationalMatrix& m, const RationalVector& x) { return dot(x, m.apply(x)); }

namespace {

BigInt lcm_of_denominators(const RationalMatrix& m, std::size_t row_begin, std::size_t row_end) {
  BigInt l = 1;
  for (std::size_t i = row_begin; i < row_end; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
  }
  return l;
}

// Solves a x = b for nonsingular square a by Gauss-Jordan over Q.
RationalVector solve_nonsingular(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::logic_error("solve_nonsingular: singular pivot block");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    const Rational inv = 1 / a(c, c);
    for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  return b;
}

// Lifts a vector y supported on the not-yet-eliminated indices to x with
// x^T m x = y^T (Schur complement) y.
RationalVector lift_witness(const RationalMatrix& m, const std::vector<std::size_t>& eliminated,
                            const std::vector<std::size_t>& remaining, const RationalVector& y_remaining) {
  const std::size_t n = m.rows();
  RationalVector x(n);
  for (std::size_t k = 0; k < remaining.size(); ++k) x[remaining[k]] = y_remaining[k];
  if (eliminated.empty()) return x;
  const std::size_t p = eliminated.size();
  RationalMatrix block(p, p);
  RationalVector rhs(p);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) block(a, b) = m(eliminated[a], eliminated[b]);
    Rational acc = 0;
    for (std::size_t k = 0; k < remaining.size(); ++k) acc += m(eliminated[a], remaining[k]) * y_remaining[k];
    rhs[a] = -acc;
  }
  const RationalVector z = solve_nonsingular(block, rhs);
  for (std::size_t a = 0; a < p; ++a) x[eliminated[a]] = z[a];
  return x;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const BigInt l = lcm_of_denominators(m, i, i + 1);
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m(i, j);
      a[i * cols + j] = q.get_num() * (l / q.get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * cols + j]; };

  BigInt prev = 1;
  BigInt tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    }
    const BigInt& piv = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = piv * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

PsdCertificate psd_certificate(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw ParameterError("psd_certificate requires a symmetric matrix");
  const std::size_t n = m.rows();
  const BigInt scale = lcm_of_denominators(m, 0, n);

  std::vector<BigInt> s(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = m(i, j);
      s[i * n + j] = q.get_num() * (scale / q.get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return s[i * n + j]; };

  PsdCertificate cert;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  auto fail_with = [&](const RationalVector& y) {
    cert.is_psd = false;
    cert.witness = lift_witness(m, cert.pivot_order, active, y);
    cert.witness_value = quadratic_form(m, cert.witness);
    if (cert.witness_value >= 0) throw std::logic_error("psd_certificate: witness lifting produced a nonnegative form");
    return cert;
  };

  // Entries of s restricted to `active` are prev * (Schur complement) * scale,
  // with prev > 0, so their signs are those of the Schur complement.
  BigInt prev = 1;
  BigInt tmp;
  while (!active.empty()) {
    std::size_t best = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      const BigInt& d = at(active[k], active[k]);
      if (d < 0) {
        RationalVector y(active.size());
        y[k] = 1;
        return fail_with(y);
      }
      if (best == active.size() || d > at(active[best], active[best])) best = k;
    }
    const std::size_t piv_index = active[best];
    if (at(piv_index, piv_index) == 0) {
      for (std::size_t a = 0; a < active.size(); ++a) {
        for (std::size_t b = a + 1; b < active.size(); ++b) {
          const BigInt& off = at(active[a], active[b]);
          if (off != 0) {
            RationalVector y(active.size());
            y[a] = 1;
            y[b] = off > 0 ? -1 : 1;
            return fail_with(y);
          }
        }
      }
      break;
    }

    const BigInt p = at(piv_index, piv_index);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t a = 0; a < active.size(); ++a) {
      for (std::size_t b = a; b < active.size(); ++b) {
        const std::size_t i = active[a];
        const std::size_t j = active[b];
        tmp = p * at(i, j) - at(i, piv_index) * at(piv_index, j);
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        if (i != j) at(j, i) = at(i, j);
      }
    }
    Rational pivot(p, prev * scale);
    pivot.canonicalize();
    cert.pivots.push_back(pivot);
    cert.pivot_order.push_back(piv_index);
    ++cert.rank;
    prev = p;
  }
  cert.is_psd = true;
  return cert;
}

EigenspaceIntersection eigenspace_meets_hyperplane(const RationalMatrix& a, const Rational& lam) {
  if (!a.is_symmetric()) throw ParameterError("eigenspace_meets_hyperplane requires a symmetric matrix");
  const std::size_t n = a.rows();
  RationalMatrix shifted = a;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lam;
  const RationalMatrix with_ones = shifted.stacked(RationalMatrix::ones(1, n));

  EigenspaceIntersection out;
  out.dim_nullspace = nullity(shifted);
  out.dim_in_ones_perp = nullity(with_ones);
  out.meets_ones_perp = out.dim_in_ones_perp > 0;
  if (out.meets_ones_perp) out.witness = nullspace_basis(with_ones).front();
  return out;
}

}  // namespace eqlines
