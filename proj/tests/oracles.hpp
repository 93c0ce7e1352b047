#pragma once

// Independent reference implementations used only by the tests. Nothing here
// shares code with the library beyond the Graph container.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "eqlines/graph.hpp"

namespace oracle {

using Q = mpq_class;
using QMatrix = std::vector<std::vector<Q>>;

// Plain Gaussian elimination over Q with first-nonzero pivoting.
inline std::size_t rank(QMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Q determinant(QMatrix m) {
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

// A symmetric matrix is PSD iff every principal minor is non-negative.
inline bool psd_by_minors(const QMatrix& m) {
  const std::size_t n = m.size();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1u) idx.push_back(i);
    }
    QMatrix sub(idx.size(), std::vector<Q>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = m[idx[a]][idx[b]];
    }
    if (determinant(sub) < 0) return false;
  }
  return true;
}

inline QMatrix adjacency(const eqlines::Graph& g) {
  QMatrix a(static_cast<std::size_t>(g.n()), std::vector<Q>(static_cast<std::size_t>(g.n()), 0));
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  return a;
}

inline std::size_t multiplicity(const eqlines::Graph& g, const Q& lam) {
  QMatrix a = adjacency(g);
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= lam;
  return a.size() - rank(a);
}

// Cyclic Jacobi rotations; eigenvalues sorted non-increasing.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

inline std::vector<double> eigenvalues(const eqlines::Graph& g) {
  std::vector<std::vector<double>> a(static_cast<std::size_t>(g.n()), std::vector<double>(static_cast<std::size_t>(g.n()), 0.0));
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  return jacobi_eigenvalues(a);
}

inline double lambda1(const eqlines::Graph& g) { return g.n() == 0 ? 0.0 : eigenvalues(g).front(); }

// Closed walks of the given length starting at v, by depth-first enumeration.
inline std::uint64_t closed_walks(const eqlines::Graph& g, eqlines::Vertex v, int length) {
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, eqlines::Vertex at, int left) -> void {
    if (left == 0) {
      if (at == v) ++count;
      return;
    }
    for (eqlines::Vertex w : g.neighbors(at)) self(self, w, left - 1);
  };
  dfs(dfs, v, length);
  return count;
}

// All-pairs distances by Floyd-Warshall, -1 when unreachable.
inline std::vector<std::vector<int>> distances(const eqlines::Graph& g) {
  const int n = g.n();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  for (const auto& [u, v] : g.edges()) {
    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto& dij = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        dij = std::min(dij, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

// Isomorphism by trying every permutation; n <= 8.
inline bool isomorphic(const eqlines::Graph& a, const eqlines::Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Labeled switching orbit of g, as sorted edge-bit masks; n <= 6.
inline std::vector<std::uint64_t> switching_orbit(const eqlines::Graph& g) {
  const int n = g.n();
  std::vector<std::uint64_t> orbit;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        const bool cut = ((s >> i) & 1u) != ((s >> j) & 1u);
        if (g.has_edge(i, j) != cut) mask |= std::uint64_t{1} << bit;
      }
    }
    orbit.push_back(mask);
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

// Every labeled graph on n vertices.
inline std::vector<eqlines::Graph> labeled_graphs(int n) {
  std::vector<eqlines::Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<eqlines::Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<eqlines::Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1u) edges.push_back(pairs[b]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace oracle
