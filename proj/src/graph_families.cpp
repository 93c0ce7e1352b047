#include "eqlines/graph_families.hpp"

#include <algorithm>
#include <set>

#include "eqlines/errors.hpp"

namespace eqlines {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw ParameterError("uniform_below needs a positive bound");
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

int uniform_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw ParameterError("uniform_int with empty range");
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool bernoulli(Rng& rng, double p) { return uniform_unit(rng) < p; }

std::vector<int> sample_without_replacement(Rng& rng, int n, int t) {
  if (t < 0 || t > n) throw ParameterError("sample size out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < t; ++i) {
    const auto j = static_cast<std::size_t>(i) + uniform_below(rng, static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(t));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace eqlines

namespace eqlines::families {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(edges));
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, std::move(edges));
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Graph paley(int q) {
  // Elements of GF(q) are encoded as a + b*p with a, b in Z_p; for q = p the
  // b part is always zero. For q = p^2 the field is Z_p[i]/(i^2 + 1).
  int p = q;
  bool square_field = false;
  if (!is_prime(q)) {
    int root = 2;
    while (root * root < q) ++root;
    if (root * root != q || !is_prime(root) || root % 4 != 3) {
      throw ParameterError("paley: q must be a prime = 1 mod 4 or p^2 with p = 3 mod 4");
    }
    p = root;
    square_field = true;
  } else if (q % 4 != 1) {
    throw ParameterError("paley: prime q must be 1 mod 4");
  }
  auto mul = [&](int x, int y) {
    const int a = x % p, b = x / p, c = y % p, d = y / p;
    const int re = ((a * c - b * d) % p + p) % p;
    const int im = (a * d + b * c) % p;
    return re + im * p;
  };
  auto sub = [&](int x, int y) {
    const int a = ((x % p) - (y % p) + p) % p;
    const int b = ((x / p) - (y / p) + p) % p;
    return a + b * p;
  };
  std::set<int> squares;
  for (int x = 1; x < q; ++x) {
    if (!square_field && x >= p) break;
    squares.insert(mul(x, x));
  }
  std::vector<Edge> edges;
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) {
      if (squares.count(sub(u, v))) edges.emplace_back(u, v);
    }
  }
  return Graph(q, std::move(edges));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int offset = 0;
  std::vector<Edge> edges;
  for (const auto& g : parts) {
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    offset += g.n();
  }
  return Graph(offset, std::move(edges));
}

Graph clique_union(int m, int k) { return disjoint_union(std::vector<Graph>(static_cast<std::size_t>(m), complete(k))); }

Graph chained(const std::vector<Graph>& parts) {
  Graph base = disjoint_union(parts);
  std::vector<Edge> edges = base.edges();
  int offset = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const int last = offset + parts[i].n() - 1;
    offset += parts[i].n();
    edges.emplace_back(last, offset);
  }
  return Graph(base.n(), std::move(edges));
}

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_connected(Rng& rng, int n, double p) {
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace(uniform_int(rng, 0, v - 1), v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.emplace(u, v);
    }
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace eqlines::families
