#include <doctest.h>

#include <cmath>

#include "eqlines/bounds.hpp"
#include "eqlines/canonical.hpp"
#include "eqlines/equiangular.hpp"
#include "eqlines/errors.hpp"
#include "eqlines/graph_families.hpp"
#include "eqlines/random.hpp"
#include "eqlines/spectrum.hpp"
#include "oracles.hpp"

using namespace eqlines;

namespace {

double inner(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Largest numeric Gram entry error against the exact matrix.
double gram_error(const SphericalCode& c, const RationalMatrix& m) {
  double worst = 0;
  for (int i = 0; i < c.n(); ++i) {
    for (int j = 0; j < c.n(); ++j) {
      const double e = inner(c.vectors[static_cast<std::size_t>(i)], c.vectors[static_cast<std::size_t>(j)]) -
                       m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
      worst = std::max(worst, std::abs(e));
    }
  }
  return worst;
}

// A graph with alpha small enough that its Gram matrix is certainly PSD.
std::pair<Graph, Rational> random_feasible_instance(Rng& rng) {
  const Graph g = families::random_graph(rng, uniform_int(rng, 2, 10), uniform_unit(rng) * 0.6);
  const int d = std::max(1, g.max_degree());
  return {g, Rational(1, 2 * d + 1 + uniform_int(rng, 0, 3))};
}

std::vector<int> random_subset(Rng& rng, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i) {
    if (bernoulli(rng, 0.5)) s.push_back(i);
  }
  return s;
}

}  // namespace

TEST_CASE("Gram matrices of small graphs") {
  const auto e3 = gram_from_graph(families::empty(3), Rational(1, 3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(e3.m(i, j) == (i == j ? Rational(1) : Rational(1, 3)));
  }
  const auto k2 = gram_from_graph(families::complete(2), Rational(1, 3));
  CHECK(k2.m(0, 1) == Rational(-1, 3));
  const auto tight = gram_from_graph(families::clique_union(6, 2), Rational(1, 3));
  CHECK(rank(tight.m) == 7);
  CHECK(psd_certificate(tight.m).is_psd);
  CHECK_THROWS_AS(gram_from_graph(families::complete(2), Rational(1)), ParameterError);
  CHECK_THROWS_AS(gram_from_graph(families::complete(2), Rational(0)), ParameterError);
}

TEST_CASE("Gram relation is exact on random graphs") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = families::random_graph(rng, uniform_int(rng, 1, 12), uniform_unit(rng));
    Rational alpha(uniform_int(rng, 1, 9), 10);
    alpha.canonicalize();
    const auto gm = gram_from_graph(g, alpha);
    const auto n = static_cast<std::size_t>(g.n());
    const auto a = oracle::adjacency(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Rational expected = (i == j ? 1 - alpha : Rational(0)) + alpha - 2 * alpha * a[i][j];
        CHECK(gm.m(i, j) - expected == 0);
      }
    }
  }
}

TEST_CASE("realizations of small Gram matrices") {
  const auto id = realize_code({Rational(1, 3), RationalMatrix::identity(3)}, 3);
  CHECK(gram_error(id, RationalMatrix::identity(3)) < 1e-12);

  const auto tight = gram_from_graph(families::clique_union(6, 2), Rational(1, 3));
  const auto code = realize_code(tight, 7);
  CHECK(code.n() == 12);
  CHECK(verify_code(code).ok);
  CHECK(graph_from_code(code) == families::clique_union(6, 2));
  CHECK_THROWS_AS(realize_code(tight, 6), InfeasibleError);

  // K_3 at 1/3 is PSD with rank 3: it realizes in R^3 but not in R^2.
  const auto k3 = gram_from_graph(families::complete(3), Rational(1, 3));
  CHECK(psd_certificate(k3.m).is_psd);
  CHECK(rank(k3.m) == 3);
  CHECK(realize_code(k3, 3).n() == 3);
  try {
    (void)realize_code(k3, 2);
    FAIL("expected infeasibility");
  } catch (const InfeasibleError& e) {
    CHECK(e.witness().empty());
  }

  // Two triangles at 1/3: x = 1 on both triangles gives a negative form.
  const auto two = gram_from_graph(families::clique_union(2, 3), Rational(1, 3));
  try {
    (void)realize_code(two, 6);
    FAIL("expected infeasibility");
  } catch (const InfeasibleError& e) {
    REQUIRE(e.witness().size() == 6);
    RationalVector x;
    for (const auto& s : e.witness()) x.push_back(parse_rational(s));
    CHECK(quadratic_form(two.m, x) < 0);
  }
}

TEST_CASE("code to graph conversions") {
  const auto k2 = realize_code(gram_from_graph(families::complete(2), Rational(1, 3)), 2);
  CHECK(graph_from_code(k2) == families::complete(2));
  const auto e4 = realize_code(gram_from_graph(families::empty(4), Rational(1, 5)), 4);
  CHECK(graph_from_code(e4) == families::empty(4));

  SphericalCode bad{2, Rational(1, 3), {{1.0, 0.0}, {0.5, std::sqrt(0.75)}}};
  CHECK_FALSE(verify_code(bad).ok);
  CHECK(verify_code(bad).worst_pair == std::pair<int, int>{0, 1});
  CHECK_THROWS_AS(graph_from_code(bad), CodeIntegrityError);
}

TEST_CASE("realization round trip on random feasible Gram matrices") {
  Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [g, alpha] = random_feasible_instance(rng);
    const auto gm = gram_from_graph(g, alpha);
    const auto r = static_cast<int>(rank(gm.m)) + uniform_int(rng, 0, 2);
    const auto code = realize_code(gm, r);
    CHECK(code.r == r);
    CHECK(gram_error(code, gm.m) <= 1e-8);
    CHECK(graph_from_code(code) == g);
  }
}

TEST_CASE("tight constructions") {
  const auto c27 = tight_construction(2, 7);
  CHECK(c27.n() == 12);
  CHECK(c27.alpha == Rational(1, 3));
  CHECK(verify_code(c27).ok);
  const auto c37 = tight_construction(3, 7);
  CHECK(c37.n() == 9);
  CHECK(c37.alpha == Rational(1, 5));
  CHECK(tight_construction(2, 2).n() == 2);
  CHECK_THROWS_AS(tight_construction(3, 2), ParameterError);
  CHECK_THROWS_AS(tight_construction(1, 4), ParameterError);

  for (int k = 2; k <= 5; ++k) {
    for (int r = k; r <= 14; ++r) {
      const Graph g = tight_construction_graph(k, r);
      const long long expected = r - 1 + (r - 1) / (k - 1);
      CHECK(g.n() == expected);
      CHECK(construction_count(k, r) == expected);
      const auto gm = gram_from_graph(g, Rational(1, 2 * k - 1));
      const auto cert = psd_certificate(gm.m);
      CHECK(cert.is_psd);
      CHECK(cert.rank <= static_cast<std::size_t>(r));
    }
  }
}

TEST_CASE("switching") {
  const auto c = tight_construction(2, 4);
  CHECK(switch_code(c, {}).vectors == c.vectors);

  const auto pair = realize_code(gram_from_graph(families::empty(2), Rational(1, 3)), 2);
  const std::vector<int> first{0};
  const auto flipped = switch_code(pair, first);
  CHECK(inner(flipped.vectors[0], flipped.vectors[1]) == doctest::Approx(-1.0 / 3));
  CHECK(graph_from_code(flipped) == families::complete(2));

  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [g, alpha] = random_feasible_instance(rng);
    const auto code = realize_code(gram_from_graph(g, alpha), g.n());
    const auto s = random_subset(rng, g.n());
    const auto sw = switch_code(code, s);
    CHECK(switch_code(sw, s).vectors == code.vectors);
    for (int i = 0; i < g.n(); ++i) {
      for (int j = i + 1; j < g.n(); ++j) {
        CHECK(std::abs(inner(sw.vectors[static_cast<std::size_t>(i)], sw.vectors[static_cast<std::size_t>(j)])) ==
              doctest::Approx(std::abs(inner(code.vectors[static_cast<std::size_t>(i)], code.vectors[static_cast<std::size_t>(j)]))));
      }
    }
    CHECK(graph_from_code(sw) == switch_graph(g, s));
  }
}

TEST_CASE("max degree normalization") {
  const auto c = tight_construction(2, 7);
  const auto out = normalize_max_degree(c);
  CHECK(out.low_threshold == 81);
  CHECK(out.degree_cap == 486);
  CHECK(out.graph.max_degree() <= 486);
  CHECK(verify_code(out.code).ok);
  CHECK(graph_from_code(out.code) == out.graph);

  Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_subset(rng, c.n());
    const auto res = normalize_max_degree(switch_code(c, s));
    CHECK(res.graph.max_degree() <= 486);
    CHECK(res.max_degree_without_anchor <= 486);
    // Lines are unchanged: each output vector is plus or minus an input vector.
    for (int i = 0; i < c.n(); ++i) {
      CHECK(std::abs(inner(res.code.vectors[static_cast<std::size_t>(i)], c.vectors[static_cast<std::size_t>(i)])) == doctest::Approx(1.0));
    }
  }

  const auto two = normalize_max_degree(tight_construction(2, 2));
  CHECK(two.graph.max_degree() <= 1);
  CHECK_THROWS_AS(normalize_max_degree(SphericalCode{2, Rational(1, 3), {{1.0, 0.0}}}), ParameterError);
}

TEST_CASE("normalization on random codes keeps the degree bounds") {
  Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [g, alpha] = random_feasible_instance(rng);
    const auto code = realize_code(gram_from_graph(g, alpha), g.n());
    const auto res = normalize_max_degree(switch_code(code, random_subset(rng, g.n())));
    const Rational inv4 = 1 / (alpha * alpha * alpha * alpha);
    CHECK(Rational(res.graph.max_degree()) <= 6 * inv4);
    CHECK(Rational(res.graph.max_degree()) <= 5 * inv4 + 1);
    CHECK(res.low_threshold == inv4);
    // After re-signing every vector has +alpha with the anchor; switching T flips exactly those.
    for (int i = 1; i < res.code.n(); ++i) {
      const bool in_t = std::find(res.switched.begin(), res.switched.end(), i) != res.switched.end();
      CHECK(inner(res.code.vectors[0], res.code.vectors[static_cast<std::size_t>(i)]) ==
            doctest::Approx(in_t ? -alpha.get_d() : alpha.get_d()).epsilon(1e-7));
    }
    CHECK(res.anchor_degree == static_cast<int>(res.switched.size()));
  }
}

TEST_CASE("beta on named graphs") {
  for (int n = 2; n <= 6; ++n) CHECK(beta(families::complete(n)).value == doctest::Approx(-1.0));
  CHECK(beta(families::cycle(5)).value == doctest::Approx(2 * std::cos(2 * M_PI / 5)));

  const Graph g = families::clique_union(6, 2);
  const auto b = beta(g, beta_target(Rational(1, 3)));
  CHECK(beta_target(Rational(1, 3)) == 1);
  CHECK(b.value == doctest::Approx(1.0));
  REQUIRE(b.is_eigenvalue_exact.has_value());
  CHECK(*b.is_eigenvalue_exact);
  CHECK_FALSE(*beta(families::complete(3), Rational(2)).is_eigenvalue_exact);
  CHECK_THROWS_AS(beta(families::empty(1)), ParameterError);
}

TEST_CASE("beta bounds the second eigenvalue on every graph up to 7 vertices") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      const auto ev = oracle::eigenvalues(g);
      const double b = beta(g).value;
      CHECK(b >= ev[1] - 1e-9);
      CHECK(b <= ev[0] + 1e-9);
      if (g.is_regular()) CHECK(std::abs(b - ev[1]) <= 1e-9);
    }
  }
}

TEST_CASE("lines to multiplicity bound") {
  const auto r27 = lines_to_multiplicity_bound(tight_construction(2, 7), 0);
  CHECK(*r27.n == 12);
  CHECK(*r27.bound == 12);
  CHECK(*r27.holds);
  CHECK(*r27.construction_branch_holds);

  const auto r310 = lines_to_multiplicity_bound(tight_construction(3, 10), 1);
  CHECK(*r310.n == 13);
  CHECK(*r310.branch_construction == Rational(9, 2));
  CHECK(*r310.bound == Rational(27, 2));
  CHECK(r310.term_construction == 13);
  CHECK(*r310.holds);
  CHECK(*r310.k == 3);

  // n <= r + 1: the bound always exceeds n.
  const auto small = realize_code(gram_from_graph(families::empty(4), Rational(1, 3)), 3 + 1);
  CHECK(*lines_to_multiplicity_bound(small, 0).holds);
}

TEST_CASE("closed form line bounds") {
  const auto m = max_lines_bound(1000, Rational(1, 3), Regime::main);
  REQUIRE(m.exact_value);
  CHECK(*m.exact_value == 1998);
  CHECK_FALSE(m.hypothesis_met);
  CHECK(to_json(m)["note"] == "formula value, hypothesis unmet at this scale");

  CHECK(*max_lines_bound(10, Rational(1, 2), Regime::main).exact_value == 27);

  const auto sp = max_lines_bound(1000000, Rational(1, 5), Regime::superpolynomial);
  const double r = 1e6;
  const double l = std::log(r) / std::log(5.0);
  const double expected = r + r * std::max(66 * std::pow(std::log2(l), 2) / l, 17 * 0.2 * std::log2(10.0));
  CHECK(sp.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(sp.hypothesis_met);
  CHECK_THROWS_AS(max_lines_bound(10, Rational(3, 2), Regime::main), ParameterError);
}
