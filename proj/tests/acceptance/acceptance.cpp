// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqlines/bounds.hpp"
#include "eqlines/campaign.hpp"
#include "eqlines/canonical.hpp"
#include "eqlines/cli.hpp"
#include "eqlines/equiangular.hpp"
#include "eqlines/errors.hpp"
#include "eqlines/graph_families.hpp"
#include "eqlines/io.hpp"
#include "eqlines/random.hpp"
#include "eqlines/search.hpp"
#include "eqlines/spectrum.hpp"

using namespace eqlines;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

json cli(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "eqlines");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code) *code = rc;
  return json::parse(out.str());
}

double inner(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<int> random_subset(Rng& rng, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i) {
    if (bernoulli(rng, 0.5)) s.push_back(i);
  }
  return s;
}

// Gram-feasible by construction: alpha <= 1/(2 Delta + 1) keeps M diagonally dominant.
SphericalCode random_code(Rng& rng) {
  const Graph g = families::random_graph(rng, uniform_int(rng, 2, 12), uniform_unit(rng) * 0.6);
  const Rational alpha(1, 2 * std::max(1, g.max_degree()) + 1 + uniform_int(rng, 0, 2));
  const auto gm = gram_from_graph(g, alpha);
  return realize_code(gm, static_cast<int>(rank(gm.m)));
}

Outcome criterion1() {
  Outcome o;
  int codes = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int r = k; r <= 12; ++r) {
      int rc = 0;
      const json rec = cli({"construct", "--k", std::to_string(k), "--r", std::to_string(r)}, &rc);
      const std::string tag = "k=" + std::to_string(k) + " r=" + std::to_string(r);
      if (rc != 0) {
        o.fail(tag + ": exit " + std::to_string(rc));
        continue;
      }
      const SphericalCode c = code_from_json(rec["result"]["code"]);
      const long long expected = r - 1 + (r - 1) / (k - 1);
      if (c.n() != expected) o.fail(tag + ": " + std::to_string(c.n()) + " vectors, expected " + std::to_string(expected));
      if (c.r != r || c.alpha != Rational(1, 2 * k - 1)) o.fail(tag + ": wrong dimension or alpha");
      const double a = 1.0 / (2 * k - 1);
      for (int i = 0; i < c.n(); ++i) {
        const auto& v = c.vectors[static_cast<std::size_t>(i)];
        if (v.size() != static_cast<std::size_t>(r)) o.fail(tag + ": vector outside R^r");
        if (std::abs(inner(v, v) - 1) > 1e-8) o.fail(tag + ": norm off at " + std::to_string(i));
        for (int j = i + 1; j < c.n(); ++j) {
          if (std::abs(std::abs(inner(v, c.vectors[static_cast<std::size_t>(j)])) - a) > 1e-8) o.fail(tag + ": inner product off");
        }
      }
      const auto gm = gram_from_graph(graph_from_code(c), c.alpha);
      const auto cert = psd_certificate(gm.m);
      if (!cert.is_psd || cert.rank > static_cast<std::size_t>(r)) o.fail(tag + ": exact Gram not PSD with rank <= r");
      ++codes;
    }
  }
  o.detail = o.pass ? std::to_string(codes) + " constructions verified" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  Rng rng(2002);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform_int(rng, 1, 12);
    const Graph g = families::random_graph(rng, n, uniform_unit(rng));
    const int den = uniform_int(rng, 2, 40);
    const Rational alpha(uniform_int(rng, 1, den - 1), den);
    const auto gm = gram_from_graph(g, alpha);
    const auto un = static_cast<std::size_t>(n);
    const RationalMatrix expected = (1 - alpha) * RationalMatrix::identity(un) + alpha * RationalMatrix::ones(un, un) -
                                    Rational(2 * alpha) * g.adjacency_rational();
    if (!(gm.m - expected).is_zero()) o.fail("nonzero residual at trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "500 pairs, residual exactly zero";
  return o;
}

Outcome criterion3() {
  Outcome o;
  CampaignOptions opts;
  const auto graphs = family("all-connected", 6);
  const std::vector<StatementId> exhaustive{StatementId::disjoint_supports, StatementId::small_eval, StatementId::interlacing,
                                            StatementId::walk_count};
  const auto summary = run_campaign(graphs, exhaustive, opts);
  if (summary.violated != 0) o.fail(std::to_string(summary.violated) + " violations in the exhaustive suite");

  std::ostringstream detail;
  detail << graphs.size() << " graphs, " << summary.total() << " exhaustive certificates";
  const std::vector<StatementId> randomized{StatementId::partial_net, StatementId::ball_cover, StatementId::random_deletion};
  for (StatementId id : randomized) {
    CampaignOptions ro;
    ro.seed = 3003;
    ro.random_instances = 4;
    std::size_t valid = 0;
    std::size_t violated = 0;
    std::uint64_t index = 0;
    Rng rng(3003 + static_cast<std::uint64_t>(id));
    while (valid < 1000) {
      const Graph g = families::random_connected(rng, uniform_int(rng, 2, 12), uniform_unit(rng) * 0.5);
      for (const auto& cert : statement_instances(g, id, ro, index++)) {
        if (cert.hypotheses_met()) ++valid;
        if (cert.verdict() == Verdict::violated) ++violated;
      }
    }
    if (violated != 0) o.fail(std::to_string(violated) + " violations for " + std::string(to_string(id)));
    detail << ", " << to_string(id) << " " << valid << " valid";
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t graphs = 0;
  std::size_t regular = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      ++graphs;
      const double b = beta(g).value;
      const double l2 = spectrum(g).lambda2();
      if (b < l2 - 1e-9) o.fail("beta < lambda2 on " + to_compact(g));
      if (g.is_regular()) {
        ++regular;
        if (std::abs(b - l2) > 1e-9) o.fail("beta != lambda2 on regular " + to_compact(g));
      }
    }
  }

  std::vector<SphericalCode> codes;
  for (int k = 2; k <= 4; ++k) {
    for (int r = k; r <= 12; ++r) {
      if (construction_count(k, r) >= r + 2) codes.push_back(tight_construction(k, r));
    }
  }
  for (int r = 4; r <= 6; ++r) {
    SearchTask t;
    t.r = r;
    t.n_max = 8;
    const auto res = max_lines(t);
    if (res.best_n >= r + 2) codes.push_back(res.witness_code);
  }
  Rng rng(4004);
  const std::size_t base = codes.size();
  for (std::size_t i = 0; i < base; ++i) codes.push_back(switch_code(codes[i], random_subset(rng, codes[i].n())));

  for (const auto& c : codes) {
    const Graph g = graph_from_code(c);
    const Rational target = beta_target(c.alpha);
    const auto b = beta(g, target);
    if (std::abs(b.value - target.get_d()) > 1e-6) o.fail("beta differs from (1-alpha)/(2 alpha) on " + to_compact(g));
    if (!b.is_eigenvalue_exact || !*b.is_eigenvalue_exact) o.fail("exact eigenvalue check failed on " + to_compact(g));
  }
  if (codes.size() < 20) o.fail("only " + std::to_string(codes.size()) + " codes with n >= r + 2");
  if (o.pass) {
    o.detail = std::to_string(graphs) + " graphs (" + std::to_string(regular) + " regular), " + std::to_string(codes.size()) +
               " codes with n >= r + 2";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(5005);
  std::size_t normalized = 0;
  auto check_normalize = [&](const SphericalCode& c, const std::string& tag) {
    try {
      const auto res = normalize_max_degree(c);
      const Rational a4 = c.alpha * c.alpha * c.alpha * c.alpha;
      if (Rational(res.graph.max_degree()) * a4 > 6) o.fail(tag + ": degree above 6/alpha^4");
      if (!verify_code(res.code).ok) o.fail(tag + ": normalized code fails verification");
      ++normalized;
    } catch (const Error& e) {
      o.fail(tag + ": " + e.what());
    }
  };

  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_code(rng);
    const auto s = random_subset(rng, c.n());
    const auto sw = switch_code(c, s);
    if (switch_code(sw, s).vectors != c.vectors) o.fail("switch is not an involution");
    for (int i = 0; i < c.n(); ++i) {
      for (int j = i + 1; j < c.n(); ++j) {
        const double before = inner(c.vectors[static_cast<std::size_t>(i)], c.vectors[static_cast<std::size_t>(j)]);
        const double after = inner(sw.vectors[static_cast<std::size_t>(i)], sw.vectors[static_cast<std::size_t>(j)]);
        if (std::abs(before) != std::abs(after)) o.fail("switch changed a line angle");
      }
    }
    check_normalize(c, "random code " + std::to_string(trial));
    check_normalize(sw, "switched random code " + std::to_string(trial));
  }

  for (int k = 2; k <= 4; ++k) {
    for (int r = k; r <= 12; ++r) {
      const auto c = tight_construction(k, r);
      const std::string tag = "construction k=" + std::to_string(k) + " r=" + std::to_string(r);
      std::vector<int> all_but_anchor;
      std::vector<int> odd;
      std::vector<int> first_half;
      for (int i = 1; i < c.n(); ++i) all_but_anchor.push_back(i);
      for (int i = 1; i < c.n(); i += 2) odd.push_back(i);
      for (int i = 0; i < c.n() / 2; ++i) first_half.push_back(i);
      check_normalize(c, tag);
      check_normalize(switch_code(c, all_but_anchor), tag + " all but anchor switched");
      check_normalize(switch_code(c, odd), tag + " odd switched");
      check_normalize(switch_code(c, first_half), tag + " half switched");
      for (int rep = 0; rep < 5; ++rep) check_normalize(switch_code(c, random_subset(rng, c.n())), tag + " random switch");
    }
  }
  if (o.pass) o.detail = "100 random codes switched; " + std::to_string(normalized) + " codes normalized";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int k = 2; k <= 6; ++k) {
    for (int m = 2; m <= 5; ++m) {
      const Graph g = families::clique_union(m, k);
      const std::string tag = std::to_string(m) + "K_" + std::to_string(k);
      const auto exact = multiplicity(g, Rational(k - 1), Mode::exact);
      const auto numeric = multiplicity(g, static_cast<double>(k - 1), Mode::numeric);
      if (exact != static_cast<std::size_t>(m)) o.fail(tag + ": exact multiplicity " + std::to_string(exact));
      if (numeric != exact) o.fail(tag + ": numeric multiplicity " + std::to_string(numeric));
      const auto l2 = second_eigenvalue(g);
      if (std::abs(l2.value - (k - 1)) > 1e-9 || l2.multiplicity != static_cast<std::size_t>(m)) o.fail(tag + ": lambda2 cluster");
      if (std::abs(static_cast<double>(g.n()) / (l2.value + 1) - m) > 1e-9) o.fail(tag + ": n/(lambda2+1) != m");
    }
  }
  if (o.pass) o.detail = "20 clique unions, m_G(k-1) = m exactly and numerically";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::ostringstream detail;
  for (int r = 5; r <= 7; ++r) {
    SearchTask t;
    t.r = r;
    t.alpha = Rational(1, 3);
    t.n_max = 8;
    const auto res = max_lines(t);
    const std::string tag = "r=" + std::to_string(r);
    if (res.best_n < std::min(8, 2 * r - 2)) o.fail(tag + ": best_n " + std::to_string(res.best_n));
    if (res.best_n > r * (r + 1) / 2) o.fail(tag + ": above the absolute bound");
    if (!feasible(res.witness_graph, t.alpha, r)) o.fail(tag + ": witness not feasible");
    if (!verify_code(res.witness_code).ok || res.witness_code.n() != res.best_n || res.witness_code.r != r) o.fail(tag + ": witness code");
    if (graph_from_code(res.witness_code) != res.witness_graph) o.fail(tag + ": witness code and graph disagree");
    detail << tag << " best_n " << res.best_n << "; ";
  }

  std::size_t checks = 0;
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      std::string bits;
      for (int b = 0; b < pairs; ++b) bits.push_back(((mask >> b) & 1u) ? '1' : '0');
      const Graph g = from_adjacency_bits(n, bits);
      for (std::uint32_t sm = 1; sm < (1u << n); ++sm) {
        std::vector<Vertex> s;
        for (int i = 0; i < n; ++i) {
          if ((sm >> i) & 1u) s.push_back(i);
        }
        const Graph h = switch_graph(g, s);
        for (const Rational alpha : {Rational(1, 3), Rational(1, 5)}) {
          const auto fg = feasibility(g, alpha, n);
          const auto fh = feasibility(h, alpha, n);
          // Switching is a congruence by a signature matrix: PSD and rank, hence every r, agree.
          if (fg.psd != fh.psd || fg.rank != fh.rank) o.fail("switching changed feasibility on " + to_compact(g));
          for (int r = 2; r <= 6; ++r) {
            if (feasible(g, alpha, r) != feasible(h, alpha, r)) o.fail("switching changed feasibility on " + to_compact(g));
            ++checks;
          }
        }
      }
    }
  }
  detail << checks << " switching comparisons";
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int r : {10, 100, 1000}) {
    int rc = 0;
    const json rec = cli({"formula", "--k", "2", "--r", std::to_string(r)}, &rc);
    if (rc != 0 || rec["result"]["exact_value"] != std::to_string(2 * r - 2)) o.fail("alpha = 1/3, r = " + std::to_string(r));
  }
  int grid = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int r = k; r <= 12; ++r) {
      int rc = 0;
      const json rec = cli({"formula", "--k", std::to_string(k), "--r", std::to_string(r)}, &rc);
      const long long expected = r - 1 + (r - 1) / (k - 1);
      if (rc != 0 || rec["result"]["construction_count"] != expected || rec["result"]["term_construction"] != std::to_string(expected)) {
        o.fail("k=" + std::to_string(k) + " r=" + std::to_string(r));
      }
      ++grid;
    }
  }
  if (o.pass) o.detail = "2r-2 at r = 10, 100, 1000 and " + std::to_string(grid) + " grid points";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "tight construction", 10, criterion1},
      {2, "Gram relation exact", 60, criterion2},
      {3, "lemma certificate suite", 300, criterion3},
      {4, "beta properties", 60, criterion4},
      {5, "switching and normalization", 60, criterion5},
      {6, "clique-union tightness", 60, criterion6},
      {7, "search oracle consistency", 600, criterion7},
      {8, "formula evaluators", 60, criterion8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << format_decimal(secs) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
