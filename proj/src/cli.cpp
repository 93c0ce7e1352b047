#include "eqlines/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqlines/bounds.hpp"
#include "eqlines/campaign.hpp"
#include "eqlines/equiangular.hpp"
#include "eqlines/errors.hpp"
#include "eqlines/io.hpp"
#include "eqlines/search.hpp"
#include "eqlines/spectrum.hpp"

namespace eqlines {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json record(const std::string& command, json config, const std::string& status, json result) {
  return {{"format_version", kFormatVersion},
          {"command", command},
          {"config", std::move(config)},
          {"timestamp", utc_timestamp()},
          {"status", status},
          {"result", std::move(result)}};
}

int exit_code_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "code_integrity" || k == "infeasible") return kExitVerification;
  return kExitUsage;
}

void write_artifact(const std::string& dir, const std::string& name, const std::string& content, json& written) {
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / name).string();
  write_file(path, content);
  written.push_back(path);
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

struct Context {
  std::ostream& out;
  std::ostream& err;
};

// ---------------------------------------------------------------------------

struct ConstructArgs {
  int k = 2;
  int r = 2;
  std::string out_dir;
};

int cmd_construct(const ConstructArgs& a, Context& ctx) {
  const json config = {{"k", a.k}, {"r", a.r}, {"out_dir", a.out_dir},
                       {"construction_tol", kConstructionTol}, {"verification_tol", kVerificationTol}};
  const Graph g = tight_construction_graph(a.k, a.r);
  const Rational alpha(1, 2 * a.k - 1);
  const GramMatrix gm = gram_from_graph(g, alpha);
  const PsdCertificate psd = psd_certificate(gm.m);
  const SphericalCode code = tight_construction(a.k, a.r);
  const CodeCheck check = verify_code(code);
  const Graph back = graph_from_code(code);
  const long long expected = construction_count(a.k, a.r);

  const json checks = {
      {"vector_count_matches_formula", code.n() == expected},
      {"gram_psd_exact", psd.is_psd},
      {"gram_rank_at_most_r", psd.rank <= static_cast<std::size_t>(a.r)},
      {"code_within_tolerance", check.ok},
      {"corresponding_graph_round_trip", back == g},
  };
  bool pass = true;
  for (const auto& [name, ok] : checks.items()) pass = pass && ok.get<bool>();

  json result = {
      {"n", code.n()},
      {"expected_n", expected},
      {"alpha", to_string(alpha)},
      {"cliques", (a.r - 1) / (a.k - 1)},
      {"gram_rank", psd.rank},
      {"max_norm_error", format_decimal(check.worst_norm_error)},
      {"max_inner_product_error", format_decimal(check.worst_inner_error)},
      {"checks", checks},
      {"verification", pass ? "pass" : "fail"},
      {"graph", to_compact(g)},
  };
  const json provenance = {{"command", "construct"}, {"k", a.k}, {"r", a.r}};
  if (!a.out_dir.empty()) {
    json written = json::array();
    write_artifact(a.out_dir, "code.json", code_to_json(code, provenance).dump(2) + "\n", written);
    write_artifact(a.out_dir, "graph.txt", format_graph(g), written);
    write_artifact(a.out_dir, "gram.json", gram_to_json(gm).dump(2) + "\n", written);
    write_artifact(a.out_dir, "verification.json", json{{"checks", checks}, {"verification", pass ? "pass" : "fail"}}.dump(2) + "\n", written);
    result["files"] = written;
  } else {
    result["code"] = code_to_json(code, provenance);
  }
  ctx.out << record("construct", config, pass ? "pass" : "fail", result).dump(2) << '\n';
  return pass ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string code_file;
  double tol = kVerificationTol;
};

int cmd_verify(const VerifyArgs& a, Context& ctx) {
  const json config = {{"code_file", a.code_file}, {"tol", a.tol}};
  const SphericalCode code = code_from_json(parse_json(read_file(a.code_file)));
  const CodeCheck check = verify_code(code, a.tol, a.tol);
  json result = {
      {"n", code.n()},
      {"r", code.r},
      {"alpha", to_string(code.alpha)},
      {"max_norm_error", format_decimal(check.worst_norm_error)},
      {"worst_norm_index", check.worst_norm_index},
      {"max_inner_product_error", format_decimal(check.worst_inner_error)},
      {"worst_pair", {check.worst_pair.first, check.worst_pair.second}},
  };
  if (!check.ok) {
    result["failure"] = check.message;
    ctx.out << record("verify", config, "fail", result).dump(2) << '\n';
    ctx.err << "verification failed: " << check.message << '\n';
    return kExitVerification;
  }
  const Graph g = graph_from_code(code, a.tol);
  const Rational target = beta_target(code.alpha);
  const bool equality_case = code.n() >= code.r + 2;
  result["graph"] = to_compact(degree_sorted(g));
  result["edges"] = g.edges();
  result["beta_target"] = to_string(target);

  bool pass = true;
  json beta_report = json::object();
  const Feasibility feas = feasibility(g, code.alpha, code.r);
  beta_report["gram_psd_exact"] = feas.psd;
  beta_report["gram_rank"] = feas.rank;
  beta_report["gram_rank_at_most_r"] = feas.psd && feas.rank <= static_cast<std::size_t>(code.r);
  pass = pass && feas.feasible;
  if (code.n() >= 2) {
    const BetaResult b = beta(g, equality_case ? std::optional<Rational>(target) : std::nullopt);
    result["beta"] = format_decimal(b.value);
    const bool upper = b.value <= target.get_d() + 1e-6;
    beta_report["beta_at_most_target"] = upper;
    pass = pass && upper;
    beta_report["equality_case_applies"] = equality_case;
    if (equality_case) {
      const bool equal = std::abs(b.value - target.get_d()) <= 1e-6;
      beta_report["beta_equals_target"] = equal;
      beta_report["target_is_eigenvalue_on_ones_perp"] = b.is_eigenvalue_exact.value_or(false);
      pass = pass && equal && b.is_eigenvalue_exact.value_or(false);
    }
  }
  result["beta_checks"] = beta_report;
  result["verification"] = pass ? "pass" : "fail";
  ctx.out << record("verify", config, pass ? "pass" : "fail", result).dump(2) << '\n';
  return pass ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------

struct GraphArgs {
  std::string graph_file;
  std::optional<double> tol;
  std::string mode = "numeric";
  std::string lambda;
  std::string candidate;
};

int cmd_spectrum(const GraphArgs& a, Context& ctx) {
  json config = {{"graph_file", a.graph_file}, {"mode", a.mode}};
  if (a.tol) config["tol"] = *a.tol;
  const Graph g = load_graph(a.graph_file);
  const Mode mode = a.mode == "exact" ? Mode::exact : Mode::numeric;
  const Spectrum s = spectrum(g, mode, a.tol);
  json result = spectrum_to_json(s);
  result["n"] = g.n();
  ctx.out << record("spectrum", config, "pass", result).dump(2) << '\n';
  return kExitOk;
}

int cmd_multiplicity(const GraphArgs& a, Context& ctx) {
  const double tol = a.tol.value_or(1e-8);
  const json config = {{"graph_file", a.graph_file}, {"mode", a.mode}, {"lambda", a.lambda}, {"tol", tol}};
  const Graph g = load_graph(a.graph_file);
  std::size_t m = 0;
  if (a.mode == "exact") {
    m = multiplicity(g, parse_rational(a.lambda), Mode::exact);
  } else {
    double lam = 0;
    try {
      lam = parse_rational(a.lambda).get_d();
    } catch (const ParseError&) {
      try {
        lam = std::stod(a.lambda);
      } catch (const std::exception&) {
        throw ParseError("cannot read eigenvalue '" + a.lambda + "'");
      }
    }
    m = multiplicity(g, lam, Mode::numeric, tol);
  }
  ctx.out << record("multiplicity", config, "pass", {{"multiplicity", m}, {"n", g.n()}}).dump(2) << '\n';
  return kExitOk;
}

int cmd_beta(const GraphArgs& a, Context& ctx) {
  const json config = {{"graph_file", a.graph_file}, {"candidate", a.candidate}};
  const Graph g = load_graph(a.graph_file);
  std::optional<Rational> candidate;
  if (!a.candidate.empty()) candidate = parse_rational(a.candidate);
  const BetaResult b = beta(g, candidate);
  json result = {{"beta", format_decimal(b.value)}};
  if (b.is_eigenvalue_exact) result["is_eigenvalue_exact"] = *b.is_eigenvalue_exact;
  if (g.n() >= 2) result["lambda2"] = format_decimal(spectrum(g).lambda2());
  ctx.out << record("beta", config, "pass", result).dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct NormalizeArgs {
  std::string code_file;
  std::string out_file;
};

int cmd_normalize(const NormalizeArgs& a, Context& ctx) {
  const json config = {{"code_file", a.code_file}, {"out", a.out_file}};
  const SphericalCode code = code_from_json(parse_json(read_file(a.code_file)));
  const NormalizedCode norm = normalize_max_degree(code);
  json result = {
      {"n", norm.code.n()},
      {"switched", norm.switched},
      {"anchor_degree", norm.anchor_degree},
      {"max_degree_without_anchor", norm.max_degree_without_anchor},
      {"max_degree", norm.graph.max_degree()},
      {"degree_cap", to_string(norm.degree_cap)},
      {"low_threshold", to_string(norm.low_threshold)},
      {"within_cap", Rational(norm.graph.max_degree()) <= norm.degree_cap},
      {"graph", to_compact(norm.graph)},
  };
  const json provenance = {{"command", "normalize"}, {"source", a.code_file}};
  if (!a.out_file.empty()) {
    write_file(a.out_file, code_to_json(norm.code, provenance).dump(2) + "\n");
    result["file"] = a.out_file;
  } else {
    result["code"] = code_to_json(norm.code, provenance);
  }
  ctx.out << record("normalize", config, "pass", result).dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::string graph_file;
  std::string family_name;
  int n_max = 6;
  int count = 100;
  std::vector<std::string> statements;
  std::uint64_t seed = 1;
  int instances = 2;
  std::optional<double> epsilon;
  std::string lambda2;
  bool summary_only = false;
  std::string code_file;
  std::optional<long long> mc_value;
};

int cmd_bounds(const BoundsArgs& a, Context& ctx) {
  if (a.statements.empty()) throw ParameterError("--statements needs at least one statement id");
  if (a.graph_file.empty() == a.family_name.empty()) throw ParameterError("give exactly one of --graph and --family");
  std::vector<StatementId> ids;
  for (const auto& s : a.statements) ids.push_back(parse_statement_id(s));

  json config = {{"statements", a.statements}, {"seed", a.seed}, {"instances", a.instances}};
  if (!a.graph_file.empty()) config["graph_file"] = a.graph_file;
  if (!a.family_name.empty()) {
    config["family"] = a.family_name;
    config["n_max"] = a.n_max;
    config["count"] = a.count;
  }
  if (a.epsilon) config["epsilon"] = *a.epsilon;
  if (!a.lambda2.empty()) config["lambda2"] = a.lambda2;

  const std::vector<Graph> graphs = a.graph_file.empty() ? family(a.family_name, a.n_max, a.seed, a.count)
                                                         : std::vector<Graph>{load_graph(a.graph_file)};
  CampaignOptions options{a.seed, a.instances, a.epsilon};
  CampaignSummary summary;
  auto sink = [&](const BoundCertificate& cert) {
    if (!a.summary_only || cert.verdict() == Verdict::violated) ctx.out << to_json(cert).dump() << '\n';
  };
  if (!a.lambda2.empty()) {
    // A supplied rational lambda_2 switches the closed-form evaluators to exact multiplicity.
    const BoundOptions bopts{parse_rational(a.lambda2), a.epsilon};
    std::vector<StatementId> rest;
    for (const Graph& g : graphs) {
      for (StatementId id : ids) {
        if (id == StatementId::dense_regime || id == StatementId::combined || id == StatementId::connected_corollary) {
          const BoundCertificate cert = evaluate_bounds(g, id, bopts);
          summary.add(cert);
          sink(cert);
        }
      }
    }
    for (StatementId id : ids) {
      if (id != StatementId::dense_regime && id != StatementId::combined && id != StatementId::connected_corollary) rest.push_back(id);
    }
    if (!rest.empty()) {
      const CampaignSummary more = run_campaign(graphs, rest, options, sink);
      summary.holds += more.holds;
      summary.vacuous += more.vacuous;
      summary.violated += more.violated;
    }
  } else {
    summary = run_campaign(graphs, ids, options, sink);
  }

  json result = {{"graphs", graphs.size()},
                 {"summary", {{"holds", summary.holds}, {"vacuous", summary.vacuous}, {"violated", summary.violated}}}};
  bool lines_ok = true;
  if (!a.code_file.empty()) {
    if (!a.mc_value) throw ParameterError("--code needs --mc-value");
    const SphericalCode code = code_from_json(parse_json(read_file(a.code_file)));
    const LinesBoundReport rep = lines_to_multiplicity_bound(code, *a.mc_value);
    result["lines_to_multiplicity"] = to_json(rep);
    lines_ok = rep.holds.value_or(true);
  }
  const bool ok = summary.violated == 0 && lines_ok;
  ctx.out << record("bounds", config, ok ? "pass" : "violated", result).dump() << '\n';
  return ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  int r = 2;
  std::string alpha;
  int n_max = 4;
  std::string canonicalize = "auto";
  bool no_switching_reduction = false;
  std::string out_dir;
};

int cmd_search(const SearchArgs& a, Context& ctx) {
  SearchTask task;
  task.r = a.r;
  task.alpha = parse_rational(a.alpha);
  task.n_max = a.n_max;
  if (a.canonicalize == "true") task.canonicalize = true;
  else if (a.canonicalize == "false") task.canonicalize = false;
  else if (a.canonicalize != "auto") throw ParameterError("--canonicalize takes true, false or auto");
  task.switching_reduction = !a.no_switching_reduction;

  json config = to_json(task);
  config["out_dir"] = a.out_dir;
  const SearchResult res = max_lines(task);
  const Graph witness = degree_sorted(res.witness_graph);
  const SphericalCode witness_code = realize_code(gram_from_graph(witness, task.alpha), task.r);
  const CodeCheck check = verify_code(witness_code);
  json candidates = json::object();
  for (std::size_t n = 1; n < res.candidates_per_n.size(); ++n) {
    if (res.candidates_per_n[n] > 0) candidates[std::to_string(n)] = res.candidates_per_n[n];
  }
  json result = {
      {"best_n", res.best_n},
      {"exhausted", res.exhausted},
      {"witness_graph", to_compact(witness)},
      {"witness_verified", check.ok},
      {"absolute_bound", (task.r + 1) * task.r / 2},
      {"candidates_per_n", candidates},
  };
  const json provenance = {{"command", "search"}, {"task", to_json(task)}};
  if (!a.out_dir.empty()) {
    json written = json::array();
    write_artifact(a.out_dir, "witness_graph.txt", format_graph(witness), written);
    write_artifact(a.out_dir, "witness_code.json", code_to_json(witness_code, provenance).dump(2) + "\n", written);
    result["files"] = written;
  } else {
    result["witness_code"] = code_to_json(witness_code, provenance);
  }
  ctx.out << record("search", config, check.ok ? "pass" : "fail", result).dump(2) << '\n';
  return check.ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------

struct FormulaArgs {
  long long r = 2;
  std::string alpha;
  std::optional<int> k;
  std::string regime = "main";
};

int cmd_formula(const FormulaArgs& a, Context& ctx) {
  if (a.alpha.empty() == !a.k.has_value()) throw ParameterError("give exactly one of --alpha and --k");
  if (a.k && *a.k < 2) throw ParameterError("k must be at least 2");
  if (a.regime != "main" && a.regime != "superpolynomial") throw ParameterError("--regime takes main or superpolynomial");
  const Rational alpha = a.k ? Rational(1, 2 * *a.k - 1) : parse_rational(a.alpha);
  const Regime regime = a.regime == "main" ? Regime::main : Regime::superpolynomial;
  json config = {{"r", a.r}, {"alpha", to_string(alpha)}, {"regime", a.regime}};
  if (a.k) config["k"] = *a.k;
  const LinesBoundReport rep = max_lines_bound(a.r, alpha, regime);
  json result = to_json(rep);
  if (rep.k) result["construction_count"] = construction_count(*rep.k, a.r);
  ctx.out << record("formula", config, "pass", result).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equiangular lines and second eigenvalue multiplicity toolkit", "eqlines"};
  app.require_subcommand(1);
  Context ctx{out, err};

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build and verify the tight code for alpha = 1/(2k-1) in R^r");
  construct->add_option("--k", construct_args.k, "Clique order k >= 2")->required();
  construct->add_option("--r", construct_args.r, "Dimension r >= k")->required();
  construct->add_option("--out-dir", construct_args.out_dir, "Write code.json, graph.txt, gram.json and verification.json here");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a code file and report its graph and beta");
  verify->add_option("code_file", verify_args.code_file, "Code JSON file")->required();
  verify->add_option("--tol", verify_args.tol, "Norm and inner-product tolerance");

  GraphArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum of a graph");
  spectrum_cmd->add_option("--graph", spectrum_args.graph_file, "Graph file")->required();
  spectrum_cmd->add_option("--tol", spectrum_args.tol, "Cluster tolerance");
  spectrum_cmd->add_option("--mode", spectrum_args.mode, "numeric or exact")->check(CLI::IsMember({"numeric", "exact"}));

  GraphArgs mult_args;
  auto* mult = app.add_subcommand("multiplicity", "Multiplicity of an eigenvalue");
  mult->add_option("--graph", mult_args.graph_file, "Graph file")->required();
  mult->add_option("--lambda", mult_args.lambda, "Eigenvalue, p/q in exact mode")->required();
  mult->add_option("--mode", mult_args.mode, "exact or numeric")->check(CLI::IsMember({"numeric", "exact"}));
  mult->add_option("--tol", mult_args.tol, "Numeric window");

  GraphArgs beta_args;
  auto* beta_cmd = app.add_subcommand("beta", "Largest Rayleigh quotient orthogonal to the all-ones vector");
  beta_cmd->add_option("--graph", beta_args.graph_file, "Graph file")->required();
  beta_cmd->add_option("--candidate", beta_args.candidate, "Rational value to test exactly as an eigenvalue on the hyperplane");

  NormalizeArgs norm_args;
  auto* norm = app.add_subcommand("normalize", "Switch a code to bounded maximum degree");
  norm->add_option("code_file", norm_args.code_file, "Code JSON file")->required();
  norm->add_option("--out", norm_args.out_file, "Write the normalized code here");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Run bound certificates over a graph or a generated family");
  bounds->add_option("--graph", bounds_args.graph_file, "Graph file");
  bounds->add_option("--family", bounds_args.family_name, "all, all-connected, random, random-connected, cliques, cycles, paths");
  bounds->add_option("--n-max", bounds_args.n_max, "Largest order in the family");
  bounds->add_option("--count", bounds_args.count, "Size of random families");
  bounds->add_option("--statements", bounds_args.statements, "Comma-separated statement ids")->delimiter(',');
  bounds->add_option("--seed", bounds_args.seed, "Seed for randomized instances");
  bounds->add_option("--instances", bounds_args.instances, "Random instances per graph");
  bounds->add_option("--epsilon", bounds_args.epsilon, "Exponent for the n/(lambda2+1) + n^eps bound");
  bounds->add_option("--lambda2", bounds_args.lambda2, "Rational lambda2 for exact closed-form evaluation");
  bounds->add_flag("--summary-only", bounds_args.summary_only, "Print only violations and the summary");
  bounds->add_option("--code", bounds_args.code_file, "Code file for the lines-to-multiplicity bound");
  bounds->add_option("--mc-value", bounds_args.mc_value, "Multiplicity value for the lines-to-multiplicity bound");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive maximum number of equiangular lines");
  search_cmd->add_option("--r", search_args.r, "Dimension")->required();
  search_cmd->add_option("--alpha", search_args.alpha, "alpha as p/q")->required();
  search_cmd->add_option("--n-max", search_args.n_max, "Enumeration ceiling (<= 9)")->required();
  search_cmd->add_option("--canonicalize", search_args.canonicalize, "true, false or auto");
  search_cmd->add_flag("--no-switching-reduction", search_args.no_switching_reduction, "Enumerate every graph, not one per switching class");
  search_cmd->add_option("--out-dir", search_args.out_dir, "Write witness_graph.txt and witness_code.json here");

  FormulaArgs formula_args;
  auto* formula = app.add_subcommand("formula", "Evaluate the line-count bounds");
  formula->add_option("--r", formula_args.r, "Dimension r >= 2")->required();
  formula->add_option("--alpha", formula_args.alpha, "alpha as p/q");
  formula->add_option("--k", formula_args.k, "Use alpha = 1/(2k-1)");
  formula->add_option("--regime", formula_args.regime, "main or superpolynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    out << json{{"format_version", kFormatVersion}, {"status", "error"}, {"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
    return kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*construct) return cmd_construct(construct_args, ctx);
    if (*verify) return cmd_verify(verify_args, ctx);
    if (*spectrum_cmd) return cmd_spectrum(spectrum_args, ctx);
    if (*mult) return cmd_multiplicity(mult_args, ctx);
    if (*beta_cmd) return cmd_beta(beta_args, ctx);
    if (*norm) return cmd_normalize(norm_args, ctx);
    if (*bounds) return cmd_bounds(bounds_args, ctx);
    if (*search_cmd) return cmd_search(search_args, ctx);
    if (*formula) return cmd_formula(formula_args, ctx);
  } catch (const Error& e) {
    json error = {{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* inf = dynamic_cast<const InfeasibleError*>(&e)) error["witness"] = inf->witness();
    if (const auto* amb = dynamic_cast<const AmbiguityError*>(&e)) error["counts"] = amb->counts();
    out << json{{"format_version", kFormatVersion}, {"command", command}, {"status", "error"}, {"error", error}}.dump() << '\n';
    err << command << ": " << e.kind() << " error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    out << json{{"format_version", kFormatVersion}, {"command", command}, {"status", "error"},
                {"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << '\n';
    err << command << ": internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace eqlines
