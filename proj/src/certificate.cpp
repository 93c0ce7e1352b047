#include "eqlines/certificate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {

constexpr std::array<std::pair<StatementId, std::string_view>, 10> kNames{{
    {StatementId::partial_net, "partial_net"},
    {StatementId::disjoint_supports, "disjoint_supports"},
    {StatementId::small_eval, "small_eval"},
    {StatementId::ball_cover, "ball_cover"},
    {StatementId::random_deletion, "random_deletion"},
    {StatementId::dense_regime, "dense_regime"},
    {StatementId::combined, "combined"},
    {StatementId::connected_corollary, "connected_corollary"},
    {StatementId::interlacing, "interlacing"},
    {StatementId::walk_count, "walk_count"},
}};

}  // namespace

std::string_view to_string(StatementId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "unknown";
}

StatementId parse_statement_id(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  // Accepted aliases.
  if (name == "walk_count_identity") return StatementId::walk_count;
  if (name == "ball_cover_reduce") return StatementId::ball_cover;
  if (name == "random_support_deletion") return StatementId::random_deletion;
  throw ParseError("unknown statement id '" + std::string(name) + "'");
}

const std::vector<StatementId>& all_statement_ids() {
  static const std::vector<StatementId> ids = [] {
    std::vector<StatementId> out;
    for (const auto& [k, name] : kNames) out.push_back(k);
    return out;
  }();
  return ids;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::vacuous: return "vacuous";
    case Verdict::violated: return "violated";
  }
  return "unknown";
}

std::string Quantity::str() const {
  if (exact) return to_string(*exact);
  return format_decimal(value);
}

BoundCertificate::BoundCertificate(StatementId id, nlohmann::json inputs)
    : statement_(id), inputs_(std::move(inputs)) {}

void BoundCertificate::set(const std::string& name, Quantity q) {
  for (auto& [k, v] : computed_) {
    if (k == name) {
      v = std::move(q);
      return;
    }
  }
  computed_.emplace_back(name, std::move(q));
}

bool BoundCertificate::has(std::string_view name) const {
  return std::any_of(computed_.begin(), computed_.end(), [&](const auto& kv) { return kv.first == name; });
}

const Quantity& BoundCertificate::get(std::string_view name) const {
  for (const auto& [k, v] : computed_) {
    if (k == name) return v;
  }
  throw std::out_of_range("certificate has no quantity '" + std::string(name) + "'");
}

bool BoundCertificate::require_le(const std::string& label, std::string_view lhs, std::string_view rhs, double tol) {
  const Quantity& a = get(lhs);
  const Quantity& b = get(rhs);
  bool passed = false;
  std::string expr = std::string(lhs) + " <= " + std::string(rhs);
  if (a.exact && b.exact) {
    passed = *a.exact <= *b.exact;
  } else {
    passed = a.value <= b.value + tol;
    if (tol > 0) expr += " + " + format_decimal(tol);
  }
  checks_.push_back({label, expr, passed});
  return passed;
}

bool BoundCertificate::require(const std::string& label, const std::string& expression, bool passed) {
  checks_.push_back({label, expression, passed});
  return passed;
}

void BoundCertificate::hypothesis(const std::string& label, bool met) { hypotheses_.push_back({label, met}); }

bool BoundCertificate::holds() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

bool BoundCertificate::hypotheses_met() const {
  return std::all_of(hypotheses_.begin(), hypotheses_.end(), [](const Hypothesis& h) { return h.met; });
}

Verdict BoundCertificate::verdict() const {
  if (!hypotheses_met()) return Verdict::vacuous;
  return holds() ? Verdict::holds : Verdict::violated;
}

nlohmann::json to_json(const BoundCertificate& cert) {
  nlohmann::json computed = nlohmann::json::object();
  for (const auto& [name, q] : cert.computed()) computed[name] = q.str();
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : cert.checks()) checks.push_back({{"label", c.label}, {"expression", c.expression}, {"passed", c.passed}});
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& h : cert.hypotheses()) hyps.push_back({{"label", h.label}, {"met", h.met}});
  return {
      {"schema_version", kCertificateSchemaVersion},
      {"statement_id", std::string(to_string(cert.statement()))},
      {"inputs", cert.inputs()},
      {"computed", computed},
      {"checks", checks},
      {"hypotheses", hyps},
      {"hypotheses_met", cert.hypotheses_met()},
      {"holds", cert.holds()},
      {"verdict", std::string(to_string(cert.verdict()))},
  };
}

}  // namespace eqlines
