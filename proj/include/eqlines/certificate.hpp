#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqlines/rational.hpp"

namespace eqlines {

enum class StatementId {
  partial_net,
  disjoint_supports,
  small_eval,
  ball_cover,
  random_deletion,
  dense_regime,
  combined,
  connected_corollary,
  interlacing,
  walk_count,
};

std::string_view to_string(StatementId id);
// Throws ParseError for unknown names.
StatementId parse_statement_id(std::string_view name);
const std::vector<StatementId>& all_statement_ids();

enum class Verdict { holds, vacuous, violated };
std::string_view to_string(Verdict v);

// A recorded number. `exact` is set when the value is known as a rational
// (multiplicities, walk counts, formula constants); `value` always holds the
// floating-point view.
struct Quantity {
  double value = 0.0;
  std::optional<Rational> exact;

  static Quantity real(double x) { return {x, std::nullopt}; }
  static Quantity rational(const Rational& q) { return {q.get_d(), q}; }
  static Quantity integer(long long k) { return rational(Rational(static_cast<long>(k))); }
  static Quantity boolean(bool b) { return integer(b ? 1 : 0); }

  // Fraction string when exact, otherwise 15 significant digits.
  std::string str() const;
};

struct Check {
  std::string label;
  std::string expression;
  bool passed = false;
};

struct Hypothesis {
  std::string label;
  bool met = false;
};

// Machine-checkable record of one instance of an inequality. `holds` is the
// conjunction of the recorded checks, each of which compares recorded
// quantities; a certificate whose hypotheses fail is reported as vacuous,
// never violated.
class BoundCertificate {
 public:
  explicit BoundCertificate(StatementId id, nlohmann::json inputs = nlohmann::json::object());

  StatementId statement() const noexcept { return statement_; }
  const nlohmann::json& inputs() const noexcept { return inputs_; }
  nlohmann::json& inputs() noexcept { return inputs_; }

  void set(const std::string& name, Quantity q);
  void set(const std::string& name, double x) { set(name, Quantity::real(x)); }
  void set_exact(const std::string& name, const Rational& q) { set(name, Quantity::rational(q)); }
  void set_count(const std::string& name, long long k) { set(name, Quantity::integer(k)); }

  bool has(std::string_view name) const;
  // Throws std::out_of_range for unknown names.
  const Quantity& get(std::string_view name) const;
  const std::vector<std::pair<std::string, Quantity>>& computed() const noexcept { return computed_; }

  // lhs <= rhs between two recorded quantities. Exact when both sides are
  // exact; otherwise lhs <= rhs + tol.
  bool require_le(const std::string& label, std::string_view lhs, std::string_view rhs, double tol = 0.0);
  bool require(const std::string& label, const std::string& expression, bool passed);
  void hypothesis(const std::string& label, bool met);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  const std::vector<Hypothesis>& hypotheses() const noexcept { return hypotheses_; }

  bool holds() const;
  bool hypotheses_met() const;
  Verdict verdict() const;

 private:
  StatementId statement_;
  nlohmann::json inputs_;
  std::vector<std::pair<std::string, Quantity>> computed_;
  std::vector<Check> checks_;
  std::vector<Hypothesis> hypotheses_;
};

inline constexpr int kCertificateSchemaVersion = 1;

nlohmann::json to_json(const BoundCertificate& cert);

}  // namespace eqlines
