#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlines {

// Base of every error raised by the library. `kind()` is the machine-readable
// reason that the CLI puts into its JSON error records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Bad argument values: out-of-range parameters, malformed subsets, etc.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error("parameter", what) {}
};

// Requested a mode of computation that the operation does not provide.
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what) : Error("capability", what) {}
};

// Input graph lacks a structural property the operation needs (connected, nonempty).
class StructureError : public Error {
 public:
  explicit StructureError(const std::string& what) : Error("structure", what) {}
};

// Two distinct eigenvalue clusters fall inside the tolerance window.
class AmbiguityError : public Error {
 public:
  AmbiguityError(const std::string& what, std::vector<std::size_t> counts)
      : Error("ambiguity", what), counts_(std::move(counts)) {}
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

 private:
  std::vector<std::size_t> counts_;
};

// A spherical code whose inner products or norms are not what they claim.
class CodeIntegrityError : public Error {
 public:
  explicit CodeIntegrityError(const std::string& what) : Error("code_integrity", what) {}
};

// Gram matrix cannot be realized (not PSD, or rank above the target dimension).
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::vector<std::string> witness)
      : Error("infeasible", what), witness_(std::move(witness)) {}
  // Exact witness vector as fraction strings; empty when the failure is a rank excess.
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

// Exhaustive work would exceed the enumeration budget; raised before any work starts.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error("budget", what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

}  // namespace eqlines
