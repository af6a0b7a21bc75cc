#pragma once

// Seeded randomized verification harness driving the invariants of every
// module over generated families.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latgenus/io.hpp"
#include "latgenus/random.hpp"

namespace latgenus {

/// Suite names accepted in VerifyConfig::checks, in report order.
const std::vector<std::string>& verify_suite_names();

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 50;
  std::size_t max_dim = 2;
  std::size_t max_k = 2;
  long coord_bound = 2;
  std::size_t max_vertices = 4;
  std::vector<std::string> checks;  // empty: every suite
  EnumOptions enum_options;
};

struct SuiteTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct VerifyFailure {
  std::string suite;
  std::size_t case_index = 0;
  std::string detail;
  FamilySpec reproducer;  // shrunk while the suite still fails
};

/// Observed values of e^{p,+} for p > n - k, split by whether dmv > 0.
/// Recorded only; a nonzero value is not a failure.
struct VanishingTally {
  std::size_t positive_cases = 0;
  std::size_t positive_nonzero = 0;
  std::size_t empty_cases = 0;
  std::size_t empty_nonzero = 0;
  std::vector<nlohmann::json> nonzero_examples;  // first few, in case order
};

struct VerifyReport {
  std::vector<std::pair<std::string, SuiteTally>> tallies;
  VanishingTally vanishing;
  std::vector<VerifyFailure> failures;  // first failure per suite
  nlohmann::json sign_convention;
  bool all_passed() const { return failures.empty(); }
  nlohmann::json to_json(const VerifyConfig& cfg) const;
};

/// Runs one named suite on a family. Returns std::nullopt when the suite
/// does not apply (e.g. the mixed-volume identity for k != n), otherwise an
/// empty string on success or a description of the violation.
std::optional<std::string> run_suite(const std::string& suite, const PolytopeFamily& family,
                                     const EnumOptions& opts = {});

/// ME(-1), (-1)^n ME(-1) and the interior sum for conv{0, a e1, a e2} in
/// R^3 paired with the unit segment at height 1, for a = 6 and a = 12.
nlohmann::json sign_convention_report(const EnumOptions& opts = {});

VerifyReport run_verify(const VerifyConfig& cfg);

}  // namespace latgenus
