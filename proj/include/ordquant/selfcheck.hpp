#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ordquant {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// First failing case, rendered.
  std::optional<std::string> counterexample;

  bool ok() const { return passed == total; }
};

struct SelfcheckOptions {
  /// Run only the suite with this name; empty runs all.
  std::string filter;
  /// Debug fault injection: use [Q, P] = 2 i hbar and [A, Adag] = 2 in the
  /// rewriting engine.
  bool corrupt_commutator = false;
};

/// symmetrize, ordering, symmetric-expectation, word-expectation,
/// commutator-expectation, laplacian.
const std::vector<std::string>& selfcheck_suite_names();

/// Runs the exact-identity suites. Throws std::invalid_argument on an unknown
/// filter.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options = {});

}  // namespace ordquant
