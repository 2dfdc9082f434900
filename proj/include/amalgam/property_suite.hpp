#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam/descriptor.hpp"

namespace amalgam {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Trials that hit a declined capability or exhausted precision.
  std::size_t skipped = 0;
  /// False when the suite does not apply to the descriptor at all.
  bool applicable = true;
  /// First few failure diagnostics.
  std::vector<std::string> failures;
  std::string note;

  bool ok() const { return failed == 0; }
};

struct PropertyOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  long bound = 12;
};

struct PropertyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

/// Runs every property suite that applies to `ring`: ring axioms, hom laws,
/// closure, gcd soundness, unit inverses, iso laws, classifier chain,
/// witness coherence, duplication reduction, hermite, snf and falsify_flags.
PropertyReport run_property_suite(const RingPtr& ring, const PropertyOptions& options);

struct BatteryCase {
  std::string name;
  RingPtr ring;
  Tri bezout;
  Tri hermite;
  Tri edr;
  /// Clause the verdicts must be labeled with (substring of paperCase).
  std::string clause;
};

/// The fixed classifier battery: Z⋈2Z, Z⋈Z, Z⋈^i(xQ[[x]]) with and without
/// a declared EDR image, Z↪Q[x] with J = B, and eval-at-0 amalgamations of
/// Q[x] with J = xQ[[x]], J = 0 and J = B.
std::vector<BatteryCase> classifier_battery(std::size_t precision);

}  // namespace amalgam
