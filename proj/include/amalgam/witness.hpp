#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

struct GeneratorSearch {
  std::optional<RingValue> generator;
  /// Ring coefficients r_k with generator = sum r_k · gens[k].
  std::vector<RingValue> combination;
  /// The whole candidate range was examined.
  bool exhaustive = false;
  long bound = 0;
  std::size_t candidates = 0;
};

/// Looks for a principal generator of the ideal spanned by `gens` in an
/// amalgamation or product whose components are all Z. Candidates are
/// (a, f(a)+j) with |a|, |j| <= bound, ordered by (|a|, |j|), positive
/// first. A candidate is accepted when it divides every generator and lies
/// in the ideal, which is decided exactly over the ring's Z-basis.
/// NotEnumerable for other rings; at most 4 generators.
GeneratorSearch principal_generator_search(const std::vector<RingValue>& gens, long bound);

struct Refutation {
  std::string claim;
  std::string witness;
};

struct FalsifyReport {
  std::vector<Refutation> refutations;
  /// Advisory findings; never proofs.
  std::vector<std::string> advisories;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Random search for violations of the descriptor's declared hypotheses:
/// a nonzero f(a) ∈ J refutes f(A) ∩ J = 0, a nonzero a with f(a) = 0
/// refutes injectivity, and a pair with no bounded principal generator is
/// reported against a Bezout declaration.
FalsifyReport falsify_flags(const RingPtr& ring, std::size_t samples, std::uint64_t seed, long bound = 6);

}  // namespace amalgam
