#pragma once

#include <string>
#include <vector>

#include "amalgam/descriptor.hpp"

namespace amalgam {

struct Classification {
  Tri bezout = Tri::Unknown;
  Tri hermite = Tri::Unknown;
  Tri edr = Tri::Unknown;
  /// Labels of the clauses that produced the verdicts, joined with " / ".
  std::string paperCase;
  std::vector<std::string> clauses;
  std::vector<std::string> assumptionsUsed;
};

/// Case analysis over the descriptor's declared flags and the structural
/// facts readable from it (J = 0, J = B, injectivity of the hom kind,
/// f(A) ∩ J = 0 when decidable). Never samples. Verdicts always respect
/// EDR ⇒ Hermite ⇒ Bezout.
Classification classify_amalgamation(const RingDescriptor& ring);

bool chain_holds(const Classification& c);

}  // namespace amalgam
