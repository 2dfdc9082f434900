#pragma once

// Internal helpers shared between translation units.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam::detail {

RingValue power(const RingValue& x, unsigned k);
/// Largest series precision inside a descriptor tree, 0 when none.
std::size_t precision_hint(const RingDescriptor& ring);

// Overring R' = base[1/g_1, ..., 1/g_k].
RingValue overring_denominator(const RingDescriptor& ring, const std::vector<unsigned>& exponents);
/// num / prod g_i^e_i, cancelling generator factors the numerator absorbs.
RingValue overring_make(const RingPtr& ring, RingValue numerator, std::vector<unsigned> exponents);
RingValue overring_add(const RingValue& a, const RingValue& b);
RingValue overring_mul(const RingValue& a, const RingValue& b);
Equality overring_compare(const RingValue& a, const RingValue& b);
std::optional<RingValue> overring_unit_inverse(const RingValue& x);
std::optional<RingValue> overring_divide(const RingValue& a, const RingValue& b);
/// Brings u, v over the common denominator prod g_i^max(e_i); returns the
/// two base numerators and the shared exponents.
struct CommonDenominator {
  RingValue a;
  RingValue b;
  std::vector<unsigned> exponents;
};
CommonDenominator overring_common_denominator(const RingValue& u, const RingValue& v);

/// Isomorphic model of an amalgamation: A for J = 0, A×B for J = B, the
/// image ring f(A)+J through p_B when f is injective and f(A) ∩ J = 0.
struct Transport {
  RingPtr model;
  std::function<RingValue(const RingValue&)> to_model;
  std::function<RingValue(const RingValue&)> from_model;
  std::string route;
};
std::optional<Transport> amalgam_transport(const RingPtr& amalgamation);
/// The model ring alone (no value maps).
std::optional<RingPtr> amalgam_model(const RingDescriptor& amalgamation);

}  // namespace amalgam::detail
