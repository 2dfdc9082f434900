#pragma once

#include <optional>

#include "amalgam/ring.hpp"

namespace amalgam {

/// Canonical embedding of x into `target` (Z ⊂ Q ⊂ Q[x] ⊂ Q[[x]], Z into
/// D+M, base into overring, identity on equal rings). InvalidDescriptor when
/// no embedding applies.
RingValue coerce(const RingValue& x, const RingPtr& target);

/// f(a) for the homomorphism of an Amalgamation/Duplication descriptor.
RingValue apply_hom(const RingDescriptor& amalgamation, const RingValue& a);
/// Some a with f(a) = y, defined exactly on the image of f.
std::optional<RingValue> hom_preimage(const RingDescriptor& amalgamation, const RingValue& y);
/// Some a with y - f(a) ∈ J. Unique when f is injective and f(A) ∩ J = 0.
std::optional<RingValue> split_target(const RingDescriptor& amalgamation, const RingValue& y);

/// Membership: exact for Zero/Whole/MultiplesOf; PositiveOrder is
/// "valuation >= 1" (constant term zero) in series and polynomial rings.
bool ideal_contains(const IdealDescriptor& ideal, const RingValue& x);

/// J = 0 / J = B read from the ideal's shape (MultiplesOf 0, MultiplesOf a unit).
bool ideal_is_zero(const RingDescriptor& amalgamation);
bool ideal_is_whole(const RingDescriptor& amalgamation);
/// f(A) ∩ J = 0: structural when decidable from the descriptor, the
/// declaration otherwise.
Tri meet_trivial(const RingDescriptor& amalgamation);

/// (a, f(a) + j). NotInIdeal when j ∉ J.
RingValue amalgam_make(const RingPtr& ring, const RingValue& a, const RingValue& j);
/// (left, right) after checking right - f(left) ∈ J.
RingValue amalgam_from_pair(const RingPtr& ring, const RingValue& left, const RingValue& right);
/// right - f(left).
RingValue amalgam_ideal_part(const RingValue& u);
bool amalgam_invariant_holds(const RingValue& u);

enum class ArithOp { Add, Mul, Neg };
/// Componentwise operation; re-checks the membership invariant on the result.
RingValue amalgam_arith(ArithOp op, const RingValue& u, const RingValue& v);

/// Inverse built as (a⁻¹, f(a⁻¹) + x) with x = -f(a⁻¹)(f(a)+j)⁻¹ j; absent
/// unless both components are units.
std::optional<RingValue> amalgam_invert(const RingValue& u);

/// Concrete descriptor of f(A)+J when we can name it: B itself for J = B,
/// A + xK[[x]] for A ↪ K[[x]] with J = xK[[x]].
std::optional<RingPtr> image_ring(const RingDescriptor& amalgamation);

/// p_B(a, f(a)+j) = f(a)+j, as an element of image_ring() when known (of B
/// otherwise). FlagsViolated unless f is injective and f(A) ∩ J = 0.
RingValue iso_to_target(const RingValue& u);
/// Inverse of iso_to_target; PreimageUndefined when y has no decomposition.
RingValue iso_from_target(const RingPtr& amalgamation, const RingValue& y);

/// Certified gcd through the ring's isomorphic image: componentwise for
/// J = B, through A for J = 0, through p_B when f is injective and
/// f(A) ∩ J = 0. CapabilityMissing otherwise.
GcdCertificate amalgam_gcd_certified(const RingValue& u, const RingValue& v);
bool amalgam_has_gcd(const RingDescriptor& amalgamation);

/// u | v or v | u.
bool valuation_pair_check(const RingValue& u, const RingValue& v);

}  // namespace amalgam
