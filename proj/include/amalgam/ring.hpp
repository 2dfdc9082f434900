#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/descriptor.hpp"
#include "amalgam/errors.hpp"

namespace amalgam {

RingValue zero(const RingPtr& ring);
RingValue one(const RingPtr& ring);
/// n·1 in any described ring.
RingValue from_integer(const RingPtr& ring, const Integer& n);
/// q·1 for rings containing Q-scalars of that shape (Q, Q[x], Q[[x]], and
/// D+M / Z when q is integral). Throws InvalidDescriptor otherwise.
RingValue from_rational(const RingPtr& ring, const Rational& q);

RingValue operator+(const RingValue& a, const RingValue& b);
RingValue operator-(const RingValue& a, const RingValue& b);
RingValue operator*(const RingValue& a, const RingValue& b);
RingValue operator-(const RingValue& a);

/// Three-valued equality: series known only to a precision compare as
/// ToPrecision when every known coefficient agrees.
Equality compare(const RingValue& a, const RingValue& b);
inline bool operator==(const RingValue& a, const RingValue& b) { return holds(compare(a, b)); }

bool is_zero(const RingValue& x);
bool is_one(const RingValue& x);

std::optional<RingValue> unit_inverse(const RingValue& x);
inline bool is_unit(const RingValue& x) { return unit_inverse(x).has_value(); }

/// q with a = q·b, absent when no such q exists in the ring. Throws
/// ZeroDivisor when b = 0 and a != 0.
std::optional<RingValue> divide_exact(const RingValue& a, const RingValue& b);
/// a | b.
bool divides(const RingValue& a, const RingValue& b);

/// Division with remainder for Z, Q, Q[x] and Q[[x]] (the rings that take
/// the Euclidean SNF route). CapabilityMissing elsewhere.
std::pair<RingValue, RingValue> euclid_divmod(const RingValue& a, const RingValue& b);
/// Size used for pivot choice: |n| for Z, degree for Q[x], valuation for
/// series, 0 in a field.
Integer pivot_measure(const RingValue& x);

/// Splits a scalar into unit part and normalized part, x = u·n with n the
/// canonical associate (n >= 0 in Z, monic in Q[x], 1 in Q).
std::pair<RingValue, RingValue> unit_normalize(const RingValue& x);

std::string to_string(const RingValue& x);

/// Witness of the Hermite criterion a = a1·d, b = b1·d, alpha·a1 + beta·b1 = 1.
struct GcdCertificate {
  RingValue d;
  RingValue a1;
  RingValue b1;
  RingValue alpha;
  RingValue beta;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string note;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string note = {});
  /// Records an equality; ToPrecision passes with a precision note.
  void add(std::string name, Equality e, std::size_t precision_hint = 0);
  const Check* find(std::string_view name) const;
};

struct Capabilities {
  bool gcd = false;
  bool kaplansky = false;
  bool euclidean = false;
};

Capabilities capabilities(const RingDescriptor& ring);

[[noreturn]] void mixed_rings(const RingValue& a, const RingValue& b);
inline void require_same_ring(const RingValue& a, const RingValue& b) {
  if (a.ring() != b.ring() && !same_ring(a.descriptor(), b.descriptor())) mixed_rings(a, b);
}

GcdCertificate gcd_certified(const RingValue& a, const RingValue& b);
VerificationReport verify_gcd_certificate(const RingValue& a, const RingValue& b, const GcdCertificate& c);

/// (p, q) with gcd(p·a, p·b + q·c) a unit, given gcd(a, b, c) a unit. The
/// returned pair has been re-checked with a gcd certificate. Absent when
/// gcd(a, b, c) is not a unit; CapabilityMissing when the ring has no such
/// step.
std::optional<std::pair<RingValue, RingValue>> kaplansky_solve(const RingValue& a, const RingValue& b,
                                                               const RingValue& c);

}  // namespace amalgam
