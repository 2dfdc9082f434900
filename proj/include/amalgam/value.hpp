#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "amalgam/numbers.hpp"
#include "amalgam/polynomial.hpp"
#include "amalgam/series.hpp"

namespace amalgam {

struct RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

class RingValue;

/// Payload of Product, Amalgamation and Duplication elements.
struct PairPayload {
  std::shared_ptr<const RingValue> left;
  std::shared_ptr<const RingValue> right;
};

/// Overring element numerator / prod(g_i^e_i), denominators kept factored
/// over the descriptor's generator list.
struct FractionPayload {
  std::shared_ptr<const RingValue> numerator;
  std::vector<unsigned> exponents;
};

/// An exact element of a described ring. Immutable; copies share structure.
class RingValue {
 public:
  using Payload = std::variant<Integer, Rational, Polynomial, Series, PairPayload, FractionPayload>;

  /// Checks that the payload shape matches the ring kind (InvalidDescriptor
  /// otherwise). Ideal-membership invariants are checked by the amalgamation
  /// constructors, not here.
  RingValue(RingPtr ring, Payload payload);

  const RingPtr& ring() const { return ring_; }
  const RingDescriptor& descriptor() const { return *ring_; }
  const Payload& payload() const { return payload_; }

  const Integer& integer() const { return std::get<Integer>(payload_); }
  const Rational& rational() const { return std::get<Rational>(payload_); }
  const Polynomial& polynomial() const { return std::get<Polynomial>(payload_); }
  const Series& series() const { return std::get<Series>(payload_); }
  const RingValue& left() const { return *std::get<PairPayload>(payload_).left; }
  const RingValue& right() const { return *std::get<PairPayload>(payload_).right; }
  const RingValue& numerator() const { return *std::get<FractionPayload>(payload_).numerator; }
  const std::vector<unsigned>& exponents() const { return std::get<FractionPayload>(payload_).exponents; }

  static RingValue pair(RingPtr ring, RingValue left, RingValue right);
  static RingValue fraction(RingPtr ring, RingValue numerator, std::vector<unsigned> exponents);

 private:
  RingPtr ring_;
  Payload payload_;
};

}  // namespace amalgam
