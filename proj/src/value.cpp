#include "amalgam/value.hpp"

#include "amalgam/descriptor.hpp"
#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

std::size_t expected_index(RingKind kind) {
  switch (kind) {
    case RingKind::Integers: return 0;
    case RingKind::Rationals: return 1;
    case RingKind::PolynomialOverRationals: return 2;
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return 3;
    case RingKind::Product:
    case RingKind::Amalgamation:
    case RingKind::Duplication: return 4;
    case RingKind::Overring: return 5;
  }
  return 0;
}

}  // namespace

RingValue::RingValue(RingPtr ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {
  if (!ring_) fail(ErrorKind::InvalidDescriptor, "value without a ring");
  if (payload_.index() != expected_index(ring_->kind))
    fail(ErrorKind::InvalidDescriptor, "payload shape does not match ring " + ring_->key);
  if (ring_->is_series_ring()) {
    auto& s = std::get<Series>(payload_);
    s = s.truncated(ring_->precision);
    if (ring_->kind == RingKind::DPlusM && ring_->base->kind == RingKind::Integers && s.precision() > 0 &&
        s.coeff(0).get_den() != 1)
      fail(ErrorKind::InvalidDescriptor, "constant term of a D+M element must lie in the base domain");
  }
  if (auto* pair = std::get_if<PairPayload>(&payload_)) {
    if (!pair->left || !pair->right) fail(ErrorKind::InvalidDescriptor, "incomplete pair");
    if (!same_ring(pair->left->descriptor(), *ring_->left) || !same_ring(pair->right->descriptor(), *ring_->right))
      fail(ErrorKind::MixedRings, "pair components do not belong to the factors of " + ring_->key);
  }
  if (auto* frac = std::get_if<FractionPayload>(&payload_)) {
    if (!frac->numerator || !same_ring(frac->numerator->descriptor(), *ring_->base))
      fail(ErrorKind::MixedRings, "overring numerator outside the base ring");
    if (frac->exponents.size() != ring_->generators.size())
      fail(ErrorKind::InvalidDescriptor, "denominator exponent count mismatch");
  }
}

RingValue RingValue::pair(RingPtr ring, RingValue left, RingValue right) {
  return RingValue(std::move(ring), PairPayload{std::make_shared<const RingValue>(std::move(left)),
                                                std::make_shared<const RingValue>(std::move(right))});
}

RingValue RingValue::fraction(RingPtr ring, RingValue numerator, std::vector<unsigned> exponents) {
  return RingValue(std::move(ring),
                   FractionPayload{std::make_shared<const RingValue>(std::move(numerator)), std::move(exponents)});
}

}  // namespace amalgam
