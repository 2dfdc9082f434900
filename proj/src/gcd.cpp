#include <functional>

#include "amalgam/amalgamation.hpp"
#include "amalgam/concrete.hpp"
#include "amalgam/ring.hpp"
#include "detail.hpp"

namespace amalgam {

namespace {

constexpr int kStripIterations = 4096;

bool gcd_is_unit(const RingValue& a, const RingValue& b) { return is_unit(gcd_certified(a, b).d); }

std::optional<std::pair<RingValue, RingValue>> kaplansky_domain(const RingValue& a, const RingValue& b,
                                                                const RingValue& c) {
  const RingPtr& ring = a.ring();
  if (gcd_is_unit(a, b)) return std::pair{one(ring), zero(ring)};
  if (is_zero(a)) {
    GcdCertificate bc = gcd_certified(b, c);
    return std::pair{is_zero(b) ? one(ring) : bc.alpha, bc.beta};
  }
  RingValue stripped = a;
  for (int i = 0; i < kStripIterations; ++i) {
    GcdCertificate g = gcd_certified(stripped, b);
    if (is_unit(g.d)) return std::pair{one(ring), stripped};
    stripped = g.a1;
  }
  return std::nullopt;
}

std::optional<std::pair<RingValue, RingValue>> kaplansky_any(const RingValue& a, const RingValue& b,
                                                             const RingValue& c) {
  const RingPtr& ring = a.ring();
  if (ring->kind == RingKind::Product) {
    auto l = kaplansky_any(a.left(), b.left(), c.left());
    auto r = kaplansky_any(a.right(), b.right(), c.right());
    if (!l || !r) return std::nullopt;
    return std::pair{RingValue::pair(ring, l->first, r->first), RingValue::pair(ring, l->second, r->second)};
  }
  if (ring->is_amalgamation()) {
    auto t = detail::amalgam_transport(ring);
    if (!t) fail(ErrorKind::CapabilityMissing, "no Kaplansky step in " + ring->key);
    auto m = kaplansky_any(t->to_model(a), t->to_model(b), t->to_model(c));
    if (!m) return std::nullopt;
    return std::pair{t->from_model(m->first), t->from_model(m->second)};
  }
  return kaplansky_domain(a, b, c);
}

}  // namespace

GcdCertificate gcd_certified(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  switch (a.descriptor().kind) {
    case RingKind::Integers: return integer_gcd_certified(a, b);
    case RingKind::Rationals: return field_gcd_certified(a, b);
    case RingKind::PolynomialOverRationals: return polynomial_gcd_certified(a, b);
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return dplusm_gcd_certified(a, b);
    case RingKind::Overring: return overring_gcd_certified(a, b);
    case RingKind::Product: return product_gcd_certified(a, b);
    case RingKind::Amalgamation:
    case RingKind::Duplication: return amalgam_gcd_certified(a, b);
  }
  fail(ErrorKind::CapabilityMissing, "no gcd in " + a.descriptor().key);
}

VerificationReport verify_gcd_certificate(const RingValue& a, const RingValue& b, const GcdCertificate& c) {
  VerificationReport report;
  const std::size_t hint = detail::precision_hint(a.descriptor());
  auto record = [&](const char* name, const std::function<Equality()>& eq) {
    try {
      report.add(name, eq(), hint);
    } catch (const AlgebraError& e) {
      report.add(name, false, e.what());
    }
  };
  record("a = a1*d", [&] { return compare(a, c.a1 * c.d); });
  record("b = b1*d", [&] { return compare(b, c.b1 * c.d); });
  record("alpha*a1 + beta*b1 = 1", [&] { return compare(c.alpha * c.a1 + c.beta * c.b1, one(a.ring())); });
  return report;
}

std::optional<std::pair<RingValue, RingValue>> kaplansky_solve(const RingValue& a, const RingValue& b,
                                                               const RingValue& c) {
  require_same_ring(a, b);
  require_same_ring(a, c);
  if (!capabilities(a.descriptor()).kaplansky)
    fail(ErrorKind::CapabilityMissing, "no Kaplansky step in " + a.descriptor().key);
  if (!is_unit(gcd_certified(gcd_certified(a, b).d, c).d)) return std::nullopt;
  auto pq = kaplansky_any(a, b, c);
  if (!pq) return std::nullopt;
  if (!gcd_is_unit(pq->first * a, pq->first * b + pq->second * c)) return std::nullopt;
  return pq;
}

}  // namespace amalgam
