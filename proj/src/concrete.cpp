#include "amalgam/concrete.hpp"

#include <algorithm>

#include "amalgam/amalgamation.hpp"
#include "detail.hpp"

namespace amalgam {

namespace {

GcdCertificate zero_convention(const RingPtr& ring) {
  return {zero(ring), one(ring), zero(ring), one(ring), zero(ring)};
}

/// Largest k worth trying when looking for n | G^k.
unsigned exponent_bound(const RingValue& n) {
  switch (n.descriptor().kind) {
    case RingKind::Integers: return static_cast<unsigned>(mpz_sizeinbase(n.integer().get_mpz_t(), 2)) + 1;
    case RingKind::PolynomialOverRationals: return static_cast<unsigned>(std::max(0L, n.polynomial().degree())) + 1;
    default: return 8;
  }
}

RingValue generator_product(const RingDescriptor& ring) {
  RingValue g = one(ring.base);
  for (const auto& x : ring.generators) g = g * x;
  return g;
}

}  // namespace

namespace detail {

RingValue overring_denominator(const RingDescriptor& ring, const std::vector<unsigned>& exponents) {
  RingValue d = one(ring.base);
  for (std::size_t i = 0; i < exponents.size(); ++i) d = d * power(ring.generators[i], exponents[i]);
  return d;
}

RingValue overring_make(const RingPtr& ring, RingValue numerator, std::vector<unsigned> exponents) {
  if (is_zero(numerator)) {
    std::fill(exponents.begin(), exponents.end(), 0u);
    return RingValue::fraction(ring, std::move(numerator), std::move(exponents));
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    while (exponents[i] > 0) {
      auto q = divide_exact(numerator, ring->generators[i]);
      if (!q) break;
      numerator = *q;
      --exponents[i];
    }
  }
  return RingValue::fraction(ring, std::move(numerator), std::move(exponents));
}

CommonDenominator overring_common_denominator(const RingValue& u, const RingValue& v) {
  const RingDescriptor& ring = u.descriptor();
  std::vector<unsigned> m(u.exponents().size());
  std::vector<unsigned> du(m.size()), dv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = std::max(u.exponents()[i], v.exponents()[i]);
    du[i] = m[i] - u.exponents()[i];
    dv[i] = m[i] - v.exponents()[i];
  }
  return {u.numerator() * overring_denominator(ring, du), v.numerator() * overring_denominator(ring, dv), m};
}

RingValue overring_add(const RingValue& a, const RingValue& b) {
  auto common = overring_common_denominator(a, b);
  return overring_make(a.ring(), common.a + common.b, common.exponents);
}

RingValue overring_mul(const RingValue& a, const RingValue& b) {
  std::vector<unsigned> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
  return overring_make(a.ring(), a.numerator() * b.numerator(), std::move(e));
}

Equality overring_compare(const RingValue& a, const RingValue& b) {
  const RingDescriptor& ring = a.descriptor();
  return compare(a.numerator() * overring_denominator(ring, b.exponents()),
                 b.numerator() * overring_denominator(ring, a.exponents()));
}

std::optional<RingValue> overring_unit_inverse(const RingValue& x) {
  const RingDescriptor& ring = x.descriptor();
  const RingValue& n = x.numerator();
  if (is_zero(n)) return std::nullopt;
  RingValue g = generator_product(ring);
  RingValue gk = one(ring.base);
  for (unsigned k = 0; k <= exponent_bound(n); ++k, gk = gk * g) {
    if (auto q = divide_exact(gk, n)) {
      return overring_make(x.ring(), *q * overring_denominator(ring, x.exponents()),
                           std::vector<unsigned>(ring.generators.size(), k));
    }
  }
  return std::nullopt;
}

std::optional<RingValue> overring_divide(const RingValue& a, const RingValue& b) {
  const RingDescriptor& ring = a.descriptor();
  RingValue num = a.numerator() * overring_denominator(ring, b.exponents());
  RingValue den = b.numerator() * overring_denominator(ring, a.exponents());
  RingValue g = generator_product(ring);
  RingValue gk = one(ring.base);
  for (unsigned k = 0; k <= exponent_bound(den); ++k, gk = gk * g) {
    if (auto q = divide_exact(num * gk, den))
      return overring_make(a.ring(), *q, std::vector<unsigned>(ring.generators.size(), k));
  }
  return std::nullopt;
}

}  // namespace detail

RingValue overring_value(const RingPtr& ring, const RingValue& numerator, std::vector<unsigned> exponents) {
  if (ring->kind != RingKind::Overring) fail(ErrorKind::InvalidDescriptor, ring->key + " is not an overring");
  if (exponents.size() != ring->generators.size())
    fail(ErrorKind::InvalidDescriptor, "exponent count does not match the generator list");
  return detail::overring_make(ring, coerce(numerator, ring->base), std::move(exponents));
}

SeriesNormalForm series_normalize(const Series& f) {
  auto p = f.valuation();
  if (!p) fail(ErrorKind::ZeroInput, "series_normalize of a zero series");
  Rational lead = f.coeff(*p);
  return {*p, lead, f.unshifted(*p).scaled(1 / lead)};
}

Series series_invert_unit(const Series& f, std::size_t cap) {
  if (f.precision() == 0 || f.coeff(0) == 0) fail(ErrorKind::NotAUnit, "series " + f.to_string() + " is not a unit");
  return Series::invert(f, cap);
}

GcdCertificate integer_gcd_certified(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
  if (g == 0) return zero_convention(ring);
  Integer a1, b1;
  mpz_divexact(a1.get_mpz_t(), a.integer().get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b1.get_mpz_t(), b.integer().get_mpz_t(), g.get_mpz_t());
  return {RingValue(ring, g), RingValue(ring, a1), RingValue(ring, b1), RingValue(ring, s), RingValue(ring, t)};
}

GcdCertificate field_gcd_certified(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  if (is_zero(a) && is_zero(b)) return zero_convention(ring);
  if (!is_zero(a)) return {one(ring), a, b, *unit_inverse(a), zero(ring)};
  return {one(ring), a, b, zero(ring), *unit_inverse(b)};
}

GcdCertificate polynomial_gcd_certified(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  if (is_zero(a) && is_zero(b)) return zero_convention(ring);
  Polynomial r0 = a.polynomial(), r1 = b.polynomial();
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = Polynomial::divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational lc = r0.leading();
  Polynomial g = r0.scaled(1 / lc);
  Polynomial alpha = s0.scaled(1 / lc);
  Polynomial beta = t0.scaled(1 / lc);
  Polynomial a1 = Polynomial::divmod(a.polynomial(), g).first;
  Polynomial b1 = Polynomial::divmod(b.polynomial(), g).first;
  return {RingValue(ring, g), RingValue(ring, a1), RingValue(ring, b1), RingValue(ring, alpha),
          RingValue(ring, beta)};
}

GcdCertificate dplusm_gcd_certified(const RingValue& f, const RingValue& g) {
  require_same_ring(f, g);
  const RingPtr& ring = f.ring();
  if (!ring->is_series_ring()) fail(ErrorKind::CapabilityMissing, "not a series ring: " + ring->key);
  const std::size_t cap = ring->precision;
  const bool integral_base = ring->kind == RingKind::DPlusM && ring->base->kind == RingKind::Integers;
  const Series& F = f.series();
  const Series& G = g.series();
  if (F.is_zero() && G.is_zero()) return zero_convention(ring);

  // canonical associate of lead·x^p: |lead| over Z, 1 over a field
  auto normalized = [&](const Rational& lead) { return integral_base ? Rational(abs(lead)) : Rational(1); };
  auto value = [&](Series s) { return RingValue(ring, std::move(s)); };
  auto cofactor = [&](const Series& s, std::size_t p, const Rational& lead_d) {
    return s.unshifted(p).scaled(1 / lead_d);
  };

  auto single = [&](const Series& S, bool first) -> GcdCertificate {
    std::size_t p = *S.valuation();
    Rational lead_d = normalized(S.coeff(p));
    Series c = cofactor(S, p, lead_d);
    RingValue d = value(Series::monomial(lead_d, p));
    RingValue inv = value(series_invert_unit(c, cap));
    if (first) return {d, value(c), zero(ring), inv, zero(ring)};
    return {d, zero(ring), value(c), zero(ring), inv};
  };
  if (G.is_zero()) return single(F, true);
  if (F.is_zero()) return single(G, false);

  std::size_t p = *F.valuation();
  std::size_t q = *G.valuation();
  if (p != q) {
    bool f_lower = p < q;
    std::size_t m = std::min(p, q);
    const Series& low = f_lower ? F : G;
    Rational lead_d = normalized(low.coeff(m));
    RingValue d = value(Series::monomial(lead_d, m));
    Series a1 = cofactor(F, m, lead_d);
    Series b1 = cofactor(G, m, lead_d);
    if (f_lower) return {d, value(a1), value(b1), value(series_invert_unit(a1, cap)), zero(ring)};
    return {d, value(a1), value(b1), zero(ring), value(series_invert_unit(b1, cap))};
  }

  Rational ap = F.coeff(p);
  Rational bp = G.coeff(p);
  Rational lead_d;
  Rational alpha0, beta0;
  if (integral_base) {
    Integer d0 = lcm(ap.get_den(), bp.get_den());
    Integer a = Integer(ap * d0), b = Integer(bp * d0);
    auto base = integer_gcd_certified(RingValue(ring->base, a), RingValue(ring->base, b));
    lead_d = Rational(base.d.integer(), d0);
    lead_d.canonicalize();
    alpha0 = base.alpha.integer();
    beta0 = base.beta.integer();
  } else {
    lead_d = 1;
    alpha0 = 1 / ap;
    beta0 = 0;
  }
  RingValue d = value(Series::monomial(lead_d, p));
  Series a1 = cofactor(F, p, lead_d);
  Series b1 = cofactor(G, p, lead_d);
  Series uf = F.unshifted(p).scaled(1 / ap);
  Series ug = G.unshifted(p).scaled(1 / bp);
  Series alpha = series_invert_unit(uf, cap).scaled(alpha0);
  Series beta = series_invert_unit(ug, cap).scaled(beta0);
  return {d, value(a1), value(b1), value(alpha), value(beta)};
}

GcdCertificate overring_gcd_certified(const RingValue& u, const RingValue& v) {
  require_same_ring(u, v);
  const RingPtr& ring = u.ring();
  if (!capabilities(*ring->base).gcd) fail(ErrorKind::CapabilityMissing, "overring base has no gcd");
  auto common = detail::overring_common_denominator(u, v);
  GcdCertificate base = gcd_certified(common.a, common.b);
  const std::vector<unsigned> unit_den(ring->generators.size(), 0);
  auto lift = [&](const RingValue& x) { return detail::overring_make(ring, x, unit_den); };
  return {detail::overring_make(ring, base.d, common.exponents), lift(base.a1), lift(base.b1), lift(base.alpha),
          lift(base.beta)};
}

GcdCertificate product_gcd_certified(const RingValue& u, const RingValue& v) {
  require_same_ring(u, v);
  const RingPtr& ring = u.ring();
  GcdCertificate l = gcd_certified(u.left(), v.left());
  GcdCertificate r = gcd_certified(u.right(), v.right());
  auto pair = [&](const RingValue& x, const RingValue& y) { return RingValue::pair(ring, x, y); };
  return {pair(l.d, r.d), pair(l.a1, r.a1), pair(l.b1, r.b1), pair(l.alpha, r.alpha), pair(l.beta, r.beta)};
}

}  // namespace amalgam
