#include "amalgam/ring.hpp"

#include <algorithm>

#include "amalgam/amalgamation.hpp"
#include "detail.hpp"

namespace amalgam {

namespace {

enum class DivKind { Unique, Any, None };

struct DivResult {
  DivKind kind = DivKind::None;
  std::optional<RingValue> q;
};

DivResult none() { return {DivKind::None, std::nullopt}; }
DivResult unique(RingValue q) { return {DivKind::Unique, std::move(q)}; }

bool is_component_zero(const RingValue& x) { return is_zero(x); }

DivResult divide_impl(const RingValue& a, const RingValue& b);

DivResult divide_pair(const RingValue& a, const RingValue& b) {
  const RingPtr& ring = a.ring();
  DivResult l = divide_impl(a.left(), b.left());
  DivResult r = divide_impl(a.right(), b.right());
  if (l.kind == DivKind::None || r.kind == DivKind::None) return none();
  if (ring->kind == RingKind::Product) {
    bool any = l.kind == DivKind::Any && r.kind == DivKind::Any;
    return {any ? DivKind::Any : DivKind::Unique, RingValue::pair(ring, *l.q, *r.q)};
  }
  // Amalgamation: components are divided independently, then the quotient
  // must satisfy the membership invariant. A free component (0/0) is chosen
  // to make the invariant hold. Quotients are taken to be unique in nonzero
  // components, which is true when A and B are domains.
  if (l.kind == DivKind::Any && r.kind == DivKind::Any) return {DivKind::Any, zero(ring)};
  if (r.kind == DivKind::Any) return unique(RingValue::pair(ring, *l.q, apply_hom(*ring, *l.q)));
  if (l.kind == DivKind::Any) {
    std::vector<RingValue> candidates;
    if (auto s = split_target(*ring, *r.q)) candidates.push_back(*s);
    candidates.push_back(zero(ring->left));
    for (const auto& c : candidates) {
      RingValue q = RingValue::pair(ring, c, *r.q);
      if (amalgam_invariant_holds(q)) return unique(q);
    }
    return none();
  }
  RingValue q = RingValue::pair(ring, *l.q, *r.q);
  if (!amalgam_invariant_holds(q)) return none();
  return unique(q);
}

DivResult divide_impl(const RingValue& a, const RingValue& b) {
  const RingPtr& ring = a.ring();
  if (ring->is_pair_ring()) return divide_pair(a, b);
  if (is_component_zero(b)) {
    if (is_component_zero(a)) return {DivKind::Any, zero(ring)};
    if (ring->is_series_ring() && !b.series().is_exact())
      fail(ErrorKind::PrecisionExhausted, "divisor is zero to the known precision");
    return none();
  }
  switch (ring->kind) {
    case RingKind::Integers: {
      if (!mpz_divisible_p(a.integer().get_mpz_t(), b.integer().get_mpz_t())) return none();
      Integer q;
      mpz_divexact(q.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
      return unique(RingValue(ring, q));
    }
    case RingKind::Rationals:
      return unique(RingValue(ring, Rational(a.rational() / b.rational())));
    case RingKind::PolynomialOverRationals: {
      auto [q, r] = Polynomial::divmod(a.polynomial(), b.polynomial());
      if (!r.is_zero()) return none();
      return unique(RingValue(ring, q));
    }
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      auto q = Series::divide(a.series(), b.series(), ring->precision);
      if (!q) return none();
      if (ring->kind == RingKind::DPlusM && ring->base->kind == RingKind::Integers && q->precision() > 0 &&
          q->coeff(0).get_den() != 1)
        return none();
      return unique(RingValue(ring, *q));
    }
    case RingKind::Overring: {
      auto q = detail::overring_divide(a, b);
      if (!q) return none();
      return unique(*q);
    }
    default:
      break;
  }
  return none();
}

}  // namespace

RingValue zero(const RingPtr& ring) {
  switch (ring->kind) {
    case RingKind::Integers: return RingValue(ring, Integer(0));
    case RingKind::Rationals: return RingValue(ring, Rational(0));
    case RingKind::PolynomialOverRationals: return RingValue(ring, Polynomial{});
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return RingValue(ring, Series{});
    case RingKind::Overring:
      return RingValue::fraction(ring, zero(ring->base), std::vector<unsigned>(ring->generators.size(), 0));
    case RingKind::Product:
    case RingKind::Amalgamation:
    case RingKind::Duplication: return RingValue::pair(ring, zero(ring->left), zero(ring->right));
  }
  fail(ErrorKind::InvalidDescriptor, "unknown ring kind");
}

RingValue one(const RingPtr& ring) { return from_integer(ring, 1); }

RingValue from_integer(const RingPtr& ring, const Integer& n) {
  switch (ring->kind) {
    case RingKind::Integers: return RingValue(ring, n);
    case RingKind::Rationals: return RingValue(ring, Rational(n));
    case RingKind::PolynomialOverRationals: return RingValue(ring, Polynomial::constant(Rational(n)));
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return RingValue(ring, Series::constant(Rational(n)));
    case RingKind::Overring:
      return RingValue::fraction(ring, from_integer(ring->base, n), std::vector<unsigned>(ring->generators.size(), 0));
    case RingKind::Product:
    case RingKind::Amalgamation:
    case RingKind::Duplication:
      return RingValue::pair(ring, from_integer(ring->left, n), from_integer(ring->right, n));
  }
  fail(ErrorKind::InvalidDescriptor, "unknown ring kind");
}

RingValue from_rational(const RingPtr& ring, const Rational& q) {
  bool integral = q.get_den() == 1;
  switch (ring->kind) {
    case RingKind::Integers:
      if (integral) return RingValue(ring, q.get_num());
      break;
    case RingKind::Rationals: return RingValue(ring, q);
    case RingKind::PolynomialOverRationals: return RingValue(ring, Polynomial::constant(q));
    case RingKind::TruncatedSeries: return RingValue(ring, Series::constant(q));
    case RingKind::DPlusM:
      if (integral || ring->base->kind == RingKind::Rationals) return RingValue(ring, Series::constant(q));
      break;
    case RingKind::Overring: {
      if (integral) return from_integer(ring, q.get_num());
      if (ring->base->kind != RingKind::Integers) {
        return detail::overring_make(ring, from_rational(ring->base, q), std::vector<unsigned>(ring->generators.size()));
      }
      Integer den = q.get_den();
      std::vector<unsigned> e(ring->generators.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        const Integer g = abs(ring->generators[i].integer());
        if (g <= 1) continue;
        while (mpz_divisible_p(den.get_mpz_t(), g.get_mpz_t())) {
          mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
          ++e[i];
        }
      }
      if (den == 1) return detail::overring_make(ring, RingValue(ring->base, Integer(q.get_num())), std::move(e));
      break;
    }
    case RingKind::Product:
    case RingKind::Amalgamation:
    case RingKind::Duplication:
      return RingValue::pair(ring, from_rational(ring->left, q), from_rational(ring->right, q));
  }
  fail(ErrorKind::InvalidDescriptor, "scalar " + to_string(q) + " is not an element of " + ring->key);
}

void mixed_rings(const RingValue& a, const RingValue& b) {
  fail(ErrorKind::MixedRings, "operands from " + a.descriptor().key + " and " + b.descriptor().key);
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  switch (ring->kind) {
    case RingKind::Integers: return RingValue(ring, Integer(a.integer() + b.integer()));
    case RingKind::Rationals: return RingValue(ring, Rational(a.rational() + b.rational()));
    case RingKind::PolynomialOverRationals: return RingValue(ring, a.polynomial() + b.polynomial());
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return RingValue(ring, a.series() + b.series());
    case RingKind::Overring: return detail::overring_add(a, b);
    default: return RingValue::pair(ring, a.left() + b.left(), a.right() + b.right());
  }
}

RingValue operator-(const RingValue& a) {
  const RingPtr& ring = a.ring();
  switch (ring->kind) {
    case RingKind::Integers: return RingValue(ring, Integer(-a.integer()));
    case RingKind::Rationals: return RingValue(ring, Rational(-a.rational()));
    case RingKind::PolynomialOverRationals: return RingValue(ring, -a.polynomial());
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return RingValue(ring, -a.series());
    case RingKind::Overring: return RingValue::fraction(ring, -a.numerator(), a.exponents());
    default: return RingValue::pair(ring, -a.left(), -a.right());
  }
}

RingValue operator-(const RingValue& a, const RingValue& b) { return a + (-b); }

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  switch (ring->kind) {
    case RingKind::Integers: return RingValue(ring, Integer(a.integer() * b.integer()));
    case RingKind::Rationals: return RingValue(ring, Rational(a.rational() * b.rational()));
    case RingKind::PolynomialOverRationals: return RingValue(ring, a.polynomial() * b.polynomial());
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return RingValue(ring, Series::multiply(a.series(), b.series(), ring->precision));
    case RingKind::Overring: return detail::overring_mul(a, b);
    default: return RingValue::pair(ring, a.left() * b.left(), a.right() * b.right());
  }
}

Equality compare(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  auto exact = [](bool same) { return same ? Equality::Exact : Equality::Different; };
  switch (a.descriptor().kind) {
    case RingKind::Integers: return exact(a.integer() == b.integer());
    case RingKind::Rationals: return exact(a.rational() == b.rational());
    case RingKind::PolynomialOverRationals: return exact(a.polynomial() == b.polynomial());
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return Series::compare(a.series(), b.series());
    case RingKind::Overring: return detail::overring_compare(a, b);
    default: return meet(compare(a.left(), b.left()), compare(a.right(), b.right()));
  }
}

bool is_zero(const RingValue& x) {
  switch (x.descriptor().kind) {
    case RingKind::Integers: return x.integer() == 0;
    case RingKind::Rationals: return x.rational() == 0;
    case RingKind::PolynomialOverRationals: return x.polynomial().is_zero();
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return x.series().is_zero();
    case RingKind::Overring: return is_zero(x.numerator());
    default: return is_zero(x.left()) && is_zero(x.right());
  }
}

bool is_one(const RingValue& x) { return holds(compare(x, one(x.ring()))); }

std::optional<RingValue> unit_inverse(const RingValue& x) {
  const RingPtr& ring = x.ring();
  switch (ring->kind) {
    case RingKind::Integers:
      if (x.integer() == 1 || x.integer() == -1) return x;
      return std::nullopt;
    case RingKind::Rationals:
      if (x.rational() == 0) return std::nullopt;
      return RingValue(ring, Rational(1 / x.rational()));
    case RingKind::PolynomialOverRationals:
      if (x.polynomial().degree() != 0) return std::nullopt;
      return RingValue(ring, Polynomial::constant(1 / x.polynomial().leading()));
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      const Series& s = x.series();
      if (s.precision() == 0 || s.coeff(0) == 0) return std::nullopt;
      if (ring->kind == RingKind::DPlusM && ring->base->kind == RingKind::Integers && abs(s.coeff(0)) != 1)
        return std::nullopt;
      return RingValue(ring, Series::invert(s, ring->precision));
    }
    case RingKind::Overring: return detail::overring_unit_inverse(x);
    case RingKind::Product: {
      auto l = unit_inverse(x.left());
      auto r = unit_inverse(x.right());
      if (!l || !r) return std::nullopt;
      return RingValue::pair(ring, *l, *r);
    }
    case RingKind::Amalgamation:
    case RingKind::Duplication: return amalgam_invert(x);
  }
  return std::nullopt;
}

std::optional<RingValue> divide_exact(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  if (is_zero(b)) {
    if (is_zero(a)) return zero(a.ring());
    fail(ErrorKind::ZeroDivisor, "division of " + to_string(a) + " by zero");
  }
  DivResult r = divide_impl(a, b);
  if (r.kind == DivKind::None) return std::nullopt;
  return r.q;
}

bool divides(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  if (is_zero(a)) return is_zero(b);
  return divide_exact(b, a).has_value();
}

std::pair<RingValue, RingValue> euclid_divmod(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  if (is_zero(b)) fail(ErrorKind::ZeroDivisor, "Euclidean division by zero");
  switch (ring->kind) {
    case RingKind::Integers: {
      Integer q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
      return {RingValue(ring, q), RingValue(ring, r)};
    }
    case RingKind::Rationals: return {RingValue(ring, Rational(a.rational() / b.rational())), zero(ring)};
    case RingKind::PolynomialOverRationals: {
      auto [q, r] = Polynomial::divmod(a.polynomial(), b.polynomial());
      return {RingValue(ring, q), RingValue(ring, r)};
    }
    case RingKind::TruncatedSeries: {
      if (a.series().effective_valuation() < b.series().effective_valuation()) return {zero(ring), a};
      auto q = Series::divide(a.series(), b.series(), ring->precision);
      return {RingValue(ring, *q), zero(ring)};
    }
    default:
      fail(ErrorKind::CapabilityMissing, "no Euclidean division in " + ring->key);
  }
}

Integer pivot_measure(const RingValue& x) {
  switch (x.descriptor().kind) {
    case RingKind::Integers: return abs(x.integer());
    case RingKind::PolynomialOverRationals: return Integer(x.polynomial().degree());
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      auto v = x.series().valuation();
      return v ? Integer(static_cast<unsigned long>(*v)) : Integer(0);
    }
    default: return Integer(0);
  }
}

std::pair<RingValue, RingValue> unit_normalize(const RingValue& x) {
  const RingPtr& ring = x.ring();
  if (is_zero(x)) return {one(ring), x};
  switch (ring->kind) {
    case RingKind::Integers:
      if (x.integer() < 0) return {from_integer(ring, -1), -x};
      return {one(ring), x};
    case RingKind::Rationals: return {x, one(ring)};
    case RingKind::PolynomialOverRationals: {
      Rational lc = x.polynomial().leading();
      return {RingValue(ring, Polynomial::constant(lc)), RingValue(ring, x.polynomial().scaled(1 / lc))};
    }
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      const Series& s = x.series();
      std::size_t p = *s.valuation();
      Rational lead = s.coeff(p);
      Rational norm = 1;
      if (ring->kind == RingKind::DPlusM && ring->base->kind == RingKind::Integers) norm = abs(lead);
      RingValue n(ring, Series::monomial(norm, p));
      RingValue u(ring, s.unshifted(p).scaled(1 / norm));
      return {u, n};
    }
    case RingKind::Product: {
      auto [ul, nl] = unit_normalize(x.left());
      auto [ur, nr] = unit_normalize(x.right());
      return {RingValue::pair(ring, ul, ur), RingValue::pair(ring, nl, nr)};
    }
    default: return {one(ring), x};
  }
}

std::string to_string(const RingValue& x) {
  switch (x.descriptor().kind) {
    case RingKind::Integers: return to_string(x.integer());
    case RingKind::Rationals: return to_string(x.rational());
    case RingKind::PolynomialOverRationals: return x.polynomial().to_string();
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return x.series().to_string();
    case RingKind::Overring: {
      std::string den;
      const auto& gens = x.descriptor().generators;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        unsigned e = x.exponents()[i];
        if (e == 0) continue;
        if (!den.empty()) den += "*";
        den += to_string(gens[i]);
        if (e > 1) den += "^" + std::to_string(e);
      }
      std::string num = to_string(x.numerator());
      if (den.empty()) return num;
      if (x.descriptor().base->kind == RingKind::Integers && den.find('^') == std::string::npos &&
          den.find('*') == std::string::npos)
        return num + "/" + den;
      return "(" + num + ")/(" + den + ")";
    }
    default: return "(" + to_string(x.left()) + ", " + to_string(x.right()) + ")";
  }
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void VerificationReport::add(std::string name, bool ok, std::string note) {
  checks.push_back({std::move(name), ok, std::move(note)});
}

void VerificationReport::add(std::string name, Equality e, std::size_t precision_hint) {
  std::string note;
  if (e == Equality::ToPrecision)
    note = precision_hint ? "equal to precision " + std::to_string(precision_hint) : "equal to precision";
  checks.push_back({std::move(name), holds(e), std::move(note)});
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Capabilities capabilities(const RingDescriptor& ring) {
  switch (ring.kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PolynomialOverRationals:
    case RingKind::TruncatedSeries: return {true, true, true};
    case RingKind::DPlusM: return {true, false, false};
    case RingKind::Overring: {
      Capabilities base = capabilities(*ring.base);
      return {base.gcd, base.kaplansky, false};
    }
    case RingKind::Product: {
      Capabilities l = capabilities(*ring.left);
      Capabilities r = capabilities(*ring.right);
      return {l.gcd && r.gcd, l.kaplansky && r.kaplansky, false};
    }
    case RingKind::Amalgamation:
    case RingKind::Duplication: {
      auto model = detail::amalgam_model(ring);
      if (!model) return {};
      Capabilities m = capabilities(**model);
      return {m.gcd, m.kaplansky, false};
    }
  }
  return {};
}

namespace detail {

std::size_t precision_hint(const RingDescriptor& ring) {
  if (ring.is_series_ring()) return ring.precision;
  std::size_t p = 0;
  for (const RingPtr& r : {ring.base, ring.left, ring.right}) {
    if (r) p = std::max(p, precision_hint(*r));
  }
  return p;
}

RingValue power(const RingValue& x, unsigned k) {
  RingValue out = one(x.ring());
  for (unsigned i = 0; i < k; ++i) out = out * x;
  return out;
}

}  // namespace detail

}  // namespace amalgam
