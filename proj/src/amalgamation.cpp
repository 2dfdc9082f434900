#include "amalgam/amalgamation.hpp"

#include "detail.hpp"

namespace amalgam {

namespace {

void require_amalgamation(const RingDescriptor& ring) {
  if (!ring.is_amalgamation()) fail(ErrorKind::InvalidDescriptor, ring.key + " is not an amalgamation");
}

void require_member(const RingValue& x, const RingPtr& ring) {
  if (x.ring() != ring && !same_ring(x.descriptor(), *ring))
    fail(ErrorKind::MixedRings, "element of " + x.descriptor().key + " where " + ring->key + " was expected");
}

/// Coefficients of a scalar, polynomial or series as a series.
std::optional<Series> as_series(const RingValue& x) {
  switch (x.descriptor().kind) {
    case RingKind::Integers: return Series::constant(Rational(x.integer()));
    case RingKind::Rationals: return Series::constant(x.rational());
    case RingKind::PolynomialOverRationals: return Series(x.polynomial().coeffs(), kExact);
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: return x.series();
    default: return std::nullopt;
  }
}

/// The constant c when every known coefficient of positive degree vanishes.
std::optional<Rational> as_constant(const RingValue& x) {
  auto s = as_series(x);
  if (!s) return std::nullopt;
  for (std::size_t i = 1; i < s->coeffs().size(); ++i) {
    if (s->coeffs()[i] != 0) return std::nullopt;
  }
  if (s->precision() == 0) return std::nullopt;
  return s->coeff(0);
}

/// y rewritten as an element of `target` when y lies in (the image of) it.
std::optional<RingValue> restrict_to(const RingValue& y, const RingPtr& target) {
  if (same_ring(y.descriptor(), *target)) return y;
  if (y.descriptor().kind == RingKind::Overring) {
    for (unsigned e : y.exponents()) {
      if (e != 0) return std::nullopt;
    }
    return restrict_to(y.numerator(), target);
  }
  switch (target->kind) {
    case RingKind::Integers:
    case RingKind::Rationals: {
      auto c = as_constant(y);
      if (!c) return std::nullopt;
      if (target->kind == RingKind::Integers) {
        if (c->get_den() != 1) return std::nullopt;
        return RingValue(target, Integer(c->get_num()));
      }
      return RingValue(target, *c);
    }
    case RingKind::PolynomialOverRationals: {
      auto s = as_series(y);
      if (!s || !s->is_exact()) return std::nullopt;
      return RingValue(target, Polynomial(s->coeffs()));
    }
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      auto s = as_series(y);
      if (!s) return std::nullopt;
      if (target->kind == RingKind::DPlusM && target->base->kind == RingKind::Integers && s->precision() > 0 &&
          s->coeff(0).get_den() != 1)
        return std::nullopt;
      return RingValue(target, s->truncated(target->precision));
    }
    default: return std::nullopt;
  }
}

bool hom_injective(const RingDescriptor& ring) {
  return ring.hom.declared_injective && natural_injectivity(ring.hom.kind);
}

/// f(A) = B.
bool hom_surjective(const RingDescriptor& ring) {
  switch (ring.hom.kind) {
    case HomKind::Identity:
    case HomKind::LeftFactorIntoProduct: return true;
    case HomKind::PolynomialEvalAtZero:
      return ring.right->kind == RingKind::Rationals || ring.right->kind == RingKind::Integers;
    default: return same_ring(*ring.left, *ring.right);
  }
}

/// f(A) consists of constants of a polynomial or series ring B.
bool image_is_constant(const RingDescriptor& ring) {
  if (ring.hom.kind == HomKind::PolynomialEvalAtZero) return true;
  RingKind a = ring.left->kind;
  return (a == RingKind::Integers || a == RingKind::Rationals) &&
         (ring.right->kind == RingKind::PolynomialOverRationals || ring.right->is_series_ring());
}

}  // namespace

RingValue coerce(const RingValue& x, const RingPtr& target) {
  if (same_ring(x.descriptor(), *target)) return x;
  RingKind from = x.descriptor().kind;
  auto refuse = [&]() -> RingValue {
    fail(ErrorKind::InvalidDescriptor, "no embedding of " + x.descriptor().key + " into " + target->key);
  };
  switch (target->kind) {
    case RingKind::Integers: return refuse();
    case RingKind::Rationals:
      if (from == RingKind::Integers) return RingValue(target, Rational(x.integer()));
      return refuse();
    case RingKind::PolynomialOverRationals:
      if (from == RingKind::Integers || from == RingKind::Rationals) return RingValue(target, Polynomial(as_series(x)->coeffs()));
      return refuse();
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      auto s = as_series(x);
      if (!s) return refuse();
      if (from == RingKind::DPlusM && target->kind == RingKind::DPlusM &&
          x.descriptor().base->kind == RingKind::Rationals && target->base->kind == RingKind::Integers)
        return refuse();
      if (from == RingKind::TruncatedSeries && target->kind == RingKind::DPlusM) return refuse();
      if (from == RingKind::Rationals && target->kind == RingKind::DPlusM && target->base->kind == RingKind::Integers)
        return refuse();
      if (from == RingKind::PolynomialOverRationals && target->kind == RingKind::DPlusM &&
          target->base->kind == RingKind::Integers)
        return refuse();
      return RingValue(target, s->truncated(target->precision));
    }
    case RingKind::Overring: {
      RingValue base = coerce(x, target->base);
      return detail::overring_make(target, base, std::vector<unsigned>(target->generators.size(), 0));
    }
    default: return refuse();
  }
}

RingValue apply_hom(const RingDescriptor& ring, const RingValue& a) {
  require_amalgamation(ring);
  require_member(a, ring.left);
  switch (ring.hom.kind) {
    case HomKind::Identity:
    case HomKind::Inclusion:
    case HomKind::InclusionIntoDPlusM:
    case HomKind::InclusionIntoOverring: return coerce(a, ring.right);
    case HomKind::PolynomialEvalAtZero: {
      RingKind k = a.descriptor().kind;
      if (k != RingKind::PolynomialOverRationals && !a.descriptor().is_series_ring())
        fail(ErrorKind::InvalidDescriptor, "evaluation at 0 needs a polynomial or series domain");
      auto s = as_series(a);
      if (s->precision() == 0) fail(ErrorKind::PrecisionExhausted, "constant term unknown");
      return from_rational(ring.right, s->coeff(0));
    }
    case HomKind::LeftFactorIntoProduct:
      if (a.descriptor().kind != RingKind::Product)
        fail(ErrorKind::InvalidDescriptor, "left-factor projection needs a product domain");
      return coerce(a.left(), ring.right);
  }
  fail(ErrorKind::InvalidDescriptor, "unknown homomorphism");
}

std::optional<RingValue> hom_preimage(const RingDescriptor& ring, const RingValue& y) {
  require_amalgamation(ring);
  require_member(y, ring.right);
  switch (ring.hom.kind) {
    case HomKind::Identity:
    case HomKind::Inclusion:
    case HomKind::InclusionIntoDPlusM:
    case HomKind::InclusionIntoOverring: return restrict_to(y, ring.left);
    case HomKind::PolynomialEvalAtZero: {
      auto c = as_constant(y);
      if (!c) return std::nullopt;
      return from_rational(ring.left, *c);
    }
    case HomKind::LeftFactorIntoProduct: {
      auto l = restrict_to(y, ring.left->left);
      if (!l) return std::nullopt;
      return RingValue::pair(ring.left, *l, zero(ring.left->right));
    }
  }
  return std::nullopt;
}

std::optional<RingValue> split_target(const RingDescriptor& ring, const RingValue& y) {
  require_amalgamation(ring);
  const IdealDescriptor& J = *ring.ideal;
  switch (J.kind) {
    case IdealKind::Whole: return zero(ring.left);
    case IdealKind::Zero: return hom_preimage(ring, y);
    case IdealKind::PositiveOrder: {
      auto s = as_series(y);
      if (!s || s->precision() == 0) return std::nullopt;
      return hom_preimage(ring, from_rational(ring.right, s->coeff(0)));
    }
    case IdealKind::MultiplesOf: {
      if (auto a = hom_preimage(ring, y)) return a;
      if (is_zero(*J.generator) || !capabilities(*ring.right).euclidean) return std::nullopt;
      auto a = hom_preimage(ring, euclid_divmod(y, *J.generator).second);
      if (a && ideal_contains(J, y - apply_hom(ring, *a))) return a;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool ideal_contains(const IdealDescriptor& ideal, const RingValue& x) {
  switch (ideal.kind) {
    case IdealKind::Zero: return is_zero(x);
    case IdealKind::Whole: return true;
    case IdealKind::MultiplesOf:
      if (is_zero(*ideal.generator)) return is_zero(x);
      return divides(*ideal.generator, x);
    case IdealKind::PositiveOrder: {
      auto s = as_series(x);
      if (!s) fail(ErrorKind::InvalidDescriptor, "PositiveOrder membership outside series and polynomials");
      return s->coeff(0) == 0;
    }
  }
  return false;
}

bool ideal_is_zero(const RingDescriptor& ring) {
  require_amalgamation(ring);
  const IdealDescriptor& J = *ring.ideal;
  return J.kind == IdealKind::Zero || (J.kind == IdealKind::MultiplesOf && is_zero(*J.generator));
}

bool ideal_is_whole(const RingDescriptor& ring) {
  require_amalgamation(ring);
  const IdealDescriptor& J = *ring.ideal;
  return J.kind == IdealKind::Whole || (J.kind == IdealKind::MultiplesOf && is_unit(*J.generator));
}

Tri meet_trivial(const RingDescriptor& ring) {
  require_amalgamation(ring);
  if (ideal_is_zero(ring)) return Tri::Yes;
  if (ideal_is_whole(ring)) return Tri::No;
  if (hom_surjective(ring)) return Tri::No;
  // a nonzero j = n/D in an ideal of an overring gives D·j = n ∈ A ∩ J
  if (ring.hom.kind == HomKind::InclusionIntoOverring) return Tri::No;
  if (image_is_constant(ring)) {
    const IdealDescriptor& J = *ring.ideal;
    if (J.kind == IdealKind::PositiveOrder) return Tri::Yes;
    if (J.kind == IdealKind::MultiplesOf && (ring.right->kind == RingKind::PolynomialOverRationals ||
                                             ring.right->kind == RingKind::TruncatedSeries))
      return Tri::Yes;
  }
  if (ring.declared_meet_trivial) return *ring.declared_meet_trivial ? Tri::Yes : Tri::No;
  return Tri::Unknown;
}

RingValue amalgam_make(const RingPtr& ring, const RingValue& a, const RingValue& j) {
  require_amalgamation(*ring);
  require_member(j, ring->right);
  if (!ideal_contains(*ring->ideal, j)) fail(ErrorKind::NotInIdeal, to_string(j) + " is not in J");
  return RingValue::pair(ring, a, apply_hom(*ring, a) + j);
}

RingValue amalgam_from_pair(const RingPtr& ring, const RingValue& left, const RingValue& right) {
  require_amalgamation(*ring);
  RingValue u = RingValue::pair(ring, left, right);
  if (!amalgam_invariant_holds(u))
    fail(ErrorKind::NotInIdeal, "right - f(left) = " + to_string(amalgam_ideal_part(u)) + " is not in J");
  return u;
}

RingValue amalgam_ideal_part(const RingValue& u) {
  require_amalgamation(u.descriptor());
  return u.right() - apply_hom(u.descriptor(), u.left());
}

bool amalgam_invariant_holds(const RingValue& u) {
  return ideal_contains(*u.descriptor().ideal, amalgam_ideal_part(u));
}

RingValue amalgam_arith(ArithOp op, const RingValue& u, const RingValue& v) {
  require_amalgamation(u.descriptor());
  RingValue out = op == ArithOp::Add ? u + v : op == ArithOp::Mul ? u * v : -u;
  if (!amalgam_invariant_holds(out)) fail(ErrorKind::NotInIdeal, "result left the amalgamation");
  return out;
}

std::optional<RingValue> amalgam_invert(const RingValue& u) {
  const RingDescriptor& ring = u.descriptor();
  require_amalgamation(ring);
  auto ia = unit_inverse(u.left());
  auto ib = unit_inverse(u.right());
  if (!ia || !ib) return std::nullopt;
  RingValue j = amalgam_ideal_part(u);
  RingValue fia = apply_hom(ring, *ia);
  RingValue x = -(fia * *ib * j);
  RingValue inv = RingValue::pair(u.ring(), *ia, fia + x);
  if (!is_one(u * inv)) return std::nullopt;
  return inv;
}

std::optional<RingPtr> image_ring(const RingDescriptor& ring) {
  require_amalgamation(ring);
  if (ideal_is_whole(ring) || hom_surjective(ring)) return ring.right;
  if (ring.ideal->kind != IdealKind::PositiveOrder) return std::nullopt;
  const RingPtr& b = ring.right;
  RingKind a = ring.left->kind;
  bool field_constants = a == RingKind::Rationals || a == RingKind::PolynomialOverRationals || a == RingKind::TruncatedSeries ||
                         ring.hom.kind == HomKind::PolynomialEvalAtZero;
  if (b->kind == RingKind::TruncatedSeries) {
    if (field_constants) return b;
    if (a == RingKind::Integers) return rings::dplusm(ring.left, b->precision);
  }
  if (b->kind == RingKind::DPlusM) {
    if (a == RingKind::Integers || field_constants) return b;
  }
  return std::nullopt;
}

RingValue iso_to_target(const RingValue& u) {
  const RingDescriptor& ring = u.descriptor();
  require_amalgamation(ring);
  if (!hom_injective(ring)) fail(ErrorKind::FlagsViolated, "p_B needs an injective homomorphism");
  if (meet_trivial(ring) != Tri::Yes) fail(ErrorKind::FlagsViolated, "p_B needs f(A) ∩ J = 0");
  auto target = image_ring(ring);
  if (!target) return u.right();
  auto y = restrict_to(u.right(), *target);
  if (!y) fail(ErrorKind::PreimageUndefined, to_string(u.right()) + " is outside " + (*target)->key);
  return *y;
}

RingValue iso_from_target(const RingPtr& ring, const RingValue& y) {
  require_amalgamation(*ring);
  if (!hom_injective(*ring)) fail(ErrorKind::FlagsViolated, "p_B needs an injective homomorphism");
  if (meet_trivial(*ring) != Tri::Yes) fail(ErrorKind::FlagsViolated, "p_B needs f(A) ∩ J = 0");
  auto in_b = restrict_to(y, ring->right);
  if (!in_b) fail(ErrorKind::PreimageUndefined, to_string(y) + " is not an element of " + ring->right->key);
  auto a = split_target(*ring, *in_b);
  if (!a) fail(ErrorKind::PreimageUndefined, "no decomposition f(a) + j of " + to_string(y));
  RingValue u = RingValue::pair(ring, *a, *in_b);
  if (!amalgam_invariant_holds(u)) fail(ErrorKind::PreimageUndefined, "no decomposition f(a) + j of " + to_string(y));
  return u;
}

namespace detail {

std::optional<RingPtr> amalgam_model(const RingDescriptor& ring) {
  require_amalgamation(ring);
  if (ideal_is_zero(ring)) return ring.left;
  if (ideal_is_whole(ring)) return rings::product(ring.left, ring.right);
  if (hom_injective(ring) && meet_trivial(ring) == Tri::Yes) return image_ring(ring);
  return std::nullopt;
}

std::optional<Transport> amalgam_transport(const RingPtr& ring) {
  auto model = amalgam_model(*ring);
  if (!model) return std::nullopt;
  const RingPtr m = *model;
  if (ideal_is_zero(*ring)) {
    return Transport{m, [](const RingValue& u) { return u.left(); },
                     [ring](const RingValue& a) { return RingValue::pair(ring, a, apply_hom(*ring, a)); },
                     "J=0: A"};
  }
  if (ideal_is_whole(*ring)) {
    return Transport{m, [m](const RingValue& u) { return RingValue::pair(m, u.left(), u.right()); },
                     [ring](const RingValue& p) { return RingValue::pair(ring, p.left(), p.right()); },
                     "J=B: A x B"};
  }
  return Transport{m, [](const RingValue& u) { return iso_to_target(u); },
                   [ring](const RingValue& y) { return iso_from_target(ring, y); }, "p_B: f(A)+J"};
}

}  // namespace detail

GcdCertificate amalgam_gcd_certified(const RingValue& u, const RingValue& v) {
  require_same_ring(u, v);
  auto t = detail::amalgam_transport(u.ring());
  if (!t) fail(ErrorKind::CapabilityMissing, "no gcd route for " + u.descriptor().key);
  GcdCertificate c = gcd_certified(t->to_model(u), t->to_model(v));
  return {t->from_model(c.d), t->from_model(c.a1), t->from_model(c.b1), t->from_model(c.alpha),
          t->from_model(c.beta)};
}

bool amalgam_has_gcd(const RingDescriptor& ring) {
  auto model = detail::amalgam_model(ring);
  return model && capabilities(**model).gcd;
}

bool valuation_pair_check(const RingValue& u, const RingValue& v) {
  require_same_ring(u, v);
  return divides(u, v) || divides(v, u);
}

}  // namespace amalgam
