#include "amalgam/descriptor.hpp"

#include <array>

#include "amalgam/amalgamation.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::CapabilityMissing: return "CapabilityMissing";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::FlagsViolated: return "FlagsViolated";
    case ErrorKind::PreimageUndefined: return "PreimageUndefined";
    case ErrorKind::NotEnumerable: return "NotEnumerable";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(RingKind kind) {
  switch (kind) {
    case RingKind::Integers: return "Integers";
    case RingKind::Rationals: return "Rationals";
    case RingKind::PolynomialOverRationals: return "PolynomialOverRationals";
    case RingKind::TruncatedSeries: return "TruncatedSeries";
    case RingKind::DPlusM: return "DPlusM";
    case RingKind::Overring: return "Overring";
    case RingKind::Product: return "Product";
    case RingKind::Amalgamation: return "Amalgamation";
    case RingKind::Duplication: return "Duplication";
  }
  return "Unknown";
}

std::string_view to_string(Flag flag) {
  switch (flag) {
    case Flag::IsDomain: return "IsDomain";
    case Flag::IsBezout: return "IsBezout";
    case Flag::IsHermite: return "IsHermite";
    case Flag::IsEDR: return "IsEDR";
    case Flag::IsValuation: return "IsValuation";
  }
  return "Unknown";
}

std::optional<Flag> flag_from_string(std::string_view name) {
  for (Flag f : kAllFlags) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
    case Tri::Yes: return "yes";
  }
  return "unknown";
}

std::string_view to_string(HomKind kind) {
  switch (kind) {
    case HomKind::Identity: return "Identity";
    case HomKind::Inclusion: return "Inclusion";
    case HomKind::InclusionIntoDPlusM: return "InclusionIntoDPlusM";
    case HomKind::InclusionIntoOverring: return "InclusionIntoOverring";
    case HomKind::PolynomialEvalAtZero: return "PolynomialEvalAtZero";
    case HomKind::LeftFactorIntoProduct: return "LeftFactorIntoProduct";
  }
  return "Unknown";
}

bool natural_injectivity(HomKind kind) {
  return kind != HomKind::PolynomialEvalAtZero && kind != HomKind::LeftFactorIntoProduct;
}

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::Zero: return "Zero";
    case IdealKind::Whole: return "Whole";
    case IdealKind::MultiplesOf: return "MultiplesOf";
    case IdealKind::PositiveOrder: return "PositiveOrder";
  }
  return "Unknown";
}

Tri FlagSet::get(Flag f) const {
  auto bit = static_cast<unsigned>(f);
  if (declared & bit) return Tri::Yes;
  if (denied & bit) return Tri::No;
  return Tri::Unknown;
}

FlagSet& FlagSet::declare(Flag f) {
  declared |= static_cast<unsigned>(f);
  return *this;
}

FlagSet& FlagSet::deny(Flag f) {
  denied |= static_cast<unsigned>(f);
  return *this;
}

FlagSet FlagSet::merged(const FlagSet& other) const { return {declared | other.declared, denied | other.denied}; }

FlagSet FlagSet::closed() const {
  FlagSet out = *this;
  auto has = [&](Flag f) { return (out.declared & static_cast<unsigned>(f)) != 0; };
  auto lacks = [&](Flag f) { return (out.denied & static_cast<unsigned>(f)) != 0; };
  for (int round = 0; round < 3; ++round) {
    if (has(Flag::IsEDR)) out.declare(Flag::IsHermite);
    if (has(Flag::IsHermite)) out.declare(Flag::IsBezout);
    if (has(Flag::IsValuation)) out.declare(Flag::IsBezout);
    if (has(Flag::IsDomain) && has(Flag::IsBezout)) out.declare(Flag::IsHermite);
    if (lacks(Flag::IsBezout)) out.deny(Flag::IsHermite).deny(Flag::IsValuation);
    if (lacks(Flag::IsHermite)) out.deny(Flag::IsEDR);
    if (lacks(Flag::IsHermite) && has(Flag::IsDomain)) out.deny(Flag::IsBezout);
  }
  if (out.declared & out.denied) {
    std::string names;
    for (Flag f : kAllFlags) {
      if (out.get(f) == Tri::Yes && (out.denied & static_cast<unsigned>(f))) names += std::string(to_string(f)) + " ";
    }
    fail(ErrorKind::InvalidDescriptor, "flags both declared and denied: " + names);
  }
  return out;
}

bool same_ring(const RingDescriptor& a, const RingDescriptor& b) { return &a == &b || a.key == b.key; }

namespace rings {

namespace {

FlagSet domain_flags(bool valuation) {
  FlagSet f;
  f.declare(Flag::IsDomain).declare(Flag::IsBezout).declare(Flag::IsHermite).declare(Flag::IsEDR);
  if (valuation)
    f.declare(Flag::IsValuation);
  else
    f.deny(Flag::IsValuation);
  return f;
}

RingPtr finish(RingDescriptor d, const FlagSet& extra) {
  d.flags = d.flags.merged(extra).closed();
  return std::make_shared<const RingDescriptor>(std::move(d));
}

std::string ideal_key(const IdealDescriptor& ideal) {
  switch (ideal.kind) {
    case IdealKind::Zero: return "0";
    case IdealKind::Whole: return "B";
    case IdealKind::MultiplesOf: return "(" + to_string(*ideal.generator) + ")";
    case IdealKind::PositiveOrder: return "x";
  }
  return "?";
}

void check_ideal(const RingPtr& ambient, const IdealDescriptor& ideal) {
  if (ideal.kind == IdealKind::MultiplesOf) {
    if (!ideal.generator) fail(ErrorKind::InvalidDescriptor, "MultiplesOf ideal without generator");
    if (!same_ring(ideal.generator->descriptor(), *ambient))
      fail(ErrorKind::InvalidDescriptor, "ideal generator is not an element of " + ambient->key);
  }
  if (ideal.kind == IdealKind::PositiveOrder && !ambient->is_series_ring() &&
      ambient->kind != RingKind::PolynomialOverRationals)
    fail(ErrorKind::InvalidDescriptor, "PositiveOrder ideal needs a series or polynomial ring, got " + ambient->key);
}

void check_hom(const RingPtr& built) {
  try {
    RingValue image = apply_hom(*built, one(built->left));
    if (!is_one(image)) fail(ErrorKind::InvalidDescriptor, "homomorphism does not preserve 1");
  } catch (const AlgebraError& e) {
    if (e.kind() == ErrorKind::InvalidDescriptor) throw;
    fail(ErrorKind::InvalidDescriptor, std::string("homomorphism not applicable: ") + e.what());
  }
}

}  // namespace

RingPtr integers(const FlagSet& extra) {
  static const RingPtr plain = [] {
    RingDescriptor d;
    d.kind = RingKind::Integers;
    d.key = "Z";
    d.flags = domain_flags(false).closed();
    return std::make_shared<const RingDescriptor>(std::move(d));
  }();
  if (extra == FlagSet{}) return plain;
  RingDescriptor d = *plain;
  return finish(std::move(d), extra);
}

RingPtr rationals(const FlagSet& extra) {
  static const RingPtr plain = [] {
    RingDescriptor d;
    d.kind = RingKind::Rationals;
    d.key = "Q";
    d.flags = domain_flags(true).closed();
    return std::make_shared<const RingDescriptor>(std::move(d));
  }();
  if (extra == FlagSet{}) return plain;
  RingDescriptor d = *plain;
  return finish(std::move(d), extra);
}

RingPtr polynomials(const FlagSet& extra) {
  static const RingPtr plain = [] {
    RingDescriptor d;
    d.kind = RingKind::PolynomialOverRationals;
    d.key = "Q[x]";
    d.flags = domain_flags(false).closed();
    return std::make_shared<const RingDescriptor>(std::move(d));
  }();
  if (extra == FlagSet{}) return plain;
  RingDescriptor d = *plain;
  return finish(std::move(d), extra);
}

RingPtr truncated_series(std::size_t precision, const FlagSet& extra) {
  if (precision == 0) fail(ErrorKind::InvalidDescriptor, "series precision must be positive");
  RingDescriptor d;
  d.kind = RingKind::TruncatedSeries;
  d.base = rationals();
  d.precision = precision;
  d.key = "Q[[x]]/" + std::to_string(precision);
  // Q[[x]] is a discrete valuation ring
  d.flags = domain_flags(true);
  return finish(std::move(d), extra);
}

RingPtr dplusm(RingPtr base_domain, std::size_t precision, const FlagSet& extra) {
  if (precision == 0) fail(ErrorKind::InvalidDescriptor, "series precision must be positive");
  if (!base_domain || (base_domain->kind != RingKind::Integers && base_domain->kind != RingKind::Rationals))
    fail(ErrorKind::InvalidDescriptor, "D+M base domain must be Integers or Rationals");
  RingDescriptor d;
  d.kind = RingKind::DPlusM;
  d.base = base_domain;
  d.precision = precision;
  d.key = base_domain->key + "+xQ[[x]]/" + std::to_string(precision);
  if (base_domain->kind == RingKind::Rationals) {
    d.flags = domain_flags(true);
  } else {
    // Bezout by the leading-term gcd construction; EDR-ness is only ever declared
    d.flags.declare(Flag::IsDomain).declare(Flag::IsBezout).declare(Flag::IsHermite).deny(Flag::IsValuation);
  }
  return finish(std::move(d), extra);
}

RingPtr overring(RingPtr base, std::vector<RingValue> denominator_generators, const FlagSet& extra) {
  if (!base || (base->kind != RingKind::Integers && base->kind != RingKind::PolynomialOverRationals))
    fail(ErrorKind::InvalidDescriptor, "overring base must be Integers or PolynomialOverRationals");
  std::string key = base->key + "[";
  for (std::size_t i = 0; i < denominator_generators.size(); ++i) {
    const auto& g = denominator_generators[i];
    if (!same_ring(g.descriptor(), *base)) fail(ErrorKind::InvalidDescriptor, "denominator outside the base ring");
    if (is_zero(g)) fail(ErrorKind::InvalidDescriptor, "zero denominator generator");
    key += (i ? ",1/" : "1/") + to_string(g);
  }
  key += "]";
  RingDescriptor d;
  d.kind = RingKind::Overring;
  d.base = base;
  d.generators = std::move(denominator_generators);
  d.key = std::move(key);
  // rings between a Bezout (resp. elementary divisor) domain and its fraction
  // field inherit the property
  FlagSet f;
  auto inherit = [&](Flag flag) {
    if (base->flags.get(flag) == Tri::Yes) f.declare(flag);
  };
  inherit(Flag::IsDomain);
  inherit(Flag::IsBezout);
  inherit(Flag::IsHermite);
  inherit(Flag::IsEDR);
  d.flags = f;
  return finish(std::move(d), extra);
}

RingPtr product(RingPtr left, RingPtr right, const FlagSet& extra) {
  if (!left || !right) fail(ErrorKind::InvalidDescriptor, "product needs two factors");
  if (extra.get(Flag::IsDomain) == Tri::Yes) fail(ErrorKind::InvalidDescriptor, "a product ring is never a domain");
  RingDescriptor d;
  d.kind = RingKind::Product;
  d.left = left;
  d.right = right;
  d.key = "(" + left->key + " x " + right->key + ")";
  FlagSet f;
  f.deny(Flag::IsDomain).deny(Flag::IsValuation);
  for (Flag flag : {Flag::IsBezout, Flag::IsHermite, Flag::IsEDR}) {
    Tri l = left->flags.get(flag);
    Tri r = right->flags.get(flag);
    if (l == Tri::Yes && r == Tri::Yes) f.declare(flag);
    if (l == Tri::No || r == Tri::No) f.deny(flag);
  }
  d.flags = f;
  return finish(std::move(d), extra);
}

RingPtr amalgamation(RingPtr a, RingPtr b, HomDescriptor hom, IdealDescriptor ideal,
                     const AmalgamationOptions& options) {
  if (!a || !b) fail(ErrorKind::InvalidDescriptor, "amalgamation needs A and B");
  check_ideal(b, ideal);
  RingDescriptor d;
  d.kind = RingKind::Amalgamation;
  d.left = a;
  d.right = b;
  d.hom = hom;
  d.key = "(" + a->key + " |><|^" + std::string(to_string(hom.kind)) + " " + ideal_key(ideal) + " in " + b->key + ")";
  d.ideal = std::move(ideal);
  d.declared_meet_trivial = options.meet_trivial;
  d.image_flags = options.image_flags.closed();
  d.flags = options.flags;
  RingPtr built = finish(std::move(d), {});
  check_hom(built);
  return built;
}

RingPtr duplication(RingPtr a, RingPtr ambient, IdealDescriptor submodule, const AmalgamationOptions& options) {
  if (!a || !ambient) fail(ErrorKind::InvalidDescriptor, "duplication needs A and A+E");
  HomDescriptor hom;
  if (same_ring(*a, *ambient)) {
    hom.kind = HomKind::Identity;
  } else if (ambient->kind == RingKind::Overring && same_ring(*ambient->base, *a)) {
    hom.kind = HomKind::InclusionIntoOverring;
  } else {
    fail(ErrorKind::InvalidDescriptor, "duplication ambient must be A or an overring of A");
  }
  hom.declared_injective = true;
  check_ideal(ambient, submodule);
  RingDescriptor d;
  d.kind = RingKind::Duplication;
  d.left = a;
  d.right = ambient;
  d.hom = hom;
  d.key = "(" + a->key + " |><| " + ideal_key(submodule) + " in " + ambient->key + ")";
  d.ideal = std::move(submodule);
  d.declared_meet_trivial = options.meet_trivial;
  d.image_flags = options.image_flags.closed();
  d.flags = options.flags;
  RingPtr built = finish(std::move(d), {});
  check_hom(built);
  return built;
}

RingPtr with_flags(const RingPtr& ring, const FlagSet& extra) {
  if (ring->kind == RingKind::Product && extra.get(Flag::IsDomain) == Tri::Yes)
    fail(ErrorKind::InvalidDescriptor, "a product ring is never a domain");
  RingDescriptor d = *ring;
  return finish(std::move(d), extra);
}

}  // namespace rings

}  // namespace amalgam
