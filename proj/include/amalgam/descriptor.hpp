#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/value.hpp"

namespace amalgam {

enum class RingKind {
  Integers,
  Rationals,
  PolynomialOverRationals,
  TruncatedSeries,
  DPlusM,
  Overring,
  Product,
  Amalgamation,
  Duplication,
};

std::string_view to_string(RingKind kind);

enum class Flag : unsigned {
  IsDomain = 1u << 0,
  IsBezout = 1u << 1,
  IsHermite = 1u << 2,
  IsEDR = 1u << 3,
  IsValuation = 1u << 4,
};

inline constexpr Flag kAllFlags[] = {Flag::IsDomain, Flag::IsBezout, Flag::IsHermite, Flag::IsEDR,
                                     Flag::IsValuation};

std::string_view to_string(Flag flag);
std::optional<Flag> flag_from_string(std::string_view name);

enum class Tri { No, Unknown, Yes };

std::string_view to_string(Tri t);

/// Declared semantic facts about a ring. A flag can be declared (known
/// true), denied (known false) or neither (unknown).
struct FlagSet {
  unsigned declared = 0;
  unsigned denied = 0;

  Tri get(Flag f) const;
  FlagSet& declare(Flag f);
  FlagSet& deny(Flag f);
  FlagSet merged(const FlagSet& other) const;
  /// Applies EDR => Hermite => Bezout, Valuation => Bezout, and
  /// (Domain and Bezout) => Hermite, plus the contrapositives. Throws
  /// InvalidDescriptor when a flag ends up both declared and denied.
  FlagSet closed() const;

  friend bool operator==(const FlagSet&, const FlagSet&) = default;
};

enum class HomKind {
  Identity,
  Inclusion,
  InclusionIntoDPlusM,
  InclusionIntoOverring,
  PolynomialEvalAtZero,
  LeftFactorIntoProduct,
};

std::string_view to_string(HomKind kind);

struct HomDescriptor {
  HomKind kind = HomKind::Identity;
  bool declared_injective = true;
};

/// Injectivity that holds for each kind of homomorphism we know how to build.
bool natural_injectivity(HomKind kind);

enum class IdealKind { Zero, Whole, MultiplesOf, PositiveOrder };

std::string_view to_string(IdealKind kind);

struct IdealDescriptor {
  IdealKind kind = IdealKind::Zero;
  std::optional<RingValue> generator;  // MultiplesOf only, element of the ambient ring

  static IdealDescriptor zero() { return {IdealKind::Zero, std::nullopt}; }
  static IdealDescriptor whole() { return {IdealKind::Whole, std::nullopt}; }
  static IdealDescriptor positive_order() { return {IdealKind::PositiveOrder, std::nullopt}; }
  static IdealDescriptor multiples_of(RingValue g) { return {IdealKind::MultiplesOf, std::move(g)}; }
};

/// Closed description of a ring instance. Built only through the factories
/// in namespace `rings`, which validate operands and compute `key`.
struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  FlagSet flags;
  /// Structural identity; two descriptors with equal keys describe the same
  /// ring and their values interoperate.
  std::string key;

  RingPtr base;    // TruncatedSeries coefficient field, DPlusM base domain, Overring base
  RingPtr left;    // Product left factor, Amalgamation/Duplication A
  RingPtr right;   // Product right factor, Amalgamation/Duplication B (A+E for duplications)
  std::size_t precision = 0;            // TruncatedSeries, DPlusM
  std::vector<RingValue> generators;    // Overring denominators
  HomDescriptor hom;                    // Amalgamation/Duplication
  std::optional<IdealDescriptor> ideal; // Amalgamation J / Duplication E
  std::optional<bool> declared_meet_trivial;  // f(A) ∩ J = 0, when declared
  FlagSet image_flags;                  // flags of f(A)+J, when declared

  bool is_pair_ring() const {
    return kind == RingKind::Product || kind == RingKind::Amalgamation || kind == RingKind::Duplication;
  }
  bool is_series_ring() const { return kind == RingKind::TruncatedSeries || kind == RingKind::DPlusM; }
  bool is_amalgamation() const { return kind == RingKind::Amalgamation || kind == RingKind::Duplication; }
};

bool same_ring(const RingDescriptor& a, const RingDescriptor& b);

namespace rings {

inline constexpr std::size_t kDefaultPrecision = 32;

RingPtr integers(const FlagSet& extra = {});
RingPtr rationals(const FlagSet& extra = {});
RingPtr polynomials(const FlagSet& extra = {});
RingPtr truncated_series(std::size_t precision = kDefaultPrecision, const FlagSet& extra = {});
RingPtr dplusm(RingPtr base_domain, std::size_t precision = kDefaultPrecision, const FlagSet& extra = {});
RingPtr overring(RingPtr base, std::vector<RingValue> denominator_generators, const FlagSet& extra = {});
RingPtr product(RingPtr left, RingPtr right, const FlagSet& extra = {});

struct AmalgamationOptions {
  std::optional<bool> meet_trivial;  // declared f(A) ∩ J = 0
  FlagSet image_flags;               // declared flags of f(A)+J
  FlagSet flags;                     // declared flags of the amalgamation itself
};

RingPtr amalgamation(RingPtr a, RingPtr b, HomDescriptor hom, IdealDescriptor ideal,
                     const AmalgamationOptions& options = {});
/// A ⋈ E with E an ideal of `ambient` = A+E: `ambient` is A itself for
/// E ⊆ A, or an overring of A.
RingPtr duplication(RingPtr a, RingPtr ambient, IdealDescriptor submodule, const AmalgamationOptions& options = {});

/// Same structure, additional declared/denied flags.
RingPtr with_flags(const RingPtr& ring, const FlagSet& extra);

}  // namespace rings

}  // namespace amalgam
