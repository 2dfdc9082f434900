#include "amalgam/witness.hpp"

#include "amalgam/amalgamation.hpp"
#include "amalgam/matrix.hpp"
#include "amalgam/sample.hpp"

namespace amalgam {

namespace {

constexpr std::size_t kMaxGenerators = kMaxDimension / 2;

bool integer_components(const RingDescriptor& ring) {
  return ring.is_pair_ring() && ring.left->kind == RingKind::Integers && ring.right->kind == RingKind::Integers;
}

/// |n| of the ideal nZ for an amalgamation over Z, 1 for J = Z (products).
Integer ideal_modulus(const RingDescriptor& ring) {
  if (ring.kind == RingKind::Product) return 1;
  const IdealDescriptor& J = *ring.ideal;
  switch (J.kind) {
    case IdealKind::Zero: return 0;
    case IdealKind::Whole: return 1;
    case IdealKind::MultiplesOf: return abs(J.generator->integer());
    case IdealKind::PositiveOrder: break;
  }
  fail(ErrorKind::NotEnumerable, "ideal of " + ring.right->key + " is not of the form nZ");
}

/// Z-basis of the ring as vectors in Z^2.
std::vector<RingValue> z_basis(const RingPtr& ring) {
  if (ring->kind == RingKind::Product)
    return {RingValue::pair(ring, from_integer(ring->left, 1), from_integer(ring->right, 0)),
            RingValue::pair(ring, from_integer(ring->left, 0), from_integer(ring->right, 1))};
  std::vector<RingValue> basis{one(ring)};
  Integer n = ideal_modulus(*ring);
  if (n != 0) basis.push_back(RingValue::pair(ring, zero(ring->left), from_integer(ring->right, n)));
  return basis;
}

/// Integer vector t with sum t_i·w_i = c for the columns w_i of W (2 rows), if any.
std::optional<std::vector<Integer>> solve_lattice(const Matrix& W, const Integer& c0, const Integer& c1) {
  HermiteResult h = hermite_reduce(W);
  const Matrix& T = h.T;
  std::vector<Integer> y(W.cols(), 0);
  Integer rest0 = c0, rest1 = c1;
  std::size_t col = 0;
  for (std::size_t row = 0; row < 2; ++row) {
    Integer target = row == 0 ? rest0 : rest1;
    if (col < T.cols() && T(row, col).integer() != 0) {
      const Integer& p = T(row, col).integer();
      if (!mpz_divisible_p(target.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), target.get_mpz_t(), p.get_mpz_t());
      y[col] = q;
      if (row == 0) rest1 -= q * T(1, col).integer();
      ++col;
    } else if (target != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> t(W.cols(), 0);
  for (std::size_t i = 0; i < W.cols(); ++i) {
    for (std::size_t k = 0; k < W.cols(); ++k) t[i] += h.Q(i, k).integer() * y[k];
  }
  return t;
}

std::vector<long> ordered_range(long bound) {
  std::vector<long> out{0};
  for (long k = 1; k <= bound; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

}  // namespace

GeneratorSearch principal_generator_search(const std::vector<RingValue>& gens, long bound) {
  if (gens.empty()) fail(ErrorKind::InvalidDescriptor, "no generators");
  const RingPtr ring = gens.front().ring();
  for (const auto& g : gens) require_same_ring(gens.front(), g);
  if (!integer_components(*ring)) fail(ErrorKind::NotEnumerable, ring->key + " has non-integer components");
  if (gens.size() > kMaxGenerators) fail(ErrorKind::SizeCap, "at most 4 generators");
  if (bound < 0) fail(ErrorKind::InvalidDescriptor, "negative bound");

  const std::vector<RingValue> basis = z_basis(ring);
  const RingPtr& Z = ring->left;
  std::vector<RingValue> spanning;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t e = 0; e < basis.size(); ++e) {
      RingValue w = gens[k] * basis[e];
      spanning.push_back(w);
      origin.emplace_back(k, e);
    }
  }
  std::vector<RingValue> columns;
  for (const auto& w : spanning) columns.push_back(w.left());
  for (const auto& w : spanning) columns.push_back(RingValue(Z, w.right().integer()));
  Matrix W(Z, 2, spanning.size(), std::move(columns));

  GeneratorSearch result;
  result.bound = bound;
  const Integer n = ideal_modulus(*ring);
  const bool product = ring->kind == RingKind::Product;
  for (long a : ordered_range(bound)) {
    for (long j : ordered_range(bound)) {
      if (!product && (n == 0 ? j != 0 : j % n.get_si() != 0)) continue;
      RingValue c = product ? RingValue::pair(ring, from_integer(Z, a), from_integer(ring->right, j))
                            : amalgam_make(ring, from_integer(Z, a), from_integer(ring->right, j));
      ++result.candidates;
      bool divides_all = true;
      for (const auto& g : gens) divides_all = divides_all && divides(c, g);
      if (!divides_all) continue;
      auto t = solve_lattice(W, c.left().integer(), c.right().integer());
      if (!t) continue;
      std::vector<RingValue> coeffs(gens.size(), zero(ring));
      for (std::size_t i = 0; i < t->size(); ++i) {
        auto [k, e] = origin[i];
        coeffs[k] = coeffs[k] + from_integer(ring, (*t)[i]) * basis[e];
      }
      RingValue sum = zero(ring);
      for (std::size_t k = 0; k < gens.size(); ++k) sum = sum + coeffs[k] * gens[k];
      if (!(sum == c)) continue;
      result.generator = c;
      result.combination = std::move(coeffs);
      return result;
    }
  }
  result.exhaustive = true;
  return result;
}

FalsifyReport falsify_flags(const RingPtr& ring, std::size_t samples, std::uint64_t seed, long bound) {
  if (!ring->is_amalgamation()) fail(ErrorKind::InvalidDescriptor, ring->key + " is not an amalgamation");
  FalsifyReport report;
  report.samples = samples;
  report.seed = seed;
  Sampler sampler(seed);
  const RingDescriptor& d = *ring;

  std::vector<RingValue> probes{one(d.left), from_integer(d.left, 2)};
  if (d.left->kind == RingKind::PolynomialOverRationals) probes.push_back(RingValue(d.left, Polynomial::monomial(1, 1)));
  if (d.left->is_series_ring()) probes.push_back(RingValue(d.left, Series::monomial(1, 1)));
  for (std::size_t i = 0; i < samples; ++i) probes.push_back(sampler.element(d.left));

  const bool claims_meet = d.declared_meet_trivial.value_or(false);
  const bool claims_injective = d.hom.declared_injective;
  bool meet_refuted = false, injective_refuted = false;
  for (const auto& a : probes) {
    RingValue fa = apply_hom(d, a);
    if (claims_meet && !meet_refuted && !is_zero(fa) && ideal_contains(*d.ideal, fa)) {
      report.refutations.push_back({"f(A) ∩ J = 0", "a = " + to_string(a) + ", f(a) = " + to_string(fa) + " ∈ J"});
      meet_refuted = true;
    }
    if (claims_injective && !injective_refuted && !is_zero(a) && is_zero(fa)) {
      report.refutations.push_back({"f injective", "f(" + to_string(a) + ") = f(0) = 0"});
      injective_refuted = true;
    }
  }

  if (d.flags.get(Flag::IsBezout) == Tri::Yes && integer_components(d)) {
    SampleOptions small;
    small.coefficient_bound = std::max(1L, bound / 2);
    Sampler pair_sampler(seed + 1, small);
    const std::size_t pairs = std::min<std::size_t>(samples, 20);
    for (std::size_t i = 0; i < pairs; ++i) {
      RingValue u = pair_sampler.element(ring), v = pair_sampler.element(ring);
      if (is_zero(u) && is_zero(v)) continue;
      GeneratorSearch s = principal_generator_search({u, v}, bound);
      if (!s.generator) {
        report.advisories.push_back("no principal generator within bound " + std::to_string(bound) + " for (" +
                                    to_string(u) + ", " + to_string(v) + ")");
        break;
      }
    }
  }
  return report;
}

}  // namespace amalgam
