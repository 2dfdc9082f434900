#include "amalgam/sample.hpp"

#include "amalgam/amalgamation.hpp"
#include "amalgam/concrete.hpp"

namespace amalgam {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational Sampler::rational() {
  const long b = options_.coefficient_bound;
  Rational q(Integer(static_cast<long>(integer(-b, b))), Integer(static_cast<long>(integer(1, b))));
  q.canonicalize();
  return q;
}

Series Sampler::series(const RingDescriptor& ring, bool integral_constant) {
  const std::size_t prec = ring.precision;
  std::size_t v = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(std::min(options_.max_valuation, prec - 1))));
  std::vector<Rational> coeffs(prec);
  const long b = options_.coefficient_bound;
  for (std::size_t k = v; k < prec && k <= v + options_.tail_terms; ++k) {
    if (k == 0 && integral_constant) {
      coeffs[k] = Integer(static_cast<long>(integer(-b, b)));
    } else {
      coeffs[k] = rational();
    }
  }
  if (coeffs[v] == 0) coeffs[v] = 1;
  return Series(std::move(coeffs), prec);
}

RingValue Sampler::element(const RingPtr& ring) {
  const long b = options_.coefficient_bound;
  switch (ring->kind) {
    case RingKind::Integers: return RingValue(ring, Integer(static_cast<long>(integer(-b, b))));
    case RingKind::Rationals: return RingValue(ring, rational());
    case RingKind::PolynomialOverRationals: {
      std::vector<Rational> c(static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(options_.max_degree))) + 1);
      for (auto& x : c) x = rational();
      return RingValue(ring, Polynomial(std::move(c)));
    }
    case RingKind::TruncatedSeries: return RingValue(ring, series(*ring, false));
    case RingKind::DPlusM:
      return RingValue(ring, series(*ring, ring->base->kind == RingKind::Integers));
    case RingKind::Overring: {
      std::vector<unsigned> e(ring->generators.size());
      for (auto& x : e) x = static_cast<unsigned>(integer(0, options_.max_exponent));
      return overring_value(ring, element(ring->base), std::move(e));
    }
    case RingKind::Product: return RingValue::pair(ring, element(ring->left), element(ring->right));
    case RingKind::Amalgamation:
    case RingKind::Duplication: return amalgam_make(ring, element(ring->left), ideal_element(*ring));
  }
  fail(ErrorKind::InvalidDescriptor, "unknown ring kind");
}

RingValue Sampler::ideal_element(const RingDescriptor& ring) {
  const IdealDescriptor& J = *ring.ideal;
  const RingPtr& b = ring.right;
  switch (J.kind) {
    case IdealKind::Zero: return zero(b);
    case IdealKind::Whole: return element(b);
    case IdealKind::MultiplesOf: return *J.generator * element(b);
    case IdealKind::PositiveOrder: {
      RingValue x = element(b);
      RingValue shift = b->kind == RingKind::PolynomialOverRationals
                            ? RingValue(b, Polynomial::monomial(1, 1))
                            : RingValue(b, Series::monomial(1, 1));
      return x * shift;
    }
  }
  return zero(b);
}

RingValue Sampler::unit(const RingPtr& ring) {
  auto sign = [&]() { return integer(0, 1) ? 1L : -1L; };
  switch (ring->kind) {
    case RingKind::Integers: return from_integer(ring, sign());
    case RingKind::Rationals:
    case RingKind::PolynomialOverRationals: {
      Rational q = rational();
      if (q == 0) q = 1;
      return from_rational(ring, q);
    }
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      Rational c = ring->kind == RingKind::DPlusM && ring->base->kind == RingKind::Integers ? Rational(sign()) : rational();
      if (c == 0) c = 1;
      RingValue tail = element(ring) * RingValue(ring, Series::monomial(1, 1));
      return from_rational(ring, c) + tail;
    }
    case RingKind::Overring: {
      std::vector<unsigned> up(ring->generators.size()), down(ring->generators.size());
      for (std::size_t i = 0; i < up.size(); ++i) {
        up[i] = static_cast<unsigned>(integer(0, options_.max_exponent));
        down[i] = static_cast<unsigned>(integer(0, options_.max_exponent));
      }
      RingValue num = from_integer(ring->base, sign());
      for (std::size_t i = 0; i < up.size(); ++i) {
        for (unsigned k = 0; k < up[i]; ++k) num = num * ring->generators[i];
      }
      return overring_value(ring, num, down);
    }
    case RingKind::Product: return RingValue::pair(ring, unit(ring->left), unit(ring->right));
    case RingKind::Amalgamation:
    case RingKind::Duplication: {
      for (int attempt = 0; attempt < 64; ++attempt) {
        RingValue u = amalgam_make(ring, unit(ring->left), ideal_element(*ring));
        if (is_unit(u.right())) return u;
      }
      return one(ring);
    }
  }
  return one(ring);
}

Matrix Sampler::matrix(const RingPtr& ring, std::size_t rows, std::size_t cols) {
  std::vector<RingValue> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(element(ring));
  return Matrix(ring, rows, cols, std::move(e));
}

Matrix Sampler::unimodular(const RingPtr& ring, std::size_t n, int steps) {
  Matrix u = Matrix::identity(ring, n);
  if (n < 2) {
    if (n == 1) u.set(0, 0, unit(ring));
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n - 1)));
    std::size_t j = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n - 2)));
    if (j >= i) ++j;
    switch (integer(0, 2)) {
      case 0: u.swap_rows(i, j); break;
      case 1: u.add_row_multiple(i, j, element(ring)); break;
      default: u.scale_row(i, unit(ring)); break;
    }
  }
  return u;
}

}  // namespace amalgam
