#pragma once

#include <cstdint>
#include <random>

#include "amalgam/matrix.hpp"

namespace amalgam {

struct SampleOptions {
  /// Bound on integer entries and on rational numerators/denominators.
  long coefficient_bound = 20;
  /// Largest valuation of a random series.
  std::size_t max_valuation = 5;
  /// Number of possibly nonzero coefficients after the leading one.
  std::size_t tail_terms = 4;
  std::size_t max_degree = 3;
  unsigned max_exponent = 2;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, SampleOptions options = {}) : rng_(seed), options_(options) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  Rational rational();
  RingValue element(const RingPtr& ring);
  /// Random element of the amalgamation's ideal J.
  RingValue ideal_element(const RingDescriptor& amalgamation);
  /// Random unit; for amalgamations the left component is a unit of A and
  /// the ideal part is random.
  RingValue unit(const RingPtr& ring);
  Matrix matrix(const RingPtr& ring, std::size_t rows, std::size_t cols);
  /// Product of random elementary matrices.
  Matrix unimodular(const RingPtr& ring, std::size_t n, int steps = 6);

  const SampleOptions& options() const { return options_; }
  std::mt19937_64& engine() { return rng_; }

 private:
  Series series(const RingDescriptor& ring, bool integral_constant);
  std::mt19937_64 rng_;
  SampleOptions options_;
};

}  // namespace amalgam
