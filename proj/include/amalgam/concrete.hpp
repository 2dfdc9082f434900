#pragma once

#include <cstddef>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

/// f = lead · x^valuation · unit_part with unit_part = 1 + x·f1.
struct SeriesNormalForm {
  std::size_t valuation = 0;
  Rational lead;
  Series unit_part;
};

/// ZeroInput when f has no known nonzero coefficient.
SeriesNormalForm series_normalize(const Series& f);

/// Inverse of a series with nonzero constant term, to min(precision, cap).
/// NotAUnit otherwise.
Series series_invert_unit(const Series& f, std::size_t cap);

/// numerator / prod g_i^e_i in an overring, reduced.
RingValue overring_value(const RingPtr& ring, const RingValue& numerator, std::vector<unsigned> exponents);

GcdCertificate integer_gcd_certified(const RingValue& a, const RingValue& b);
GcdCertificate field_gcd_certified(const RingValue& a, const RingValue& b);
GcdCertificate polynomial_gcd_certified(const RingValue& a, const RingValue& b);

/// Certified gcd in A + xK[[x]] (and in K[[x]] itself) from valuations and
/// leading coefficients:
///   ord f < ord g  ->  generator lead(f)·x^ord f,
///   ord f = ord g  ->  over a common denominator d0 of the leading
///                      coefficients a/d0, b/d0, generator gcd_A(a,b)/d0 · x^p.
/// Cofactors are f/d, g/d; Bezout coefficients come from A's certificate
/// times the inverted unit parts.
GcdCertificate dplusm_gcd_certified(const RingValue& f, const RingValue& g);

/// u = a/d, v = b/d over a common denominator; the base certificate
/// (c, a', b', alpha, beta) of (a, b) yields generator c/d.
GcdCertificate overring_gcd_certified(const RingValue& u, const RingValue& v);

/// Componentwise certificates paired up.
GcdCertificate product_gcd_certified(const RingValue& u, const RingValue& v);

}  // namespace amalgam
