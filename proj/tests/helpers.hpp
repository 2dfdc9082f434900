#pragma once

#include <string>
#include <vector>

#include "amalgam/amalgamation.hpp"
#include "amalgam/matrix.hpp"
#include "oracles.hpp"

namespace th {

using namespace amalgam;

inline RingPtr Z() { return rings::integers(); }
inline RingPtr Q() { return rings::rationals(); }

inline RingValue z(long n) { return RingValue(rings::integers(), Integer(n)); }
inline RingValue q(const RingPtr& ring, const char* text) { return from_rational(ring, parse_rational(text)); }

/// Series with the given coefficients from degree 0, at `precision` (kExact
/// for a known polynomial).
inline RingValue series(const RingPtr& ring, std::vector<const char*> coeffs, std::size_t precision = kExact) {
  std::vector<Rational> c;
  for (const char* x : coeffs) c.push_back(parse_rational(x));
  return RingValue(ring, Series(std::move(c), precision));
}

inline RingValue poly(std::vector<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* x : coeffs) c.push_back(parse_rational(x));
  return RingValue(rings::polynomials(), Polynomial(std::move(c)));
}

inline Matrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<RingValue> e;
  for (const auto& r : rows)
    for (long x : r) e.push_back(z(x));
  return Matrix(Z(), rows.size(), rows.empty() ? 0 : rows[0].size(), std::move(e));
}

inline oracle::IntMatrix to_oracle(const Matrix& m) {
  oracle::IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).integer();
  return out;
}

inline bool same(const RingValue& a, const RingValue& b) { return holds(compare(a, b)); }

/// Z ⋈^i (xQ[[x]]) with f(A) ∩ J = 0 declared.
inline RingPtr z_bowtie_xq(std::size_t precision = rings::kDefaultPrecision, FlagSet image = {}) {
  return rings::amalgamation(Z(), rings::truncated_series(precision), {HomKind::Inclusion, true},
                             IdealDescriptor::positive_order(), {true, image, {}});
}

inline RingPtr z_bowtie_2z() { return rings::duplication(Z(), Z(), IdealDescriptor::multiples_of(z(2))); }
inline RingPtr z_times_z() { return rings::product(Z(), Z()); }

}  // namespace th
