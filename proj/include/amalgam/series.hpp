#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/numbers.hpp"

namespace amalgam {

/// Precision value of a series known exactly (all omitted coefficients are 0).
inline constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

/// Outcome of comparing values that may only be known up to a precision.
enum class Equality { Different = 0, ToPrecision = 1, Exact = 2 };

inline Equality meet(Equality a, Equality b) { return a < b ? a : b; }
inline bool holds(Equality e) { return e != Equality::Different; }

/// Truncated power series over Q.
///
/// Coefficients are stored densely from degree 0 with trailing zeros trimmed.
/// `precision()` is the absolute order N such that every coefficient of
/// degree < N is known; kExact marks a series that is a polynomial known
/// exactly. Arithmetic propagates precision the usual way: sums take the
/// minimum, products take min(ord a + prec b, ord b + prec a).
class Series {
 public:
  Series() = default;  // exact zero
  Series(std::vector<Rational> coeffs, std::size_t precision);

  static Series constant(const Rational& c);
  static Series monomial(const Rational& c, std::size_t degree);
  /// Zero known up to order `precision` (O(x^precision)).
  static Series big_o(std::size_t precision);

  std::size_t precision() const { return precision_; }
  bool is_exact() const { return precision_ == kExact; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t n) const;

  bool is_exactly_zero() const { return is_exact() && coeffs_.empty(); }
  /// True when no known coefficient is nonzero (exact zero or O(x^N)).
  bool is_zero() const { return coeffs_.empty(); }
  /// Order of the least nonzero known coefficient.
  std::optional<std::size_t> valuation() const;
  /// valuation() if known, the precision otherwise (kExact for exact zero).
  std::size_t effective_valuation() const;

  /// Caps the precision at `cap`; exact values of degree >= cap lose exactness.
  Series truncated(std::size_t cap) const;
  Series scaled(const Rational& c) const;
  /// Multiplication by x^k.
  Series shifted(std::size_t k) const;
  /// Division by x^k; the caller guarantees the first k coefficients vanish.
  Series unshifted(std::size_t k) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);

  /// Product with the result precision capped at `cap`.
  static Series multiply(const Series& a, const Series& b, std::size_t cap);
  /// Inverse of a series with nonzero constant term. Throws NotAUnit or
  /// PrecisionExhausted.
  static Series invert(const Series& f, std::size_t cap);
  /// Quotient q with f = q*g in Q[[x]], absent when ord f < ord g. Exact when
  /// both operands are exact and the quotient is a polynomial.
  static std::optional<Series> divide(const Series& f, const Series& g, std::size_t cap);

  static Equality compare(const Series& a, const Series& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  std::size_t precision_ = kExact;
};

}  // namespace amalgam
