#pragma once

#include <string>
#include <utility>
#include <vector>

#include "amalgam/numbers.hpp"

namespace amalgam {

/// Dense univariate polynomial over Q, coefficients in ascending degree with
/// no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t n) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial scaled(const Rational& c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace amalgam
