#include "amalgam/polynomial.hpp"

#include <algorithm>

#include "amalgam/errors.hpp"

namespace amalgam {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorKind::ZeroDivisor, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem(a.coeffs_);
  std::vector<Rational> quo(a.coeffs_.size() - b.coeffs_.size() + 1);
  const Rational& lead = b.leading();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    if (rem[top] == 0) continue;
    Rational c = rem[top] / lead;
    quo[static_cast<std::size_t>(k)] = c;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= c * b.coeffs_[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::string c = amalgam::to_string(coeffs_[i]);
    if (!out.empty()) {
      if (c.front() == '-') {
        out += " - ";
        c.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += (c.find('/') != std::string::npos ? "(" + c + ")" : c) + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

}  // namespace amalgam
