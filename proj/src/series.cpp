#include "amalgam/series.hpp"

#include <algorithm>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

std::size_t sat_add(std::size_t a, std::size_t b) {
  if (a == kExact || b == kExact) return kExact;
  return a + b;
}

}  // namespace

Series::Series(std::vector<Rational> coeffs, std::size_t precision)
    : coeffs_(std::move(coeffs)), precision_(precision) {
  if (precision_ != kExact && coeffs_.size() > precision_) coeffs_.resize(precision_);
  trim();
}

Series Series::constant(const Rational& c) { return Series({c}, kExact); }

Series Series::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Series(std::move(v), kExact);
}

Series Series::big_o(std::size_t precision) { return Series({}, precision); }

void Series::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Series::coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return std::nullopt;
}

std::size_t Series::effective_valuation() const {
  auto v = valuation();
  return v ? *v : precision_;
}

Series Series::truncated(std::size_t cap) const {
  if (precision_ == kExact) return coeffs_.size() <= cap ? *this : Series(coeffs_, cap);
  return precision_ <= cap ? *this : Series(coeffs_, cap);
}

Series Series::scaled(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return Series(std::move(v), precision_);
}

Series Series::shifted(std::size_t k) const {
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Series(std::move(v), sat_add(precision_, k));
}

Series Series::unshifted(std::size_t k) const {
  if (precision_ != kExact && precision_ < k) fail(ErrorKind::PrecisionExhausted, "shift past precision");
  std::vector<Rational> v;
  if (coeffs_.size() > k) v.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
  return Series(std::move(v), precision_ == kExact ? kExact : precision_ - k);
}

Series operator+(const Series& a, const Series& b) {
  std::size_t prec = std::min(a.precision_, b.precision_);
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  if (prec != kExact) n = std::min(n, prec);
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Series(std::move(v), prec);
}

Series operator-(const Series& a) { return a.scaled(-1); }

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::multiply(const Series& a, const Series& b, std::size_t cap) {
  if (a.is_exactly_zero() || b.is_exactly_zero()) return Series{};
  std::size_t prec = std::min(sat_add(a.effective_valuation(), b.precision_),
                              sat_add(b.effective_valuation(), a.precision_));
  std::size_t n = (a.coeffs_.empty() || b.coeffs_.empty()) ? 0 : a.coeffs_.size() + b.coeffs_.size() - 1;
  std::size_t limit = std::min(prec, cap);
  n = std::min(n, limit);
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Series out(std::move(v), prec);
  if (prec == kExact) {
    // exact product that reaches the cap becomes a truncated value
    std::size_t full = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (full > cap) out.precision_ = cap;
    return out;
  }
  out.precision_ = limit;
  return out;
}

Series Series::invert(const Series& f, std::size_t cap) {
  if (f.precision_ == 0) fail(ErrorKind::PrecisionExhausted, "inverse of a series with no known terms");
  if (f.coeff(0) == 0) fail(ErrorKind::NotAUnit, "series with zero constant term has no inverse");
  Rational inv0 = 1 / f.coeffs_[0];
  if (f.is_exact() && f.coeffs_.size() == 1) return constant(inv0);
  std::size_t n = std::min(f.precision_, cap);
  std::vector<Rational> g(n);
  g[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k && i < f.coeffs_.size(); ++i) acc += f.coeffs_[i] * g[k - i];
    g[k] = -acc * inv0;
  }
  return Series(std::move(g), n);
}

std::optional<Series> Series::divide(const Series& f, const Series& g, std::size_t cap) {
  auto vg = g.valuation();
  if (!vg) {
    if (f.is_zero() && f.is_exact()) return Series{};
    fail(g.is_exact() ? ErrorKind::ZeroDivisor : ErrorKind::PrecisionExhausted, "division by a zero series");
  }
  for (std::size_t i = 0; i < *vg && i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] != 0) return std::nullopt;
  }
  if (f.is_exactly_zero()) return Series{};
  if (f.precision_ != kExact && f.precision_ <= *vg)
    fail(ErrorKind::PrecisionExhausted, "quotient has no known coefficients");
  Series num = f.unshifted(*vg);
  Series den = g.unshifted(*vg);
  Series q = multiply(num, invert(den, cap), cap);
  if (f.is_exact() && g.is_exact()) {
    Series candidate(q.coeffs_, kExact);
    Series back = multiply(candidate, g, kExact);
    if (compare(back, f) == Equality::Exact) return candidate;
  }
  return q;
}

Equality Series::compare(const Series& a, const Series& b) {
  std::size_t n = std::min(a.precision_, b.precision_);
  std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  if (n != kExact) len = std::min(len, n);
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeff(i) != b.coeff(i)) return Equality::Different;
  }
  return n == kExact ? Equality::Exact : Equality::ToPrecision;
}

std::string Series::to_string() const {
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
  if (precision_ != kExact) {
    if (!out.empty()) out += " + ";
    out += "O(x^" + std::to_string(precision_) + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace amalgam
