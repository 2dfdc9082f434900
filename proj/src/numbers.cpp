#include "amalgam/numbers.hpp"

#include <cctype>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) fail(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
    fail(ErrorKind::ParseError, "bad denominator in '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace amalgam
