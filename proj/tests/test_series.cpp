#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "amalgam/concrete.hpp"
#include "helpers.hpp"

using namespace amalgam;
using namespace th;

namespace {

std::vector<Rational> coeffs(std::vector<const char*> xs) {
  std::vector<Rational> c;
  for (const char* x : xs) c.push_back(parse_rational(x));
  return c;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("+7/3") == Rational(7, 3));
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "2/-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), AlgebraError);
  }
  CHECK_THROWS_AS(parse_integer("3/4"), AlgebraError);
}

TEST_CASE("polynomial division") {
  Polynomial a(coeffs({"-1", "0", "1"}));
  Polynomial b(coeffs({"-1", "1"}));
  auto [q, r] = Polynomial::divmod(a, b);
  CHECK(q == Polynomial(coeffs({"1", "1"})));
  CHECK(r.is_zero());
  auto [q2, r2] = Polynomial::divmod(Polynomial(coeffs({"1", "0", "1"})), Polynomial(coeffs({"0", "2"})));
  CHECK(q2 == Polynomial(coeffs({"0", "1/2"})));
  CHECK(r2 == Polynomial::constant(1));
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("series inverse examples") {
  RingPtr S4 = rings::truncated_series(4);
  auto inv = unit_inverse(series(S4, {"1", "1"}));
  REQUIRE(inv);
  CHECK(compare(*inv, series(S4, {"1", "-1", "1", "-1"}, 4)) != Equality::Different);

  CHECK(Series::compare(series_invert_unit(Series(coeffs({"1", "-1"}), kExact), 4),
                        Series(coeffs({"1", "1", "1", "1"}), 4)) == Equality::ToPrecision);
  CHECK(Series::compare(series_invert_unit(Series::constant(1), 4), Series::constant(1)) != Equality::Different);
  CHECK(Series::compare(series_invert_unit(Series(coeffs({"2", "2"}), 3), 3),
                        Series(coeffs({"1/2", "-1/2", "1/2"}), 3)) == Equality::ToPrecision);
  CHECK_THROWS_AS(series_invert_unit(Series(coeffs({"0", "1"}), 4), 4), AlgebraError);
}

TEST_CASE("series normal form examples") {
  SeriesNormalForm a = series_normalize(Series(coeffs({"0", "0", "2", "1"}), 6));
  CHECK(a.valuation == 2);
  CHECK(a.lead == 2);
  CHECK(Series::compare(a.unit_part, Series(coeffs({"1", "1/2"}), 4)) != Equality::Different);

  SeriesNormalForm b = series_normalize(Series::constant(1).truncated(8));
  CHECK(b.valuation == 0);
  CHECK(b.lead == 1);
  CHECK(Series::compare(b.unit_part, Series::constant(1)) != Equality::Different);

  SeriesNormalForm c = series_normalize(Series::monomial(Rational(1, 3), 1));
  CHECK(c.valuation == 1);
  CHECK(c.lead == Rational(1, 3));

  CHECK_THROWS_AS(series_normalize(Series::big_o(5)), AlgebraError);
}

TEST_CASE("series precision bookkeeping") {
  Series a(coeffs({"0", "1"}), 4);  // x + O(x^4)
  Series b(coeffs({"1"}), 3);       // 1 + O(x^3)
  CHECK((a + b).precision() == 3);
  CHECK(Series::multiply(a, b, 100).precision() == 4);
  CHECK(Series::multiply(a, b, 2).precision() == 2);
  CHECK(Series::monomial(1, 5).truncated(3).is_zero());
  CHECK_FALSE(Series::monomial(1, 5).truncated(3).is_exactly_zero());
  CHECK(Series::big_o(7).effective_valuation() == 7);
}

TEST_CASE("three-valued series equality") {
  Series exact(coeffs({"1", "2"}), kExact);
  CHECK(Series::compare(exact, exact) == Equality::Exact);
  CHECK(Series::compare(exact, Series(coeffs({"1", "2"}), 5)) == Equality::ToPrecision);
  CHECK(Series::compare(exact, Series(coeffs({"1", "3"}), 5)) == Equality::Different);
  CHECK(Series::compare(Series(coeffs({"1", "2", "7"}), kExact), Series(coeffs({"1", "2"}), 2)) ==
        Equality::ToPrecision);
}

TEST_CASE("exact division of series") {
  auto q = Series::divide(Series::monomial(Rational(1, 2), 3), Series::monomial(Rational(1, 2), 2), 32);
  REQUIRE(q);
  CHECK(Series::compare(*q, Series::monomial(1, 1)) != Equality::Different);
  CHECK_FALSE(Series::divide(Series::monomial(1, 1), Series::monomial(1, 2), 32));
}

TEST_CASE("series inverses agree with the recurrence oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 24;
    std::vector<mpq_class> f(n);
    for (auto& c : f) {
      c = mpq_class(num(rng), den(rng));
      c.canonicalize();
    }
    if (f[0] == 0) f[0] = 1;
    std::vector<Rational> fc(f.begin(), f.end());
    Series inv = series_invert_unit(Series(fc, n), n);
    std::vector<mpq_class> want = oracle::series_inverse(f, n);
    for (std::size_t k = 0; k < n; ++k) REQUIRE(inv.coeff(k) == want[k]);
    REQUIRE(inv.precision() == n);
  }
}

TEST_CASE("series products agree with the convolution oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<mpq_class> a(1 + trial % 7), b(1 + trial % 5);
    for (auto& c : a) c = num(rng);
    for (auto& c : b) c = num(rng);
    Series sa(std::vector<Rational>(a.begin(), a.end()), 12), sb(std::vector<Rational>(b.begin(), b.end()), 12);
    Series p = Series::multiply(sa, sb, 12);
    auto want = oracle::series_mul(a, b, 12);
    for (std::size_t k = 0; k < 12 && k < p.precision(); ++k) REQUIRE(p.coeff(k) == want[k]);
  }
}
