#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amalgam/concrete.hpp"
#include "amalgam/sample.hpp"
#include "helpers.hpp"

using namespace amalgam;
using namespace th;

namespace {

RingPtr dplusm_z() { return rings::dplusm(Z()); }
RingPtr z_half() { return rings::overring(Z(), {z(2)}); }

RingValue half_int(const char* text) { return from_rational(z_half(), parse_rational(text)); }

RingValue unit_of(const RingValue& x) {
  auto inv = unit_inverse(x);
  REQUIRE(inv);
  return *inv;
}

void check_cert(const RingValue& a, const RingValue& b, const GcdCertificate& c) {
  VerificationReport r = verify_gcd_certificate(a, b, c);
  for (const auto& ch : r.checks) {
    CAPTURE(ch.name);
    CHECK(ch.passed);
  }
  CHECK(same(c.alpha * a + c.beta * b, c.d));
}

/// d and the expected generator are associates.
bool associates(const RingValue& d, const RingValue& g) { return divides(d, g) && divides(g, d); }

}  // namespace

TEST_CASE("unit_inverse and divide_exact over the integers") {
  CHECK(same(unit_of(z(1)), z(1)));
  CHECK(same(unit_of(z(-1)), z(-1)));
  CHECK_FALSE(unit_inverse(z(2)));
  auto q = divide_exact(z(6), z(3));
  REQUIRE(q);
  CHECK(same(*q, z(2)));
  CHECK_FALSE(divide_exact(z(3), z(2)));
  CHECK_THROWS_AS(divide_exact(z(3), z(0)), AlgebraError);
  CHECK(divides(z(2), z(6)));
  CHECK(divides(z(0), z(0)));
  CHECK_FALSE(divides(z(0), z(5)));
}

TEST_CASE("divide_exact in Z + xQ[[x]]") {
  RingPtr R = dplusm_z();
  auto q = divide_exact(series(R, {"0", "0", "0", "1/2"}), series(R, {"0", "0", "1/2"}));
  REQUIRE(q);
  CHECK(same(*q, series(R, {"0", "1"})));
  // 1/2 is not in Z, so (1/2)·1 does not divide 1 in the D+M ring.
  CHECK_FALSE(divide_exact(series(R, {"1"}), series(R, {"2"})));
}

TEST_CASE("integer gcd certificates") {
  GcdCertificate c = gcd_certified(z(4), z(6));
  CHECK(same(c.d, z(2)));
  CHECK(same(c.a1, z(2)));
  CHECK(same(c.b1, z(3)));
  CHECK(same(c.alpha, z(-1)));
  CHECK(same(c.beta, z(1)));
  check_cert(z(4), z(6), c);

  GcdCertificate zero = gcd_certified(z(0), z(0));
  CHECK(same(zero.d, z(0)));
  CHECK(same(zero.a1, z(1)));
  CHECK(same(zero.b1, z(0)));
  CHECK(same(zero.alpha, z(1)));
  CHECK(same(zero.beta, z(0)));
  CHECK(verify_gcd_certificate(z(0), z(0), zero).passed());

  GcdCertificate five = gcd_certified(z(0), z(5));
  CHECK(same(five.d, z(5)));
  CHECK(same(five.a1, z(0)));
  CHECK(same(five.b1, z(1)));
  CHECK(same(five.alpha, z(0)));
  CHECK(same(five.beta, z(1)));
}

TEST_CASE("verify_gcd_certificate rejects a broken certificate") {
  GcdCertificate c = gcd_certified(z(4), z(6));
  c.alpha = z(0);
  c.beta = z(0);
  VerificationReport r = verify_gcd_certificate(z(4), z(6), c);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("alpha*a1 + beta*b1 = 1"));
  CHECK_FALSE(r.find("alpha*a1 + beta*b1 = 1")->passed);
  CHECK(r.find("a = a1*d")->passed);
}

TEST_CASE("integer gcd agrees with the extended Euclid oracle") {
  Sampler s(3);
  for (int i = 0; i < 300; ++i) {
    RingValue a = z(s.integer(-500, 500)), b = z(s.integer(-500, 500));
    GcdCertificate c = gcd_certified(a, b);
    auto [g, x, y] = oracle::ext_euclid(a.integer(), b.integer());
    REQUIRE(x * a.integer() + y * b.integer() == g);
    REQUIRE(abs(c.d.integer()) == g);
    REQUIRE(verify_gcd_certificate(a, b, c).passed());
  }
}

TEST_CASE("field and polynomial gcd") {
  RingPtr Qr = Q();
  GcdCertificate c = gcd_certified(q(Qr, "3/4"), q(Qr, "-2"));
  CHECK(is_one(c.d));
  check_cert(q(Qr, "3/4"), q(Qr, "-2"), c);

  RingValue a = poly({"-1", "0", "1"});  // x^2 - 1
  RingValue b = poly({"1", "2", "1"});   // (x + 1)^2
  GcdCertificate p = gcd_certified(a, b);
  CHECK(same(p.d, poly({"1", "1"})));
  check_cert(a, b, p);
}

TEST_CASE("kaplansky_solve returns valid pairs") {
  auto valid = [](const RingValue& a, const RingValue& b, const RingValue& c, const RingValue& p,
                  const RingValue& q) {
    return is_unit(gcd_certified(p * a, p * b + q * c).d);
  };
  auto r = kaplansky_solve(z(2), z(3), z(5));
  REQUIRE(r);
  CHECK(valid(z(2), z(3), z(5), r->first, r->second));

  auto r2 = kaplansky_solve(z(0), z(0), z(1));
  REQUIRE(r2);
  CHECK(valid(z(0), z(0), z(1), r2->first, r2->second));

  RingPtr Qr = Q();
  auto r3 = kaplansky_solve(q(Qr, "2/3"), q(Qr, "5"), q(Qr, "0"));
  REQUIRE(r3);
  CHECK(is_one(r3->first));
  CHECK(is_zero(r3->second));

  CHECK_FALSE(kaplansky_solve(z(2), z(4), z(6)));

  Sampler s(5);
  for (int i = 0; i < 100; ++i) {
    RingValue a = z(s.integer(-30, 30)), b = z(s.integer(-30, 30)), c = z(s.integer(-30, 30));
    auto [g1, x1, y1] = oracle::ext_euclid(a.integer(), b.integer());
    auto [g, x, y] = oracle::ext_euclid(g1, c.integer());
    auto sol = kaplansky_solve(a, b, c);
    REQUIRE(sol.has_value() == (g == 1));
    if (sol) REQUIRE(valid(a, b, c, sol->first, sol->second));
  }
}

TEST_CASE("D+M gcd examples") {
  RingPtr R = dplusm_z();
  RingValue f = series(R, {"0", "0", "1/2"});
  RingValue g = series(R, {"0", "0", "0", "1/3"});
  GcdCertificate c = dplusm_gcd_certified(f, g);
  CHECK(associates(c.d, f));
  check_cert(f, g, c);

  RingValue g2 = series(R, {"0", "0", "1/3"});
  GcdCertificate c2 = dplusm_gcd_certified(f, g2);
  CHECK(associates(c2.d, series(R, {"0", "0", "1/6"})));
  check_cert(f, g2, c2);

  RingValue u = series(R, {"4", "1"}), v = series(R, {"6", "1"});
  GcdCertificate c3 = dplusm_gcd_certified(u, v);
  CHECK(associates(c3.d, series(R, {"2"})));
  check_cert(u, v, c3);
}

TEST_CASE("D+M gcd on random pairs") {
  RingPtr R = dplusm_z();
  Sampler s(17);
  for (int i = 0; i < 200; ++i) {
    RingValue f = s.element(R), g = s.element(R);
    GcdCertificate c = gcd_certified(f, g);
    REQUIRE(verify_gcd_certificate(f, g, c).passed());
  }
}

TEST_CASE("overring gcd examples") {
  GcdCertificate c = overring_gcd_certified(half_int("3/2"), half_int("5/2"));
  CHECK(associates(c.d, half_int("1/2")));
  CHECK(is_unit(c.d));
  check_cert(half_int("3/2"), half_int("5/2"), c);

  GcdCertificate c2 = overring_gcd_certified(half_int("6"), half_int("10"));
  CHECK(associates(c2.d, half_int("2")));
  // 2 is a unit of Z[1/2], so the generator is one too.
  CHECK(is_unit(c2.d));

  GcdCertificate c3 = overring_gcd_certified(half_int("0"), half_int("3/4"));
  CHECK(associates(c3.d, half_int("3/4")));
  check_cert(half_int("0"), half_int("3/4"), c3);
}

TEST_CASE("overring elements reduce and invert") {
  RingValue x = half_int("3/4");
  CHECK(to_string(x * half_int("4")) == to_string(half_int("3")));
  CHECK(is_unit(half_int("1/8")));
  CHECK_FALSE(is_unit(half_int("3")));
  CHECK_THROWS_AS(half_int("1/3"), AlgebraError);
}

TEST_CASE("product gcd examples") {
  RingPtr P = z_times_z();
  auto pr = [&](long a, long b) { return RingValue::pair(P, z(a), z(b)); };
  CHECK(same(product_gcd_certified(pr(2, 0), pr(0, 3)).d, pr(2, 3)));
  CHECK(same(product_gcd_certified(pr(1, 1), pr(0, 0)).d, pr(1, 1)));
  GcdCertificate c = product_gcd_certified(pr(4, 6), pr(6, 4));
  CHECK(same(c.d, pr(2, 2)));
  check_cert(pr(4, 6), pr(6, 4), c);
}

TEST_CASE("ideal membership") {
  CHECK(ideal_contains(IdealDescriptor::multiples_of(z(2)), z(6)));
  CHECK_FALSE(ideal_contains(IdealDescriptor::multiples_of(z(2)), z(3)));
  RingPtr S = rings::truncated_series();
  CHECK_FALSE(ideal_contains(IdealDescriptor::positive_order(), series(S, {"1", "1"})));
  CHECK(ideal_contains(IdealDescriptor::positive_order(), series(S, {"0", "0", "1/3"})));
  CHECK(ideal_contains(IdealDescriptor::zero(), zero(S)));
  CHECK(ideal_contains(IdealDescriptor::whole(), series(S, {"5"})));
}

TEST_CASE("flag closure") {
  FlagSet f;
  f.declare(Flag::IsEDR);
  FlagSet c = f.closed();
  CHECK(c.get(Flag::IsHermite) == Tri::Yes);
  CHECK(c.get(Flag::IsBezout) == Tri::Yes);

  FlagSet g;
  g.deny(Flag::IsBezout);
  CHECK(g.closed().get(Flag::IsEDR) == Tri::No);
  CHECK(g.closed().get(Flag::IsValuation) == Tri::No);

  FlagSet h;
  h.declare(Flag::IsDomain).declare(Flag::IsBezout);
  CHECK(h.closed().get(Flag::IsHermite) == Tri::Yes);

  FlagSet bad;
  bad.declare(Flag::IsEDR).deny(Flag::IsBezout);
  CHECK_THROWS_AS(bad.closed(), AlgebraError);

  CHECK(rings::integers()->flags.get(Flag::IsEDR) == Tri::Yes);
  CHECK(z_times_z()->flags.get(Flag::IsDomain) == Tri::No);
  FlagSet dom;
  dom.declare(Flag::IsDomain);
  CHECK_THROWS_AS(rings::product(Z(), Z(), dom), AlgebraError);
}

TEST_CASE("mixed rings are rejected") {
  CHECK_THROWS_AS(z(1) + q(Q(), "1"), AlgebraError);
  CHECK_THROWS_AS(gcd_certified(z(1), poly({"1"})), AlgebraError);
}

TEST_CASE("capabilities") {
  CHECK(capabilities(*Z()).euclidean);
  CHECK(capabilities(*dplusm_z()).gcd);
  CHECK_FALSE(capabilities(*dplusm_z()).kaplansky);
  CHECK_FALSE(capabilities(*z_bowtie_2z()).gcd);
  CHECK(capabilities(*z_bowtie_xq()).gcd);
}
