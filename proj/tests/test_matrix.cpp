#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amalgam/sample.hpp"
#include "helpers.hpp"

using namespace amalgam;
using namespace th;

namespace {

RingPtr z_half() { return rings::overring(Z(), {z(2)}); }

Matrix half_matrix(const std::vector<std::vector<const char*>>& rows) {
  RingPtr R = z_half();
  std::vector<RingValue> e;
  for (const auto& r : rows)
    for (const char* x : r) e.push_back(from_rational(R, parse_rational(x)));
  return Matrix(R, rows.size(), rows[0].size(), std::move(e));
}

void require_passes(const VerificationReport& r) {
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.note);
    REQUIRE(c.passed);
  }
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(same(mat_det(int_matrix({{1, 0}, {0, 1}})), z(1)));
  CHECK(same(mat_det(int_matrix({{2, 3}, {1, 2}})), z(1)));
  RingPtr P = z_times_z();
  Matrix m = pair_matrix(P, int_matrix({{1, 0}, {0, 1}}), int_matrix({{2, 3}, {1, 2}}));
  CHECK(same(mat_det(m), RingValue::pair(P, z(1), z(1))));
  CHECK_THROWS_AS(mat_det(int_matrix({{1, 2}})), AlgebraError);
  Matrix big(Z(), kMaxDimension + 1, kMaxDimension + 1);
  CHECK_THROWS_AS(mat_det(big), AlgebraError);
}

TEST_CASE("determinants agree with the permutation oracle") {
  Sampler s(21);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 5;
    Matrix m = s.matrix(Z(), n, n);
    REQUIRE(mat_det(m).integer() == oracle::det(to_oracle(m)));
    REQUIRE(same(mat_det(m), det_leibniz(m)));
  }
  RingPtr R = rings::dplusm(Z(), 10);
  for (int i = 0; i < 10; ++i) {
    Matrix m = s.matrix(R, 3, 3);
    REQUIRE(same(mat_det(m), det_leibniz(m)));
  }
}

TEST_CASE("hermite examples") {
  Matrix row = int_matrix({{4, 6}});
  HermiteResult h = hermite_reduce(row);
  CHECK(compare(h.T, int_matrix({{2, 0}})) == Equality::Exact);
  CHECK(compare(h.Q, int_matrix({{-1, -3}, {1, 2}})) == Equality::Exact);
  require_passes(verify_hermite(row, h));

  Matrix zero_m(Z(), 2, 3);
  HermiteResult hz = hermite_reduce(zero_m);
  CHECK(compare(hz.T, zero_m) == Equality::Exact);
  CHECK(compare(hz.Q, Matrix::identity(Z(), 3)) == Equality::Exact);

  RingPtr R = rings::dplusm(Z());
  Matrix dm(R, 1, 2, {series(R, {"2", "1"}), series(R, {"3", "1"})});
  HermiteResult hd = hermite_reduce(dm);
  CHECK(same(hd.T(0, 0), one(R)));
  CHECK(is_zero(hd.T(0, 1)));
  require_passes(verify_hermite(dm, hd));
}

TEST_CASE("hermite on random matrices") {
  Sampler s(8);
  std::vector<RingPtr> rs{Z(), rings::polynomials(), rings::dplusm(Z(), 12), rings::overring(Z(), {z(3)}),
                          z_bowtie_xq(12)};
  for (const auto& ring : rs) {
    CAPTURE(ring->key);
    for (int i = 0; i < 12; ++i) {
      Matrix m = s.matrix(ring, 2 + i % 2, 2 + (i / 2) % 2);
      HermiteResult h = hermite_reduce(m);
      require_passes(verify_hermite(m, h));
      CHECK(is_lower_triangular(h.T));
    }
  }
}

TEST_CASE("snf examples") {
  Matrix m = int_matrix({{2, 4}, {6, 8}});
  SnfResult r = snf(m);
  CHECK(compare(r.D, int_matrix({{2, 0}, {0, 4}})) == Equality::Exact);
  require_passes(verify_snf(m, r.P, r.Q, r.D));

  Matrix id = Matrix::identity(Z(), 3);
  SnfResult ri = snf(id);
  CHECK(compare(ri.D, id) == Equality::Exact);
  CHECK(compare(ri.P, id) == Equality::Exact);
  CHECK(compare(ri.Q, id) == Equality::Exact);

  RingPtr P = z_times_z();
  Matrix pm = pair_matrix(P, int_matrix({{2}}), int_matrix({{3}}));
  SnfResult rp = snf(pm);
  CHECK(same(rp.D(0, 0), RingValue::pair(P, z(2), z(3))));
  require_passes(verify_snf(pm, rp.P, rp.Q, rp.D));
}

TEST_CASE("snf over the integers agrees with the elementary-operations oracle") {
  Sampler s(12);
  for (int i = 0; i < 80; ++i) {
    const std::size_t rows = 1 + i % 4, cols = 1 + (i / 4) % 4;
    Matrix m = s.matrix(Z(), rows, cols);
    SnfResult r = snf(m);
    require_passes(verify_snf(m, r.P, r.Q, r.D));
    std::vector<mpz_class> want = oracle::elementary_snf(to_oracle(m));
    auto got = r.D.diagonal_entries();
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) REQUIRE(got[k].integer() == want[k]);
  }
}

TEST_CASE("snf_overring examples") {
  Matrix m = half_matrix({{"3/2", "1/2"}, {"1/2", "1/2"}});
  SnfResult r = snf_overring(m);
  CHECK(same(r.D(0, 0), from_rational(z_half(), Rational(1, 2))));
  CHECK(same(r.D(1, 1), from_rational(z_half(), Rational(1))));
  require_passes(verify_snf(m, r.P, r.Q, r.D));

  Matrix integral = half_matrix({{"2", "4"}, {"6", "8"}});
  SnfResult ri = snf_overring(integral);
  SnfResult base = snf(int_matrix({{2, 4}, {6, 8}}));
  for (std::size_t k = 0; k < 2; ++k)
    CHECK(same(ri.D(k, k), from_integer(z_half(), base.D(k, k).integer())));

  Matrix single = half_matrix({{"1/2"}});
  SnfResult rs = snf_overring(single);
  CHECK(same(rs.D(0, 0), from_rational(z_half(), Rational(1, 2))));
  CHECK(is_one(rs.P(0, 0)));
  CHECK(is_one(rs.Q(0, 0)));
}

TEST_CASE("verify_snf rejects broken results") {
  Matrix m = int_matrix({{2, 4}, {6, 8}});
  SnfResult r = snf(m);
  Matrix q2 = r.Q;
  q2.scale_col(0, z(2));
  VerificationReport bad_q = verify_snf(m, r.P, q2, r.D);
  CHECK_FALSE(bad_q.find("det Q is a unit")->passed);

  Matrix d2 = r.D;
  d2.set(0, 1, z(1));
  VerificationReport bad_d = verify_snf(m, r.P, r.Q, d2);
  CHECK_FALSE(bad_d.find("D diagonal")->passed);
  CHECK_FALSE(bad_d.passed());

  Matrix d3 = int_matrix({{4, 0}, {0, 2}});
  CHECK_FALSE(verify_snf(int_matrix({{4, 0}, {0, 2}}), Matrix::identity(Z(), 2), Matrix::identity(Z(), 2), d3)
                  .find("divisibility chain")
                  ->passed);
}

TEST_CASE("snf routes over other rings") {
  Sampler s(31);
  std::vector<RingPtr> rs{Q(), rings::polynomials(), rings::truncated_series(12), z_times_z(),
                          rings::overring(Z(), {z(2), z(5)}),
                          rings::amalgamation(Z(), rings::polynomials(), {HomKind::Inclusion, true},
                                              IdealDescriptor::whole()),
                          rings::duplication(Z(), Z(), IdealDescriptor::zero())};
  for (const auto& ring : rs) {
    CAPTURE(ring->key);
    for (int i = 0; i < 8; ++i) {
      Matrix m = s.matrix(ring, 2 + i % 2, 3 - i % 2);
      SnfResult r = snf(m);
      require_passes(verify_snf(m, r.P, r.Q, r.D));
    }
  }
}

TEST_CASE("generic snf from gcd and kaplansky steps") {
  Sampler s(41);
  for (int i = 0; i < 40; ++i) {
    Matrix m = s.matrix(Z(), 2 + i % 3, 2 + (i / 3) % 3);
    SnfResult r = snf_generic(m);
    CHECK(r.route == "generic");
    VerificationReport v = verify_snf(m, r.P, r.Q, r.D);
    require_passes(v);
  }
}

TEST_CASE("snf declines rings without a diagonalization route") {
  RingPtr R = rings::dplusm(Z(), 8);
  Matrix m(R, 2, 2, {series(R, {"2", "1"}), series(R, {"0", "1"}), series(R, {"1"}), series(R, {"3"})});
  CHECK_THROWS_AS(snf(m), AlgebraError);
  try {
    snf(m);
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::CapabilityMissing);
  }
}

TEST_CASE("matrix products and component matrices") {
  RingPtr P = z_times_z();
  Matrix a = int_matrix({{1, 2}, {3, 4}}), b = int_matrix({{0, 1}, {1, 0}});
  Matrix pm = pair_matrix(P, a, b);
  CHECK(compare(left_component(pm), a) == Equality::Exact);
  CHECK(compare(right_component(pm), b) == Equality::Exact);
  CHECK(compare(a * b, int_matrix({{2, 1}, {4, 3}})) == Equality::Exact);
  CHECK_THROWS_AS(a * int_matrix({{1, 2, 3}}), AlgebraError);
}
