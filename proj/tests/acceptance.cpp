// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "amalgam/classify.hpp"
#include "amalgam/concrete.hpp"
#include "amalgam/property_suite.hpp"
#include "amalgam/sample.hpp"
#include "amalgam/witness.hpp"
#include "helpers.hpp"

using namespace amalgam;
using namespace th;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kPrecision = 32;

constexpr std::size_t kGcdPairs = 200;
constexpr double kGcdSeconds = 1.0;
constexpr std::size_t kIntegerMatrices = 100;
constexpr long kIntegerEntryBound = 20;
constexpr double kIntegerSnfSeconds = 5.0;
constexpr std::size_t kProductMatrices = 50;
constexpr std::size_t kUnits = 100;
constexpr std::size_t kIsoElements = 100;
constexpr long kWitnessBound = 12;
constexpr double kWitnessSeconds = 2.0;
constexpr std::size_t kOverringPairs = 100;
constexpr std::size_t kOverringMatrices = 50;
constexpr double kOverringSeconds = 3.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void time_limit(Outcome& o, double elapsed, double limit) {
  o.require(elapsed < limit, "took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit) + " s");
  if (o.ok) o.detail = std::to_string(elapsed).substr(0, 5) + " s";
}

Outcome dplusm_gcd() {
  Outcome o;
  RingPtr R = rings::dplusm(Z(), kPrecision);
  Sampler s(kSeed);
  std::vector<std::pair<RingValue, RingValue>> pairs;
  for (std::size_t i = 0; i < kGcdPairs; ++i) pairs.emplace_back(s.element(R), s.element(R));
  auto start = Clock::now();
  for (const auto& [f, g] : pairs) {
    GcdCertificate c = dplusm_gcd_certified(f, g);
    VerificationReport r = verify_gcd_certificate(f, g, c);
    o.require(r.passed(), "certificate fails for " + to_string(f) + ", " + to_string(g));
  }
  time_limit(o, seconds_since(start), kGcdSeconds);
  return o;
}

Outcome integer_snf() {
  Outcome o;
  SampleOptions opts;
  opts.coefficient_bound = kIntegerEntryBound;
  Sampler s(kSeed, opts);
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < kIntegerMatrices; ++i) {
    std::size_t rows = static_cast<std::size_t>(s.integer(1, 4)), cols = static_cast<std::size_t>(s.integer(1, 4));
    ms.push_back(s.matrix(Z(), rows, cols));
  }
  auto start = Clock::now();
  for (const auto& m : ms) {
    SnfResult r = snf(m);
    VerificationReport v = verify_snf(m, r.P, r.Q, r.D);
    o.require(v.passed(), "verify_snf fails for " + m.to_string());
    const Check* chain = v.find("divisibility chain");
    o.require(chain && chain->passed, "divisibility chain fails for " + m.to_string());
    std::vector<mpz_class> want = oracle::elementary_snf(to_oracle(m));
    auto got = r.D.diagonal_entries();
    for (std::size_t k = 0; k < want.size(); ++k)
      o.require(abs(got[k].integer()) == want[k], "diagonal differs from the oracle for " + m.to_string());
  }
  time_limit(o, seconds_since(start), kIntegerSnfSeconds);
  return o;
}

Outcome product_transport() {
  Outcome o;
  RingPtr P = z_times_z();
  Sampler s(kSeed);
  for (std::size_t i = 0; i < kProductMatrices; ++i) {
    Matrix m = s.matrix(P, 3, 3);
    SnfResult r = snf(m);
    o.require(verify_snf(m, r.P, r.Q, r.D).passed(), "verify_snf fails for " + m.to_string());
    o.require(compare(r.P * m * r.Q, r.D) == Equality::Exact, "(P1×P2)M(Q1×Q2) != D");
    SnfResult a = snf(left_component(m)), b = snf(right_component(m));
    Matrix paired = pair_matrix(P, a.D, b.D);
    o.require(compare(r.D, paired) == Equality::Exact, "D is not the pairing of component diagonals");
  }
  return o;
}

Outcome unit_inverse_transfer() {
  Outcome o;
  RingPtr R = z_bowtie_xq(kPrecision);
  Sampler s(kSeed);
  for (std::size_t i = 0; i < kUnits; ++i) {
    RingValue a = z(s.integer(0, 1) ? 1 : -1);
    RingValue j = s.ideal_element(*R);
    RingValue u = amalgam_make(R, a, j);
    auto w = amalgam_invert(u);
    o.require(w.has_value(), "no inverse for " + to_string(u));
    if (!w) break;
    o.require(amalgam_invariant_holds(*w), "inverse leaves the amalgamation");
    RingValue prod = *w * u;
    o.require(same(prod.left(), z(1)), "left component of w·u is not 1");
    const Series& right = prod.right().series();
    o.require(right.precision() >= kPrecision, "w·u known to fewer than 32 coefficients");
    for (std::size_t k = 0; k < kPrecision; ++k)
      o.require(right.coeff(k) == (k == 0 ? 1 : 0), "w·u differs from 1 at x^" + std::to_string(k));
  }
  return o;
}

Outcome isomorphism() {
  Outcome o;
  RingPtr R = z_bowtie_xq(kPrecision);
  Sampler s(kSeed);
  for (std::size_t i = 0; i < kIsoElements; ++i) {
    RingValue u = s.element(R), v = s.element(R);
    RingValue tu = iso_to_target(u), tv = iso_to_target(v);
    o.require(same(iso_from_target(R, tu), u), "round trip fails for " + to_string(u));
    o.require(same(iso_to_target(iso_from_target(R, tu)), tu), "target round trip fails");
    o.require(same(iso_to_target(u + v), tu + tv), "iso not additive");
    o.require(same(iso_to_target(u * v), tu * tv), "iso not multiplicative");
  }
  o.require(same(iso_to_target(one(R)), one(iso_to_target(one(R)).ring())), "iso(1) != 1");
  return o;
}

Outcome witness() {
  Outcome o;
  auto start = Clock::now();
  RingPtr D = z_bowtie_2z();
  auto pd = [&](long a, long b) { return amalgam_from_pair(D, z(a), z(b)); };
  GeneratorSearch none = principal_generator_search({pd(2, 2), pd(0, 2)}, kWitnessBound);
  o.require(!none.generator, "found a generator in Z ⋈ 2Z");
  o.require(none.exhaustive, "search in Z ⋈ 2Z not exhaustive");
  RingPtr P = z_times_z();
  auto pp = [&](long a, long b) { return RingValue::pair(P, z(a), z(b)); };
  GeneratorSearch g = principal_generator_search({pp(2, 0), pp(0, 3)}, kWitnessBound);
  o.require(g.generator && same(*g.generator, pp(2, 3)), "Z×Z control did not return (2,3)");
  time_limit(o, seconds_since(start), kWitnessSeconds);
  return o;
}

Outcome example_battery() {
  Outcome o;
  FlagSet edr;
  edr.declare(Flag::IsEDR);
  RingPtr R = z_bowtie_xq(kPrecision, edr);
  auto pr = [&](long a) { return amalgam_from_pair(R, z(a), from_integer(R->right, a)); };
  o.require(!valuation_pair_check(pr(2), pr(3)), "(2,2) and (3,3) are comparable");
  Classification c = classify_amalgamation(*R);
  o.require(c.edr == Tri::Yes, "EDR verdict is " + std::string(to_string(c.edr)));
  o.require(c.paperCase.find("Theorem 2.4(1) J≠B") != std::string::npos, "paperCase is " + c.paperCase);
  return o;
}

Outcome overring() {
  Outcome o;
  RingPtr R = rings::overring(Z(), {z(2)});
  Sampler s(kSeed);
  std::vector<std::pair<RingValue, RingValue>> pairs;
  for (std::size_t i = 0; i < kOverringPairs; ++i) pairs.emplace_back(s.element(R), s.element(R));
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < kOverringMatrices; ++i) ms.push_back(s.matrix(R, 3, 3));
  auto start = Clock::now();
  for (const auto& [u, v] : pairs) {
    GcdCertificate c = gcd_certified(u, v);
    o.require(verify_gcd_certificate(u, v, c).passed(), "gcd certificate fails for " + to_string(u));
  }
  for (const auto& m : ms) {
    SnfResult r = snf_overring(m);
    o.require(verify_snf(m, r.P, r.Q, r.D).passed(), "verify_snf fails for " + m.to_string());
    // Oracle: clear the common denominator d = 2^e with raw rationals, take
    // invariant factors over Z, then divide by d.
    unsigned e = 0;
    for (const auto& x : m.entries()) e = std::max(e, x.exponents()[0]);
    mpz_class d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), e);
    oracle::IntMatrix cleared(3, std::vector<mpz_class>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const RingValue& x = m(i, j);
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), x.exponents()[0]);
        cleared[i][j] = x.numerator().integer() * (d / den);
      }
    std::vector<mpz_class> lambda = oracle::elementary_snf(cleared);
    for (std::size_t k = 0; k < 3; ++k) {
      const RingValue& dk = r.D(k, k);
      mpz_class den = 1;
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), dk.exponents()[0]);
      mpq_class got(dk.numerator().integer(), den), want(lambda[k], d);
      got.canonicalize();
      want.canonicalize();
      o.require(abs(got) == want, "D is not diag(λ/d) for " + m.to_string());
    }
  }
  time_limit(o, seconds_since(start), kOverringSeconds);
  return o;
}

Outcome classifier_battery_check() {
  Outcome o;
  struct Expected {
    Tri bezout, hermite, edr;
    const char* clause;
  };
  const Tri Y = Tri::Yes, N = Tri::No, U = Tri::Unknown;
  const Expected expected[] = {
      {N, N, N, "Example 2.12"},       {Y, Y, Y, "Example 2.7"},        {Y, Y, Y, "Theorem 2.4(1) J≠B"},
      {Y, Y, U, "Theorem 2.9 J≠B"},    {Y, Y, Y, "Theorem 2.9 J=B"},    {N, N, N, "Theorem 2.13"},
      {Y, Y, Y, "Theorem 2.13 J=0"},   {Y, Y, Y, "Theorem 2.13 J=B"},
  };
  auto battery = classifier_battery(kPrecision);
  o.require(battery.size() == std::size(expected), "battery has " + std::to_string(battery.size()) + " descriptors");
  for (std::size_t i = 0; i < battery.size() && i < std::size(expected); ++i) {
    Classification c = classify_amalgamation(*battery[i].ring);
    const Expected& e = expected[i];
    o.require(c.bezout == e.bezout && c.hermite == e.hermite && c.edr == e.edr,
              battery[i].name + ": verdicts differ");
    o.require(c.paperCase.find(e.clause) != std::string::npos, battery[i].name + ": label " + c.paperCase);
    o.require(chain_holds(c), battery[i].name + ": chain violated");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"D+M gcd certificates (200 pairs, precision 32, < 1 s)", dplusm_gcd},
      {"integer SNF vs elementary-operations oracle (100 matrices, < 5 s)", integer_snf},
      {"componentwise SNF over Z×Z (50 matrices, exact)", product_transport},
      {"inverses of units in Z ⋈ xQ[[x]] (100 units, precision 32)", unit_inverse_transfer},
      {"isomorphism onto f(A)+J (100 elements, exact)", isomorphism},
      {"non-principal witness in Z ⋈ 2Z and Z×Z control (bound 12, < 2 s)", witness},
      {"Z ⋈ xQ[[x]]: not a valuation ring, EDR by the J≠B clause", example_battery},
      {"overring Z[1/2]: 100 gcd pairs, 50 SNFs with D = diag(λ/d) (< 3 s)", overring},
      {"classifier battery (8 descriptors, labeled, chain respected)", classifier_battery_check},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw ") + e.what();
    }
    std::printf("%s criterion %d: %s%s%s\n", o.ok ? "PASS" : "FAIL", index, c.name, o.detail.empty() ? "" : " -- ",
                o.detail.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
