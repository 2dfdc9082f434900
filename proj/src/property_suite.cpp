#include "amalgam/property_suite.hpp"

#include <functional>

#include "amalgam/amalgamation.hpp"
#include "amalgam/classify.hpp"
#include "amalgam/matrix.hpp"
#include "amalgam/sample.hpp"
#include "amalgam/witness.hpp"

namespace amalgam {

namespace {

constexpr std::size_t kMaxFailureNotes = 5;

bool eq(const RingValue& a, const RingValue& b) { return holds(compare(a, b)); }

bool skippable(ErrorKind k) {
  return k == ErrorKind::CapabilityMissing || k == ErrorKind::PrecisionExhausted || k == ErrorKind::NotEnumerable;
}

/// Runs `trial` n times; a trial returns an empty string on success or a
/// diagnostic otherwise.
SuiteResult run_trials(std::string name, std::size_t n, const std::function<std::string(std::size_t)>& trial) {
  SuiteResult r;
  r.name = std::move(name);
  auto failure = [&](std::string why) {
    ++r.failed;
    if (r.failures.size() < kMaxFailureNotes) r.failures.push_back(std::move(why));
  };
  for (std::size_t i = 0; i < n; ++i) {
    try {
      std::string why = trial(i);
      if (why.empty()) {
        ++r.passed;
      } else {
        failure("trial " + std::to_string(i) + ": " + why);
      }
    } catch (const AlgebraError& e) {
      if (skippable(e.kind())) {
        ++r.skipped;
        if (r.note.empty()) r.note = e.what();
      } else {
        failure("trial " + std::to_string(i) + ": " + e.what());
      }
    }
  }
  return r;
}

SuiteResult not_applicable(std::string name, std::string why) {
  SuiteResult r;
  r.name = std::move(name);
  r.applicable = false;
  r.note = std::move(why);
  return r;
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

SuiteResult ring_axioms(const RingPtr& ring, Sampler& s, std::size_t n) {
  return run_trials("ring axioms", n, [&](std::size_t) -> std::string {
    RingValue a = s.element(ring), b = s.element(ring), c = s.element(ring);
    if (!eq(a + b, b + a)) return "a+b != b+a for " + to_string(a) + ", " + to_string(b);
    if (!eq(a * b, b * a)) return "ab != ba for " + to_string(a) + ", " + to_string(b);
    if (!eq((a + b) + c, a + (b + c))) return "addition not associative";
    if (!eq((a * b) * c, a * (b * c))) return "multiplication not associative";
    if (!eq(a * (b + c), a * b + a * c)) return "distributivity fails";
    if (!eq(a + zero(ring), a)) return "0 is not neutral";
    if (!eq(a * one(ring), a)) return "1 is not neutral";
    return expect(is_zero(a + (-a)), "a + (-a) != 0");
  });
}

SuiteResult hom_laws(const RingPtr& ring, Sampler& s, std::size_t n) {
  return run_trials("hom laws", n, [&](std::size_t) -> std::string {
    const RingDescriptor& d = *ring;
    RingValue a = s.element(d.left), b = s.element(d.left);
    if (!eq(apply_hom(d, a + b), apply_hom(d, a) + apply_hom(d, b))) return "f(a+b) != f(a)+f(b)";
    if (!eq(apply_hom(d, a * b), apply_hom(d, a) * apply_hom(d, b))) return "f(ab) != f(a)f(b)";
    return expect(eq(apply_hom(d, one(d.left)), one(d.right)), "f(1) != 1");
  });
}

SuiteResult closure(const RingPtr& ring, Sampler& s, std::size_t n) {
  return run_trials("closure", n, [&](std::size_t) -> std::string {
    RingValue u = s.element(ring), v = s.element(ring);
    for (ArithOp op : {ArithOp::Add, ArithOp::Mul, ArithOp::Neg}) {
      RingValue w = amalgam_arith(op, u, v);
      if (!amalgam_invariant_holds(w)) return "membership invariant broken by " + to_string(w);
    }
    return {};
  });
}

SuiteResult gcd_soundness(const RingPtr& ring, Sampler& s, std::size_t n) {
  if (!capabilities(*ring).gcd) return not_applicable("gcd soundness", "ring has no certified gcd");
  return run_trials("gcd soundness", n, [&](std::size_t) -> std::string {
    RingValue a = s.element(ring), b = s.element(ring);
    GcdCertificate c = gcd_certified(a, b);
    VerificationReport r = verify_gcd_certificate(a, b, c);
    if (!r.passed()) return "certificate for (" + to_string(a) + ", " + to_string(b) + ") fails";
    return expect(eq(c.alpha * a + c.beta * b, c.d), "alpha*a + beta*b != d");
  });
}

SuiteResult unit_inverses(const RingPtr& ring, Sampler& s, std::size_t n) {
  return run_trials("unit inverses", n, [&](std::size_t) -> std::string {
    RingValue u = s.unit(ring);
    auto inv = unit_inverse(u);
    if (!inv) return "no inverse for unit " + to_string(u);
    if (!eq(*inv * u, one(ring))) return "u⁻¹·u != 1 for " + to_string(u);
    if (ring->is_amalgamation()) {
      auto w = amalgam_invert(u);
      if (!w) return "amalgam_invert declined unit " + to_string(u);
      if (!amalgam_invariant_holds(*w)) return "inverse leaves the amalgamation";
      return expect(eq(*w * u, one(ring)), "amalgam inverse fails");
    }
    return {};
  });
}

SuiteResult iso_laws(const RingPtr& ring, Sampler& s, std::size_t n) {
  try {
    (void)iso_to_target(one(ring));
  } catch (const AlgebraError& e) {
    return not_applicable("iso laws", e.what());
  }
  return run_trials("iso laws", n, [&](std::size_t) -> std::string {
    RingValue u = s.element(ring), v = s.element(ring);
    RingValue tu = iso_to_target(u), tv = iso_to_target(v);
    if (!eq(iso_from_target(ring, tu), u)) return "round trip fails for " + to_string(u);
    if (!eq(iso_to_target(u + v), tu + tv)) return "iso not additive";
    if (!eq(iso_to_target(u * v), tu * tv)) return "iso not multiplicative";
    return expect(eq(iso_to_target(one(ring)), one(tu.ring())), "iso(1) != 1");
  });
}

SuiteResult classifier_chain(const RingPtr& ring) {
  return run_trials("classifier chain", 1, [&](std::size_t) -> std::string {
    Classification c = classify_amalgamation(*ring);
    return expect(chain_holds(c), "EDR ⇒ Hermite ⇒ Bezout violated: " + c.paperCase);
  });
}

SuiteResult witness_coherence(const RingPtr& ring, long bound) {
  const RingDescriptor& d = *ring;
  Classification c = classify_amalgamation(d);
  if (c.bezout != Tri::No || c.paperCase.find("Lemma 2.1") == std::string::npos)
    return not_applicable("witness coherence", "verdict does not rest on a nonzero f(A) ∩ J");
  if (d.left->kind != RingKind::Integers || d.right->kind != RingKind::Integers)
    return not_applicable("witness coherence", "components are not enumerable");
  return run_trials("witness coherence", 1, [&](std::size_t) -> std::string {
    for (long k = 1; k <= bound; ++k) {
      RingValue a(d.left, Integer(k));
      RingValue fa = apply_hom(d, a);
      if (is_zero(fa) || !ideal_contains(*d.ideal, fa)) continue;
      std::vector<RingValue> gens{amalgam_from_pair(ring, a, fa), amalgam_from_pair(ring, zero(d.left), fa)};
      GeneratorSearch g = principal_generator_search(gens, bound);
      if (g.generator) return "found generator " + to_string(*g.generator);
      return expect(g.exhaustive, "search was not exhaustive");
    }
    return "no a <= bound with 0 != f(a) ∈ J";
  });
}

SuiteResult duplication_reduction(const RingPtr& ring, Sampler& s, std::size_t n) {
  if (ring->kind != RingKind::Duplication || !ideal_is_whole(*ring))
    return not_applicable("duplication reduction", "not a duplication with A ⊆ E");
  RingPtr prod = rings::product(ring->left, ring->right);
  return run_trials("duplication reduction", n, [&](std::size_t) -> std::string {
    RingValue u = s.element(ring), v = s.element(ring);
    RingValue pu = RingValue::pair(prod, u.left(), u.right());
    RingValue pv = RingValue::pair(prod, v.left(), v.right());
    for (auto [w, pw] : {std::pair{u + v, pu + pv}, std::pair{u * v, pu * pv}, std::pair{-u, -pu}}) {
      if (!eq(w.left(), pw.left()) || !eq(w.right(), pw.right())) return "A⋈E and A×E disagree";
    }
    return {};
  });
}

SuiteResult hermite_forms(const RingPtr& ring, Sampler& s, std::size_t n) {
  return run_trials("hermite", n, [&](std::size_t i) -> std::string {
    Matrix m = s.matrix(ring, 2 + i % 2, 2 + i % 2);
    return expect(verify_hermite(m, hermite_reduce(m)).passed(), "hermite verification fails for " + m.to_string());
  });
}

SuiteResult smith_forms(const RingPtr& ring, Sampler& s, std::size_t n) {
  return run_trials("snf", n, [&](std::size_t i) -> std::string {
    Matrix m = s.matrix(ring, 2 + i % 2, 2 + i % 2);
    SnfResult r = snf(m);
    return expect(verify_snf(m, r.P, r.Q, r.D).passed(), "snf verification fails for " + m.to_string());
  });
}

SuiteResult falsify(const RingPtr& ring, const PropertyOptions& o) {
  SuiteResult r;
  r.name = "falsify_flags";
  FalsifyReport f = falsify_flags(ring, o.samples, o.seed);
  r.failed = f.refutations.size();
  r.passed = f.refutations.empty() ? 1 : 0;
  for (const auto& x : f.refutations) {
    if (r.failures.size() < kMaxFailureNotes) r.failures.push_back(x.claim + " refuted by " + x.witness);
  }
  for (const auto& a : f.advisories) r.note += (r.note.empty() ? "" : "; ") + a;
  return r;
}

}  // namespace

bool PropertyReport::passed() const {
  for (const auto& s : suites) {
    if (!s.ok()) return false;
  }
  return true;
}

PropertyReport run_property_suite(const RingPtr& ring, const PropertyOptions& o) {
  PropertyReport report;
  Sampler s(o.seed);
  const std::size_t n = o.samples;
  const std::size_t matrices = std::max<std::size_t>(1, n / 10);
  report.suites.push_back(ring_axioms(ring, s, n));
  if (ring->is_amalgamation()) {
    report.suites.push_back(hom_laws(ring, s, n));
    report.suites.push_back(closure(ring, s, n));
  } else {
    report.suites.push_back(not_applicable("hom laws", "not an amalgamation"));
    report.suites.push_back(not_applicable("closure", "not an amalgamation"));
  }
  report.suites.push_back(gcd_soundness(ring, s, n));
  report.suites.push_back(unit_inverses(ring, s, n));
  if (ring->is_amalgamation()) {
    report.suites.push_back(iso_laws(ring, s, n));
    report.suites.push_back(classifier_chain(ring));
    report.suites.push_back(witness_coherence(ring, o.bound));
  } else {
    report.suites.push_back(not_applicable("iso laws", "not an amalgamation"));
    report.suites.push_back(not_applicable("classifier chain", "not an amalgamation"));
    report.suites.push_back(not_applicable("witness coherence", "not an amalgamation"));
  }
  report.suites.push_back(duplication_reduction(ring, s, n));
  report.suites.push_back(hermite_forms(ring, s, matrices));
  report.suites.push_back(smith_forms(ring, s, matrices));
  if (ring->is_amalgamation()) {
    report.suites.push_back(falsify(ring, o));
  } else {
    report.suites.push_back(not_applicable("falsify_flags", "no declared hypotheses to test"));
  }
  return report;
}

std::vector<BatteryCase> classifier_battery(std::size_t precision) {
  RingPtr Z = rings::integers();
  RingPtr Q = rings::rationals();
  RingPtr Qx = rings::polynomials();
  RingPtr S = rings::truncated_series(precision);
  const HomDescriptor inclusion{HomKind::Inclusion, true};
  const HomDescriptor eval{HomKind::PolynomialEvalAtZero, false};
  FlagSet edr;
  edr.declare(Flag::IsEDR);
  const Tri Y = Tri::Yes, N = Tri::No, U = Tri::Unknown;
  return {
      {"Z ⋈ 2Z", rings::duplication(Z, Z, IdealDescriptor::multiples_of(RingValue(Z, Integer(2)))), N, N, N,
       "Lemma 2.1"},
      {"Z ⋈ Z", rings::duplication(Z, Z, IdealDescriptor::whole()), Y, Y, Y, "Example 2.7"},
      {"Z ⋈ xQ[[x]], image declared EDR",
       rings::amalgamation(Z, S, inclusion, IdealDescriptor::positive_order(), {true, edr, {}}), Y, Y, Y,
       "Theorem 2.4(1) J≠B"},
      {"Z ⋈ xQ[[x]], image flags from Z + xQ[[x]]",
       rings::amalgamation(Z, S, inclusion, IdealDescriptor::positive_order(), {true, {}, {}}), Y, Y, U,
       "Theorem 2.9 J≠B"},
      {"Z ↪ Q[x], J = B", rings::amalgamation(Z, Qx, inclusion, IdealDescriptor::whole()), Y, Y, Y,
       "Theorem 2.4(1) J=B"},
      {"Q[x] → Q[[x]] at 0, J = xQ[[x]]", rings::amalgamation(Qx, S, eval, IdealDescriptor::positive_order()), N, N,
       N, "Theorem 2.13"},
      {"Q[x] → Q at 0, J = 0", rings::amalgamation(Qx, Q, eval, IdealDescriptor::zero()), Y, Y, Y,
       "Theorem 2.13 J=0"},
      {"Q[x] → Q at 0, J = Q", rings::amalgamation(Qx, Q, eval, IdealDescriptor::whole()), Y, Y, Y,
       "Theorem 2.13 J=B"},
  };
}

}  // namespace amalgam
