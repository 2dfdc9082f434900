#include "amalgam/classify.hpp"

#include "amalgam/amalgamation.hpp"

namespace amalgam {

namespace {

Tri both(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  return Tri::Unknown;
}

std::string describe(const std::string& who, Flag f, Tri t) {
  return who + "." + std::string(to_string(f)) + "=" + std::string(to_string(t));
}

struct Builder {
  Classification c;

  void clause(std::string name) { c.clauses.push_back(std::move(name)); }
  void assume(std::string a) { c.assumptionsUsed.push_back(std::move(a)); }
  Tri use(const std::string& who, const FlagSet& flags, Flag f) {
    Tri t = flags.get(f);
    assume(describe(who, f, t));
    return t;
  }
  void all(Tri t) { c.bezout = c.hermite = c.edr = t; }

  Classification done() {
    auto fill = [](Tri& t, Tri v) {
      if (t == Tri::Unknown) t = v;
    };
    if (c.edr == Tri::Yes) fill(c.hermite, Tri::Yes);
    if (c.hermite == Tri::Yes) fill(c.bezout, Tri::Yes);
    if (c.bezout == Tri::No) fill(c.hermite, Tri::No);
    if (c.hermite == Tri::No) fill(c.edr, Tri::No);
    if (c.clauses.empty()) c.clauses.push_back("no clause applies");
    for (std::size_t i = 0; i < c.clauses.size(); ++i) c.paperCase += (i ? " / " : "") + c.clauses[i];
    return std::move(c);
  }
};

FlagSet image_flags(const RingDescriptor& ring) {
  FlagSet flags = ring.image_flags;
  if (auto image = image_ring(ring)) flags = flags.merged((*image)->flags);
  return flags.closed();
}

Classification classify_duplication(const RingDescriptor& ring, Builder b) {
  const FlagSet& a = ring.left->flags;
  const bool ideal_of_a = same_ring(*ring.left, *ring.right);
  if (b.use("A", a, Flag::IsDomain) != Tri::Yes) {
    b.clause("no clause applies (A not declared a domain)");
    return b.done();
  }
  const bool contains_a = ideal_is_whole(ring);
  b.assume(std::string("A ⊆ E: ") + (contains_a ? "yes" : "no") + " (structural)");
  if (contains_a) {
    b.c.bezout = b.use("A", a, Flag::IsBezout);
    b.c.hermite = b.c.bezout;
    b.c.edr = b.use("A", a, Flag::IsEDR);
    b.clause(ideal_of_a ? "Example 2.7" : "Corollary 2.6");
    b.clause(ideal_of_a ? "Example 2.12" : "Corollary 2.11");
  } else {
    b.all(Tri::No);
    b.clause("Lemma 2.1");
    b.clause(ideal_of_a ? "Example 2.12" : "Corollary 2.11");
  }
  return b.done();
}

}  // namespace

Classification classify_amalgamation(const RingDescriptor& ring) {
  if (!ring.is_amalgamation()) fail(ErrorKind::InvalidDescriptor, ring.key + " is not an amalgamation");
  Builder b;
  if (ideal_is_zero(ring) && ring.kind == RingKind::Duplication) {
    b.clause("no clause applies (E = 0)");
    return b.done();
  }
  if (ring.kind == RingKind::Duplication) return classify_duplication(ring, std::move(b));

  const FlagSet& a = ring.left->flags;
  const FlagSet& bf = ring.right->flags;
  const bool injective = ring.hom.declared_injective && natural_injectivity(ring.hom.kind);
  b.assume(std::string("f injective: ") + (injective ? "yes" : "no"));
  const std::string part = injective ? "Theorem 2.4(1)" : "Theorem 2.4(2)";
  const std::string hermite_thm = injective ? "Theorem 2.9" : "Theorem 2.13";

  if (ideal_is_whole(ring)) {
    b.assume("J = B (structural)");
    b.c.bezout = both(b.use("A", a, Flag::IsBezout), b.use("B", bf, Flag::IsBezout));
    b.c.hermite = both(b.use("A", a, Flag::IsHermite), b.use("B", bf, Flag::IsHermite));
    b.c.edr = both(b.use("A", a, Flag::IsEDR), b.use("B", bf, Flag::IsEDR));
    b.clause(part + " J=B");
    b.clause(hermite_thm + " J=B");
    return b.done();
  }

  const bool domains = b.use("A", a, Flag::IsDomain) == Tri::Yes && b.use("B", bf, Flag::IsDomain) == Tri::Yes;
  if (!domains) {
    b.clause("no clause applies (A, B not declared domains)");
    return b.done();
  }

  if (ideal_is_zero(ring)) {
    b.assume("J = 0 (structural)");
    b.c.bezout = b.use("A", a, Flag::IsBezout);
    b.c.hermite = b.c.bezout;
    b.c.edr = b.use("A", a, Flag::IsEDR);
    b.clause(injective ? "Theorem 2.4(1) J≠B" : "Theorem 2.4(2) J=0");
    b.clause(injective ? "Theorem 2.9 J≠B" : "Theorem 2.13 J=0");
    return b.done();
  }

  b.assume("J proper and nonzero (structural)");
  if (!injective) {
    b.all(Tri::No);
    b.clause("Lemma 2.1(2)");
    b.clause("Theorem 2.4(2)");
    b.clause("Theorem 2.13");
    return b.done();
  }
  Tri meet = meet_trivial(ring);
  b.assume("f(A) ∩ J = 0: " + std::string(to_string(meet)));
  if (meet == Tri::No) {
    b.all(Tri::No);
    b.clause("Lemma 2.1(1)");
    b.clause("Theorem 2.4(1) J≠B");
    b.clause("Theorem 2.9 J≠B");
    return b.done();
  }
  if (meet == Tri::Unknown) {
    b.clause("no clause applies (f(A) ∩ J undetermined)");
    return b.done();
  }
  FlagSet image = image_flags(ring);
  b.c.bezout = b.use("f(A)+J", image, Flag::IsBezout);
  b.c.hermite = b.c.bezout;
  b.c.edr = b.use("f(A)+J", image, Flag::IsEDR);
  b.clause("Theorem 2.4(1) J≠B");
  b.clause("Theorem 2.9 J≠B");
  return b.done();
}

bool chain_holds(const Classification& c) {
  if (c.edr == Tri::Yes && c.hermite != Tri::Yes) return false;
  if (c.hermite == Tri::Yes && c.bezout != Tri::Yes) return false;
  if (c.bezout == Tri::No && c.hermite != Tri::No) return false;
  if (c.hermite == Tri::No && c.edr != Tri::No) return false;
  return true;
}

}  // namespace amalgam
