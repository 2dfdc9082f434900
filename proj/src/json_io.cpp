#include "amalgam/json_io.hpp"

#include <algorithm>
#include <initializer_list>

#include "amalgam/amalgamation.hpp"
#include "amalgam/concrete.hpp"

namespace amalgam {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

void check_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) bad(where + ": unknown field \"" + key + "\"");
  }
}

const Json& required(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  bad(where + ": expected a string");
}

std::size_t count(const Json& j, const std::string& where) {
  Integer n = parse_integer(text(j, where));
  if (n < 0 || !n.fits_ulong_p()) bad(where + ": expected a nonnegative count");
  return n.get_ui();
}

FlagSet parse_flags(const Json& declared, const Json& denied, const std::string& where) {
  FlagSet f;
  auto read = [&](const Json& list, bool yes) {
    if (list.is_null()) return;
    if (!list.is_array()) bad(where + ": flag list must be an array");
    for (const auto& item : list) {
      auto flag = flag_from_string(text(item, where));
      if (!flag) bad(where + ": unknown flag " + item.dump());
      yes ? f.declare(*flag) : f.deny(*flag);
    }
  };
  read(declared, true);
  read(denied, false);
  return f;
}

Json field_or_null(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? Json() : *it;
}

HomKind parse_hom_kind(const std::string& s) {
  for (HomKind k : {HomKind::Identity, HomKind::Inclusion, HomKind::InclusionIntoDPlusM, HomKind::InclusionIntoOverring,
                    HomKind::PolynomialEvalAtZero, HomKind::LeftFactorIntoProduct}) {
    if (to_string(k) == s) return k;
  }
  bad("unknown homomorphism kind \"" + s + "\"");
}

HomDescriptor parse_hom(const Json& j) {
  check_keys(j, {"kind", "declaredInjective"}, "hom");
  HomDescriptor h;
  h.kind = parse_hom_kind(text(required(j, "kind", "hom"), "hom.kind"));
  h.declared_injective = natural_injectivity(h.kind);
  if (auto it = j.find("declaredInjective"); it != j.end()) {
    if (!it->is_boolean()) bad("hom.declaredInjective must be a boolean");
    h.declared_injective = it->get<bool>();
  }
  return h;
}

IdealDescriptor parse_ideal(const Json& j, const RingPtr& ambient) {
  check_keys(j, {"kind", "generator"}, "ideal");
  std::string kind = text(required(j, "kind", "ideal"), "ideal.kind");
  if (kind == "Zero") return IdealDescriptor::zero();
  if (kind == "Whole") return IdealDescriptor::whole();
  if (kind == "PositiveOrder") return IdealDescriptor::positive_order();
  if (kind == "MultiplesOf") return IdealDescriptor::multiples_of(parse_value(required(j, "generator", "ideal"), ambient));
  bad("unknown ideal kind \"" + kind + "\"");
}

rings::AmalgamationOptions parse_options(const Json& j, const FlagSet& flags) {
  rings::AmalgamationOptions o;
  if (auto it = j.find("declaredMeetTrivial"); it != j.end()) {
    if (!it->is_boolean()) bad("declaredMeetTrivial must be a boolean");
    o.meet_trivial = it->get<bool>();
  }
  o.image_flags = parse_flags(field_or_null(j, "imageFlags"), field_or_null(j, "imageDeniedFlags"), "imageFlags");
  o.flags = flags;
  return o;
}

std::vector<Rational> parse_coeffs(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": coeffs must be an array");
  std::vector<Rational> out;
  for (const auto& c : j) out.push_back(parse_rational(text(c, where)));
  return out;
}

Json flags_json(unsigned bits) {
  Json list = Json::array();
  for (Flag f : kAllFlags) {
    if (bits & static_cast<unsigned>(f)) list.push_back(std::string(to_string(f)));
  }
  return list;
}

Json ideal_json(const IdealDescriptor& ideal) {
  Json j;
  j["kind"] = std::string(to_string(ideal.kind));
  if (ideal.generator) j["generator"] = value_to_json(*ideal.generator);
  return j;
}

}  // namespace

Json parse_json_text(const std::string& content) {
  try {
    return Json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

RingPtr parse_ring(const Json& j, std::size_t default_precision) {
  if (!j.is_object()) bad("ring: expected an object");
  const std::string kind = text(required(j, "kind", "ring"), "ring.kind");
  const FlagSet flags = parse_flags(field_or_null(j, "declaredFlags"), field_or_null(j, "deniedFlags"), kind);
  auto precision = [&](const char* key) {
    auto it = j.find(key);
    return it == j.end() ? default_precision : count(*it, kind + "." + key);
  };
  if (kind == "Integers") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags"}, kind);
    return rings::integers(flags);
  }
  if (kind == "Rationals") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags"}, kind);
    return rings::rationals(flags);
  }
  if (kind == "PolynomialOverRationals") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags"}, kind);
    return rings::polynomials(flags);
  }
  if (kind == "TruncatedSeries") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags", "coefficientField", "defaultPrecision"}, kind);
    if (auto it = j.find("coefficientField"); it != j.end()) {
      if (parse_ring(*it, default_precision)->kind != RingKind::Rationals)
        fail(ErrorKind::InvalidDescriptor, "series coefficient field must be Rationals");
    }
    return rings::truncated_series(precision("defaultPrecision"), flags);
  }
  if (kind == "DPlusM") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags", "baseDomain", "seriesPrecision"}, kind);
    return rings::dplusm(parse_ring(required(j, "baseDomain", kind), default_precision), precision("seriesPrecision"),
                         flags);
  }
  if (kind == "Overring") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags", "base", "denominatorGenerators"}, kind);
    RingPtr base = parse_ring(required(j, "base", kind), default_precision);
    const Json& gens = required(j, "denominatorGenerators", kind);
    if (!gens.is_array()) bad("denominatorGenerators must be an array");
    std::vector<RingValue> g;
    for (const auto& item : gens) g.push_back(parse_value(item, base));
    return rings::overring(base, std::move(g), flags);
  }
  if (kind == "Product") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags", "left", "right"}, kind);
    return rings::product(parse_ring(required(j, "left", kind), default_precision),
                          parse_ring(required(j, "right", kind), default_precision), flags);
  }
  if (kind == "Amalgamation") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags", "a", "b", "hom", "ideal", "declaredMeetTrivial", "imageFlags",
                   "imageDeniedFlags"},
               kind);
    RingPtr a = parse_ring(required(j, "a", kind), default_precision);
    RingPtr b = parse_ring(required(j, "b", kind), default_precision);
    return rings::amalgamation(a, b, parse_hom(required(j, "hom", kind)), parse_ideal(required(j, "ideal", kind), b),
                               parse_options(j, flags));
  }
  if (kind == "Duplication") {
    check_keys(j, {"kind", "declaredFlags", "deniedFlags", "a", "ambient", "submodule", "declaredMeetTrivial",
                   "imageFlags", "imageDeniedFlags"},
               kind);
    RingPtr a = parse_ring(required(j, "a", kind), default_precision);
    RingPtr ambient = j.contains("ambient") ? parse_ring(j["ambient"], default_precision) : a;
    return rings::duplication(a, ambient, parse_ideal(required(j, "submodule", kind), ambient),
                              parse_options(j, flags));
  }
  bad("unknown ring kind \"" + kind + "\"");
}

RingValue parse_value(const Json& j, const RingPtr& ring) {
  const std::string where = "element of " + ring->key;
  const bool scalar = j.is_string() || j.is_number_integer();
  switch (ring->kind) {
    case RingKind::Integers: return RingValue(ring, parse_integer(text(j, where)));
    case RingKind::Rationals: return RingValue(ring, parse_rational(text(j, where)));
    case RingKind::PolynomialOverRationals:
      if (scalar) return from_rational(ring, parse_rational(text(j, where)));
      check_keys(j, {"coeffs"}, where);
      return RingValue(ring, Polynomial(parse_coeffs(required(j, "coeffs", where), where)));
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      if (scalar) return from_rational(ring, parse_rational(text(j, where)));
      check_keys(j, {"valuation", "coeffs", "precision"}, where);
      std::size_t v = j.contains("valuation") ? count(j["valuation"], where) : 0;
      std::vector<Rational> c = parse_coeffs(required(j, "coeffs", where), where);
      std::size_t prec = j.contains("precision") ? count(j["precision"], where) : kExact;
      if (prec != kExact && v + c.size() > prec) bad(where + ": coefficients beyond the stated precision");
      c.insert(c.begin(), v, Rational(0));
      return RingValue(ring, Series(std::move(c), prec));
    }
    case RingKind::Overring: {
      if (scalar) return from_rational(ring, parse_rational(text(j, where)));
      check_keys(j, {"num", "den"}, where);
      const Json& den = required(j, "den", where);
      if (!den.is_array() || den.size() != ring->generators.size())
        bad(where + ": den must list one exponent per generator");
      std::vector<unsigned> e;
      for (const auto& x : den) e.push_back(static_cast<unsigned>(count(x, where)));
      return overring_value(ring, parse_value(required(j, "num", where), ring->base), e);
    }
    case RingKind::Product:
      check_keys(j, {"left", "right"}, where);
      return RingValue::pair(ring, parse_value(required(j, "left", where), ring->left),
                             parse_value(required(j, "right", where), ring->right));
    case RingKind::Amalgamation:
    case RingKind::Duplication:
      if (j.is_object() && (j.contains("left") || j.contains("right"))) {
        check_keys(j, {"left", "right"}, where);
        return amalgam_from_pair(ring, parse_value(required(j, "left", where), ring->left),
                                 parse_value(required(j, "right", where), ring->right));
      }
      check_keys(j, {"a", "j"}, where);
      return amalgam_make(ring, parse_value(required(j, "a", where), ring->left),
                          parse_value(required(j, "j", where), ring->right));
  }
  bad(where + ": unsupported ring kind");
}

Matrix parse_matrix(const Json& j, const RingPtr& ring) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) bad("matrix rows must be nonempty arrays");
  std::vector<RingValue> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) bad("matrix rows must all have the same length");
    for (const auto& e : row) entries.push_back(parse_value(e, ring));
  }
  return Matrix(ring, rows, cols, std::move(entries));
}

std::vector<RingValue> parse_elements(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) bad("elements must be an array");
  std::vector<RingValue> out;
  for (const auto& e : j) out.push_back(parse_value(e, ring));
  return out;
}

Document parse_document(const Json& j, std::size_t default_precision) {
  check_keys(j, {"ring", "matrix", "elements"}, "document");
  Document d;
  d.ring = parse_ring(required(j, "ring", "document"), default_precision);
  if (j.contains("matrix")) d.matrix = parse_matrix(j["matrix"], d.ring);
  if (j.contains("elements")) d.elements = parse_elements(j["elements"], d.ring);
  return d;
}

Json ring_to_json(const RingDescriptor& ring) {
  Json j;
  j["kind"] = std::string(to_string(ring.kind));
  switch (ring.kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PolynomialOverRationals: break;
    case RingKind::TruncatedSeries: j["defaultPrecision"] = std::to_string(ring.precision); break;
    case RingKind::DPlusM:
      j["baseDomain"] = ring_to_json(*ring.base);
      j["seriesPrecision"] = std::to_string(ring.precision);
      break;
    case RingKind::Overring: {
      j["base"] = ring_to_json(*ring.base);
      Json gens = Json::array();
      for (const auto& g : ring.generators) gens.push_back(value_to_json(g));
      j["denominatorGenerators"] = gens;
      break;
    }
    case RingKind::Product:
      j["left"] = ring_to_json(*ring.left);
      j["right"] = ring_to_json(*ring.right);
      break;
    case RingKind::Amalgamation:
    case RingKind::Duplication:
      j["a"] = ring_to_json(*ring.left);
      if (ring.kind == RingKind::Amalgamation) {
        j["b"] = ring_to_json(*ring.right);
        j["hom"] = Json{{"kind", std::string(to_string(ring.hom.kind))},
                        {"declaredInjective", ring.hom.declared_injective}};
        j["ideal"] = ideal_json(*ring.ideal);
      } else {
        j["ambient"] = ring_to_json(*ring.right);
        j["submodule"] = ideal_json(*ring.ideal);
      }
      if (ring.declared_meet_trivial) j["declaredMeetTrivial"] = *ring.declared_meet_trivial;
      if (ring.image_flags.declared) j["imageFlags"] = flags_json(ring.image_flags.declared);
      if (ring.image_flags.denied) j["imageDeniedFlags"] = flags_json(ring.image_flags.denied);
      break;
  }
  if (ring.flags.declared) j["declaredFlags"] = flags_json(ring.flags.declared);
  if (ring.flags.denied) j["deniedFlags"] = flags_json(ring.flags.denied);
  return j;
}

Json value_to_json(const RingValue& v) {
  switch (v.descriptor().kind) {
    case RingKind::Integers: return to_string(v.integer());
    case RingKind::Rationals: return to_string(v.rational());
    case RingKind::PolynomialOverRationals: {
      Json c = Json::array();
      for (const auto& x : v.polynomial().coeffs()) c.push_back(to_string(x));
      return Json{{"coeffs", c}};
    }
    case RingKind::TruncatedSeries:
    case RingKind::DPlusM: {
      const Series& s = v.series();
      std::size_t start = s.valuation().value_or(0);
      Json c = Json::array();
      for (std::size_t k = start; k < s.coeffs().size(); ++k) c.push_back(to_string(s.coeffs()[k]));
      Json j{{"valuation", std::to_string(start)}, {"coeffs", c}};
      if (!s.is_exact()) j["precision"] = std::to_string(s.precision());
      return j;
    }
    case RingKind::Overring: {
      Json den = Json::array();
      for (unsigned e : v.exponents()) den.push_back(std::to_string(e));
      return Json{{"num", value_to_json(v.numerator())}, {"den", den}};
    }
    case RingKind::Product: return Json{{"left", value_to_json(v.left())}, {"right", value_to_json(v.right())}};
    case RingKind::Amalgamation:
    case RingKind::Duplication:
      return Json{{"a", value_to_json(v.left())}, {"j", value_to_json(amalgam_ideal_part(v))}};
  }
  return nullptr;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(value_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace amalgam
