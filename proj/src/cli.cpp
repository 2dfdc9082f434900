#include "amalgam/cli.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "amalgam/amalgamation.hpp"
#include "amalgam/classify.hpp"
#include "amalgam/matrix.hpp"
#include "amalgam/property_suite.hpp"
#include "amalgam/witness.hpp"
#include "detail.hpp"

namespace amalgam {

namespace {

constexpr std::size_t kLeibnizCrossCheckLimit = 6;

struct Options {
  std::string command;
  std::string ring_file;
  std::string matrix_file;
  std::string elements_file;
  long bound = 12;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::optional<std::size_t> precision;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::CapabilityMissing, "SHA-256 unavailable");
  std::ostringstream ss;
  for (unsigned i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return ss.str();
}

std::size_t resolve_default_precision(const Options& o) {
  if (o.precision) return *o.precision;
  if (const char* env = std::getenv("AMALGAM_PRECISION")) {
    try {
      Integer n = parse_integer(env);
      if (n > 0 && n.fits_ulong_p()) return n.get_ui();
    } catch (const AlgebraError&) {
    }
    fail(ErrorKind::ParseError, std::string("AMALGAM_PRECISION is not a positive integer: ") + env);
  }
  return rings::kDefaultPrecision;
}

Json checks_json(const VerificationReport& r, const std::string& prefix = {}) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"check", prefix + c.name}, {"passed", c.passed}};
    if (!c.note.empty()) j["note"] = c.note;
    out.push_back(j);
  }
  return out;
}

void append(Json& list, const Json& more) {
  for (const auto& x : more) list.push_back(x);
}

Json certificate_json(const GcdCertificate& c) {
  return Json{{"d", value_to_json(c.d)},
              {"a1", value_to_json(c.a1)},
              {"b1", value_to_json(c.b1)},
              {"alpha", value_to_json(c.alpha)},
              {"beta", value_to_json(c.beta)}};
}

Json classification_json(const Classification& c) {
  return Json{{"bezout", std::string(to_string(c.bezout))},
              {"hermite", std::string(to_string(c.hermite))},
              {"edr", std::string(to_string(c.edr))},
              {"paperCase", c.paperCase},
              {"clauses", c.clauses},
              {"assumptionsUsed", c.assumptionsUsed}};
}

Json suite_json(const SuiteResult& s) {
  Json j{{"name", s.name}, {"applicable", s.applicable}, {"passed", s.passed}, {"failed", s.failed},
         {"skipped", s.skipped}};
  if (!s.failures.empty()) j["failures"] = s.failures;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

/// Loaded inputs shared by every subcommand.
struct Inputs {
  std::string digest_source;
  Document doc;
};

Json unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.contains(key)) {
    if (j.size() != 1) fail(ErrorKind::ParseError, std::string(key) + " file: unknown fields next to \"" + key + "\"");
    return j[key];
  }
  return j;
}

Inputs load_inputs(const Options& o, std::size_t precision) {
  Inputs in;
  if (o.ring_file.empty()) {
    if (o.command != "check") fail(ErrorKind::ParseError, o.command + " requires --ring");
    return in;
  }
  const std::string ring_text = read_file(o.ring_file);
  in.digest_source += "ring\n" + ring_text + "\n";
  Json rj = parse_json_text(ring_text);
  if (rj.is_object() && rj.contains("kind")) rj = Json{{"ring", rj}};
  in.doc = parse_document(rj, precision);
  if (!o.matrix_file.empty()) {
    const std::string text = read_file(o.matrix_file);
    in.digest_source += "matrix\n" + text + "\n";
    in.doc.matrix = parse_matrix(unwrap(parse_json_text(text), "matrix"), in.doc.ring);
  }
  if (!o.elements_file.empty()) {
    const std::string text = read_file(o.elements_file);
    in.digest_source += "elements\n" + text + "\n";
    in.doc.elements = parse_elements(unwrap(parse_json_text(text), "elements"), in.doc.ring);
  }
  return in;
}

const Matrix& need_matrix(const Document& d, const std::string& cmd) {
  if (!d.matrix) fail(ErrorKind::ParseError, cmd + " requires a matrix (--matrix or \"matrix\" in the ring document)");
  return *d.matrix;
}

void need_elements(const Document& d, const std::string& cmd, std::size_t at_least) {
  if (d.elements.size() < at_least)
    fail(ErrorKind::ParseError, cmd + " requires at least " + std::to_string(at_least) + " element(s)");
}

void cmd_gcd(const Document& d, Json& out, Json& checks) {
  need_elements(d, "gcd", 2);
  Json steps = Json::array();
  RingValue acc = d.elements.front();
  for (std::size_t i = 1; i < d.elements.size(); ++i) {
    GcdCertificate c = gcd_certified(acc, d.elements[i]);
    append(checks, checks_json(verify_gcd_certificate(acc, d.elements[i], c),
                               d.elements.size() > 2 ? "step " + std::to_string(i) + ": " : ""));
    steps.push_back(Json{{"a", value_to_json(acc)}, {"b", value_to_json(d.elements[i])},
                         {"certificate", certificate_json(c)}});
    acc = c.d;
  }
  out["gcd"] = value_to_json(acc);
  if (steps.size() == 1) {
    out["certificate"] = steps[0]["certificate"];
  } else {
    out["steps"] = steps;
  }
}

void cmd_snf(const Document& d, Json& out, Json& checks) {
  const Matrix& m = need_matrix(d, "snf");
  SnfResult r = snf(m);
  out["route"] = r.route;
  out["P"] = matrix_to_json(r.P);
  out["Q"] = matrix_to_json(r.Q);
  out["D"] = matrix_to_json(r.D);
  Json diag = Json::array();
  for (const auto& x : r.D.diagonal_entries()) diag.push_back(value_to_json(x));
  out["diagonal"] = diag;
  append(checks, checks_json(verify_snf(m, r.P, r.Q, r.D)));
}

void cmd_hermite(const Document& d, Json& out, Json& checks) {
  const Matrix& m = need_matrix(d, "hermite");
  HermiteResult r = hermite_reduce(m);
  out["T"] = matrix_to_json(r.T);
  out["Q"] = matrix_to_json(r.Q);
  append(checks, checks_json(verify_hermite(m, r)));
}

void cmd_det(const Document& d, Json& out, Json& checks) {
  const Matrix& m = need_matrix(d, "det");
  RingValue det = mat_det(m);
  out["det"] = value_to_json(det);
  if (m.rows() <= kLeibnizCrossCheckLimit) {
    VerificationReport r;
    r.add("Leibniz expansion agrees", compare(det, det_leibniz(m)));
    append(checks, checks_json(r));
  }
}

void cmd_invert(const Document& d, Json& out, Json& checks) {
  need_elements(d, "invert", 1);
  Json inverses = Json::array();
  VerificationReport r;
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    const RingValue& x = d.elements[i];
    const std::string tag = "element " + std::to_string(i + 1) + ": ";
    std::optional<RingValue> inv = d.ring->is_amalgamation() ? amalgam_invert(x) : unit_inverse(x);
    r.add(tag + "is a unit", inv.has_value());
    if (!inv) {
      inverses.push_back(nullptr);
      continue;
    }
    inverses.push_back(value_to_json(*inv));
    r.add(tag + "inverse * x = 1", compare(*inv * x, one(d.ring)), detail::precision_hint(*d.ring));
    if (d.ring->is_amalgamation()) r.add(tag + "inverse satisfies the membership invariant", amalgam_invariant_holds(*inv));
  }
  out["inverses"] = inverses;
  append(checks, checks_json(r));
}

void cmd_classify(const Document& d, Json& out, Json& checks) {
  Classification c = classify_amalgamation(*d.ring);
  out["classification"] = classification_json(c);
  VerificationReport r;
  r.add("EDR => Hermite => Bezout", chain_holds(c));
  append(checks, checks_json(r));
}

void cmd_witness(const Document& d, long bound, Json& out, Json& checks) {
  need_elements(d, "witness", 1);
  GeneratorSearch g = principal_generator_search(d.elements, bound);
  out["generator"] = g.generator ? value_to_json(*g.generator) : Json();
  Json combo = Json::array();
  for (const auto& c : g.combination) combo.push_back(value_to_json(c));
  out["combination"] = combo;
  out["exhaustive"] = g.exhaustive;
  out["bound"] = std::to_string(g.bound);
  out["candidates"] = g.candidates;
  if (g.generator) {
    VerificationReport r;
    RingValue sum = zero(d.ring);
    for (std::size_t k = 0; k < g.combination.size(); ++k) sum = sum + g.combination[k] * d.elements[k];
    r.add("generator = sum r_k * gens_k", compare(sum, *g.generator));
    for (std::size_t k = 0; k < d.elements.size(); ++k)
      r.add("generator divides gens_" + std::to_string(k + 1), divides(*g.generator, d.elements[k]));
    append(checks, checks_json(r));
  }
}

void cmd_check(const Document& d, const Options& o, std::size_t precision, Json& out, Json& checks) {
  PropertyOptions po{o.samples, o.seed, o.bound};
  auto run = [&](const RingPtr& ring, const std::string& prefix) {
    PropertyReport pr = run_property_suite(ring, po);
    Json suites = Json::array();
    for (const auto& s : pr.suites) {
      suites.push_back(suite_json(s));
      if (!s.applicable) continue;
      Json c{{"check", prefix + s.name}, {"passed", s.ok()}};
      std::string note = std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
                         std::to_string(s.skipped) + " skipped";
      c["note"] = note;
      checks.push_back(c);
    }
    return suites;
  };
  if (d.ring) {
    out["suites"] = run(d.ring, "");
    return;
  }
  Json cases = Json::array();
  for (const auto& b : classifier_battery(precision)) {
    Classification c = classify_amalgamation(*b.ring);
    const std::string prefix = b.name + ": ";
    VerificationReport r;
    r.add(prefix + "verdicts", c.bezout == b.bezout && c.hermite == b.hermite && c.edr == b.edr);
    r.add(prefix + "labeled with " + b.clause, c.paperCase.find(b.clause) != std::string::npos);
    r.add(prefix + "EDR => Hermite => Bezout", chain_holds(c));
    append(checks, checks_json(r));
    cases.push_back(Json{{"name", b.name},
                         {"ring", ring_to_json(*b.ring)},
                         {"classification", classification_json(c)},
                         {"suites", run(b.ring, prefix)}});
  }
  out["battery"] = cases;
}

void configure(CLI::App& app, Options& o) {
  app.add_option("command", o.command, "Subcommand")
      ->required()
      ->check(CLI::IsMember({"gcd", "snf", "hermite", "det", "invert", "classify", "witness", "check"}));
  app.add_option("--ring", o.ring_file, "Descriptor document (JSON)");
  app.add_option("--matrix", o.matrix_file, "Matrix document (JSON)");
  app.add_option("--elements", o.elements_file, "Elements document (JSON)");
  app.add_option("--bound", o.bound, "Generator search bound")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", o.samples, "Random samples per property")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--precision", o.precision, "Default series precision (32 unless AMALGAM_PRECISION is set)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Report destination (stdout by default)");
}

}  // namespace

int exit_status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NotInIdeal:
    case ErrorKind::MixedRings:
    case ErrorKind::InvalidDescriptor:
    case ErrorKind::NotSquare:
    case ErrorKind::ZeroInput: return kExitInputError;
    case ErrorKind::CapabilityMissing:
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::NotEnumerable:
    case ErrorKind::SizeCap:
    case ErrorKind::FlagsViolated:
    case ErrorKind::PreimageUndefined: return kExitUnsupported;
    case ErrorKind::ZeroDivisor:
    case ErrorKind::NotAUnit: return kExitVerificationFailed;
  }
  return kExitUnsupported;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  Options o;
  Json report;
  report["command"] = args;

  auto finish = [&](int status) {
    report["exitStatus"] = status;
    result.report = std::move(report);
    result.exit_status = status;
    return result;
  };
  auto error = [&](ErrorKind kind, const std::string& message) {
    report["error"] = Json{{"kind", std::string(to_string(kind))}, {"message", message}};
    return finish(exit_status_for(kind));
  };

  CLI::App app("Exact computations in ring amalgamations", "amalgam");
  configure(app, o);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.help = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    return error(ErrorKind::ParseError, e.what());
  }
  if (!o.out.empty()) result.out = o.out;

  try {
    const std::size_t precision = resolve_default_precision(o);
    Inputs in = load_inputs(o, precision);
    report["inputsDigest"] = "sha256:" + sha256_hex(in.digest_source);
    report["seed"] = std::to_string(o.seed);
    report["bound"] = std::to_string(o.bound);
    report["samples"] = std::to_string(o.samples);
    report["defaultPrecision"] = std::to_string(precision);
    if (in.doc.ring) report["ring"] = in.doc.ring->key;

    Json out = Json::object();
    Json checks = Json::array();
    const Document& d = in.doc;
    if (o.command == "gcd") cmd_gcd(d, out, checks);
    else if (o.command == "snf") cmd_snf(d, out, checks);
    else if (o.command == "hermite") cmd_hermite(d, out, checks);
    else if (o.command == "det") cmd_det(d, out, checks);
    else if (o.command == "invert") cmd_invert(d, out, checks);
    else if (o.command == "classify") cmd_classify(d, out, checks);
    else if (o.command == "witness") cmd_witness(d, o.bound, out, checks);
    else cmd_check(d, o, precision, out, checks);

    report["outputs"] = out;
    report["verification"] = checks;
    bool ok = true;
    for (const auto& c : checks) ok = ok && c["passed"].get<bool>();
    return finish(ok ? kExitOk : kExitVerificationFailed);
  } catch (const AlgebraError& e) {
    return error(e.kind(), e.what());
  }
}

}  // namespace amalgam
