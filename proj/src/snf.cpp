#include <algorithm>

#include "amalgam/amalgamation.hpp"
#include "amalgam/matrix.hpp"
#include "detail.hpp"

namespace amalgam {

namespace {

constexpr int kIterationCap = 256;

void check_size(const Matrix& m) {
  if (m.rows() > kMaxDimension || m.cols() > kMaxDimension)
    fail(ErrorKind::SizeCap, "dimension above " + std::to_string(kMaxDimension));
}

SnfResult finish(const Matrix& m, Matrix P, Matrix Q, Matrix D, std::string route) {
  VerificationReport report = verify_snf(m, P, Q, D);
  return {std::move(P), std::move(Q), std::move(D), std::move(report), std::move(route)};
}

void normalize_diagonal(Matrix& D, Matrix& P) {
  for (std::size_t t = 0; t < std::min(D.rows(), D.cols()); ++t) {
    if (is_zero(D(t, t))) continue;
    auto u = unit_normalize(D(t, t)).first;
    if (is_one(u)) continue;
    auto inv = unit_inverse(u);
    if (!inv) continue;
    D.scale_row(t, *inv);
    P.scale_row(t, *inv);
  }
}

bool chain_divides(const RingValue& a, const RingValue& b) {
  if (is_zero(a)) return is_zero(b);
  return divides(a, b);
}

SnfResult snf_euclidean(const Matrix& m) {
  const RingPtr& ring = m.ring();
  Matrix D = m;
  Matrix P = Matrix::identity(ring, m.rows());
  Matrix Q = Matrix::identity(ring, m.cols());
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < r; ++t) {
    bool exhausted = false;
    for (int guard = 0;; ++guard) {
      if (guard > kIterationCap) fail(ErrorKind::CapabilityMissing, "Euclidean pivoting did not terminate");
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Integer best_measure;
      for (std::size_t i = t; i < D.rows(); ++i) {
        for (std::size_t j = t; j < D.cols(); ++j) {
          if (is_zero(D(i, j))) continue;
          Integer measure = pivot_measure(D(i, j));
          if (!best || measure < best_measure) {
            best = {i, j};
            best_measure = measure;
          }
        }
      }
      if (!best) {
        exhausted = true;
        break;
      }
      D.swap_rows(t, best->first);
      P.swap_rows(t, best->first);
      D.swap_cols(t, best->second);
      Q.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (is_zero(D(i, t))) continue;
        RingValue q = euclid_divmod(D(i, t), D(t, t)).first;
        D.add_row_multiple(i, t, -q);
        P.add_row_multiple(i, t, -q);
        clean = clean && is_zero(D(i, t));
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (is_zero(D(t, j))) continue;
        RingValue q = euclid_divmod(D(t, j), D(t, t)).first;
        D.add_col_multiple(j, t, -q);
        Q.add_col_multiple(j, t, -q);
        clean = clean && is_zero(D(t, j));
      }
      if (!clean) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < D.rows() && !fixed; ++i) {
        for (std::size_t j = t + 1; j < D.cols() && !fixed; ++j) {
          if (!divides(D(t, t), D(i, j))) {
            D.add_row_multiple(t, i, one(ring));
            P.add_row_multiple(t, i, one(ring));
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (exhausted) break;
  }
  normalize_diagonal(D, P);
  return finish(m, std::move(P), std::move(Q), std::move(D), "euclidean");
}

SnfResult snf_product(const Matrix& m) {
  const RingPtr& ring = m.ring();
  SnfResult l = snf(left_component(m));
  SnfResult r = snf(right_component(m));
  return finish(m, pair_matrix(ring, l.P, r.P), pair_matrix(ring, l.Q, r.Q), pair_matrix(ring, l.D, r.D),
                "product(" + l.route + ", " + r.route + ")");
}

SnfResult snf_amalgamation(const Matrix& m) {
  const RingPtr& ring = m.ring();
  auto t = detail::amalgam_transport(ring);
  if (!t) fail(ErrorKind::CapabilityMissing, "no diagonalization route for " + ring->key);
  SnfResult inner = snf(map_entries(m, t->model, t->to_model));
  return finish(m, map_entries(inner.P, ring, t->from_model), map_entries(inner.Q, ring, t->from_model),
                map_entries(inner.D, ring, t->from_model), "transport[" + t->route + "](" + inner.route + ")");
}

}  // namespace

SnfResult snf(const Matrix& m) {
  check_size(m);
  switch (m.ring()->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PolynomialOverRationals:
    case RingKind::TruncatedSeries: return snf_euclidean(m);
    case RingKind::Product: return snf_product(m);
    case RingKind::Amalgamation:
    case RingKind::Duplication: return snf_amalgamation(m);
    case RingKind::Overring: return snf_overring(m);
    case RingKind::DPlusM: break;
  }
  fail(ErrorKind::CapabilityMissing, "no diagonalization route for " + m.ring()->key);
}

SnfResult snf_generic(const Matrix& m) {
  check_size(m);
  const RingPtr& ring = m.ring();
  Capabilities caps = capabilities(*ring);
  if (!caps.gcd || !caps.kaplansky) fail(ErrorKind::CapabilityMissing, "generic route needs gcd and Kaplansky steps");
  Matrix D = m;
  Matrix P = Matrix::identity(ring, m.rows());
  Matrix Q = Matrix::identity(ring, m.cols());
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < r; ++t) {
    bool exhausted = false;
    for (int guard = 0;; ++guard) {
      if (guard > kIterationCap) fail(ErrorKind::CapabilityMissing, "gcd diagonalization did not converge");
      std::optional<std::pair<std::size_t, std::size_t>> pos;
      for (std::size_t i = t; i < D.rows() && !pos; ++i) {
        for (std::size_t j = t; j < D.cols() && !pos; ++j) {
          if (!is_zero(D(i, j))) pos = {i, j};
        }
      }
      if (!pos) {
        exhausted = true;
        break;
      }
      D.swap_rows(t, pos->first);
      P.swap_rows(t, pos->first);
      D.swap_cols(t, pos->second);
      Q.swap_cols(t, pos->second);
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (is_zero(D(t, j))) continue;
        if (auto k = divide_exact(D(t, j), D(t, t))) {
          D.add_col_multiple(j, t, -*k);
          Q.add_col_multiple(j, t, -*k);
          continue;
        }
        GcdCertificate c = gcd_certified(D(t, t), D(t, j));
        D.combine_cols(t, j, c.alpha, c.beta, -c.b1, c.a1);
        Q.combine_cols(t, j, c.alpha, c.beta, -c.b1, c.a1);
      }
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (is_zero(D(i, t))) continue;
        if (auto k = divide_exact(D(i, t), D(t, t))) {
          D.add_row_multiple(i, t, -*k);
          P.add_row_multiple(i, t, -*k);
          continue;
        }
        GcdCertificate c = gcd_certified(D(t, t), D(i, t));
        D.combine_rows(t, i, c.alpha, c.beta, -c.b1, c.a1);
        P.combine_rows(t, i, c.alpha, c.beta, -c.b1, c.a1);
      }
      bool row_clean = true;
      for (std::size_t j = t + 1; j < D.cols(); ++j) row_clean = row_clean && is_zero(D(t, j));
      if (row_clean) break;
    }
    if (exhausted) break;
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (chain_divides(D(i, i), D(j, j))) continue;
      GcdCertificate c = gcd_certified(D(i, i), D(j, j));
      D.combine_rows(i, j, c.alpha, c.beta, -c.b1, c.a1);
      P.combine_rows(i, j, c.alpha, c.beta, -c.b1, c.a1);
      D.combine_cols(i, j, one(ring), one(ring), -(c.beta * c.b1), c.alpha * c.a1);
      Q.combine_cols(i, j, one(ring), one(ring), -(c.beta * c.b1), c.alpha * c.a1);
    }
  }
  normalize_diagonal(D, P);
  return finish(m, std::move(P), std::move(Q), std::move(D), "generic");
}

SnfResult snf_overring(const Matrix& m) {
  check_size(m);
  const RingPtr& ring = m.ring();
  if (ring->kind != RingKind::Overring) fail(ErrorKind::InvalidDescriptor, "snf_overring needs an overring");
  std::vector<unsigned> common(ring->generators.size(), 0);
  for (const auto& e : m.entries()) {
    for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::max(common[i], e.exponents()[i]);
  }
  Matrix cleared = map_entries(m, ring->base, [&](const RingValue& e) {
    std::vector<unsigned> missing(common.size());
    for (std::size_t i = 0; i < common.size(); ++i) missing[i] = common[i] - e.exponents()[i];
    return e.numerator() * detail::overring_denominator(*ring, missing);
  });
  SnfResult base = snf(cleared);
  const std::vector<unsigned> none(common.size(), 0);
  auto lift = [&](const RingValue& x) { return detail::overring_make(ring, x, none); };
  auto scaled = [&](const RingValue& x) { return detail::overring_make(ring, x, common); };
  return finish(m, map_entries(base.P, ring, lift), map_entries(base.Q, ring, lift), map_entries(base.D, ring, scaled),
                "overring(" + base.route + ")");
}

VerificationReport verify_snf(const Matrix& m, const Matrix& P, const Matrix& Q, const Matrix& D) {
  VerificationReport report;
  if (P.rows() != m.rows() || P.cols() != m.rows() || Q.rows() != m.cols() || Q.cols() != m.cols() ||
      D.rows() != m.rows() || D.cols() != m.cols()) {
    report.add("shapes", false, "P, Q, D do not match M");
    return report;
  }
  const std::size_t hint = detail::precision_hint(*m.ring());
  try {
    report.add("P*M*Q = D", compare(P * m * Q, D), hint);
    report.add("det P is a unit", is_unit(mat_det(P)));
    report.add("det Q is a unit", is_unit(mat_det(Q)));
    report.add("D diagonal", is_diagonal(D));
    std::vector<RingValue> diag = D.diagonal_entries();
    bool chain = true;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) chain = chain && chain_divides(diag[i], diag[i + 1]);
    if (m.ring()->kind == RingKind::Integers) {
      bool nonnegative = std::all_of(diag.begin(), diag.end(), [](const RingValue& d) { return d.integer() >= 0; });
      report.add("divisibility chain", chain && nonnegative, nonnegative ? "" : "negative diagonal entry");
    } else {
      report.add("divisibility chain", true, chain ? "holds" : "does not hold; not required over this ring");
    }
  } catch (const AlgebraError& e) {
    report.add("well-formed", false, e.what());
  }
  return report;
}

}  // namespace amalgam
