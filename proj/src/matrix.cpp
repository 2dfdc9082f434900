#include "amalgam/matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "detail.hpp"

namespace amalgam {

namespace {

void check_square(const Matrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix is not square");
  if (m.rows() > kMaxDimension) fail(ErrorKind::SizeCap, "dimension above " + std::to_string(kMaxDimension));
}

RingValue cleaned(RingValue v) {
  if (is_zero(v)) return zero(v.ring());
  return v;
}

}  // namespace

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, zero(ring)) {}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<RingValue> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) fail(ErrorKind::InvalidDescriptor, "matrix entry count does not match shape");
  for (const auto& e : entries_) {
    if (e.ring() != ring_ && !same_ring(e.descriptor(), *ring_))
      fail(ErrorKind::MixedRings, "matrix entry from " + e.descriptor().key + " in a matrix over " + ring_->key);
  }
}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one(ring));
  return m;
}

Matrix Matrix::diagonal(RingPtr ring, std::size_t rows, std::size_t cols, const std::vector<RingValue>& diag) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m.set(i, i, diag[i]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, RingValue v) { entries_[r * cols_ + c] = std::move(v); }

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(entries_[r * cols_ + a], entries_[r * cols_ + b]);
}

void Matrix::add_row_multiple(std::size_t a, std::size_t b, const RingValue& k) {
  for (std::size_t c = 0; c < cols_; ++c) set(a, c, cleaned((*this)(a, c) + k * (*this)(b, c)));
}

void Matrix::add_col_multiple(std::size_t a, std::size_t b, const RingValue& k) {
  for (std::size_t r = 0; r < rows_; ++r) set(r, a, cleaned((*this)(r, a) + k * (*this)(r, b)));
}

void Matrix::scale_row(std::size_t r, const RingValue& k) {
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, cleaned(k * (*this)(r, c)));
}

void Matrix::scale_col(std::size_t c, const RingValue& k) {
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, cleaned(k * (*this)(r, c)));
}

void Matrix::combine_rows(std::size_t a, std::size_t b, const RingValue& x, const RingValue& y, const RingValue& z,
                          const RingValue& w) {
  for (std::size_t c = 0; c < cols_; ++c) {
    RingValue ra = (*this)(a, c), rb = (*this)(b, c);
    set(a, c, cleaned(x * ra + y * rb));
    set(b, c, cleaned(z * ra + w * rb));
  }
}

void Matrix::combine_cols(std::size_t a, std::size_t b, const RingValue& x, const RingValue& y, const RingValue& z,
                          const RingValue& w) {
  for (std::size_t r = 0; r < rows_; ++r) {
    RingValue ca = (*this)(r, a), cb = (*this)(r, b);
    set(r, a, cleaned(x * ca + y * cb));
    set(r, b, cleaned(z * ca + w * cb));
  }
}

std::vector<RingValue> Matrix::diagonal_entries() const {
  std::vector<RingValue> d;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
  return d;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) s += (c ? ", " : "") + amalgam::to_string((*this)(r, c));
    s += "]";
  }
  return s + "]";
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::InvalidDescriptor, "matrix shapes do not chain");
  if (a.ring() != b.ring() && !same_ring(*a.ring(), *b.ring()))
    fail(ErrorKind::MixedRings, "matrices over " + a.ring()->key + " and " + b.ring()->key);
  Matrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      RingValue s = zero(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
      out.set(i, j, std::move(s));
    }
  }
  return out;
}

Equality compare(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return Equality::Different;
  Equality e = Equality::Exact;
  for (std::size_t i = 0; i < a.entries().size(); ++i) e = meet(e, compare(a.entries()[i], b.entries()[i]));
  return e;
}

Matrix map_entries(const Matrix& m, const RingPtr& target, const std::function<RingValue(const RingValue&)>& f) {
  std::vector<RingValue> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(f(e));
  return Matrix(target, m.rows(), m.cols(), std::move(out));
}

Matrix left_component(const Matrix& m) {
  if (!m.ring()->is_pair_ring()) fail(ErrorKind::InvalidDescriptor, "not a matrix over a pair ring");
  return map_entries(m, m.ring()->left, [](const RingValue& v) { return v.left(); });
}

Matrix right_component(const Matrix& m) {
  if (!m.ring()->is_pair_ring()) fail(ErrorKind::InvalidDescriptor, "not a matrix over a pair ring");
  return map_entries(m, m.ring()->right, [](const RingValue& v) { return v.right(); });
}

Matrix pair_matrix(const RingPtr& ring, const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows() || left.cols() != right.cols())
    fail(ErrorKind::InvalidDescriptor, "component matrices differ in shape");
  std::vector<RingValue> out;
  for (std::size_t i = 0; i < left.entries().size(); ++i)
    out.push_back(RingValue::pair(ring, left.entries()[i], right.entries()[i]));
  return Matrix(ring, left.rows(), left.cols(), std::move(out));
}

RingValue mat_det(const Matrix& m) {
  check_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return one(m.ring());
  // minors[mask] = determinant of the rows n-|mask|.. against the columns in mask
  std::vector<std::optional<RingValue>> minors(std::size_t{1} << n);
  minors[0] = one(m.ring());
  for (unsigned mask = 1; mask < minors.size(); ++mask) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    RingValue sum = zero(m.ring());
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      RingValue term = m(row, c) * *minors[mask & ~(1u << c)];
      sum = position % 2 == 0 ? sum + term : sum - term;
      ++position;
    }
    minors[mask] = std::move(sum);
  }
  return *minors.back();
}

RingValue det_leibniz(const Matrix& m) {
  check_square(m);
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RingValue sum = zero(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    RingValue term = one(m.ring());
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    sum = inversions % 2 == 0 ? sum + term : sum - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

bool is_lower_triangular(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

bool is_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !is_zero(m(i, j))) return false;
    }
  }
  return true;
}

HermiteResult hermite_reduce(const Matrix& m) {
  if (m.rows() > kMaxDimension || m.cols() > kMaxDimension)
    fail(ErrorKind::SizeCap, "dimension above " + std::to_string(kMaxDimension));
  if (!capabilities(*m.ring()).gcd) fail(ErrorKind::CapabilityMissing, "no gcd in " + m.ring()->key);
  Matrix T = m;
  Matrix Q = Matrix::identity(m.ring(), m.cols());
  std::size_t k = 0;
  for (std::size_t i = 0; i < T.rows() && k < T.cols(); ++i) {
    for (std::size_t j = k + 1; j < T.cols(); ++j) {
      if (is_zero(T(i, j))) continue;
      GcdCertificate c = gcd_certified(T(i, k), T(i, j));
      T.combine_cols(k, j, c.alpha, c.beta, -c.b1, c.a1);
      Q.combine_cols(k, j, c.alpha, c.beta, -c.b1, c.a1);
    }
    if (is_zero(T(i, k))) continue;
    auto [u, n] = unit_normalize(T(i, k));
    auto inv = unit_inverse(u);
    if (inv && !is_one(u)) {
      T.scale_col(k, *inv);
      Q.scale_col(k, *inv);
    }
    ++k;
  }
  return {T, Q};
}

VerificationReport verify_hermite(const Matrix& m, const HermiteResult& r) {
  VerificationReport report;
  try {
    report.add("M*Q = T", compare(m * r.Q, r.T), detail::precision_hint(*m.ring()));
    report.add("det Q is a unit", is_unit(mat_det(r.Q)));
    report.add("T lower triangular", is_lower_triangular(r.T));
  } catch (const AlgebraError& e) {
    report.add("well-formed", false, e.what());
  }
  return report;
}

}  // namespace amalgam
