#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

/// Largest dimension accepted by determinant and normal-form routines.
inline constexpr std::size_t kMaxDimension = 8;

/// Dense row-major matrix whose entries all belong to one described ring.
class Matrix {
 public:
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<RingValue> entries);
  static Matrix identity(RingPtr ring, std::size_t n);
  static Matrix diagonal(RingPtr ring, std::size_t rows, std::size_t cols, const std::vector<RingValue>& diag);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<RingValue>& entries() const { return entries_; }

  const RingValue& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, RingValue v);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += k · row b
  void add_row_multiple(std::size_t a, std::size_t b, const RingValue& k);
  void add_col_multiple(std::size_t a, std::size_t b, const RingValue& k);
  void scale_row(std::size_t r, const RingValue& k);
  void scale_col(std::size_t c, const RingValue& k);
  /// (row a, row b) <- (x·a + y·b, z·a + w·b)
  void combine_rows(std::size_t a, std::size_t b, const RingValue& x, const RingValue& y, const RingValue& z,
                    const RingValue& w);
  /// (col a, col b) <- (x·a + y·b, z·a + w·b)
  void combine_cols(std::size_t a, std::size_t b, const RingValue& x, const RingValue& y, const RingValue& z,
                    const RingValue& w);

  std::vector<RingValue> diagonal_entries() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingValue> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Equality compare(const Matrix& a, const Matrix& b);
/// Entrywise image in another ring.
Matrix map_entries(const Matrix& m, const RingPtr& target, const std::function<RingValue(const RingValue&)>& f);
/// Component matrices M_a, M_b of a matrix over a product or amalgamation.
Matrix left_component(const Matrix& m);
Matrix right_component(const Matrix& m);
/// M_a × M_b as a matrix over `ring` (a product or amalgamation).
Matrix pair_matrix(const RingPtr& ring, const Matrix& left, const Matrix& right);

/// Division-free determinant by memoized cofactor expansion. NotSquare,
/// SizeCap beyond kMaxDimension.
RingValue mat_det(const Matrix& m);
/// Sum over permutations; independent check of mat_det.
RingValue det_leibniz(const Matrix& m);

bool is_lower_triangular(const Matrix& m);
bool is_diagonal(const Matrix& m);

struct HermiteResult {
  Matrix T;
  Matrix Q;
};

/// M·Q = T lower triangular by 2-column gcd steps [[alpha, -b1], [beta, a1]];
/// nonzero pivots are unit-normalized.
HermiteResult hermite_reduce(const Matrix& m);
VerificationReport verify_hermite(const Matrix& m, const HermiteResult& r);

struct SnfResult {
  Matrix P;
  Matrix Q;
  Matrix D;
  VerificationReport report;
  std::string route;
};

/// P·M·Q = D diagonal with P, Q invertible. Routes: Euclidean pivoting
/// (Z, Q, Q[x], Q[[x]]), componentwise (products), transport (amalgamations
/// with a known isomorphic model), denominator clearing (overrings).
SnfResult snf(const Matrix& m);
/// Diagonalization from gcd certificates alone: alternating row/column
/// 2-element gcd steps, then 2×2 steps diag(a, b) -> diag(d, a1·b1·d).
SnfResult snf_generic(const Matrix& m);
/// M = (1/d)·M0 over the base ring; P, Q from the base result, D = diag(λ_i/d).
SnfResult snf_overring(const Matrix& m);

/// Independent re-check of P·M·Q = D, unit determinants, diagonality and,
/// over the integers, the divisibility chain with nonnegative entries.
VerificationReport verify_snf(const Matrix& m, const Matrix& P, const Matrix& Q, const Matrix& D);

}  // namespace amalgam
