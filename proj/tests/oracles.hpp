#pragma once

// Independent reference computations used only by the tests. They work on
// raw GMP numbers and never call the library's algorithms.

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <vector>

namespace oracle {

/// Classical iterative extended Euclid: g = s·a + t·b with g >= 0.
inline std::tuple<mpz_class, mpz_class, mpz_class> ext_euclid(mpz_class a, mpz_class b) {
  mpz_class s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class r = a - q * b;
    a = b;
    b = r;
    mpz_class s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) return {-a, -s0, -t0};
  return {a, s0, t0};
}

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Invariant factors of an integer matrix by textbook elementary row and
/// column operations: move a smallest nonzero entry to the pivot, reduce its
/// row and column by division with remainder, repeat until the pivot clears
/// its row and column and divides the rest. Returns min(rows, cols) values,
/// nonnegative and in divisibility order.
inline std::vector<mpz_class> elementary_snf(IntMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) {
        while (diag.size() < n) diag.push_back(0);
        return diag;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        clean = clean && m[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][c].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        clean = clean && m[t][c] == 0;
      }
      if (!clean) continue;
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(m[r][c].get_mpz_t(), m[t][t].get_mpz_t())) {
            bad_row = r;
            break;
          }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) m[t][c] += m[bad_row][c];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

/// Coefficients of 1/f mod x^n by the recurrence g_k = -(sum f_i g_{k-i})/f_0.
inline std::vector<mpq_class> series_inverse(const std::vector<mpq_class>& f, std::size_t n) {
  std::vector<mpq_class> g(n);
  auto at = [&](std::size_t i) { return i < f.size() ? f[i] : mpq_class(0); };
  for (std::size_t k = 0; k < n; ++k) {
    mpq_class s = k == 0 ? mpq_class(1) : mpq_class(0);
    for (std::size_t i = 1; i <= k; ++i) s -= at(i) * g[k - i];
    g[k] = s / at(0);
  }
  return g;
}

/// Truncated product of two coefficient lists.
inline std::vector<mpq_class> series_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                         std::size_t n) {
  std::vector<mpq_class> c(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Permutation-expansion determinant of an integer matrix.
inline mpz_class det(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  mpz_class total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) sign = -sign;
    mpz_class term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace oracle
