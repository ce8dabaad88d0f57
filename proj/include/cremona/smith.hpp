#pragma once
// Smith normal form over the integers, exact and arbitrary-precision, with
// both unimodular transforms tracked:  R * M * C = D  with D diagonal and
// d_1 | d_2 | ... | d_r (the invariant factors, normalized nonnegative).
//
// The intended consumer solves congruence systems  M u = 0 (mod Z^n)  for
// u in (Q/Z)^m: substituting u = C w turns the system into D w = 0 (mod Z^n),
// which splits per coordinate — w_i ranges over { t/d_i : 0 <= t < d_i } when
// d_i != 0 and over all of Q/Z when d_i = 0 ("free" coordinate).  C is
// unimodular, so w -> C w is a bijection of (Q/Z)^m and the enumeration is
// complete and free of duplicates.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cremona {

using ZMat = std::vector<std::vector<mpz_class>>;

inline ZMat zmat_identity(std::size_t n) {
  ZMat I(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

inline ZMat zmat_mul(const ZMat& A, const ZMat& B) {
  const std::size_t n = A.size(), k = B.size(), m = k ? B[0].size() : 0;
  ZMat out(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += A[i][t] * B[t][j];
    }
  return out;
}

// Fraction-free Gaussian elimination (Bareiss); exact determinant.
inline mpz_class zmat_det(ZMat M) {
  const std::size_t n = M.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && M[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = num / prev;  // divides exactly (Bareiss identity)
      }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

struct SmithForm {
  std::vector<mpz_class> diag;  // invariant factors, length min(n, m), each >= 0
  ZMat R;                       // n x n unimodular row transform
  ZMat C;                       // m x m unimodular column transform
};

// Reduces M to Smith normal form by elementary row and column operations,
// accumulating them into R and C so that R * (input M) * C is the diagonal
// matrix carried by `diag`.
inline SmithForm smith_form(ZMat M) {
  const std::size_t n = M.size(), m = n ? M[0].size() : 0;
  for (const auto& row : M)
    if (row.size() != m) throw std::invalid_argument("smith_form: ragged matrix");
  SmithForm out;
  out.R = zmat_identity(n);
  out.C = zmat_identity(m);
  const std::size_t r = n < m ? n : m;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(M[i], M[j]);
    std::swap(out.R[i], out.R[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t t = 0; t < n; ++t) std::swap(M[t][i], M[t][j]);
    for (std::size_t t = 0; t < m; ++t) std::swap(out.C[t][i], out.C[t][j]);
  };
  auto addmul_row = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    // row_dst -= q * row_src
    for (std::size_t t = 0; t < m; ++t) M[dst][t] -= q * M[src][t];
    for (std::size_t t = 0; t < n; ++t) out.R[dst][t] -= q * out.R[src][t];
  };
  auto addmul_col = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    // col_dst -= q * col_src
    for (std::size_t t = 0; t < n; ++t) M[t][dst] -= q * M[t][src];
    for (std::size_t t = 0; t < m; ++t) out.C[t][dst] -= q * out.C[t][src];
  };

  for (std::size_t k = 0; k < r; ++k) {
    // Locate the smallest nonzero entry of the trailing submatrix.
    auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
      std::size_t pi = n, pj = m;
      mpz_class best = 0;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < m; ++j) {
          if (M[i][j] == 0) continue;
          mpz_class a = abs(M[i][j]);
          if (pi == n || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      return {pi, pj};
    };

    auto [pi, pj] = find_pivot();
    if (pi == n) break;  // trailing submatrix is zero; remaining factors are 0
    swap_rows(k, pi);
    swap_cols(k, pj);

    for (;;) {
      // Euclid-reduce column k below the pivot and row k right of it.  Each
      // incomplete division leaves a remainder strictly smaller than the
      // pivot, so re-selecting the minimum terminates.
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (M[i][k] == 0) continue;
        mpz_class q = M[i][k] / M[k][k];  // truncated division
        if (q != 0) addmul_row(i, k, q);
        if (M[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < m; ++j) {
        if (M[k][j] == 0) continue;
        mpz_class q = M[k][j] / M[k][k];
        if (q != 0) addmul_col(j, k, q);
        if (M[k][j] != 0) clean = false;
      }
      if (!clean) {
        auto [qi, qj] = find_pivot();
        swap_rows(k, qi);
        swap_cols(k, qj);
        continue;
      }
      // Pivot row/column are clear.  Enforce the divisibility chain: the
      // pivot must divide every entry of the trailing submatrix.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < m && divides; ++j)
          if (M[i][j] % M[k][k] != 0) {
            addmul_row(k, i, mpz_class(-1));  // row_k += row_i, reintroduces entries
            divides = false;
          }
      if (divides) break;
    }
  }

  out.diag.assign(r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    out.diag[k] = abs(M[k][k]);
    if (M[k][k] < 0) {  // fold the sign into C to keep R*M*C == diag exact
      for (std::size_t t = 0; t < n; ++t) M[t][k] = -M[t][k];
      for (std::size_t t = 0; t < m; ++t) out.C[t][k] = -out.C[t][k];
    }
  }
  return out;
}

}  // namespace cremona
