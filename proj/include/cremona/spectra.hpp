#pragma once

// Cohomology action of a lifted quadratic map and its spectrum.  The action
// on the Picard lattice of the blowup is S∘Q in the ordered basis
// (H, E_{1,0..n1-1}, E_{2,0..n2-1}, E_{3,0..n3-1}): Q is the involution
// induced by the quadratic map on the first blowup level, S the permutation
// shifting each orbit cycle.  The characteristic polynomial is computed two
// independent ways (exact determinant via Faddeev-LeVerrier, and the closed
// assembly formula from the orbit data); the matrix route is normative.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cremona/orbit_data.hpp"
#include "cremona/poly.hpp"

namespace cremona {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using MatZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct CohomologyAction {
  int dim = 0;
  MatZ matrix;  // S*Q
  MatZ q, s;    // the two factors, kept for isometry/cycle tests
};

inline CohomologyAction build_action(const OrbitData& d) {
  const int N = 1 + d.total();
  // Index of E_{i,m} in the ordered basis; H sits at index 0.
  const std::array<int, 3> off{1, 1 + d.n[0], 1 + d.n[0] + d.n[1]};
  const auto e = [&](int i, int m) { return off[i] + m; };

  MatZ Q = MatZ::Identity(N, N);
  Q(0, 0) = 2;
  for (int i = 0; i < 3; ++i) {
    Q(e(i, 0), 0) = -1;                       // Q(H) = 2H - sum E_{i,0}
    Q(0, e(i, 0)) = 1;                        // Q(E_{i,0}) = H - ...
    Q(e(i, 0), e(i, 0)) = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i) Q(e(j, 0), e(i, 0)) = -1;
  }

  MatZ S = MatZ::Zero(N, N);
  S(0, 0) = 1;
  for (int i = 0; i < 3; ++i) {
    S(e(i, d.n[i] - 1), e(d.sigma(i), 0)) = 1;      // E_{sigma(i),0} -> E_{i,n_i-1}
    for (int m = 1; m <= d.n[i] - 1; ++m) S(e(i, m - 1), e(i, m)) = 1;
  }

  CohomologyAction a;
  a.dim = N;
  a.q = Q;
  a.s = S;
  a.matrix = S * Q;
  return a;
}

namespace detail {

struct int64_overflow {};

inline std::int64_t ck_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw int64_overflow{};
  return r;
}
inline std::int64_t ck_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw int64_overflow{};
  return r;
}

// Faddeev-LeVerrier over checked 64-bit integers.  Throws int64_overflow if
// any intermediate leaves the representable range.
inline std::vector<std::int64_t> fl_charpoly_i64(const MatZ& A) {
  const int n = static_cast<int>(A.rows());
  std::vector<std::int64_t> M(n * n), W(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i * n + j] = A(i, j);
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    std::int64_t tr = 0;
    for (int i = 0; i < n; ++i) tr = ck_add(tr, M[i * n + i]);
    if (tr % k != 0) throw std::logic_error("Faddeev-LeVerrier: inexact trace division");
    c[n - k] = -(tr / k);
    if (k == n) break;
    for (int i = 0; i < n; ++i) M[i * n + i] = ck_add(M[i * n + i], c[n - k]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int l = 0; l < n; ++l)
          s = ck_add(s, ck_mul(A(i, l), M[l * n + j]));
        W[i * n + j] = s;
      }
    M.swap(W);
  }
  return c;
}

inline std::vector<Int> fl_charpoly_mpz(const MatZ& A) {
  const int n = static_cast<int>(A.rows());
  std::vector<Int> M(n * n), W(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i * n + j] = Int(A(i, j));
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += M[i * n + i];
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), k))
      throw std::logic_error("Faddeev-LeVerrier: inexact trace division");
    c[n - k] = -tr / k;
    if (k == n) break;
    for (int i = 0; i < n; ++i) M[i * n + i] += c[n - k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int l = 0; l < n; ++l) s += Int(A(i, l)) * M[l * n + j];
        W[i * n + j] = s;
      }
    M.swap(W);
  }
  return c;
}

}  // namespace detail

inline IntPoly char_poly_matrix(const CohomologyAction& a) {
  try {
    const auto c = detail::fl_charpoly_i64(a.matrix);
    std::vector<Int> coeffs(c.size());
    for (size_t i = 0; i < c.size(); ++i) coeffs[i] = Int(static_cast<long>(c[i]));
    return IntPoly(std::move(coeffs));
  } catch (const detail::int64_overflow&) {
    return IntPoly(detail::fl_charpoly_mpz(a.matrix));
  }
}

inline IntPoly char_poly_matrix(const OrbitData& d) {
  return char_poly_matrix(build_action(d));
}

// P(λ) = λ^N p(1/λ) + (−1)^{ord σ} p(λ) with N = 1 + Σ n_j and
// p(λ) = 1 − 2λ + Σ_{σ(j)=j} λ^{1+n_j} + Σ_{σ(j)≠j} λ^{n_j}(1−λ).
// "ord σ" is the group-theoretic order of σ; the convention is locked by the
// exhaustive equality test against char_poly_matrix.
inline IntPoly char_poly_formula(const OrbitData& d) {
  const int N = 1 + d.total();
  IntPoly p{1, -2};
  for (int j = 0; j < 3; ++j) {
    if (d.sigma(j) == j) {
      p += IntPoly::monomial(1 + d.n[j]);
    } else {
      p += IntPoly::monomial(d.n[j]);
      p -= IntPoly::monomial(d.n[j] + 1);
    }
  }
  const int sign = (d.sigma.order() % 2 == 0) ? 1 : -1;
  IntPoly P = p.reversed(N);
  if (sign > 0)
    P += p;
  else
    P -= p;
  return P;
}

struct SpectralRadius {
  double lambda1 = 1.0;
  bool on_unit_circle = false;
  Float50 lambda1_precise{1};
};

// Dynamical degree from the characteristic polynomial.  The unit-circle
// decision is exact: a monic integer polynomial has all roots in the closed
// unit disk iff it is a product of cyclotomics and a power of x (Kronecker),
// so stripping cyclotomic factors decides the flag without floating point.
// When a root of modulus > 1 exists, the CharPoly invariants put exactly one
// real root in (1, 2]; it is isolated by exact-rational sign bisection and
// cross-checked against companion-matrix eigenvalues.
inline SpectralRadius spectral_radius(const IntPoly& P, double tol = 1e-12) {
  if (P.is_zero() || !P.is_monic())
    throw std::invalid_argument("spectral_radius: polynomial must be monic");
  SpectralRadius out;
  CyclotomicSplit split = strip_cyclotomics(P);
  if (split.remainder.degree() == 0) {
    out.on_unit_circle = true;
    return out;
  }
  const IntPoly& g = split.remainder;

  // g(1) < 0 < g(hi): g is monic with a single simple real root > 1 and all
  // other real roots in (-1,1), so the signs are forced once hi > lambda1.
  Rat lo(1), hi(9, 4);
  if (g.eval_rat(lo) >= 0)
    throw std::logic_error("spectral_radius: input violates root discipline at 1");
  while (g.eval_rat(hi) <= 0) hi *= 2;  // defensive; lambda1 <= 2 in this family
  // 170 halvings shrink the bracket below 1e-50, well past Float50 precision
  // and any tolerance this library requests.
  for (int it = 0; it < 170; ++it) {
    Rat mid = (lo + hi) / 2;
    const Rat v = g.eval_rat(mid);
    if (v == 0) {
      lo = hi = mid;
      break;
    }
    (v < 0 ? lo : hi) = mid;
  }
  const Float50 lam = (Float50(lo.get_num().get_str()) / Float50(lo.get_den().get_str()) +
                       Float50(hi.get_num().get_str()) / Float50(hi.get_den().get_str())) /
                      2;
  out.lambda1_precise = lam;
  out.lambda1 = static_cast<double>(lam);

  // Independent finder: companion matrix of the cyclotomic-free part.
  const int n = g.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -g.c[i].get_d();
  const auto eig = comp.eigenvalues();
  double rho = 0;
  for (int i = 0; i < n; ++i) rho = std::max(rho, std::abs(eig[i]));
  if (std::abs(rho - out.lambda1) > std::max(1e-9, tol))
    throw std::runtime_error("spectral_radius: companion cross-check disagrees with bisection");
  return out;
}

inline double entropy_of(const IntPoly& P) {
  const SpectralRadius r = spectral_radius(P);
  return r.on_unit_circle ? 0.0 : std::log(r.lambda1);
}

inline double entropy_of(const OrbitData& d) { return entropy_of(char_poly_matrix(d)); }

enum class ZeroEntropyObstruction { Olength1, TooFewBlowups, UnitCircleRoots };

inline const char* obstruction_name(ZeroEntropyObstruction o) {
  switch (o) {
    case ZeroEntropyObstruction::Olength1: return "Olength1";
    case ZeroEntropyObstruction::TooFewBlowups: return "TooFewBlowups";
    case ZeroEntropyObstruction::UnitCircleRoots: return "UnitCircleRoots";
  }
  return "?";
}

// First applicable obstruction in the order: a length-1 orbit at a fixed
// index of sigma, then too few blowups (<= 9 points), then the exact
// all-roots-on-the-unit-circle check.
inline std::optional<ZeroEntropyObstruction> zero_entropy_obstruction(const OrbitData& d) {
  for (int j = 0; j < 3; ++j)
    if (d.n[j] == 1 && d.sigma(j) == j) return ZeroEntropyObstruction::Olength1;
  if (d.total() <= 9) return ZeroEntropyObstruction::TooFewBlowups;
  if (strip_cyclotomics(char_poly_matrix(d)).remainder.degree() == 0)
    return ZeroEntropyObstruction::UnitCircleRoots;
  return std::nullopt;
}

}  // namespace cremona
