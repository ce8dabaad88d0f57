#pragma once

// Dense univariate polynomials with exact coefficients: IntPoly over Z for
// characteristic polynomials and their cyclotomic bookkeeping, RatPoly over Q
// for residue arithmetic in number fields.  Coefficients are stored in
// ascending order; the zero polynomial has an empty coefficient vector and
// degree -1.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cremona/rat.hpp"

namespace cremona {

struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c.emplace_back(v);
    trim();
  }

  static IntPoly monomial(int deg, Int coeff = 1) {
    IntPoly p;
    if (coeff != 0) {
      p.c.assign(deg + 1, Int(0));
      p.c[deg] = std::move(coeff);
    }
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Int& leading() const {
    if (is_zero()) throw std::logic_error("IntPoly: leading coefficient of 0");
    return c.back();
  }
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Int(0);
  }
  bool is_monic() const { return !is_zero() && c.back() == 1; }

  bool operator==(const IntPoly&) const = default;

  IntPoly operator-() const {
    IntPoly r = *this;
    for (Int& v : r.c) v = -v;
    return r;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }

  // Exact quotient, or nullopt when the division leaves a remainder or a
  // non-integral coefficient.
  std::optional<IntPoly> divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("IntPoly: division by zero");
    if (is_zero()) return IntPoly{};
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Int> rem = c;
    std::vector<Int> quo(degree() - d.degree() + 1, Int(0));
    for (int i = degree(); i >= d.degree(); --i) {
      Int& top = rem[i];
      if (top == 0) continue;
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                  d.leading().get_mpz_t());
      if (r != 0) return std::nullopt;
      quo[i - d.degree()] = q;
      for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c[j];
    }
    for (const Int& v : rem)
      if (v != 0) return std::nullopt;
    return IntPoly(std::move(quo));
  }

  // x^n * p(1/x) for n >= degree; the coefficient vector reversed into
  // length n+1.
  IntPoly reversed(int n) const {
    if (degree() > n) throw std::invalid_argument("IntPoly: reversal order too small");
    IntPoly r;
    r.c.assign(n + 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[n - i] = c[i];
    r.trim();
    return r;
  }

  bool is_reciprocal() const {
    if (is_zero()) return false;
    const IntPoly rev = reversed(degree());
    return rev == *this || rev == -*this;
  }

  IntPoly derivative() const {
    IntPoly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(Int(i) * c[i]);
    r.trim();
    return r;
  }

  // Horner evaluation over any float-like type.  Coefficients pass through
  // double, which is exact below 2^53; the guard keeps silent rounding out.
  template <class T>
  T eval(const T& x) const {
    T acc = T(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc *= x;
      if (mpz_sizeinbase(it->get_mpz_t(), 2) > 52)
        throw std::domain_error("IntPoly::eval: coefficient exceeds exact double range");
      acc += T(it->get_d());
    }
    return acc;
  }
  Int eval_int(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Rat eval_rat(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (c[i] == 0) continue;
      const bool neg = c[i] < 0;
      Int a = abs(c[i]);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (a != 1 || i == 0) out += a.get_str();
      if (i > 0) {
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Rational-coefficient polynomials (just enough for number field residues).

struct RatPoly {
  std::vector<Rat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit RatPoly(const IntPoly& p) {
    for (const Int& v : p.c) c.emplace_back(v);
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Rat(0);
  }

  bool operator==(const RatPoly&) const = default;

  RatPoly& operator+=(const RatPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  RatPoly& operator-=(const RatPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }

  RatPoly& scale(const Rat& s) {
    for (Rat& v : c) v *= s;
    trim();
    return *this;
  }

  static std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("RatPoly: division by zero");
    RatPoly r = a, q;
    if (a.degree() >= b.degree())
      q.c.assign(a.degree() - b.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int k = r.degree() - b.degree();
      Rat f = r.c.back() / b.c.back();
      q.c[k] = f;
      for (int j = 0; j <= b.degree(); ++j) r.c[k + j] -= f * b.c[j];
      r.trim();
    }
    q.trim();
    return {q, r};
  }
};

// Extended Euclid in Q[x]: returns (g, u, v) with u*a + v*b = g, g monic
// (or zero).  Used to invert residues modulo an irreducible polynomial.
inline std::tuple<RatPoly, RatPoly, RatPoly> xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly u0(std::vector<Rat>{Rat(1)}), u1;
  RatPoly v0, v1(std::vector<Rat>{Rat(1)});
  while (!r1.is_zero()) {
    auto [q, r] = RatPoly::divrem(r0, r1);
    r0 = std::exchange(r1, r);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (!r0.is_zero()) {
    Rat lead = r0.c.back();
    Rat inv = 1 / lead;
    r0.scale(inv);
    u0.scale(inv);
    v0.scale(inv);
  }
  return {r0, u0, v0};
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and unit-circle factor stripping.

inline IntPoly cyclotomic(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic: k must be positive");
  IntPoly p = IntPoly::monomial(k) - IntPoly{1};
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto q = p.divide_exact(cyclotomic(d));
    if (!q) throw std::logic_error("cyclotomic: inexact division");
    p = std::move(*q);
  }
  return p;
}

struct CyclotomicSplit {
  IntPoly remainder;                        // no cyclotomic factor left
  std::vector<std::pair<int, int>> factors; // (k, multiplicity of Phi_k)
  int power_of_x = 0;                       // multiplicity of the root 0
};

// Peel off every cyclotomic factor.  Phi_k can divide a polynomial of degree
// D only if phi(k) <= D, and phi(k) >= sqrt(k/2) gives the search bound
// k <= 2 D^2.
inline CyclotomicSplit strip_cyclotomics(IntPoly p) {
  if (p.is_zero()) throw std::invalid_argument("strip_cyclotomics: zero polynomial");
  CyclotomicSplit out;
  while (p.coeff(0) == 0 && p.degree() > 0) {
    auto q = p.divide_exact(IntPoly::monomial(1));
    p = std::move(*q);
    ++out.power_of_x;
  }
  const int bound = 2 * p.degree() * p.degree();
  for (int k = 1; k <= bound; ++k) {
    const IntPoly phi = cyclotomic(k);
    if (phi.degree() > p.degree()) continue;
    int mult = 0;
    while (true) {
      auto q = p.divide_exact(phi);
      if (!q) break;
      p = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(k, mult);
    if (p.degree() == 0) break;
  }
  out.remainder = std::move(p);
  return out;
}

}  // namespace cremona
