#pragma once

// Shared machinery for the engines whose multiplier is a scalar root of the
// characteristic polynomial (cuspidal cubic, three concurrent lines): exact
// coefficient fields Q[a], and the solver for the linear relations
// x_{sigma(j)} = a^{n_j} x_j + c that the orbit-closing conditions impose on
// the normalized indeterminacy values.

#include <algorithm>
#include <array>
#include <vector>

#include "cremona/certificate.hpp"
#include "cremona/numfield.hpp"
#include "cremona/orbit_data.hpp"
#include "cremona/spectra.hpp"

namespace cremona {

struct MultiplierField {
  IntPoly char_poly;       // full characteristic polynomial of the orbit data
  Field field;             // Q[x] modulo one irreducible-enough factor
  NFElem a;                // the multiplier: residue of x
  int unit_root_order = 0; // 0 when a avoids the unit circle; else a is a
                           // primitive k-th root of unity (zero entropy)
};

// Totals of the orbit lengths over each sigma-cycle; these exponents appear
// in the solver's denominators 1 - a^N.
inline std::vector<long> sigma_cycle_totals(const OrbitData& d) {
  std::vector<long> totals;
  std::array<bool, 3> seen{};
  for (int j0 = 0; j0 < 3; ++j0) {
    if (seen[j0]) continue;
    long total = d.n[j0];
    seen[j0] = true;
    for (int t = d.sigma(j0); t != j0; t = d.sigma(t)) {
      total += d.n[t];
      seen[t] = true;
    }
    totals.push_back(total);
  }
  return totals;
}

// Candidate multiplier fields in preference order.  When the characteristic
// polynomial has a non-cyclotomic factor, its root field is the only
// candidate (the realization theorems cover it).  Otherwise every root is a
// root of unity and the construction can still go through: each cyclotomic
// factor Phi_k whose roots keep the cycle denominators 1 - a^N nonzero
// (k dividing no sigma-cycle total) is offered, largest k first, and exact
// simulation decides.  Throws NoSuitableRoot when no factor qualifies.
inline std::vector<MultiplierField> multiplier_fields(const OrbitData& data) {
  IntPoly P = char_poly_formula(data);
  CyclotomicSplit split = strip_cyclotomics(P);
  std::vector<MultiplierField> out;
  if (split.remainder.degree() > 0) {
    MultiplierField mf;
    mf.char_poly = P;
    mf.field = NumberField::make(split.remainder);
    mf.a = NFElem::gen(mf.field);
    out.push_back(std::move(mf));
    return out;
  }
  const std::vector<long> totals = sigma_cycle_totals(data);
  std::vector<int> orders;
  for (const auto& [k, mult] : split.factors) orders.push_back(k);
  std::sort(orders.rbegin(), orders.rend());
  for (int k : orders) {
    bool invertible = true;
    for (long total : totals)
      if (total % k == 0) invertible = false;
    if (!invertible) continue;
    MultiplierField mf;
    mf.char_poly = P;
    mf.field = NumberField::make(cyclotomic(k));
    mf.a = NFElem::gen(mf.field);
    mf.unit_root_order = k;
    out.push_back(std::move(mf));
  }
  if (out.empty())
    throw NoSuitableRoot("every root of the characteristic polynomial of " + data.str() +
                         " is a root of unity whose order divides a sigma-cycle total; no "
                         "multiplier keeps the orbit relations solvable");
  return out;
}

inline NFElem nf_eval(const IntPoly& p, const NFElem& a) {
  NFElem acc(a.field(), Rat(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + NFElem(a.field(), Rat(p.coeff(i)));
  return acc;
}

// Solves x_{sigma(j)} = a^{n_j} x_j + c.  Around a sigma-cycle
// (j_0, j_1, ..., j_{L-1}) the relations compose to
//   x_{j_0} (1 - a^{N}) = c (1 + a^{n_{j_{L-1}}} + a^{n_{j_{L-1}}+n_{j_{L-2}}} + ...),
// N the cycle's length total; the remaining values propagate forward.
inline std::array<NFElem, 3> unwind_translation_cycles(const OrbitData& d, const NFElem& a,
                                                       const NFElem& c) {
  const NFElem one(a.field(), Rat(1));
  std::array<NFElem, 3> x{one, one, one};
  std::array<bool, 3> done{};
  for (int j0 = 0; j0 < 3; ++j0) {
    if (done[j0]) continue;
    std::vector<int> cyc{j0};
    for (int t = d.sigma(j0); t != j0; t = d.sigma(t)) cyc.push_back(t);
    const int L = static_cast<int>(cyc.size());
    NFElem series = one;
    long e = 0;
    for (int t = L - 1; t >= 1; --t) {
      e += d.n[cyc[t]];
      series = series + a.pow(e);
    }
    x[j0] = c * series / (one - a.pow(e + d.n[j0]));
    done[j0] = true;
    for (int t = 1; t < L; ++t) {
      x[cyc[t]] = a.pow(d.n[cyc[t - 1]]) * x[cyc[t - 1]] + c;
      done[cyc[t]] = true;
    }
  }
  return x;
}

}  // namespace cremona
