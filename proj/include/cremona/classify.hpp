#pragma once

// Compatibility tables: which orbit data can possibly be realized by a
// quadratic transformation properly fixing a cubic of a given shape?
//
// Every exclusion modeled here rests on a hypothesis: the characteristic
// polynomial of the orbit data has a root off the unit circle (equivalently,
// the lifted automorphism would have positive entropy).  When that hypothesis
// fails, no modeled exclusion applies, so zero-entropy data is never marked
// Impossible; the zero_entropy flag and the reason text report the situation
// instead.  An Admissible verdict is a necessary-condition check only --
// whether a given curve really realizes the data is decided by the
// corresponding realization search (realize_cusp, realize_torus, ...).

#include <algorithm>
#include <string>

#include "cremona/orbit_data.hpp"
#include "cremona/pic.hpp"
#include "cremona/spectra.hpp"

namespace cremona {

enum class Verdict { Admissible, Impossible, Unmodeled };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Admissible: return "admissible";
    case Verdict::Impossible: return "impossible";
    case Verdict::Unmodeled: return "unmodeled";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::Admissible;
  std::string reason;
  bool zero_entropy = false;  // no characteristic root lies off the unit circle
};

namespace detail {

inline std::string zero_entropy_text(ZeroEntropyObstruction o) {
  std::string s = obstruction_name(o);
  switch (o) {
    case ZeroEntropyObstruction::Olength1:
      return s + ": an orbit of length 1 is fixed by sigma";
    case ZeroEntropyObstruction::TooFewBlowups:
      return s + ": at most nine points are blown up";
    case ZeroEntropyObstruction::UnitCircleRoots:
      return s + ": every characteristic root is a root of unity";
  }
  return s;
}

}  // namespace detail

// classify(kind, data): cheap necessary conditions for realizing the orbit
// data on a cubic of the given shape.  Impossible verdicts carry a proof
// sketch in `reason`; Admissible means "not excluded by any modeled
// criterion", not "realizable".
inline Classification classify(const CubicKind& kind, const OrbitData& data) {
  Classification out;
  const auto obst = zero_entropy_obstruction(data);
  out.zero_entropy = obst.has_value();

  if (kind.type == CubicType::ConicTangent) {
    out.verdict = Verdict::Unmodeled;
    out.reason =
        "no realization criterion is modeled for the conic with a tangent "
        "line; only the curve shape itself is classified";
    if (out.zero_entropy)
      out.reason += " [zero entropy (" + detail::zero_entropy_text(*obst) + ")]";
    return out;
  }

  if (out.zero_entropy) {
    out.verdict = Verdict::Admissible;
    out.reason = "zero entropy (" + detail::zero_entropy_text(*obst) +
                 "): every exclusion modeled here assumes a characteristic "
                 "root off the unit circle, so the data is not ruled out for "
                 "this curve";
    return out;
  }

  // From here on the characteristic polynomial has a root off the unit
  // circle, so all positive-entropy exclusions are in force.
  const Perm3& s = data.sigma;
  const auto& n = data.n;

  switch (kind.type) {
    case CubicType::Node:
      out.verdict = Verdict::Impossible;
      out.reason =
          "the smooth locus of a nodal cubic is a multiplicative group, so a "
          "properly fixing transformation restricts with multiplier 1 or -1 "
          "and every lift to an automorphism has zero entropy; this data "
          "needs a characteristic root off the unit circle";
      return out;

    case CubicType::TorusGeneric:
      out.verdict = Verdict::Impossible;
      out.reason =
          "a positive-entropy lift properly fixing a smooth cubic forces the "
          "square period lattice (multiplier +-i) or the hexagonal one "
          "(multiplier a primitive cube root of -1); without that symmetry "
          "the multiplier is a square or cube root of 1 and entropy vanishes";
      return out;

    case CubicType::TorusSquare:
      out.reason =
          "the square lattice admits order-4 multipliers, so positive-entropy "
          "realizations are not excluded; existence for this exact data is "
          "decided by the lattice point search";
      return out;

    case CubicType::TorusHex:
      out.reason =
          "the hexagonal lattice admits order-6 multipliers, so "
          "positive-entropy realizations are not excluded; existence for this "
          "exact data is decided by the lattice point search";
      return out;

    case CubicType::Cusp: {
      if (s.order() == 2) {
        int i = 0, j = 0;
        for (int k = 0; k < 3; ++k) {
          if (s(k) != k) (s(k) > k ? i : j) = k;
        }
        if (n[i] == n[j]) {
          out.verdict = Verdict::Impossible;
          out.reason =
              "on a cuspidal cubic, a transposition swapping two equal "
              "lengths (n_" + std::to_string(i + 1) + " = n_" +
              std::to_string(j + 1) +
              ") makes the two swapped backward base points coincide, so "
              "every candidate transformation realizes sigma = id data "
              "instead of the requested transposition";
          return out;
        }
      } else if (s.order() == 3 && n[0] == n[1] && n[1] == n[2]) {
        out.verdict = Verdict::Impossible;
        out.reason =
            "on a cuspidal cubic, cyclic data with n1 = n2 = n3 forces two "
            "backward base points to coincide, so every candidate "
            "transformation realizes different orbit data than requested";
        return out;
      }
      out.reason =
          "a cuspidal cubic carries one properly fixing transformation per "
          "characteristic root that is not a root of unity, and outside the "
          "two coincidence shapes (sigma != id with all lengths equal; a "
          "transposition swapping equal lengths) it realizes exactly this "
          "data";
      return out;
    }

    case CubicType::Triangle:
      if (!s.is_identity()) {
        out.verdict = Verdict::Impossible;
        out.reason =
            "a positive-entropy lift properly fixing a triangle of lines "
            "fixes each line with multiplier 1, so only sigma = id data can "
            "be realized";
        return out;
      }
      out.reason =
          "sigma = id is compatible with fixing each line of the triangle; "
          "whether the translation lengths close up correctly is decided by "
          "the triangle search";
      return out;

    case CubicType::Concurrent: {
      if (s.is_identity()) {
        out.reason =
            "three concurrent lines realize this data: sigma = id lets the "
            "transformation fix each line, and every characteristic root off "
            "the unit circle serves as the multiplier";
        return out;
      }
      if (s.order() == 3) {
        const bool all0 = n[0] % 3 == 0 && n[1] % 3 == 0 && n[2] % 3 == 0;
        const bool all2 = n[0] % 3 == 2 && n[1] % 3 == 2 && n[2] % 3 == 2;
        if (all0 || all2) {
          out.reason = std::string(
                           "three concurrent lines realize this data: the ") +
                       "transformation rotates the lines cyclically and all "
                       "lengths are congruent to " + (all0 ? "0" : "2") +
                       " mod 3, so each orbit lands on the correct line";
          return out;
        }
        out.verdict = Verdict::Impossible;
        out.reason =
            "three concurrent lines cannot realize cyclic data unless all "
            "lengths are congruent to 0 mod 3 (line rotation following "
            "sigma) or all congruent to 2 mod 3 (rotation following sigma "
            "inverse); these lengths are " + std::to_string(n[0] % 3) + ", " +
            std::to_string(n[1] % 3) + ", " + std::to_string(n[2] % 3) +
            " mod 3";
        return out;
      }
      // Transposition: locate the swapped pair {i, j} and the fixed index k.
      int k = 0;
      while (s(k) != k) ++k;
      const int i = std::min((k + 1) % 3, (k + 2) % 3);
      const int j = std::max((k + 1) % 3, (k + 2) % 3);
      const bool both_odd = n[i] % 2 == 1 && n[j] % 2 == 1;
      const bool distinct_mod3 = n[0] % 3 != n[1] % 3 && n[1] % 3 != n[2] % 3 &&
                                 n[0] % 3 != n[2] % 3;
      if (both_odd) {
        out.reason =
            "three concurrent lines realize this data: the swapped lengths "
            "n_" + std::to_string(i + 1) + ", n_" + std::to_string(j + 1) +
            " are both odd, so the transformation can exchange those two "
            "lines while fixing the third";
        return out;
      }
      if (distinct_mod3 && n[k] % 3 == 0) {
        out.reason =
            "three concurrent lines realize this data: the lengths are "
            "pairwise distinct mod 3 and the fixed length n_" +
            std::to_string(k + 1) +
            " is divisible by 3, so a cyclic rotation of the lines carries "
            "each orbit to the correct line";
        return out;
      }
      out.verdict = Verdict::Impossible;
      out.reason =
          "three concurrent lines cannot realize a transposition unless the "
          "swapped lengths are both odd (the two lines are exchanged) or the "
          "lengths are pairwise distinct mod 3 with the fixed length "
          "divisible by 3 (the lines rotate cyclically); here n_" +
          std::to_string(i + 1) + " = " + std::to_string(n[i]) + ", n_" +
          std::to_string(j + 1) + " = " + std::to_string(n[j]) +
          " and the fixed n_" + std::to_string(k + 1) + " = " +
          std::to_string(n[k]);
      return out;
    }

    case CubicType::ConicSecant: {
      if (s.order() == 3) {
        out.verdict = Verdict::Impossible;
        out.reason =
            "a realizing transformation fixes the conic and the secant line "
            "separately with multiplier 1, so sigma must fix the index of "
            "the single base point on the line; a 3-cycle fixes nothing";
        return out;
      }
      if (s.order() == 2) {
        out.reason =
            "a transposition is compatible with the conic plus secant: the "
            "swapped pair of base points rides the conic and the fixed one "
            "the line";
        return out;
      }
      if (n[0] == n[1] || n[1] == n[2] || n[0] == n[2]) {
        out.reason =
            "sigma = id passes the component test for the conic plus secant: "
            "two equal lengths can ride the conic (their common value makes "
            "(n_i - n_j) b ~ 0 vacuous) and the remaining orbit the line";
        return out;
      }
      out.verdict = Verdict::Impossible;
      out.reason =
          "with sigma = id the two conic orbits satisfy (n_j - 1) b ~ c, so "
          "(n_i - n_j) b ~ 0; distinct lengths make b a small-order torsion "
          "point and one conic orbit closes before its declared endpoint, so "
          "two of the lengths must be equal";
      return out;
    }

    case CubicType::ConicTangent:
      break;  // handled above
  }
  return out;
}

}  // namespace cremona
