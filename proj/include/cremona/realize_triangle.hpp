#pragma once

// Realization engine for the triangle cubic (three lines in general
// position).  The smooth locus of each line is a copy of the multiplicative
// group; values are written additively as complex rationals modulo 1, so the
// stored value v stands for the point e^{2 pi i v} on that line.
//
// A quadratic transformation properly fixing the triangle carries each line
// to itself, which forces sigma = id, and it restricts to each line as a
// translation v |-> v + b_j: the only other admissible multiplier, -1,
// squares to the identity on every line and so never carries orbit data.
//
// Writing D = n1 n2 n3 - n1 n2 - n2 n3 - n3 n1, a choice of integers
// m = (m1, m2, m3) determines
//     M   = m1 n2 n3 + m2 n3 n1 + m3 n1 n2,
//     b   = M / D  ( = b_1 + b_2 + b_3 ),
//     b_j = m_j / n_j + M / (n_j D),
// forward base points p_1^+ = 0, p_2^+ = 0, p_3^+ = b on lines 1, 2, 3, and
// backward base points p_j^- = p_j^+ + b_j - b on line j.  Then n_j b_j =
// m_j + b, so (k+1) b_j = b mod 1 holds at k = n_j - 1 and orbit j closes up
// at its declared length, unless an earlier step already lands on a base
// point.  Integer b is rejected: the forward base points would sum to zero
// in the Picard group, hence be collinear, and carry no proper quadratic
// map.  When D = 0 the formulas degenerate and no translation data exists.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/certificate.hpp"
#include "cremona/orbit_data.hpp"
#include "cremona/pic.hpp"
#include "cremona/rat.hpp"

namespace cremona {

namespace detail {

inline long triangle_degeneracy(const OrbitData& d) {
  const long n1 = d.n[0], n2 = d.n[1], n3 = d.n[2];
  return n1 * n2 * n3 - n1 * n2 - n2 * n3 - n3 * n1;
}

inline std::string triple_str(const std::array<long, 3>& m) {
  return "(" + std::to_string(m[0]) + ", " + std::to_string(m[1]) + ", " +
         std::to_string(m[2]) + ")";
}

// Shared worker; fills *fp_out (when given) with the orbit scan so callers
// can rank failed attempts without re-simulating.
inline RealizationCertificate realize_triangle_impl(const OrbitData& data,
                                                    const std::array<long, 3>& m,
                                                    FirstPassage* fp_out) {
  RealizationCertificate cert;
  cert.kind = CubicKind{CubicType::Triangle};
  cert.data = data;

  if (!data.sigma.is_identity()) {
    cert.status = RealizeStatus::Obstructed;
    cert.reason = "sigma != id: the transformations searched here fix each line of the "
                  "triangle with multiplier 1, so orbits cannot move between lines; no "
                  "lift with positive entropy permutes the lines either";
    return cert;
  }
  const long D = triangle_degeneracy(data);
  if (D == 0) {
    cert.status = RealizeStatus::Obstructed;
    cert.reason = "degenerate lengths: 1/n1 + 1/n2 + 1/n3 = 1, so the translation "
                  "formulas have a vanishing denominator and no multiplier-one map "
                  "carries this data";
    return cert;
  }
  const long n1 = data.n[0], n2 = data.n[1], n3 = data.n[2];
  if (n2 * n3 % D == 0 && n3 * n1 % D == 0 && n1 * n2 % D == 0) {
    cert.status = RealizeStatus::Obstructed;
    cert.reason = "collinear for every translation choice: D = " + std::to_string(D) +
                  " divides each pairwise product n_i n_j, so b = "
                  "(m1 n2 n3 + m2 n3 n1 + m3 n1 n2)/D is an integer for all m and the "
                  "forward base points always sum to zero";
    return cert;
  }
  // b - b_j = (m_j (n_i+n_k) + (m_i n_k + m_k n_i)(n_j - 1)) / D, so when D
  // divides n_i + n_k, n_i (n_j - 1) and n_k (n_j - 1), the backward base
  // point of orbit j sits on a forward base point for every m.
  for (int j = 0; j < 3; ++j) {
    if (data.n[j] < 2) continue;  // an immediate hit is the correct endpoint
    const long ni = data.n[(j + 1) % 3], nk = data.n[(j + 2) % 3];
    if ((ni + nk) % D == 0 && ni * (data.n[j] - 1) % D == 0 &&
        nk * (data.n[j] - 1) % D == 0) {
      cert.status = RealizeStatus::Obstructed;
      cert.reason = "orbit " + std::to_string(j + 1) +
                    " closes immediately for every translation choice: D = " +
                    std::to_string(D) + " divides n_i + n_k and both n_i (n_j - 1), "
                    "n_k (n_j - 1), so b - b_" + std::to_string(j + 1) +
                    " is an integer for all m and p_" + std::to_string(j + 1) +
                    "^- always coincides with p_" + std::to_string(j + 1) + "^+";
      return cert;
    }
  }

  const long M = m[0] * n2 * n3 + m[1] * n3 * n1 + m[2] * n1 * n2;
  const Rat b = rat(M, D);
  cert.notes.push_back("m = " + triple_str(m) + ", b = " + rat_str(b));
  if (b.get_den() == 1) {
    cert.status = RealizeStatus::Obstructed;
    cert.reason = "collinear base points: b = " + rat_str(b) +
                  " is an integer for m = " + triple_str(m) +
                  ", so the three forward base points sum to zero in the Picard group";
    return cert;
  }

  cert.aut.a = 1;
  cert.aut.tau = Perm3::identity();
  cert.aut.b.clear();
  for (int j = 0; j < 3; ++j)
    cert.aut.b.push_back(CRat(rat(m[j], data.n[j]) + rat(M, data.n[j] * D)));
  cert.plus = {MarkedPoint(0, CRat(Rat(0))), MarkedPoint(1, CRat(Rat(0))),
               MarkedPoint(2, CRat(b))};
  for (int j = 0; j < 3; ++j) {
    const PicValue shift = pic_sub(cert.aut.b[j], PicValue(CRat(b)));
    cert.minus[j] = MarkedPoint(j, pic_add(cert.plus[j].val, shift));
  }

  FirstPassage fp = first_passage(cert.kind, cert.aut, cert.plus, cert.minus, data);
  for (int j = 0; j < 3; ++j) cert.orbits[j] = fp.scan[j].points;
  for (const std::string& f : fp.findings) cert.notes.push_back(f);

  if (fp.matches_requested && fp.benign_only) {
    cert.status = RealizeStatus::Realized;
  } else {
    cert.status = RealizeStatus::TentativeOnly;
    cert.reason = "an orbit meets a base point before its declared endpoint for m = " +
                  triple_str(m);
  }
  if (fp_out) *fp_out = std::move(fp);
  return cert;
}

}  // namespace detail

// Certify one translation choice m.  Data-level obstructions (sigma != id,
// degenerate lengths, collinearity for every m) are reported regardless of m.
inline RealizationCertificate realize_triangle(const OrbitData& data,
                                               const std::array<long, 3>& m) {
  return detail::realize_triangle_impl(data, m, nullptr);
}

// Outcome of a box search over translation choices.
struct TriangleSearch {
  RealizationCertificate cert;           // winning, or best-surviving, certificate
  std::optional<std::array<long, 3>> m;  // the translation integers behind cert
  long tried = 0;                        // candidates examined, collinear ones included
};

// Scan m lexicographically through [-bound, bound]^3 and return the first
// realized certificate.  If nothing realizes, return the tentative attempt
// whose earliest failure happens latest (ties broken by search order); if
// every candidate is collinear, report that obstruction once.
inline TriangleSearch search_triangle(const OrbitData& data, long bound = 5) {
  TriangleSearch out;
  out.cert = detail::realize_triangle_impl(data, {0, 0, 0}, nullptr);
  out.tried = 1;
  if (out.cert.status == RealizeStatus::Obstructed &&
      out.cert.reason.find("collinear base points") == std::string::npos)
    return out;  // sigma, degeneracy and all-m collinearity do not depend on m

  RealizationCertificate best;
  std::optional<std::array<long, 3>> best_m;
  long best_survival = -1;
  long tried = 0;
  for (long m1 = -bound; m1 <= bound; ++m1)
    for (long m2 = -bound; m2 <= bound; ++m2)
      for (long m3 = -bound; m3 <= bound; ++m3) {
        const std::array<long, 3> m{m1, m2, m3};
        ++tried;
        FirstPassage fp;
        RealizationCertificate c = detail::realize_triangle_impl(data, m, &fp);
        if (c.status == RealizeStatus::Realized) {
          c.notes.push_back("found after examining " + std::to_string(tried) +
                            " translation choices");
          out.cert = std::move(c);
          out.m = m;
          out.tried = tried;
          return out;
        }
        if (c.status != RealizeStatus::TentativeOnly) continue;  // collinear m
        long first_fail = 1L << 40;
        for (int j = 0; j < 3; ++j) {
          const long endpoint = data.n[j] - 1;
          if (fp.scan[j].hit_k >= 0 && fp.scan[j].hit_k < endpoint)
            first_fail = std::min<long>(first_fail, fp.scan[j].hit_k);
          else if (!fp.endpoint_ok[j])
            first_fail = std::min<long>(first_fail, endpoint);
        }
        if (first_fail > best_survival) {
          best_survival = first_fail;
          best = std::move(c);
          best_m = m;
        }
      }

  out.tried = tried;
  if (best_m.has_value()) {
    best.notes.push_back("no translation choice in [-" + std::to_string(bound) + ", " +
                         std::to_string(bound) + "]^3 realizes the data; showing the "
                         "attempt whose orbits survive longest (first failure at step " +
                         std::to_string(best_survival) + ")");
    out.cert = std::move(best);
    out.m = best_m;
    return out;
  }
  out.cert.status = RealizeStatus::Obstructed;
  out.cert.reason = "every translation choice in [-" + std::to_string(bound) + ", " +
                    std::to_string(bound) + "]^3 makes the forward base points collinear";
  return out;
}

}  // namespace cremona
