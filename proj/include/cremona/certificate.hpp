#pragma once

// Realization certificates and the exact first-passage orbit simulator that
// underwrites them.  A certificate packages the curve automorphism, the six
// marked indeterminacy points, and the forward orbits of the p_j^-; its
// status records whether the configuration realizes the requested orbit
// data.  Soundness is always re-checkable: simulate the orbits from scratch
// with aut_apply and compare.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/orbit_data.hpp"
#include "cremona/pic.hpp"

namespace cremona {

enum class RealizeStatus { Realized, TentativeOnly, Obstructed };

inline const char* status_name(RealizeStatus s) {
  switch (s) {
    case RealizeStatus::Realized: return "Realized";
    case RealizeStatus::TentativeOnly: return "TentativeOnly";
    case RealizeStatus::Obstructed: return "Obstructed";
  }
  return "?";
}

// Raised when every root of the characteristic polynomial is a root of
// unity, so no multiplier with |a| != 1 exists.
struct NoSuitableRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when requested orbit data is shaped incompatibly with the curve's
// component structure (e.g. sigma moves the index reserved for the line).
struct ShapeViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RealizationCertificate {
  CubicKind kind;
  OrbitData data;  // the orbit data this certificate is about
  CurveAut aut;
  std::array<MarkedPoint, 3> plus;   // I(f)
  std::array<MarkedPoint, 3> minus;  // I(f^-1)
  // orbits[j] = p_j^-, f(p_j^-), ..., f^{n_j-1}(p_j^-); filled when the
  // engine constructed points (possibly also for obstructed data, to show
  // what the tentative transformation does instead).
  std::array<std::vector<MarkedPoint>, 3> orbits;
  RealizeStatus status = RealizeStatus::Obstructed;
  std::string reason;               // nonempty unless Realized
  std::vector<std::string> notes;
  int root_index = 0;  // which complex embedding of the multiplier field applies
};

// ---------------------------------------------------------------------------
// First-passage simulation

struct OrbitScan {
  std::vector<MarkedPoint> points;  // f^k(p_j^-) for k = 0, 1, ...
  int hit_k = -1;                   // smallest k with f^k(p_j^-) in I(f)
  int hit_index = -1;               // which plus point (prefers the requested target)
  bool hit_multiple = false;        // the hit location matches several plus points
};

struct FirstPassage {
  std::array<OrbitScan, 3> scan;
  // Orbit data read off the raw first hits; absent when some orbit never
  // hits I(f) within its step limit or the hit indices do not permute.
  std::optional<OrbitData> realized;
  bool matches_requested = false;
  // True when every premature hit is the benign containment pattern
  // (orbit j runs through orbit i's endpoint with n_i + n_j = 2n, n_i < n_j;
  // the inner segment is blown up first, so the data is still realized).
  bool benign_only = true;
  std::array<bool, 3> endpoint_ok{};  // f^{n_j-1}(p_j^-) = p_{sigma(j)}^+
  std::vector<std::string> findings;  // containments, orbit coincidences
};

// Walks each orbit under aut_apply, recording the first index k at which it
// meets I(f).  Orbit j is walked to max(n_j - 1, max_steps[j]); pass a
// larger max_steps when the true first passage may exceed the requested
// length (engines whose points are not built from the data).
inline FirstPassage first_passage(const CubicKind& kind, const CurveAut& g,
                                  const std::array<MarkedPoint, 3>& plus,
                                  const std::array<MarkedPoint, 3>& minus,
                                  const OrbitData& data,
                                  std::array<int, 3> max_steps = {0, 0, 0}) {
  FirstPassage fp;
  for (int j = 0; j < 3; ++j) {
    OrbitScan& sc = fp.scan[j];
    const int limit = std::max(data.n[j] - 1, max_steps[j]);
    MarkedPoint q = minus[j];
    for (int k = 0; k <= limit; ++k) {
      if (k > 0) q = aut_apply(kind, g, q);
      sc.points.push_back(q);
      if (sc.hit_k < 0) {
        std::vector<int> hits;
        for (int i = 0; i < 3; ++i)
          if (q.same_location(plus[i])) hits.push_back(i);
        if (!hits.empty()) {
          sc.hit_k = k;
          sc.hit_index = hits[0];
          for (int h : hits)
            if (h == data.sigma(j)) sc.hit_index = h;
          sc.hit_multiple = hits.size() > 1;
        }
      }
      // Nothing further is learned past both the designed endpoint and the
      // first hit.
      if (sc.hit_k >= 0 && k >= data.n[j] - 1) break;
    }
    if (static_cast<int>(sc.points.size()) >= data.n[j])
      fp.endpoint_ok[j] = sc.points[data.n[j] - 1].same_location(plus[data.sigma(j)]);
  }

  // Assemble the raw realized data from the first hits.
  bool all_hit = true;
  std::array<int, 3> images{};
  for (int j = 0; j < 3; ++j) {
    if (fp.scan[j].hit_k < 0) all_hit = false;
    else images[j] = fp.scan[j].hit_index;
  }
  if (all_hit && images[0] != images[1] && images[1] != images[2] && images[0] != images[2]) {
    OrbitData r(fp.scan[0].hit_k + 1, fp.scan[1].hit_k + 1, fp.scan[2].hit_k + 1,
                Perm3(images[0], images[1], images[2]));
    fp.matches_requested = (r == data);
    fp.realized = std::move(r);
  }

  // Classify premature hits.
  for (int j = 0; j < 3; ++j) {
    const OrbitScan& sc = fp.scan[j];
    if (sc.hit_k < 0 || sc.hit_k >= data.n[j] - 1) continue;
    const int i = data.sigma.inverse()(sc.hit_index);
    const bool containment = i != j && data.n[i] < data.n[j] &&
                             data.n[i] + data.n[j] == 2 * (sc.hit_k + 1) &&
                             fp.endpoint_ok[j];
    if (containment) {
      fp.findings.push_back("orbit " + std::to_string(j + 1) + " meets p" +
                            std::to_string(sc.hit_index + 1) +
                            "+ at step " + std::to_string(sc.hit_k) +
                            " (contains orbit " + std::to_string(i + 1) +
                            ", blown up first; benign)");
    } else {
      fp.benign_only = false;
    }
  }

  // Coincidence scan over the designed orbit segments; only the first
  // collision of each pair is reported (coincident orbits stay coincident, so
  // later collisions of the same pair say nothing new).
  for (int j = 0; j < 3; ++j) {
    const auto& pj = fp.scan[j].points;
    const int nj = std::min<int>(data.n[j], static_cast<int>(pj.size()));
    for (int j2 = j; j2 < 3; ++j2) {
      const auto& pj2 = fp.scan[j2].points;
      const int nj2 = std::min<int>(data.n[j2], static_cast<int>(pj2.size()));
      bool reported = false;
      for (int k = 0; k < nj && !reported; ++k)
        for (int k2 = (j2 == j ? k + 1 : 0); k2 < nj2; ++k2)
          if (pj[k].same_location(pj2[k2])) {
            std::string what;
            if (j == j2)
              what = "orbit " + std::to_string(j + 1) + " revisits its own step " +
                     std::to_string(k) + " at step " + std::to_string(k2);
            else if (data.n[j] - k == data.n[j2] - k2)
              what = "orbits " + std::to_string(j + 1) + " and " + std::to_string(j2 + 1) +
                     " coincide from steps " + std::to_string(k) + "/" + std::to_string(k2) +
                     " onward (infinitely-near pair)";
            else
              what = "orbit " + std::to_string(j + 1) + " step " + std::to_string(k) +
                     " collides with orbit " + std::to_string(j2 + 1) + " step " +
                     std::to_string(k2);
            fp.findings.push_back(std::move(what));
            reported = true;
            break;
          }
    }
  }
  return fp;
}

// ---------------------------------------------------------------------------
// Certificate audit: everything a Realized certificate promises, re-checked
// from scratch.  Returns human-readable problems; empty means sound.

inline std::vector<std::string> certificate_problems(const RealizationCertificate& cert) {
  std::vector<std::string> problems;
  if (cert.status != RealizeStatus::Realized) {
    if (cert.reason.empty())
      problems.push_back("non-realized certificate carries no reason");
    return problems;
  }
  try {
    validate_aut(cert.kind, cert.aut);
  } catch (const std::exception& e) {
    problems.push_back(std::string("automorphism invalid: ") + e.what());
    return problems;
  }

  QCResult qc = quadratic_constraints(cert.kind, cert.aut, cert.plus);
  if (!qc.ok) {
    problems.push_back("quadratic constraints fail: " + qc.diagnostics);
    return problems;
  }
  for (int j = 0; j < 3; ++j)
    if (!qc.minus[j].same_location(cert.minus[j]))
      problems.push_back("minus point " + std::to_string(j + 1) +
                         " disagrees with the constraint system: expected " +
                         qc.minus[j].str() + ", certificate has " + cert.minus[j].str());

  FirstPassage fp = first_passage(cert.kind, cert.aut, cert.plus, cert.minus, cert.data);
  for (int j = 0; j < 3; ++j) {
    if (!fp.endpoint_ok[j])
      problems.push_back("orbit " + std::to_string(j + 1) + " does not end at p" +
                         std::to_string(cert.data.sigma(j) + 1) + "+");
    const auto& expect = fp.scan[j].points;
    const auto& have = cert.orbits[j];
    if (static_cast<int>(have.size()) != cert.data.n[j])
      problems.push_back("orbit " + std::to_string(j + 1) + " has " +
                         std::to_string(have.size()) + " points, expected " +
                         std::to_string(cert.data.n[j]));
    else
      for (int k = 0; k < cert.data.n[j]; ++k)
        if (!(have[k] == expect[k])) {
          problems.push_back("orbit " + std::to_string(j + 1) + " diverges at step " +
                             std::to_string(k));
          break;
        }
  }
  if (!fp.benign_only)
    problems.push_back("an orbit meets I(f) prematurely (not the benign containment case)");
  return problems;
}

// ---------------------------------------------------------------------------
// The certificate of the inverse transformation.  f^-1 exchanges the roles
// of the indeterminacy sets (I(f^-1) = f(exceptional lines) = {p_j^-}), acts
// on the cubic by g^-1, and runs each orbit backwards: from
// g^{n_j - 1}(p_j^-) = p_{sigma(j)}^+ one gets g^{-(m_i - 1)}(p_i^-') =
// p_{sigma^{-1}(i)}^+' with p^+' = p^-, p^-' = p^+ and m_i = n_{sigma^{-1}(i)}.

inline RealizationCertificate inverse_certificate(const RealizationCertificate& cert) {
  RealizationCertificate inv;
  inv.kind = cert.kind;
  inv.aut = aut_inverse(cert.kind, cert.aut);
  inv.plus = cert.minus;
  inv.minus = cert.plus;
  const Perm3 si = cert.data.sigma.inverse();
  inv.data = OrbitData(cert.data.n[si(0)], cert.data.n[si(1)], cert.data.n[si(2)], si);
  for (int j = 0; j < 3; ++j) {
    inv.orbits[j].clear();
    MarkedPoint p = inv.minus[j];
    for (int k = 0; k < inv.data.n[j]; ++k) {
      inv.orbits[j].push_back(p);
      p = aut_apply(cert.kind, inv.aut, p);
    }
  }
  inv.status = cert.status;
  inv.reason = cert.reason;
  inv.root_index = cert.root_index;
  inv.notes = cert.notes;
  inv.notes.push_back("inverse of " + cert.data.str());
  return inv;
}

}  // namespace cremona
