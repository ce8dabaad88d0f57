#pragma once

// Quadratic transformations properly fixing three concurrent lines.  The
// smooth locus is three disjoint copies of C; a quadratic map permutes the
// lines by some s in S_3 and acts on values as v -> a v - 1/3.  Base points
// sit one per line (p_j+ on V_j, p_j- on V_{s(j)}), so orbit j travels the
// component cycle of s and can close up at p_{sigma(j)}+ only when
// s^{n_j}(j) = sigma(j) for every j.  That combinatorial criterion decides
// realizability; the values then come from the same cycle relations as in
// the cuspidal case, in an exact field Q[a].

#include <optional>
#include <string>

#include "cremona/certificate.hpp"
#include "cremona/scalar_orbit.hpp"

namespace cremona {

// The component permutation a realizing map must induce, if any.
inline std::optional<Perm3> concurrent_component_permutation(const OrbitData& d) {
  for (const Perm3& s : Perm3::all()) {
    bool ok = true;
    for (int j = 0; j < 3 && ok; ++j) ok = s.pow(d.n[j])(j) == d.sigma(j);
    if (ok) return s;
  }
  return std::nullopt;
}

namespace detail {

// One tentative concurrent-lines configuration for a fixed multiplier field.
// Values are normalized about the fixed value z = 1/(3(a-1)) on each line:
// x = v - z turns the map into multiplication by a, and the base-point
// relation x_j- = a x_j+ + 1 closes the sigma-cycles.
inline RealizationCertificate concurrent_candidate(const OrbitData& data,
                                                   const MultiplierField& mf, const Perm3& s,
                                                   int root_index) {
  if (root_index < 0 || root_index >= static_cast<int>(mf.field->roots().size()))
    throw std::out_of_range("realize_concurrent: root index " + std::to_string(root_index) +
                            " out of range for field degree " +
                            std::to_string(mf.field->degree()));
  RealizationCertificate cert;
  cert.kind = CubicKind(CubicType::Concurrent);
  cert.data = data;
  cert.root_index = root_index;

  const NFElem& a = mf.a;
  const NFElem one(mf.field, Rat(1));
  const NFElem z = NFElem(mf.field, Rat(1, 3)) / (a - one);
  if (!nf_eval(mf.char_poly, a).is_zero())
    throw std::logic_error("realize_concurrent: multiplier does not satisfy the "
                           "characteristic polynomial");
  cert.notes.push_back("multiplier satisfies the characteristic polynomial exactly in Q[a]");
  cert.notes.push_back("lines are permuted by s = " + s.str());
  if (mf.unit_root_order > 0)
    cert.notes.push_back("multiplier is a primitive root of unity of order " +
                         std::to_string(mf.unit_root_order) +
                         " (no root off the unit circle exists for this data)");

  const auto x = unwind_translation_cycles(data, a, one);
  cert.aut.a = a;
  cert.aut.tau = s;
  const PicValue bv(NFElem(mf.field, Rat(-1, 3)));
  cert.aut.b = {bv, bv, bv};
  for (int j = 0; j < 3; ++j) {
    cert.minus[j] = MarkedPoint(s(j), x[j] + z);
    cert.plus[data.sigma(j)] = MarkedPoint(data.sigma(j), a.pow(data.n[j] - 1) * x[j] + z);
  }
  return cert;
}

}  // namespace detail

inline RealizationCertificate realize_concurrent(const OrbitData& data, int root_index = 0) {
  const CubicKind kind(CubicType::Concurrent);
  const std::vector<MultiplierField> candidates = multiplier_fields(data);

  const std::optional<Perm3> s = concurrent_component_permutation(data);
  if (!s) {
    RealizationCertificate cert;
    cert.kind = kind;
    cert.data = data;
    cert.root_index = root_index;
    cert.status = RealizeStatus::Obstructed;
    cert.reason = "no component permutation works: a realizing map must move the lines by "
                  "some s in S_3 with s^{n_j}(j) = sigma(j) for every j, and none of the six "
                  "satisfies this for " + data.str();
    return cert;
  }

  RealizationCertificate cert;
  for (size_t c = 0; c < candidates.size(); ++c) {
    cert = detail::concurrent_candidate(data, candidates[c], *s, root_index);
    if (auto zo = zero_entropy_obstruction(data))
      cert.notes.push_back(std::string("orbit data forces zero entropy (") +
                           obstruction_name(*zo) + ")");

    FirstPassage fp = first_passage(kind, cert.aut, cert.plus, cert.minus, data);
    cert.orbits = {fp.scan[0].points, fp.scan[1].points, fp.scan[2].points};
    for (std::string& f : fp.findings) cert.notes.push_back(std::move(f));

    const bool endpoints = fp.endpoint_ok[0] && fp.endpoint_ok[1] && fp.endpoint_ok[2];
    if (endpoints && fp.benign_only) {
      cert.status = RealizeStatus::Realized;
      return cert;
    }
    if (candidates[c].unit_root_order == 0)
      throw std::logic_error("realize_concurrent: simulation contradicts the component "
                             "criterion for " + data.str());
    if (c + 1 == candidates.size()) {
      cert.status = RealizeStatus::TentativeOnly;
      cert.reason = "the component criterion holds but only root-of-unity multipliers exist, "
                    "and exact first passage fails for each of them";
    }
  }
  return cert;
}

}  // namespace cremona
