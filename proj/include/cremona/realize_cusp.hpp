#pragma once

// Quadratic transformations properly fixing a cuspidal cubic.  The smooth
// locus is the additive group C with the inflection point at 0; a quadratic
// map inducing v -> a v + b realizes orbit data (n_1, n_2, n_3, sigma) when
// the normalized indeterminacy values solve the orbit-closing relations.
// Every value lives in an exact field Q[a], a a root of the characteristic
// polynomial, so realization is certified, not approximated.

#include <optional>
#include <string>

#include "cremona/certificate.hpp"
#include "cremona/scalar_orbit.hpp"

namespace cremona {

// Orbit data whose base-point formulas produce coincident points that sigma
// then permutes with equal remaining lengths; no infinitely-near assignment
// separates such orbits, so the data is never realized on a cuspidal cubic.
inline std::optional<std::string> cusp_shape_obstruction(const OrbitData& d) {
  if (!d.sigma.is_identity() && d.n[0] == d.n[1] && d.n[1] == d.n[2])
    return "all orbit lengths equal with sigma != id: the three base points coincide and "
           "sigma permutes orbits of equal remaining length, which no blowup order separates";
  if (d.sigma.order() == 2) {
    int i = 0;
    while (d.sigma(i) == i) ++i;
    const int j = d.sigma(i);
    if (d.n[i] == d.n[j])
      return "sigma swaps orbits " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
             " of equal length: p" + std::to_string(i + 1) + "- and p" + std::to_string(j + 1) +
             "- coincide and the swapped orbits of equal remaining length cannot be separated";
  }
  return std::nullopt;
}

namespace detail {

// One tentative cuspidal configuration for a fixed multiplier field.
// Values are normalized so the map is multiplication by a: x = v - 1/3.
// Orbit closing gives x_{sigma(j)}+ = a^{n_j - 1} x_j-, and the base-point
// relation x_j- = a x_j+ + (a - 1) closes the cycles.
inline RealizationCertificate cusp_candidate(const OrbitData& data, const MultiplierField& mf,
                                             int root_index) {
  if (root_index < 0 || root_index >= static_cast<int>(mf.field->roots().size()))
    throw std::out_of_range("realize_cusp: root index " + std::to_string(root_index) +
                            " out of range for field degree " +
                            std::to_string(mf.field->degree()));
  RealizationCertificate cert;
  cert.kind = CubicKind(CubicType::Cusp);
  cert.data = data;
  cert.root_index = root_index;

  const NFElem& a = mf.a;
  const NFElem one(mf.field, Rat(1));
  const NFElem third(mf.field, Rat(1, 3));
  if (!nf_eval(mf.char_poly, a).is_zero())
    throw std::logic_error("realize_cusp: multiplier does not satisfy the characteristic "
                           "polynomial");
  cert.notes.push_back("multiplier satisfies the characteristic polynomial exactly in Q[a]");
  if (mf.unit_root_order > 0)
    cert.notes.push_back("multiplier is a primitive root of unity of order " +
                         std::to_string(mf.unit_root_order) +
                         " (no root off the unit circle exists for this data)");

  const auto x = unwind_translation_cycles(data, a, a - one);
  cert.aut.a = a;
  cert.aut.b = {PicValue((one - a) * third)};
  for (int j = 0; j < 3; ++j) {
    cert.minus[j] = MarkedPoint(0, x[j] + third);
    cert.plus[data.sigma(j)] = MarkedPoint(0, a.pow(data.n[j] - 1) * x[j] + third);
  }
  return cert;
}

}  // namespace detail

// Realizes the orbit data by a quadratic map fixing a cuspidal cubic, or
// reports the obstruction.  root_index selects the complex embedding of the
// multiplier (0 = largest modulus); the certificate itself is embedding-free.
// Throws NoSuitableRoot when no root of the characteristic polynomial keeps
// the orbit relations solvable.
inline RealizationCertificate realize_cusp(const OrbitData& data, int root_index = 0) {
  const CubicKind kind(CubicType::Cusp);
  const std::vector<MultiplierField> candidates = multiplier_fields(data);
  const std::optional<std::string> shape = cusp_shape_obstruction(data);

  RealizationCertificate cert;
  for (size_t c = 0; c < candidates.size(); ++c) {
    cert = detail::cusp_candidate(data, candidates[c], root_index);
    if (auto z = zero_entropy_obstruction(data))
      cert.notes.push_back(std::string("orbit data forces zero entropy (") +
                           obstruction_name(*z) + ")");

    FirstPassage fp = first_passage(kind, cert.aut, cert.plus, cert.minus, data);
    cert.orbits = {fp.scan[0].points, fp.scan[1].points, fp.scan[2].points};
    for (std::string& f : fp.findings) cert.notes.push_back(std::move(f));

    if (shape) {
      cert.status = RealizeStatus::Obstructed;
      cert.reason = *shape;
      return cert;
    }
    const bool endpoints = fp.endpoint_ok[0] && fp.endpoint_ok[1] && fp.endpoint_ok[2];
    if (endpoints && fp.benign_only) {
      cert.status = RealizeStatus::Realized;
      return cert;
    }
    if (candidates[c].unit_root_order == 0)
      throw std::logic_error("realize_cusp: simulation contradicts the realization theorem "
                             "for " + data.str());
    if (c + 1 == candidates.size()) {
      cert.status = RealizeStatus::TentativeOnly;
      cert.reason = "the tentative configuration exists only for root-of-unity multipliers, "
                    "and exact first passage fails for each of them";
    }
  }
  return cert;
}

}  // namespace cremona
