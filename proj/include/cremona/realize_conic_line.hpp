#pragma once

// Realization engine for the cubic that splits into a smooth conic and a
// secant line, z (xy - z^2) = 0.  Both components have multiplicative smooth
// locus; values are complex rationals with real part taken modulo 1, the
// value v standing for e^{2 pi i v}.  Component 0 is the line (degree 1),
// component 1 is the conic (degree 2).
//
// For orbit data whose characteristic polynomial has a root off the unit
// circle, a realizing transformation must have multiplier 1 and fix each
// component: a multiplier of -1 would swap the components and force the two
// translations to agree, making the square of the map the identity on the
// curve.  The degree count 2 deg V - deg tau(V) then puts two forward base
// points p_1^+, p_2^+ on the conic and one, p_3^+, on the line, so sigma
// must fix the index 3 (orbit 3 lives on the line).  Writing t_c and t_l for
// the translations on the conic and the line, the constraint system places
//     p_j^- = p_j^+ - t_c - t_l   (j = 1, 2, on the conic),
//     p_3^- = p_3^+ - 2 t_c       (on the line).
// The engine takes the backward base points and translations as parameters,
// inverts these relations to get I(f), and reads the realized orbit data off
// the exact first-passage walk of each orbit.  Walking one full period of
// the translation (the denominator of its real part) decides hitting, so
// "never returns" is detected exactly.

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "cremona/certificate.hpp"
#include "cremona/orbit_data.hpp"
#include "cremona/pic.hpp"
#include "cremona/rat.hpp"
#include "cremona/spectra.hpp"

namespace cremona {

struct ConicLineParams {
  CRat t_conic;                        // translation on the conic component
  CRat t_line;                         // translation on the line component
  std::array<CRat, 2> minus_on_conic;  // p_1^-, p_2^-
  CRat minus_on_line;                  // p_3^-
};

// The two worked parameter sets shipped with the engine.
inline ConicLineParams conic_line_preset(const std::string& name) {
  if (name == "A" || name == "conicline-A")
    return ConicLineParams{CRat(rat(1, 7)), CRat(rat(3, 7)),
                           {CRat(Rat(0)), CRat(Rat(0), Rat(1))},
                           CRat(rat(-5, 7), Rat(-1))};
  if (name == "B" || name == "conicline-B")
    return ConicLineParams{CRat(rat(3, 13)), CRat(rat(1, 13)),
                           {CRat(rat(8, 13)), CRat(Rat(0))},
                           CRat(rat(12, 13))};
  throw std::invalid_argument("conic_line_preset: unknown preset '" + name +
                              "' (available: A, B)");
}

namespace detail {

// Steps after which the orbit of `start` under translation t provably cannot
// produce a new hit against the plus points on its component.
inline int conic_line_step_bound(const std::array<MarkedPoint, 3>& plus,
                                 const MarkedPoint& start, const CRat& t) {
  constexpr long kCap = 1000000;
  long bound = 0;
  if (t.im == 0) {
    // Real translation: the real part cycles with period den(t.re) while the
    // imaginary part stays put, so one full cycle decides every hit.
    bound = t.re == 0 ? 1 : std::min<long>(t.re.get_den().get_si(), kCap);
  } else {
    // The imaginary parts line up at most once per plus point.
    const Rat im0 = std::get<CRat>(start.val).im;
    for (const MarkedPoint& q : plus) {
      if (q.comp != start.comp) continue;
      Rat k = (std::get<CRat>(q.val).im - im0) / t.im;
      if (k.get_den() == 1 && k >= 0)
        bound = std::max(bound, std::min<long>(k.get_num().get_si(), kCap));
    }
  }
  return static_cast<int>(bound);
}

}  // namespace detail

// Certify the parameter set against the requested data.  The realized orbit
// data is whatever the first-passage walk computes; when that differs from
// the request, the certificate carries the computed data and a note flags
// the difference.
inline RealizationCertificate realize_conic_line(const OrbitData& data,
                                                 const ConicLineParams& prm) {
  if (data.sigma(2) != 2)
    throw ShapeViolation(
        "sigma moves index 3, but the line carries exactly one forward base point "
        "(degree count 2 deg V - deg tau(V)), so orbit 3 must start and end on it");

  RealizationCertificate cert;
  cert.kind = CubicKind{CubicType::ConicSecant};
  cert.data = data;
  cert.aut.a = 1;
  cert.aut.tau = Perm3::identity();
  cert.aut.b = {PicValue(prm.t_line), PicValue(prm.t_conic)};
  cert.minus = {MarkedPoint(1, prm.minus_on_conic[0]),
                MarkedPoint(1, prm.minus_on_conic[1]),
                MarkedPoint(0, prm.minus_on_line)};
  const PicValue both = pic_add(PicValue(prm.t_conic), PicValue(prm.t_line));
  cert.plus = {MarkedPoint(1, pic_add(cert.minus[0].val, both)),
               MarkedPoint(1, pic_add(cert.minus[1].val, both)),
               MarkedPoint(0, pic_add(cert.minus[2].val,
                                      pic_smul(2, PicValue(prm.t_conic))))};
  cert.notes.push_back(
      "multiplier 1 with each component fixed (forced whenever the characteristic "
      "polynomial has a root off the unit circle)");

  // Existence check.  A failure here means no quadratic transformation has
  // these six base points at all; the orbits are still walked and shown so
  // the caller can see what the translations do with the tentative points.
  QCResult qc = quadratic_constraints(cert.kind, cert.aut, cert.plus);
  if (qc.ok) {
    for (int j = 0; j < 3; ++j)
      if (!qc.minus[j].same_location(cert.minus[j]))
        throw std::logic_error("realize_conic_line: constraint inversion mismatch");
  }

  std::array<int, 3> limits{};
  for (int j = 0; j < 3; ++j)
    limits[j] = detail::conic_line_step_bound(
        cert.plus, cert.minus[j], std::get<CRat>(cert.aut.b[cert.minus[j].comp]));
  FirstPassage fp = first_passage(cert.kind, cert.aut, cert.plus, cert.minus, data, limits);

  std::string close_reason;
  if (fp.realized.has_value()) {
    const OrbitData computed = *fp.realized;
    if (!(computed == data)) {
      cert.notes.push_back("requested orbit data " + data.str() +
                           " is not what these parameters give; the certificate "
                           "carries the computed data " + computed.str());
      cert.data = computed;
      fp = first_passage(cert.kind, cert.aut, cert.plus, cert.minus, computed);
    }
    if (auto z = zero_entropy_obstruction(cert.data))
      cert.notes.push_back(std::string("orbit data forces zero entropy (") +
                           obstruction_name(*z) + ")");
  } else {
    for (int j = 0; j < 3; ++j)
      if (fp.scan[j].hit_k < 0)
        close_reason += std::string(close_reason.empty() ? "" : "; ") + "orbit " +
                        std::to_string(j + 1) +
                        " never meets a forward base point (checked one full "
                        "translation period)";
    if (close_reason.empty())
      close_reason = "two orbits first meet the same forward base point, so the "
                     "first hits do not define orbit data";
  }
  for (int j = 0; j < 3; ++j) cert.orbits[j] = fp.scan[j].points;
  for (const std::string& f : fp.findings) cert.notes.push_back(f);

  if (!qc.ok) {
    cert.status = RealizeStatus::Obstructed;
    cert.reason = "no quadratic transformation has these base points: " + qc.diagnostics;
  } else if (!fp.realized.has_value()) {
    cert.status = RealizeStatus::TentativeOnly;
    cert.reason = close_reason;
  } else if (fp.matches_requested && fp.benign_only) {
    cert.status = RealizeStatus::Realized;
  } else {
    cert.status = RealizeStatus::TentativeOnly;
    cert.reason = "an orbit meets a forward base point prematurely";
  }
  return cert;
}

}  // namespace cremona
