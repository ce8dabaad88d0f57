#pragma once

// From certificate to plane map.  A realized certificate pins down the
// quadratic transformation completely: the six indeterminacy points sit on
// the embedded cubic, the curve automorphism gives the action on the cubic
// itself, and a quadratic Cremona map is determined by its behaviour on the
// pencil of lines through one base point.  eval_point makes that
// determination effective:
//
//   the line L = p v p_1^+ meets the cubic in p_1^+ and two residual points
//   x, y; f maps L projectively onto the line through f(x), f(y), and the
//   image p_1^- of the contracted line p_2^+ v p_3^+; three point pairs
//   determine f|_L, hence f(p).
//
// fit_quadratic_map turns sampled evaluations into the 18 homogeneous
// coefficients by a nullspace fit, and verify_map re-checks everything a
// quadratic lift promises (base points blown up, cubic preserved, orbit
// segments walked, exceptional lines contracted) with escalation to
// 50-digit arithmetic when double precision cannot certify a pass.
//
// Precision note: the orbit walk re-applies the fitted map n_j - 1 times,
// and perturbations of the coefficients that break curve invariance grow
// geometrically in the direction normal to the cubic.  The samples fed to
// the nullspace fit are therefore evaluated internally in 50-digit
// arithmetic, so the assembled rows are exact to the last double bit and
// the fitted coefficients inherit only unavoidable representation error.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cremona/certificate.hpp"
#include "cremona/embed.hpp"
#include "cremona/pic.hpp"

namespace cremona {

// p is too close to the degenerate locus of the pencil construction
// (indeterminacy points, lines through cubic singularities, tangent lines);
// samplers should re-draw and try again.
struct NearDegenerate : std::domain_error {
  using std::domain_error::domain_error;
};

// The certificate cannot support a pencil-of-lines evaluation at all:
// infinitely-near, coincident, or collinear indeterminacy points.
struct DegenerateFit : std::domain_error {
  using std::domain_error::domain_error;
};

// The sampled linear system does not isolate a one-dimensional nullspace
// (too few usable samples); resampling with more points may help.
struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The sampled linear system has no nullspace at all: the certificate and the
// evaluator disagree, i.e. no quadratic map matches the samples.
struct NoNullspace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A plane quadratic map by its three coefficient rows; coeff[i][m] is the
// coefficient of monomial m in the i-th coordinate form, monomials ordered
// x^2, xy, xz, y^2, yz, z^2.  After fitting, the coefficient of largest
// modulus is scaled to 1.
struct QuadraticMap {
  std::array<std::array<std::complex<double>, 6>, 3> coeff{};
  double fit_gap = 0.0;     // ratio of the two smallest singular values
  std::string provenance;   // the certificate this map realizes

  template <class C>
  static std::array<C, 6> monomials(const std::array<C, 3>& p) {
    const auto &x = p[0], &y = p[1], &z = p[2];
    return {x * x, x * y, x * z, y * y, y * z, z * z};
  }

  template <class C>
  std::array<C, 3> apply(const std::array<C, 3>& p) const {
    const std::array<C, 6> m = monomials(p);
    std::array<C, 3> out{};
    for (int i = 0; i < 3; ++i) {
      C acc(0);
      for (int k = 0; k < 6; ++k) acc += C(coeff[i][k].real(), coeff[i][k].imag()) * m[k];
      out[i] = acc;
    }
    return out;
  }

  ProjPoint operator()(const ProjPoint& p) const { return apply(p); }
};

namespace detail {

template <class C>
std::complex<double> to_cd(const C& z) {
  if constexpr (std::is_same_v<C, std::complex<double>>)
    return z;
  else
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class C>
double mag(const C& z) {
  using std::abs;
  return static_cast<double>(abs(z));
}

// Solve s = alpha*X + beta*Y on the best-conditioned pair of coordinates.
// All three points must be (numerically) on one line for the answer to mean
// anything; the caller guarantees that.
template <class C>
std::pair<C, C> span_coords(const std::array<C, 3>& s, const std::array<C, 3>& X,
                            const std::array<C, 3>& Y) {
  int bi = 0, bj = 1;
  double best = -1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double d = mag(X[i] * Y[j] - X[j] * Y[i]);
      if (d > best) best = d, bi = i, bj = j;
    }
  const C D = X[bi] * Y[bj] - X[bj] * Y[bi];
  if (mag(D) < 1e-13)
    throw NearDegenerate("eval_point: residual intersections nearly coincide");
  const C alpha = (s[bi] * Y[bj] - s[bj] * Y[bi]) / D;
  const C beta = (X[bi] * s[bj] - X[bj] * s[bi]) / D;
  return {alpha, beta};
}

template <class C>
struct ChartRootT {
  int comp;
  C t;
};

// All intersections of the line with dual vector l with the embedded cubic,
// as chart values.  Throws NearDegenerate when the line passes (numerically)
// through a singular point of the cubic, where the chart breaks down.  The
// cusp case seeds the cubic roots from a double companion matrix and
// polishes them by Newton iteration at working precision.
template <class C>
std::vector<ChartRootT<C>> line_cubic_roots(const CubicKind& k, const std::array<C, 3>& l) {
  double scale = 0.0;
  for (const C& c : l) scale = std::max(scale, mag(c));
  const double tiny = 1e-9 * scale;
  std::vector<ChartRootT<C>> roots;
  switch (k.type) {
    case CubicType::Cusp: {
      // l0 t + l1 t^3 + l2 = 0.
      if (mag(l[1]) < tiny) throw NearDegenerate("eval_point: line passes through the cusp");
      const C c1 = l[0] / l[1], c0 = l[2] / l[1];
      Eigen::Matrix3cd M = Eigen::Matrix3cd::Zero();
      M(0, 2) = -to_cd(c0);
      M(1, 0) = 1.0;
      M(1, 2) = -to_cd(c1);
      M(2, 1) = 1.0;
      Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(M);
      for (int i = 0; i < 3; ++i) {
        const std::complex<double> seed = es.eigenvalues()(i);
        C r(seed.real(), seed.imag());
        for (int it = 0; it < 4; ++it) {  // quadratic convergence to working precision
          const C f = r * r * r + c1 * r + c0;
          const C df = C(3) * r * r + c1;
          if (mag(df) < 1e-14) break;
          r -= f / df;
        }
        roots.push_back({0, r});
      }
      return roots;
    }
    case CubicType::Concurrent: {
      if (mag(l[2]) < tiny)
        throw NearDegenerate("eval_point: line passes through the point of concurrency");
      roots.push_back({0, -l[1] / l[2]});
      roots.push_back({1, -l[0] / l[2]});
      roots.push_back({2, (l[0] + l[1]) / l[2]});
      return roots;
    }
    case CubicType::Triangle: {
      if (mag(l[0]) < tiny || mag(l[1]) < tiny || mag(l[2]) < tiny)
        throw NearDegenerate("eval_point: line passes through a vertex of the triangle");
      roots.push_back({0, -l[1] / l[2]});
      roots.push_back({1, -l[2] / l[0]});
      roots.push_back({2, l[0] / l[1]});
      return roots;
    }
    case CubicType::ConicSecant: {
      // Both singular points (the two conic/line crossings) are excluded by
      // requiring l0, l1 away from zero: l.[1:0:0] = l0, l.[0:1:0] = l1.
      if (mag(l[0]) < tiny || mag(l[1]) < tiny)
        throw NearDegenerate("eval_point: line passes through a conic/line crossing");
      roots.push_back({0, l[0] / l[1]});
      // Conic: l0 t^2 + l2 t + l1 = 0, solved stably via the root product.
      using std::sqrt;
      const C disc = sqrt(l[2] * l[2] - C(4) * l[0] * l[1]);
      const C q = mag(l[2] + disc) >= mag(l[2] - disc) ? -(l[2] + disc) / C(2)
                                                       : -(l[2] - disc) / C(2);
      if (mag(q) < tiny) throw NearDegenerate("eval_point: line meets the conic degenerately");
      roots.push_back({1, q / l[0]});
      roots.push_back({1, l[1] / q});
      return roots;
    }
    default:
      unsupported_embed(k);
  }
}

inline void require_plane_points(const RealizationCertificate& cert) {
  for (int j = 0; j < 3; ++j)
    if (cert.plus[j].near_level > 0 || cert.minus[j].near_level > 0)
      throw DegenerateFit(
          "certificate has infinitely-near indeterminacy points; no single plane "
          "quadratic map realizes it");
}

// The pencil-of-lines evaluation at working precision C.
template <class C>
std::array<C, 3> eval_point_c(const RealizationCertificate& cert, const std::array<C, 3>& p,
                              int ri) {
  using PP = std::array<C, 3>;
  const CubicKind& kind = cert.kind;
  if (!embeddable_kind(kind)) unsupported_embed(kind);
  require_plane_points(cert);

  std::array<PP, 3> plus, minus;
  for (int j = 0; j < 3; ++j) {
    plus[j] = geom::normalize_c(
        geom::chart_point_c(kind, cert.plus[j].comp, geom::value_to<C>(cert.plus[j].val, ri)));
    minus[j] = geom::normalize_c(
        geom::chart_point_c(kind, cert.minus[j].comp, geom::value_to<C>(cert.minus[j].val, ri)));
  }
  const PP ph = geom::normalize_c(p);
  for (int j = 0; j < 3; ++j)
    if (static_cast<double>(geom::distance_c(ph, plus[j])) < 1e-9)
      throw NearDegenerate("eval_point: p is an indeterminacy point");

  // The pencil line through p and the residual intersections x, y.
  const PP l = geom::cross_c(ph, plus[0]);
  std::vector<ChartRootT<C>> roots = line_cubic_roots(kind, l);

  // Remove p_1^+'s own intersection.
  const C t1 = geom::value_to<C>(cert.plus[0].val, ri);
  const int c1 = cert.plus[0].comp;
  int own = -1;
  double best = 1e300;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].comp != c1) continue;
    const double d = mag(roots[i].t - t1);
    if (d < best) best = d, own = static_cast<int>(i);
  }
  if (own < 0 || best > 1e-5 * (1.0 + mag(t1)))
    throw NearDegenerate("eval_point: could not separate p_1^+ on the pencil line");
  roots.erase(roots.begin() + own);
  const ChartRootT<C> rx = roots[0], ry = roots[1];
  const double sep = 1e-7 * (1.0 + mag(rx.t) + mag(ry.t));
  if (rx.comp == ry.comp && mag(rx.t - ry.t) < sep)
    throw NearDegenerate("eval_point: pencil line is tangent to the cubic");
  for (const auto& r : {rx, ry})
    if (r.comp == c1 && mag(r.t - t1) < 1e-7 * (1.0 + mag(t1)))
      throw NearDegenerate("eval_point: residual intersection collides with p_1^+");

  const PP X = geom::normalize_c(geom::chart_point_c(kind, rx.comp, rx.t));
  const PP Y = geom::normalize_c(geom::chart_point_c(kind, ry.comp, ry.t));

  // Push x, y through the curve automorphism.
  const auto fx = geom::aut_value<C>(kind, cert.aut, rx.comp, rx.t, ri);
  const auto fy = geom::aut_value<C>(kind, cert.aut, ry.comp, ry.t, ri);
  const PP Xi = geom::normalize_c(geom::chart_point_c(kind, fx.first, fx.second));
  const PP Yi = geom::normalize_c(geom::chart_point_c(kind, fy.first, fy.second));

  // The contracted line p_2^+ v p_3^+ meets L at q, and f(q) = p_1^-.
  const PP m = geom::cross_c(plus[1], plus[2]);
  PP q = geom::cross_c(l, m);
  {
    double n = 0;
    for (const C& c : q) n = std::max(n, mag(c));
    if (n < 1e-12)
      throw NearDegenerate("eval_point: pencil line coincides with an exceptional line");
    q = geom::normalize_c(q);
  }

  const auto [aq, bq] = span_coords(q, X, Y);
  if (mag(aq) < 1e-13 || mag(bq) < 1e-13)
    throw NearDegenerate("eval_point: contracted-line intersection degenerates");
  const C c = bq / aq;
  if (mag(c) < 1e-6 || mag(c) > 1e6)
    throw NearDegenerate("eval_point: ill-conditioned cross-ratio on the pencil line");
  const auto [a1, b1] = span_coords(minus[0], Xi, Yi);
  if (mag(a1) < 1e-13 || mag(b1) < 1e-13)
    throw NearDegenerate("eval_point: p_1^- degenerates on the image line");
  const C cp = b1 / a1;
  if (mag(cp) < 1e-6 || mag(cp) > 1e6)
    throw NearDegenerate("eval_point: ill-conditioned cross-ratio on the image line");

  // f(alpha X + beta Y) = alpha X' + (c'/c) beta Y'.
  const auto [ap, bp] = span_coords(ph, X, Y);
  const C mu = cp / c;
  PP out;
  for (int i = 0; i < 3; ++i) out[i] = ap * Xi[i] + mu * bp * Yi[i];
  return geom::normalize_c(out);
}

}  // namespace detail

// Evaluate the certificate's quadratic transformation at a plane point p,
// through the pencil of lines at p_1^+.  Throws NearDegenerate when p is too
// close to the degenerate locus; callers that sample re-draw on that signal.
inline ProjPoint eval_point(const RealizationCertificate& cert, const ProjPoint& p,
                            int root_index = -1) {
  const int ri = root_index >= 0 ? root_index : cert.root_index;
  return detail::eval_point_c<std::complex<double>>(cert, p, ri);
}

// The same evaluation carried out in 50-digit arithmetic.
inline ProjPoint50 eval_point50(const RealizationCertificate& cert, const ProjPoint50& p,
                                int root_index = -1) {
  const int ri = root_index >= 0 ? root_index : cert.root_index;
  return detail::eval_point_c<CComplex50>(cert, p, ri);
}

// ---------------------------------------------------------------------------
// Coefficient fit.

inline QuadraticMap fit_quadratic_map(const RealizationCertificate& cert, int samples = 16,
                                      std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
  using Cx = std::complex<double>;
  const CubicKind& kind = cert.kind;
  if (!embeddable_kind(kind)) detail::unsupported_embed(kind);
  if (samples < 12)
    throw RankDeficient("fit_quadratic_map: " + std::to_string(samples) +
                        " samples underdetermine the 18-coefficient system (need >= 12)");
  detail::require_plane_points(cert);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (cert.plus[i].same_location(cert.plus[j]))
        throw DegenerateFit("fit_quadratic_map: coincident forward indeterminacy points");
      if (cert.minus[i].same_location(cert.minus[j]))
        throw DegenerateFit("fit_quadratic_map: coincident backward indeterminacy points");
    }
  const int ri = cert.root_index;
  std::array<ProjPoint, 3> plus, minus;
  for (int j = 0; j < 3; ++j) {
    plus[j] = proj_normalize(embed_point(kind, cert.plus[j], ri));
    minus[j] = proj_normalize(embed_point(kind, cert.minus[j], ri));
  }
  auto coldet = [](const std::array<ProjPoint, 3>& P) {
    return std::abs(P[0][0] * (P[1][1] * P[2][2] - P[1][2] * P[2][1]) -
                    P[0][1] * (P[1][0] * P[2][2] - P[1][2] * P[2][0]) +
                    P[0][2] * (P[1][0] * P[2][1] - P[1][1] * P[2][0]));
  };
  if (coldet(plus) < 1e-10)
    throw DegenerateFit("fit_quadratic_map: forward indeterminacy points are collinear");
  if (coldet(minus) < 1e-10)
    throw DegenerateFit("fit_quadratic_map: backward indeterminacy points are collinear");

  // Sample plane points, evaluate their images in 50-digit arithmetic (see
  // the precision note at the top), and assemble two cross-product rows per
  // sample: (w x Q)_c = w_{c+1} Q(p)_{c+2} - w_{c+2} Q(p)_{c+1} = 0, dropping
  // the row indexed by w's largest coordinate.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2 * samples, 18);
  int got = 0, attempts = 0;
  while (got < samples) {
    if (++attempts > 64 * samples)
      throw RankDeficient("fit_quadratic_map: could not sample away from the degenerate locus");
    const double px = U(rng), py = U(rng);
    ProjPoint50 w50;
    try {
      const ProjPoint50 p50{CComplex50(px), CComplex50(py), CComplex50(1)};
      w50 = detail::eval_point_c<CComplex50>(cert, p50, ri);
    } catch (const std::domain_error&) {
      continue;
    }
    const ProjPoint w{detail::to_cd(w50[0]), detail::to_cd(w50[1]), detail::to_cd(w50[2])};
    const ProjPoint ph = proj_normalize(ProjPoint{Cx(px), Cx(py), Cx(1.0)});
    const std::array<Cx, 6> mono = QuadraticMap::monomials(ph);
    int drop = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(w[i]) > std::abs(w[drop])) drop = i;
    int r = 2 * got;
    for (int c = 0; c < 3; ++c) {
      if (c == drop) continue;
      const int i1 = (c + 1) % 3, i2 = (c + 2) % 3;
      for (int k = 0; k < 6; ++k) {
        A(r, 6 * i2 + k) += w[i1] * mono[k];
        A(r, 6 * i1 + k) -= w[i2] * mono[k];
      }
      ++r;
    }
    ++got;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv(17) > 1e-7 * sv(0))
    throw NoNullspace(
        "fit_quadratic_map: sampled system has no nullspace; the certificate does not "
        "describe a quadratic map");
  const double gap = sv(16) / std::max(sv(17), 1e-300);
  if (gap < 1e6)
    throw RankDeficient(
        "fit_quadratic_map: nullspace is not one-dimensional at the configured gap "
        "threshold; resample with more points");
  const Eigen::VectorXcd v = svd.matrixV().col(17);
  QuadraticMap map;
  map.fit_gap = gap;
  map.provenance = kind.str() + " " + cert.data.str();
  Cx lead(0.0);
  for (int i = 0; i < 18; ++i)
    if (std::abs(v(i)) > std::abs(lead)) lead = v(i);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 6; ++k) map.coeff[i][k] = v(6 * i + k) / lead;
  return map;
}

// ---------------------------------------------------------------------------
// Verification.

struct MapReport {
  double base_residual = 0.0;         // max |Q(p_j^+)|
  double curve_residual = 0.0;        // max |F(Q(p))| over cubic samples
  double orbit_residual = 0.0;        // max distance of walked orbit endpoints
  double contraction_residual = 0.0;  // max distance of contracted lines to p_j^-
  bool pass = false;
  bool escalated = false;  // residuals were recomputed at 50-digit precision
  std::vector<std::string> notes;

  double worst() const {
    return std::max(std::max(base_residual, curve_residual),
                    std::max(orbit_residual, contraction_residual));
  }
};

namespace detail {

template <class C>
void compute_residuals(const QuadraticMap& map, const RealizationCertificate& cert,
                       MapReport& rep) {
  using PP = std::array<C, 3>;
  const CubicKind& kind = cert.kind;
  const int ri = cert.root_index;
  auto embed_c = [&](const MarkedPoint& mp) {
    return geom::normalize_c(geom::chart_point_c(kind, mp.comp, geom::value_to<C>(mp.val, ri)));
  };

  std::array<PP, 3> plus, minus;
  for (int j = 0; j < 3; ++j) {
    plus[j] = embed_c(cert.plus[j]);
    minus[j] = embed_c(cert.minus[j]);
  }

  // Base points are blown up: all three forms vanish.
  double base = 0.0;
  for (int j = 0; j < 3; ++j) {
    const PP w = map.apply(plus[j]);
    for (const C& ww : w) base = std::max(base, mag(ww));
  }
  rep.base_residual = base;

  // The cubic is preserved: F(Q(p)) = 0 on 100 deterministic cubic samples.
  double curve = 0.0;
  const int r = kind.num_components();
  const double radii[4] = {0.5, 0.8, 1.25, 2.0};
  for (int k = 0; k < 100; ++k) {
    const int comp = k % r;
    const int i = k / r;
    const double rho = radii[i % 4];
    const double th = 6.283185307179586 * (0.05 + 0.0737 * i);
    const C t(rho * std::cos(th), rho * std::sin(th));
    const PP p = geom::normalize_c(geom::chart_point_c(kind, comp, t));
    const PP w = geom::normalize_c(map.apply(p));
    curve = std::max(curve, mag(geom::cubic_form_c(kind, w)));
  }
  rep.curve_residual = curve;

  // Orbits: n_j - 1 iterates carry p_j^- to p_{sigma(j)}^+.
  double orbit = 0.0;
  for (int j = 0; j < 3; ++j) {
    PP v = minus[j];
    for (int k = 0; k + 1 < cert.data.n[j]; ++k) v = geom::normalize_c(map.apply(v));
    orbit = std::max(orbit, static_cast<double>(geom::distance_c(v, plus[cert.data.sigma(j)])));
  }
  rep.orbit_residual = orbit;

  // Exceptional lines: p_i^+ v p_k^+ is contracted to p_j^-.
  double contr = 0.0;
  const double svals[5] = {0.15, 0.35, 0.55, 0.75, 0.95};
  for (int j = 0; j < 3; ++j) {
    const int i = (j + 1) % 3, k = (j + 2) % 3;
    for (double s : svals) {
      PP u;
      for (int c = 0; c < 3; ++c) u[c] = plus[i][c] + C(s) * plus[k][c];
      const PP w = map.apply(geom::normalize_c(u));
      contr = std::max(contr, static_cast<double>(geom::distance_c(w, minus[j])));
    }
  }
  rep.contraction_residual = contr;
}

}  // namespace detail

inline MapReport verify_map(const QuadraticMap& map, const RealizationCertificate& cert,
                            double tol = 1e-8) {
  if (!embeddable_kind(cert.kind)) detail::unsupported_embed(cert.kind);
  MapReport rep;
  detail::compute_residuals<std::complex<double>>(map, cert, rep);
  rep.pass = rep.worst() <= tol;
  if (!rep.pass) {
    detail::compute_residuals<CComplex50>(map, cert, rep);
    rep.escalated = true;
    rep.notes.push_back("double-precision check failed; residuals recomputed at 50 digits");
    rep.pass = rep.worst() <= tol;
  }
  if (!rep.pass) {
    if (rep.base_residual > tol)
      rep.notes.push_back("base-point check fails: some form does not vanish on I(f)");
    if (rep.curve_residual > tol)
      rep.notes.push_back("curve-invariance check fails: the image leaves the cubic");
    if (rep.orbit_residual > tol)
      rep.notes.push_back("orbit check fails: a walked orbit misses its endpoint");
    if (rep.contraction_residual > tol)
      rep.notes.push_back("contraction check fails: an exceptional line is not collapsed");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Image-of-a-line check: a quadratic Cremona map sends a generic line to a
// genuine conic through all three backward indeterminacy points.  Fits a
// single conic through sampled images; `residual` says how well a conic
// fits (relative smallest singular value), `gap` how uniquely (ratio of the
// two smallest singular values -- a degenerate image leaves a whole space
// of matching conics, collapsing the gap), and `base_residual` whether that
// conic passes through the three p_j^-.

struct ConicFit {
  double residual = 0.0;
  double gap = 0.0;
  double base_residual = 0.0;
};

inline ConicFit line_image_conic(const QuadraticMap& map, const RealizationCertificate& cert,
                                 const ProjPoint& A, const ProjPoint& B, int nsamples = 24) {
  using Cx = std::complex<double>;
  if (nsamples < 8) throw std::invalid_argument("line_image_conic: need at least 8 samples");
  if (!embeddable_kind(cert.kind)) detail::unsupported_embed(cert.kind);
  std::vector<std::array<Cx, 6>> rows;
  rows.reserve(nsamples);
  for (int k = 0; rows.size() < static_cast<size_t>(nsamples) && k < 4 * nsamples; ++k) {
    const double s = -3.0 + 6.0 * k / (4.0 * nsamples - 1);
    ProjPoint u;
    for (int c = 0; c < 3; ++c) u[c] = A[c] + Cx(s, 0.0) * B[c];
    double n = 0.0;
    for (const Cx& c : u) n = std::max(n, std::abs(c));
    if (n < 1e-12) continue;
    const ProjPoint w = map(proj_normalize(u));
    double nw = 0.0;
    for (const Cx& c : w) nw = std::max(nw, std::abs(c));
    if (nw < 1e-12) continue;  // sample hit a base point
    rows.push_back(QuadraticMap::monomials(proj_normalize(w)));
  }
  if (rows.size() < 8)
    throw std::domain_error("line_image_conic: line lies in the degenerate locus");
  Eigen::MatrixXcd M(rows.size(), 6);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < 6; ++j) M(static_cast<int>(i), j) = rows[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  ConicFit out;
  out.residual = sv(5) / std::max(sv(0), 1e-300);
  out.gap = sv(4) / std::max(sv(5), 1e-300);
  const Eigen::VectorXcd conic = svd.matrixV().col(5);  // unit-norm coefficients
  for (int j = 0; j < 3; ++j) {
    const ProjPoint q =
        proj_normalize(embed_point(cert.kind, cert.minus[j], cert.root_index));
    const std::array<Cx, 6> mq = QuadraticMap::monomials(q);
    Cx acc(0.0);
    for (int m = 0; m < 6; ++m) acc += conic(m) * mq[m];
    out.base_residual = std::max(out.base_residual, std::abs(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Base-locus exactness: the three fitted forms must not share a linear
// factor, or the "quadratic" map would collapse to degree <= 1.  A common
// factor forces the three restrictions to any line to share a root; a
// genuine quadratic map restricted to a random line shares none (the shared
// roots are exactly the pullbacks of base points).  Returns true only when
// every sampled line exhibits a common root.

inline bool forms_share_linear_factor(const QuadraticMap& map, int trials = 5,
                                      std::uint64_t seed = 0xfeedface1234ULL) {
  using Cx = std::complex<double>;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int trial = 0; trial < trials; ++trial) {
    const ProjPoint A{Cx(U(rng), U(rng)), Cx(U(rng), U(rng)), Cx(1.0, 0.0)};
    const ProjPoint B{Cx(U(rng), U(rng)), Cx(U(rng), U(rng)), Cx(1.0, 0.0)};
    // Restrict each form to A + sB: q_i(s) = a_i s^2 + b_i s + c_i.
    std::array<std::array<Cx, 3>, 3> q;  // [form][power]
    const ProjPoint QA = map(A), QB = map(B);
    ProjPoint AB;
    for (int c = 0; c < 3; ++c) AB[c] = A[c] + B[c];
    const ProjPoint QAB = map(AB);
    for (int i = 0; i < 3; ++i) {
      q[i][0] = QA[i];                       // c_i
      q[i][2] = QB[i];                       // a_i
      q[i][1] = QAB[i] - QA[i] - QB[i];      // b_i by polarization
    }
    // Roots of q_0, checked against q_1, q_2.
    const Cx a = q[0][2], b = q[0][1], c = q[0][0];
    if (std::abs(a) < 1e-12) continue;  // degenerate restriction; try another line
    const Cx disc = std::sqrt(b * b - 4.0 * a * c);
    const Cx den = std::abs(b + disc) >= std::abs(b - disc) ? -(b + disc) / 2.0
                                                            : -(b - disc) / 2.0;
    if (std::abs(den) < 1e-12) continue;
    const Cx r1 = den / a, r2 = c / den;
    bool common = false;
    for (const Cx& r : {r1, r2}) {
      bool all = true;
      for (int i = 1; i < 3; ++i) {
        double scale = 0.0;
        for (const Cx& cc : q[i]) scale = std::max(scale, std::abs(cc));
        const Cx val = (q[i][2] * r + q[i][1]) * r + q[i][0];
        if (std::abs(val) > 1e-8 * scale * (1.0 + std::norm(r))) all = false;
      }
      if (all) common = true;
    }
    if (!common) return false;  // one clean line certifies a trivial common factor
  }
  return true;
}

}  // namespace cremona
