#pragma once

// Plane models and charts for the embeddable cubic kinds.  Each supported
// kind gets a fixed cubic in P^2 and per-component affine parametrizations
// identifying C_reg with the abstract marked-point group:
//
//   cusp         y z^2 = x^3      value t         -> [t : t^3 : 1]
//   concurrent   x y (x - y) = 0  comp 0, value t -> [0 : 1 : t]
//                                 comp 1, value t -> [1 : 0 : t]
//                                 comp 2, value t -> [1 : 1 : -t]
//   triangle     x y z = 0        comp 0, value t -> [0 : 1 : t]
//                                 comp 1, value t -> [t : 0 : 1]
//                                 comp 2, value t -> [1 : -t : 0]
//   conic-secant z (x y - z^2)=0  comp 0 (line),  value t -> [1 : -t : 0]
//                                 comp 1 (conic), value t -> [t^2 : 1 : t]
//
// The parametrizations are normalized so that three points form a line cut
// exactly when is_degree_d_cut(kind, pts, 1) holds: additive kinds sum to 0,
// multiplicative kinds multiply to 1 (the sign twists on triangle comp 2 and
// the concurrent third coordinate exist for precisely this reason), and the
// per-component origins (value 0, resp. 1) together form a line cut.  Values
// embed exactly when they are chart-rational (Rat for additive kinds, MulRat
// for multiplicative ones) and numerically otherwise (NFElem through its
// complex embedding, CRat through v -> e^{2 pi i v}).  The numeric core is
// templated on the complex scalar so residual checks can escalate from
// double to 50-digit precision without changing formulas.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cremona/numfield.hpp"
#include "cremona/pic.hpp"

namespace cremona {

using ProjPointQ = std::array<Rat, 3>;  // exact homogeneous coordinates
using ProjPoint = std::array<std::complex<double>, 3>;
using ProjPoint50 = std::array<CComplex50, 3>;

inline bool embeddable_kind(const CubicKind& k) {
  switch (k.type) {
    case CubicType::Cusp:
    case CubicType::Triangle:
    case CubicType::Concurrent:
    case CubicType::ConicSecant:
      return true;
    default:
      return false;
  }
}

namespace detail {

[[noreturn]] inline void unsupported_embed(const CubicKind& k) {
  throw std::invalid_argument("embed: no plane chart for kind '" + k.str() +
                              "' (torus, node and conic-tangent embeddings are out of scope)");
}

inline void check_comp(const CubicKind& k, int comp) {
  if (comp < 0 || comp >= k.num_components())
    throw std::invalid_argument("embed: component index " + std::to_string(comp) +
                                " out of range for kind '" + k.str() + "'");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact charts (rational parameter -> rational homogeneous coordinates).

inline ProjPointQ chart_point_exact(const CubicKind& k, int comp, const Rat& t) {
  detail::check_comp(k, comp);
  switch (k.type) {
    case CubicType::Cusp:
      return {t, t * t * t, Rat(1)};
    case CubicType::Concurrent:
      if (comp == 0) return {Rat(0), Rat(1), t};
      if (comp == 1) return {Rat(1), Rat(0), t};
      return {Rat(1), Rat(1), Rat(-t)};
    case CubicType::Triangle:
      if (comp == 0) return {Rat(0), Rat(1), t};
      if (comp == 1) return {t, Rat(0), Rat(1)};
      return {Rat(1), Rat(-t), Rat(0)};
    case CubicType::ConicSecant:
      if (comp == 0) return {Rat(1), Rat(-t), Rat(0)};
      return {t * t, Rat(1), t};
    default:
      detail::unsupported_embed(k);
  }
}

// Exact embedding of a marked point whose value is chart-rational: Rat on the
// additive kinds, MulRat on the multiplicative ones.  Returns nullopt when
// the value needs a numeric embedding (NFElem, CRat).
inline std::optional<ProjPointQ> embed_exact(const CubicKind& k, const MarkedPoint& p) {
  if (!embeddable_kind(k)) detail::unsupported_embed(k);
  if (k.rank() == 0) {
    if (auto* v = std::get_if<Rat>(&p.val)) return chart_point_exact(k, p.comp, *v);
    return std::nullopt;
  }
  if (auto* v = std::get_if<MulRat>(&p.val)) return chart_point_exact(k, p.comp, v->t);
  return std::nullopt;
}

// 3x3 determinant of homogeneous coordinate rows, exact.
inline Rat det3(const ProjPointQ& a, const ProjPointQ& b, const ProjPointQ& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// ---------------------------------------------------------------------------
// Numeric charts, templated on the complex scalar.

namespace geom {

template <class C>
C rat_to(const Rat& v) {
  using R = typename C::value_type;
  if constexpr (std::is_same_v<C, std::complex<double>>) {
    return C(v.get_d(), 0.0);
  } else {
    return C(R(v.get_num().get_str()) / R(v.get_den().get_str()));
  }
}

// Numeric value of a Pic coordinate in the chart scale: additive values map
// to themselves, rank-1 values map to the multiplicative coordinate
// (e^{2 pi i v} for CRat, t itself for MulRat).
template <class C>
C value_to(const PicValue& v, int root_index = 0) {
  using R = typename C::value_type;
  if (auto* x = std::get_if<Rat>(&v)) return rat_to<C>(*x);
  if (auto* x = std::get_if<NFElem>(&v)) {
    const CComplex50 z = x->embed(root_index);
    if constexpr (std::is_same_v<C, std::complex<double>>)
      return C(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    else
      return z;
  }
  if (auto* x = std::get_if<CRat>(&v)) {
    using std::acos;
    using std::cos;
    using std::exp;
    using std::sin;
    const R two_pi = 2 * acos(R(-1));
    const R ang = two_pi * rat_to<C>(x->re).real();
    const R mod = exp(-two_pi * rat_to<C>(x->im).real());
    return C(mod * cos(ang), mod * sin(ang));
  }
  if (auto* x = std::get_if<MulRat>(&v)) return rat_to<C>(x->t);
  throw std::invalid_argument("embed: lattice values have no plane chart");
}

template <class C>
std::array<C, 3> chart_point_c(const CubicKind& k, int comp, const C& t) {
  detail::check_comp(k, comp);
  const C zero(0), one(1);
  switch (k.type) {
    case CubicType::Cusp:
      return {t, t * t * t, one};
    case CubicType::Concurrent:
      if (comp == 0) return {zero, one, t};
      if (comp == 1) return {one, zero, t};
      return {one, one, -t};
    case CubicType::Triangle:
      if (comp == 0) return {zero, one, t};
      if (comp == 1) return {t, zero, one};
      return {one, -t, zero};
    case CubicType::ConicSecant:
      if (comp == 0) return {one, -t, zero};
      return {t * t, one, t};
    default:
      detail::unsupported_embed(k);
  }
}

template <class C>
std::array<C, 3> normalize_c(const std::array<C, 3>& p) {
  using std::abs;
  using R = typename C::value_type;
  R m(0);
  for (const auto& c : p) m = std::max(m, R(abs(c)));
  if (m == 0) throw std::domain_error("normalize: zero vector is not a point");
  return {p[0] / m, p[1] / m, p[2] / m};
}

template <class C>
std::array<C, 3> cross_c(const std::array<C, 3>& a, const std::array<C, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Projective distance: norm of the cross product of normalized
// representatives; 0 iff the points agree in P^2.
template <class C>
typename C::value_type distance_c(const std::array<C, 3>& a, const std::array<C, 3>& b) {
  using std::norm;
  using std::sqrt;
  using R = typename C::value_type;
  const auto u = normalize_c(a), v = normalize_c(b);
  const auto w = cross_c(u, v);
  R nu(0), nv(0), nw(0);
  for (int i = 0; i < 3; ++i) {
    nu += R(norm(u[i]));
    nv += R(norm(v[i]));
    nw += R(norm(w[i]));
  }
  return sqrt(nw / (nu * nv));
}

// Defining cubic form of the embedded model, evaluated at p.
template <class C>
C cubic_form_c(const CubicKind& k, const std::array<C, 3>& p) {
  const auto &x = p[0], &y = p[1], &z = p[2];
  switch (k.type) {
    case CubicType::Cusp:
      return x * x * x - y * z * z;
    case CubicType::Concurrent:
      return x * y * (x - y);
    case CubicType::Triangle:
      return x * y * z;
    case CubicType::ConicSecant:
      return z * (x * y - z * z);
    default:
      detail::unsupported_embed(k);
  }
}

template <class C>
C multiplier_to(const Multiplier& a, int root_index) {
  if (auto* s = std::get_if<int>(&a)) return C(*s);
  if (auto* r = std::get_if<Rat>(&a)) return rat_to<C>(*r);
  if (auto* f = std::get_if<NFElem>(&a)) {
    const CComplex50 z = f->embed(root_index);
    if constexpr (std::is_same_v<C, std::complex<double>>)
      return C(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    else
      return z;
  }
  throw std::invalid_argument("embed: lattice multipliers have no plane chart");
}

inline int multiplier_sign(const Multiplier& a) {
  if (auto* s = std::get_if<int>(&a)) {
    if (*s == 1 || *s == -1) return *s;
  } else if (auto* r = std::get_if<Rat>(&a)) {
    if (*r == 1) return 1;
    if (*r == -1) return -1;
  }
  throw std::invalid_argument("embed: rank-1 multiplier must be +-1");
}

// Mirrors aut_apply on numeric chart values: (comp, t) -> (tau(comp), t')
// with t' = a t + b[comp] on additive kinds and t' = t^{+-1} * b[comp] on
// multiplicative ones.
template <class C>
std::pair<int, C> aut_value(const CubicKind& k, const CurveAut& g, int comp, const C& t,
                            int root_index = 0) {
  detail::check_comp(k, comp);
  const C b = value_to<C>(g.b[comp], root_index);
  C out;
  if (k.rank() == 0) {
    out = multiplier_to<C>(g.a, root_index) * t + b;
  } else {
    out = (multiplier_sign(g.a) == 1 ? t : C(1) / t) * b;
  }
  return {g.tau(comp), out};
}

}  // namespace geom

// Double-precision entry points (the working precision of the map pipeline).

inline std::complex<double> value_numeric(const PicValue& v, int root_index = 0) {
  return geom::value_to<std::complex<double>>(v, root_index);
}

inline ProjPoint chart_point(const CubicKind& k, int comp, std::complex<double> t) {
  return geom::chart_point_c(k, comp, t);
}

inline ProjPoint embed_point(const CubicKind& k, const MarkedPoint& p, int root_index = 0) {
  if (!embeddable_kind(k)) detail::unsupported_embed(k);
  return chart_point(k, p.comp, value_numeric(p.val, root_index));
}

inline ProjPoint50 embed_point50(const CubicKind& k, const MarkedPoint& p, int root_index = 0) {
  if (!embeddable_kind(k)) detail::unsupported_embed(k);
  return geom::chart_point_c(k, p.comp, geom::value_to<CComplex50>(p.val, root_index));
}

inline ProjPoint proj_normalize(const ProjPoint& p) { return geom::normalize_c(p); }

inline ProjPoint proj_cross(const ProjPoint& a, const ProjPoint& b) {
  return geom::cross_c(a, b);
}

inline double proj_distance(const ProjPoint& a, const ProjPoint& b) {
  return geom::distance_c(a, b);
}

inline std::complex<double> cubic_form(const CubicKind& k, const ProjPoint& p) {
  return geom::cubic_form_c(k, p);
}

// ---------------------------------------------------------------------------
// Chart inversion: identify the component of a numeric point on the embedded
// curve and recover the chart value.  The point must be reasonably far from
// the singular locus for the result to be well conditioned.

inline std::pair<int, std::complex<double>> chart_value(const CubicKind& k, const ProjPoint& q) {
  const ProjPoint p = proj_normalize(q);
  const auto &x = p[0], &y = p[1], &z = p[2];
  switch (k.type) {
    case CubicType::Cusp: {
      if (std::abs(z) < 1e-12)
        throw std::domain_error("chart_value: the cusp [0:1:0] lies outside the chart");
      return {0, x / z};
    }
    case CubicType::Concurrent: {
      const double ax = std::abs(x), ay = std::abs(y), axy = std::abs(x - y);
      if (ax <= ay && ax <= axy) return {0, z / y};
      if (ay <= axy) return {1, z / x};
      return {2, -z / x};
    }
    case CubicType::Triangle: {
      const double ax = std::abs(x), ay = std::abs(y), az = std::abs(z);
      if (ax <= ay && ax <= az) return {0, z / y};
      if (ay <= az) return {1, x / z};
      return {2, -y / x};
    }
    case CubicType::ConicSecant: {
      const double aline = std::abs(z), aconic = std::abs(x * y - z * z);
      if (aline <= aconic) return {0, -y / x};
      return {1, z / y};
    }
    default:
      detail::unsupported_embed(k);
  }
}

// Numeric curve action at working precision; see geom::aut_value.
inline std::pair<int, std::complex<double>> aut_apply_numeric(const CubicKind& k,
                                                              const CurveAut& g, int comp,
                                                              std::complex<double> t,
                                                              int root_index = 0) {
  return geom::aut_value<std::complex<double>>(k, g, comp, t, root_index);
}

}  // namespace cremona
