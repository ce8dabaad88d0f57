#pragma once

// Exact models of Pic^0(C) and the group structure on the regular locus of a
// reduced plane cubic.  A value lives in one of three groups depending on
// the singularity type:
//   rank 2:  C/Gamma with Gamma a full lattice   -> pair of rationals mod 1
//   rank 1:  C/Z (isomorphic to C*)              -> rational re mod 1 + rational im,
//            or, alternatively, the multiplicative chart parameter itself as
//            an exact nonzero rational (useful when the plane embedding must
//            stay rational); the two representations never mix silently
//   rank 0:  C                                   -> rational or number-field scalar
// Marked points carry the component index; components add in Z/r, so the
// regular locus is modeled as Pic^0(C) x Z/r exactly.

#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cremona/numfield.hpp"
#include "cremona/perm3.hpp"
#include "cremona/rat.hpp"

namespace cremona {

// ---------------------------------------------------------------------------
// Curve kinds

enum class CubicType {
  TorusSquare,
  TorusHex,
  TorusGeneric,
  Node,
  Cusp,
  Triangle,
  Concurrent,
  ConicSecant,
  ConicTangent,
};

struct CubicKind {
  CubicType type = CubicType::Cusp;

  CubicKind() = default;
  CubicKind(CubicType t) : type(t) {}

  bool operator==(const CubicKind&) const = default;

  int rank() const {
    switch (type) {
      case CubicType::TorusSquare:
      case CubicType::TorusHex:
      case CubicType::TorusGeneric: return 2;
      case CubicType::Node:
      case CubicType::Triangle:
      case CubicType::ConicSecant: return 1;
      default: return 0;
    }
  }

  // Component degrees, indexed by component.  For the conic+line kinds the
  // line is component 0 and the conic component 1; the Z/2 component group
  // is then compatible with cuts (a degree-d curve meets the conic in 2d and
  // the line in d points, and 2d*1 + d*0 = 0 mod 2).
  std::vector<int> component_degrees() const {
    switch (type) {
      case CubicType::Triangle:
      case CubicType::Concurrent: return {1, 1, 1};
      case CubicType::ConicSecant:
      case CubicType::ConicTangent: return {1, 2};
      default: return {3};
    }
  }

  int num_components() const { return static_cast<int>(component_degrees().size()); }

  std::string str() const {
    switch (type) {
      case CubicType::TorusSquare: return "torus-square";
      case CubicType::TorusHex: return "torus-hex";
      case CubicType::TorusGeneric: return "torus-generic";
      case CubicType::Node: return "node";
      case CubicType::Cusp: return "cusp";
      case CubicType::Triangle: return "triangle";
      case CubicType::Concurrent: return "concurrent";
      case CubicType::ConicSecant: return "conic-secant";
      case CubicType::ConicTangent: return "conic-tangent";
    }
    return "?";
  }

  static CubicKind parse(const std::string& s) {
    for (CubicType t : {CubicType::TorusSquare, CubicType::TorusHex, CubicType::TorusGeneric,
                        CubicType::Node, CubicType::Cusp, CubicType::Triangle,
                        CubicType::Concurrent, CubicType::ConicSecant, CubicType::ConicTangent})
      if (CubicKind(t).str() == s) return CubicKind(t);
    throw std::invalid_argument("CubicKind: unknown kind '" + s + "'");
  }
};

// ---------------------------------------------------------------------------
// Pic^0 values

struct Lat2 {
  Rat x, y;  // coordinates in the lattice basis, canonical in [0,1)
  Lat2() : x(0), y(0) {}
  Lat2(Rat px, Rat py) : x(mod1(px)), y(mod1(py)) {}
  bool operator==(const Lat2&) const = default;
};

struct CRat {
  Rat re, im;  // element re + im*i of C/Z, re canonical in [0,1)
  CRat() : re(0), im(0) {}
  CRat(Rat r, Rat i = Rat(0)) : re(mod1(r)), im(std::move(i)) {}
  bool operator==(const CRat&) const = default;
};

struct MulRat {
  Rat t;  // multiplicative coordinate in Q*, identity t = 1
  MulRat() : t(1) {}
  explicit MulRat(Rat v) : t(std::move(v)) {
    if (t == 0) throw std::invalid_argument("MulRat: zero is not a unit");
  }
  bool operator==(const MulRat&) const = default;
};

using PicValue = std::variant<Rat, NFElem, Lat2, CRat, MulRat>;

inline bool rep_matches_rank(const PicValue& v, int rank) {
  switch (rank) {
    case 2: return std::holds_alternative<Lat2>(v);
    case 1: return std::holds_alternative<CRat>(v) || std::holds_alternative<MulRat>(v);
    default:
      return std::holds_alternative<Rat>(v) || std::holds_alternative<NFElem>(v);
  }
}

namespace detail {
[[noreturn]] inline void rep_mismatch(const char* op) {
  throw std::invalid_argument(std::string(op) +
                              ": incompatible Pic value representations");
}
}  // namespace detail

inline PicValue pic_add(const PicValue& a, const PicValue& b) {
  if (auto* x = std::get_if<Rat>(&a)) {
    if (auto* y = std::get_if<Rat>(&b)) return Rat(*x + *y);
    if (auto* y = std::get_if<NFElem>(&b)) return NFElem(y->field(), *x) + *y;
  } else if (auto* x = std::get_if<NFElem>(&a)) {
    if (auto* y = std::get_if<Rat>(&b)) return *x + NFElem(x->field(), *y);
    if (auto* y = std::get_if<NFElem>(&b)) return *x + *y;
  } else if (auto* x = std::get_if<Lat2>(&a)) {
    if (auto* y = std::get_if<Lat2>(&b)) return Lat2(x->x + y->x, x->y + y->y);
  } else if (auto* x = std::get_if<CRat>(&a)) {
    if (auto* y = std::get_if<CRat>(&b)) return CRat(x->re + y->re, x->im + y->im);
  } else if (auto* x = std::get_if<MulRat>(&a)) {
    if (auto* y = std::get_if<MulRat>(&b)) return MulRat(x->t * y->t);
  }
  detail::rep_mismatch("pic_add");
}

inline PicValue pic_neg(const PicValue& a) {
  if (auto* x = std::get_if<Rat>(&a)) return Rat(-*x);
  if (auto* x = std::get_if<NFElem>(&a)) return -*x;
  if (auto* x = std::get_if<Lat2>(&a)) return Lat2(-x->x, -x->y);
  if (auto* x = std::get_if<CRat>(&a)) return CRat(-x->re, -x->im);
  return MulRat(1 / std::get<MulRat>(a).t);
}

inline PicValue pic_sub(const PicValue& a, const PicValue& b) { return pic_add(a, pic_neg(b)); }

inline PicValue pic_smul(long n, const PicValue& a) {
  if (auto* x = std::get_if<Rat>(&a)) return Rat(Rat(n) * *x);
  if (auto* x = std::get_if<NFElem>(&a)) return NFElem(x->field(), Rat(n)) * *x;
  if (auto* x = std::get_if<Lat2>(&a)) return Lat2(Rat(n) * x->x, Rat(n) * x->y);
  if (auto* x = std::get_if<CRat>(&a)) return CRat(Rat(n) * x->re, Rat(n) * x->im);
  return MulRat(pow_rat(std::get<MulRat>(a).t, n));
}

inline bool pic_is_zero(const PicValue& a) {
  if (auto* x = std::get_if<Rat>(&a)) return *x == 0;
  if (auto* x = std::get_if<NFElem>(&a)) return x->is_zero();
  if (auto* x = std::get_if<Lat2>(&a)) return x->x == 0 && x->y == 0;
  if (auto* x = std::get_if<CRat>(&a)) return x->re == 0 && x->im == 0;
  return std::get<MulRat>(a).t == 1;
}

inline bool pic_eq(const PicValue& a, const PicValue& b) { return pic_is_zero(pic_sub(a, b)); }

inline PicValue pic_zero_like(const PicValue& a) {
  if (std::get_if<Rat>(&a)) return Rat(0);
  if (auto* x = std::get_if<NFElem>(&a)) return NFElem(x->field(), Rat(0));
  if (std::get_if<Lat2>(&a)) return Lat2();
  if (std::get_if<CRat>(&a)) return CRat();
  return MulRat();
}

inline std::string pic_str(const PicValue& a) {
  if (auto* x = std::get_if<Rat>(&a)) return rat_str(*x);
  if (auto* x = std::get_if<NFElem>(&a)) return x->str();
  if (auto* x = std::get_if<Lat2>(&a)) return "(" + rat_str(x->x) + ", " + rat_str(x->y) + ")";
  if (auto* x = std::get_if<CRat>(&a)) {
    if (x->im == 0) return rat_str(x->re);
    return rat_str(x->re) + (x->im > 0 ? "+" : "") + rat_str(x->im) + "i";
  }
  return "t=" + rat_str(std::get<MulRat>(a).t);
}

// Kind-checked wrappers (the spec-level entry points).
inline PicValue pic_add(const CubicKind& k, const PicValue& a, const PicValue& b) {
  if (!rep_matches_rank(a, k.rank()) || !rep_matches_rank(b, k.rank()))
    detail::rep_mismatch("pic_add");
  return pic_add(a, b);
}
inline PicValue pic_neg(const CubicKind& k, const PicValue& a) {
  if (!rep_matches_rank(a, k.rank())) detail::rep_mismatch("pic_neg");
  return pic_neg(a);
}
inline PicValue pic_smul(const CubicKind& k, long n, const PicValue& a) {
  if (!rep_matches_rank(a, k.rank())) detail::rep_mismatch("pic_smul");
  return pic_smul(n, a);
}

// ---------------------------------------------------------------------------
// Marked points: component index + Pic^0 value.  near_level is the ordered
// infinitely-near tag: 0 for a plane point, l > 0 for a point on the l-th
// exceptional level over the same marked location.

struct MarkedPoint {
  int comp = 0;
  PicValue val = Rat(0);
  int near_level = 0;

  MarkedPoint() = default;
  MarkedPoint(int c, PicValue v, int lvl = 0) : comp(c), val(std::move(v)), near_level(lvl) {}

  bool operator==(const MarkedPoint& o) const {
    return comp == o.comp && near_level == o.near_level && pic_eq(val, o.val);
  }
  bool same_location(const MarkedPoint& o) const {
    return comp == o.comp && pic_eq(val, o.val);
  }
  std::string str() const {
    std::string s = "(V" + std::to_string(comp) + ", " + pic_str(val) + ")";
    if (near_level > 0) s += "[near " + std::to_string(near_level) + "]";
    return s;
  }
};

inline MarkedPoint mark_add(const CubicKind& k, const MarkedPoint& p, const MarkedPoint& q) {
  const int r = k.num_components();
  return MarkedPoint((p.comp + q.comp) % r, pic_add(k, p.val, q.val));
}
inline MarkedPoint mark_neg(const CubicKind& k, const MarkedPoint& p) {
  const int r = k.num_components();
  return MarkedPoint(((-p.comp) % r + r) % r, pic_neg(k, p.val));
}

// Degree-d cut criterion: each component V carries exactly d*deg(V) of the
// 3d points and the value sum is the identity.
inline bool is_degree_d_cut(const CubicKind& k, const std::vector<MarkedPoint>& pts, int d) {
  if (d < 1) throw std::invalid_argument("is_degree_d_cut: d must be positive");
  if (static_cast<int>(pts.size()) != 3 * d)
    throw std::invalid_argument("is_degree_d_cut: expected exactly 3d points");
  const std::vector<int> degs = k.component_degrees();
  std::vector<int> count(degs.size(), 0);
  for (const MarkedPoint& p : pts) {
    if (p.comp < 0 || p.comp >= static_cast<int>(degs.size()))
      throw std::invalid_argument("is_degree_d_cut: bad component index");
    ++count[p.comp];
  }
  for (size_t i = 0; i < degs.size(); ++i)
    if (count[i] != d * degs[i]) return false;
  PicValue sum = pic_zero_like(pts[0].val);
  for (const MarkedPoint& p : pts) sum = pic_add(k, sum, p.val);
  return pic_is_zero(sum);
}

// ---------------------------------------------------------------------------
// Multipliers.  A rank-2 multiplier is a lattice unit (an integer 2x2 matrix
// with aGamma = Gamma), a rank-1 multiplier is +-1, a rank-0 multiplier is an
// arbitrary nonzero scalar of the working field.  A plain int +-1 is accepted
// for every kind.

struct Mat2 {
  long a = 1, b = 0, c = 0, d = 1;  // row-major [[a, b], [c, d]]

  bool operator==(const Mat2&) const = default;
  long det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const {
    const long dt = det();
    if (dt != 1 && dt != -1)
      throw std::invalid_argument("Mat2: lattice multiplier must have det +-1");
    return Mat2{d / dt, -b / dt, -c / dt, a / dt};
  }
  Mat2 pow(long e) const {
    Mat2 base = e < 0 ? inverse() : *this, acc;
    for (long k = e < 0 ? -e : e; k > 0; k >>= 1) {
      if (k & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }
  Lat2 apply(const Lat2& v) const {
    return Lat2(Rat(a) * v.x + Rat(b) * v.y, Rat(c) * v.x + Rat(d) * v.y);
  }
  static Mat2 identity() { return {}; }
  static Mat2 minus_identity() { return Mat2{-1, 0, 0, -1}; }
  // Multiplication by i on Z + iZ in the basis (1, i).
  static Mat2 square_i() { return Mat2{0, -1, 1, 0}; }
  // Multiplication by omega = e^{i pi/3} on Z + omega Z in the basis (1, omega).
  static Mat2 hex_omega() { return Mat2{0, -1, 1, 1}; }
  std::string str() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) +
           "," + std::to_string(d) + "]]";
  }
};

using Multiplier = std::variant<int, Rat, NFElem, Mat2>;

inline PicValue mult_apply(const Multiplier& m, const PicValue& v) {
  if (auto* s = std::get_if<int>(&m)) {
    if (*s == 1) return v;
    if (*s == -1) return pic_neg(v);
    throw std::invalid_argument("multiplier: integer multiplier must be +-1");
  }
  if (auto* r = std::get_if<Rat>(&m)) {
    if (auto* x = std::get_if<Rat>(&v)) return Rat(*r * *x);
    if (auto* x = std::get_if<NFElem>(&v)) return NFElem(x->field(), *r) * *x;
    detail::rep_mismatch("mult_apply");
  }
  if (auto* f = std::get_if<NFElem>(&m)) {
    if (auto* x = std::get_if<Rat>(&v)) return *f * NFElem(f->field(), *x);
    if (auto* x = std::get_if<NFElem>(&v)) return *f * *x;
    detail::rep_mismatch("mult_apply");
  }
  const Mat2& M = std::get<Mat2>(m);
  if (auto* x = std::get_if<Lat2>(&v)) return M.apply(*x);
  detail::rep_mismatch("mult_apply");
}

inline Multiplier mult_inverse(const Multiplier& m) {
  if (auto* s = std::get_if<int>(&m)) return *s;
  if (auto* r = std::get_if<Rat>(&m)) {
    if (*r == 0) throw std::domain_error("multiplier: zero is not invertible");
    return Rat(1 / *r);
  }
  if (auto* f = std::get_if<NFElem>(&m)) return f->inverse();
  return std::get<Mat2>(m).inverse();
}

inline bool mult_is_one(const Multiplier& m) {
  if (auto* s = std::get_if<int>(&m)) return *s == 1;
  if (auto* r = std::get_if<Rat>(&m)) return *r == 1;
  if (auto* f = std::get_if<NFElem>(&m)) return f->is_rational() && f->rational_part() == 1;
  return std::get<Mat2>(m) == Mat2::identity();
}

inline std::string mult_str(const Multiplier& m) {
  if (auto* s = std::get_if<int>(&m)) return std::to_string(*s);
  if (auto* r = std::get_if<Rat>(&m)) return rat_str(*r);
  if (auto* f = std::get_if<NFElem>(&m)) return f->str();
  return std::get<Mat2>(m).str();
}

struct MultiplierGroup {
  bool all_scalars = false;          // true for the cuspidal-type kinds: any a in C*
  std::vector<Multiplier> elements;  // the finite list otherwise
};

inline MultiplierGroup multiplier_group(const CubicKind& k) {
  MultiplierGroup g;
  switch (k.type) {
    case CubicType::TorusSquare:
      for (int j = 0; j < 4; ++j) g.elements.push_back(Mat2::square_i().pow(j));
      break;
    case CubicType::TorusHex:
      for (int j = 0; j < 6; ++j) g.elements.push_back(Mat2::hex_omega().pow(j));
      break;
    case CubicType::TorusGeneric:
      g.elements = {Multiplier(Mat2::identity()), Multiplier(Mat2::minus_identity())};
      break;
    case CubicType::Node:
    case CubicType::Triangle:
    case CubicType::ConicSecant:
      g.elements = {Multiplier(1), Multiplier(-1)};
      break;
    case CubicType::Cusp:
    case CubicType::Concurrent:
    case CubicType::ConicTangent:
      g.all_scalars = true;
      break;
  }
  return g;
}

inline bool is_admissible_multiplier(const CubicKind& k, const Multiplier& m) {
  if (auto* s = std::get_if<int>(&m)) return *s == 1 || *s == -1;
  switch (k.rank()) {
    case 2: {
      if (!std::holds_alternative<Mat2>(m)) return false;
      for (const Multiplier& e : multiplier_group(k).elements)
        if (std::get<Mat2>(e) == std::get<Mat2>(m)) return true;
      return false;
    }
    case 1:
      return false;  // only +-1, already handled above
    default:
      if (auto* r = std::get_if<Rat>(&m)) return *r != 0;
      if (auto* f = std::get_if<NFElem>(&m)) return !f->is_zero();
      return false;
  }
}

// ---------------------------------------------------------------------------
// Curve automorphisms (a, tau, b_V) and the quadratic-map constraint system.

struct CurveAut {
  Multiplier a = 1;
  Perm3 tau;                // permutation of component indices (fixes i >= r)
  std::vector<PicValue> b;  // translations indexed by source component

  std::string str() const {
    std::string s = "a=" + mult_str(a) + ", tau=" + tau.str() + ", b=(";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + pic_str(b[i]);
    return s + ")";
  }
};

inline void validate_aut(const CubicKind& k, const CurveAut& g) {
  const int r = k.num_components();
  if (static_cast<int>(g.b.size()) != r)
    throw std::invalid_argument("CurveAut: expected one translation per component");
  for (const PicValue& v : g.b)
    if (!rep_matches_rank(v, k.rank()))
      throw std::invalid_argument("CurveAut: translation representation does not match kind");
  for (int i = r; i < 3; ++i)
    if (g.tau(i) != i)
      throw std::invalid_argument("CurveAut: tau moves a nonexistent component");
  if (!is_admissible_multiplier(k, g.a))
    throw std::invalid_argument("CurveAut: inadmissible multiplier for this kind");
}

inline MarkedPoint aut_apply(const CubicKind& k, const CurveAut& g, const MarkedPoint& p) {
  return MarkedPoint(g.tau(p.comp), pic_add(k, mult_apply(g.a, p.val), g.b[p.comp]),
                     p.near_level);
}

inline CurveAut aut_inverse(const CubicKind&, const CurveAut& g) {
  CurveAut inv;
  inv.a = mult_inverse(g.a);
  inv.tau = g.tau.inverse();
  inv.b.resize(g.b.size());
  for (size_t i = 0; i < g.b.size(); ++i)
    inv.b[i] = pic_neg(mult_apply(inv.a, g.b[inv.tau(static_cast<int>(i))]));
  return inv;
}

// Sum over components of deg(V) * b_V; the automorphism extends to a plane
// projectivity iff this vanishes.  Automorphisms induced by honest quadratic
// maps always report false here: quadauts condition 2 forces the sum nonzero.
inline PicValue aut_translation_sum(const CubicKind& k, const CurveAut& g) {
  const std::vector<int> degs = k.component_degrees();
  PicValue sum = pic_zero_like(g.b.at(0));
  for (size_t i = 0; i < degs.size(); ++i)
    sum = pic_add(k, sum, pic_smul(k, degs[i], g.b[i]));
  return sum;
}

inline bool aut_is_projective(const CubicKind& k, const CurveAut& g) {
  validate_aut(k, g);
  return pic_is_zero(aut_translation_sum(k, g));
}

// Component of the third intersection of C with the line through two cut
// points of components ci, ck (valid whenever such a line exists).
inline int third_component(const CubicKind& k, int ci, int ck) {
  switch (k.num_components()) {
    case 1: return 0;
    case 2: return (ci + ck) % 2;
    default: return ((6 - ci - ck) % 3 + 3) % 3;
  }
}

struct QCResult {
  bool ok = false;
  std::string diagnostics;              // first violated condition, empty when ok
  std::array<MarkedPoint, 3> minus;     // computed via conditions 3 and 4
  std::array<bool, 3> ambiguous{};      // condition-3 line through coincident points
};

// The constraint system of the quadratic-transformation theorem: verifies
// the component-count condition (1) and the nonzero-sum condition (2), then
// computes the inverse indeterminacy points from condition (4) with
// component placement per condition (3).  The summed identity
// sum p_j^- = -sum deg(tau V) b_V is asserted on every ok output.
inline QCResult quadratic_constraints(const CubicKind& k, const CurveAut& g,
                                      const std::array<MarkedPoint, 3>& plus) {
  validate_aut(k, g);
  QCResult res;
  const std::vector<int> degs = k.component_degrees();
  const int r = static_cast<int>(degs.size());
  for (const MarkedPoint& p : plus) {
    if (p.comp < 0 || p.comp >= r)
      throw std::invalid_argument("quadratic_constraints: bad component index");
    if (!rep_matches_rank(p.val, k.rank()))
      throw std::invalid_argument("quadratic_constraints: value representation mismatch");
  }

  // Condition 1 (plus side): #{j : p_j^+ in V} = 2 deg V - deg tau(V).
  std::vector<int> count(r, 0);
  for (const MarkedPoint& p : plus) ++count[p.comp];
  for (int i = 0; i < r; ++i)
    if (count[i] != 2 * degs[i] - degs[g.tau(i)]) {
      res.diagnostics = "condition 1: component " + std::to_string(i) + " carries " +
                        std::to_string(count[i]) + " base points, expected " +
                        std::to_string(2 * degs[i] - degs[g.tau(i)]);
      return res;
    }

  // Condition 2: sum p_j^+ = a^{-1} sum deg(V) b_V != 0.
  const PicValue bsum = aut_translation_sum(k, g);
  PicValue psum = pic_zero_like(plus[0].val);
  for (const MarkedPoint& p : plus) psum = pic_add(k, psum, p.val);
  const PicValue expected = mult_apply(mult_inverse(g.a), bsum);
  if (!pic_eq(psum, expected)) {
    res.diagnostics = "condition 2: sum of base points is " + pic_str(psum) +
                      ", expected a^-1 * sum deg(V) b_V = " + pic_str(expected);
    return res;
  }
  if (pic_is_zero(psum)) {
    res.diagnostics = "condition 2: base points sum to zero (collinear)";
    return res;
  }

  // Condition 4 values, condition 3 components.
  for (int j = 0; j < 3; ++j) {
    const int i = (j + 1) % 3, l = (j + 2) % 3;
    if (plus[i].same_location(plus[l])) res.ambiguous[j] = true;
    const int cthird = third_component(k, plus[i].comp, plus[l].comp);
    PicValue mv = pic_add(k, mult_apply(g.a, plus[j].val),
                          pic_sub(g.b[plus[j].comp], bsum));
    res.minus[j] = MarkedPoint(g.tau(cthird), std::move(mv));
  }

  // Closing identity (sum of condition 4 over j combined with condition 2).
  PicValue msum = pic_zero_like(res.minus[0].val);
  PicValue tausum = pic_zero_like(g.b[0]);
  for (const MarkedPoint& p : res.minus) msum = pic_add(k, msum, p.val);
  for (int i = 0; i < r; ++i)
    tausum = pic_add(k, tausum, pic_smul(k, degs[g.tau(i)], g.b[i]));
  if (!pic_eq(msum, pic_neg(tausum)))
    throw std::logic_error("quadratic_constraints: closing identity violated");

  // Condition 1 (minus side) as a consistency diagnostic.
  std::vector<int> mcount(r, 0);
  for (const MarkedPoint& p : res.minus) ++mcount[p.comp];
  const Perm3 tinv = g.tau.inverse();
  for (int i = 0; i < r; ++i)
    if (mcount[i] != 2 * degs[i] - degs[tinv(i)]) {
      res.diagnostics = "condition 1 (minus side): component " + std::to_string(i) +
                        " receives " + std::to_string(mcount[i]) + " points, expected " +
                        std::to_string(2 * degs[i] - degs[tinv(i)]);
      return res;
    }

  res.ok = true;
  return res;
}

}  // namespace cremona
