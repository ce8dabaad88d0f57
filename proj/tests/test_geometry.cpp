#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "cremona/certificate.hpp"
#include "cremona/embed.hpp"
#include "cremona/planemap.hpp"
#include "cremona/realize_concurrent.hpp"
#include "cremona/realize_conic_line.hpp"
#include "cremona/realize_cusp.hpp"
#include "cremona/realize_torus.hpp"
#include "cremona/realize_triangle.hpp"

using namespace cremona;
using Cx = std::complex<double>;

namespace {

// A nonzero random rational with small numerator/denominator.
Rat rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 23);
  Rat r;
  do {
    r = Rat(num(rng), den(rng));
    r.canonicalize();
  } while (r == 0);
  return r;
}

bool note_contains(const std::vector<std::string>& notes, const std::string& needle) {
  for (const std::string& n : notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

const RealizationCertificate& cusp118() {
  static RealizationCertificate cert = realize_cusp(OrbitData::parse("1,1,8:(123)"));
  return cert;
}

const QuadraticMap& cusp118_map() {
  static QuadraticMap map = fit_quadratic_map(cusp118());
  return map;
}

}  // namespace

// ---------------------------------------------------------------------------
// Charts.

TEST_CASE("chart anchor points land where the equations say", "[geometry][embed]") {
  // Cuspidal cubic y z^2 = x^3 parametrized t -> [t : t^3 : 1].
  const CubicKind cusp{CubicType::Cusp};
  CHECK(chart_point_exact(cusp, 0, Rat(0)) == ProjPointQ{Rat(0), Rat(0), Rat(1)});
  CHECK(chart_point_exact(cusp, 0, Rat(2)) == ProjPointQ{Rat(2), Rat(8), Rat(1)});

  // Conic + secant line z (x y - z^2) = 0; the line is component 0.
  const CubicKind cl{CubicType::ConicSecant};
  CHECK(chart_point_exact(cl, 0, Rat(1)) == ProjPointQ{Rat(1), Rat(-1), Rat(0)});
  CHECK(chart_point_exact(cl, 1, Rat(2)) == ProjPointQ{Rat(4), Rat(1), Rat(2)});

  // Every chart point satisfies its cubic equation, over all four kinds.
  std::mt19937_64 rng(2024);
  for (CubicType ty : {CubicType::Cusp, CubicType::Concurrent, CubicType::Triangle,
                       CubicType::ConicSecant}) {
    const CubicKind k{ty};
    for (int i = 0; i < 40; ++i) {
      const int comp = i % k.num_components();
      const Cx t(0.2 + 0.11 * (i % 7), 0.07 * (i % 5) - 0.1);
      const ProjPoint p = proj_normalize(geom::chart_point_c<Cx>(k, comp, t));
      CHECK(std::abs(cubic_form(k, p)) < 1e-12);
      // chart_value inverts the chart.
      const auto [c2, t2] = chart_value(k, p);
      CHECK(c2 == comp);
      CHECK(std::abs(t2 - t) < 1e-9 * (1.0 + std::abs(t)));
    }
    (void)rng;
  }
}

TEST_CASE("torus kinds have no plane model and refuse to embed", "[geometry][embed]") {
  const CubicKind sq{CubicType::TorusSquare};
  CHECK_THROWS_AS(embed_point(sq, MarkedPoint{0, Lat2{rat(1, 3), rat(1, 4)}, 0}, 0),
                  std::invalid_argument);
  CHECK(!embeddable_kind(sq));
  CHECK(!embeddable_kind(CubicKind{CubicType::TorusHex}));
  CHECK(!embeddable_kind(CubicKind{CubicType::TorusGeneric}));
  CHECK(!embeddable_kind(CubicKind{CubicType::Node}));
}

// ---------------------------------------------------------------------------
// The group law on the cubic is collinearity: a triple with the cut component
// distribution is collinear in the plane exactly when its group sum vanishes.

namespace {

struct TripleSample {
  std::array<MarkedPoint, 3> pts;
};

// Draw a pairwise-distinct triple with the degree-1 cut component counts;
// when `force_cut` the last value is solved from the group identity.
TripleSample draw_triple(const CubicKind& k, std::mt19937_64& rng, bool force_cut) {
  const bool additive = k.type == CubicType::Cusp || k.type == CubicType::Concurrent;
  std::array<int, 3> comps{};
  switch (k.type) {
    case CubicType::Cusp: comps = {0, 0, 0}; break;
    case CubicType::Concurrent: comps = {0, 1, 2}; break;
    case CubicType::Triangle: comps = {0, 1, 2}; break;
    case CubicType::ConicSecant: comps = {0, 1, 1}; break;
    default: throw std::logic_error("draw_triple: unsupported kind");
  }
  while (true) {
    Rat t1 = rand_rat(rng), t2 = rand_rat(rng), t3;
    if (force_cut)
      t3 = additive ? Rat(-(t1 + t2)) : Rat(1) / (t1 * t2);
    else
      t3 = rand_rat(rng);
    if (additive && t3 == 0) continue;
    std::array<Rat, 3> ts{t1, t2, t3};
    bool distinct = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (comps[i] == comps[j] && ts[i] == ts[j]) distinct = false;
    if (!distinct) continue;
    TripleSample s;
    for (int i = 0; i < 3; ++i) {
      PicValue v = additive ? PicValue(ts[i]) : PicValue(MulRat{ts[i]});
      s.pts[i] = MarkedPoint(comps[i], v);
    }
    return s;
  }
}

}  // namespace

TEST_CASE("degree-1 cuts are exactly the collinear triples", "[geometry][embed][cutlaw]") {
  std::mt19937_64 rng(0xabcdef12);
  for (CubicType ty : {CubicType::Cusp, CubicType::Concurrent, CubicType::Triangle,
                       CubicType::ConicSecant}) {
    const CubicKind k{ty};
    int cuts = 0;
    for (int trial = 0; trial < 250; ++trial) {
      const TripleSample s = draw_triple(k, rng, trial % 2 == 0);
      std::array<ProjPointQ, 3> P;
      for (int i = 0; i < 3; ++i) {
        auto e = embed_exact(k, s.pts[i]);
        REQUIRE(e.has_value());
        P[i] = *e;
      }
      const bool collinear = det3(P[0], P[1], P[2]) == 0;
      const bool cut = is_degree_d_cut(
          k, std::vector<MarkedPoint>(s.pts.begin(), s.pts.end()), 1);
      INFO(k.str() << " trial " << trial << ": " << s.pts[0].str() << " " << s.pts[1].str()
                   << " " << s.pts[2].str());
      REQUIRE(collinear == cut);
      cuts += cut;
    }
    CHECK(cuts >= 125);  // every forced draw is a cut
  }
}

// ---------------------------------------------------------------------------
// eval_point restricted to the cubic is the curve automorphism.

TEST_CASE("plane evaluation restricts to the curve action", "[geometry][eval]") {
  const RealizationCertificate& cert = cusp118();
  REQUIRE(cert.status == RealizeStatus::Realized);
  const CubicKind& k = cert.kind;
  double worst = 0.0;
  int checked = 0;
  for (int i = 0; checked < 100 && i < 400; ++i) {
    const double rho = 0.25 + 0.015 * (i % 60);
    const double th = 6.283185307179586 * (0.03 + 0.0719 * i);
    const Cx t(rho * std::cos(th), rho * std::sin(th));
    const ProjPoint p = proj_normalize(geom::chart_point_c<Cx>(k, 0, t));
    ProjPoint fp;
    try {
      fp = eval_point(cert, p);
    } catch (const NearDegenerate&) {
      continue;
    }
    const auto [ic, it] = geom::aut_value<Cx>(k, cert.aut, 0, t, cert.root_index);
    const ProjPoint expect = proj_normalize(geom::chart_point_c<Cx>(k, ic, it));
    worst = std::max(worst, proj_distance(fp, expect));
    ++checked;
  }
  REQUIRE(checked == 100);
  CHECK(worst < 1e-9);
}

// ---------------------------------------------------------------------------
// Fitting and verifying the (1,1,8) cusp map.

TEST_CASE("cusp (1,1,8,(123)) fits a quadratic map that verifies at 1e-8",
          "[geometry][fit]") {
  const RealizationCertificate& cert = cusp118();
  REQUIRE(cert.status == RealizeStatus::Realized);
  const QuadraticMap& map = cusp118_map();
  CHECK(map.fit_gap > 1e6);
  CHECK(map.provenance.find("1,1,8") != std::string::npos);

  const MapReport rep = verify_map(map, cert, 1e-8);
  INFO("base " << rep.base_residual << " curve " << rep.curve_residual << " orbit "
               << rep.orbit_residual << " contraction " << rep.contraction_residual);
  CHECK(rep.base_residual < 1e-8);
  CHECK(rep.curve_residual < 1e-8);
  CHECK(rep.orbit_residual < 1e-8);
  CHECK(rep.contraction_residual < 1e-8);
  CHECK(rep.pass);
  CHECK(!rep.escalated);  // double precision suffices
}

TEST_CASE("fitted coefficients agree with fresh pencil evaluations", "[geometry][fit]") {
  const RealizationCertificate& cert = cusp118();
  const QuadraticMap& map = cusp118_map();
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  double worst = 0.0;
  int got = 0;
  while (got < 50) {
    const ProjPoint p{Cx(U(rng)), Cx(U(rng)), Cx(1.0)};
    ProjPoint w;
    try {
      w = eval_point(cert, p);
    } catch (const NearDegenerate&) {
      continue;
    }
    worst = std::max(worst, proj_distance(w, proj_normalize(map(p))));
    ++got;
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("generic lines map to conics through the backward base points",
          "[geometry][conic]") {
  const RealizationCertificate& cert = cusp118();
  const QuadraticMap& map = cusp118_map();
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int t = 0; t < 5; ++t) {
    const ProjPoint A{Cx(U(rng), U(rng)), Cx(U(rng), U(rng)), Cx(1.0)};
    const ProjPoint B{Cx(U(rng), U(rng)), Cx(U(rng), U(rng)), Cx(1.0)};
    const ConicFit cf = line_image_conic(map, cert, A, B);
    INFO("line " << t << ": residual " << cf.residual << " gap " << cf.gap
                 << " base " << cf.base_residual);
    CHECK(cf.residual < 1e-8);        // the image is a conic
    CHECK(cf.gap > 1e4);              // and a nondegenerate, unique one
    CHECK(cf.base_residual < 1e-8);   // passing through all three p_j^-
  }
}

TEST_CASE("the three fitted forms share no linear factor", "[geometry][baselocus]") {
  CHECK(!forms_share_linear_factor(cusp118_map()));

  // A degenerate "map" whose forms all contain the factor x is caught.
  QuadraticMap fake;
  fake.coeff[0] = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0};   // x * x
  fake.coeff[1] = {0.0, 1.0, 0.0, 0.0, 0.0, 0.0};   // x * y
  fake.coeff[2] = {0.0, 0.5, 1.0, 0.0, 0.0, 0.0};   // x * (y/2 + z)
  CHECK(forms_share_linear_factor(fake));
}

// ---------------------------------------------------------------------------
// Inverse certificates and the involution composition.

TEST_CASE("the inverse certificate audits clean and composes to the identity",
          "[geometry][inverse]") {
  const RealizationCertificate& cert = cusp118();
  const RealizationCertificate inv = inverse_certificate(cert);
  CHECK(inv.data == OrbitData::parse("8,1,1:(132)"));
  CHECK(certificate_problems(inv).empty());

  const QuadraticMap& fwd = cusp118_map();
  const QuadraticMap bwd = fit_quadratic_map(inv);
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const ProjPoint p = proj_normalize(ProjPoint{Cx(U(rng)), Cx(U(rng)), Cx(1.0)});
    const ProjPoint back = proj_normalize(bwd(proj_normalize(fwd(p))));
    worst = std::max(worst, proj_distance(back, p));
  }
  CHECK(worst < 1e-7);
}

// ---------------------------------------------------------------------------
// The other plane kinds fit and verify too.

TEST_CASE("triangle (7,7,2,id) verifies and preserves each coordinate line",
          "[geometry][triangle]") {
  const RealizationCertificate cert =
      realize_triangle(OrbitData::parse("7,7,2:id"), std::array<long, 3>{1, 0, 0});
  REQUIRE(cert.status == RealizeStatus::Realized);
  const QuadraticMap map = fit_quadratic_map(cert);
  const MapReport rep = verify_map(map, cert);
  CHECK(rep.pass);

  // The cubic is x y z = 0; the automorphism fixes each coordinate line, so
  // the image of a point with coordinate c zero again has coordinate c zero.
  const CubicKind k{CubicType::Triangle};
  double worst = 0.0;
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 8; ++i) {
      const Cx t(0.3 + 0.21 * i, 0.1 * i - 0.35);
      const ProjPoint p = proj_normalize(geom::chart_point_c<Cx>(k, c, t));
      const ProjPoint w = proj_normalize(map(p));
      worst = std::max(worst, std::abs(w[c]));
    }
  CHECK(worst < 1e-8);
}

TEST_CASE("concurrent and conic-secant certificates verify", "[geometry][kinds]") {
  for (const RealizationCertificate& cert :
       {realize_concurrent(OrbitData::parse("2,5,8:id")),
        realize_conic_line(OrbitData::parse("5,5,4:id"), conic_line_preset("A"))}) {
    REQUIRE(cert.status == RealizeStatus::Realized);
    const QuadraticMap map = fit_quadratic_map(cert);
    const MapReport rep = verify_map(map, cert);
    INFO(cert.kind.str() << " " << cert.data.str() << ": worst residual " << rep.worst());
    CHECK(rep.pass);
  }
}

// ---------------------------------------------------------------------------
// Error taxonomy.

TEST_CASE("too few samples is rank deficiency, not a crash", "[geometry][errors]") {
  CHECK_THROWS_AS(fit_quadratic_map(cusp118(), 3), RankDeficient);
}

TEST_CASE("a tampered certificate yields no nullspace", "[geometry][errors]") {
  RealizationCertificate bad = cusp118();
  NFElem v = std::get<NFElem>(bad.minus[0].val);
  bad.minus[0].val = v + NFElem(v.field(), rat(1, 7));
  CHECK_THROWS_AS(fit_quadratic_map(bad), NoNullspace);
}

TEST_CASE("infinitely-near certificates are refused", "[geometry][errors]") {
  const RealizationCertificate cert = realize_cusp(OrbitData::parse("5,5,5:id"));
  REQUIRE(cert.status == RealizeStatus::Realized);
  bool near = false;
  for (int j = 0; j < 3; ++j) near = near || cert.plus[j].near_level > 0;
  REQUIRE(near);
  CHECK_THROWS_AS(fit_quadratic_map(cert), DegenerateFit);
}

TEST_CASE("evaluation at an indeterminacy point is near-degenerate",
          "[geometry][errors]") {
  const RealizationCertificate& cert = cusp118();
  const ProjPoint p =
      proj_normalize(embed_point(cert.kind, cert.plus[0], cert.root_index));
  CHECK_THROWS_AS(eval_point(cert, p), NearDegenerate);
}

TEST_CASE("a perturbed coefficient fails verification with a localized diagnostic",
          "[geometry][errors]") {
  QuadraticMap bad = cusp118_map();
  bad.coeff[1][3] += Cx(1e-4, 0.0);
  const MapReport rep = verify_map(bad, cusp118());
  CHECK(!rep.pass);
  CHECK(rep.escalated);  // it retried at higher precision before failing
  CHECK(note_contains(rep.notes, "curve-invariance"));
  CHECK(note_contains(rep.notes, "orbit"));
}
