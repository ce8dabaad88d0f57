#include <catch2/catch_amalgamated.hpp>

#include "cremona/certificate.hpp"

using namespace cremona;

namespace {

// The square-torus automorphism with multiplier i and b = 5/9, written in
// lattice coordinates (x, y) for x + iy.  Its three length-4 orbits close up
// with sigma = (132); all values below are exact and independently checkable
// by hand.
struct SquareExample {
  CubicKind kind{CubicType::TorusSquare};
  OrbitData data = OrbitData::parse("4,4,4:(132)");
  CurveAut aut;
  std::array<MarkedPoint, 3> plus, minus;

  SquareExample() {
    aut.a = Mat2::square_i();
    aut.b = {PicValue(Lat2(Rat(5, 9), Rat(0)))};
    plus = {MarkedPoint(0, Lat2(Rat(0), Rat(1, 9))), MarkedPoint(0, Lat2(Rat(0), Rat(4, 9))),
            MarkedPoint(0, Lat2(Rat(0), Rat(7, 9)))};
    minus = {MarkedPoint(0, Lat2(Rat(7, 9), Rat(0))), MarkedPoint(0, Lat2(Rat(4, 9), Rat(0))),
             MarkedPoint(0, Lat2(Rat(1, 9), Rat(0)))};
  }
};

}  // namespace

TEST_CASE("first passage reads the hand-checked square-torus closures", "[certificate]") {
  SquareExample ex;
  FirstPassage fp = first_passage(ex.kind, ex.aut, ex.plus, ex.minus, ex.data);

  for (int j = 0; j < 3; ++j) {
    CAPTURE(j);
    CHECK(fp.scan[j].hit_k == 3);
    CHECK(fp.scan[j].hit_index == ex.data.sigma(j));
    CHECK_FALSE(fp.scan[j].hit_multiple);
    CHECK(fp.endpoint_ok[j]);
    REQUIRE(fp.scan[j].points.size() == 4);
  }
  CHECK(fp.matches_requested);
  CHECK(fp.benign_only);
  CHECK(fp.findings.empty());
  REQUIRE(fp.realized.has_value());
  CHECK(*fp.realized == ex.data);

  // Interior of the first orbit: i(7/9) + 5/9 = 5/9 + 7i/9, then 7/9 + 5i/9.
  CHECK(fp.scan[0].points[1] == MarkedPoint(0, Lat2(Rat(5, 9), Rat(7, 9))));
  CHECK(fp.scan[0].points[2] == MarkedPoint(0, Lat2(Rat(7, 9), Rat(5, 9))));
  CHECK(fp.scan[0].points[3].same_location(ex.plus[2]));
}

TEST_CASE("misdeclared sigma fails the endpoint checks", "[certificate]") {
  SquareExample ex;
  OrbitData wrong = OrbitData::parse("4,4,4:id");
  FirstPassage fp = first_passage(ex.kind, ex.aut, ex.plus, ex.minus, wrong);
  CHECK_FALSE(fp.matches_requested);
  CHECK_FALSE(fp.endpoint_ok[0]);
  CHECK_FALSE(fp.endpoint_ok[1]);
  CHECK_FALSE(fp.endpoint_ok[2]);
  REQUIRE(fp.realized.has_value());
  CHECK(*fp.realized == ex.data);
}

TEST_CASE("a sound certificate passes the audit and tampering fails it", "[certificate]") {
  SquareExample ex;
  FirstPassage fp = first_passage(ex.kind, ex.aut, ex.plus, ex.minus, ex.data);

  RealizationCertificate cert;
  cert.kind = ex.kind;
  cert.data = ex.data;
  cert.aut = ex.aut;
  cert.plus = ex.plus;
  cert.minus = ex.minus;
  cert.orbits = {fp.scan[0].points, fp.scan[1].points, fp.scan[2].points};
  cert.status = RealizeStatus::Realized;
  CHECK(certificate_problems(cert).empty());

  SECTION("tampered orbit point") {
    cert.orbits[1][2] = MarkedPoint(0, Lat2(Rat(1, 2), Rat(1, 2)));
    const auto problems = certificate_problems(cert);
    REQUIRE_FALSE(problems.empty());
    CHECK(problems[0].find("orbit 2") != std::string::npos);
  }
  SECTION("tampered minus point breaks the constraint system") {
    cert.minus[0] = MarkedPoint(0, Lat2(Rat(2, 9), Rat(0)));
    CHECK_FALSE(certificate_problems(cert).empty());
  }
  SECTION("tampered translation breaks condition 2") {
    cert.aut.b = {PicValue(Lat2(Rat(4, 9), Rat(0)))};
    const auto problems = certificate_problems(cert);
    REQUIRE_FALSE(problems.empty());
    CHECK(problems[0].find("condition 2") != std::string::npos);
  }
  SECTION("non-realized certificates only need a reason") {
    cert.status = RealizeStatus::Obstructed;
    cert.reason = "";
    REQUIRE_FALSE(certificate_problems(cert).empty());
    cert.reason = "deliberately obstructed";
    CHECK(certificate_problems(cert).empty());
  }
}

TEST_CASE("orbit scans keep walking past early hits up to the requested length",
          "[certificate]") {
  SquareExample ex;
  // Claim shorter first and third orbits: the scans then stop early and the
  // endpoint checks fail, but the true hits are still found at step 3.
  OrbitData shorter = OrbitData::parse("2,4,2:(132)");
  FirstPassage fp = first_passage(ex.kind, ex.aut, ex.plus, ex.minus, shorter,
                                  {5, 5, 5});
  CHECK(fp.scan[0].hit_k == 3);
  CHECK(fp.scan[2].hit_k == 3);
  CHECK_FALSE(fp.endpoint_ok[0]);
  CHECK(fp.endpoint_ok[1]);
  REQUIRE(fp.realized.has_value());
  CHECK(*fp.realized == ex.data);
  CHECK_FALSE(fp.matches_requested);
  CHECK(fp.benign_only);  // hits past the claimed endpoint are not premature
}
