#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "cremona/realize_cusp.hpp"

using namespace cremona;

namespace {

bool has_note(const RealizationCertificate& c, const std::string& needle) {
  for (const std::string& n : c.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

// Locations (component, value, near level ignored) seen anywhere in the
// certificate's orbits.
int distinct_locations(const RealizationCertificate& c) {
  std::vector<MarkedPoint> seen;
  auto add = [&](const MarkedPoint& p) {
    for (const MarkedPoint& q : seen)
      if (q.same_location(p)) return;
    seen.push_back(p);
  };
  for (const auto& orb : c.orbits)
    for (const MarkedPoint& p : orb) add(p);
  for (const MarkedPoint& p : c.plus) add(p);
  for (const MarkedPoint& p : c.minus) add(p);
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("equal lengths with sigma = id realize as an infinitely-near triple",
          "[realize][cusp]") {
  RealizationCertificate cert = realize_cusp(OrbitData::parse("5,5,5:id"));
  CHECK(cert.status == RealizeStatus::Realized);
  CHECK(cert.reason.empty());
  CHECK(certificate_problems(cert).empty());
  CHECK(has_note(cert, "infinitely-near"));

  // All three orbits coincide pointwise: (a-1)/(1-a^5) does not depend on j.
  for (int k = 0; k < 5; ++k) {
    CHECK(cert.orbits[0][k].same_location(cert.orbits[1][k]));
    CHECK(cert.orbits[1][k].same_location(cert.orbits[2][k]));
  }
  CHECK(distinct_locations(cert) == 5);

  // The multiplier generates a quartic field: P = Phi_1^3 Phi_2 Phi_5^2 times
  // the Salem factor x^4 - 2x^3 + x^2 - 2x + 1.
  const NFElem& a = std::get<NFElem>(cert.aut.a);
  CHECK(a.field()->min_poly() == IntPoly({1, -2, 1, -2, 1}));
  CHECK(abs(abs(a.embed(0)) - Float50("1.883203505913526")) < 1e-12);
}

TEST_CASE("an involution swapping equal lengths is obstructed", "[realize][cusp]") {
  // (5,5,5) with a transposition matches both exceptional shapes; the
  // all-equal rule is reported.
  RealizationCertificate cert = realize_cusp(OrbitData::parse("5,5,5:(12)"));
  CHECK(cert.status == RealizeStatus::Obstructed);
  CHECK(cert.reason.find("sigma != id") != std::string::npos);
  // The tentative transformation is still exhibited.
  REQUIRE(cert.orbits[0].size() == 5);
  REQUIRE(cert.orbits[2].size() == 5);
  // Same exceptional shape, sigma = (23).
  RealizationCertificate c2 = realize_cusp(OrbitData::parse("4,6,6:(23)"));
  CHECK(c2.status == RealizeStatus::Obstructed);
  CHECK(c2.reason.find("swaps orbits 2 and 3") != std::string::npos);
  // All equal with a 3-cycle.
  RealizationCertificate c3 = realize_cusp(OrbitData::parse("6,6,6:(123)"));
  CHECK(c3.status == RealizeStatus::Obstructed);
  CHECK(c3.reason.find("sigma != id") != std::string::npos);
}

TEST_CASE("the minimal-entropy family member certifies with ten distinct points",
          "[realize][cusp]") {
  RealizationCertificate cert = realize_cusp(OrbitData::parse("1,1,8:(123)"));
  CHECK(cert.status == RealizeStatus::Realized);
  CHECK(certificate_problems(cert).empty());

  // Length-1 orbits sit inside both indeterminacy sets: p_1^- = p_2^+.
  CHECK(cert.minus[0].same_location(cert.plus[1]));
  CHECK(cert.minus[1].same_location(cert.plus[2]));
  CHECK(distinct_locations(cert) == 10);

  // The multiplier field is the degree-10 factor with the smallest known
  // Salem number as its largest root.
  const NFElem& a = std::get<NFElem>(cert.aut.a);
  CHECK(a.field()->degree() == 10);
  CHECK(abs(abs(a.embed(0)) - Float50("1.17628081825991")) < 1e-11);
}

TEST_CASE("zero-entropy data realizes through a root of unity when one fits",
          "[realize][cusp]") {
  RealizationCertificate cert = realize_cusp(OrbitData::parse("2,3,4:id"));
  CHECK(cert.status == RealizeStatus::Realized);
  CHECK(certificate_problems(cert).empty());
  CHECK(has_note(cert, "root of unity of order 18"));
  CHECK(has_note(cert, "zero entropy"));
  CHECK(distinct_locations(cert) == 9);

  const NFElem& a = std::get<NFElem>(cert.aut.a);
  CHECK(a.field()->min_poly() == cyclotomic(18));
  CHECK(a.pow(18) == NFElem(a.field(), Rat(1)));
  CHECK(abs(abs(a.embed(0)) - 1) < 1e-40);
}

TEST_CASE("data whose roots of unity all collide with a cycle total has no multiplier",
          "[realize][cusp]") {
  CHECK_THROWS_AS(realize_cusp(OrbitData::parse("1,1,1:(12)")), NoSuitableRoot);
  CHECK_THROWS_AS(realize_cusp(OrbitData::parse("1,2,2:(23)")), NoSuitableRoot);
  CHECK_THROWS_WITH(realize_cusp(OrbitData::parse("2,2,2:(123)")),
                    Catch::Matchers::ContainsSubstring("root of unity"));
  // Totals {1,1,1} keep a = -1 available: even the most degenerate data gets
  // a multiplier, with every point at a single location.
  RealizationCertificate cert = realize_cusp(OrbitData::parse("1,1,1:id"));
  CHECK(cert.status == RealizeStatus::Realized);
  CHECK(distinct_locations(cert) == 1);
  CHECK(has_note(cert, "zero entropy"));
}

TEST_CASE("certificates are deterministic and root-index validated", "[realize][cusp]") {
  const OrbitData d = OrbitData::parse("2,3,5:id");
  RealizationCertificate a = realize_cusp(d), b = realize_cusp(d);
  CHECK(a.status == RealizeStatus::Realized);
  for (int j = 0; j < 3; ++j) {
    CHECK(a.plus[j] == b.plus[j]);
    CHECK(a.minus[j] == b.minus[j]);
  }
  CHECK_THROWS_AS(realize_cusp(d, 99), std::out_of_range);
  // Any root index inside the field works, not only the leading one.
  RealizationCertificate alt = realize_cusp(d, 1);
  CHECK(alt.status == RealizeStatus::Realized);
  CHECK(certificate_problems(alt).empty());
}
