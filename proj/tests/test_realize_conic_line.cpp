#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "cremona/realize_conic_line.hpp"

using namespace cremona;

namespace {

bool has_note(const RealizationCertificate& c, const std::string& needle) {
  for (const std::string& n : c.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

int distinct_locations(const RealizationCertificate& c) {
  std::vector<MarkedPoint> all;
  for (int j = 0; j < 3; ++j)
    for (const MarkedPoint& q : c.orbits[j]) all.push_back(q);
  int distinct = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    bool dup = false;
    for (size_t k = 0; k < i && !dup; ++k)
      if (all[i].same_location(all[k])) dup = true;
    if (!dup) ++distinct;
  }
  return distinct;
}

}  // namespace

TEST_CASE("preset A realizes (5,5,4,id) with fourteen distinct points",
          "[realize][conicline]") {
  RealizationCertificate cert =
      realize_conic_line(OrbitData::parse("5,5,4:id"), conic_line_preset("A"));
  REQUIRE(cert.status == RealizeStatus::Realized);
  CHECK(certificate_problems(cert).empty());

  // Component 0 is the line (translation 3/7), component 1 the conic (1/7).
  CHECK(pic_eq(cert.aut.b[0], CRat(rat(3, 7))));
  CHECK(pic_eq(cert.aut.b[1], CRat(rat(1, 7))));
  CHECK(cert.minus[0] == MarkedPoint(1, CRat(Rat(0))));
  CHECK(cert.minus[1] == MarkedPoint(1, CRat(Rat(0), Rat(1))));
  CHECK(cert.minus[2] == MarkedPoint(0, CRat(rat(-5, 7), Rat(-1))));
  CHECK(cert.plus[0] == MarkedPoint(1, CRat(rat(4, 7))));
  CHECK(cert.plus[1] == MarkedPoint(1, CRat(rat(4, 7), Rat(1))));
  CHECK(cert.plus[2] == MarkedPoint(0, CRat(rat(4, 7), Rat(-1))));

  REQUIRE(cert.orbits[0].size() == 5);
  REQUIRE(cert.orbits[2].size() == 4);
  CHECK(cert.orbits[0][4].same_location(cert.plus[0]));
  CHECK(cert.orbits[1][4].same_location(cert.plus[1]));
  CHECK(cert.orbits[2][3].same_location(cert.plus[2]));
  CHECK(distinct_locations(cert) == 14);
}

TEST_CASE("the simulator corrects a misdeclared request", "[realize][conicline]") {
  RealizationCertificate cert =
      realize_conic_line(OrbitData::parse("4,4,4:id"), conic_line_preset("A"));
  CHECK(cert.status == RealizeStatus::Realized);
  CHECK(cert.data == OrbitData::parse("5,5,4:id"));
  CHECK(has_note(cert, "carries the computed data 5,5,4:id"));
  CHECK(certificate_problems(cert).empty());
}

TEST_CASE("preset B reports its own inconsistency instead of patching it",
          "[realize][conicline]") {
  // The supplied base points violate the sum condition of the constraint
  // system (8/13 vs 7/13), so no quadratic transformation has them; the
  // orbits are still walked and close at (4,5,7),(12).
  RealizationCertificate cert =
      realize_conic_line(OrbitData::parse("3,4,7:(12)"), conic_line_preset("B"));
  CHECK(cert.status == RealizeStatus::Obstructed);
  CHECK(cert.reason.find("condition 2") != std::string::npos);
  CHECK(cert.data == OrbitData::parse("4,5,7:(12)"));
  CHECK(has_note(cert, "carries the computed data 4,5,7:(12)"));

  REQUIRE(cert.orbits[2].size() == 7);
  // The line orbit closes exactly: f^6(p_3^-) = 5/13 = p_3^+.
  CHECK(cert.orbits[2][6] == MarkedPoint(0, CRat(rat(5, 13))));
  CHECK(cert.orbits[2][6].same_location(cert.plus[2]));
  CHECK(pic_eq(cert.plus[2].val, CRat(rat(5, 13))));
  CHECK(distinct_locations(cert) == 16);

  // Requesting the computed data changes nothing but the difference note.
  RealizationCertificate c2 =
      realize_conic_line(OrbitData::parse("4,5,7:(12)"), conic_line_preset("B"));
  CHECK(c2.status == RealizeStatus::Obstructed);
  CHECK(c2.data == OrbitData::parse("4,5,7:(12)"));
  CHECK_FALSE(has_note(c2, "carries the computed data"));
}

TEST_CASE("sigma must fix the line index", "[realize][conicline]") {
  CHECK_THROWS_AS(
      realize_conic_line(OrbitData::parse("5,5,4:(13)"), conic_line_preset("A")),
      ShapeViolation);
  CHECK_THROWS_AS(
      realize_conic_line(OrbitData::parse("5,5,4:(123)"), conic_line_preset("A")),
      ShapeViolation);
  CHECK_NOTHROW(
      realize_conic_line(OrbitData::parse("5,5,4:(12)"), conic_line_preset("A")));
}

TEST_CASE("orbits that never return are detected in one period", "[realize][conicline]") {
  // Consistent base points (sum condition holds), but every orbit's return
  // congruence is unsolvable: 2k = 5 mod 6 on the conic, 3k = -2 mod 6 on
  // the line.
  ConicLineParams p{CRat(rat(1, 3)), CRat(rat(1, 2)),
                    {CRat(Rat(0), Rat(1)), CRat(Rat(0), Rat(-1))},
                    CRat(rat(5, 6))};
  RealizationCertificate cert = realize_conic_line(OrbitData::parse("2,2,2:id"), p);
  CHECK(cert.status == RealizeStatus::TentativeOnly);
  CHECK(cert.reason.find("never meets a forward base point") != std::string::npos);
}

TEST_CASE("unknown preset names are rejected", "[realize][conicline]") {
  CHECK_THROWS_AS(conic_line_preset("C"), std::invalid_argument);
}
