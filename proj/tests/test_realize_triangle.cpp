#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "cremona/realize_triangle.hpp"

using namespace cremona;

TEST_CASE("a worked translation choice realizes (7,7,2)", "[realize][triangle]") {
  RealizationCertificate cert = realize_triangle(OrbitData::parse("7,7,2:id"), {1, 0, 0});
  REQUIRE(cert.status == RealizeStatus::Realized);
  CHECK(certificate_problems(cert).empty());

  // b = 14/21 = 2/3 and b_j = m_j/n_j + M/(n_j D) with D = 21, M = 14.
  REQUIRE(cert.aut.b.size() == 3);
  CHECK(pic_eq(cert.aut.b[0], CRat(rat(5, 21))));
  CHECK(pic_eq(cert.aut.b[1], CRat(rat(2, 21))));
  CHECK(pic_eq(cert.aut.b[2], CRat(rat(1, 3))));
  CHECK(mult_is_one(cert.aut.a));
  CHECK(cert.aut.tau.is_identity());

  CHECK(cert.plus[0] == MarkedPoint(0, CRat(Rat(0))));
  CHECK(cert.plus[1] == MarkedPoint(1, CRat(Rat(0))));
  CHECK(cert.plus[2] == MarkedPoint(2, CRat(rat(2, 3))));
  CHECK(cert.minus[0] == MarkedPoint(0, CRat(rat(4, 7))));
  CHECK(cert.minus[1] == MarkedPoint(1, CRat(rat(3, 7))));
  CHECK(cert.minus[2] == MarkedPoint(2, CRat(rat(1, 3))));

  // Orbits close up exactly at their declared lengths.
  REQUIRE(cert.orbits[0].size() == 7);
  REQUIRE(cert.orbits[2].size() == 2);
  CHECK(cert.orbits[0][6].same_location(cert.plus[0]));
  CHECK(cert.orbits[1][6].same_location(cert.plus[1]));
  CHECK(cert.orbits[2][1].same_location(cert.plus[2]));

  // The constraint system reproduces the backward base points.
  QCResult qc = quadratic_constraints(cert.kind, cert.aut, cert.plus);
  REQUIRE(qc.ok);
  for (int j = 0; j < 3; ++j) CHECK(qc.minus[j] == cert.minus[j]);
}

TEST_CASE("integer b means collinear base points", "[realize][triangle]") {
  RealizationCertificate cert = realize_triangle(OrbitData::parse("7,7,2:id"), {0, 0, 0});
  CHECK(cert.status == RealizeStatus::Obstructed);
  CHECK(cert.reason.find("collinear base points") != std::string::npos);
}

TEST_CASE("the box search realizes generic length triples", "[realize][triangle]") {
  TriangleSearch s = search_triangle(OrbitData::parse("7,7,2:id"));
  REQUIRE(s.cert.status == RealizeStatus::Realized);
  CHECK(certificate_problems(s.cert).empty());
  REQUIRE(s.m.has_value());
  CHECK(*s.m == std::array<long, 3>{-5, -4, -5});
  CHECK(s.tried == 12);

  TriangleSearch s2 = search_triangle(OrbitData::parse("8,8,2:id"));
  CHECK(s2.cert.status == RealizeStatus::Realized);
  CHECK(certificate_problems(s2.cert).empty());

  // Coprime-ish large lengths realize on the very first candidate.
  TriangleSearch s3 = search_triangle(OrbitData::parse("9,8,7:id"));
  CHECK(s3.cert.status == RealizeStatus::Realized);
  CHECK(s3.tried == 1);
}

TEST_CASE("divisibility proves collinearity for every translation choice",
          "[realize][triangle]") {
  // D = 1 divides everything: every m gives integer b.
  TriangleSearch s = search_triangle(OrbitData::parse("7,3,2:id"));
  CHECK(s.cert.status == RealizeStatus::Obstructed);
  CHECK(s.cert.reason.find("for every translation choice") != std::string::npos);
  CHECK(s.tried == 1);

  // D = 16 divides each pairwise product 16.
  TriangleSearch s2 = search_triangle(OrbitData::parse("4,4,4:id"));
  CHECK(s2.cert.status == RealizeStatus::Obstructed);
  CHECK(s2.cert.reason.find("for every translation choice") != std::string::npos);

  // D = 5 divides 10, 10 and 25.
  TriangleSearch s3 = search_triangle(OrbitData::parse("5,5,2:id"));
  CHECK(s3.cert.status == RealizeStatus::Obstructed);
  CHECK(s3.cert.reason.find("for every translation choice") != std::string::npos);
}

TEST_CASE("harmonic length triples degenerate", "[realize][triangle]") {
  TriangleSearch s = search_triangle(OrbitData::parse("3,3,3:id"));
  CHECK(s.cert.status == RealizeStatus::Obstructed);
  CHECK(s.cert.reason.find("degenerate lengths") != std::string::npos);
}

TEST_CASE("orbit permutations are impossible on the triangle", "[realize][triangle]") {
  TriangleSearch s = search_triangle(OrbitData::parse("7,7,2:(12)"));
  CHECK(s.cert.status == RealizeStatus::Obstructed);
  CHECK(s.cert.reason.find("sigma != id") != std::string::npos);
}

TEST_CASE("some lengths force an orbit to close immediately", "[realize][triangle]") {
  // For these triples one backward base point lands on a forward one for
  // every translation choice (b - b_j is always an integer), so the search
  // can prove the obstruction without scanning the box.
  for (const char* str : {"4,4,3:id", "6,5,2:id", "7,4,2:id"}) {
    TriangleSearch s = search_triangle(OrbitData::parse(str));
    INFO(str << " -> " << s.cert.reason);
    CHECK(s.cert.status == RealizeStatus::Obstructed);
    CHECK(s.tried == 1);
    CHECK(s.cert.reason.find("closes immediately") != std::string::npos);
  }
}

TEST_CASE("non-forced failures exhaust the box and keep the longest survivor",
          "[realize][triangle]") {
  // (7,3,3) is neither collinear for every m nor forced to close, yet no
  // translation choice in the default box realizes it; the search reports
  // the attempt whose orbits survive longest.
  TriangleSearch s = search_triangle(OrbitData::parse("7,3,3:id"));
  CHECK(s.cert.status == RealizeStatus::TentativeOnly);
  CHECK(s.tried == 1331);
  CHECK(s.cert.reason.find("before its declared endpoint") != std::string::npos);
  REQUIRE_FALSE(s.cert.notes.empty());
  CHECK(s.cert.notes.back().find("no translation choice in [-5, 5]^3") != std::string::npos);
}
