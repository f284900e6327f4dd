#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "paper_fixtures.hpp"
#include "slack/analyses.hpp"

using namespace slack;

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

Polynomial P(const char* s, std::uint32_t nvars) {
  return parse_polynomial(s, nvars, kGrevlex);
}

}  // namespace

TEST_CASE("realizability probe: quadrilateral is inconclusive (it is realizable)") {
  const auto rep = realizability_probe(fixtures::quadrilateral_incidence());
  CHECK(rep.verdict == "inconclusive");
  CHECK(!rep.conclusive);
}

TEST_CASE("realizability probe: tetrahemihexahedron has no positive realization") {
  const auto rep = realizability_probe(fixtures::tetrahemihexahedron());
  CHECK(rep.verdict == "no positive realization (same-sign certificate)");
  CHECK(rep.conclusive);
  REQUIRE(rep.certificates.size() == 1);

  // Certificate re-verifies: it is in the ideal, its coefficients share one
  // sign, and it is strictly positive at random strictly positive points.
  const Polynomial& cert = rep.certificates[0];
  const auto gb = buchberger(slack_ideal(fixtures::tetrahemihexahedron()), kGrevlex);
  CHECK(ideal_membership(cert, gb));
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> pt(rep.ring_vars);
    for (auto& x : pt) x = fixtures::random_positive_rational(rng);
    CHECK(evaluate(cert, pt).sign() > 0);
  }
}

TEST_CASE("rationality probe: quadrilateral with projective fix has the all-ones witness") {
  const auto inc = fixtures::quadrilateral_incidence();
  const auto fix = fix_variables_by_scaling(inc, ScalingFix::Mode::Projective);
  const auto rep = rationality_probe(inc, fix);
  CHECK(rep.verdict == "rational witness");
  REQUIRE(rep.witness.size() == 8);
  for (const auto& w : rep.witness) CHECK(w == Rational(1));
  // The witness re-verifies on the unscaled ideal and is strictly positive.
  CHECK(evaluate_on_variety(slack_ideal(inc), rep.witness));
  const auto srep = check_slack_conditions(
      row_scale_to_true(RationalMatrix(4, 4, {Rational(0), Rational(1), Rational(1), Rational(0),
                                              Rational(0), Rational(0), Rational(1), Rational(1),
                                              Rational(1), Rational(0), Rational(0), Rational(1),
                                              Rational(1), Rational(1), Rational(0), Rational(0)})),
      inc);
  CHECK(srep.is_true_slack());
}

TEST_CASE("positive rational root scan: toy obstructions") {
  // x^2 - 2 has no rational root at all.
  auto roots = detail::positive_rational_roots(P("x1^2 - 2", 1));
  REQUIRE(roots.has_value());
  CHECK(roots->empty());

  // The golden-ratio obstruction has no positive rational root either.
  roots = detail::positive_rational_roots(P("x1^2 + x1 - 1", 1));
  REQUIRE(roots.has_value());
  CHECK(roots->empty());

  // 2x^2 - 3x + 1 = (2x - 1)(x - 1): positive roots 1/2 and 1.
  roots = detail::positive_rational_roots(P("2*x1^2 - 3*x1 + 1", 1));
  REQUIRE(roots.has_value());
  REQUIRE(roots->size() == 2);
  CHECK((*roots)[0] == Rational(1, 2));
  CHECK((*roots)[1] == Rational(1));

  // x^2*(x - 2): the x = 0 root is ignored, 2 remains.
  roots = detail::positive_rational_roots(P("x1^3 - 2*x1^2", 1));
  REQUIRE(roots.has_value());
  REQUIRE(roots->size() == 1);
  CHECK((*roots)[0] == Rational(2));
}

TEST_CASE("facet_face_data: the cube facet of the prism over a square pyramid") {
  const auto inc = fixtures::prism_over_square_pyramid();
  const auto fd = facet_face_data(inc, 2);  // facet 3 is the cube
  CHECK(fd.face.dimension() == 3);
  CHECK(fd.face.vertex_count() == 8);
  CHECK(fd.face.facet_count() == 6);
  const std::vector<std::uint32_t> expected = {1,  2,  3,  4,  5,  6,  7,  8,
                                               9,  10, 11, 12, 15, 16, 17, 18,
                                               19, 20, 21, 22, 23, 24, 25, 26};
  CHECK(fd.face_cells == expected);
  CHECK(incidence_diagnostics(fd.face).empty());  // it is a combinatorial cube
  CHECK(SymbolicSlackMatrix(fd.face).var_count() == 24);
}

TEST_CASE("prescribability probe: a square facet of the 3-cube shows no gap") {
  const auto inc = fixtures::cube3_incidence();
  const auto fd = facet_face_data(inc, 0);
  CHECK(fd.face.vertex_count() == 4);
  CHECK(fd.face.facet_count() == 4);
  const auto rep = prescribability_probe(inc, fd.face_cells, fd.face, 2);
  REQUIRE(rep.containment.has_value());
  CHECK(*rep.containment);
  REQUIRE(rep.dim_elimination.has_value());
  REQUIRE(rep.dim_face.has_value());
  CHECK(*rep.dim_elimination == *rep.dim_face);
  CHECK(rep.verdict == "no dimension gap");
}

TEST_CASE("budget exhaustion yields the inconclusive verdict, not an answer") {
  Budget tiny;
  tiny.max_pairs = 1;
  const auto rep = realizability_probe(fixtures::tetrahemihexahedron(), std::nullopt, tiny);
  CHECK(rep.verdict == "inconclusive (budget)");
  CHECK(!rep.conclusive);
}

TEST_CASE("published cube completion vanishes on the cube slack ideal") {
  // The completed true slack matrix printed for the prism's cube facet is a
  // point of the cube's (24-variable) slack variety.
  const auto inc = fixtures::prism_over_square_pyramid();
  const auto fd = facet_face_data(inc, 2);
  const auto I_F = slack_ideal(fd.face);
  CHECK(evaluate_on_variety(I_F, fixtures::prism_cube_point()));
}
