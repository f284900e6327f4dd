#include <catch2/catch_amalgamated.hpp>

#include "paper_fixtures.hpp"
#include "slack/io.hpp"

using namespace slack;
using slack::io::json;

TEST_CASE("polytope input: vertex coordinates") {
  json verts = json::array();
  for (auto [x, y] : {std::pair{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}})
    verts.push_back(json::array({x, y}));
  const json j = {{"dimension", 2}, {"vertices", verts}};
  const auto in = io::parse_polytope_input(j);
  REQUIRE(in.has_coordinates());
  CHECK(in.vrep->vertices.rows() == 4);
  CHECK(in.vrep->vertices.at(2, 1) == Rational(1));

  const auto resolved = io::resolve(in);
  CHECK(resolved.incidence.facet_count() == 4);
}

TEST_CASE("polytope input: mixed integer and p/q coordinates") {
  const json j = {{"dimension", 1}, {"vertices", {{-2}, {"5/3"}}}};
  const auto in = io::parse_polytope_input(j);
  CHECK(in.vrep->vertices.at(1, 0) == Rational(5, 3));
}

TEST_CASE("polytope input: abstract facet list") {
  const json j = {{"dimension", 2},
                  {"num_vertices", 4},
                  {"facets", {{1, 2}, {2, 3}, {3, 4}, {1, 4}}}};
  const auto in = io::parse_polytope_input(j);
  REQUIRE(!in.has_coordinates());
  CHECK(*in.incidence == fixtures::quadrilateral_incidence());
}

TEST_CASE("polytope input: malformed files are rejected") {
  CHECK_THROWS(io::parse_polytope_input(json{{"vertices", {{1}}}}));
  CHECK_THROWS(io::parse_polytope_input(json{{"dimension", 2}}));
  CHECK_THROWS(io::parse_polytope_input(
      json{{"dimension", 2}, {"facets", {{1, 2}}}}));  // missing num_vertices
  CHECK_THROWS(io::parse_polytope_input(
      json{{"dimension", 2}, {"num_vertices", 2}, {"facets", {{1, 5}}}}));
}

TEST_CASE("matrix JSON round-trip") {
  const auto m = fixtures::square_slack_with_twos();
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
}

TEST_CASE("ideal JSON round-trip") {
  const auto ideal = affine_slack_ideal(fixtures::quadrilateral_incidence());
  const auto back = io::ideal_from_json(io::ideal_to_json(ideal));
  CHECK(back.ring_vars == ideal.ring_vars);
  CHECK(back.generators == ideal.generators);
}

TEST_CASE("scaling fix JSON round-trip") {
  const ScalingFix fix{ScalingFix::Mode::Affine, {1, 2, 5, 6}};
  const auto back = io::fix_from_json(io::fix_to_json(fix));
  CHECK(back.mode == fix.mode);
  CHECK(back.fixed == fix.fixed);
}

TEST_CASE("groebner JSON records the order descriptor") {
  const auto gb = buchberger(slack_ideal(fixtures::quadrilateral_incidence()),
                             MonomialOrder::grevlex());
  const auto j = io::groebner_to_json(gb);
  CHECK(j["order"] == "grevlex");
  CHECK(j["elements"].size() == 1);
}
