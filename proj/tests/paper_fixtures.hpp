// Shared fixture data for the test and acceptance suites: the worked
// examples this library is expected to reproduce, as published, plus small
// deterministic random-instance generators.
#ifndef SLACK_TESTS_PAPER_FIXTURES_HPP
#define SLACK_TESTS_PAPER_FIXTURES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "slack/polytope.hpp"
#include "slack/symbolic_slack.hpp"

namespace fixtures {

using slack::IncidenceStructure;
using slack::Rational;
using slack::RationalMatrix;
using slack::RationalVector;
using slack::VRepresentation;

// --- Quadrilateral (unit square and friends) --------------------------------

inline VRepresentation unit_square() {
  return {2, RationalMatrix(4, 2, {Rational(0), Rational(0), Rational(1), Rational(0),
                                   Rational(1), Rational(1), Rational(0), Rational(1)})};
}

// The "obvious" facet representation of the unit square, in its published
// labelling: facets ordered bottom, right, top, left.
inline slack::HRepresentation unit_square_hrep() {
  slack::HRepresentation h;
  h.normals = RationalMatrix(4, 2, {Rational(0), Rational(-1), Rational(1), Rational(0),
                                    Rational(0), Rational(1), Rational(-1), Rational(0)});
  h.rhs = {Rational(0), Rational(1), Rational(1), Rational(0)};
  return h;
}

inline RationalMatrix square_slack_matrix() {
  return RationalMatrix(4, 4, {Rational(0), Rational(1), Rational(1), Rational(0),
                               Rational(0), Rational(0), Rational(1), Rational(1),
                               Rational(1), Rational(0), Rational(0), Rational(1),
                               Rational(1), Rational(1), Rational(0), Rational(0)});
}

// The affine image psi(P1) with vertices (1,-2),(1,2),(-1,2),(-1,-2) and the
// published facet inequalities x<=1, y/4<=1/2 etc.
inline VRepresentation square_p2() {
  return {2, RationalMatrix(4, 2, {Rational(1), Rational(-2), Rational(1), Rational(2),
                                   Rational(-1), Rational(2), Rational(-1), Rational(-2)})};
}

inline slack::HRepresentation square_p2_hrep() {
  slack::HRepresentation h;
  h.normals = RationalMatrix(
      4, 2, {Rational(1, 2), Rational(0), Rational(0), Rational(1, 4),
             Rational(-1, 2), Rational(0), Rational(0), Rational(-1, 4)});
  h.rhs = {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  return h;
}

// Quadrilateral slack matrix with two entries bumped to 2; still a true
// slack matrix, realized by conv{(0,0),(1,0),(2,1),(0,1)}.
inline RationalMatrix square_slack_with_twos() {
  return RationalMatrix(4, 4, {Rational(0), Rational(1), Rational(1), Rational(0),
                               Rational(0), Rational(0), Rational(1), Rational(1),
                               Rational(1), Rational(0), Rational(0), Rational(2),
                               Rational(1), Rational(2), Rational(0), Rational(0)});
}

inline VRepresentation skew_quadrilateral() {
  return {2, RationalMatrix(4, 2, {Rational(0), Rational(0), Rational(1), Rational(0),
                                   Rational(2), Rational(1), Rational(0), Rational(1)})};
}

/// Vertex-facet incidence of a quadrilateral in the published labelling;
/// the induced row-major variable numbering is the published one.
inline IncidenceStructure quadrilateral_incidence() {
  return IncidenceStructure::from_facet_vertex_sets(2, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

inline std::string quadrilateral_ideal_generator() {
  return "x2*x4*x5*x8 - x1*x3*x6*x7";
}

inline std::vector<std::string> quadrilateral_affine_generators() {
  return {"x1*x3*x6 - x2*x4*x8 + x2*x6*x8 - x3*x6*x8",
          "x2*x4*x5 - x2*x4*x7 + x2*x6*x7 - x3*x6*x7",
          "x1*x4*x5 - x1*x4*x7 + x1*x6*x7 - x4*x5*x8",
          "x1*x3*x5 - x1*x3*x7 + x2*x5*x8 - x3*x5*x8"};
}

inline std::vector<std::string> quadrilateral_scaled_affine_generators() {
  return {"x3*x8 + x4*x8 - x3 - x8",
          "x4*x7 + x4*x8 - x4 - x7",
          "x3*x7 - x4*x8"};
}

inline std::vector<Rational> quadrilateral_nonaffine_point() {
  return {Rational(2), Rational(2), Rational(2), Rational(1),
          Rational(8), Rational(2), Rational(2), Rational(1)};
}

// --- Simplices and cubes -----------------------------------------------------

inline VRepresentation triangle() {
  return {2, RationalMatrix(3, 2, {Rational(0), Rational(0), Rational(1), Rational(0),
                                   Rational(0), Rational(1)})};
}

/// Triangle with centroid at the origin and constant facet right-hand sides.
inline VRepresentation centered_triangle() {
  return {2, RationalMatrix(3, 2, {Rational(1), Rational(0), Rational(0), Rational(1),
                                   Rational(-1), Rational(-1)})};
}

inline IncidenceStructure triangle_incidence() {
  return IncidenceStructure::from_facet_vertex_sets(2, 3, {{1, 2}, {2, 3}, {1, 3}});
}

inline VRepresentation cube3() {
  RationalMatrix m(8, 3);
  for (int i = 0; i < 8; ++i) {
    m.at(i, 0) = Rational(i & 1);
    m.at(i, 1) = Rational((i >> 1) & 1);
    m.at(i, 2) = Rational((i >> 2) & 1);
  }
  return {3, std::move(m)};
}

inline IncidenceStructure cube3_incidence() {
  auto [h, inc] = slack::enumerate_facets(cube3());
  return inc;
}

// --- Section 4.1: non-realizability fixtures ---------------------------------

/// First non-polytopal 3-sphere from Altshuler-Steinberg's enumeration:
/// 8 vertices, 10 facets (5 simplices, 5 square pyramids), d = 4.
inline IncidenceStructure altshuler_steinberg_sphere() {
  return IncidenceStructure::from_facet_vertex_sets(
      4, 8,
      {{1, 2, 3, 4, 5},
       {1, 2, 3, 4, 6},
       {1, 2, 5, 7, 8},
       {1, 2, 6, 7, 8},
       {1, 4, 5, 6, 8},
       {3, 4, 5, 7, 8},
       {2, 3, 5, 7},
       {2, 3, 6, 7},
       {3, 4, 6, 7},
       {4, 6, 7, 8}});
}

/// Tetrahemihexahedron: 6 vertices, 7 faces, a polyhedralization of the real
/// projective plane. Treated with d = 3, so the ideal uses 5-minors.
inline IncidenceStructure tetrahemihexahedron() {
  return IncidenceStructure::from_facet_vertex_sets(
      3, 6,
      {{2, 3, 5}, {3, 4, 6}, {1, 4, 5}, {1, 2, 6}, {2, 4, 5, 6}, {1, 3, 5, 6}, {1, 2, 3, 4}});
}

/// The 25 published generators of the tetrahemihexahedron slack ideal.
inline std::vector<std::string> tetrahemihexahedron_generators() {
  return {"x8*x15*x17 + x7*x14*x18",
          "x4*x15*x17 + x5*x13*x18",
          "x11*x15*x16 + x10*x14*x18",
          "x2*x15*x16 + x1*x13*x18",
          "x5*x12*x16 + x6*x10*x17",
          "x7*x11*x16 - x8*x10*x17",
          "x3*x7*x16 + x1*x9*x17",
          "x2*x5*x16 - x1*x4*x17",
          "x6*x11*x13 + x4*x12*x14",
          "x1*x11*x13 - x2*x10*x14",
          "x5*x8*x13 - x4*x7*x14",
          "x3*x8*x13 + x2*x9*x14",
          "x6*x7*x11 + x5*x8*x12",
          "x3*x8*x10 + x1*x9*x11",
          "x2*x6*x10 + x1*x4*x12",
          "x6*x11*x15*x17 - x5*x12*x14*x18",
          "x2*x9*x15*x17 - x3*x7*x13*x18",
          "x4*x12*x15*x16 - x6*x10*x13*x18",
          "x3*x8*x15*x16 - x1*x9*x14*x18",
          "x2*x7*x14*x16 - x1*x8*x13*x17",
          "x5*x11*x13*x16 - x4*x10*x14*x17",
          "x2*x6*x9*x11 - x3*x4*x8*x12",
          "x2*x5*x8*x10 - x1*x4*x7*x11",
          "x3*x6*x7*x10 - x1*x5*x9*x12",
          "x3*x4*x7 + x2*x5*x9"};
}

// --- Section 4.2: prism over a square pyramid --------------------------------

/// 4-dimensional prism over a square pyramid: 10 vertices, 7 facets; facet 3
/// is the cube. 28 variables in the symbolic slack matrix.
inline IncidenceStructure prism_over_square_pyramid() {
  return IncidenceStructure::from_facet_vertex_sets(
      4, 10,
      {{6, 7, 8, 9, 10},
       {1, 2, 3, 4, 5},
       {1, 2, 3, 4, 6, 7, 8, 9},
       {1, 2, 5, 6, 7, 10},
       {2, 3, 5, 7, 8, 10},
       {3, 4, 5, 8, 9, 10},
       {1, 4, 5, 6, 9, 10}});
}

/// The 17 published substitutions: 13 scaling ones plus x20=1, x11=1/2,
/// x17=2, x25=1.
inline std::map<std::uint32_t, Rational> prism_substitutions() {
  std::map<std::uint32_t, Rational> subs;
  for (std::uint32_t v : {1, 2, 3, 4, 6, 7, 8, 10, 15, 16, 18, 21, 24}) subs[v] = Rational(1);
  subs[20] = Rational(1);
  subs[11] = Rational(1, 2);
  subs[17] = Rational(2);
  subs[25] = Rational(1);
  return subs;
}

/// The published completed cube slack matrix, as a point of the cube's
/// 24-variable slack variety (row-major over the face submatrix cells).
inline std::vector<Rational> prism_cube_point() {
  return {Rational(1), Rational(1),    Rational(1),  //
          Rational(1), Rational(2),    Rational(1),  //
          Rational(1), Rational(1),    Rational(1),  //
          Rational(1), Rational(1, 2), Rational(1),  //
          Rational(1), Rational(1),    Rational(2),  //
          Rational(1), Rational(3),    Rational(1),  //
          Rational(1), Rational(3, 2), Rational(1),  //
          Rational(1), Rational(1),    Rational(1)};
}

// --- Example: vertex split of a vertex sum (5-polytope, 32 variables) --------

inline IncidenceStructure vertex_split_5polytope() {
  return IncidenceStructure::from_facet_vertex_sets(
      5, 8,
      {{1, 2, 3, 6, 8},
       {2, 3, 4, 6, 7, 8},
       {1, 2, 3, 4, 8},
       {1, 3, 5, 6, 7, 8},
       {1, 3, 4, 5, 7, 8},
       {1, 2, 5, 6, 8},
       {2, 4, 5, 6, 7, 8},
       {1, 2, 4, 5, 8},
       {1, 2, 3, 6, 7},
       {1, 2, 3, 4, 7},
       {1, 2, 5, 6, 7},
       {1, 2, 4, 5, 7}});
}

// --- Section 4.3: non-rational point-line configuration ----------------------

/// 9 points on 9 lines, treated as if it were a 2-polytope; 53 variables.
inline IncidenceStructure nonrational_configuration() {
  return IncidenceStructure::from_facet_vertex_sets(
      2, 9,
      {{6, 7, 8, 9},
       {1, 5, 6},
       {3, 4, 7},
       {1, 2, 8},
       {4, 5, 9},
       {2, 4, 6},
       {2, 5, 7},
       {3, 5, 8},
       {1, 3, 9}});
}

/// The 16 published fixed variables for the configuration.
inline std::vector<std::uint32_t> nonrational_fixed_vars() {
  return {1, 2, 8, 14, 20, 26, 30, 36, 42, 44, 47, 48, 50, 51, 52, 53};
}

// --- Deterministic random instances ------------------------------------------

/// Convex polygon with n rational vertices on the unit circle via the
/// tangent-half-angle parametrization, in counterclockwise order.
inline VRepresentation random_polygon(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-60, 60);
  std::set<Rational> params;
  while (params.size() < n) {
    long p = num(rng);
    params.insert(Rational(p, 7));
  }
  RationalMatrix m(n, 2);
  std::size_t i = 0;
  for (const Rational& t : params) {
    const Rational denom = Rational(1) + t * t;
    m.at(i, 0) = (Rational(1) - t * t) / denom;
    m.at(i, 1) = (t + t) / denom;
    ++i;
  }
  return {2, std::move(m)};
}

/// Random invertible affine image of the 3-cube (keeps the combinatorics).
inline VRepresentation random_parallelepiped(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  while (true) {
    RationalMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = Rational(num(rng), 1 + (i + j) % 2);
    if (slack::rank(a) != 3) continue;
    RationalVector shift{Rational(num(rng)), Rational(num(rng)), Rational(num(rng))};
    VRepresentation cube = cube3();
    RationalMatrix m(8, 3);
    for (int v = 0; v < 8; ++v)
      for (int i = 0; i < 3; ++i) {
        Rational s = shift[i];
        for (int j = 0; j < 3; ++j) s += a.at(i, j) * cube.vertices.at(v, j);
        m.at(v, i) = s;
      }
    return {3, std::move(m)};
  }
}

/// Random 3-simplex with affinely independent rational vertices.
inline VRepresentation random_simplex3(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  while (true) {
    RationalMatrix m(4, 3);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(num(rng), 1 + (i % 3));
    RationalMatrix diff(3, 3);
    for (int i = 1; i < 4; ++i)
      for (int j = 0; j < 3; ++j) diff.at(i - 1, j) = m.at(i, j) - m.at(0, j);
    if (slack::rank(diff) == 3) return {3, std::move(m)};
  }
}

inline Rational random_positive_rational(std::mt19937_64& rng, long max_num = 12) {
  std::uniform_int_distribution<long> num(1, max_num);
  return Rational(num(rng), num(rng));
}

}  // namespace fixtures

#endif  // SLACK_TESTS_PAPER_FIXTURES_HPP
