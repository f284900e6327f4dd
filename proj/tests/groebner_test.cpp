#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "paper_fixtures.hpp"
#include "slack/groebner.hpp"
#include "slack/symbolic_slack.hpp"

using namespace slack;

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

Polynomial P(const char* s, std::uint32_t nvars) {
  return parse_polynomial(s, nvars, kGrevlex);
}

}  // namespace

TEST_CASE("reduce: published-style single steps") {
  CHECK(reduce(P("x1^2", 2), {P("x1", 2)}, kGrevlex).is_zero());
  // Under grevlex with x1 > ... > x8 the quadrilateral binomial leads with
  // x1*x3*x6*x7; a single division step swaps it for the other monomial.
  CHECK(reduce(P("x1*x3*x6*x7", 8), {P("x2*x4*x5*x8 - x1*x3*x6*x7", 8)}, kGrevlex) ==
        P("x2*x4*x5*x8", 8));
  CHECK(reduce(P("x2*x4*x5*x8", 8), {P("x2*x4*x5*x8 - x1*x3*x6*x7", 8)}, kGrevlex) ==
        P("x2*x4*x5*x8", 8));  // already a normal form
  CHECK(reduce(P("1", 2), {P("x1", 2)}, kGrevlex) == P("1", 2));
}

TEST_CASE("reduce leaves no reducible monomial") {
  const auto basis = {P("x1^2 - x2", 3), P("x2*x3 - 1", 3)};
  const Polynomial r = reduce(P("x1^4*x3 + x1^2*x2*x3^2", 3), basis, kGrevlex);
  for (const Term& t : r.terms()) {
    CHECK(!P("x1^2", 3).leading_monomial().divides(t.mono));
    CHECK(!P("x2*x3", 3).leading_monomial().divides(t.mono));
  }
}

TEST_CASE("buchberger: principal ideal is its own basis") {
  const auto gb = buchberger(make_basis(2, {P("x1", 2)}), kGrevlex);
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == P("x1", 2));
}

TEST_CASE("buchberger: circle and line") {
  const auto gb =
      buchberger(make_basis(2, {P("x1^2 + x2^2 - 1", 2), P("x1 - x2", 2)}), kGrevlex);
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0] == P("x1 - x2", 2));
  CHECK(gb.elements[1] == P("x2^2 - 1/2", 2));
}

TEST_CASE("buchberger: quadrilateral scaled minors saturate to x8 - 1") {
  const auto inc = fixtures::quadrilateral_incidence();
  const auto fix = fix_variables_by_scaling(inc, ScalingFix::Mode::Projective);
  const auto ideal = slack_ideal(inc, fix);
  const auto gb = buchberger(ideal, kGrevlex);
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == P("x8 - 1", 8));
}

TEST_CASE("ideal membership") {
  const auto quad = buchberger(
      make_basis(8, {P(fixtures::quadrilateral_ideal_generator().c_str(), 8)}), kGrevlex);
  CHECK(ideal_membership(P("x2*x4*x5*x8 - x1*x3*x6*x7", 8), quad));
  CHECK(!ideal_membership(P("1", 8), buchberger(make_basis(8, {P("x1", 8)}), kGrevlex)));
}

TEST_CASE("eliminate: substitution of a line into a conic") {
  const auto e = eliminate(make_basis(2, {P("x1 - x2", 2), P("x2^2 - 2", 2)}), {2});
  REQUIRE(e.generators.size() == 1);
  CHECK(e.generators[0] == P("x1^2 - 2", 2));
}

TEST_CASE("eliminate: variable not involved") {
  const auto e = eliminate(make_basis(2, {P("x1", 2)}), {2});
  REQUIRE(e.generators.size() == 1);
  CHECK(e.generators[0] == P("x1", 2));
}

TEST_CASE("eliminate output is free of the front block") {
  const auto e = eliminate(
      make_basis(3, {P("x1*x2 - x3", 3), P("x1 + x2 + x3", 3), P("x2^2 - 1", 3)}), {1, 2});
  for (const Polynomial& g : e.generators) {
    CHECK(!g.contains_var(1));
    CHECK(!g.contains_var(2));
  }
}

TEST_CASE("saturate: published-style examples") {
  const auto s1 = saturate(make_basis(2, {P("x1*x2", 2)}), Polynomial::variable(2, 1));
  REQUIRE(s1.generators.size() == 1);
  CHECK(s1.generators[0] == P("x2", 2));

  const auto s2 = saturate(make_basis(2, {P("x1^2*x2 - x1", 2)}), Polynomial::variable(2, 1));
  REQUIRE(s2.generators.size() == 1);
  CHECK(s2.generators[0] == P("x1*x2 - 1", 2));

  // det of the quadrilateral pattern is already saturated.
  const auto inc = fixtures::quadrilateral_incidence();
  const auto minors = symbolic_minors(SymbolicSlackMatrix(inc), 4, std::nullopt, false);
  REQUIRE(minors.generators.size() == 1);
  IdealBasis cur = minors;
  for (std::uint32_t v = 1; v <= 8; ++v)
    cur = saturate(cur, Polynomial::variable(8, v));
  REQUIRE(cur.generators.size() == 1);
  CHECK(cur.generators[0] ==
        make_primitive(P(fixtures::quadrilateral_ideal_generator().c_str(), 8)));
}

TEST_CASE("saturate_all_vars equals iterated saturation and is idempotent") {
  const auto inc = fixtures::quadrilateral_incidence();
  const auto ideal = slack_ideal(inc);
  REQUIRE(ideal.generators.size() == 1);
  CHECK(ideal.generators[0] ==
        make_primitive(P(fixtures::quadrilateral_ideal_generator().c_str(), 8)));
  const auto again = saturate_all_vars(ideal);
  CHECK(same_ideal(ideal, again));

  // Affine quadrilateral minors saturate to the four published cubics.
  const auto affine = affine_slack_ideal(inc);
  REQUIRE(affine.generators.size() == 4);
  for (const auto& s : fixtures::quadrilateral_affine_generators())
    CHECK(ideal_membership(P(s.c_str(), 8), buchberger(affine, kGrevlex)));
}

TEST_CASE("saturation output contains the input ideal") {
  const auto in = make_basis(3, {P("x1*x2 - x1*x3", 3), P("x1^2*x3 - x1", 3)});
  const auto out = saturate_all_vars(in);
  const auto gb = buchberger(out, kGrevlex);
  for (const Polynomial& g : in.generators) CHECK(ideal_membership(g, gb));
}

TEST_CASE("is_trivial") {
  CHECK(is_trivial(make_basis(1, {P("1", 1)})));
  CHECK(is_trivial(make_basis(2, {P("x1", 2), P("x1 - 1", 2)})));
  CHECK(!is_trivial(make_basis(1, {P("x1", 1)})));
  CHECK(!is_trivial(make_basis(1, {})));
}

TEST_CASE("dimension") {
  CHECK(dimension(make_basis(5, {})) == 5);  // zero ideal
  CHECK(dimension(make_basis(2, {P("x1*x2", 2)})) == 1);
  CHECK(!dimension(make_basis(2, {P("1", 2)})).has_value());  // empty
  CHECK(dimension(make_basis(3, {P("x1 - x2", 3)})) == 2);    // hypersurface
}

TEST_CASE("dimension is invariant under variable permutation") {
  std::mt19937_64 rng(11);
  const std::vector<Polynomial> gens = {P("x1*x2 - x3^2", 4), P("x2*x4 - 1", 4),
                                        P("x1^2*x4 - x3", 4)};
  const auto base = dimension(make_basis(4, gens));
  std::vector<std::uint32_t> perm = {1, 2, 3, 4};
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Polynomial> renamed;
    for (const auto& g : gens) renamed.push_back(rename_vars(g, perm, 4, kGrevlex));
    CHECK(dimension(make_basis(4, renamed)) == base);
  }
}

TEST_CASE("reduced basis is canonical under generator permutation") {
  std::mt19937_64 rng(8);
  const auto inc = fixtures::quadrilateral_incidence();
  std::vector<IdealBasis> suite;
  suite.push_back(affine_slack_ideal(inc));
  suite.push_back(make_basis(
      3, {P("x1^2 - x2*x3", 3), P("x1*x2 - x3", 3), P("x2^2 - x1", 3), P("x3^2 - x1*x2", 3)}));
  for (const auto& ideal : suite) {
    const auto gb = buchberger(ideal, kGrevlex);
    std::vector<Polynomial> gens = ideal.generators;
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      const auto gb2 = buchberger(make_basis(ideal.ring_vars, gens), kGrevlex);
      CHECK(gb2.elements == gb.elements);
    }
  }
}

TEST_CASE("all S-polynomials of a returned basis reduce to zero") {
  const auto inc = fixtures::quadrilateral_incidence();
  for (const auto& ideal :
       {affine_slack_ideal(inc),
        make_basis(3, {P("x1*x2 - x3", 3), P("x2*x3 - x1", 3), P("x1*x3 - x2", 3)})}) {
    const auto gb = buchberger(ideal, kGrevlex);
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
      for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
        const auto& f = gb.elements[i];
        const auto& g = gb.elements[j];
        const Monomial l = f.leading_monomial().lcm_with(g.leading_monomial());
        const Polynomial s =
            axpy(detail::times_term(f, f.leading_coeff().reciprocal(),
                                    *f.leading_monomial().quotient_of(l)),
                 -g.leading_coeff().reciprocal(), *g.leading_monomial().quotient_of(l), g,
                 kGrevlex);
        CHECK(reduce(s, gb).is_zero());
      }
  }
}

TEST_CASE("budgets raise the distinguished failure, never a wrong answer") {
  Budget tiny;
  tiny.max_pairs = 1;
  // A basis needing several pairs.
  const auto ideal = make_basis(
      3, {P("x1^2 - x2*x3", 3), P("x1*x2 - x3", 3), P("x2^2 - x1", 3)});
  CHECK_THROWS_AS(buchberger(ideal, kGrevlex, tiny), BudgetExhausted);
}

TEST_CASE("restrict_to_vars renames into the subring") {
  const auto ideal = make_basis(5, {P("x2*x4 - x5", 5)});
  const auto sub = restrict_to_vars(ideal, {2, 4, 5});
  CHECK(sub.ring_vars == 3);
  REQUIRE(sub.generators.size() == 1);
  CHECK(sub.generators[0] == P("x1*x2 - x3", 3));
  CHECK_THROWS(restrict_to_vars(ideal, {2, 4}));  // x5 has no image
}
