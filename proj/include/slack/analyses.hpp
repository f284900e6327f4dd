#ifndef SLACK_ANALYSES_HPP
#define SLACK_ANALYSES_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slack/symbolic_slack.hpp"

namespace slack {

/// Outcome of one of the decision probes, with enough certificate data for a
/// verifier to re-check the verdict independently (membership reductions,
/// substitutions, positivity).
struct AnalysisReport {
  std::string probe;
  std::string verdict;
  bool conclusive = false;
  std::string method;  // which computational route produced the verdict

  std::vector<Polynomial> certificates;
  std::vector<Rational> witness;
  std::optional<std::uint32_t> dim_elimination;
  std::optional<std::uint32_t> dim_face;
  std::optional<bool> containment;
  std::optional<bool> replay_trivial;

  std::uint32_t ring_vars = 0;
  GroebnerStats budget_used;
  double wall_seconds = 0.0;
};

namespace detail {

class ProbeClock {
 public:
  explicit ProbeClock(const Budget& total)
      : total_(total), start_(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  /// Budget for the next stage: full pair budget, remaining wall-clock.
  Budget stage() const {
    Budget b = total_;
    if (b.max_seconds != std::numeric_limits<double>::infinity()) {
      b.max_seconds = total_.max_seconds - elapsed();
      if (b.max_seconds <= 0) throw BudgetExhausted({});
    }
    return b;
  }

 private:
  Budget total_;
  std::chrono::steady_clock::time_point start_;
};

inline bool all_coeffs_same_sign(const Polynomial& p) {
  if (p.is_zero()) return false;
  const int s = p.terms().front().coeff.sign();
  for (const Term& t : p.terms())
    if (t.coeff.sign() != s) return false;
  return true;
}

// Product of the variables occurring in the basis elements.
inline Monomial product_of_used_vars(const std::vector<Polynomial>& polys) {
  std::vector<VarPow> fs;
  std::vector<std::uint32_t> vars;
  for (const Polynomial& p : polys)
    for (std::uint32_t v : p.used_vars()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (std::uint32_t v : vars) fs.push_back({v, 1});
  return Monomial::from_factors(std::move(fs));
}

// Membership of g in the saturation of the ideal behind `gb` by the product
// of its variables: g is in the saturation iff (prod x)^k * g reduces to 0
// for some k. Checks k = 0..max_power; sound, and complete once max_power
// exceeds the true saturation exponent.
inline std::optional<std::uint32_t> saturation_membership_power(const Polynomial& g,
                                                                const GroebnerBasis& gb,
                                                                std::uint32_t max_power) {
  const Monomial prod = product_of_used_vars(gb.elements);
  Polynomial cur = resort(g, gb.order);
  for (std::uint32_t k = 0; k <= max_power; ++k) {
    if (reduce(cur, gb).is_zero()) return k;
    cur = times_term(cur, Rational(1), prod);
  }
  return std::nullopt;
}

// Positive rational roots of a univariate (after content/positivity
// normalization), by the rational root theorem. Returns nullopt when the
// coefficient bounds make divisor enumeration unreasonable.
inline std::optional<std::vector<Rational>> positive_rational_roots(const Polynomial& g) {
  if (g.is_zero() || g.used_vars().size() != 1) return std::nullopt;
  const std::uint32_t var = g.used_vars()[0];

  // Coefficients by exponent; strip the power of x dividing g (x=0 is not a
  // positive root).
  std::map<std::uint32_t, Rational> coeff;
  std::uint32_t min_exp = UINT32_MAX;
  for (const Term& t : g.terms()) {
    const std::uint32_t e = t.mono.exponent_of(var);
    coeff[e] = t.coeff;
    min_exp = std::min(min_exp, e);
  }
  mpz_class lead(0), tail(0);
  std::uint32_t max_exp = 0;
  for (auto& [e, c] : coeff) max_exp = std::max(max_exp, e);
  // g is primitive with integer coefficients by IdealBasis/GB normalization
  // conventions; guard anyway.
  for (auto& [e, c] : coeff)
    if (!c.is_integer()) return std::nullopt;
  lead = coeff[max_exp].numerator();
  tail = coeff[min_exp].numerator();

  auto divisors = [](mpz_class n) -> std::optional<std::vector<mpz_class>> {
    n = ::abs(n);
    if (n == 0) return std::nullopt;
    if (n > 1000000000) return std::nullopt;  // divisor scan not worth it
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
    return ds;
  };
  auto dt = divisors(tail), dl = divisors(lead);
  if (!dt || !dl) return std::nullopt;

  std::vector<Rational> roots;
  for (const mpz_class& p : *dt)
    for (const mpz_class& q : *dl) {
      Rational cand = Rational(p) / Rational(q);
      Rational val(0);
      for (auto& [e, c] : coeff) {
        Rational pw(1);
        for (std::uint32_t k = min_exp; k < e; ++k) pw *= cand;
        val += c * pw;
      }
      if (val.is_zero()) roots.push_back(cand);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace detail

/// Realizability of an abstract incidence. Verdicts:
///  - "non-realizable (trivial ideal)": the slack ideal is the whole ring, so
///    no complex matrix of rank d+1 has this support at all.
///  - "no positive realization (same-sign certificate)": some basis element
///    has coefficients of one sign, hence no strictly positive zero.
///  - "inconclusive" / "inconclusive (budget)" otherwise.
inline AnalysisReport realizability_probe(const IncidenceStructure& inc,
                                          const std::optional<ScalingFix>& fix = std::nullopt,
                                          const Budget& budget = {}) {
  AnalysisReport rep;
  rep.probe = "realizability";
  detail::ProbeClock clock(budget);
  SymbolicSlackMatrix sym(inc);
  rep.ring_vars = sym.var_count();

  try {
    const IdealBasis minors = symbolic_minors(sym, inc.dimension() + 2, fix, false);
    const GroebnerBasis gb =
        buchberger(minors, MonomialOrder::grevlex(), clock.stage(), &rep.budget_used);

    // Triviality of the saturated ideal without computing the saturation:
    // 1 lies in I : (prod x)^inf iff some power of the product of variables
    // lies in I itself.
    if (gb.is_trivial_ideal()) {
      rep.verdict = "non-realizable (trivial ideal)";
      rep.conclusive = true;
      rep.method = "minor ideal already trivial";
      rep.certificates.push_back(Polynomial::constant(sym.var_count(), Rational(1)));
      rep.wall_seconds = clock.elapsed();
      return rep;
    }
    if (auto k = detail::saturation_membership_power(
            Polynomial::constant(sym.var_count(), Rational(1)), gb, 16)) {
      rep.verdict = "non-realizable (trivial ideal)";
      rep.conclusive = true;
      rep.method = "product-power membership in the minor ideal, exponent " +
                   std::to_string(*k);
      const Monomial prod = detail::product_of_used_vars(gb.elements);
      Monomial cert = Monomial::one();
      for (std::uint32_t i = 0; i < *k; ++i) cert = cert * prod;
      rep.certificates.push_back(
          Polynomial::monomial(sym.var_count(), Rational(1), cert));
      rep.wall_seconds = clock.elapsed();
      return rep;
    }

    // Same-sign scan. Saturating can only enlarge the ideal, so try the
    // saturated basis when the budget allows, else scan the minor basis
    // (still sound: its elements lie in the slack ideal).
    std::vector<Polynomial> scan = gb.elements;
    try {
      IdealBasis sat = saturate_all_vars(minors, clock.stage(), &rep.budget_used);
      GroebnerBasis sat_gb =
          buchberger(sat, MonomialOrder::grevlex(), clock.stage(), &rep.budget_used);
      if (sat_gb.is_trivial_ideal()) {
        rep.verdict = "non-realizable (trivial ideal)";
        rep.conclusive = true;
        rep.method = "saturated slack ideal";
        rep.certificates.push_back(Polynomial::constant(sym.var_count(), Rational(1)));
        rep.wall_seconds = clock.elapsed();
        return rep;
      }
      scan = sat_gb.elements;
      rep.method = "saturated slack ideal";
    } catch (const BudgetExhausted&) {
      rep.method = "minor-ideal basis (saturation not finished in budget)";
    }
    for (const Polynomial& g : scan)
      if (detail::all_coeffs_same_sign(g) && !g.is_constant()) {
        rep.verdict = "no positive realization (same-sign certificate)";
        rep.conclusive = true;
        rep.certificates.push_back(g);
        rep.wall_seconds = clock.elapsed();
        return rep;
      }
    rep.verdict = "inconclusive";
  } catch (const BudgetExhausted&) {
    rep.verdict = "inconclusive (budget)";
  }
  rep.wall_seconds = clock.elapsed();
  return rep;
}

/// Rationality of realizations. Verdicts:
///  - "rational witness": a strictly positive rational point of the variety,
///    re-verified by substitution.
///  - "irrationality obstruction": a univariate element of the slack ideal
///    with no positive rational root. Sound but incomplete: conclusions only
///    follow when such a certificate surfaces.
///  - "inconclusive" / "inconclusive (budget)".
inline AnalysisReport rationality_probe(const IncidenceStructure& inc,
                                        const std::optional<ScalingFix>& fix = std::nullopt,
                                        const Budget& budget = {}) {
  AnalysisReport rep;
  rep.probe = "rationality";
  detail::ProbeClock clock(budget);
  SymbolicSlackMatrix sym(inc);
  rep.ring_vars = sym.var_count();
  const std::uint32_t t = sym.var_count();

  try {
    const IdealBasis minors = symbolic_minors(sym, inc.dimension() + 2, fix, false);

    IdealBasis work = minors;
    rep.method = "minor ideal";
    try {
      work = saturate_all_vars(minors, clock.stage(), &rep.budget_used);
      rep.method = "saturated slack ideal";
    } catch (const BudgetExhausted&) {
      // The minor ideal is contained in the slack ideal, so both witness
      // verification and univariate obstructions stay sound on it.
    }
    const GroebnerBasis gb =
        buchberger(work, MonomialOrder::grevlex(), clock.stage(), &rep.budget_used);

    if (!gb.is_trivial_ideal()) {
      // Witness attempt: propagate forced values out of univariate-linear
      // elements, default every remaining coordinate to 1, verify.
      std::map<std::uint32_t, Rational> forced;
      bool progress = true, abandoned = false;
      std::vector<Polynomial> cur = gb.elements;
      while (progress && !abandoned) {
        progress = false;
        for (Polynomial& g : cur) {
          if (g.is_zero()) continue;
          const auto vars = g.used_vars();
          if (vars.size() != 1 || g.total_degree() != 1) continue;
          // a*x + b = 0
          Rational a(0), b(0);
          for (const Term& tm : g.terms())
            (tm.mono.is_one() ? b : a) = tm.coeff;
          const Rational val = -b / a;
          if (val.sign() <= 0) {
            abandoned = true;
            break;
          }
          forced[vars[0]] = val;
          for (Polynomial& h : cur) h = substitute(h, {{vars[0], val}}, gb.order);
          progress = true;
          break;
        }
      }
      if (!abandoned) {
        std::vector<Rational> point(t, Rational(1));
        for (auto& [v, val] : forced) point[v - 1] = val;
        bool ok = true;
        for (const Polynomial& g : gb.elements)
          if (!evaluate(g, point).is_zero()) {
            ok = false;
            break;
          }
        if (ok) {
          rep.verdict = "rational witness";
          rep.conclusive = true;
          rep.witness = std::move(point);
          rep.wall_seconds = clock.elapsed();
          return rep;
        }
      }
    }

    // Obstruction scan: univariate elements of the basis first, then
    // one-variable elimination ideals, each under the remaining budget.
    auto scan_univariate = [&](const Polynomial& g) -> bool {
      auto roots = detail::positive_rational_roots(g);
      if (!roots || !roots->empty()) return false;
      rep.verdict = "irrationality obstruction";
      rep.conclusive = true;
      rep.certificates.push_back(g);
      return true;
    };
    for (const Polynomial& g : gb.elements) {
      if (g.is_constant()) continue;
      if (g.used_vars().size() == 1 && scan_univariate(g)) {
        rep.wall_seconds = clock.elapsed();
        return rep;
      }
    }
    for (std::uint32_t v = 1; v <= t; ++v) {
      bool used = false;
      for (const Polynomial& g : work.generators)
        if (g.contains_var(v)) {
          used = true;
          break;
        }
      if (!used) continue;
      std::vector<std::uint32_t> front;
      for (std::uint32_t u = 1; u <= t; ++u)
        if (u != v) front.push_back(u);
      try {
        IdealBasis ev = eliminate(work, front, clock.stage(), &rep.budget_used);
        for (const Polynomial& g : ev.generators)
          if (!g.is_constant() && scan_univariate(g)) {
            rep.wall_seconds = clock.elapsed();
            return rep;
          }
      } catch (const BudgetExhausted&) {
        break;  // out of time for eliminations; stay inconclusive
      }
    }
    rep.verdict = "inconclusive";
  } catch (const BudgetExhausted&) {
    rep.verdict = "inconclusive (budget)";
  }
  rep.wall_seconds = clock.elapsed();
  return rep;
}

/// Optional replay data for the prescribability probe: values substituted
/// into the polytope's slack ideal and variables eliminated afterwards.
struct PrescribeReplay {
  std::map<std::uint32_t, Rational> substitutions;
  std::vector<std::uint32_t> eliminate_vars;
};

/// Face data of the facet with the given index: the face's own incidence
/// (rows: its vertices; columns: the facets of P meeting it in ridges) and
/// the variables of the corresponding submatrix, in row-major order.
struct FaceData {
  IncidenceStructure face;
  std::vector<std::uint32_t> face_cells;
  std::vector<std::size_t> face_vertex_rows;   // vertex indices of P
  std::vector<std::size_t> face_facet_cols;    // facet indices of P
};

inline FaceData facet_face_data(const IncidenceStructure& inc, std::size_t facet_index) {
  if (facet_index >= inc.facet_count())
    throw std::invalid_argument("facet_face_data: facet index out of range");
  const auto fv = inc.facet_vertices(facet_index);

  // The facets of the face are the inclusion-maximal proper intersections
  // with the other facets of P.
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> inters;
  for (std::size_t j = 0; j < inc.facet_count(); ++j) {
    if (j == facet_index) continue;
    std::vector<std::size_t> is;
    for (std::size_t i : fv)
      if (inc.incident(i, j)) is.push_back(i);
    if (is.empty() || is.size() == fv.size()) continue;
    inters.push_back({j, std::move(is)});
  }
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> chosen;
  for (auto& [j, is] : inters) {
    bool maximal = true;
    for (auto& [j2, is2] : inters) {
      if (j == j2) continue;
      if (is2.size() > is.size() &&
          std::includes(is2.begin(), is2.end(), is.begin(), is.end())) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    bool dup = false;
    for (auto& [jc, isc] : chosen)
      if (isc == is) {
        dup = true;
        break;
      }
    if (!dup) chosen.push_back({j, is});
  }

  FaceData fd;
  fd.face_vertex_rows = fv;
  for (auto& [j, is] : chosen) fd.face_facet_cols.push_back(j);
  fd.face = IncidenceStructure(inc.dimension() - 1, fv.size(), chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (std::size_t r = 0; r < fv.size(); ++r)
      if (inc.incident(fv[r], chosen[c].first)) fd.face.set_incident(r, c);

  SymbolicSlackMatrix sym(inc);
  for (std::size_t i : fv)
    for (std::size_t j : fd.face_facet_cols) {
      const std::uint32_t v = sym.var_at(i, j);
      if (v != 0) fd.face_cells.push_back(v);
    }
  std::sort(fd.face_cells.begin(), fd.face_cells.end());
  return fd;
}

/// Prescribability evidence for a face F of P: computes the elimination
/// ideal E = I_P intersected with the face's variables and the face's own
/// slack ideal I_F, reports the containment I_F within E and both Krull
/// dimensions. A dimension gap is evidence of non-prescribability but not by
/// itself a decision about the positive parts; the optional replay
/// (substitution chain, then elimination) re-runs the completing argument.
inline AnalysisReport prescribability_probe(const IncidenceStructure& inc_P,
                                            const std::vector<std::uint32_t>& face_cells,
                                            const IncidenceStructure& inc_F,
                                            std::uint32_t dim_F,
                                            const std::optional<PrescribeReplay>& replay =
                                                std::nullopt,
                                            const Budget& budget = {}) {
  AnalysisReport rep;
  rep.probe = "prescribability";
  detail::ProbeClock clock(budget);
  SymbolicSlackMatrix sym_P(inc_P);
  rep.ring_vars = sym_P.var_count();
  if (inc_F.dimension() != dim_F)
    throw std::invalid_argument("prescribability_probe: face dimension mismatch");

  try {
    const IdealBasis I_P = slack_ideal(inc_P, std::nullopt, clock.stage(), &rep.budget_used);

    std::vector<std::uint32_t> complement;
    for (std::uint32_t v = 1; v <= sym_P.var_count(); ++v)
      if (!std::binary_search(face_cells.begin(), face_cells.end(), v))
        complement.push_back(v);
    const IdealBasis E = eliminate(I_P, complement, clock.stage(), &rep.budget_used);
    const IdealBasis E_face = restrict_to_vars(E, face_cells);

    const IdealBasis I_F = slack_ideal(inc_F, std::nullopt, clock.stage(), &rep.budget_used);
    if (I_F.ring_vars != E_face.ring_vars)
      throw std::invalid_argument(
          "prescribability_probe: face_cells do not match the face's variable count");

    const GroebnerBasis gbE =
        buchberger(E_face, MonomialOrder::grevlex(), clock.stage(), &rep.budget_used);
    bool contained = true;
    for (const Polynomial& g : I_F.generators)
      if (!ideal_membership(g, gbE)) {
        contained = false;
        break;
      }
    rep.containment = contained;

    rep.dim_elimination = dimension(E_face, clock.stage(), &rep.budget_used);
    rep.dim_face = dimension(I_F, clock.stage(), &rep.budget_used);

    if (replay) {
      IdealBasis substituted = I_P;
      std::vector<Polynomial> subs;
      const MonomialOrder order = MonomialOrder::grevlex();
      for (const Polynomial& g : I_P.generators)
        subs.push_back(substitute(g, replay->substitutions, order));
      substituted = make_basis(I_P.ring_vars, std::move(subs));
      const IdealBasis after =
          eliminate(substituted, replay->eliminate_vars, clock.stage(), &rep.budget_used);
      rep.replay_trivial = is_trivial(after, clock.stage(), &rep.budget_used);
    }

    const bool gap = rep.dim_elimination && rep.dim_face && *rep.dim_elimination < *rep.dim_face;
    if (replay && rep.replay_trivial.value_or(false)) {
      rep.verdict = "non-prescribable (substitution chain replay ends in the trivial ideal)";
      rep.conclusive = true;
    } else if (gap) {
      rep.verdict = "dimension gap (non-prescribability evidence)";
      rep.conclusive = false;  // a gap of ideals does not decide positive parts
    } else {
      rep.verdict = "no dimension gap";
      rep.conclusive = false;
    }
  } catch (const BudgetExhausted&) {
    rep.verdict = "inconclusive (budget)";
  }
  rep.wall_seconds = clock.elapsed();
  return rep;
}

}  // namespace slack

#endif  // SLACK_ANALYSES_HPP
