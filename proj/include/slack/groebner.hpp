#ifndef SLACK_GROEBNER_HPP
#define SLACK_GROEBNER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slack/polynomial.hpp"

namespace slack {

/// Resource limits for ideal computations. Exceeding a budget raises
/// BudgetExhausted; a budgeted computation never returns a wrong answer.
struct Budget {
  std::uint64_t max_pairs = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct GroebnerStats {
  std::uint64_t pairs_processed = 0;
  std::uint64_t reduction_steps = 0;
};

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(GroebnerStats used)
      : std::runtime_error("budget exhausted"), used_(used) {}
  const GroebnerStats& used() const { return used_; }

 private:
  GroebnerStats used_;
};

namespace detail {

class BudgetClock {
 public:
  BudgetClock(const Budget& budget, GroebnerStats* stats)
      : budget_(budget), stats_(stats), start_(std::chrono::steady_clock::now()) {}

  void count_pair() {
    local_.pairs_processed++;
    if (stats_) stats_->pairs_processed++;
    if (local_.pairs_processed > budget_.max_pairs) throw BudgetExhausted(local_);
    check_time();
  }

  void count_reduction_step() {
    local_.reduction_steps++;
    if (stats_) stats_->reduction_steps++;
    if ((local_.reduction_steps & 0xff) == 0) check_time();
  }

  void check_time() const {
    if (budget_.max_seconds == std::numeric_limits<double>::infinity()) return;
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > budget_.max_seconds) throw BudgetExhausted(local_);
  }

 private:
  Budget budget_;
  GroebnerStats* stats_;
  GroebnerStats local_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Generating set of an ideal. Generators are kept content-free (coprime
/// integer coefficients) with positive leading coefficient under grevlex.
struct IdealBasis {
  std::uint32_t ring_vars = 0;
  std::vector<Polynomial> generators;
};

inline IdealBasis make_basis(std::uint32_t ring_vars, std::vector<Polynomial> gens) {
  const MonomialOrder order = MonomialOrder::grevlex();
  IdealBasis b;
  b.ring_vars = ring_vars;
  for (Polynomial& g : gens) {
    if (g.nvars() != ring_vars)
      throw std::invalid_argument("make_basis: generator ring mismatch");
    Polynomial p = make_primitive(resort(g, order));
    if (!p.is_zero()) b.generators.push_back(std::move(p));
  }
  return b;
}

/// Reduced Groebner basis: every element monic and fully reduced against the
/// others, no leading monomial dividing another. Canonical for (ideal, order).
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
  std::uint32_t ring_vars = 0;

  bool is_trivial_ideal() const {
    return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
  }
};

namespace detail {

// Multiplies a polynomial by c*m. Relative term order is preserved under any
// multiplicative order, so no re-sort happens.
inline Polynomial times_term(const Polynomial& p, const Rational& c, const Monomial& m) {
  Polynomial r(p.nvars());
  auto& out = r.mutable_terms();
  out.reserve(p.terms().size());
  for (const Term& t : p.terms()) out.push_back({c * t.coeff, m.is_one() ? t.mono : t.mono * m});
  return r;
}

struct BasisEntry {
  Polynomial poly;
  Monomial lm;
  std::uint64_t mask = 0;
  bool alive = true;
};

inline std::vector<BasisEntry> to_entries(const std::vector<Polynomial>& polys) {
  std::vector<BasisEntry> es;
  es.reserve(polys.size());
  for (const Polynomial& p : polys)
    es.push_back({p, p.leading_monomial(), p.leading_monomial().support_mask(), true});
  return es;
}

// Full normal form of f against the live entries. Deterministic: the first
// entry (in list order) whose leading monomial divides the current lead wins.
inline Polynomial reduce_full(Polynomial f, const std::vector<BasisEntry>& basis,
                              const MonomialOrder& order, BudgetClock* clock) {
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    // Peel off any irreducible leading run, then cancel one reducible lead.
    std::size_t pos = 0;
    const auto& terms = f.terms();
    const BasisEntry* hit = nullptr;
    for (; pos < terms.size(); ++pos) {
      const Monomial& m = terms[pos].mono;
      for (const BasisEntry& e : basis) {
        if (!e.alive) continue;
        if ((e.mask & ~m.support_mask()) != 0) continue;
        if (e.lm.divides(m)) {
          hit = &e;
          break;
        }
      }
      if (hit) break;
      remainder.push_back(terms[pos]);
    }
    if (!hit) break;
    if (clock) clock->count_reduction_step();
    const Term& lead = terms[pos];
    const Monomial q = *hit->lm.quotient_of(lead.mono);
    const Rational c = -lead.coeff / hit->poly.leading_coeff();
    Polynomial tail(f.nvars());
    tail.mutable_terms().assign(terms.begin() + pos, terms.end());
    f = axpy(tail, c, q, hit->poly, order);
  }
  Polynomial r(f.nvars());
  r.mutable_terms() = std::move(remainder);
  return r;
}

inline Polynomial s_polynomial(const BasisEntry& a, const BasisEntry& b,
                               const MonomialOrder& order) {
  const Monomial l = a.lm.lcm_with(b.lm);
  const Polynomial fa = times_term(a.poly, a.poly.leading_coeff().reciprocal(),
                                   *a.lm.quotient_of(l));
  return axpy(fa, -b.poly.leading_coeff().reciprocal(), *b.lm.quotient_of(l), b.poly, order);
}

struct Pair {
  std::uint32_t i, j;  // i < j
  Monomial lcm;
};

// Mutual reduction of a generating set to a fixpoint. Sound on arbitrary
// bases (not just Groebner ones); shrinks redundant inputs drastically.
inline void autoreduce(std::vector<BasisEntry>& basis, const MonomialOrder& order,
                       BudgetClock* clock) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].alive) continue;
      basis[i].alive = false;  // exclude self while reducing
      Polynomial h = reduce_full(basis[i].poly, basis, order, clock);
      if (h.is_zero()) {
        changed = true;
        continue;
      }
      h = make_primitive(std::move(h));
      if (h != basis[i].poly) changed = true;
      basis[i] = {h, h.leading_monomial(), h.leading_monomial().support_mask(), true};
    }
    std::erase_if(basis, [](const BasisEntry& e) { return !e.alive; });
  }
}

}  // namespace detail

/// Normal form of f with respect to `basis` under `order`: no monomial of the
/// result is divisible by any leading monomial of the basis, and f minus the
/// result lies in the ideal generated by the basis.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                         const MonomialOrder& order) {
  std::vector<detail::BasisEntry> entries;
  for (const Polynomial& g : basis) {
    if (g.nvars() != f.nvars())
      throw std::invalid_argument("reduce: ring mismatch");
    if (!g.is_zero()) {
      Polynomial s = resort(g, order);
      entries.push_back({s, s.leading_monomial(), s.leading_monomial().support_mask(), true});
    }
  }
  return detail::reduce_full(resort(f, order), entries, order, nullptr);
}

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// coprime-lcm and chain criteria. Pair selection follows the normal
/// strategy: smallest lcm in the order, ties by generator indices, so the
/// run is deterministic. Returns the reduced Groebner basis.
inline GroebnerBasis buchberger(const IdealBasis& ideal, const MonomialOrder& order,
                                const Budget& budget = {}, GroebnerStats* stats = nullptr) {
  detail::BudgetClock clock(budget, stats);

  std::vector<detail::BasisEntry> basis;
  {
    std::vector<Polynomial> prepared;
    for (const Polynomial& g : ideal.generators) {
      Polynomial p = make_primitive(resort(g, order));
      if (!p.is_zero()) prepared.push_back(std::move(p));
    }
    std::sort(prepared.begin(), prepared.end(), [&](const Polynomial& a, const Polynomial& b) {
      const int c = order.compare(a.leading_monomial(), b.leading_monomial());
      if (c != 0) return c < 0;
      return a.str() < b.str();
    });
    prepared.erase(std::unique(prepared.begin(), prepared.end()), prepared.end());
    basis = detail::to_entries(prepared);
    detail::autoreduce(basis, order, &clock);
  }

  auto pair_less = [&](const detail::Pair& a, const detail::Pair& b) {
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    const int s = Monomial::structural_cmp(a.lcm, b.lcm);
    if (s != 0) return s < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<detail::Pair, decltype(pair_less)> pairs(pair_less);

  // Gebauer-Moeller update: install pairs (i, t) for the new element t,
  // discarding by the M, F and coprime criteria, then prune old pairs by the
  // chain (B) criterion.
  auto update_pairs = [&](std::uint32_t t) {
    const detail::BasisEntry& gt = basis[t];
    std::vector<detail::Pair> cand;
    for (std::uint32_t i = 0; i < t; ++i) {
      if (!basis[i].alive) continue;
      cand.push_back({i, t, basis[i].lm.lcm_with(gt.lm)});
    }
    // M: drop (i,t) when some lcm(j,t) properly divides lcm(i,t).
    std::vector<bool> drop(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && !drop[a]; ++b) {
        if (a == b || drop[b]) continue;
        if (cand[b].lcm != cand[a].lcm && cand[b].lcm.divides(cand[a].lcm)) drop[a] = true;
      }
    }
    // F: among pairs sharing an lcm keep the first; coprime kills the group.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      bool group_coprime = basis[cand[a].i].lm.coprime_with(gt.lm);
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (drop[b] || cand[b].lcm != cand[a].lcm) continue;
        drop[b] = true;
        if (basis[cand[b].i].lm.coprime_with(gt.lm)) group_coprime = true;
      }
      if (group_coprime) drop[a] = true;
    }
    // B (chain): prune old pairs whose lcm is divisible by the new leading
    // monomial, unless one of their own lcms coincides with it.
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (gt.lm.divides(it->lcm) &&
          basis[it->i].lm.lcm_with(gt.lm) != it->lcm &&
          basis[it->j].lm.lcm_with(gt.lm) != it->lcm)
        it = pairs.erase(it);
      else
        ++it;
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (!drop[a]) pairs.insert(std::move(cand[a]));
  };

  for (std::uint32_t t = 0; t < basis.size(); ++t) update_pairs(t);

  while (!pairs.empty()) {
    const detail::Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    clock.count_pair();
    Polynomial h = detail::reduce_full(
        detail::s_polynomial(basis[p.i], basis[p.j], order), basis, order, &clock);
    if (h.is_zero()) continue;
    h = make_primitive(std::move(h));
    basis.push_back({h, h.leading_monomial(), h.leading_monomial().support_mask(), true});
    update_pairs(static_cast<std::uint32_t>(basis.size() - 1));
  }

  // Minimalize (drop elements whose lead is divisible by another lead), then
  // tail-reduce; the result is the canonical reduced basis.
  std::vector<Polynomial> gb;
  for (const auto& e : basis)
    if (e.alive) gb.push_back(e.poly);
  std::sort(gb.begin(), gb.end(), [&](const Polynomial& a, const Polynomial& b) {
    const int c = order.compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return a.str() < b.str();
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : gb) {
    bool redundant = false;
    for (const Polynomial& k : minimal)
      if (k.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  GroebnerBasis result;
  result.order = order;
  result.ring_vars = ideal.ring_vars;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<detail::BasisEntry> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        others.push_back({minimal[j], minimal[j].leading_monomial(),
                          minimal[j].leading_monomial().support_mask(), true});
    result.elements.push_back(
        make_monic(detail::reduce_full(minimal[i], others, order, &clock)));
  }
  return result;
}

inline Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb) {
  return reduce(f, gb.elements, gb.order);
}

inline bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb) {
  return reduce(f, gb).is_zero();
}

/// True iff the ideal is the whole ring (reduced basis = {1}).
inline bool is_trivial(const IdealBasis& ideal, const Budget& budget = {},
                       GroebnerStats* stats = nullptr) {
  return buchberger(ideal, MonomialOrder::grevlex(), budget, stats).is_trivial_ideal();
}

/// Generators of the elimination ideal: the intersection of the ideal with
/// the subring of variables outside `front`. Computed as the front-free
/// elements of a Groebner basis under a block elimination order.
inline IdealBasis eliminate(const IdealBasis& ideal, const std::vector<std::uint32_t>& front,
                            const Budget& budget = {}, GroebnerStats* stats = nullptr) {
  for (std::uint32_t v : front)
    if (v == 0 || v > ideal.ring_vars)
      throw std::invalid_argument("eliminate: front variable outside ring");
  const MonomialOrder elim = MonomialOrder::elimination(front);
  GroebnerBasis gb = buchberger(ideal, elim, budget, stats);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elements) {
    // Under a block order a front-free lead forces a front-free polynomial.
    bool front_free = true;
    for (const VarPow& f : g.leading_monomial().factors())
      if (elim.is_front(f.var)) {
        front_free = false;
        break;
      }
    if (front_free) kept.push_back(g);
  }
  return make_basis(ideal.ring_vars, std::move(kept));
}

namespace detail {

inline Polynomial extend_ring(const Polynomial& p, std::uint32_t new_nvars,
                              const MonomialOrder& order) {
  return Polynomial::from_terms(new_nvars, p.terms(), order);
}

}  // namespace detail

/// Saturation I : f^inf via the extended-ring construction: a fresh variable
/// y is added, y*f - 1 adjoined, and y eliminated.
inline IdealBasis saturate(const IdealBasis& ideal, const Polynomial& f,
                           const Budget& budget = {}, GroebnerStats* stats = nullptr) {
  if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  const std::uint32_t ext_vars = ideal.ring_vars + 1;
  const std::uint32_t y = ext_vars;
  const MonomialOrder grevlex = MonomialOrder::grevlex();

  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators.size() + 1);
  for (const Polynomial& g : ideal.generators)
    gens.push_back(detail::extend_ring(g, ext_vars, grevlex));
  Polynomial yf = mul(detail::extend_ring(f, ext_vars, grevlex),
                      Polynomial::variable(ext_vars, y), grevlex);
  gens.push_back(sub(yf, Polynomial::constant(ext_vars, Rational(1)), grevlex));

  IdealBasis extended = make_basis(ext_vars, std::move(gens));
  IdealBasis eliminated = eliminate(extended, {y}, budget, stats);

  std::vector<std::uint32_t> identity(ext_vars);
  for (std::uint32_t v = 1; v <= ideal.ring_vars; ++v) identity[v - 1] = v;
  identity[y - 1] = 0;  // must not occur
  std::vector<Polynomial> back;
  for (const Polynomial& g : eliminated.generators)
    back.push_back(rename_vars(g, identity, ideal.ring_vars, grevlex));
  return make_basis(ideal.ring_vars, std::move(back));
}

/// Iterated saturation by every variable: ((I : x1^inf) : x2^inf) ... which
/// equals the saturation by the product of all variables. Variables absent
/// from every generator are nonzerodivisors modulo the ideal and are skipped.
inline IdealBasis saturate_all_vars(const IdealBasis& ideal, const Budget& budget = {},
                                    GroebnerStats* stats = nullptr) {
  IdealBasis cur = ideal;
  for (std::uint32_t v = 1; v <= ideal.ring_vars; ++v) {
    bool appears = false;
    for (const Polynomial& g : cur.generators)
      if (g.contains_var(v)) {
        appears = true;
        break;
      }
    if (!appears) continue;
    cur = saturate(cur, Polynomial::variable(ideal.ring_vars, v), budget, stats);
  }
  return cur;
}

namespace detail {

// Minimum hitting set over the supports of the leading monomials, by plain
// branch and bound. Feasible at desk scale (<= ~55 variables).
inline std::size_t min_hitting_set(std::vector<std::vector<std::uint32_t>> edges) {
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  // Drop supersets: hitting a subset hits the superset.
  std::vector<std::vector<std::uint32_t>> minimal;
  for (const auto& e : edges) {
    bool super = false;
    for (const auto& m : minimal)
      if (std::includes(e.begin(), e.end(), m.begin(), m.end())) {
        super = true;
        break;
      }
    if (!super) minimal.push_back(e);
  }
  std::size_t best = minimal.size();  // hitting one vertex per edge always works
  std::vector<std::uint32_t> chosen;
  auto covered = [&](const std::vector<std::uint32_t>& e) {
    for (std::uint32_t v : chosen)
      if (std::binary_search(e.begin(), e.end(), v)) return true;
    return false;
  };
  auto rec = [&](auto&& self) -> void {
    if (chosen.size() >= best) return;
    const std::vector<std::uint32_t>* pick = nullptr;
    for (const auto& e : minimal)
      if (!covered(e)) {
        pick = &e;
        break;
      }
    if (!pick) {
      best = chosen.size();
      return;
    }
    for (std::uint32_t v : *pick) {
      chosen.push_back(v);
      self(self);
      chosen.pop_back();
    }
  };
  rec(rec);
  return best;
}

}  // namespace detail

/// Krull dimension of the quotient ring, or nullopt for the trivial ideal.
/// Computed combinatorially on the initial ideal: the dimension equals the
/// maximum size of a variable set containing no leading-monomial support.
inline std::optional<std::uint32_t> dimension(const IdealBasis& ideal,
                                              const Budget& budget = {},
                                              GroebnerStats* stats = nullptr) {
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), budget, stats);
  if (gb.is_trivial_ideal()) return std::nullopt;
  std::vector<std::vector<std::uint32_t>> supports;
  for (const Polynomial& g : gb.elements) {
    std::vector<std::uint32_t> s;
    for (const VarPow& f : g.leading_monomial().factors()) s.push_back(f.var);
    supports.push_back(std::move(s));
  }
  const std::size_t cover = detail::min_hitting_set(std::move(supports));
  return ideal.ring_vars - static_cast<std::uint32_t>(cover);
}

/// Restricts an ideal whose generators only involve `vars` to the subring of
/// those variables; the k-th smallest listed variable becomes x_k.
inline IdealBasis restrict_to_vars(const IdealBasis& ideal, std::vector<std::uint32_t> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<std::uint32_t> rename(ideal.ring_vars, 0);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k] == 0 || vars[k] > ideal.ring_vars)
      throw std::invalid_argument("restrict_to_vars: variable outside ring");
    rename[vars[k] - 1] = static_cast<std::uint32_t>(k + 1);
  }
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators)
    gens.push_back(rename_vars(g, rename, static_cast<std::uint32_t>(vars.size()), grevlex));
  return make_basis(static_cast<std::uint32_t>(vars.size()), std::move(gens));
}

/// Ideal equality by mutual membership of generators.
inline bool same_ideal(const IdealBasis& a, const IdealBasis& b, const Budget& budget = {}) {
  if (a.ring_vars != b.ring_vars) return false;
  const MonomialOrder order = MonomialOrder::grevlex();
  GroebnerBasis ga = buchberger(a, order, budget);
  for (const Polynomial& g : b.generators)
    if (!ideal_membership(g, ga)) return false;
  GroebnerBasis gb = buchberger(b, order, budget);
  for (const Polynomial& g : a.generators)
    if (!ideal_membership(g, gb)) return false;
  return true;
}

}  // namespace slack

#endif  // SLACK_GROEBNER_HPP
