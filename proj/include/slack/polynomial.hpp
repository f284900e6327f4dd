#ifndef SLACK_POLYNOMIAL_HPP
#define SLACK_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slack/monomial.hpp"
#include "slack/rational.hpp"

namespace slack {

struct Term {
  Rational coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals in a ring of `nvars`
/// variables x1..xn. Terms are kept sorted strictly decreasing under the
/// monomial order the polynomial was last normalized with; operations that
/// combine two polynomials assume both use the same order. No zero
/// coefficients and no duplicate monomials are stored.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(std::uint32_t nvars) : nvars_(nvars) {}

  static Polynomial zero(std::uint32_t nvars) { return Polynomial(nvars); }

  static Polynomial constant(std::uint32_t nvars, Rational c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial::one()});
    return p;
  }

  static Polynomial variable(std::uint32_t nvars, std::uint32_t var) {
    if (var == 0 || var > nvars)
      throw std::invalid_argument("Polynomial: variable out of ring");
    Polynomial p(nvars);
    p.terms_.push_back({Rational(1), Monomial::variable(var)});
    return p;
  }

  static Polynomial monomial(std::uint32_t nvars, Rational c, Monomial m) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
  }

  /// Builds a normalized polynomial: sorts descending under `order`, merges
  /// duplicate monomials, drops zero coefficients.
  static Polynomial from_terms(std::uint32_t nvars, std::vector<Term> terms,
                               const MonomialOrder& order) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      const int c = order.compare(a.mono, b.mono);
      if (c != 0) return c > 0;
      return Monomial::structural_cmp(a.mono, b.mono) > 0;
    });
    Polynomial p(nvars);
    for (Term& t : terms) {
      if (t.coeff.is_zero()) continue;
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::uint32_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (const Term& t : terms_) m |= t.mono.support_mask();
    return m;
  }

  bool contains_var(std::uint32_t var) const {
    for (const Term& t : terms_)
      if (t.mono.contains_var(var)) return true;
    return false;
  }

  std::vector<std::uint32_t> used_vars() const {
    std::vector<std::uint32_t> vs;
    for (const Term& t : terms_)
      for (const VarPow& f : t.mono.factors()) vs.push_back(f.var);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  /// Multiply every coefficient by a nonzero rational; term order unchanged.
  void scale_in_place(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return;
    }
    for (Term& t : terms_) t.coeff *= c;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text form, assuming terms are sorted under the active order:
  /// "x2*x4*x5*x8 - x1*x3*x6*x7", "3/2*x1^2 + 2", "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const Term& t = terms_[i];
      const bool neg = t.coeff.sign() < 0;
      if (i == 0) {
        if (neg) s += '-';
      } else {
        s += neg ? " - " : " + ";
      }
      const Rational mag = neg ? -t.coeff : t.coeff;
      if (t.mono.is_one()) {
        s += mag.str();
      } else if (mag.is_one()) {
        s += t.mono.str();
      } else {
        s += mag.str();
        s += '*';
        s += t.mono.str();
      }
    }
    return s;
  }

  // Internal use by arithmetic below: terms must stay sorted and normalized.
  std::vector<Term>& mutable_terms() { return terms_; }

 private:
  std::uint32_t nvars_;
  std::vector<Term> terms_;
};

namespace detail {

inline void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial ring mismatch");
}

}  // namespace detail

/// a + c*m*b for sorted inputs; the workhorse of division and S-polynomials.
/// Multiplying by a fixed monomial preserves relative term order, so this is
/// a single linear merge.
inline Polynomial axpy(const Polynomial& a, const Rational& c, const Monomial& m,
                       const Polynomial& b, const MonomialOrder& order) {
  detail::require_same_ring(a, b);
  if (c.is_zero() || b.is_zero()) return a;
  Polynomial r(a.nvars());
  auto& out = r.mutable_terms();
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end()) {
      out.push_back(*ia++);
      continue;
    }
    Monomial mb = m.is_one() ? ib->mono : ib->mono * m;
    int cmp;
    if (ia == a.terms().end())
      cmp = -1;
    else {
      cmp = order.compare(ia->mono, mb);
      if (cmp == 0) cmp = Monomial::structural_cmp(ia->mono, mb);
    }
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      out.push_back({c * ib->coeff, std::move(mb)});
      ++ib;
    } else {
      Rational s = ia->coeff + c * ib->coeff;
      if (!s.is_zero()) out.push_back({std::move(s), ia->mono});
      ++ia, ++ib;
    }
  }
  return r;
}

inline Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& order) {
  return axpy(a, Rational(1), Monomial::one(), b, order);
}

inline Polynomial sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& order) {
  return axpy(a, Rational(-1), Monomial::one(), b, order);
}

inline Polynomial mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& order) {
  detail::require_same_ring(a, b);
  std::vector<Term> prods;
  prods.reserve(a.terms().size() * b.terms().size());
  for (const Term& ta : a.terms())
    for (const Term& tb : b.terms())
      prods.push_back({ta.coeff * tb.coeff, ta.mono * tb.mono});
  return Polynomial::from_terms(a.nvars(), std::move(prods), order);
}

inline Polynomial scale(Polynomial p, const Rational& c) {
  p.scale_in_place(c);
  return p;
}

/// Re-sorts a polynomial's terms under a different monomial order.
inline Polynomial resort(const Polynomial& p, const MonomialOrder& order) {
  return Polynomial::from_terms(p.nvars(), p.terms(), order);
}

/// Substitutes rational values for a subset of the variables. Bound
/// variables disappear from every monomial; the ring is unchanged.
inline Polynomial substitute(const Polynomial& p,
                             const std::map<std::uint32_t, Rational>& bindings,
                             const MonomialOrder& order) {
  for (const auto& [var, value] : bindings) {
    (void)value;
    if (var == 0 || var > p.nvars())
      throw std::invalid_argument("substitute: variable out of ring");
  }
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    std::vector<VarPow> kept;
    for (const VarPow& f : t.mono.factors()) {
      auto it = bindings.find(f.var);
      if (it == bindings.end()) {
        kept.push_back(f);
        continue;
      }
      for (std::uint32_t k = 0; k < f.exp && !c.is_zero(); ++k) c *= it->second;
    }
    if (!c.is_zero()) out.push_back({std::move(c), Monomial::from_factors(std::move(kept))});
  }
  return Polynomial::from_terms(p.nvars(), std::move(out), order);
}

/// Renames variables: old variable v becomes rename[v-1] (1-based, 0 = must
/// not occur). Used for transpose symmetry and subring restriction.
inline Polynomial rename_vars(const Polynomial& p, const std::vector<std::uint32_t>& rename,
                              std::uint32_t new_nvars, const MonomialOrder& order) {
  if (rename.size() < p.nvars())
    throw std::invalid_argument("rename_vars: map too short");
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    std::vector<VarPow> fs;
    fs.reserve(t.mono.factors().size());
    for (const VarPow& f : t.mono.factors()) {
      const std::uint32_t nv = rename[f.var - 1];
      if (nv == 0 || nv > new_nvars)
        throw std::invalid_argument("rename_vars: variable x" + std::to_string(f.var) +
                                    " has no image");
      fs.push_back({nv, f.exp});
    }
    out.push_back({t.coeff, Monomial::from_factors(std::move(fs))});
  }
  return Polynomial::from_terms(new_nvars, std::move(out), order);
}

/// Positive rational content: gcd of numerators over lcm of denominators.
inline Rational content(const Polynomial& p) {
  if (p.is_zero()) return Rational(0);
  mpz_class g(0), l(1);
  for (const Term& t : p.terms()) {
    mpz_class num = t.coeff.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_class den = t.coeff.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return Rational(mpz_class(::abs(g))) / Rational(l);
}

/// Divides out the content and normalizes the leading coefficient positive.
/// The result has coprime integer coefficients.
inline Polynomial make_primitive(Polynomial p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (p.leading_coeff().sign() < 0) c = -c;
  p.scale_in_place(c.reciprocal());
  return p;
}

inline Polynomial make_monic(Polynomial p) {
  if (p.is_zero()) return p;
  p.scale_in_place(p.leading_coeff().reciprocal());
  return p;
}

/// Evaluates at a full point (point[i] is the value of x_{i+1}).
inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  if (point.size() != p.nvars())
    throw std::invalid_argument("evaluate: point length must equal ring size");
  Rational total(0);
  for (const Term& t : p.terms()) {
    Rational v = t.coeff;
    for (const VarPow& f : t.mono.factors())
      for (std::uint32_t k = 0; k < f.exp; ++k) v *= point[f.var - 1];
    total += v;
  }
  return total;
}

// --- Text format -----------------------------------------------------------
//
//   poly   := term (('+'|'-') term)*
//   term   := coeff ['*' varpow ('*' varpow)*] | varpow ('*' varpow)*
//   varpow := 'x' index ['^' exp]
//   coeff  := ['-'] digits ['/' digits]
//
// parse_polynomial accepts arbitrary whitespace between tokens and is the
// exact inverse of Polynomial::str() on normalized polynomials.

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::uint32_t nvars) : s_(s), nvars_(nvars) {}

  std::vector<Term> run() {
    skip_ws();
    if (done()) throw std::invalid_argument("polynomial parse: empty input");
    std::vector<Term> terms;
    bool neg = consume_sign();
    while (true) {
      Term t = parse_term();
      if (neg) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (done()) break;
      if (s_[i_] == '+' || s_[i_] == '-') {
        neg = s_[i_] == '-';
        ++i_;
        skip_ws();
      } else {
        throw std::invalid_argument("polynomial parse: unexpected '" +
                                    std::string(1, s_[i_]) + "'");
      }
    }
    return terms;
  }

 private:
  bool done() const { return i_ >= s_.size(); }
  void skip_ws() {
    while (!done() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  bool consume_sign() {
    if (!done() && (s_[i_] == '+' || s_[i_] == '-')) {
      const bool neg = s_[i_] == '-';
      ++i_;
      skip_ws();
      return neg;
    }
    return false;
  }

  std::string parse_digits() {
    std::size_t start = i_;
    while (!done() && s_[i_] >= '0' && s_[i_] <= '9') ++i_;
    if (i_ == start) throw std::invalid_argument("polynomial parse: digits expected");
    return std::string(s_.substr(start, i_ - start));
  }

  VarPow parse_varpow() {
    ++i_;  // 'x'
    const std::uint32_t var = static_cast<std::uint32_t>(std::stoul(parse_digits()));
    if (var == 0 || var > nvars_)
      throw std::invalid_argument("polynomial parse: variable x" + std::to_string(var) +
                                  " outside ring of " + std::to_string(nvars_));
    std::uint32_t exp = 1;
    if (!done() && s_[i_] == '^') {
      ++i_;
      exp = static_cast<std::uint32_t>(std::stoul(parse_digits()));
    }
    return {var, exp};
  }

  Term parse_term() {
    Rational coeff(1);
    std::vector<VarPow> factors;
    bool saw_coeff = false;
    if (!done() && s_[i_] >= '0' && s_[i_] <= '9') {
      std::string num = parse_digits();
      if (!done() && s_[i_] == '/') {
        ++i_;
        num += '/';
        num += parse_digits();
      }
      coeff = Rational::parse(num);
      saw_coeff = true;
    }
    bool expect_varpow = !saw_coeff;
    if (saw_coeff && !done() && s_[i_] == '*') {
      ++i_;
      skip_ws();
      expect_varpow = true;
    }
    while (expect_varpow) {
      if (done() || s_[i_] != 'x')
        throw std::invalid_argument("polynomial parse: variable expected");
      factors.push_back(parse_varpow());
      skip_ws();
      if (!done() && s_[i_] == '*') {
        ++i_;
        skip_ws();
      } else {
        break;
      }
    }
    return {std::move(coeff), Monomial::from_factors(std::move(factors))};
  }

  std::string_view s_;
  std::uint32_t nvars_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, std::uint32_t nvars,
                                   const MonomialOrder& order) {
  return Polynomial::from_terms(nvars, detail::PolyParser(text, nvars).run(), order);
}

}  // namespace slack

#endif  // SLACK_POLYNOMIAL_HPP
