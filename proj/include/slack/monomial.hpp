#ifndef SLACK_MONOMIAL_HPP
#define SLACK_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slack {

/// Power of a single variable. Variables are 1-based: x1, x2, ...
struct VarPow {
  std::uint32_t var = 0;
  std::uint32_t exp = 0;
  friend bool operator==(const VarPow&, const VarPow&) = default;
};

/// Sparse monomial: factors sorted by ascending variable index, exponents
/// strictly positive. The empty factor list is the constant monomial 1.
/// Total degree and a 64-bit support fingerprint are cached; the fingerprint
/// is a conservative filter for divisibility tests.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1) {
    Monomial m;
    if (var == 0) throw std::invalid_argument("Monomial: variables are 1-based");
    if (exp > 0) m.push_factor(var, exp);
    return m;
  }

  static Monomial from_factors(std::vector<VarPow> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
    Monomial m;
    for (const VarPow& f : factors) {
      if (f.var == 0) throw std::invalid_argument("Monomial: variables are 1-based");
      if (f.exp == 0) continue;
      if (!m.f_.empty() && m.f_.back().var == f.var)
        m.f_.back().exp += f.exp;
      else
        m.f_.push_back(f);
    }
    m.recompute_cache();
    return m;
  }

  const std::vector<VarPow>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const { return deg_; }
  std::uint64_t support_mask() const { return mask_; }

  std::uint32_t max_var() const { return f_.empty() ? 0 : f_.back().var; }

  std::uint32_t exponent_of(std::uint32_t var) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), var,
                               [](const VarPow& f, std::uint32_t v) { return f.var < v; });
    return (it != f_.end() && it->var == var) ? it->exp : 0;
  }

  bool contains_var(std::uint32_t var) const { return exponent_of(var) != 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto ia = f_.begin(), ib = o.f_.begin();
    while (ia != f_.end() || ib != o.f_.end()) {
      if (ib == o.f_.end() || (ia != f_.end() && ia->var < ib->var))
        r.f_.push_back(*ia++);
      else if (ia == f_.end() || ib->var < ia->var)
        r.f_.push_back(*ib++);
      else {
        r.f_.push_back({ia->var, ia->exp + ib->exp});
        ++ia, ++ib;
      }
    }
    r.deg_ = deg_ + o.deg_;
    r.mask_ = mask_ | o.mask_;
    return r;
  }

  /// True iff this monomial divides o.
  bool divides(const Monomial& o) const {
    if ((mask_ & ~o.mask_) != 0 || deg_ > o.deg_) return false;
    auto ib = o.f_.begin();
    for (const VarPow& f : f_) {
      while (ib != o.f_.end() && ib->var < f.var) ++ib;
      if (ib == o.f_.end() || ib->var != f.var || ib->exp < f.exp) return false;
    }
    return true;
  }

  /// Exact quotient o = this * result; nullopt when this does not divide o.
  std::optional<Monomial> quotient_of(const Monomial& o) const {
    if (!divides(o)) return std::nullopt;
    Monomial r;
    auto ia = f_.begin();
    for (const VarPow& f : o.f_) {
      std::uint32_t e = f.exp;
      if (ia != f_.end() && ia->var == f.var) e -= (ia++)->exp;
      if (e > 0) r.push_factor(f.var, e);
    }
    r.recompute_cache();
    return r;
  }

  Monomial lcm_with(const Monomial& o) const {
    Monomial r;
    auto ia = f_.begin(), ib = o.f_.begin();
    while (ia != f_.end() || ib != o.f_.end()) {
      if (ib == o.f_.end() || (ia != f_.end() && ia->var < ib->var))
        r.f_.push_back(*ia++);
      else if (ia == f_.end() || ib->var < ia->var)
        r.f_.push_back(*ib++);
      else {
        r.f_.push_back({ia->var, std::max(ia->exp, ib->exp)});
        ++ia, ++ib;
      }
    }
    r.recompute_cache();
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    auto ia = f_.begin(), ib = o.f_.begin();
    while (ia != f_.end() && ib != o.f_.end()) {
      if (ia->var == ib->var) return false;
      if (ia->var < ib->var) ++ia; else ++ib;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Order-independent tie-break used for canonical container keys.
  static int structural_cmp(const Monomial& a, const Monomial& b) {
    const std::size_t n = std::min(a.f_.size(), b.f_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.f_[i].var != b.f_[i].var) return a.f_[i].var < b.f_[i].var ? -1 : 1;
      if (a.f_[i].exp != b.f_[i].exp) return a.f_[i].exp < b.f_[i].exp ? -1 : 1;
    }
    if (a.f_.size() != b.f_.size()) return a.f_.size() < b.f_.size() ? -1 : 1;
    return 0;
  }

  std::string str() const {
    if (is_one()) return "1";
    std::string s;
    for (const VarPow& f : f_) {
      if (!s.empty()) s += '*';
      s += 'x';
      s += std::to_string(f.var);
      if (f.exp > 1) {
        s += '^';
        s += std::to_string(f.exp);
      }
    }
    return s;
  }

 private:
  void push_factor(std::uint32_t var, std::uint32_t exp) {
    f_.push_back({var, exp});
    deg_ += exp;
    mask_ |= std::uint64_t{1} << ((var - 1) & 63);
  }

  void recompute_cache() {
    deg_ = 0;
    mask_ = 0;
    for (const VarPow& f : f_) {
      deg_ += f.exp;
      mask_ |= std::uint64_t{1} << ((f.var - 1) & 63);
    }
  }

  std::vector<VarPow> f_;
  std::uint32_t deg_ = 0;
  std::uint64_t mask_ = 0;
};

namespace detail {

// Graded reverse-lexicographic comparison restricted to the variables
// accepted by `in`. Returns -1/0/1 for a < b, a = b, a > b. With x1 > x2 >
// ... the tie-break makes the monomial with the smaller exponent at the
// highest differing variable the larger one.
template <class Pred>
int grevlex_cmp_if(const Monomial& a, const Monomial& b, Pred in) {
  long da = 0, db = 0;
  for (const VarPow& f : a.factors())
    if (in(f.var)) da += f.exp;
  for (const VarPow& f : b.factors())
    if (in(f.var)) db += f.exp;
  if (da != db) return da < db ? -1 : 1;

  auto ia = a.factors().rbegin(), ea = a.factors().rend();
  auto ib = b.factors().rbegin(), eb = b.factors().rend();
  while (true) {
    while (ia != ea && !in(ia->var)) ++ia;
    while (ib != eb && !in(ib->var)) ++ib;
    if (ia == ea && ib == eb) return 0;
    const std::uint32_t va = ia == ea ? 0 : ia->var;
    const std::uint32_t vb = ib == eb ? 0 : ib->var;
    if (va != vb) return va > vb ? -1 : 1;
    if (ia->exp != ib->exp) return ia->exp > ib->exp ? -1 : 1;
    ++ia, ++ib;
  }
}

}  // namespace detail

/// Total monomial order, compatible with multiplication and with 1 minimal.
///
/// Supported kinds:
///  - grevlex: graded reverse-lexicographic with x1 > x2 > ...
///  - lex: lexicographic with x1 > x2 > ...
///  - elimination(front): two-block order. Any monomial containing a front
///    variable sorts above every monomial free of them; each block is
///    compared by grevlex internally.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  MonomialOrder() : kind_(Kind::Grevlex) {}

  static MonomialOrder grevlex() { return MonomialOrder(); }

  static MonomialOrder lex() {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    return o;
  }

  static MonomialOrder elimination(std::vector<std::uint32_t> front_vars) {
    MonomialOrder o;
    o.kind_ = Kind::Elimination;
    std::sort(front_vars.begin(), front_vars.end());
    front_vars.erase(std::unique(front_vars.begin(), front_vars.end()), front_vars.end());
    if (!front_vars.empty() && front_vars.front() == 0)
      throw std::invalid_argument("MonomialOrder: variables are 1-based");
    o.front_ = std::move(front_vars);
    for (std::uint32_t v : o.front_) {
      const std::size_t word = (v - 1) / 64;
      if (o.front_bits_.size() <= word) o.front_bits_.resize(word + 1, 0);
      o.front_bits_[word] |= std::uint64_t{1} << ((v - 1) % 64);
    }
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<std::uint32_t>& front_vars() const { return front_; }

  bool is_front(std::uint32_t var) const {
    const std::size_t word = (var - 1) / 64;
    return word < front_bits_.size() &&
           (front_bits_[word] >> ((var - 1) % 64)) & 1;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex:
        return detail::grevlex_cmp_if(a, b, [](std::uint32_t) { return true; });
      case Kind::Lex: {
        auto ia = a.factors().begin(), ea = a.factors().end();
        auto ib = b.factors().begin(), eb = b.factors().end();
        while (ia != ea || ib != eb) {
          const std::uint32_t va = ia == ea ? UINT32_MAX : ia->var;
          const std::uint32_t vb = ib == eb ? UINT32_MAX : ib->var;
          if (va != vb) return va < vb ? 1 : -1;
          if (ia->exp != ib->exp) return ia->exp > ib->exp ? 1 : -1;
          ++ia, ++ib;
        }
        return 0;
      }
      case Kind::Elimination: {
        int c = detail::grevlex_cmp_if(a, b, [this](std::uint32_t v) { return is_front(v); });
        if (c != 0) return c;
        return detail::grevlex_cmp_if(a, b, [this](std::uint32_t v) { return !is_front(v); });
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string descriptor() const {
    switch (kind_) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Elimination: {
        std::string s = "elimination(";
        for (std::size_t i = 0; i < front_.size(); ++i) {
          if (i) s += ',';
          s += 'x';
          s += std::to_string(front_[i]);
        }
        return s + ")";
      }
    }
    return "";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.front_ == b.front_;
  }

 private:
  Kind kind_;
  std::vector<std::uint32_t> front_;
  std::vector<std::uint64_t> front_bits_;
};

}  // namespace slack

#endif  // SLACK_MONOMIAL_HPP
