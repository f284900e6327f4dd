#ifndef SLACK_SYMBOLIC_SLACK_HPP
#define SLACK_SYMBOLIC_SLACK_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slack/groebner.hpp"
#include "slack/polytope.hpp"

namespace slack {

/// The incidence pattern with each nonzero-slack cell replaced by a distinct
/// variable, numbered row-major: x1 is the first non-incident cell of row 1.
class SymbolicSlackMatrix {
 public:
  explicit SymbolicSlackMatrix(IncidenceStructure pattern) : pattern_(std::move(pattern)) {
    grid_.assign(pattern_.vertex_count() * pattern_.facet_count(), 0);
    std::uint32_t next = 1;
    for (std::size_t i = 0; i < pattern_.vertex_count(); ++i)
      for (std::size_t j = 0; j < pattern_.facet_count(); ++j)
        if (!pattern_.incident(i, j)) {
          grid_[i * pattern_.facet_count() + j] = next++;
          cells_.push_back({i, j});
        }
    var_count_ = next - 1;
  }

  const IncidenceStructure& pattern() const { return pattern_; }
  std::uint32_t var_count() const { return var_count_; }
  std::size_t rows() const { return pattern_.vertex_count(); }
  std::size_t cols() const { return pattern_.facet_count(); }

  /// 0 for an incident (structurally zero) cell, else the variable index.
  std::uint32_t var_at(std::size_t i, std::size_t j) const {
    return grid_[i * pattern_.facet_count() + j];
  }

  std::pair<std::size_t, std::size_t> cell_of(std::uint32_t var) const {
    if (var == 0 || var > var_count_)
      throw std::invalid_argument("SymbolicSlackMatrix: variable out of range");
    return cells_[var - 1];
  }

  /// Variable renaming induced by transposing the pattern: variable k at cell
  /// (i,j) goes to the transpose's variable at cell (j,i).
  std::vector<std::uint32_t> transpose_renaming() const {
    SymbolicSlackMatrix t(pattern_.transpose());
    std::vector<std::uint32_t> rename(var_count_);
    for (std::uint32_t k = 1; k <= var_count_; ++k) {
      auto [i, j] = cell_of(k);
      rename[k - 1] = t.var_at(j, i);
    }
    return rename;
  }

 private:
  IncidenceStructure pattern_;
  std::vector<std::uint32_t> grid_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::uint32_t var_count_ = 0;
};

inline SymbolicSlackMatrix symbolic_slack_matrix(const IncidenceStructure& inc) {
  return SymbolicSlackMatrix(inc);
}

/// A choice of variables pinned to 1 by row/column scalings.
///
/// Projective mode fixes cells forming a forest in the bipartite row/column
/// graph of the support (realizable by row and column scalings); affine mode
/// fixes one cell per column (column scalings only).
struct ScalingFix {
  enum class Mode { Projective, Affine };
  Mode mode = Mode::Projective;
  std::vector<std::uint32_t> fixed;  // ascending variable indices
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Throws unless the fix is realizable by scalings of the given pattern.
inline void validate_fix(const SymbolicSlackMatrix& sym, const ScalingFix& fix) {
  for (std::uint32_t v : fix.fixed)
    if (v == 0 || v > sym.var_count())
      throw std::invalid_argument("scaling fix: variable x" + std::to_string(v) +
                                  " out of range");
  if (fix.mode == ScalingFix::Mode::Projective) {
    detail::UnionFind uf(sym.rows() + sym.cols());
    for (std::uint32_t v : fix.fixed) {
      auto [i, j] = sym.cell_of(v);
      if (!uf.unite(i, sym.rows() + j))
        throw std::invalid_argument(
            "scaling fix: fixed cells contain a cycle (variable x" + std::to_string(v) + ")");
    }
  } else {
    std::vector<int> per_col(sym.cols(), 0);
    for (std::uint32_t v : fix.fixed) per_col[sym.cell_of(v).second]++;
    for (std::size_t j = 0; j < sym.cols(); ++j)
      if (per_col[j] != 1)
        throw std::invalid_argument("affine scaling fix: column " + std::to_string(j + 1) +
                                    " must have exactly one fixed cell");
  }
}

/// Deterministic automatic fix. Projective: greedy maximal forest over the
/// support cells scanned row-major. Affine: the first nonzero cell of every
/// column. For a connected support the projective fix has v + f - 1 cells.
inline ScalingFix fix_variables_by_scaling(const IncidenceStructure& inc,
                                           ScalingFix::Mode mode) {
  SymbolicSlackMatrix sym(inc);
  ScalingFix fix;
  fix.mode = mode;
  if (mode == ScalingFix::Mode::Projective) {
    detail::UnionFind uf(sym.rows() + sym.cols());
    for (std::size_t i = 0; i < sym.rows(); ++i)
      for (std::size_t j = 0; j < sym.cols(); ++j) {
        const std::uint32_t v = sym.var_at(i, j);
        if (v != 0 && uf.unite(i, sym.rows() + j)) fix.fixed.push_back(v);
      }
  } else {
    for (std::size_t j = 0; j < sym.cols(); ++j)
      for (std::size_t i = 0; i < sym.rows(); ++i) {
        const std::uint32_t v = sym.var_at(i, j);
        if (v != 0) {
          fix.fixed.push_back(v);
          break;
        }
      }
    std::sort(fix.fixed.begin(), fix.fixed.end());
  }
  return fix;
}

namespace detail {

// Entry of the (possibly fixed, possibly ones-extended) symbolic matrix.
struct SymCell {
  enum class Kind { Zero, One, Var } kind = Kind::Zero;
  std::uint32_t var = 0;
};

struct MinorContext {
  std::vector<SymCell> cells;  // k*k row-major
  std::size_t k = 0;
  std::uint32_t nvars = 0;
  const MonomialOrder* order = nullptr;

  const SymCell& at(std::size_t r, std::size_t c) const { return cells[r * k + c]; }
};

// Perfect matching on the nonzero cells decides whether a symbolic minor can
// be nonzero at all; structurally zero minors are skipped without expansion.
inline bool has_perfect_matching(const MinorContext& ctx) {
  const std::size_t k = ctx.k;
  std::vector<int> match_col(k, -1);
  std::vector<char> visited(k);
  auto augment = [&](auto&& self, std::size_t r) -> bool {
    for (std::size_t c = 0; c < k; ++c) {
      if (visited[c] || ctx.at(r, c).kind == SymCell::Kind::Zero) continue;
      visited[c] = 1;
      if (match_col[c] < 0 || self(self, static_cast<std::size_t>(match_col[c]))) {
        match_col[c] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < k; ++r) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, r)) return false;
  }
  return true;
}

// Laplace expansion along the sparsest row or column of the live submatrix.
inline Polynomial expand_minor(const MinorContext& ctx, std::vector<std::size_t> rows,
                               std::vector<std::size_t> cols) {
  if (rows.size() == 1) {
    const SymCell& c = ctx.at(rows[0], cols[0]);
    switch (c.kind) {
      case SymCell::Kind::Zero: return Polynomial::zero(ctx.nvars);
      case SymCell::Kind::One: return Polynomial::constant(ctx.nvars, Rational(1));
      case SymCell::Kind::Var: return Polynomial::variable(ctx.nvars, c.var);
    }
  }
  std::size_t best_line = 0, best_count = rows.size() + 1;
  bool by_row = true;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t n = 0;
    for (std::size_t c = 0; c < cols.size(); ++c)
      n += ctx.at(rows[r], cols[c]).kind != SymCell::Kind::Zero;
    if (n < best_count) best_count = n, best_line = r, by_row = true;
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
      n += ctx.at(rows[r], cols[c]).kind != SymCell::Kind::Zero;
    if (n < best_count) best_count = n, best_line = c, by_row = false;
  }
  if (best_count == 0) return Polynomial::zero(ctx.nvars);

  Polynomial det = Polynomial::zero(ctx.nvars);
  const std::size_t n = rows.size();
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t r = by_row ? best_line : t;
    const std::size_t c = by_row ? t : best_line;
    const SymCell& cell = ctx.at(rows[r], cols[c]);
    if (cell.kind == SymCell::Kind::Zero) continue;
    std::vector<std::size_t> sub_rows, sub_cols;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r) sub_rows.push_back(rows[i]);
      if (i != c) sub_cols.push_back(cols[i]);
    }
    Polynomial m = expand_minor(ctx, std::move(sub_rows), std::move(sub_cols));
    if (m.is_zero()) continue;
    const bool negative = (r + c) % 2 != 0;
    Rational sign(negative ? -1 : 1);
    if (cell.kind == SymCell::Kind::Var)
      m = times_term(m, sign, Monomial::variable(cell.var));
    else if (negative)
      m.scale_in_place(sign);
    det = add(det, m, *ctx.order);
  }
  return det;
}

inline int poly_structural_cmp(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = Monomial::structural_cmp(ta[i].mono, tb[i].mono);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

}  // namespace detail

/// All k x k minors of the symbolic slack matrix (optionally with a column
/// of ones appended and a scaling fix substituted) as an ideal basis in the
/// ring of all t variables. Row and column subsets are enumerated in
/// lexicographic order; minors equal up to sign are emitted once.
inline IdealBasis symbolic_minors(const SymbolicSlackMatrix& sym, std::size_t k,
                                  const std::optional<ScalingFix>& fix,
                                  bool extra_ones_column) {
  if (fix) validate_fix(sym, *fix);
  std::vector<char> is_fixed(sym.var_count() + 1, 0);
  if (fix)
    for (std::uint32_t v : fix->fixed) is_fixed[v] = 1;

  const std::size_t nrows = sym.rows();
  const std::size_t ncols = sym.cols() + (extra_ones_column ? 1 : 0);
  const MonomialOrder order = MonomialOrder::grevlex();

  IdealBasis out;
  out.ring_vars = sym.var_count();
  if (k == 0 || k > nrows || k > ncols) return out;

  auto cell = [&](std::size_t i, std::size_t j) -> detail::SymCell {
    if (extra_ones_column && j == sym.cols()) return {detail::SymCell::Kind::One, 0};
    const std::uint32_t v = sym.var_at(i, j);
    if (v == 0) return {detail::SymCell::Kind::Zero, 0};
    if (is_fixed[v]) return {detail::SymCell::Kind::One, 0};
    return {detail::SymCell::Kind::Var, v};
  };

  std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)> seen(
      [](const Polynomial& a, const Polynomial& b) {
        return detail::poly_structural_cmp(a, b) < 0;
      });

  std::vector<std::size_t> rsub(k);
  std::iota(rsub.begin(), rsub.end(), std::size_t{0});
  do {
    std::vector<std::size_t> csub(k);
    std::iota(csub.begin(), csub.end(), std::size_t{0});
    do {
      detail::MinorContext ctx;
      ctx.k = k;
      ctx.nvars = sym.var_count();
      ctx.order = &order;
      ctx.cells.resize(k * k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) ctx.cells[r * k + c] = cell(rsub[r], csub[c]);
      if (!detail::has_perfect_matching(ctx)) continue;

      std::vector<std::size_t> rows(k), cols(k);
      std::iota(rows.begin(), rows.end(), std::size_t{0});
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      Polynomial det = detail::expand_minor(ctx, std::move(rows), std::move(cols));
      if (det.is_zero()) continue;
      det = make_primitive(std::move(det));
      if (seen.insert(det).second) out.generators.push_back(std::move(det));
    } while (detail::next_subset(csub, ncols));
  } while (detail::next_subset(rsub, nrows));
  return out;
}

/// The slack ideal: saturation of the (d+2)-minor ideal of the symbolic
/// slack matrix by all variables. With a fix this is the scaled slack ideal.
inline IdealBasis slack_ideal(const IncidenceStructure& inc,
                              const std::optional<ScalingFix>& fix = std::nullopt,
                              const Budget& budget = {}, GroebnerStats* stats = nullptr) {
  SymbolicSlackMatrix sym(inc);
  IdealBasis minors = symbolic_minors(sym, inc.dimension() + 2, fix, false);
  return saturate_all_vars(minors, budget, stats);
}

/// The affine slack ideal: same construction on the symbolic matrix with a
/// column of ones appended. A fix, when given, must be affine-mode.
inline IdealBasis affine_slack_ideal(const IncidenceStructure& inc,
                                     const std::optional<ScalingFix>& fix = std::nullopt,
                                     const Budget& budget = {},
                                     GroebnerStats* stats = nullptr) {
  if (fix && fix->mode != ScalingFix::Mode::Affine)
    throw std::invalid_argument("affine_slack_ideal: fix must be affine-mode");
  SymbolicSlackMatrix sym(inc);
  IdealBasis minors = symbolic_minors(sym, inc.dimension() + 2, fix, true);
  return saturate_all_vars(minors, budget, stats);
}

/// True iff every generator vanishes at the point (one value per variable).
inline bool evaluate_on_variety(const IdealBasis& ideal, const std::vector<Rational>& point) {
  if (point.size() != ideal.ring_vars)
    throw std::invalid_argument("evaluate_on_variety: point length mismatch");
  for (const Polynomial& g : ideal.generators)
    if (!evaluate(g, point).is_zero()) return false;
  return true;
}

/// Entries of a numeric slack matrix read off as a point of the variety,
/// row-major over the nonzero cells of the pattern.
inline std::vector<Rational> slack_entries_as_point(const SymbolicSlackMatrix& sym,
                                                    const RationalMatrix& s) {
  if (s.rows() != sym.rows() || s.cols() != sym.cols())
    throw std::invalid_argument("slack_entries_as_point: shape mismatch");
  std::vector<Rational> point(sym.var_count());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const std::uint32_t v = sym.var_at(i, j);
      if (v != 0) point[v - 1] = s.at(i, j);
    }
  return point;
}

}  // namespace slack

#endif  // SLACK_SYMBOLIC_SLACK_HPP
