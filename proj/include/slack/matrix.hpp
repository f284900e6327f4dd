#ifndef SLACK_MATRIX_HPP
#define SLACK_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slack/rational.hpp"

namespace slack {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
      throw std::invalid_argument("RationalMatrix: entry count mismatch");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const {
    return RationalVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  RationalVector col(std::size_t j) const {
    RationalVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

namespace detail {

// Row-wise denominator clearing. Scaling a row by a positive integer changes
// neither the rank nor the solution set of an augmented system.
inline std::vector<std::vector<mpz_class>> to_integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& e = m.at(i, j);
      rows[i][j] = e.numerator() * (l / e.denominator());
    }
  }
  return rows;
}

struct Echelon {
  std::vector<std::vector<mpz_class>> m;
  std::vector<std::size_t> pivot_cols;  // pivot of elimination step k sits at (k, pivot_cols[k])
};

// Fraction-free (Bareiss) elimination. Pivoting picks the first nonzero entry
// in column order, so the result is deterministic. `pivot_limit` bounds the
// columns eligible for pivoting (used to keep an augmented column passive).
inline Echelon bareiss_echelon(std::vector<std::vector<mpz_class>> m,
                               std::size_t pivot_limit) {
  Echelon e;
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows == 0 ? 0 : m[0].size();
  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(m[p][c]) == 0) ++p;
    if (p == nrows) continue;
    if (p != r) std::swap(m[p], m[r]);
    const mpz_class& piv = m[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_class t = piv * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace detail

/// Exact rank over the rationals via fraction-free elimination.
inline std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto e = detail::bareiss_echelon(detail::to_integer_rows(m), m.cols());
  return e.pivot_cols.size();
}

/// Solves a*x = b exactly. Requires at least as many rows as columns.
/// Returns one solution with free variables set to zero, or nullopt when the
/// system is inconsistent. Callers needing uniqueness must check rank.
inline std::optional<RationalVector> solve_linear(const RationalMatrix& a,
                                                  const RationalVector& b) {
  if (a.rows() < a.cols())
    throw std::invalid_argument("solve_linear: fewer rows than columns");
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_linear: right-hand side size mismatch");

  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto e = detail::bareiss_echelon(detail::to_integer_rows(aug), a.cols());

  const std::size_t nr = e.pivot_cols.size();
  for (std::size_t i = nr; i < a.rows(); ++i)
    if (sgn(e.m[i][a.cols()]) != 0) return std::nullopt;

  RationalVector x(a.cols(), Rational(0));
  for (std::size_t k = nr; k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    Rational s(mpz_class(e.m[k][a.cols()]));
    for (std::size_t j = pc + 1; j < a.cols(); ++j)
      s -= Rational(mpz_class(e.m[k][j])) * x[j];
    x[pc] = s / Rational(mpz_class(e.m[k][pc]));
  }
  return x;
}

/// Basis of the right kernel {x : m*x = 0}, one vector per free column.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  auto e = detail::bareiss_echelon(detail::to_integer_rows(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    RationalVector x(m.cols(), Rational(0));
    x[fc] = Rational(1);
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rational s(0);
      for (std::size_t j = pc + 1; j < m.cols(); ++j)
        if (!x[j].is_zero()) s -= Rational(mpz_class(e.m[k][j])) * x[j];
      x[pc] = s / Rational(mpz_class(e.m[k][pc]));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// True iff v lies in the column span of m, i.e. rank([m v]) = rank(m).
inline bool in_column_span(const RationalMatrix& m, const RationalVector& v) {
  if (v.size() != m.rows())
    throw std::invalid_argument("in_column_span: vector length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = v[i];
  }
  return rank(aug) == rank(m);
}

inline RationalVector ones_vector(std::size_t n) {
  return RationalVector(n, Rational(1));
}

}  // namespace slack

#endif  // SLACK_MATRIX_HPP
