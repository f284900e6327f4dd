#ifndef SLACK_POLYTOPE_HPP
#define SLACK_POLYTOPE_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slack/matrix.hpp"

namespace slack {

class PolytopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex description of a d-polytope: one labelled vertex per row.
struct VRepresentation {
  std::uint32_t dimension = 0;
  RationalMatrix vertices;  // v x d
};

/// Facet inequalities W*x <= w, one labelled facet per row of W.
struct HRepresentation {
  RationalMatrix normals;  // f x d
  RationalVector rhs;      // f
};

/// Vertex-facet incidence of a d-polytope: incident(i,j) is true when vertex
/// i lies on facet j, i.e. exactly where the slack matrix has a zero.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(std::uint32_t dimension, std::size_t vertices, std::size_t facets)
      : d_(dimension), v_(vertices), f_(facets), on_(vertices * facets, 0) {}

  static IncidenceStructure from_facet_vertex_sets(
      std::uint32_t dimension, std::size_t vertices,
      const std::vector<std::vector<std::size_t>>& facets_1based) {
    IncidenceStructure inc(dimension, vertices, facets_1based.size());
    for (std::size_t j = 0; j < facets_1based.size(); ++j)
      for (std::size_t v : facets_1based[j]) {
        if (v == 0 || v > vertices)
          throw PolytopeError("facet list: vertex index " + std::to_string(v) +
                              " out of range");
        inc.set_incident(v - 1, j);
      }
    return inc;
  }

  std::uint32_t dimension() const { return d_; }
  std::size_t vertex_count() const { return v_; }
  std::size_t facet_count() const { return f_; }

  bool incident(std::size_t i, std::size_t j) const { return on_[i * f_ + j] != 0; }
  void set_incident(std::size_t i, std::size_t j, bool val = true) {
    on_[i * f_ + j] = val ? 1 : 0;
  }

  std::vector<std::size_t> facet_vertices(std::size_t j) const {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < v_; ++i)
      if (incident(i, j)) vs.push_back(i);
    return vs;
  }

  std::vector<std::size_t> vertex_facets(std::size_t i) const {
    std::vector<std::size_t> fs;
    for (std::size_t j = 0; j < f_; ++j)
      if (incident(i, j)) fs.push_back(j);
    return fs;
  }

  /// Number of non-incident cells = variables of the symbolic slack matrix.
  std::size_t nonzero_cells() const {
    std::size_t n = 0;
    for (std::uint8_t b : on_) n += b == 0;
    return n;
  }

  IncidenceStructure transpose() const {
    IncidenceStructure t(d_, f_, v_);
    for (std::size_t i = 0; i < v_; ++i)
      for (std::size_t j = 0; j < f_; ++j)
        if (incident(i, j)) t.set_incident(j, i);
    return t;
  }

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.d_ == b.d_ && a.v_ == b.v_ && a.f_ == b.f_ && a.on_ == b.on_;
  }

 private:
  std::uint32_t d_ = 0;
  std::size_t v_ = 0, f_ = 0;
  std::vector<std::uint8_t> on_;
};

/// Structural sanity checks on an incidence. Returns human-readable
/// diagnostics; empty means the structure looks like a polytopal incidence.
inline std::vector<std::string> incidence_diagnostics(const IncidenceStructure& inc) {
  std::vector<std::string> out;
  const std::size_t v = inc.vertex_count(), f = inc.facet_count(), d = inc.dimension();
  for (std::size_t j = 0; j < f; ++j)
    if (inc.facet_vertices(j).size() < d)
      out.push_back("facet " + std::to_string(j + 1) + " has fewer than " +
                    std::to_string(d) + " vertices");
  for (std::size_t i = 0; i < v; ++i)
    if (inc.vertex_facets(i).size() < d)
      out.push_back("vertex " + std::to_string(i + 1) + " lies on fewer than " +
                    std::to_string(d) + " facets");
  for (std::size_t a = 0; a < f; ++a)
    for (std::size_t b = 0; b < f; ++b) {
      if (a == b) continue;
      const auto va = inc.facet_vertices(a), vb = inc.facet_vertices(b);
      if (std::includes(vb.begin(), vb.end(), va.begin(), va.end()))
        out.push_back("facet " + std::to_string(a + 1) + " is nested in facet " +
                      std::to_string(b + 1));
    }
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b) {
      if (a == b) continue;
      const auto fa = inc.vertex_facets(a), fb = inc.vertex_facets(b);
      if (std::includes(fb.begin(), fb.end(), fa.begin(), fa.end()))
        out.push_back("vertex " + std::to_string(a + 1) + "'s facet set is nested in vertex " +
                      std::to_string(b + 1) + "'s");
    }
  return out;
}

namespace detail {

inline RationalVector minus(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Enumerates k-subsets of {0..n-1} in lexicographic order.
inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Brute-force facet enumeration over d-subsets of vertices: every affinely
/// independent d-subset spans a candidate hyperplane, kept when all vertices
/// lie on one closed side. Deduplication is by the normalized inequality
/// (first nonzero normal coordinate scaled to +-1, interior on the <= side);
/// facets come out ordered lexicographically by sorted incident-vertex sets.
/// Intended for desk scale (v <= ~12).
inline std::pair<HRepresentation, IncidenceStructure> enumerate_facets(
    const VRepresentation& vrep) {
  const std::size_t v = vrep.vertices.rows();
  const std::uint32_t d = vrep.dimension;
  if (d == 0 || vrep.vertices.cols() != d)
    throw PolytopeError("V-representation has inconsistent dimension");
  if (v < static_cast<std::size_t>(d) + 1) throw PolytopeError("not full-dimensional");

  {
    RationalMatrix aff(v, d + 1);
    for (std::size_t i = 0; i < v; ++i) {
      aff.at(i, 0) = Rational(1);
      for (std::uint32_t j = 0; j < d; ++j) aff.at(i, j + 1) = vrep.vertices.at(i, j);
    }
    if (rank(aff) != d + 1) throw PolytopeError("not full-dimensional");
  }
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t k = i + 1; k < v; ++k)
      if (vrep.vertices.row(i) == vrep.vertices.row(k))
        throw PolytopeError("row " + std::to_string(k + 1) + " is not a vertex");

  struct Candidate {
    RationalVector normal;
    Rational rhs;
    std::vector<std::size_t> incident;
  };
  std::vector<Candidate> facets;
  std::set<std::vector<Rational>> seen;

  std::vector<std::size_t> subset(d);
  for (std::uint32_t i = 0; i < d; ++i) subset[i] = i;
  do {
    // Hyperplane a.x = b through the subset: kernel of [P | -1].
    RationalMatrix m(d, d + 1);
    for (std::uint32_t r = 0; r < d; ++r) {
      for (std::uint32_t c = 0; c < d; ++c) m.at(r, c) = vrep.vertices.at(subset[r], c);
      m.at(r, d) = Rational(-1);
    }
    auto kern = kernel_basis(m);
    if (kern.size() != 1) continue;  // affinely dependent subset
    RationalVector a(kern[0].begin(), kern[0].begin() + d);
    Rational b = kern[0][d];

    bool pos = false, neg = false;
    RationalVector slack(v);
    for (std::size_t i = 0; i < v; ++i) {
      slack[i] = b - detail::dot(a, vrep.vertices.row(i));
      if (slack[i].sign() > 0) pos = true;
      if (slack[i].sign() < 0) neg = true;
    }
    if (pos && neg) continue;  // not supporting
    if (neg) {                 // flip so every slack is nonnegative
      for (auto& x : a) x = -x;
      b = -b;
      for (auto& s : slack) s = -s;
    }
    std::size_t fz = 0;
    while (a[fz].is_zero()) ++fz;
    const Rational scale = a[fz].abs().reciprocal();
    for (auto& x : a) x *= scale;
    b *= scale;

    std::vector<Rational> key(a);
    key.push_back(b);
    if (!seen.insert(key).second) continue;

    Candidate c;
    c.normal = std::move(a);
    c.rhs = std::move(b);
    for (std::size_t i = 0; i < v; ++i)
      if (slack[i].is_zero()) c.incident.push_back(i);
    facets.push_back(std::move(c));
  } while (detail::next_subset(subset, v));

  // Vertex test: the facets through a genuine vertex have normals of rank d.
  for (std::size_t i = 0; i < v; ++i) {
    std::vector<std::size_t> through;
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (std::binary_search(facets[j].incident.begin(), facets[j].incident.end(), i))
        through.push_back(j);
    RationalMatrix n(through.size(), d);
    for (std::size_t r = 0; r < through.size(); ++r)
      for (std::uint32_t c = 0; c < d; ++c) n.at(r, c) = facets[through[r]].normal[c];
    if (through.size() < d || rank(n) != d)
      throw PolytopeError("row " + std::to_string(i + 1) + " is not a vertex");
  }

  std::sort(facets.begin(), facets.end(),
            [](const Candidate& x, const Candidate& y) { return x.incident < y.incident; });

  HRepresentation h;
  h.normals = RationalMatrix(facets.size(), d);
  h.rhs.resize(facets.size());
  IncidenceStructure inc(d, v, facets.size());
  for (std::size_t j = 0; j < facets.size(); ++j) {
    for (std::uint32_t c = 0; c < d; ++c) h.normals.at(j, c) = facets[j].normal[c];
    h.rhs[j] = facets[j].rhs;
    for (std::size_t i : facets[j].incident) inc.set_incident(i, j);
  }
  return {std::move(h), std::move(inc)};
}

/// Slack matrix: entry (i,j) = w_j - W_j . p_i. Every entry must come out
/// nonnegative when the two representations describe the same polytope.
inline RationalMatrix slack_matrix(const VRepresentation& vrep, const HRepresentation& hrep) {
  if (vrep.vertices.cols() != hrep.normals.cols())
    throw PolytopeError("slack_matrix: dimension mismatch");
  const std::size_t v = vrep.vertices.rows(), f = hrep.normals.rows();
  RationalMatrix s(v, f);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < f; ++j) {
      Rational e = hrep.rhs[j] - detail::dot(hrep.normals.row(j), vrep.vertices.row(i));
      if (e.sign() < 0)
        throw PolytopeError("H-representation does not contain V-representation (vertex " +
                            std::to_string(i + 1) + ", facet " + std::to_string(j + 1) + ")");
      s.at(i, j) = std::move(e);
    }
  return s;
}

/// Slack matrix normalized so the all-ones vector lies in both the row and
/// column space: translate the interior point to the origin and rescale each
/// facet inequality to right-hand side 1. Translation leaves slacks
/// unchanged, so this is a positive column scaling of the plain slack matrix.
inline RationalMatrix normalize_s1(const VRepresentation& vrep, const HRepresentation& hrep,
                                   const RationalVector& interior_point) {
  if (interior_point.size() != vrep.dimension)
    throw PolytopeError("normalize_s1: interior point dimension mismatch");
  const std::size_t f = hrep.normals.rows();
  RationalVector shifted(f);
  for (std::size_t j = 0; j < f; ++j) {
    shifted[j] = hrep.rhs[j] - detail::dot(hrep.normals.row(j), interior_point);
    if (shifted[j].sign() <= 0) throw PolytopeError("point not interior");
  }
  RationalMatrix s = slack_matrix(vrep, hrep);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < f; ++j) s.at(i, j) /= shifted[j];
  return s;
}

inline RationalVector vertex_barycenter(const VRepresentation& vrep) {
  RationalVector c(vrep.dimension, Rational(0));
  for (std::size_t i = 0; i < vrep.vertices.rows(); ++i)
    for (std::uint32_t j = 0; j < vrep.dimension; ++j) c[j] += vrep.vertices.at(i, j);
  const Rational n(static_cast<long>(vrep.vertices.rows()));
  for (auto& x : c) x /= n;
  return c;
}

/// The three slack-matrix conditions: right support, rank d+1, all-ones in
/// the column span. A nonnegative matrix satisfying all three is a true
/// slack matrix of a realization of the incidence's combinatorial type.
struct SlackConditionReport {
  bool support_ok = false;
  bool rank_ok = false;
  bool ones_ok = false;
  bool nonnegative = false;
  bool is_true_slack() const { return support_ok && rank_ok && ones_ok && nonnegative; }
};

inline SlackConditionReport check_slack_conditions(const RationalMatrix& s,
                                                   const IncidenceStructure& pattern) {
  if (s.rows() != pattern.vertex_count() || s.cols() != pattern.facet_count())
    throw PolytopeError("check_slack_conditions: shape mismatch");
  SlackConditionReport r;
  r.support_ok = true;
  r.nonnegative = true;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (s.at(i, j).is_zero() != pattern.incident(i, j)) r.support_ok = false;
      if (s.at(i, j).sign() < 0) r.nonnegative = false;
    }
  r.rank_ok = rank(s) == pattern.dimension() + 1;
  r.ones_ok = in_column_span(s, ones_vector(s.rows()));
  return r;
}

/// Divides each row by its sum. Turns any generalized slack matrix into a
/// true one: the columns of the result sum to the all-ones vector.
inline RationalMatrix row_scale_to_true(const RationalMatrix& s) {
  RationalMatrix r = s;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    Rational sum(0);
    for (std::size_t j = 0; j < s.cols(); ++j) sum += s.at(i, j);
    if (sum.is_zero()) throw PolytopeError("zero row");
    for (std::size_t j = 0; j < s.cols(); ++j) r.at(i, j) /= sum;
  }
  return r;
}

/// A flag of the incidence: vertex and facet sequences (0-based) such that
/// the submatrix of any matrix with this support, rows v0..vd against
/// columns F0..Fd, is lower triangular with nonzero diagonal.
struct Flag {
  std::vector<std::size_t> vertices;  // v0 .. vd
  std::vector<std::size_t> facets;    // F0 .. Fd
};

inline Flag flag_submatrix(const IncidenceStructure& inc) {
  const std::size_t v = inc.vertex_count(), f = inc.facet_count();
  const std::uint32_t d = inc.dimension();

  // Faces are represented by vertex sets closed under the Galois
  // correspondence: close(A) = all vertices on every facet containing A.
  auto close = [&](const std::vector<std::size_t>& a) {
    std::vector<std::size_t> fs;
    for (std::size_t j = 0; j < f; ++j) {
      bool contains = true;
      for (std::size_t i : a)
        if (!inc.incident(i, j)) {
          contains = false;
          break;
        }
      if (contains) fs.push_back(j);
    }
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < v; ++i) {
      bool on_all = true;
      for (std::size_t j : fs)
        if (!inc.incident(i, j)) {
          on_all = false;
          break;
        }
      if (on_all) c.push_back(i);
    }
    return c;
  };

  std::vector<std::size_t> cur(v);
  for (std::size_t i = 0; i < v; ++i) cur[i] = i;

  std::vector<std::size_t> descent_facets;  // G_1 .. G_d (facet of step k)
  std::vector<std::vector<std::size_t>> chain{cur};
  for (std::uint32_t step = 0; step < d; ++step) {
    // Candidates: proper nonempty intersections with facets; the inclusion-
    // maximal ones are exactly the facets of the current face.
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> cands;
    for (std::size_t j = 0; j < f; ++j) {
      std::vector<std::size_t> inter;
      for (std::size_t i : cur)
        if (inc.incident(i, j)) inter.push_back(i);
      if (inter.empty() || inter.size() == cur.size()) continue;
      cands.push_back({j, close(inter)});
    }
    std::size_t best = cands.size();
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool maximal = true;
      for (std::size_t b = 0; b < cands.size() && maximal; ++b) {
        if (a == b) continue;
        if (cands[b].second.size() > cands[a].second.size() &&
            std::includes(cands[b].second.begin(), cands[b].second.end(),
                          cands[a].second.begin(), cands[a].second.end()))
          maximal = false;
      }
      if (maximal) {
        best = a;
        break;
      }
    }
    if (best == cands.size()) throw PolytopeError("no flag found");
    descent_facets.push_back(cands[best].first);
    cur = cands[best].second;
    chain.push_back(cur);
  }
  if (cur.size() != 1) throw PolytopeError("no flag found");

  Flag flag;
  flag.vertices.resize(d + 1);
  flag.facets.resize(d + 1);
  flag.vertices[0] = cur[0];
  // F_k = G_{d-k+1} for k = 1..d; F_0 avoids v_0.
  for (std::uint32_t k = 1; k <= d; ++k) flag.facets[k] = descent_facets[d - k];
  {
    std::size_t f0 = f;
    for (std::size_t j = 0; j < f; ++j)
      if (!inc.incident(flag.vertices[0], j)) {
        f0 = j;
        break;
      }
    if (f0 == f) throw PolytopeError("no flag found");
    flag.facets[0] = f0;
  }
  // v_k lies on the dim-k chain face but off facet F_k.
  for (std::uint32_t k = 1; k <= d; ++k) {
    const auto& face = chain[d - k];  // dimension k
    std::size_t pick = v;
    for (std::size_t i : face)
      if (!inc.incident(i, flag.facets[k])) {
        pick = i;
        break;
      }
    if (pick == v) throw PolytopeError("no flag found");
    flag.vertices[k] = pick;
  }

  for (std::uint32_t i = 0; i <= d; ++i) {
    if (inc.incident(flag.vertices[i], flag.facets[i]))
      throw PolytopeError("no flag found");  // diagonal must be nonzero
    for (std::uint32_t j = i + 1; j <= d; ++j)
      if (!inc.incident(flag.vertices[i], flag.facets[j]))
        throw PolytopeError("no flag found");  // above-diagonal must be zero
  }
  return flag;
}

namespace detail {

// Column j of a equals a positive multiple of column k of b?
inline bool column_pos_multiple(const RationalMatrix& a, std::size_t j,
                                const RationalMatrix& b, std::size_t k) {
  Rational ratio(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const bool az = a.at(i, j).is_zero(), bz = b.at(i, k).is_zero();
    if (az != bz) return false;
    if (az) continue;
    const Rational r = a.at(i, j) / b.at(i, k);
    if (r.sign() <= 0) return false;
    if (ratio.is_zero())
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return true;
}

inline bool columns_match_up_to_scaling(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.cols();
  std::vector<int> match(n, -1);
  std::vector<char> visited(n);
  auto augment = [&](auto&& self, std::size_t j) -> bool {
    for (std::size_t k = 0; k < n; ++k) {
      if (visited[k] || !column_pos_multiple(a, j, b, k)) continue;
      visited[k] = 1;
      if (match[k] < 0 || self(self, static_cast<std::size_t>(match[k]))) {
        match[k] = static_cast<int>(j);
        return true;
      }
    }
    return false;
  };
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, j)) return false;
  }
  return true;
}

}  // namespace detail

/// Comparator behind "equal up to row/column permutation and positive column
/// scaling". With `allow_row_permutation` false the rows must already align.
inline bool matrices_equal_up_to_scaling(const RationalMatrix& a, const RationalMatrix& b,
                                         bool allow_row_permutation = false) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (!allow_row_permutation) return detail::columns_match_up_to_scaling(a, b);

  const std::size_t v = a.rows();
  auto support_size = [](const RationalMatrix& m, std::size_t i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) n += !m.at(i, j).is_zero();
    return n;
  };
  std::vector<std::size_t> perm(v);
  std::vector<char> used(v, 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == v) {
      RationalMatrix p(v, a.cols());
      for (std::size_t r = 0; r < v; ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) p.at(r, c) = a.at(perm[r], c);
      return detail::columns_match_up_to_scaling(p, b);
    }
    for (std::size_t r = 0; r < v; ++r) {
      if (used[r] || support_size(a, r) != support_size(b, i)) continue;
      used[r] = 1;
      perm[i] = r;
      if (self(self, i + 1)) return true;
      used[r] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Rows of a true slack matrix are the vertices of a polytope affinely
/// equivalent to the one the matrix came from. `vertex_rows` keeps the raw
/// rows (points in R^f); `coordinates` is a full-dimensional affine
/// coordinatization suitable for enumerate_facets.
struct SlackRealization {
  RationalMatrix vertex_rows;
  VRepresentation coordinates;
};

inline SlackRealization realize_from_slack(const RationalMatrix& s) {
  const std::size_t v = s.rows(), f = s.cols();
  if (v == 0 || f == 0) throw PolytopeError("realize_from_slack: empty matrix");
  const std::size_t r = rank(s);
  if (r < 2) throw PolytopeError("realize_from_slack: rank below 2");
  const std::uint32_t d = static_cast<std::uint32_t>(r - 1);

  IncidenceStructure pattern(d, v, f);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < f; ++j)
      if (s.at(i, j).is_zero()) pattern.set_incident(i, j);
  const SlackConditionReport rep = check_slack_conditions(s, pattern);
  if (!rep.is_true_slack())
    throw PolytopeError(std::string("realize_from_slack: ") +
                        (!rep.nonnegative ? "matrix has negative entries"
                                          : "all-ones vector not in column span"));

  // Affine basis among the rows, greedily: keep a row when it raises the
  // affine rank.
  std::vector<std::size_t> basis{0};
  for (std::size_t i = 1; i < v && basis.size() < d + 1; ++i) {
    RationalMatrix diff(basis.size(), f);
    for (std::size_t k = 1; k < basis.size(); ++k)
      for (std::size_t j = 0; j < f; ++j)
        diff.at(k - 1, j) = s.at(basis[k], j) - s.at(basis[0], j);
    for (std::size_t j = 0; j < f; ++j)
      diff.at(basis.size() - 1, j) = s.at(i, j) - s.at(basis[0], j);
    if (rank(diff) == basis.size()) basis.push_back(i);
  }
  if (basis.size() != d + 1)
    throw PolytopeError("realize_from_slack: rows do not affinely span");

  // Coordinates of row i: solve sum_k lambda_k (b_k - b_0) = row_i - b_0.
  RationalMatrix m(f, d);
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t j = 0; j < f; ++j)
      m.at(j, k - 1) = s.at(basis[k], j) - s.at(basis[0], j);

  SlackRealization out;
  out.vertex_rows = s;
  out.coordinates.dimension = d;
  out.coordinates.vertices = RationalMatrix(v, d);
  for (std::size_t i = 0; i < v; ++i) {
    RationalVector rhs(f);
    for (std::size_t j = 0; j < f; ++j) rhs[j] = s.at(i, j) - s.at(basis[0], j);
    auto x = solve_linear(m, rhs);
    if (!x) throw PolytopeError("realize_from_slack: row outside the affine hull");
    for (std::uint32_t c = 0; c < d; ++c) out.coordinates.vertices.at(i, c) = (*x)[c];
  }
  return out;
}

}  // namespace slack

#endif  // SLACK_POLYTOPE_HPP
