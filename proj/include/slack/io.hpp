#ifndef SLACK_IO_HPP
#define SLACK_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "slack/analyses.hpp"

namespace slack::io {

inline constexpr const char* kToolName = "slacktool";
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

/// A polytope input: either vertex coordinates or an abstract facet list.
struct PolytopeInput {
  std::uint32_t dimension = 0;
  std::optional<VRepresentation> vrep;
  std::optional<IncidenceStructure> incidence;  // present for abstract inputs

  bool has_coordinates() const { return vrep.has_value(); }
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("cannot parse " + path + ": " + e.what());
  }
  return j;
}

/// Accepts {"dimension": d, "vertices": [["p/q",...],...]} or
/// {"dimension": d, "num_vertices": v, "facets": [[1-based indices],...]}.
inline PolytopeInput parse_polytope_input(const json& j) {
  PolytopeInput in;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer() ||
      j["dimension"].get<long>() < 0)
    throw std::runtime_error("input: missing or invalid \"dimension\"");
  in.dimension = j["dimension"].get<std::uint32_t>();

  if (j.contains("vertices")) {
    const auto& vs = j["vertices"];
    if (!vs.is_array() || vs.empty())
      throw std::runtime_error("input: \"vertices\" must be a nonempty array");
    RationalMatrix m(vs.size(), in.dimension);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!vs[i].is_array() || vs[i].size() != in.dimension)
        throw std::runtime_error("input: vertex " + std::to_string(i + 1) +
                                 " must have exactly " + std::to_string(in.dimension) +
                                 " coordinates");
      for (std::size_t c = 0; c < in.dimension; ++c) {
        const auto& e = vs[i][c];
        if (e.is_string())
          m.at(i, c) = Rational::parse(e.get<std::string>());
        else if (e.is_number_integer())
          m.at(i, c) = Rational(e.get<long>());
        else
          throw std::runtime_error("input: coordinates must be integers or \"p/q\" strings");
      }
    }
    in.vrep = VRepresentation{in.dimension, std::move(m)};
    return in;
  }

  if (j.contains("facets")) {
    if (!j.contains("num_vertices") || !j["num_vertices"].is_number_integer() ||
        j["num_vertices"].get<long>() <= 0)
      throw std::runtime_error("input: abstract facet lists need \"num_vertices\"");
    const std::size_t v = j["num_vertices"].get<std::size_t>();
    std::vector<std::vector<std::size_t>> facets;
    for (const auto& fl : j["facets"]) {
      if (!fl.is_array()) throw std::runtime_error("input: \"facets\" must hold arrays");
      std::vector<std::size_t> f;
      for (const auto& e : fl) f.push_back(e.get<std::size_t>());
      facets.push_back(std::move(f));
    }
    in.incidence = IncidenceStructure::from_facet_vertex_sets(in.dimension, v, facets);
    return in;
  }

  throw std::runtime_error("input: expected \"vertices\" or \"facets\"");
}

inline PolytopeInput load_polytope(const std::string& path) {
  return parse_polytope_input(read_json_file(path));
}

/// Derives the incidence of an input, enumerating facets when needed.
/// Returns the incidence plus, for coordinate inputs, the H-representation.
struct ResolvedPolytope {
  IncidenceStructure incidence;
  std::optional<VRepresentation> vrep;
  std::optional<HRepresentation> hrep;
};

inline ResolvedPolytope resolve(const PolytopeInput& in) {
  ResolvedPolytope r;
  if (in.has_coordinates()) {
    auto [h, inc] = enumerate_facets(*in.vrep);
    r.incidence = std::move(inc);
    r.vrep = in.vrep;
    r.hrep = std::move(h);
  } else {
    r.incidence = *in.incidence;
  }
  return r;
}

// --- JSON builders ----------------------------------------------------------

inline json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::runtime_error("matrix: expected array of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::runtime_error("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[i][c];
      m.at(i, c) = e.is_string() ? Rational::parse(e.get<std::string>())
                                 : Rational(e.get<long>());
    }
  }
  return m;
}

inline json vector_to_json(const RationalVector& v) {
  json a = json::array();
  for (const Rational& x : v) a.push_back(x.str());
  return a;
}

inline json incidence_to_json(const IncidenceStructure& inc) {
  json facets = json::array();
  for (std::size_t j = 0; j < inc.facet_count(); ++j) {
    json f = json::array();
    for (std::size_t i : inc.facet_vertices(j)) f.push_back(i + 1);
    facets.push_back(std::move(f));
  }
  return json{{"dimension", inc.dimension()},
              {"num_vertices", inc.vertex_count()},
              {"facets", std::move(facets)}};
}

inline json fix_to_json(const ScalingFix& fix) {
  return json{{"mode", fix.mode == ScalingFix::Mode::Projective ? "projective" : "affine"},
              {"fixed", fix.fixed}};
}

inline ScalingFix fix_from_json(const json& j) {
  ScalingFix fix;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "projective")
    fix.mode = ScalingFix::Mode::Projective;
  else if (mode == "affine")
    fix.mode = ScalingFix::Mode::Affine;
  else
    throw std::runtime_error("fix: mode must be \"projective\" or \"affine\"");
  for (const auto& v : j.at("fixed")) fix.fixed.push_back(v.get<std::uint32_t>());
  std::sort(fix.fixed.begin(), fix.fixed.end());
  return fix;
}

/// Ideals serialize as ordered lists of canonical polynomial strings.
inline json ideal_to_json(const IdealBasis& ideal) {
  json gens = json::array();
  for (const Polynomial& g : ideal.generators) gens.push_back(g.str());
  return json{{"ring_vars", ideal.ring_vars}, {"generators", std::move(gens)}};
}

inline IdealBasis ideal_from_json(const json& j) {
  const std::uint32_t nvars = j.at("ring_vars").get<std::uint32_t>();
  const MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(parse_polynomial(s.get<std::string>(), nvars, order));
  return make_basis(nvars, std::move(gens));
}

/// Groebner bases additionally record their order descriptor.
inline json groebner_to_json(const GroebnerBasis& gb) {
  json els = json::array();
  for (const Polynomial& g : gb.elements) els.push_back(g.str());
  return json{{"ring_vars", gb.ring_vars},
              {"order", gb.order.descriptor()},
              {"elements", std::move(els)}};
}

inline json report_to_json(const AnalysisReport& rep) {
  json j{{"probe", rep.probe},
         {"verdict", rep.verdict},
         {"conclusive", rep.conclusive},
         {"method", rep.method},
         {"ring_vars", rep.ring_vars}};
  if (!rep.certificates.empty()) {
    json c = json::array();
    for (const Polynomial& p : rep.certificates) c.push_back(p.str());
    j["certificates"] = std::move(c);
  }
  if (!rep.witness.empty()) j["witness"] = vector_to_json(rep.witness);
  if (rep.dim_elimination) j["dim_elimination"] = *rep.dim_elimination;
  if (rep.dim_face) j["dim_face"] = *rep.dim_face;
  if (rep.containment) j["containment"] = *rep.containment;
  if (rep.replay_trivial) j["replay_trivial"] = *rep.replay_trivial;
  // Wall-clock stays out of the artifact so outputs are byte-reproducible.
  j["budget_used"] = json{{"pairs", rep.budget_used.pairs_processed},
                          {"reduction_steps", rep.budget_used.reduction_steps}};
  return j;
}

inline void write_output(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace slack::io

#endif  // SLACK_IO_HPP
