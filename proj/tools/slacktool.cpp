// Command-line front end: slack matrices, slack ideals, and the
// realizability / rationality / prescribability probes, with reproducible
// JSON output. Same input and flags always produce byte-identical files;
// wall-clock timings go to stderr only.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slack/io.hpp"

namespace {

using slack::Budget;
using slack::IncidenceStructure;
using slack::Rational;
using slack::ScalingFix;
using slack::io::json;

struct CommonOpts {
  std::string input;
  std::string output;
  std::string matrix_path;
  std::string fix_mode = "none";  // none | auto-projective | auto-affine
  std::string order = "grevlex";
  std::uint64_t budget_pairs = 0;   // 0 = unlimited
  double budget_seconds = 0;        // 0 = unlimited
  std::vector<std::uint32_t> fixed_vars;
  std::vector<std::string> substitutions;
  std::vector<std::uint32_t> eliminate_vars;
  std::size_t facet = 0;  // 1-based
};

Budget make_budget(const CommonOpts& o) {
  Budget b;
  if (o.budget_pairs > 0) b.max_pairs = o.budget_pairs;
  if (o.budget_seconds > 0) b.max_seconds = o.budget_seconds;
  return b;
}

std::optional<ScalingFix> make_fix(const CommonOpts& o, const IncidenceStructure& inc,
                                   bool affine_command) {
  if (!o.fixed_vars.empty()) {
    ScalingFix fix;
    fix.mode = affine_command ? ScalingFix::Mode::Affine : ScalingFix::Mode::Projective;
    fix.fixed = o.fixed_vars;
    std::sort(fix.fixed.begin(), fix.fixed.end());
    slack::validate_fix(slack::SymbolicSlackMatrix(inc), fix);
    return fix;
  }
  if (o.fix_mode == "none") return std::nullopt;
  if (o.fix_mode == "auto-projective")
    return slack::fix_variables_by_scaling(inc, ScalingFix::Mode::Projective);
  if (o.fix_mode == "auto-affine")
    return slack::fix_variables_by_scaling(inc, ScalingFix::Mode::Affine);
  throw std::runtime_error("unknown --fix mode: " + o.fix_mode);
}

std::map<std::uint32_t, Rational> parse_substitutions(const std::vector<std::string>& specs) {
  std::map<std::uint32_t, Rational> subs;
  for (const std::string& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("--substitute expects var=p/q, got: " + s);
    std::string var = s.substr(0, eq);
    if (!var.empty() && var[0] == 'x') var = var.substr(1);
    const std::uint32_t v = static_cast<std::uint32_t>(std::stoul(var));
    subs[v] = Rational::parse(s.substr(eq + 1));
  }
  return subs;
}

json config_json(const std::string& command, const CommonOpts& o) {
  json cfg{{"input", o.input},
           {"fix", o.fix_mode},
           {"order", o.order},
           {"budget_pairs", o.budget_pairs},
           {"budget_seconds", o.budget_seconds}};
  if (!o.fixed_vars.empty()) cfg["fixed_vars"] = o.fixed_vars;
  if (!o.substitutions.empty()) cfg["substitute"] = o.substitutions;
  if (!o.eliminate_vars.empty()) cfg["eliminate"] = o.eliminate_vars;
  if (!o.matrix_path.empty()) cfg["matrix"] = o.matrix_path;
  if (o.facet != 0) cfg["facet"] = o.facet;
  return json{{"tool", slack::io::kToolName},
              {"version", slack::io::kToolVersion},
              {"command", command},
              {"config", std::move(cfg)}};
}

void emit(const CommonOpts& o, json j) {
  if (o.output.empty())
    std::cout << j.dump(2) << "\n";
  else
    slack::io::write_output(o.output, j);
}

slack::MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return slack::MonomialOrder::grevlex();
  if (name == "lex") return slack::MonomialOrder::lex();
  throw std::runtime_error("unknown --order: " + name);
}

// Applies the optional --substitute / --eliminate postprocessing to an
// ideal: substitution images of the generators, then the elimination ideal.
slack::IdealBasis postprocess_ideal(slack::IdealBasis ideal, const CommonOpts& o,
                                    const Budget& budget) {
  if (!o.substitutions.empty()) {
    const auto subs = parse_substitutions(o.substitutions);
    const auto order = slack::MonomialOrder::grevlex();
    std::vector<slack::Polynomial> gens;
    for (const auto& g : ideal.generators) gens.push_back(slack::substitute(g, subs, order));
    ideal = slack::make_basis(ideal.ring_vars, std::move(gens));
  }
  if (!o.eliminate_vars.empty()) ideal = slack::eliminate(ideal, o.eliminate_vars, budget);
  return ideal;
}

int run_matrix(const CommonOpts& o) {
  const auto input = slack::io::load_polytope(o.input);
  if (!input.has_coordinates())
    throw std::runtime_error("matrix: input must provide vertex coordinates");
  const auto resolved = slack::io::resolve(input);
  const auto s = slack::slack_matrix(*resolved.vrep, *resolved.hrep);

  json out = config_json("matrix", o);
  out["dimension"] = input.dimension;
  out["num_vertices"] = resolved.vrep->vertices.rows();
  out["incidence"] = slack::io::incidence_to_json(resolved.incidence);
  out["facet_normals"] = slack::io::matrix_to_json(resolved.hrep->normals);
  out["facet_rhs"] = slack::io::vector_to_json(resolved.hrep->rhs);
  out["slack_matrix"] = slack::io::matrix_to_json(s);
  emit(o, std::move(out));
  return 0;
}

int run_ideal(const CommonOpts& o, bool affine) {
  const auto resolved = slack::io::resolve(slack::io::load_polytope(o.input));
  const auto fix = make_fix(o, resolved.incidence, affine);
  const Budget budget = make_budget(o);
  slack::GroebnerStats stats;

  slack::IdealBasis ideal =
      affine ? slack::affine_slack_ideal(resolved.incidence, fix, budget, &stats)
             : slack::slack_ideal(resolved.incidence, fix, budget, &stats);
  ideal = postprocess_ideal(std::move(ideal), o, budget);
  const auto gb = slack::buchberger(ideal, parse_order(o.order), budget, &stats);

  json out = config_json(affine ? "affine-ideal" : "ideal", o);
  if (fix) out["applied_fix"] = slack::io::fix_to_json(*fix);
  out["ideal"] = slack::io::ideal_to_json(ideal);
  out["groebner"] = slack::io::groebner_to_json(gb);
  out["budget_used"] =
      json{{"pairs", stats.pairs_processed}, {"reduction_steps", stats.reduction_steps}};
  emit(o, std::move(out));
  return 0;
}

int run_check(const CommonOpts& o) {
  const auto resolved = slack::io::resolve(slack::io::load_polytope(o.input));
  if (o.matrix_path.empty()) throw std::runtime_error("check: --matrix FILE is required");
  const auto mj = slack::io::read_json_file(o.matrix_path);
  const auto m = slack::io::matrix_from_json(
      mj.contains("slack_matrix") ? mj["slack_matrix"] : mj);

  const auto& inc = resolved.incidence;
  if (m.rows() != inc.vertex_count() || m.cols() != inc.facet_count())
    throw std::runtime_error("check: matrix shape does not match the incidence");
  const auto rep = slack::check_slack_conditions(m, inc);

  json out = config_json("check", o);
  out["support_ok"] = rep.support_ok;
  out["rank_ok"] = rep.rank_ok;
  out["ones_ok"] = rep.ones_ok;
  out["nonnegative"] = rep.nonnegative;
  out["is_true_slack_matrix"] = rep.is_true_slack();
  emit(o, std::move(out));

  if (!rep.is_true_slack()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j).is_zero() != inc.incident(i, j)) {
          std::cerr << "support mismatch at (" << i + 1 << "," << j + 1 << ")\n";
          return 1;
        }
        if (m.at(i, j).sign() < 0) {
          std::cerr << "negative entry at (" << i + 1 << "," << j + 1 << ")\n";
          return 1;
        }
      }
    if (!rep.rank_ok)
      std::cerr << "rank is not dimension + 1\n";
    else
      std::cerr << "all-ones vector not in the column span\n";
    return 1;
  }
  return 0;
}

int run_flag(const CommonOpts& o) {
  const auto resolved = slack::io::resolve(slack::io::load_polytope(o.input));
  const auto flag = slack::flag_submatrix(resolved.incidence);
  json out = config_json("flag", o);
  json vs = json::array(), fs = json::array();
  for (auto v : flag.vertices) vs.push_back(v + 1);
  for (auto f : flag.facets) fs.push_back(f + 1);
  out["flag_vertices"] = std::move(vs);
  out["flag_facets"] = std::move(fs);
  emit(o, std::move(out));
  return 0;
}

int run_realize(const CommonOpts& o) {
  if (o.matrix_path.empty()) throw std::runtime_error("realize: --matrix FILE is required");
  const auto mj = slack::io::read_json_file(o.matrix_path);
  const auto m = slack::io::matrix_from_json(
      mj.contains("slack_matrix") ? mj["slack_matrix"] : mj);
  const auto real = slack::realize_from_slack(m);
  json out = config_json("realize", o);
  out["ambient_rows"] = slack::io::matrix_to_json(real.vertex_rows);
  out["dimension"] = real.coordinates.dimension;
  out["vertices"] = slack::io::matrix_to_json(real.coordinates.vertices);
  emit(o, std::move(out));
  return 0;
}

int run_probe(const CommonOpts& o, const std::string& which) {
  const auto resolved = slack::io::resolve(slack::io::load_polytope(o.input));
  const auto fix = make_fix(o, resolved.incidence, false);
  const Budget budget = make_budget(o);

  slack::AnalysisReport rep;
  if (which == "realizability")
    rep = slack::realizability_probe(resolved.incidence, fix, budget);
  else
    rep = slack::rationality_probe(resolved.incidence, fix, budget);

  json out = config_json(which, o);
  if (fix) out["applied_fix"] = slack::io::fix_to_json(*fix);
  out["report"] = slack::io::report_to_json(rep);
  emit(o, std::move(out));
  std::cerr << which << ": " << rep.verdict << " (" << rep.wall_seconds << " s)\n";
  return rep.conclusive ? 0 : 2;
}

int run_prescribe(const CommonOpts& o) {
  const auto resolved = slack::io::resolve(slack::io::load_polytope(o.input));
  if (o.facet == 0) throw std::runtime_error("prescribe: --facet INDEX (1-based) is required");
  const auto fd = slack::facet_face_data(resolved.incidence, o.facet - 1);

  std::optional<slack::PrescribeReplay> replay;
  if (!o.substitutions.empty() || !o.eliminate_vars.empty()) {
    replay = slack::PrescribeReplay{};
    replay->substitutions = parse_substitutions(o.substitutions);
    replay->eliminate_vars = o.eliminate_vars;
  }
  const auto rep = slack::prescribability_probe(resolved.incidence, fd.face_cells, fd.face,
                                                resolved.incidence.dimension() - 1, replay,
                                                make_budget(o));
  json out = config_json("prescribe", o);
  out["face_cells"] = fd.face_cells;
  out["face_incidence"] = slack::io::incidence_to_json(fd.face);
  out["report"] = slack::io::report_to_json(rep);
  emit(o, std::move(out));
  std::cerr << "prescribe: " << rep.verdict << " (" << rep.wall_seconds << " s)\n";
  return rep.conclusive ? 0 : 2;
}

int run_dim(const CommonOpts& o) {
  const auto resolved = slack::io::resolve(slack::io::load_polytope(o.input));
  const auto fix = make_fix(o, resolved.incidence, false);
  const Budget budget = make_budget(o);
  slack::GroebnerStats stats;

  slack::IdealBasis ideal = slack::slack_ideal(resolved.incidence, fix, budget, &stats);
  if (!o.substitutions.empty()) ideal = postprocess_ideal(std::move(ideal), o, budget);

  std::optional<std::uint32_t> dim;
  if (!o.eliminate_vars.empty()) {
    // Dimension of the elimination ideal inside the subring of the
    // remaining variables.
    ideal = slack::eliminate(ideal, o.eliminate_vars, budget, &stats);
    std::vector<std::uint32_t> keep;
    for (std::uint32_t v = 1; v <= ideal.ring_vars; ++v)
      if (std::find(o.eliminate_vars.begin(), o.eliminate_vars.end(), v) ==
          o.eliminate_vars.end())
        keep.push_back(v);
    dim = slack::dimension(slack::restrict_to_vars(ideal, keep), budget, &stats);
  } else {
    dim = slack::dimension(ideal, budget, &stats);
  }

  json out = config_json("dim", o);
  if (fix) out["applied_fix"] = slack::io::fix_to_json(*fix);
  if (dim)
    out["dimension"] = *dim;
  else
    out["dimension"] = "empty";
  out["budget_used"] =
      json{{"pairs", stats.pairs_processed}, {"reduction_steps", stats.reduction_steps}};
  emit(o, std::move(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact slack matrices, slack ideals, and realization-space probes"};
  app.require_subcommand(1);

  CommonOpts o;
  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("input", o.input, "polytope JSON file")->required();
    cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
    cmd->add_option("--fix", o.fix_mode, "none | auto-projective | auto-affine");
    cmd->add_option("--order", o.order, "grevlex | lex");
    cmd->add_option("--budget-pairs", o.budget_pairs, "max S-pairs per Groebner run");
    cmd->add_option("--budget-seconds", o.budget_seconds, "wall-clock budget");
    cmd->add_option("--fixed-vars", o.fixed_vars, "explicit fixed variable list")
        ->delimiter(',');
    cmd->add_option("--substitute", o.substitutions, "var=p/q substitutions")
        ->delimiter(',');
    cmd->add_option("--eliminate", o.eliminate_vars, "variables to eliminate")
        ->delimiter(',');
  };

  auto* matrix = app.add_subcommand("matrix", "slack matrix from vertex coordinates");
  add_common(matrix, true);
  auto* ideal = app.add_subcommand("ideal", "slack ideal of the input's incidence");
  add_common(ideal, true);
  auto* affine = app.add_subcommand("affine-ideal", "affine slack ideal");
  add_common(affine, true);
  auto* check = app.add_subcommand("check", "check the three slack-matrix conditions");
  add_common(check, true);
  check->add_option("--matrix", o.matrix_path, "matrix JSON file")->required();
  auto* flag = app.add_subcommand("flag", "flag submatrix (triangular certificate)");
  add_common(flag, true);
  auto* realize = app.add_subcommand("realize", "realize a polytope from a slack matrix");
  add_common(realize, false);
  realize->add_option("--matrix", o.matrix_path, "matrix JSON file")->required();
  auto* realiz = app.add_subcommand("realizability", "realizability probe");
  add_common(realiz, true);
  auto* ration = app.add_subcommand("rationality", "rationality probe");
  add_common(ration, true);
  auto* prescribe = app.add_subcommand("prescribe", "face prescribability probe");
  add_common(prescribe, true);
  prescribe->add_option("--facet", o.facet, "facet index (1-based) of the face")->required();
  auto* dim = app.add_subcommand("dim", "Krull dimension of the slack ideal");
  add_common(dim, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (matrix->parsed()) return run_matrix(o);
    if (ideal->parsed()) return run_ideal(o, false);
    if (affine->parsed()) return run_ideal(o, true);
    if (check->parsed()) return run_check(o);
    if (flag->parsed()) return run_flag(o);
    if (realize->parsed()) return run_realize(o);
    if (realiz->parsed()) return run_probe(o, "realizability");
    if (ration->parsed()) return run_probe(o, "rationality");
    if (prescribe->parsed()) return run_prescribe(o);
    if (dim->parsed()) return run_dim(o);
  } catch (const slack::BudgetExhausted&) {
    std::cerr << "inconclusive: budget exhausted\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
