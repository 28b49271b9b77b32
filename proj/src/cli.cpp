// Copyright 2026 The rodcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rodcone/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rodcone/analysis.hpp"
#include "rodcone/fuzz.hpp"
#include "rodcone/render.hpp"

namespace rodcone {
namespace {

struct Config {
  std::string input;
  std::string format = "text";
  std::string field = "zp";
  std::string realization;
  std::string matrix_csv;
  std::string highlight = "none";
  std::vector<std::string> inner;
  std::uint64_t seed = kDefaultSeed;
  int seeds = 3;
  int retry_budget = 32;
  bool cross_validate = false;
  bool rotate = false;
  bool cone = false;
  bool serial = false;
  bool verbose = false;
  std::size_t cases = 200;
  std::size_t max_points = 10;
  std::size_t max_lines = 6;
  unsigned threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PointId resolve_point(const IncidenceGeometry& g, const std::string& token) {
  for (PointId p = 0; p < g.num_points(); ++p) {
    if (g.point_name(p) == token) return p;
  }
  std::size_t idx = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), idx);
  if (ec != std::errc{} || ptr != token.data() + token.size() || idx >= g.num_points()) {
    throw std::runtime_error("unknown point '" + token + "'");
  }
  return static_cast<PointId>(idx);
}

DecideOptions decide_options(const Config& cfg, const IncidenceGeometry& g) {
  DecideOptions opts;
  opts.mode = cfg.cross_validate ? VerdictMode::kCrossValidated : VerdictMode::kCombinatorial;
  opts.seed = cfg.seed;
  opts.seeds = cfg.seeds;
  opts.field = cfg.field == "rational" ? FieldChoice::kRational : FieldChoice::kZp;
  opts.sampling.retry_budget = cfg.retry_budget;
  if (!cfg.inner.empty()) {
    if (cfg.inner.size() != g.num_lines()) {
      throw std::runtime_error("--inner needs one point per line (" +
                               std::to_string(g.num_lines()) + ")");
    }
    for (const auto& t : cfg.inner) opts.inner_choice.push_back(resolve_point(g, t));
  }
  return opts;
}

std::string plural(std::size_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

std::string verdict_line(const RigidityVerdict& v) {
  if (v.rigid()) {
    return "rigid (" + std::to_string(v.combinatorial.accepted.size()) + "/" +
           std::to_string(v.num_edges) + " edges independent, " +
           std::to_string(v.combinatorial.remaining_pebbles) + " pebbles remain)";
  }
  std::string line = "flexible (" +
                     plural(v.internal_dof(), "internal degree of freedom",
                            "internal degrees of freedom") + ")";
  if (!v.connected) line += " [disconnected]";
  return line;
}

std::string algebraic_line(const RigidityVerdict& v) {
  std::string line = "algebraic: " + std::string(to_string(v.agreement));
  if (v.algebraic) {
    line += " (";
    line += v.algebraic->rigid ? "rigid" : "flexible";
    line += ", ranks";
    for (auto r : v.algebraic->ranks) line += " " + std::to_string(r);
    line += " of " + std::to_string(v.algebraic->full_rank) + ")";
  } else {
    line += " (" + v.skip_reason + ")";
  }
  return line;
}

int verdict_exit(const RigidityVerdict& v) {
  if (v.agreement == Agreement::kDisagree) return kExitDisagreement;
  return v.rigid() ? kExitRigid : kExitFlexible;
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto g = load_geometry(cfg.input);
  const auto v = decide_rod_rigidity(g, decide_options(cfg, g));
  if (cfg.format == "json") {
    out << verdict_json(v) << '\n';
  } else {
    out << verdict_line(v) << '\n';
    if (cfg.cross_validate) out << algebraic_line(v) << '\n';
  }
  if (v.agreement == Agreement::kDisagree) {
    err << "defect: combinatorial and algebraic verdicts disagree\n" << v.reproduction << '\n';
  }
  return verdict_exit(v);
}

int cmd_minimal(const Config& cfg, std::ostream& out) {
  const auto g = load_geometry(cfg.input);
  const auto v = decide_rod_rigidity(g);
  if (!v.rigid()) {
    if (cfg.format == "json") {
      out << verdict_json(v) << '\n';
    } else {
      out << verdict_line(v) << "; minimality is undefined\n";
    }
    return kExitFlexible;
  }
  const auto report = decide_minimal_rigidity(g, !cfg.serial);
  if (cfg.format == "json") {
    out << verdict_json(v, &report) << '\n';
    return kExitRigid;
  }
  out << (report.minimally_rigid ? "minimally rigid" : "rigid, not minimally rigid") << '\n';
  for (LineId l = 0; l < g.num_lines(); ++l) {
    out << "  without rod " << l << ": " << to_string(report.after_deletion[l]) << '\n';
  }
  if (!report.removable_rods.empty()) {
    out << "removable rods:";
    for (LineId l : report.removable_rods) out << ' ' << l;
    out << '\n';
  }
  return kExitRigid;
}

int cmd_canon(const Config& cfg, std::ostream& out) {
  const auto g = load_geometry(cfg.input);
  const auto c = canonical_subgraph(g);
  const auto& graph = c.cone_graph;
  const auto& derived = c.derived.geometry;
  const std::size_t target = derived.num_lines() + 2 * derived.num_points() - 3;
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["line_order"] = c.line_order;
    doc["vertices"] = graph.num_vertices();
    doc["edges"] = nlohmann::json::array();
    for (std::size_t e : c.accepted) {
      doc["edges"].push_back({graph.edges()[e].u, graph.edges()[e].v});
    }
    doc["remaining_pebbles"] = c.remaining_pebbles;
    doc["minimally_rigid"] = c.minimally_rigid();
    doc["derived"] = nlohmann::json::parse(to_json(derived));
    doc["derived_parent_lines"] = c.derived.parent_line;
    doc["derived_incidences"] = derived.num_incidences();
    doc["derived_full_count"] = target;
    out << doc.dump() << '\n';
  } else {
    out << "line order:";
    for (LineId l : c.line_order) out << ' ' << l;
    out << "\nsubgraph: " << c.accepted.size() << " of " << graph.edges().size() << " edges on "
        << graph.num_vertices() << " vertices, " << c.remaining_pebbles << " pebbles remain"
        << (c.minimally_rigid() ? " (minimally rigid)" : "") << '\n';
    for (std::size_t e : c.accepted) {
      const auto& edge = graph.edges()[e];
      auto name = [&](VertexId v) {
        return graph.is_cone_vertex(v) ? "c" + std::to_string(graph.line_of_cone_vertex(v))
                                       : g.point_label(v);
      };
      out << "  " << name(edge.u) << " -- " << name(edge.v) << '\n';
    }
    out << "derived geometry: " << derived.num_points() << " points, " << derived.num_lines()
        << " lines, " << derived.num_incidences() << " incidences (count bound " << target
        << ")\n";
    out << to_text(derived);
  }
  return c.minimally_rigid() ? kExitRigid : kExitFlexible;
}

template <class F>
int oracle_report(const Config& cfg, const IncidenceGeometry& g,
                  const std::optional<LinearRealization<Rational>>& given, std::ostream& out,
                  std::ostream& err) {
  SampleOptions sampling{cfg.retry_budget};
  LinearRealization<F> rho;
  if (given) {
    if constexpr (std::is_same_v<F, Rational>) {
      rho = *given;
    } else {
      rho = convert_realization<F>(*given);
    }
  } else {
    auto s = sample_realization<F>(g, cfg.seed, sampling);
    if (!s) {
      err << "no proper realization sampled: " << s.failure << '\n';
      return kExitError;
    }
    rho = *s.realization;
  }
  const auto sc = build_cone_incidence(g);
  auto cone = realize_cone<F>(g, sc, rho, cfg.seed, sampling);
  if (!cone) {
    err << "cannot extend to the cone geometry: " << cone.failure << '\n';
    return kExitError;
  }
  const auto r = string_config_rank(sc.geometry, *cone.realization);
  if (!cfg.matrix_csv.empty()) {
    std::ofstream csv(cfg.matrix_csv);
    if (!csv) throw std::runtime_error("cannot write '" + cfg.matrix_csv + "'");
    write_matrix_csv(csv, sc.geometry, concurrence_matrix(sc.geometry, *cone.realization));
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["field"] = FieldTraits<F>::kName;
    doc["rank"] = r.rank;
    doc["full_rank"] = r.full_rank;
    doc["rigid"] = r.rigid();
    out << doc.dump() << '\n';
  } else {
    out << (r.rigid() ? "rigid" : "flexible") << " (concurrence rank " << r.rank << " of "
        << r.full_rank << " over " << FieldTraits<F>::kName << ")\n";
  }
  return r.rigid() ? kExitRigid : kExitFlexible;
}

int cmd_oracle(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto g = load_geometry(cfg.input);
  std::optional<LinearRealization<Rational>> given;
  if (!cfg.realization.empty()) {
    given = realization_from_json(g, read_file(cfg.realization), cfg.rotate);
  }
  return cfg.field == "rational" ? oracle_report<Rational>(cfg, g, given, out, err)
                                 : oracle_report<Zp>(cfg, g, given, out, err);
}

int cmd_dot(const Config& cfg, std::ostream& out) {
  const auto g = load_geometry(cfg.input);
  if (cfg.highlight == "canonical") {
    const auto c = canonical_subgraph(g);
    out << to_dot(c.cone_graph, c.accepted);
    return kExitRigid;
  }
  const auto graph = ConeGraph::build(g, decide_options(cfg, g).inner_choice);
  if (cfg.highlight == "accepted") {
    const auto v = play(graph.num_vertices(), graph.edges());
    out << to_dot(graph, v.accepted);
  } else {
    out << to_dot(graph);
  }
  return kExitRigid;
}

LinearRealization<Rational> rational_realization(const Config& cfg, const IncidenceGeometry& g) {
  if (!cfg.realization.empty()) {
    return realization_from_json(g, read_file(cfg.realization), cfg.rotate);
  }
  auto s = sample_realization<Rational>(g, cfg.seed, SampleOptions{cfg.retry_budget});
  if (!s) throw RealizationError("no proper realization sampled: " + s.failure);
  return *s.realization;
}

int cmd_svg(const Config& cfg, std::ostream& out) {
  const auto g = load_geometry(cfg.input);
  const auto rho = rational_realization(cfg, g);
  if (!satisfies_incidences(g, rho)) {
    throw RealizationError("realization does not satisfy the incidences of the geometry");
  }
  if (cfg.cone) {
    const auto sc = build_cone_incidence(g);
    auto cone = realize_cone<Rational>(g, sc, rho, cfg.seed, SampleOptions{cfg.retry_budget});
    if (!cone) throw RealizationError(cone.failure);
    out << to_svg(g, rho, &sc, &*cone.realization);
  } else {
    out << to_svg(g, rho);
  }
  return kExitRigid;
}

int cmd_realize(const Config& cfg, std::ostream& out) {
  const auto g = load_geometry(cfg.input);
  out << to_json(rational_realization(cfg, g)) << '\n';
  return kExitRigid;
}

int cmd_fuzz(const Config& cfg, std::ostream& out, std::ostream& err) {
  FuzzOptions opts;
  opts.cases = cfg.cases;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  opts.geometry.max_points = cfg.max_points;
  opts.geometry.max_lines = cfg.max_lines;
  opts.decide.seeds = cfg.seeds;
  opts.decide.field = cfg.field == "rational" ? FieldChoice::kRational : FieldChoice::kZp;
  opts.decide.sampling.retry_budget = cfg.retry_budget;
  const auto report = run_fuzz_campaign(opts);
  out << fuzz_summary(report, cfg.verbose);
  for (const auto& c : report.cases) {
    if (c.verdict.agreement == Agreement::kDisagree) {
      err << "defect in case " << c.index << ": " << c.verdict.reproduction << '\n';
    }
  }
  return report.passed() ? kExitRigid : kExitDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Infinitesimal rigidity of planar rod configurations", "rodcone"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rodcone 0.1.0");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "geometry file (text or JSON)")->required();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--retry-budget", cfg.retry_budget, "sampling attempts per realization")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "arithmetic for the rank oracle")
        ->check(CLI::IsMember({"zp", "rational"}))
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_realization = [&](CLI::App* sub) {
    sub->add_option("--realization", cfg.realization, "realization JSON file");
    sub->add_flag("--rotate", cfg.rotate,
                  "rotate given coordinates by an exact rational angle to avoid vertical rods");
  };

  auto* check = app.add_subcommand("check", "decide rigidity with the pebble game on a cone graph");
  add_input(check);
  add_seed(check);
  add_field(check);
  add_format(check);
  check->add_flag("--cross-validate", cfg.cross_validate,
                  "also compute the concurrence-matrix rank of sampled realizations");
  check->add_option("--seeds", cfg.seeds, "sampled realizations when cross-validating")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  check->add_option("--inner", cfg.inner, "inner vertex per line (names or indices)");

  auto* minimal = app.add_subcommand("minimal", "decide minimal rigidity by deleting each rod");
  add_input(minimal);
  add_format(minimal);
  minimal->add_flag("--serial", cfg.serial, "run the deletion checks sequentially");

  auto* canon = app.add_subcommand("canon", "emit the line-by-line maximal independent subgraph");
  add_input(canon);
  add_format(canon);

  auto* oracle = app.add_subcommand("oracle", "algebraic verdict from the concurrence matrix");
  add_input(oracle);
  add_seed(oracle);
  add_field(oracle);
  add_format(oracle);
  add_realization(oracle);
  oracle->add_option("--matrix-csv", cfg.matrix_csv, "write the concurrence matrix as CSV");

  auto* dot = app.add_subcommand("dot", "render the cone graph in Graphviz DOT");
  add_input(dot);
  dot->add_option("--highlight", cfg.highlight, "edges drawn solid")
      ->check(CLI::IsMember({"none", "accepted", "canonical"}))
      ->capture_default_str();
  dot->add_option("--inner", cfg.inner, "inner vertex per line (names or indices)");

  auto* svg = app.add_subcommand("svg", "render a rod configuration as SVG");
  add_input(svg);
  add_seed(svg);
  add_realization(svg);
  svg->add_flag("--cone", cfg.cone, "also draw cone points and spokes");

  auto* realize = app.add_subcommand("realize", "sample an exact rational realization");
  add_input(realize);
  add_seed(realize);
  add_realization(realize);

  auto* fuzz = app.add_subcommand("fuzz", "cross-validate random geometries");
  add_seed(fuzz);
  add_field(fuzz);
  fuzz->add_option("--cases", cfg.cases, "number of geometries")->capture_default_str();
  fuzz->add_option("--max-points", cfg.max_points, "largest point count")
      ->capture_default_str()
      ->check(CLI::Range(2, 64));
  fuzz->add_option("--max-lines", cfg.max_lines, "largest line count")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  fuzz->add_option("--seeds", cfg.seeds, "sampled realizations per geometry")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  fuzz->add_flag("--verbose", cfg.verbose, "print one line per case");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitRigid;
  } catch (const CLI::CallForVersion&) {
    out << "rodcone 0.1.0\n";
    return kExitRigid;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*check) return cmd_check(cfg, out, err);
    if (*minimal) return cmd_minimal(cfg, out);
    if (*canon) return cmd_canon(cfg, out);
    if (*oracle) return cmd_oracle(cfg, out, err);
    if (*dot) return cmd_dot(cfg, out);
    if (*svg) return cmd_svg(cfg, out);
    if (*realize) return cmd_realize(cfg, out);
    if (*fuzz) return cmd_fuzz(cfg, out, err);
  } catch (const GeometryError& e) {
    err << cfg.input << (e.line() ? ":" : ": ") << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace rodcone
