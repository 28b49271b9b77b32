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

#include "rodcone/analysis.hpp"

#include <algorithm>
#include <future>

#include "json.hpp"

namespace rodcone {

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::kAgree:
      return "agree";
    case Agreement::kDisagree:
      return "disagree";
    case Agreement::kSkipped:
      return "algebraic-skipped";
  }
  return "unknown";
}

OracleDisagreement::OracleDisagreement(std::string bundle)
    : std::runtime_error("combinatorial and algebraic rigidity verdicts disagree"),
      bundle_(std::move(bundle)) {}

void require_agreement(const RigidityVerdict& verdict) {
  if (verdict.agreement == Agreement::kDisagree) throw OracleDisagreement(verdict.reproduction);
}

namespace {

template <class F>
nlohmann::json realization_values(const LinearRealization<F>& rho) {
  auto conv = [](const std::vector<F>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(FieldTraits<F>::to_string(e));
    return out;
  };
  return {{"slope", conv(rho.slope)},
          {"intercept", conv(rho.intercept)},
          {"x", conv(rho.x)},
          {"y", conv(rho.y)}};
}

struct AlgebraicRun {
  std::optional<AlgebraicCheck> check;
  std::string skip_reason;
  nlohmann::json witnesses = nlohmann::json::array();
};

template <class F>
AlgebraicRun run_algebraic(const IncidenceGeometry& g, const DecideOptions& options) {
  AlgebraicRun run;
  const auto sc = build_cone_incidence(g);
  AlgebraicCheck check;
  check.full_rank = max_concurrence_rank(sc.geometry);
  std::vector<bool> verdicts;
  for (int k = 0; k < std::max(1, options.seeds); ++k) {
    const std::uint64_t s = detail::mix_seed(options.seed, static_cast<std::uint64_t>(k));
    auto rho = sample_realization<F>(g, s, options.sampling);
    if (!rho) {
      run.skip_reason = "no proper realization sampled: " + rho.failure;
      return run;
    }
    auto cone_rho = realize_cone<F>(g, sc, *rho.realization, s, options.sampling);
    if (!cone_rho) {
      run.skip_reason = cone_rho.failure;
      return run;
    }
    auto r = string_config_rank(sc.geometry, *cone_rho.realization);
    check.seeds.push_back(s);
    check.ranks.push_back(r.rank);
    verdicts.push_back(r.rigid());
    run.witnesses.push_back({{"seed", s},
                             {"field", FieldTraits<F>::kName},
                             {"rank", r.rank},
                             {"full_rank", r.full_rank},
                             {"cone_realization", realization_values(*cone_rho.realization)}});
  }
  if (std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) !=
      verdicts.end()) {
    run.skip_reason = "sampled realizations disagree (one is not regular)";
    return run;
  }
  check.rigid = verdicts.front();
  run.check = std::move(check);
  return run;
}

}  // namespace

RigidityVerdict decide_rod_rigidity(const IncidenceGeometry& geometry,
                                    const DecideOptions& options) {
  RigidityVerdict verdict;
  const auto graph = ConeGraph::build(geometry, options.inner_choice);
  verdict.num_vertices = graph.num_vertices();
  verdict.num_edges = graph.edges().size();
  if (verdict.num_vertices < 2) throw AnalysisError("geometry has fewer than two elements");
  verdict.combinatorial = play(graph.num_vertices(), graph.edges());
  verdict.connected = is_connected(geometry);

  if (options.mode == VerdictMode::kCombinatorial) {
    verdict.skip_reason = "combinatorial mode";
    return verdict;
  }
  if (!verdict.connected) {
    verdict.skip_reason = "disconnected geometry";
    return verdict;
  }

  AlgebraicRun run = options.field == FieldChoice::kZp ? run_algebraic<Zp>(geometry, options)
                                                       : run_algebraic<Rational>(geometry, options);
  if (!run.check) {
    verdict.skip_reason = run.skip_reason;
    return verdict;
  }
  verdict.algebraic = run.check;
  if (run.check->rigid == verdict.rigid()) {
    verdict.agreement = Agreement::kAgree;
  } else {
    verdict.agreement = Agreement::kDisagree;
    nlohmann::json bundle;
    bundle["geometry"] = nlohmann::json::parse(to_json(geometry));
    bundle["seed"] = options.seed;
    bundle["inner_choice"] = graph.inner_vertices();
    bundle["combinatorial"] = {{"classification", to_string(verdict.combinatorial.classification)},
                               {"remaining_pebbles", verdict.combinatorial.remaining_pebbles}};
    bundle["algebraic"] = run.witnesses;
    verdict.reproduction = bundle.dump();
  }
  return verdict;
}

std::vector<LineId> line_bfs_order(const IncidenceGeometry& geometry) {
  const std::size_t nl = geometry.num_lines();
  std::vector<LineId> order;
  if (nl == 0) return order;
  std::vector<char> queued(nl, 0);
  for (LineId start = 0; start < nl; ++start) {
    if (queued[start]) continue;
    queued[start] = 1;
    std::size_t head = order.size();
    order.push_back(start);
    for (; head < order.size(); ++head) {
      std::vector<LineId> next;
      for (PointId p : geometry.points_on(order[head])) {
        for (LineId m : geometry.lines_through(p)) {
          if (!queued[m]) {
            queued[m] = 1;
            next.push_back(m);
          }
        }
      }
      std::sort(next.begin(), next.end());
      order.insert(order.end(), next.begin(), next.end());
    }
  }
  return order;
}

CanonicalSubgraph canonical_subgraph(const IncidenceGeometry& geometry) {
  if (geometry.num_lines() == 0 || !is_connected(geometry)) {
    throw AnalysisError("canonical subgraph needs a connected geometry with at least one line");
  }
  CanonicalSubgraph out;
  out.line_order = line_bfs_order(geometry);

  // Anchor p of each line: its lowest-index point already seen, or its
  // lowest-index point for the first line.
  std::vector<PointId> anchor(geometry.num_lines());
  std::vector<std::vector<PointId>> seen_on(geometry.num_lines());
  std::vector<std::vector<PointId>> fresh_on(geometry.num_lines());
  {
    std::vector<char> seen(geometry.num_points(), 0);
    bool first = true;
    for (LineId l : out.line_order) {
      for (PointId q : geometry.points_on(l)) (seen[q] ? seen_on[l] : fresh_on[l]).push_back(q);
      if (first) {
        anchor[l] = fresh_on[l].front();
        fresh_on[l].erase(fresh_on[l].begin());
        first = false;
      } else {
        anchor[l] = seen_on[l].front();
        seen_on[l].erase(seen_on[l].begin());
      }
      for (PointId q : geometry.points_on(l)) seen[q] = 1;
    }
  }
  out.cone_graph = ConeGraph::build(geometry, anchor);
  const auto& graph = out.cone_graph;

  auto spoke = [&](LineId l, PointId q) {
    auto pts = geometry.points_on(l);
    return graph.cone_edges(l)[static_cast<std::size_t>(
        std::lower_bound(pts.begin(), pts.end(), q) - pts.begin())];
  };
  auto star = [&](LineId l, PointId q) {
    for (std::size_t e : graph.cone_edges(l)) {
      const auto& info = graph.edge_info(e);
      const auto& edge = graph.edges()[e];
      if (info.kind == ConeEdgeKind::kStar && (edge.u == q || edge.v == q)) return e;
    }
    throw std::logic_error("missing star edge");
  };

  PebbleGame game(graph.num_vertices());
  auto must_accept = [&](std::size_t e) {
    out.probe_order.push_back(e);
    if (!game.try_edge(graph.edges()[e])) {
      throw std::logic_error("construction step rejected an edge that keeps independence");
    }
    out.accepted.push_back(e);
  };
  auto accept_if_independent = [&](std::size_t e) {
    out.probe_order.push_back(e);
    if (!game.independent_after(graph.edges()[e])) return false;
    game.try_edge(graph.edges()[e]);
    out.accepted.push_back(e);
    return true;
  };

  for (LineId l : out.line_order) {
    const PointId p = anchor[l];
    const auto& qs = seen_on[l];
    const auto& fresh = fresh_on[l];
    std::vector<char> spoke_in(qs.size(), 0);

    must_accept(spoke(l, p));
    if (!qs.empty()) {
      must_accept(spoke(l, qs[0]));
      spoke_in[0] = 1;
    }
    for (PointId q : fresh) must_accept(spoke(l, q));
    for (PointId q : fresh) must_accept(star(l, q));
    for (std::size_t i = 1; i < qs.size(); ++i) {
      spoke_in[i] = accept_if_independent(spoke(l, qs[i])) ? 1 : 0;
    }
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (spoke_in[i]) accept_if_independent(star(l, qs[i]));
    }
  }
  out.remaining_pebbles = game.total_pebbles();
  out.cone_geometry = build_cone_incidence(geometry);
  out.derived = derive_subgeometry(graph, out.cone_geometry, out.accepted);
  return out;
}

MinimalityReport decide_minimal_rigidity(const IncidenceGeometry& geometry, bool parallel) {
  if (!decide_rod_rigidity(geometry).rigid()) {
    throw AnalysisError("minimal rigidity is only defined for a rigid geometry");
  }
  const std::size_t nl = geometry.num_lines();
  auto deletion = [&geometry](LineId l) {
    return decide_rod_rigidity(geometry.without_line(l)).combinatorial.classification;
  };

  MinimalityReport report;
  report.after_deletion.resize(nl);
  if (parallel && nl > 1) {
    std::vector<std::future<PebbleClass>> jobs;
    jobs.reserve(nl);
    for (LineId l = 0; l < nl; ++l) jobs.push_back(std::async(std::launch::async, deletion, l));
    for (LineId l = 0; l < nl; ++l) report.after_deletion[l] = jobs[l].get();
  } else {
    for (LineId l = 0; l < nl; ++l) report.after_deletion[l] = deletion(l);
  }
  for (LineId l = 0; l < nl; ++l) {
    auto c = report.after_deletion[l];
    if (c == PebbleClass::kMinimallyRigid || c == PebbleClass::kRigidRedundant) {
      report.removable_rods.push_back(l);
    }
  }
  report.minimally_rigid = report.removable_rods.empty();
  return report;
}

bool check_body_joint_counts(const IncidenceGeometry& geometry, std::size_t line_budget) {
  const std::size_t nl = geometry.num_lines();
  if (nl > line_budget) {
    throw BudgetExceeded("body subset enumeration over " + std::to_string(nl) +
                         " lines exceeds the budget of " + std::to_string(line_budget));
  }
  if (2 * geometry.num_incidences() + 3 > 3 * nl + 2 * geometry.num_points()) return false;

  std::vector<int> touched(geometry.num_points(), 0);
  const std::size_t full = std::size_t{1} << nl;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::size_t lines = 0;
    std::size_t incidences = 0;
    std::size_t points = 0;
    for (LineId l = 0; l < nl; ++l) {
      if (!(mask >> l & 1)) continue;
      ++lines;
      for (PointId p : geometry.points_on(l)) {
        ++incidences;
        if (touched[p]++ == 0) ++points;
      }
    }
    std::fill(touched.begin(), touched.end(), 0);
    if (2 * incidences + 3 > 3 * lines + 2 * points) return false;
  }
  return true;
}

std::string verdict_json(const RigidityVerdict& verdict, const MinimalityReport* minimality) {
  nlohmann::ordered_json doc;
  doc["classification"] = to_string(verdict.combinatorial.classification);
  doc["rigid"] = verdict.rigid();
  doc["connected"] = verdict.connected;
  doc["remaining_pebbles"] = verdict.combinatorial.remaining_pebbles;
  doc["internal_dof"] = verdict.internal_dof();
  doc["vertices"] = verdict.num_vertices;
  doc["total_edges"] = verdict.num_edges;
  doc["accepted_edges"] = verdict.combinatorial.accepted.size();
  doc["agreement"] = to_string(verdict.agreement);
  if (verdict.algebraic) {
    doc["algebraic"] = {{"rigid", verdict.algebraic->rigid},
                        {"ranks", verdict.algebraic->ranks},
                        {"full_rank", verdict.algebraic->full_rank},
                        {"seeds", verdict.algebraic->seeds}};
  } else {
    doc["skip_reason"] = verdict.skip_reason;
  }
  if (minimality) {
    doc["minimally_rigid"] = minimality->minimally_rigid;
    doc["removable_rods"] = minimality->removable_rods;
  }
  if (!verdict.reproduction.empty()) doc["reproduction"] = nlohmann::json::parse(verdict.reproduction);
  return doc.dump();
}

}  // namespace rodcone
