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

// Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rodcone/analysis.hpp"
#include "rodcone/fuzz.hpp"

using namespace rodcone;
using testing::EdgeList;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      first_failure_ = what;
    }
  }
  Outcome done(std::string detail) const {
    if (!pass_) return {false, "failed: " + first_failure_ + "; " + detail};
    return {true, std::move(detail)};
  }

 private:
  bool pass_ = true;
  std::string first_failure_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string data(const std::string& name) { return std::string(RODCONE_TEST_DATA) + "/" + name; }

// ---------------------------------------------------------------------------

Outcome k4_circuit() {
  Expect expect;
  const auto edges = testing::k4_edges();
  const auto v = play(4, edges);
  expect(v.accepted.size() == 5, "5 accepted");
  expect(v.rejected.size() == 1, "1 rejected");
  expect(v.remaining_pebbles == 3, "3 pebbles remain");
  expect(v.classification == PebbleClass::kRigidRedundant, "rigid-redundant");
  expect(edges.size() + 2 == 2 * 4, "|E| = 2|V| - 2");
  // Circuit: every single deletion is independent.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto minus = edges;
    minus.erase(minus.begin() + static_cast<std::ptrdiff_t>(i));
    expect(testing::laman_independent_bruteforce(4, minus), "K4 minus an edge is independent");
  }
  std::vector<double> times;
  for (int rep = 0; rep < 101; ++rep) {
    const auto t0 = Clock::now();
    const auto again = play(4, edges);
    times.push_back(seconds_since(t0));
    expect(again.rejected.size() == 1, "repeatable");
  }
  std::nth_element(times.begin(), times.begin() + 50, times.end());
  const double ms = times[50] * 1e3;
  expect(ms < 1.0, "under 1 ms");
  return expect.done("5 accepted, 1 rejected, 3 pebbles, rigid-redundant, median " +
                     fmt("%.4f ms", ms));
}

Outcome fig1_not_circuit() {
  Expect expect;
  const auto t0 = Clock::now();
  const auto edges = testing::fig1_edges();
  std::mt19937_64 rng(2026);
  std::set<std::vector<std::size_t>> orders;
  std::vector<std::size_t> perm(edges.size());
  std::iota(perm.begin(), perm.end(), 0);
  int runs = 0;
  while (orders.size() < 200) {
    std::shuffle(perm.begin(), perm.end(), rng);
    if (!orders.insert(perm).second) continue;
    EdgeList ordered;
    for (std::size_t i : perm) {
      Edge e = edges[i];
      if (rng() & 1) std::swap(e.u, e.v);
      ordered.push_back(e);
    }
    const auto v = play(5, ordered);
    expect(v.rejected.size() == 1, "exactly one rejected edge in every ordering");
    expect(v.remaining_pebbles == 3, "rigid in every ordering");
    ++runs;
  }
  expect(edges.size() + 2 == 2 * 5, "|E| = 2|V| - 2");
  std::size_t dependent_after_removal = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto minus = edges;
    minus.erase(minus.begin() + static_cast<std::ptrdiff_t>(i));
    if (!testing::laman_independent_bruteforce(5, minus)) ++dependent_after_removal;
  }
  expect(dependent_after_removal >= 1, "some single removal stays dependent");
  expect(!testing::laman_independent_bruteforce(5, edges), "whole set dependent");
  const double s = seconds_since(t0);
  expect(s < 1.0, "under 1 s");
  return expect.done(std::to_string(runs) + " distinct orderings each reject 1 edge; " +
                     std::to_string(dependent_after_removal) +
                     " of 8 single removals stay dependent (not a circuit); " + fmt("%.3f s", s));
}

Outcome fig2_pipeline() {
  Expect expect;
  const auto t0 = Clock::now();
  const auto g = load_geometry(data("fig2.geo"));
  expect(g.num_points() == 7 && g.num_lines() == 4, "7 points, 4 lines");
  const auto graph = ConeGraph::build(g);
  expect(graph.num_vertices() == 11, "11 vertices");
  expect(graph.edges().size() == 20, "20 edges");
  const auto v = decide_rod_rigidity(g);
  expect(v.combinatorial.accepted.size() == 19, "19 accepted");
  expect(v.rigid(), "rigid");
  const auto c = canonical_subgraph(g);
  expect(c.accepted.size() == 19, "|E'| = 19");
  const auto& d = c.derived.geometry;
  const std::size_t bound = d.num_lines() + 2 * d.num_points() - 3;
  expect(d.num_incidences() == bound, "|I'| = |L'| + 2|P'| - 3");
  std::vector<Incidence> all(d.incidences().begin(), d.incidences().end());
  expect(is_sharply_independent_by_supports(d, all), "S' sharply independent");
  const double s = seconds_since(t0);
  expect(s < 5.0, "under 5 s");
  return expect.done("11 vertices, 20 edges, 19 accepted, rigid; S' has |L'|=" +
                     std::to_string(d.num_lines()) + " |P'|=" + std::to_string(d.num_points()) +
                     " |I'|=" + std::to_string(d.num_incidences()) +
                     ", sharply independent over all " +
                     std::to_string((1u << d.num_points()) - d.num_points() - 1) +
                     " point supports; " + fmt("%.3f s", s));
}

Outcome agreement_campaign() {
  Expect expect;
  const auto t0 = Clock::now();
  FuzzOptions o;
  o.cases = 320;
  o.seed = kDefaultSeed;
  o.decide.seeds = 3;
  o.decide.field = FieldChoice::kZp;
  const auto report = run_fuzz_campaign(o);
  std::size_t sampled = 0;
  std::size_t rigid_compared = 0;
  for (const auto& c : report.cases) {
    const bool infeasible = !c.verdict.algebraic &&
                            c.verdict.skip_reason.rfind("no proper realization", 0) == 0;
    if (!infeasible) ++sampled;
    if (c.verdict.algebraic && c.verdict.rigid()) ++rigid_compared;
    if (c.verdict.agreement == Agreement::kDisagree) {
      std::cout << "  reproduction bundle (case " << c.index << "): " << c.verdict.reproduction
                << "\n";
    }
  }
  expect(sampled >= 200, "at least 200 geometries with sampled realizations");
  expect(report.disagreed == 0, "no disagreement");
  const double s = seconds_since(t0);
  expect(s < 60.0, "under 60 s");
  return expect.done(std::to_string(sampled) + " geometries realized, " +
                     std::to_string(report.agreed) + " agree (" + std::to_string(rigid_compared) +
                     " rigid), " + std::to_string(report.disagreed) + " disagree, " +
                     std::to_string(report.skipped) + " skipped; " + fmt("%.2f s", s));
}

Outcome inner_vertex_invariance() {
  Expect expect;
  const auto t0 = Clock::now();
  std::vector<IncidenceGeometry> corpus = {
      testing::fig2_geometry(), IncidenceGeometry::from_lines(3, {{0, 1}, {1, 2}}),
      IncidenceGeometry::from_lines(3, {{0, 1}, {1, 2}, {0, 2}})};
  for (std::uint64_t seed = 0; corpus.size() < 40; ++seed) {
    auto g = random_connected_geometry(
        seed, {.max_points = 9, .min_lines = 2, .max_lines = 4, .incidence_probability = 0.45});
    bool small = true;
    for (LineId l = 0; l < g.num_lines(); ++l) small = small && g.points_on(l).size() <= 4;
    if (small) corpus.push_back(std::move(g));
  }
  std::size_t vectors = 0;
  std::size_t rigid = 0;
  for (const auto& g : corpus) {
    const auto base = decide_rod_rigidity(g);
    rigid += base.rigid();
    std::vector<PointId> choice(g.num_lines());
    std::function<void(LineId)> rec = [&](LineId l) {
      if (l == g.num_lines()) {
        DecideOptions o;
        o.inner_choice = choice;
        const auto v = decide_rod_rigidity(g, o);
        ++vectors;
        expect(v.combinatorial.classification == base.combinatorial.classification,
               "classification invariant");
        expect(v.combinatorial.remaining_pebbles == base.combinatorial.remaining_pebbles,
               "pebble count invariant");
        return;
      }
      for (PointId p : g.points_on(l)) {
        choice[l] = p;
        rec(l + 1);
      }
    };
    rec(0);
  }
  const double s = seconds_since(t0);
  expect(s < 30.0, "under 30 s");
  return expect.done(std::to_string(corpus.size()) + " geometries (" + std::to_string(rigid) +
                     " rigid), " + std::to_string(vectors) +
                     " inner-vertex vectors, all classifications identical; " + fmt("%.3f s", s));
}

Outcome gluing_lemmas() {
  Expect expect;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(4242);

  // One shared vertex.
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n1 = 2 + rng() % 6;
    const std::size_t n2 = 2 + rng() % 6;
    const auto g1 = testing::henneberg_graph(n1, rng);
    const auto g2 = testing::henneberg_graph(n2, rng);
    const VertexId shared = static_cast<VertexId>(rng() % n1);
    std::vector<VertexId> map(n2);
    map[0] = shared;
    for (VertexId v = 1; v < n2; ++v) map[v] = static_cast<VertexId>(n1 + v - 1);
    EdgeList e3 = g1;
    for (const auto& e : testing::relabel(g2, map)) e3.push_back(e);
    const std::size_t n = n1 + n2 - 1;
    const auto v3 = play(n, e3);
    expect(e3.size() + 4 == 2 * n, "union has 2|V| - 4 edges");
    expect(!v3.rigid() && v3.independent(), "union flexible and independent");
    expect(testing::laman_independent_bruteforce(n, e3), "union independent by counts");

    VertexId a = static_cast<VertexId>(rng() % n1);
    if (a == shared) a = static_cast<VertexId>((a + 1) % n1);
    const VertexId b = map[1 + rng() % (n2 - 1)];
    EdgeList e4 = e3;
    e4.push_back({a, b});
    expect(play(n, e4).classification == PebbleClass::kMinimallyRigid,
           "union plus cross edge minimally rigid");
    expect(testing::laman_minimally_rigid_bruteforce(n, e4), "cross edge by counts");
  }

  // Two or more shared vertices inside an independent host.
  int constructions = 0;
  int nested = 0;
  while (constructions < 100) {
    const std::size_t n = 6 + rng() % 5;
    auto host = testing::henneberg_graph(n, rng);
    const std::size_t drop = rng() % 3;
    for (std::size_t k = 0; k < drop; ++k) host.erase(host.begin() + static_cast<std::ptrdiff_t>(rng() % host.size()));
    if (!play(n, host).independent()) continue;

    std::vector<std::uint32_t> rigid_sets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const int k = std::popcount(mask);
      if (k < 2) continue;
      std::size_t count = 0;
      for (const auto& e : host) count += (mask >> e.u & 1) && (mask >> e.v & 1);
      if (count + 3 == 2 * static_cast<std::size_t>(k)) rigid_sets.push_back(mask);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> nested_pairs;
    for (std::size_t i = 0; i < rigid_sets.size(); ++i) {
      for (std::size_t j = i + 1; j < rigid_sets.size(); ++j) {
        const auto a = rigid_sets[i];
        const auto b = rigid_sets[j];
        if (std::popcount(a & b) < 2) continue;
        ((a & b) == a || (a & b) == b ? nested_pairs : pairs).emplace_back(a, b);
      }
    }
    if (pairs.empty() && nested_pairs.empty()) continue;
    const bool use_nested = pairs.empty();
    nested += use_nested;
    const auto& pool = use_nested ? nested_pairs : pairs;
    const auto [m1, m2] = pool[rng() % pool.size()];

    auto induced = [&](std::uint32_t mask) {
      EdgeList out;
      for (const auto& e : host) {
        if ((mask >> e.u & 1) && (mask >> e.v & 1)) out.push_back(e);
      }
      return out;
    };
    const auto e1 = induced(m1);
    const auto e2 = induced(m2);
    auto c1 = e1;
    auto c2 = e2;
    const std::size_t k1 = testing::compact(c1);
    expect(play(k1, c1).classification == PebbleClass::kMinimallyRigid,
           "G1 minimally rigid");
    const std::size_t k2 = testing::compact(c2);
    expect(play(k2, c2).classification == PebbleClass::kMinimallyRigid,
           "G2 minimally rigid");
    const auto s1 = testing::edge_set(e1);
    const auto s2 = testing::edge_set(e2);
    std::size_t common = 0;
    for (const auto& e : s1) common += s2.count(e);
    expect(common >= 1, "edge sets intersect");
    EdgeList e3 = e1;
    for (const auto& e : e2) {
      if (!s1.count(std::minmax(e.u, e.v))) e3.push_back(e);
    }
    const std::size_t k = testing::compact(e3);
    expect(play(k, e3).classification == PebbleClass::kMinimallyRigid, "union minimally rigid");
    expect(testing::laman_minimally_rigid_bruteforce(k, e3), "union by counts");
    ++constructions;
  }
  const double s = seconds_since(t0);
  expect(s < 30.0, "under 30 s");
  return expect.done("100 one-vertex gluings flexible with 2|V|-4 edges and rigid after a cross "
                     "edge; 100 multi-vertex gluings (" + std::to_string(100 - nested) +
                     " non-nested) share an edge and are minimally rigid; " + fmt("%.3f s", s));
}

Outcome collinear_counterexample() {
  Expect expect;
  const auto t0 = Clock::now();
  const auto g = testing::fig2_geometry();
  const auto sc = build_cone_incidence(g);
  const auto graph = ConeGraph::build(g, testing::fig2_midpoint_inners());
  const auto alt = testing::fig5_subgraph(graph);
  EdgeList sub;
  for (std::size_t e : alt) sub.push_back(graph.edges()[e]);
  expect(play(graph.num_vertices(), sub).classification == PebbleClass::kMinimallyRigid,
         "alternative subgraph generically minimally rigid");
  expect(testing::laman_minimally_rigid_bruteforce(graph.num_vertices(), sub),
         "alternative subgraph by counts");
  const auto alt_geometry = derive_subgeometry(graph, sc, alt);
  const auto& ad = alt_geometry.geometry;
  const std::size_t alt_bound = ad.num_lines() + 2 * ad.num_points() - 3;
  const auto canon = canonical_subgraph(g);

  std::vector<LinearRealization<Rational>> realizations;
  {
    // The drawn coordinates, turned by an exact rational angle so that no
    // spoke is vertical.
    auto [xs, ys] = testing::fig2_coordinates();
    auto [cx, cy] = testing::fig2_cone_coordinates();
    xs.insert(xs.end(), cx.begin(), cx.end());
    ys.insert(ys.end(), cy.begin(), cy.end());
    realizations.push_back(realization_from_coordinates(sc.geometry, xs, ys, true));
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto rho = sample_realization<Rational>(g, seed);
    if (!rho) continue;
    auto cone = realize_cone<Rational>(g, sc, *rho.realization, seed);
    if (cone) realizations.push_back(*cone.realization);
  }
  expect(realizations.size() == 5, "realizations available");
  std::string ranks;
  for (const auto& rho : realizations) {
    expect(satisfies_incidences(sc.geometry, rho) && is_proper(rho), "proper collinear realization");
    const auto alt_rank = string_config_rank(ad, restrict_realization(alt_geometry, rho));
    const auto canon_rank =
        string_config_rank(canon.derived.geometry, restrict_realization(canon.derived, rho));
    expect(alt_rank.rank < alt_bound, "alternative subgraph loses rank");
    expect(canon_rank.rigid(), "canonical subgraph keeps full rank");
    ranks += " " + std::to_string(alt_rank.rank) + "/" + std::to_string(canon_rank.rank);
  }
  const double s = seconds_since(t0);
  expect(s < 5.0, "under 5 s");
  return expect.done("alternative S' (|I'|=" + std::to_string(ad.num_incidences()) + "=" +
                     std::to_string(alt_bound) + ") vs canonical S' (full " +
                     std::to_string(canon.derived.geometry.num_lines() +
                                    2 * canon.derived.geometry.num_points() - 3) +
                     ") ranks [drawn, 4 sampled]:" + ranks + "; " + fmt("%.3f s", s));
}

IncidenceGeometry chain(std::size_t lines) {
  std::vector<std::vector<PointId>> ls;
  for (std::size_t i = 0; i < lines; ++i) {
    const auto base = static_cast<PointId>(2 * i);
    ls.push_back({base, base + 1, base + 2});
  }
  return IncidenceGeometry::from_lines(2 * lines + 1, ls);
}

Outcome complexity_sanity() {
  Expect expect;
  const auto t0 = Clock::now();
  auto median_time = [&](std::size_t lines) {
    const auto graph = ConeGraph::build(chain(lines));
    std::vector<double> ts;
    for (int rep = 0; rep < 9; ++rep) {
      const auto s0 = Clock::now();
      const auto v = play(graph.num_vertices(), graph.edges());
      ts.push_back(seconds_since(s0));
      expect(!v.rigid(), "chains are flexible");
    }
    std::nth_element(ts.begin(), ts.begin() + 4, ts.end());
    return ts[4];
  };
  median_time(50);  // warm-up
  const double small = median_time(200);
  const double large = median_time(400);
  const double ratio = large / small;
  expect(ratio <= 4.5, "doubling costs at most 4.5x");
  const double s = seconds_since(t0);
  expect(s < 60.0, "under 60 s");
  return expect.done(fmt("|L|=200: %.3f ms, ", small * 1e3) + fmt("|L|=400: %.3f ms, ", large * 1e3) +
                     fmt("ratio %.2f; ", ratio) + fmt("%.2f s", s));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"K4 rigidity circuit", k4_circuit},
      {"five-vertex graph is not a circuit", fig1_not_circuit},
      {"running example pipeline", fig2_pipeline},
      {"combinatorial and algebraic agreement campaign", agreement_campaign},
      {"inner vertex invariance", inner_vertex_invariance},
      {"gluing properties", gluing_lemmas},
      {"collinear counterexample subgraph", collinear_counterexample},
      {"pebble game scaling", complexity_sanity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/"
            << criteria.size() << std::endl;
  return failures ? 1 : 0;
}
