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

#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rodcone/cone.hpp"
#include "rodcone/fuzz.hpp"

using namespace rodcone;

TEST_CASE("cone graph counts") {
  const auto g = testing::fig2_geometry();
  const auto c = ConeGraph::build(g);
  CHECK(c.num_vertices() == 11);
  CHECK(c.edges().size() == 20);
  CHECK(c.edges().size() == 2 * g.num_incidences() - g.num_lines());
  for (LineId l = 0; l < g.num_lines(); ++l) {
    const std::size_t k = g.points_on(l).size();
    CHECK(c.cone_edges(l).size() == 2 * k - 1);
    CHECK(c.inner_vertex(l) == g.points_on(l).front());
    CHECK(g.incident(c.inner_vertex(l), l));
    std::size_t spokes = 0;
    for (std::size_t e : c.cone_edges(l)) {
      CHECK(c.edge_info(e).line == l);
      spokes += c.edge_info(e).kind == ConeEdgeKind::kSpoke;
    }
    CHECK(spokes == k);
  }
}

TEST_CASE("single rod cones") {
  for (std::size_t k = 2; k <= 6; ++k) {
    std::vector<PointId> pts(k);
    std::iota(pts.begin(), pts.end(), 0);
    const auto c = ConeGraph::build(IncidenceGeometry::from_lines(k, {pts}));
    CHECK(c.num_vertices() == k + 1);
    CHECK(c.edges().size() == 2 * k - 1);
    CHECK(c.edges().size() + 3 == 2 * c.num_vertices());
  }
  const auto two = ConeGraph::build(IncidenceGeometry::from_lines(2, {{0, 1}}));
  CHECK(testing::edge_set({two.edges().begin(), two.edges().end()}) ==
        testing::edge_set({{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("edge order: spokes then star per line") {
  const auto g = IncidenceGeometry::from_lines(3, {{0, 1}, {1, 2}});
  const auto c = ConeGraph::build(g);
  std::vector<std::pair<VertexId, VertexId>> got;
  for (const auto& e : c.edges()) got.emplace_back(e.u, e.v);
  std::vector<std::pair<VertexId, VertexId>> expected = {
      {3, 0}, {3, 1}, {0, 1}, {4, 1}, {4, 2}, {1, 2}};
  CHECK(got == expected);
  CHECK(c.cone_vertex(1) == 4);
  CHECK(c.is_cone_vertex(4));
  CHECK_FALSE(c.is_cone_vertex(2));
  CHECK(c.line_of_cone_vertex(4) == 1);
}

TEST_CASE("inner vertex choice") {
  const auto g = testing::fig2_geometry();
  const auto c = ConeGraph::build(g);
  const auto moved = c.reassign_inner_vertex(2, 5);
  CHECK(moved.inner_vertex(2) == 5);
  CHECK(moved.edges().size() == 20);
  for (LineId l : {0u, 1u, 3u}) CHECK(moved.inner_vertex(l) == c.inner_vertex(l));
  for (std::size_t e : moved.cone_edges(2)) {
    const auto& edge = moved.edges()[e];
    if (moved.edge_info(e).kind == ConeEdgeKind::kStar) CHECK((edge.u == 5 || edge.v == 5));
  }
  CHECK_THROWS_AS(c.reassign_inner_vertex(2, 0), GeometryError);
  std::vector<PointId> bad = {0, 0, 0, 0};
  CHECK_THROWS_AS(ConeGraph::build(g, bad), GeometryError);
  std::vector<PointId> short_choice = {0};
  CHECK_THROWS(ConeGraph::build(g, short_choice));

  // A two-point rod: swapping the inner vertex yields the same edge set.
  const auto hinge = IncidenceGeometry::from_lines(2, {{0, 1}});
  const auto a = ConeGraph::build(hinge);
  const auto b = a.reassign_inner_vertex(0, 1);
  CHECK(testing::edge_set({a.edges().begin(), a.edges().end()}) ==
        testing::edge_set({b.edges().begin(), b.edges().end()}));
}

TEST_CASE("cone incidence geometry counts") {
  struct Case {
    IncidenceGeometry g;
    std::size_t points, lines, incidences;
  };
  std::vector<Case> cases = {
      {testing::fig2_geometry(), 11, 16, 36},
      {IncidenceGeometry::from_lines(2, {{0, 1}}), 3, 3, 6},
      {IncidenceGeometry::from_lines(3, {{0, 1}, {1, 2}}), 5, 6, 12},
  };
  for (const auto& c : cases) {
    const auto sc = build_cone_incidence(c.g);
    CHECK(sc.geometry.num_points() == c.points);
    CHECK(sc.geometry.num_lines() == c.lines);
    CHECK(sc.geometry.num_incidences() == c.incidences);
    CHECK(sc.geometry.num_incidences() == 3 * c.g.num_incidences());
  }
}

TEST_CASE("cone incidence provenance") {
  const auto g = testing::fig2_geometry();
  const auto sc = build_cone_incidence(g);
  for (PointId p = 0; p < 7; ++p) CHECK(sc.point_origin[p].kind == ConePointKind::kOriginalPoint);
  for (LineId l = 0; l < 4; ++l) {
    CHECK(sc.point_origin[sc.cone_point(l)].kind == ConePointKind::kConePoint);
    CHECK(sc.point_origin[sc.cone_point(l)].id == l);
    CHECK(sc.geometry.point_name(sc.cone_point(l)) == "c_" + std::to_string(l));
    CHECK(sc.line_origin[l].kind == ConeLineKind::kCollinearClass);
  }
  for (std::size_t k = 0; k < g.num_incidences(); ++k) {
    const auto& inc = g.incidences()[k];
    const LineId s = sc.spoke_line(k);
    CHECK(sc.line_origin[s].kind == ConeLineKind::kSpoke);
    CHECK(sc.line_origin[s].line == inc.line);
    CHECK(sc.line_origin[s].point == inc.point);
    CHECK(sc.geometry.incident(inc.point, s));
    CHECK(sc.geometry.incident(sc.cone_point(inc.line), s));
  }
  // Each cone point lies only on its spokes; original lines keep their points.
  for (LineId l = 0; l < 4; ++l) {
    CHECK(sc.geometry.lines_through(sc.cone_point(l)).size() == g.points_on(l).size());
    CHECK(std::vector<PointId>(sc.geometry.points_on(l).begin(), sc.geometry.points_on(l).end()) ==
          std::vector<PointId>(g.points_on(l).begin(), g.points_on(l).end()));
  }
}

TEST_CASE("cone point names avoid user aliases") {
  const auto g = IncidenceGeometry::from_lines(3, {{0, 1}, {1, 2}}, {"c_1", "", ""});
  const auto sc = build_cone_incidence(g);
  CHECK(sc.geometry.point_name(3) == "c_0");
  CHECK(sc.geometry.point_name(4).empty());
  CHECK(sc.geometry.point_label(4) == "4");
}

TEST_CASE("derived subgeometry of the full cone graph is the cone geometry") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_connected_geometry(seed);
    const auto c = ConeGraph::build(g);
    const auto sc = build_cone_incidence(g);
    std::vector<std::size_t> all(c.edges().size());
    std::iota(all.begin(), all.end(), 0);
    const auto d = derive_subgeometry(c, sc, all);
    CHECK(d.geometry.num_points() == sc.geometry.num_points());
    CHECK(d.geometry.num_lines() == sc.geometry.num_lines());
    CHECK(d.geometry.num_incidences() == sc.geometry.num_incidences());
    for (LineId l = 0; l < d.geometry.num_lines(); ++l) {
      const LineId parent = d.parent_line[l];
      for (PointId p : d.geometry.points_on(l)) CHECK(sc.geometry.incident(p, parent));
    }
  }
}

TEST_CASE("derived subgeometry drops lone stars") {
  const auto g = IncidenceGeometry::from_lines(3, {{0, 1, 2}});
  const auto c = ConeGraph::build(g);
  const auto sc = build_cone_incidence(g);
  // Spokes 0 and 1 plus the star edge to point 1.
  std::vector<std::size_t> subset = {0, 1, 3};
  const auto d = derive_subgeometry(c, sc, subset);
  CHECK(d.geometry.num_lines() == 3);
  CHECK(d.parent_line == std::vector<LineId>{0, sc.spoke_line(0), sc.spoke_line(1)});
  CHECK(std::vector<PointId>(d.geometry.points_on(0).begin(), d.geometry.points_on(0).end()) ==
        std::vector<PointId>{0, 1});
  std::vector<std::size_t> spokes_only = {0, 2};
  CHECK(derive_subgeometry(c, sc, spokes_only).geometry.num_lines() == 2);
}
