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

#include "rodcone/cone.hpp"

#include <algorithm>
#include <set>

namespace rodcone {

ConeGraph ConeGraph::build(const IncidenceGeometry& geometry,
                           std::span<const PointId> inner_choice) {
  const std::size_t nl = geometry.num_lines();
  if (!inner_choice.empty() && inner_choice.size() != nl) {
    throw GeometryError(GeometryErrorKind::kNotAnIncidence,
                        "inner vertex choice must name one point per line");
  }

  ConeGraph g;
  g.geometry_ = geometry;
  g.num_points_ = geometry.num_points();
  g.num_lines_ = nl;
  g.inner_.resize(nl);
  g.cones_.resize(nl);
  g.edges_.reserve(2 * geometry.num_incidences());

  for (LineId l = 0; l < nl; ++l) {
    auto pts = geometry.points_on(l);
    PointId inner = inner_choice.empty() ? pts.front() : inner_choice[l];
    if (!geometry.incident(inner, l)) {
      throw GeometryError(GeometryErrorKind::kNotAnIncidence,
                          "inner vertex " + std::to_string(inner) + " is not on line " +
                              std::to_string(l));
    }
    g.inner_[l] = inner;
    const VertexId c = g.cone_vertex(l);
    for (PointId p : pts) {
      g.cones_[l].push_back(g.edges_.size());
      g.edges_.push_back({c, p});
      g.info_.push_back({l, ConeEdgeKind::kSpoke});
    }
    for (PointId q : pts) {
      if (q == inner) continue;
      g.cones_[l].push_back(g.edges_.size());
      g.edges_.push_back({inner, q});
      g.info_.push_back({l, ConeEdgeKind::kStar});
    }
  }
  return g;
}

ConeGraph ConeGraph::reassign_inner_vertex(LineId line, PointId point) const {
  if (line >= num_lines_) {
    throw GeometryError(GeometryErrorKind::kDanglingReference, "no line " + std::to_string(line));
  }
  std::vector<PointId> choice = inner_;
  choice[line] = point;
  return build(geometry_, choice);
}

ConeIncidenceGeometry build_cone_incidence(const IncidenceGeometry& geometry) {
  const std::size_t np = geometry.num_points();
  const std::size_t nl = geometry.num_lines();

  ConeIncidenceGeometry sc;
  sc.base_points = np;
  sc.base_lines = nl;

  std::vector<std::vector<PointId>> lines(geometry.lines().begin(), geometry.lines().end());
  for (PointId p = 0; p < np; ++p) sc.point_origin.push_back({ConePointKind::kOriginalPoint, p});
  for (LineId l = 0; l < nl; ++l) sc.point_origin.push_back({ConePointKind::kConePoint, l});
  for (LineId l = 0; l < nl; ++l) sc.line_origin.push_back({ConeLineKind::kCollinearClass, l, 0});
  for (const auto& inc : geometry.incidences()) {
    lines.push_back({inc.point, static_cast<PointId>(np + inc.line)});
    sc.line_origin.push_back({ConeLineKind::kSpoke, inc.line, inc.point});
  }

  std::vector<std::string> names = geometry.point_names();
  std::set<std::string> taken(names.begin(), names.end());
  for (LineId l = 0; l < nl; ++l) {
    std::string name = "c_" + std::to_string(l);
    names.push_back(taken.count(name) ? std::string{} : name);
  }
  sc.geometry = IncidenceGeometry::from_lines(np + nl, std::move(lines), std::move(names));
  return sc;
}

DerivedSubgeometry derive_subgeometry(const ConeGraph& graph,
                                      const ConeIncidenceGeometry& cone_geometry,
                                      std::span<const std::size_t> edge_subset) {
  const auto& base = graph.geometry();
  std::vector<std::vector<PointId>> star_points(graph.num_lines());
  std::vector<char> spoke_present(base.num_incidences(), 0);

  for (std::size_t e : edge_subset) {
    const auto& edge = graph.edges()[e];
    const auto& info = graph.edge_info(e);
    if (info.kind == ConeEdgeKind::kStar) {
      PointId leaf = edge.u == graph.inner_vertex(info.line) ? edge.v : edge.u;
      star_points[info.line].push_back(leaf);
    } else {
      PointId p = graph.is_cone_vertex(edge.u) ? edge.v : edge.u;
      spoke_present[*base.incidence_index(p, info.line)] = 1;
    }
  }

  DerivedSubgeometry out;
  std::vector<std::vector<PointId>> lines;
  for (LineId l = 0; l < graph.num_lines(); ++l) {
    auto& pts = star_points[l];
    if (pts.empty()) continue;
    pts.push_back(graph.inner_vertex(l));
    lines.push_back(pts);
    out.parent_line.push_back(l);
  }
  for (std::size_t k = 0; k < spoke_present.size(); ++k) {
    if (!spoke_present[k]) continue;
    const auto& inc = base.incidences()[k];
    lines.push_back({inc.point, cone_geometry.cone_point(inc.line)});
    out.parent_line.push_back(cone_geometry.spoke_line(k));
  }
  out.geometry = IncidenceGeometry::from_lines(cone_geometry.geometry.num_points(),
                                               std::move(lines),
                                               cone_geometry.geometry.point_names());
  return out;
}

}  // namespace rodcone
