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

#ifndef RODCONE_CONE_HPP_
#define RODCONE_CONE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rodcone/geometry.hpp"

namespace rodcone {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class ConeEdgeKind { kSpoke, kStar };

struct ConeEdgeInfo {
  LineId line = 0;
  ConeEdgeKind kind = ConeEdgeKind::kSpoke;
};

/// A cone graph of an incidence geometry.
///
/// Vertex numbering: point p is vertex p, the cone vertex of line l is
/// vertex |P| + l. Each line contributes its spokes (c_l, p) in point order
/// followed by its star edges (inner, q) in point order, and lines are
/// emitted in index order. That edge order is what the pebble game sees by
/// default.
class ConeGraph {
 public:
  /// `inner_choice` is empty for the default (lowest-index point of each
  /// line) or holds one point per line. Throws GeometryError
  /// (kNotAnIncidence) when a chosen point is not on its line.
  static ConeGraph build(const IncidenceGeometry& geometry,
                         std::span<const PointId> inner_choice = {});

  /// Same graph with the star of `line` re-rooted at `point`.
  ConeGraph reassign_inner_vertex(LineId line, PointId point) const;

  std::size_t num_vertices() const { return num_points_ + num_lines_; }
  std::size_t num_points() const { return num_points_; }
  std::size_t num_lines() const { return num_lines_; }

  std::span<const Edge> edges() const { return edges_; }
  const ConeEdgeInfo& edge_info(std::size_t edge) const { return info_.at(edge); }
  /// Edge indices of the cone of `line`, spokes first.
  std::span<const std::size_t> cone_edges(LineId line) const { return cones_.at(line); }

  PointId inner_vertex(LineId line) const { return inner_.at(line); }
  std::span<const PointId> inner_vertices() const { return inner_; }

  VertexId cone_vertex(LineId line) const {
    return static_cast<VertexId>(num_points_ + line);
  }
  bool is_cone_vertex(VertexId v) const { return v >= num_points_; }
  LineId line_of_cone_vertex(VertexId v) const {
    return static_cast<LineId>(v - num_points_);
  }

  const IncidenceGeometry& geometry() const { return geometry_; }

 private:
  IncidenceGeometry geometry_;
  std::size_t num_points_ = 0;
  std::size_t num_lines_ = 0;
  std::vector<PointId> inner_;
  std::vector<Edge> edges_;
  std::vector<ConeEdgeInfo> info_;
  std::vector<std::vector<std::size_t>> cones_;
};

enum class ConePointKind { kOriginalPoint, kConePoint };
enum class ConeLineKind { kCollinearClass, kSpoke };

struct ConePointOrigin {
  ConePointKind kind = ConePointKind::kOriginalPoint;
  std::uint32_t id = 0;  // PointId or LineId
};

struct ConeLineOrigin {
  ConeLineKind kind = ConeLineKind::kCollinearClass;
  LineId line = 0;    // original line
  PointId point = 0;  // spoke endpoint, meaningful for kSpoke
};

/// The cone incidence geometry S^C with provenance.
///
/// Points: original points 0..|P|-1, then the cone point of line l at
/// |P| + l (matching ConeGraph vertex ids). Lines: original lines
/// 0..|L|-1, then one spoke line per incidence of S, at |L| + k where k is
/// the incidence's index in S.
struct ConeIncidenceGeometry {
  IncidenceGeometry geometry;
  std::vector<ConePointOrigin> point_origin;
  std::vector<ConeLineOrigin> line_origin;
  std::size_t base_points = 0;
  std::size_t base_lines = 0;

  PointId cone_point(LineId line) const { return static_cast<PointId>(base_points + line); }
  LineId spoke_line(std::size_t incidence_index) const {
    return static_cast<LineId>(base_lines + incidence_index);
  }
};

ConeIncidenceGeometry build_cone_incidence(const IncidenceGeometry& geometry);

/// Subgeometry of S^C carried by an edge subset of a cone graph: every
/// point of S^C; one line per spoke edge present; and for each original
/// line, the points of its star that remain joined to the inner vertex,
/// when there are at least two.
struct DerivedSubgeometry {
  IncidenceGeometry geometry;
  std::vector<LineId> parent_line;  // line of S^C each line lies on
};

DerivedSubgeometry derive_subgeometry(const ConeGraph& graph,
                                      const ConeIncidenceGeometry& cone_geometry,
                                      std::span<const std::size_t> edge_subset);

}  // namespace rodcone

#endif  // RODCONE_CONE_HPP_
