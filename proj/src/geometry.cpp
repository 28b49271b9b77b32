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

#include "rodcone/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace rodcone {

GeometryError::GeometryError(GeometryErrorKind kind, const std::string& message,
                             std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : std::to_string(line) + ":" + std::to_string(column) +
                                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

IncidenceGeometry IncidenceGeometry::from_lines(std::size_t num_points,
                                                std::vector<std::vector<PointId>> lines,
                                                std::vector<std::string> point_names) {
  IncidenceGeometry g;
  g.num_points_ = num_points;
  if (point_names.empty()) point_names.resize(num_points);
  if (point_names.size() != num_points) {
    throw GeometryError(GeometryErrorKind::kSyntax,
                        "expected " + std::to_string(num_points) + " point names, got " +
                            std::to_string(point_names.size()));
  }
  g.names_ = std::move(point_names);

  for (std::size_t l = 0; l < lines.size(); ++l) {
    auto& pts = lines[l];
    for (PointId p : pts) {
      if (p >= num_points) {
        throw GeometryError(GeometryErrorKind::kDanglingReference,
                            "line " + std::to_string(l) + " references point " +
                                std::to_string(p) + " but only " +
                                std::to_string(num_points) + " points exist");
      }
    }
    std::sort(pts.begin(), pts.end());
    auto dup = std::adjacent_find(pts.begin(), pts.end());
    if (dup != pts.end()) {
      throw GeometryError(GeometryErrorKind::kDuplicateIncidence,
                          "line " + std::to_string(l) + " lists point " +
                              std::to_string(*dup) + " twice");
    }
    if (pts.size() < 2) {
      throw GeometryError(GeometryErrorKind::kShortLine,
                          "line " + std::to_string(l) + " has " + std::to_string(pts.size()) +
                              " point(s); a rod needs at least 2");
    }
  }
  g.lines_ = std::move(lines);

  g.point_lines_.assign(num_points, {});
  g.line_offset_.reserve(g.lines_.size() + 1);
  for (LineId l = 0; l < g.lines_.size(); ++l) {
    g.line_offset_.push_back(g.incidences_.size());
    for (PointId p : g.lines_[l]) {
      g.incidences_.push_back({p, l});
      g.point_lines_[p].push_back(l);
    }
  }
  g.line_offset_.push_back(g.incidences_.size());
  return g;
}

bool IncidenceGeometry::incident(PointId point, LineId line) const {
  return incidence_index(point, line).has_value();
}

std::optional<std::size_t> IncidenceGeometry::incidence_index(PointId point,
                                                              LineId line) const {
  if (line >= lines_.size()) return std::nullopt;
  const auto& pts = lines_[line];
  auto it = std::lower_bound(pts.begin(), pts.end(), point);
  if (it == pts.end() || *it != point) return std::nullopt;
  return line_offset_[line] + static_cast<std::size_t>(it - pts.begin());
}

std::string IncidenceGeometry::point_label(PointId point) const {
  const auto& name = names_.at(point);
  return name.empty() ? std::to_string(point) : name;
}

std::vector<PointId> IncidenceGeometry::isolated_points() const {
  std::vector<PointId> out;
  for (PointId p = 0; p < num_points_; ++p) {
    if (point_lines_[p].empty()) out.push_back(p);
  }
  return out;
}

IncidenceGeometry IncidenceGeometry::without_line(LineId line) const {
  if (line >= lines_.size()) {
    throw GeometryError(GeometryErrorKind::kDanglingReference,
                        "no line " + std::to_string(line));
  }
  auto rest = lines_;
  rest.erase(rest.begin() + line);
  return from_lines(num_points_, std::move(rest), names_);
}

SubsetSupport support_of(const IncidenceGeometry& geometry,
                         std::span<const Incidence> subset) {
  SubsetSupport s;
  s.incidences.assign(subset.begin(), subset.end());
  std::sort(s.incidences.begin(), s.incidences.end());
  s.incidences.erase(std::unique(s.incidences.begin(), s.incidences.end()),
                     s.incidences.end());
  for (const auto& inc : s.incidences) {
    if (!geometry.incident(inc.point, inc.line)) {
      throw GeometryError(GeometryErrorKind::kNotAnIncidence,
                          "(" + std::to_string(inc.point) + ", " + std::to_string(inc.line) +
                              ") is not an incidence of the geometry");
    }
    s.points.push_back(inc.point);
    s.lines.push_back(inc.line);
  }
  for (auto* v : {&s.points, &s.lines}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return s;
}

bool is_connected(const IncidenceGeometry& geometry) {
  const std::size_t np = geometry.num_points();
  const std::size_t nl = geometry.num_lines();
  if (np + nl == 0) return true;

  // Nodes 0..np-1 are points, np..np+nl-1 are lines.
  std::vector<std::size_t> parent(np + nl);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = np + nl;
  for (const auto& inc : geometry.incidences()) {
    auto a = find(inc.point);
    auto b = find(np + inc.line);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace rodcone
