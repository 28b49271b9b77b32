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

#ifndef RODCONE_GEOMETRY_HPP_
#define RODCONE_GEOMETRY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rodcone {

using PointId = std::uint32_t;
using LineId = std::uint32_t;

struct Incidence {
  PointId point = 0;
  LineId line = 0;

  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

enum class GeometryErrorKind {
  kSyntax,
  kDanglingReference,
  kDuplicateIncidence,
  kShortLine,
  kNotAnIncidence,
};

/// Raised for malformed or invalid geometry input. `line()` and `column()`
/// are 1-based positions in the source text, or 0 when the error did not
/// come from text.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& message,
                std::size_t line = 0, std::size_t column = 0);

  GeometryErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  GeometryErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// A rank-two incidence structure S = (P, L, I) on dense indices.
///
/// Every line carries at least two points, incidences are unique, and the
/// point list of each line is kept sorted. Points on no line are allowed
/// (they are reported by `isolated_points`). Incidences are enumerated in
/// line-major order: all incidences of line 0 by point index, then line 1,
/// and so on; `incidence_index` uses that order.
class IncidenceGeometry {
 public:
  IncidenceGeometry() = default;

  /// Validates and builds a geometry. Each inner vector lists the points of
  /// one line. Throws GeometryError.
  static IncidenceGeometry from_lines(std::size_t num_points,
                                      std::vector<std::vector<PointId>> lines,
                                      std::vector<std::string> point_names = {});

  std::size_t num_points() const { return num_points_; }
  std::size_t num_lines() const { return lines_.size(); }
  std::size_t num_incidences() const { return incidences_.size(); }

  std::span<const PointId> points_on(LineId line) const { return lines_.at(line); }
  std::span<const LineId> lines_through(PointId point) const {
    return point_lines_.at(point);
  }
  std::span<const Incidence> incidences() const { return incidences_; }

  bool incident(PointId point, LineId line) const;
  std::optional<std::size_t> incidence_index(PointId point, LineId line) const;

  /// Alias from the source file, empty when the point was never named.
  const std::string& point_name(PointId point) const { return names_.at(point); }
  /// Alias if present, otherwise the decimal index.
  std::string point_label(PointId point) const;
  const std::vector<std::string>& point_names() const { return names_; }

  std::vector<PointId> isolated_points() const;

  /// S - line: drops the line and its incidences, keeps every point.
  IncidenceGeometry without_line(LineId line) const;

  const std::vector<std::vector<PointId>>& lines() const { return lines_; }

  friend bool operator==(const IncidenceGeometry& a, const IncidenceGeometry& b) {
    return a.num_points_ == b.num_points_ && a.lines_ == b.lines_ && a.names_ == b.names_;
  }

 private:
  std::size_t num_points_ = 0;
  std::vector<std::vector<PointId>> lines_;
  std::vector<std::vector<LineId>> point_lines_;
  std::vector<Incidence> incidences_;
  std::vector<std::size_t> line_offset_;
  std::vector<std::string> names_;
};

struct SubsetSupport {
  std::vector<Incidence> incidences;  // J, sorted
  std::vector<PointId> points;        // Q, sorted
  std::vector<LineId> lines;          // M, sorted
};

/// Support (J, Q, M) of an incidence subset. Throws GeometryError
/// (kNotAnIncidence) when an element of `subset` is not in I.
SubsetSupport support_of(const IncidenceGeometry& geometry,
                         std::span<const Incidence> subset);

/// True iff the bipartite point-line incidence graph is connected.
/// Isolated points count as components of their own.
bool is_connected(const IncidenceGeometry& geometry);

// Text format:
//   points: <n>
//   point <idx> <name>          (optional aliases)
//   line: <p1> <p2> ... <pk>    (indices or aliases)
// '#' starts a comment.
IncidenceGeometry parse_geometry(std::string_view text);
IncidenceGeometry load_geometry(const std::string& path);
std::string to_text(const IncidenceGeometry& geometry);

// JSON: {"points": n, "lines": [[...], ...], "names": [...]?}
IncidenceGeometry parse_geometry_json(std::string_view text);
std::string to_json(const IncidenceGeometry& geometry);

}  // namespace rodcone

#endif  // RODCONE_GEOMETRY_HPP_
