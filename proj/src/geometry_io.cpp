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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "rodcone/geometry.hpp"

namespace rodcone {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void fail(GeometryErrorKind kind, const std::string& msg, std::size_t line,
                       std::size_t column) {
  throw GeometryError(kind, msg, line, column);
}

}  // namespace

IncidenceGeometry parse_geometry(std::string_view text) {
  std::optional<std::size_t> num_points;
  std::vector<std::string> names;
  std::map<std::string, PointId, std::less<>> by_name;
  std::vector<std::vector<PointId>> lines;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    pos = end + 1;
    ++lineno;

    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const auto& head = tokens.front();

    if (head.text == "points:") {
      if (num_points) fail(GeometryErrorKind::kSyntax, "duplicate 'points:' header", lineno, head.column);
      if (tokens.size() != 2) {
        fail(GeometryErrorKind::kSyntax, "expected 'points: <n>'", lineno, head.column);
      }
      auto n = parse_index(tokens[1].text);
      if (!n || *n == 0) {
        fail(GeometryErrorKind::kSyntax, "point count must be a positive integer", lineno,
             tokens[1].column);
      }
      num_points = *n;
      names.assign(*n, std::string{});
      continue;
    }

    if (!num_points) {
      fail(GeometryErrorKind::kSyntax, "expected 'points: <n>' header first", lineno, head.column);
    }

    if (head.text == "point") {
      if (tokens.size() != 3) {
        fail(GeometryErrorKind::kSyntax, "expected 'point <idx> <name>'", lineno, head.column);
      }
      auto idx = parse_index(tokens[1].text);
      if (!idx) fail(GeometryErrorKind::kSyntax, "bad point index", lineno, tokens[1].column);
      if (*idx >= *num_points) {
        fail(GeometryErrorKind::kDanglingReference,
             "point index " + std::to_string(*idx) + " out of range (" +
                 std::to_string(*num_points) + " points)",
             lineno, tokens[1].column);
      }
      std::string name(tokens[2].text);
      if (parse_index(name)) {
        fail(GeometryErrorKind::kSyntax, "point name must not be a number", lineno,
             tokens[2].column);
      }
      if (!names[*idx].empty()) {
        fail(GeometryErrorKind::kSyntax, "point " + std::to_string(*idx) + " already named",
             lineno, tokens[1].column);
      }
      if (!by_name.emplace(name, static_cast<PointId>(*idx)).second) {
        fail(GeometryErrorKind::kSyntax, "duplicate point name '" + name + "'", lineno,
             tokens[2].column);
      }
      names[*idx] = std::move(name);
      continue;
    }

    if (head.text == "line:") {
      std::vector<PointId> pts;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const auto& tok = tokens[t];
        PointId p = 0;
        if (auto idx = parse_index(tok.text)) {
          if (*idx >= *num_points) {
            fail(GeometryErrorKind::kDanglingReference,
                 "point index " + std::to_string(*idx) + " out of range (" +
                     std::to_string(*num_points) + " points)",
                 lineno, tok.column);
          }
          p = static_cast<PointId>(*idx);
        } else if (auto it = by_name.find(tok.text); it != by_name.end()) {
          p = it->second;
        } else {
          fail(GeometryErrorKind::kDanglingReference,
               "unknown point '" + std::string(tok.text) + "'", lineno, tok.column);
        }
        if (std::find(pts.begin(), pts.end(), p) != pts.end()) {
          fail(GeometryErrorKind::kDuplicateIncidence,
               "point " + std::to_string(p) + " listed twice on this line", lineno, tok.column);
        }
        pts.push_back(p);
      }
      if (pts.size() < 2) {
        fail(GeometryErrorKind::kShortLine, "a line needs at least 2 points", lineno,
             head.column);
      }
      lines.push_back(std::move(pts));
      continue;
    }

    fail(GeometryErrorKind::kSyntax, "unexpected '" + std::string(head.text) + "'", lineno,
         head.column);
  }

  if (!num_points) fail(GeometryErrorKind::kSyntax, "missing 'points: <n>' header", lineno, 1);
  return IncidenceGeometry::from_lines(*num_points, std::move(lines), std::move(names));
}

IncidenceGeometry load_geometry(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_geometry_json(text);
  return parse_geometry(text);
}

std::string to_text(const IncidenceGeometry& geometry) {
  std::ostringstream out;
  out << "points: " << geometry.num_points() << '\n';
  for (PointId p = 0; p < geometry.num_points(); ++p) {
    if (!geometry.point_name(p).empty()) {
      out << "point " << p << ' ' << geometry.point_name(p) << '\n';
    }
  }
  for (const auto& line : geometry.lines()) {
    out << "line:";
    for (PointId p : line) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

IncidenceGeometry parse_geometry_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GeometryError(GeometryErrorKind::kSyntax, std::string("invalid JSON: ") + e.what(),
                        1, e.byte);
  }
  try {
    auto n = doc.at("points").get<std::size_t>();
    auto lines = doc.at("lines").get<std::vector<std::vector<PointId>>>();
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    return IncidenceGeometry::from_lines(n, std::move(lines), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(GeometryErrorKind::kSyntax, std::string("bad geometry JSON: ") + e.what());
  }
}

std::string to_json(const IncidenceGeometry& geometry) {
  nlohmann::json doc;
  doc["points"] = geometry.num_points();
  doc["lines"] = geometry.lines();
  const auto& names = geometry.point_names();
  if (std::any_of(names.begin(), names.end(), [](const auto& s) { return !s.empty(); })) {
    doc["names"] = names;
  }
  return doc.dump();
}

}  // namespace rodcone
