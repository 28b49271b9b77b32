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

#include "rodcone/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace rodcone {
namespace {

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string vertex_name(const ConeGraph& g, VertexId v) {
  return g.is_cone_vertex(v) ? "c" + std::to_string(g.line_of_cone_vertex(v))
                             : "p" + std::to_string(v);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string to_dot(const ConeGraph& graph, std::span<const std::size_t> highlight) {
  std::vector<char> bold(graph.edges().size(), highlight.empty() ? 1 : 0);
  for (std::size_t e : highlight) bold.at(e) = 1;

  const auto& geometry = graph.geometry();
  std::ostringstream out;
  out << "graph cone_graph {\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  for (PointId p = 0; p < graph.num_points(); ++p) {
    out << "  " << vertex_name(graph, p) << " [shape=circle, label="
        << quote(geometry.point_label(p)) << "];\n";
  }
  for (LineId l = 0; l < graph.num_lines(); ++l) {
    const char* colour = kPalette[l % kPalette.size()];
    out << "  " << vertex_name(graph, graph.cone_vertex(l))
        << " [shape=square, style=filled, fillcolor=\"" << colour << "\", label=\"c" << l
        << "\"];\n";
  }
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto& edge = graph.edges()[e];
    const auto& info = graph.edge_info(e);
    out << "  " << vertex_name(graph, edge.u) << " -- " << vertex_name(graph, edge.v)
        << " [color=\"" << kPalette[info.line % kPalette.size()] << "\"";
    if (info.kind == ConeEdgeKind::kStar) out << ", penwidth=2";
    if (!bold[e]) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_svg(const IncidenceGeometry& geometry, const LinearRealization<Rational>& rho,
                   const ConeIncidenceGeometry* cone, const LinearRealization<Rational>* cone_rho) {
  const auto& xs = cone_rho ? cone_rho->x : rho.x;
  const auto& ys = cone_rho ? cone_rho->y : rho.y;
  std::vector<double> fx;
  std::vector<double> fy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fx.push_back(xs[i].convert_to<double>());
    fy.push_back(ys[i].convert_to<double>());
  }
  double minx = fx.empty() ? 0 : *std::min_element(fx.begin(), fx.end());
  double maxx = fx.empty() ? 1 : *std::max_element(fx.begin(), fx.end());
  double miny = fy.empty() ? 0 : *std::min_element(fy.begin(), fy.end());
  double maxy = fy.empty() ? 1 : *std::max_element(fy.begin(), fy.end());
  const double span = std::max({maxx - minx, maxy - miny, 1e-12});
  const double margin = 50.0;
  const double scale = (1000.0 - 2 * margin) / span;
  auto sx = [&](std::size_t i) { return margin + (fx[i] - minx) * scale; };
  // SVG y grows downwards.
  auto sy = [&](std::size_t i) { return 1000.0 - margin - (fy[i] - miny) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  if (cone && cone_rho) {
    for (const auto& inc : geometry.incidences()) {
      const PointId c = cone->cone_point(inc.line);
      out << "<line x1=\"" << fmt(sx(c)) << "\" y1=\"" << fmt(sy(c)) << "\" x2=\""
          << fmt(sx(inc.point)) << "\" y2=\"" << fmt(sy(inc.point)) << "\" stroke=\""
          << kPalette[inc.line % kPalette.size()]
          << "\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
  }
  for (LineId l = 0; l < geometry.num_lines(); ++l) {
    auto pts = geometry.points_on(l);
    // Lines are never vertical, so the extreme abscissae bound the rod.
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [&](PointId a, PointId b) {
      return xs[a] < xs[b];
    });
    out << "<line x1=\"" << fmt(sx(*lo)) << "\" y1=\"" << fmt(sy(*lo)) << "\" x2=\""
        << fmt(sx(*hi)) << "\" y2=\"" << fmt(sy(*hi)) << "\" stroke=\""
        << kPalette[l % kPalette.size()] << "\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n";
  }
  for (PointId p = 0; p < geometry.num_points(); ++p) {
    out << "<circle cx=\"" << fmt(sx(p)) << "\" cy=\"" << fmt(sy(p))
        << "\" r=\"7\" fill=\"black\"><title>" << geometry.point_label(p) << "</title></circle>\n";
  }
  if (cone && cone_rho) {
    for (LineId l = 0; l < geometry.num_lines(); ++l) {
      const PointId c = cone->cone_point(l);
      out << "<circle cx=\"" << fmt(sx(c)) << "\" cy=\"" << fmt(sy(c))
          << "\" r=\"7\" fill=\"none\" stroke=\"" << kPalette[l % kPalette.size()]
          << "\" stroke-width=\"2\"><title>c" << l << "</title></circle>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rodcone
