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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "rodcone/analysis.hpp"
#include "rodcone/cli.hpp"
#include "rodcone/cone.hpp"
#include "rodcone/geometry.hpp"
#include "rodcone/pebble.hpp"

namespace py = pybind11;
using namespace rodcone;

namespace {

py::dict pebble_dict(const PebbleVerdict& v) {
  py::dict d;
  d["classification"] = std::string(to_string(v.classification));
  d["accepted"] = v.accepted;
  d["rejected"] = v.rejected;
  d["remaining_pebbles"] = v.remaining_pebbles;
  d["rigid"] = v.rigid();
  d["independent"] = v.independent();
  return d;
}

std::vector<Edge> to_edges(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return edges;
}

std::vector<std::pair<VertexId, VertexId>> to_pairs(std::span<const Edge> edges) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_rodcone, m) {
  m.doc() = "Rigidity of rod configurations via cone graphs and the (2,3) pebble game";

  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<AnalysisError>(m, "AnalysisError", PyExc_RuntimeError);
  py::register_exception<OracleDisagreement>(m, "OracleDisagreement", PyExc_RuntimeError);

  py::class_<IncidenceGeometry>(m, "Geometry")
      .def(py::init([](std::size_t num_points, std::vector<std::vector<PointId>> lines,
                       std::vector<std::string> names) {
             return IncidenceGeometry::from_lines(num_points, std::move(lines), std::move(names));
           }),
           py::arg("num_points"), py::arg("lines"), py::arg("names") = std::vector<std::string>{})
      .def_static("parse", [](const std::string& text) { return parse_geometry(text); })
      .def_static("parse_json", [](const std::string& text) { return parse_geometry_json(text); })
      .def_static("load", &load_geometry)
      .def_property_readonly("num_points", &IncidenceGeometry::num_points)
      .def_property_readonly("num_lines", &IncidenceGeometry::num_lines)
      .def_property_readonly("num_incidences", &IncidenceGeometry::num_incidences)
      .def_property_readonly("lines", &IncidenceGeometry::lines)
      .def_property_readonly("point_names", &IncidenceGeometry::point_names)
      .def("without_line", &IncidenceGeometry::without_line)
      .def("is_connected", [](const IncidenceGeometry& g) { return is_connected(g); })
      .def("to_text", [](const IncidenceGeometry& g) { return to_text(g); })
      .def("to_json", [](const IncidenceGeometry& g) { return to_json(g); })
      .def("__eq__", [](const IncidenceGeometry& a, const IncidenceGeometry& b) { return a == b; })
      .def("__repr__", [](const IncidenceGeometry& g) {
        std::ostringstream s;
        s << "Geometry(points=" << g.num_points() << ", lines=" << g.num_lines()
          << ", incidences=" << g.num_incidences() << ")";
        return s.str();
      });

  m.def(
      "play",
      [](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        return pebble_dict(play(n, to_edges(edges)));
      },
      py::arg("num_vertices"), py::arg("edges"), "Plays the (2,3) pebble game over edges in order.");

  m.def(
      "cone_graph",
      [](const IncidenceGeometry& g, std::vector<PointId> inner) {
        const auto graph = ConeGraph::build(g, inner);
        py::dict d;
        d["num_vertices"] = graph.num_vertices();
        d["edges"] = to_pairs(graph.edges());
        return d;
      },
      py::arg("geometry"), py::arg("inner") = std::vector<PointId>{});

  m.def(
      "decide",
      [](const IncidenceGeometry& g, bool cross_validate, std::uint64_t seed, int seeds,
         const std::string& field, std::vector<PointId> inner) {
        DecideOptions o;
        o.mode = cross_validate ? VerdictMode::kCrossValidated : VerdictMode::kCombinatorial;
        o.seed = seed;
        o.seeds = seeds;
        if (field == "zp") {
          o.field = FieldChoice::kZp;
        } else if (field == "rational") {
          o.field = FieldChoice::kRational;
        } else {
          throw py::value_error("field must be 'zp' or 'rational'");
        }
        o.inner_choice = std::move(inner);
        const auto v = decide_rod_rigidity(g, o);
        py::dict d = pebble_dict(v.combinatorial);
        d["rigid"] = v.rigid();
        d["connected"] = v.connected;
        d["num_vertices"] = v.num_vertices;
        d["num_edges"] = v.num_edges;
        d["internal_dof"] = v.rigid() ? 0 : v.internal_dof();
        d["agreement"] = std::string(to_string(v.agreement));
        d["skip_reason"] = v.skip_reason;
        if (v.algebraic) {
          d["ranks"] = v.algebraic->ranks;
          d["full_rank"] = v.algebraic->full_rank;
        }
        return d;
      },
      py::arg("geometry"), py::arg("cross_validate") = false, py::arg("seed") = kDefaultSeed,
      py::arg("seeds") = 3, py::arg("field") = "zp", py::arg("inner") = std::vector<PointId>{});

  m.def(
      "canonical_subgraph",
      [](const IncidenceGeometry& g) {
        const auto c = canonical_subgraph(g);
        py::dict d;
        d["line_order"] = c.line_order;
        d["accepted"] = c.accepted;
        d["edges"] = to_pairs(c.cone_graph.edges());
        d["remaining_pebbles"] = c.remaining_pebbles;
        d["minimally_rigid"] = c.minimally_rigid();
        d["derived"] = c.derived.geometry;
        return d;
      },
      py::arg("geometry"));

  m.def(
      "minimal_rigidity",
      [](const IncidenceGeometry& g) {
        const auto r = decide_minimal_rigidity(g);
        py::dict d;
        d["minimally_rigid"] = r.minimally_rigid;
        d["removable_rods"] = r.removable_rods;
        std::vector<std::string> after;
        for (auto c : r.after_deletion) after.emplace_back(to_string(c));
        d["after_deletion"] = after;
        return d;
      },
      py::arg("geometry"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line interface; returns (exit_code, stdout, stderr).");
}
