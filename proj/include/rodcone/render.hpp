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

#ifndef RODCONE_RENDER_HPP_
#define RODCONE_RENDER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "rodcone/cone.hpp"
#include "rodcone/oracle.hpp"

namespace rodcone {

/// Graphviz rendering of a cone graph. Cone vertices are squares, point
/// vertices circles, and each cone's edges share its line's colour. Edges
/// listed in `highlight` are drawn bold; the rest dashed, unless
/// `highlight` is empty.
std::string to_dot(const ConeGraph& graph, std::span<const std::size_t> highlight = {});

/// SVG of a rod configuration in a 1000x1000 viewport: one segment per rod
/// spanning its incident points, filled discs for points. With a cone
/// realization, cone points are drawn hollow and spokes thin.
std::string to_svg(const IncidenceGeometry& geometry, const LinearRealization<Rational>& rho,
                   const ConeIncidenceGeometry* cone = nullptr,
                   const LinearRealization<Rational>* cone_rho = nullptr);

}  // namespace rodcone

#endif  // RODCONE_RENDER_HPP_
