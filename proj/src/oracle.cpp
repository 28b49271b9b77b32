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

#include "rodcone/oracle.hpp"

#include <bit>
#include <numeric>

#include "json.hpp"

namespace rodcone {

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

std::size_t bareiss_rank(Matrix<BigInt> m) {
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const BigInt& p = m.at(rank, c);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        BigInt v = p * m.at(i, j) - m.at(i, c) * m.at(rank, j);
        BigInt q, r;
        boost::multiprecision::divide_qr(v, prev, q, r);
        if (r != 0) throw std::logic_error("Bareiss step left a remainder");
        m.at(i, j) = std::move(q);
      }
      m.at(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_of(const Matrix<Rational>& m) {
  Matrix<BigInt> ints(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m.at(r, c)));
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m.at(r, c);
      ints.at(r, c) = boost::multiprecision::numerator(q) *
                      (scale / boost::multiprecision::denominator(q));
    }
  }
  return bareiss_rank(std::move(ints));
}

namespace detail {

std::vector<char> sharply_independent_masks(const IncidenceGeometry& g,
                                            std::span<const Incidence> subset,
                                            std::size_t budget) {
  const std::size_t n = subset.size();
  if (n > budget) {
    throw BudgetExceeded("sharp independence check over " + std::to_string(n) +
                         " incidences exceeds the exhaustive budget of " +
                         std::to_string(budget));
  }
  for (const auto& inc : subset) {
    if (!g.incident(inc.point, inc.line)) {
      throw GeometryError(GeometryErrorKind::kNotAnIncidence,
                          "(" + std::to_string(inc.point) + ", " + std::to_string(inc.line) +
                              ") is not an incidence of the geometry");
    }
  }
  const std::size_t full = std::size_t{1} << n;
  std::vector<char> ok(full, 1);
  std::vector<int> point_count(g.num_points(), 0);
  std::vector<int> line_count(g.num_lines(), 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::size_t q = 0;
    std::size_t m = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (!(mask >> b & 1)) continue;
      if (point_count[subset[b].point]++ == 0) ++q;
      if (line_count[subset[b].line]++ == 0) ++m;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (!(mask >> b & 1)) continue;
      point_count[subset[b].point] = 0;
      line_count[subset[b].line] = 0;
    }
    const std::size_t j = static_cast<std::size_t>(std::popcount(mask));
    // A support on a single point imposes no count: its rows have
    // distinct intercept columns.
    if (q >= 2 && j + 3 > m + 2 * q) ok[mask] = 0;
  }
  std::vector<char> sharp(full, 0);
  sharp[0] = 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (!ok[mask]) continue;
    bool all = true;
    for (std::size_t b = 0; b < n && all; ++b) {
      if (mask >> b & 1) all = sharp[mask ^ (std::size_t{1} << b)] != 0;
    }
    sharp[mask] = all ? 1 : 0;
  }
  return sharp;
}

}  // namespace detail

bool is_sharply_independent(const IncidenceGeometry& g, std::span<const Incidence> subset,
                            std::size_t budget) {
  std::vector<Incidence> unique(subset.begin(), subset.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  auto sharp = detail::sharply_independent_masks(g, unique, budget);
  return sharp.back() != 0;
}

bool is_sharply_independent_by_supports(const IncidenceGeometry& g,
                                        std::span<const Incidence> subset,
                                        std::size_t point_budget) {
  auto support = support_of(g, subset);
  const std::size_t n = support.points.size();
  if (n > point_budget) {
    throw BudgetExceeded("support enumeration over " + std::to_string(n) +
                         " points exceeds the budget of " + std::to_string(point_budget));
  }
  // Per line, the bitmask of subset points it carries.
  std::vector<std::uint64_t> line_mask(g.num_lines(), 0);
  for (const auto& inc : support.incidences) {
    auto k = std::lower_bound(support.points.begin(), support.points.end(), inc.point) -
             support.points.begin();
    line_mask[inc.line] |= std::uint64_t{1} << k;
  }
  std::vector<std::uint64_t> masks;
  for (LineId l : support.lines) masks.push_back(line_mask[l]);

  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t q = 1; q < full; ++q) {
    const int size = std::popcount(q);
    if (size < 2) continue;
    long surplus = 0;
    for (auto lm : masks) {
      int deg = std::popcount(lm & q);
      if (deg > 1) surplus += deg - 1;
    }
    if (surplus > 2L * size - 3) return false;
  }
  return true;
}

namespace {

struct Rotation {
  Rational c;
  Rational s;
};

std::vector<Rotation> pythagorean_rotations() {
  std::vector<Rotation> out;
  for (int a = 2; a <= 12; ++a) {
    for (int b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1 || (a - b) % 2 == 0) continue;
      Rational h(a * a + b * b);
      out.push_back({Rational(a * a - b * b) / h, Rational(2 * a * b) / h});
    }
  }
  return out;
}

// Fills slope/intercept from coordinates; returns false on a vertical line.
bool extract_lines(const IncidenceGeometry& g, LinearRealization<Rational>& rho,
                   std::string& error) {
  rho.slope.assign(g.num_lines(), Rational(0));
  rho.intercept.assign(g.num_lines(), Rational(0));
  for (LineId l = 0; l < g.num_lines(); ++l) {
    auto pts = g.points_on(l);
    std::optional<std::pair<PointId, PointId>> pair;
    for (std::size_t i = 1; i < pts.size() && !pair; ++i) {
      if (rho.x[pts[i]] != rho.x[pts[0]] || rho.y[pts[i]] != rho.y[pts[0]]) {
        pair = {pts[0], pts[i]};
      }
    }
    if (!pair) {
      throw RealizationError("all points of line " + std::to_string(l) +
                             " coincide; its slope is undetermined");
    }
    auto [a, b] = *pair;
    if (rho.x[a] == rho.x[b]) {
      error = "line " + std::to_string(l) + " is vertical";
      return false;
    }
    rho.slope[l] = -(rho.y[b] - rho.y[a]) / (rho.x[b] - rho.x[a]);
    rho.intercept[l] = -(rho.slope[l] * rho.x[a]) - rho.y[a];
    for (PointId p : pts) {
      if (residual(rho, Incidence{p, l}) != 0) {
        throw RealizationError("point " + std::to_string(p) + " does not lie on line " +
                               std::to_string(l));
      }
    }
  }
  return true;
}

Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    auto num = BigInt(j[0].is_string() ? j[0].get<std::string>() : std::to_string(j[0].get<long long>()));
    auto den = BigInt(j[1].is_string() ? j[1].get<std::string>() : std::to_string(j[1].get<long long>()));
    if (den == 0) throw RealizationError("zero denominator");
    return Rational(num, den);
  }
  throw RealizationError("expected an exact number, got " + j.dump());
}

nlohmann::json rational_json(const Rational& q) {
  return nlohmann::json::array({boost::multiprecision::numerator(q).str(),
                                boost::multiprecision::denominator(q).str()});
}

}  // namespace

LinearRealization<Rational> realization_from_coordinates(const IncidenceGeometry& g,
                                                         std::vector<Rational> xs,
                                                         std::vector<Rational> ys,
                                                         bool rotate) {
  if (xs.size() != g.num_points() || ys.size() != g.num_points()) {
    throw RealizationError("expected coordinates for " + std::to_string(g.num_points()) +
                           " points");
  }
  LinearRealization<Rational> rho;
  rho.x = xs;
  rho.y = ys;
  std::string error;
  if (extract_lines(g, rho, error)) return rho;
  if (!rotate) {
    throw RealizationError(error + "; vertical lines cannot be written as f*x + y + h = 0 "
                                   "(enable rotation to turn the configuration)");
  }
  for (const auto& rot : pythagorean_rotations()) {
    for (PointId p = 0; p < g.num_points(); ++p) {
      rho.x[p] = rot.c * xs[p] - rot.s * ys[p];
      rho.y[p] = rot.s * xs[p] + rot.c * ys[p];
    }
    if (extract_lines(g, rho, error)) return rho;
  }
  throw RealizationError("no rotation removed every vertical line");
}

LinearRealization<Rational> realization_from_json(const IncidenceGeometry& g,
                                                  const std::string& text, bool rotate) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw RealizationError(std::string("invalid realization JSON: ") + e.what());
  }
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  try {
    for (const auto& pt : doc.at("points")) {
      xs.push_back(json_rational(pt.at(0)));
      ys.push_back(json_rational(pt.at(1)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw RealizationError(std::string("bad realization JSON: ") + e.what());
  }
  if (!doc.contains("lines")) return realization_from_coordinates(g, xs, ys, rotate);

  LinearRealization<Rational> rho;
  rho.x = std::move(xs);
  rho.y = std::move(ys);
  try {
    for (const auto& ln : doc.at("lines")) {
      rho.slope.push_back(json_rational(ln.at(0)));
      rho.intercept.push_back(json_rational(ln.at(1)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw RealizationError(std::string("bad realization JSON: ") + e.what());
  }
  if (!satisfies_incidences(g, rho)) {
    throw RealizationError("realization does not satisfy every incidence");
  }
  return rho;
}

std::string to_json(const LinearRealization<Rational>& rho) {
  nlohmann::json doc;
  doc["points"] = nlohmann::json::array();
  for (std::size_t p = 0; p < rho.num_points(); ++p) {
    doc["points"].push_back(nlohmann::json::array({rational_json(rho.x[p]), rational_json(rho.y[p])}));
  }
  doc["lines"] = nlohmann::json::array();
  for (std::size_t l = 0; l < rho.num_lines(); ++l) {
    doc["lines"].push_back(
        nlohmann::json::array({rational_json(rho.slope[l]), rational_json(rho.intercept[l])}));
  }
  return doc.dump();
}

}  // namespace rodcone
