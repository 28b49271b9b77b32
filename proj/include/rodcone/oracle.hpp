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

// Exact algebraic side: linear realizations of incidence geometries, the
// concurrence matrix of the incidence equations
//
//     slope(l) * x(p) + y(p) + intercept(l) = 0   for every (p, l) in I,
//
// and its rank over an exact field.

#ifndef RODCONE_ORACLE_HPP_
#define RODCONE_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rodcone/cone.hpp"
#include "rodcone/field.hpp"
#include "rodcone/geometry.hpp"

namespace rodcone {

class RealizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
struct LinearRealization {
  std::vector<F> slope;      // per line
  std::vector<F> intercept;  // per line
  std::vector<F> x;          // per point
  std::vector<F> y;          // per point

  std::size_t num_lines() const { return slope.size(); }
  std::size_t num_points() const { return x.size(); }

  friend bool operator==(const LinearRealization&, const LinearRealization&) = default;
};

template <class F>
F residual(const LinearRealization<F>& rho, const Incidence& inc) {
  return rho.slope[inc.line] * rho.x[inc.point] + rho.y[inc.point] + rho.intercept[inc.line];
}

template <class F>
bool satisfies_incidences(const IncidenceGeometry& g, const LinearRealization<F>& rho) {
  if (rho.num_lines() != g.num_lines() || rho.num_points() != g.num_points() ||
      rho.intercept.size() != g.num_lines() || rho.y.size() != g.num_points()) {
    return false;
  }
  for (const auto& inc : g.incidences()) {
    if (!FieldTraits<F>::is_zero(residual(rho, inc))) return false;
  }
  return true;
}

/// Distinct points receive distinct coordinates.
template <class F>
bool is_proper(const LinearRealization<F>& rho) {
  for (std::size_t a = 0; a < rho.num_points(); ++a) {
    for (std::size_t b = a + 1; b < rho.num_points(); ++b) {
      if (rho.x[a] == rho.x[b] && rho.y[a] == rho.y[b]) return false;
    }
  }
  return true;
}

/// Distinct lines receive distinct (slope, intercept).
template <class F>
bool has_distinct_lines(const LinearRealization<F>& rho) {
  for (std::size_t a = 0; a < rho.num_lines(); ++a) {
    for (std::size_t b = a + 1; b < rho.num_lines(); ++b) {
      if (rho.slope[a] == rho.slope[b] && rho.intercept[a] == rho.intercept[b]) return false;
    }
  }
  return true;
}

template <class F>
bool is_trivial(const LinearRealization<F>& rho) {
  for (std::size_t a = 1; a < rho.num_points(); ++a) {
    if (!(rho.x[a] == rho.x[0] && rho.y[a] == rho.y[0])) return false;
  }
  return true;
}

struct SampleOptions {
  int retry_budget = 32;
};

template <class F>
struct SampleResult {
  std::optional<LinearRealization<F>> realization;
  int attempts = 0;
  std::string failure;  // set when infeasible

  explicit operator bool() const { return realization.has_value(); }
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class F>
F random_nonzero(std::mt19937_64& rng) {
  return FieldTraits<F>::random(rng);
}

}  // namespace detail

/// Draws a proper linear realization with pairwise distinct lines.
///
/// Lines are visited in a randomized breadth-first order over the
/// line-intersection graph. A line through two or more placed points is
/// the line through the first two of them and must contain the rest; a
/// line through one placed point gets a random slope through it; a line
/// through none gets a random slope and intercept. Points not yet placed
/// go to random abscissae on the line. Each attempt that hits a
/// contradiction, a vertical line, coincident points or coincident lines is
/// discarded; after `retry_budget` attempts the geometry is reported
/// infeasible.
template <class F>
SampleResult<F> sample_realization(const IncidenceGeometry& g, std::uint64_t seed,
                                   SampleOptions options = {}) {
  using T = FieldTraits<F>;
  SampleResult<F> result;
  const std::size_t np = g.num_points();
  const std::size_t nl = g.num_lines();
  std::mt19937_64 rng(detail::mix_seed(seed, 0x5a3c));

  for (int attempt = 0; attempt < options.retry_budget; ++attempt) {
    result.attempts = attempt + 1;
    LinearRealization<F> rho;
    rho.slope.assign(nl, F{});
    rho.intercept.assign(nl, F{});
    rho.x.assign(np, F{});
    rho.y.assign(np, F{});
    std::vector<char> placed(np, 0);
    std::vector<char> line_done(nl, 0);

    // Randomized BFS order over lines.
    std::vector<LineId> order;
    std::vector<LineId> starts(nl);
    for (LineId l = 0; l < nl; ++l) starts[l] = l;
    std::shuffle(starts.begin(), starts.end(), rng);
    std::vector<char> queued(nl, 0);
    for (LineId s : starts) {
      if (queued[s]) continue;
      std::vector<LineId> queue{s};
      queued[s] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        LineId l = queue[head];
        order.push_back(l);
        std::vector<LineId> next;
        for (PointId p : g.points_on(l)) {
          for (LineId m : g.lines_through(p)) {
            if (!queued[m]) {
              queued[m] = 1;
              next.push_back(m);
            }
          }
        }
        std::shuffle(next.begin(), next.end(), rng);
        queue.insert(queue.end(), next.begin(), next.end());
      }
    }

    bool ok = true;
    std::string why;
    for (LineId l : order) {
      std::vector<PointId> known;
      for (PointId p : g.points_on(l)) {
        if (placed[p]) known.push_back(p);
      }
      if (known.size() >= 2) {
        PointId a = known[0];
        PointId b = known[1];
        if (rho.x[a] == rho.x[b]) {
          ok = false;
          why = rho.y[a] == rho.y[b] ? "coincident points" : "vertical line";
          break;
        }
        rho.slope[l] = -(rho.y[b] - rho.y[a]) / (rho.x[b] - rho.x[a]);
        rho.intercept[l] = -(rho.slope[l] * rho.x[a]) - rho.y[a];
        for (std::size_t k = 2; k < known.size() && ok; ++k) {
          if (!T::is_zero(residual(rho, Incidence{known[k], l}))) {
            ok = false;
            why = "incidence constraints force a contradiction";
          }
        }
        if (!ok) break;
      } else if (known.size() == 1) {
        PointId a = known[0];
        rho.slope[l] = detail::random_nonzero<F>(rng);
        rho.intercept[l] = -(rho.slope[l] * rho.x[a]) - rho.y[a];
      } else {
        rho.slope[l] = detail::random_nonzero<F>(rng);
        rho.intercept[l] = detail::random_nonzero<F>(rng);
      }
      line_done[l] = 1;
      for (PointId p : g.points_on(l)) {
        if (placed[p]) continue;
        rho.x[p] = detail::random_nonzero<F>(rng);
        rho.y[p] = -(rho.slope[l] * rho.x[p]) - rho.intercept[l];
        placed[p] = 1;
      }
    }
    if (!ok) {
      result.failure = why;
      continue;
    }
    for (PointId p = 0; p < np; ++p) {
      if (!placed[p]) {
        rho.x[p] = detail::random_nonzero<F>(rng);
        rho.y[p] = detail::random_nonzero<F>(rng);
      }
    }
    if (!is_proper(rho)) {
      result.failure = "coincident points";
      continue;
    }
    if (!has_distinct_lines(rho)) {
      result.failure = "coincident lines";
      continue;
    }
    result.realization = std::move(rho);
    result.failure.clear();
    return result;
  }
  result.failure = "retry budget exhausted (last attempt: " + result.failure + ")";
  return result;
}

/// Extends a proper realization of S to the cone incidence geometry: each
/// cone point is drawn at random off its line, away from every other
/// point, with no vertical spoke; spokes take the induced slope and
/// intercept.
template <class F>
SampleResult<F> realize_cone(const IncidenceGeometry& g, const ConeIncidenceGeometry& sc,
                             const LinearRealization<F>& rho, std::uint64_t seed,
                             SampleOptions options = {}) {
  using T = FieldTraits<F>;
  if (!satisfies_incidences(g, rho)) {
    throw RealizationError("realization does not satisfy the incidences of the geometry");
  }
  if (!is_proper(rho)) throw RealizationError("realization is not proper");

  SampleResult<F> result;
  std::mt19937_64 rng(detail::mix_seed(seed, 0xc0e));
  const std::size_t np = g.num_points();
  const std::size_t nl = g.num_lines();

  LinearRealization<F> out;
  out.x = rho.x;
  out.y = rho.y;
  out.x.resize(np + nl);
  out.y.resize(np + nl);
  out.slope = rho.slope;
  out.intercept = rho.intercept;
  out.slope.resize(sc.geometry.num_lines());
  out.intercept.resize(sc.geometry.num_lines());

  for (LineId l = 0; l < nl; ++l) {
    const PointId c = sc.cone_point(l);
    bool placed = false;
    for (int attempt = 0; attempt < options.retry_budget && !placed; ++attempt) {
      ++result.attempts;
      F cx = T::random(rng);
      F cy = T::random(rng);
      if (T::is_zero(rho.slope[l] * cx + cy + rho.intercept[l])) continue;
      bool clash = false;
      for (PointId q = 0; q < c && !clash; ++q) {
        clash = out.x[q] == cx && out.y[q] == cy;
      }
      for (PointId p : g.points_on(l)) clash = clash || out.x[p] == cx;
      if (clash) continue;
      out.x[c] = cx;
      out.y[c] = cy;
      placed = true;
    }
    if (!placed) {
      result.failure = "could not place cone point of line " + std::to_string(l) +
                       " within the retry budget";
      return result;
    }
  }
  for (std::size_t k = 0; k < g.num_incidences(); ++k) {
    const auto& inc = g.incidences()[k];
    const PointId c = sc.cone_point(inc.line);
    const LineId s = sc.spoke_line(k);
    out.slope[s] = -(out.y[inc.point] - out.y[c]) / (out.x[inc.point] - out.x[c]);
    out.intercept[s] = -(out.slope[s] * out.x[c]) - out.y[c];
  }
  result.realization = std::move(out);
  return result;
}

/// Dense row-major matrix.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix select_rows(std::span<const std::size_t> rows) const {
    Matrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[i] * cols_), cols_,
                  out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

// Column layout: intercepts h_0..h_{|L|-1}, then x_0..x_{|P|-1}, then
// y_0..y_{|P|-1}. Rows follow the geometry's incidence order.
inline std::size_t h_column(LineId l) { return l; }
inline std::size_t x_column(const IncidenceGeometry& g, PointId p) { return g.num_lines() + p; }
inline std::size_t y_column(const IncidenceGeometry& g, PointId p) {
  return g.num_lines() + g.num_points() + p;
}

template <class F>
Matrix<F> concurrence_matrix(const IncidenceGeometry& g, const LinearRealization<F>& rho) {
  Matrix<F> m(g.num_incidences(), g.num_lines() + 2 * g.num_points());
  const F one(1);
  for (std::size_t r = 0; r < g.num_incidences(); ++r) {
    const auto& inc = g.incidences()[r];
    m.at(r, h_column(inc.line)) = one;
    m.at(r, x_column(g, inc.point)) = rho.slope[inc.line];
    m.at(r, y_column(g, inc.point)) = one;
  }
  return m;
}

/// Rank by Gaussian elimination over a prime field.
template <std::uint64_t M>
std::size_t rank_of(Matrix<PrimeField<M>> m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const auto inv = m.at(rank, c).inverse();
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      const auto factor = m.at(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination on the
/// row-scaled integer matrix.
std::size_t rank_of(const Matrix<Rational>& m);
std::size_t bareiss_rank(Matrix<BigInt> m);

/// |L| + 2|P| - 3: the rank of a concurrence matrix can never exceed this
/// once two points are distinct.
inline std::size_t max_concurrence_rank(const IncidenceGeometry& g) {
  const std::size_t cols = g.num_lines() + 2 * g.num_points();
  return cols >= 3 ? cols - 3 : 0;
}

/// Kernel vectors every concurrence matrix has: x-translation, y-translation
/// and the dilation about the origin.
template <class F>
std::vector<std::vector<F>> trivial_redrawings(const IncidenceGeometry& g,
                                               const LinearRealization<F>& rho) {
  const std::size_t cols = g.num_lines() + 2 * g.num_points();
  std::vector<std::vector<F>> out(3, std::vector<F>(cols));
  for (LineId l = 0; l < g.num_lines(); ++l) {
    out[0][h_column(l)] = -rho.slope[l];
    out[1][h_column(l)] = F(-1);
    out[2][h_column(l)] = rho.intercept[l];
  }
  for (PointId p = 0; p < g.num_points(); ++p) {
    out[0][x_column(g, p)] = F(1);
    out[1][y_column(g, p)] = F(1);
    out[2][x_column(g, p)] = rho.x[p];
    out[2][y_column(g, p)] = rho.y[p];
  }
  return out;
}

template <class F>
struct StringConfigRank {
  std::size_t rank = 0;
  std::size_t full_rank = 0;
  bool rigid() const { return rank == full_rank; }
};

/// Rank of the concurrence matrix of a string configuration. Refuses
/// realizations that violate an incidence or are not proper.
template <class F>
StringConfigRank<F> string_config_rank(const IncidenceGeometry& g,
                                       const LinearRealization<F>& rho) {
  if (!satisfies_incidences(g, rho)) {
    throw RealizationError("realization does not satisfy the incidences of the geometry");
  }
  if (!is_proper(rho)) throw RealizationError("string configuration is not proper");
  return {rank_of(concurrence_matrix(g, rho)), max_concurrence_rank(g)};
}

/// Infinitesimal rigidity of a string configuration realizing S^C.
template <class F>
bool is_string_config_rigid(const ConeIncidenceGeometry& sc, const LinearRealization<F>& rho) {
  return string_config_rank(sc.geometry, rho).rigid();
}

/// |J| <= |M| + 2|Q| - 3 for every J in the subset whose support spans at
/// least two points, checked literally over all 2^|subset| subsets.
/// Throws BudgetExceeded above `budget` incidences.
bool is_sharply_independent(const IncidenceGeometry& g, std::span<const Incidence> subset,
                            std::size_t budget = 16);

/// Same predicate, enumerating point supports Q instead: for each Q the
/// worst J takes every line meeting Q at least twice, so the condition
/// reads sum_m max(0, deg_Q(m) - 1) <= 2|Q| - 3. Exponential in the number
/// of points touched rather than in |subset|.
bool is_sharply_independent_by_supports(const IncidenceGeometry& g,
                                        std::span<const Incidence> subset,
                                        std::size_t point_budget = 24);

namespace detail {
/// Bit k of mask i is set when subset i is sharply independent; index by
/// bitmask over `subset`. Throws BudgetExceeded.
std::vector<char> sharply_independent_masks(const IncidenceGeometry& g,
                                            std::span<const Incidence> subset,
                                            std::size_t budget);
}  // namespace detail

/// Rows of every sharply independent incidence subset are independent.
/// Only maximal sharply independent subsets are rank-checked (the family
/// is closed under subsets). Throws BudgetExceeded above `budget`.
template <class F>
bool is_regular(const IncidenceGeometry& g, const LinearRealization<F>& rho,
                std::size_t budget = 16) {
  auto all = g.incidences();
  auto sharp = detail::sharply_independent_masks(g, all, budget);
  const auto matrix = concurrence_matrix(g, rho);
  const std::size_t n = all.size();
  const std::size_t full = std::size_t{1} << n;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (!sharp[mask]) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < n && maximal; ++b) {
      if (!(mask >> b & 1) && sharp[mask | std::size_t{1} << b]) maximal = false;
    }
    if (!maximal) continue;
    std::vector<std::size_t> rows;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask >> b & 1) rows.push_back(b);
    }
    if (rank_of(matrix.select_rows(rows)) != rows.size()) return false;
  }
  return true;
}

/// Realization of a derived subgeometry, inheriting each line from its
/// parent line in S^C.
template <class F>
LinearRealization<F> restrict_realization(const DerivedSubgeometry& sub,
                                          const LinearRealization<F>& cone_rho) {
  LinearRealization<F> out;
  out.x = cone_rho.x;
  out.y = cone_rho.y;
  for (LineId parent : sub.parent_line) {
    out.slope.push_back(cone_rho.slope.at(parent));
    out.intercept.push_back(cone_rho.intercept.at(parent));
  }
  return out;
}

/// Maps a rational realization into a prime field.
template <class F>
LinearRealization<F> convert_realization(const LinearRealization<Rational>& rho) {
  LinearRealization<F> out;
  auto conv = [](const std::vector<Rational>& in) {
    std::vector<F> v;
    v.reserve(in.size());
    for (const auto& q : in) v.push_back(FieldTraits<F>::from_rational(q));
    return v;
  };
  out.slope = conv(rho.slope);
  out.intercept = conv(rho.intercept);
  out.x = conv(rho.x);
  out.y = conv(rho.y);
  return out;
}

/// Builds a rational realization from point coordinates alone, extracting
/// each line's slope and intercept from its first two points. A vertical
/// line is an error unless `rotate` is set, in which case all coordinates
/// are first turned by an exact rational rotation (a Pythagorean angle)
/// chosen so no line is vertical.
LinearRealization<Rational> realization_from_coordinates(const IncidenceGeometry& g,
                                                         std::vector<Rational> xs,
                                                         std::vector<Rational> ys,
                                                         bool rotate = false);

// JSON: {"points": [[x, y], ...], "lines": [[slope, intercept], ...]?}
// with every number a ["numerator", "denominator"] pair of decimal strings
// (plain integers and "a/b" strings are accepted on input). Without
// "lines", slopes are extracted from the coordinates.
LinearRealization<Rational> realization_from_json(const IncidenceGeometry& g,
                                                  const std::string& text, bool rotate = false);
std::string to_json(const LinearRealization<Rational>& rho);

/// CSV dump of a concurrence matrix: a header row naming each column, then
/// one row per incidence prefixed by its point and line.
template <class F>
void write_matrix_csv(std::ostream& out, const IncidenceGeometry& g, const Matrix<F>& m) {
  out << "point,line";
  for (LineId l = 0; l < g.num_lines(); ++l) out << ",h" << l;
  for (PointId p = 0; p < g.num_points(); ++p) out << ",x" << p;
  for (PointId p = 0; p < g.num_points(); ++p) out << ",y" << p;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& inc = g.incidences()[r];
    out << inc.point << ',' << inc.line;
    for (std::size_t c = 0; c < m.cols(); ++c) out << ',' << FieldTraits<F>::to_string(m.at(r, c));
    out << '\n';
  }
}

}  // namespace rodcone

#endif  // RODCONE_ORACLE_HPP_
