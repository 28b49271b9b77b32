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

#ifndef RODCONE_FUZZ_HPP_
#define RODCONE_FUZZ_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rodcone/analysis.hpp"
#include "rodcone/geometry.hpp"

namespace rodcone {

struct RandomGeometryOptions {
  std::size_t min_points = 2;
  std::size_t max_points = 10;
  std::size_t min_lines = 1;
  std::size_t max_lines = 6;
  double incidence_probability = 0.4;
  int retry_budget = 1000;
};

/// A random connected geometry: each line takes every point independently
/// with the given probability, lines on fewer than two points or sharing two
/// points with an earlier line are redrawn. Deterministic in `seed`.
IncidenceGeometry random_connected_geometry(std::uint64_t seed,
                                            const RandomGeometryOptions& options = {});

struct FuzzOptions {
  std::size_t cases = 200;
  std::uint64_t seed = kDefaultSeed;
  RandomGeometryOptions geometry;
  DecideOptions decide;  // mode is forced to cross-validated
  unsigned threads = 0;  // 0: hardware concurrency
};

struct FuzzCase {
  std::size_t index = 0;
  IncidenceGeometry geometry;
  RigidityVerdict verdict;
};

struct FuzzReport {
  std::vector<FuzzCase> cases;  // in index order
  std::size_t agreed = 0;
  std::size_t disagreed = 0;
  std::size_t skipped = 0;
  std::size_t rigid = 0;

  bool passed() const { return disagreed == 0; }
  std::size_t compared() const { return agreed + disagreed; }
};

/// Cross-validates `cases` random geometries. Output is independent of the
/// thread count.
FuzzReport run_fuzz_campaign(const FuzzOptions& options);

/// One line per case plus a tally line.
std::string fuzz_summary(const FuzzReport& report, bool per_case);

}  // namespace rodcone

#endif  // RODCONE_FUZZ_HPP_
