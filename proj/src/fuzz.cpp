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

#include "rodcone/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rodcone {

IncidenceGeometry random_connected_geometry(std::uint64_t seed,
                                            const RandomGeometryOptions& options) {
  if (options.min_points < 2 || options.max_points < options.min_points ||
      options.min_lines < 1 || options.max_lines < options.min_lines) {
    throw std::invalid_argument("random_connected_geometry: bad size range");
  }
  std::mt19937_64 rng(detail::mix_seed(seed, 0x9e0));
  std::uniform_int_distribution<std::size_t> np(options.min_points, options.max_points);
  std::uniform_int_distribution<std::size_t> nl(options.min_lines, options.max_lines);
  std::bernoulli_distribution take(options.incidence_probability);

  for (int attempt = 0; attempt < options.retry_budget; ++attempt) {
    const std::size_t n = np(rng);
    const std::size_t m = nl(rng);
    std::vector<std::vector<PointId>> lines;
    int redraws = 0;
    while (lines.size() < m && redraws < options.retry_budget) {
      std::vector<PointId> line;
      for (PointId p = 0; p < n; ++p) {
        if (take(rng)) line.push_back(p);
      }
      bool ok = line.size() >= 2;
      for (const auto& other : lines) {
        if (!ok) break;
        std::size_t shared = 0;
        for (PointId p : line) shared += std::binary_search(other.begin(), other.end(), p);
        ok = shared < 2;
      }
      if (ok) {
        lines.push_back(std::move(line));
      } else {
        ++redraws;
      }
    }
    if (lines.size() < m) continue;
    auto g = IncidenceGeometry::from_lines(n, lines);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_geometry: retry budget exhausted");
}

FuzzReport run_fuzz_campaign(const FuzzOptions& options) {
  FuzzReport report;
  report.cases.resize(options.cases);
  DecideOptions decide = options.decide;
  decide.mode = VerdictMode::kCrossValidated;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < options.cases; i = next++) {
      auto& c = report.cases[i];
      c.index = i;
      c.geometry = random_connected_geometry(detail::mix_seed(options.seed, i), options.geometry);
      DecideOptions local = decide;
      local.seed = detail::mix_seed(options.seed ^ 0x5eed, i);
      c.verdict = decide_rod_rigidity(c.geometry, local);
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 64);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& c : report.cases) {
    switch (c.verdict.agreement) {
      case Agreement::kAgree:
        ++report.agreed;
        break;
      case Agreement::kDisagree:
        ++report.disagreed;
        break;
      case Agreement::kSkipped:
        ++report.skipped;
        break;
    }
    report.rigid += c.verdict.rigid();
  }
  return report;
}

std::string fuzz_summary(const FuzzReport& report, bool per_case) {
  std::ostringstream out;
  if (per_case) {
    for (const auto& c : report.cases) {
      out << "case " << c.index << ": points=" << c.geometry.num_points()
          << " lines=" << c.geometry.num_lines() << " "
          << to_string(c.verdict.combinatorial.classification) << " "
          << to_string(c.verdict.agreement);
      if (c.verdict.agreement == Agreement::kSkipped) out << " (" << c.verdict.skip_reason << ")";
      out << "\n";
    }
  }
  out << (report.passed() ? "PASS" : "FAIL") << ": " << report.cases.size() << " cases, "
      << report.agreed << " agree, " << report.disagreed << " disagree, " << report.skipped
      << " skipped, " << report.rigid << " rigid\n";
  return out.str();
}

}  // namespace rodcone
