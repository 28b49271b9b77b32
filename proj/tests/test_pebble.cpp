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
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rodcone/pebble.hpp"

using namespace rodcone;
using testing::EdgeList;

namespace {

EdgeList random_graph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> all;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::shuffle(all.begin(), all.end(), rng);
  EdgeList out;
  for (std::size_t i = 0; i < std::min(m, all.size()); ++i) {
    // Random endpoint order exercises both payer directions.
    if (rng() & 1) {
      out.push_back({all[i].first, all[i].second});
    } else {
      out.push_back({all[i].second, all[i].first});
    }
  }
  return out;
}

void check_state_invariants(const PebbleGame& game) {
  std::size_t total = 0;
  for (VertexId v = 0; v < game.num_vertices(); ++v) {
    CHECK(game.pebbles(v) >= 0);
    CHECK(game.out_degree(v) <= 2);
    CHECK(game.pebbles(v) + game.out_degree(v) == 2);
    total += static_cast<std::size_t>(game.pebbles(v));
  }
  CHECK(total == game.total_pebbles());
  CHECK(game.total_pebbles() + game.accepted().size() == 2 * game.num_vertices());
  for (std::size_t k = 0; k < game.accepted().size(); ++k) {
    const Edge o = game.orientation(k);
    const Edge e = game.accepted()[k];
    CHECK(std::minmax(o.u, o.v) == std::minmax(e.u, e.v));
  }
}

}  // namespace

TEST_CASE("K4 is a rigidity circuit") {
  const auto edges = testing::k4_edges();
  const auto v = play(4, edges);
  CHECK(v.accepted.size() == 5);
  CHECK(v.rejected.size() == 1);
  CHECK(v.remaining_pebbles == 3);
  CHECK(v.classification == PebbleClass::kRigidRedundant);
  CHECK(v.rejected.front() == 5);
}

TEST_CASE("classification table") {
  CHECK(classify(3, true) == PebbleClass::kMinimallyRigid);
  CHECK(classify(3, false) == PebbleClass::kRigidRedundant);
  CHECK(classify(4, true) == PebbleClass::kFlexibleIndependent);
  CHECK(classify(5, false) == PebbleClass::kFlexibleRedundant);
  CHECK(to_string(PebbleClass::kMinimallyRigid) == "minimally-rigid");
  CHECK(to_string(PebbleClass::kFlexibleRedundant) == "flexible-redundant");
}

TEST_CASE("small graphs") {
  SUBCASE("single edge") {
    const EdgeList e = {{0, 1}};
    const auto v = play(2, e);
    CHECK(v.classification == PebbleClass::kMinimallyRigid);
  }
  SUBCASE("two vertices without edges") {
    const auto v = play(2, {});
    CHECK(v.remaining_pebbles == 4);
    CHECK(v.classification == PebbleClass::kFlexibleIndependent);
  }
  SUBCASE("parallel edge is rejected") {
    const EdgeList e = {{0, 1}, {1, 0}};
    const auto v = play(2, e);
    CHECK(v.rejected == std::vector<std::size_t>{1});
  }
  SUBCASE("triangle plus pendant vertex") {
    const EdgeList e = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    const auto v = play(4, e);
    CHECK(v.remaining_pebbles == 4);
    CHECK(v.classification == PebbleClass::kFlexibleIndependent);
  }
  SUBCASE("K4 plus isolated vertex") {
    const auto v = play(5, testing::k4_edges());
    CHECK(v.classification == PebbleClass::kFlexibleRedundant);
    CHECK(v.remaining_pebbles == 5);
  }
}

TEST_CASE("input validation") {
  PebbleGame game(3);
  CHECK_THROWS_AS(game.try_edge({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(game.try_edge({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(play(1, {}), std::invalid_argument);
}

TEST_CASE("independent_after leaves the state untouched") {
  PebbleGame game(4);
  for (const auto& e : testing::k4_edges()) {
    const bool predicted = game.independent_after(e);
    const auto pebbles_before = game.total_pebbles();
    const auto accepted_before = game.accepted().size();
    CHECK(game.total_pebbles() == pebbles_before);
    CHECK(game.accepted().size() == accepted_before);
    CHECK(game.try_edge(e) == predicted);
  }
  CHECK(game.rejected().size() == 1);
}

TEST_CASE("pebble game agrees with brute-force counts and the generic rank") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    const std::size_t m = rng() % (2 * n + 3);
    const auto edges = random_graph(n, m, rng);
    PebbleGame game(n);
    for (const auto& e : edges) {
      game.try_edge(e);
      check_state_invariants(game);
    }
    const auto v = play(n, edges);
    CHECK(v.accepted.size() + v.rejected.size() == edges.size());
    EdgeList accepted;
    for (std::size_t i : v.accepted) accepted.push_back(edges[i]);
    CHECK(testing::laman_independent_bruteforce(n, accepted));
    CHECK(v.independent() == testing::laman_independent_bruteforce(n, edges));
    CHECK(v.accepted.size() == testing::generic_rigidity_rank(n, edges, 1000 + trial));
    CHECK(v.remaining_pebbles == 2 * n - v.accepted.size());
    CHECK(v.rigid() == (v.accepted.size() + 3 == 2 * n));
    if (edges.size() <= 14) CHECK(v.accepted.size() == testing::laman_rank_bruteforce(n, edges));
  }
}

TEST_CASE("matroid rank does not depend on edge order") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    auto edges = random_graph(n, rng() % (3 * n), rng);
    const auto first = play(n, edges).accepted.size();
    for (int k = 0; k < 5; ++k) {
      std::shuffle(edges.begin(), edges.end(), rng);
      CHECK(play(n, edges).accepted.size() == first);
    }
  }
}

TEST_CASE("Henneberg graphs are minimally rigid") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const auto edges = testing::henneberg_graph(n, rng);
    CHECK(testing::laman_minimally_rigid_bruteforce(n, edges));
    CHECK(play(n, edges).classification == PebbleClass::kMinimallyRigid);
  }
}
