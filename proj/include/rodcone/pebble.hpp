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

#ifndef RODCONE_PEBBLE_HPP_
#define RODCONE_PEBBLE_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rodcone/cone.hpp"

namespace rodcone {

enum class PebbleClass {
  kMinimallyRigid,
  kRigidRedundant,
  kFlexibleIndependent,
  kFlexibleRedundant,
};

std::string_view to_string(PebbleClass c);

/// (2,3)-pebble game state.
///
/// Every vertex starts with two pebbles. An accepted edge consumes one
/// pebble and is directed out of the vertex that paid for it, so
/// pebbles(v) + out_degree(v) == 2 holds at all times and out-degrees never
/// exceed two.
class PebbleGame {
 public:
  explicit PebbleGame(std::size_t num_vertices);

  /// Gathers pebbles on the endpoints (reversing directed paths) and
  /// accepts the edge iff four are present. Throws std::invalid_argument
  /// on a self-loop or out-of-range vertex.
  bool try_edge(const Edge& e);

  /// What try_edge would answer, without touching this state.
  bool independent_after(const Edge& e) const;

  std::size_t num_vertices() const { return pebbles_.size(); }
  int pebbles(VertexId v) const { return pebbles_.at(v); }
  int out_degree(VertexId v) const { return out_count_.at(v); }
  std::size_t total_pebbles() const { return total_; }

  const std::vector<Edge>& accepted() const { return accepted_; }
  const std::vector<Edge>& rejected() const { return rejected_; }

  /// Current orientation of accepted edge k (tail, head).
  Edge orientation(std::size_t accepted_index) const;

 private:
  struct Arc {
    VertexId head;
    std::size_t edge;  // index into accepted_
  };

  bool gather(VertexId target, VertexId blocked);
  void check(const Edge& e) const;

  std::vector<int> pebbles_;
  std::vector<std::array<Arc, 2>> out_;
  std::vector<int> out_count_;
  std::vector<VertexId> tail_;  // tail of each accepted edge
  std::vector<Edge> accepted_;
  std::vector<Edge> rejected_;
  std::size_t total_ = 0;

  // DFS scratch.
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> parent_edge_;
};

struct PebbleVerdict {
  std::size_t num_vertices = 0;
  std::vector<std::size_t> accepted;  // indices into the input edge list
  std::vector<std::size_t> rejected;
  std::size_t remaining_pebbles = 0;
  PebbleClass classification = PebbleClass::kFlexibleIndependent;

  bool rigid() const {
    return classification == PebbleClass::kMinimallyRigid ||
           classification == PebbleClass::kRigidRedundant;
  }
  bool independent() const { return rejected.empty(); }
};

PebbleClass classify(std::size_t remaining_pebbles, bool independent);

/// Plays the game over `edges` in the given order.
PebbleVerdict play(std::size_t num_vertices, std::span<const Edge> edges);

}  // namespace rodcone

#endif  // RODCONE_PEBBLE_HPP_
