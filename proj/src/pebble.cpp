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

#include "rodcone/pebble.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rodcone {

std::string_view to_string(PebbleClass c) {
  switch (c) {
    case PebbleClass::kMinimallyRigid:
      return "minimally-rigid";
    case PebbleClass::kRigidRedundant:
      return "rigid-redundant";
    case PebbleClass::kFlexibleIndependent:
      return "flexible-independent";
    case PebbleClass::kFlexibleRedundant:
      return "flexible-redundant";
  }
  return "unknown";
}

PebbleGame::PebbleGame(std::size_t num_vertices)
    : pebbles_(num_vertices, 2),
      out_(num_vertices),
      out_count_(num_vertices, 0),
      total_(2 * num_vertices),
      seen_(num_vertices, 0),
      parent_(num_vertices, 0),
      parent_edge_(num_vertices, 0) {}

void PebbleGame::check(const Edge& e) const {
  if (e.u >= pebbles_.size() || e.v >= pebbles_.size()) {
    throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                ") references a missing vertex");
  }
  if (e.u == e.v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
  }
}

// Depth-first search along directed edges from `target` for a vertex
// holding a free pebble, never entering `blocked`. On success the path is
// reversed and the pebble moves to `target`.
bool PebbleGame::gather(VertexId target, VertexId blocked) {
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  seen_[target] = stamp_;
  seen_[blocked] = stamp_;

  std::vector<VertexId> stack{target};
  VertexId found = target;
  bool ok = false;
  while (!stack.empty() && !ok) {
    VertexId x = stack.back();
    stack.pop_back();
    for (int k = 0; k < out_count_[x]; ++k) {
      const Arc& arc = out_[x][k];
      VertexId y = arc.head;
      if (seen_[y] == stamp_) continue;
      seen_[y] = stamp_;
      parent_[y] = x;
      parent_edge_[y] = arc.edge;
      if (pebbles_[y] > 0) {
        found = y;
        ok = true;
        break;
      }
      stack.push_back(y);
    }
  }
  if (!ok) return false;

  // Reverse target -> ... -> found.
  --pebbles_[found];
  ++pebbles_[target];
  for (VertexId y = found; y != target;) {
    VertexId x = parent_[y];
    std::size_t edge = parent_edge_[y];
    auto& arcs = out_[x];
    for (int k = 0; k < out_count_[x]; ++k) {
      if (arcs[k].edge == edge) {
        arcs[k] = arcs[out_count_[x] - 1];
        --out_count_[x];
        break;
      }
    }
    out_[y][out_count_[y]++] = {x, edge};
    tail_[edge] = y;
    y = x;
  }
  return true;
}

bool PebbleGame::try_edge(const Edge& e) {
  check(e);
  while (pebbles_[e.u] < 2 && gather(e.u, e.v)) {
  }
  while (pebbles_[e.v] < 2 && gather(e.v, e.u)) {
  }
  if (pebbles_[e.u] + pebbles_[e.v] < 4) {
    rejected_.push_back(e);
    return false;
  }
  const VertexId payer = e.u < e.v ? e.u : e.v;
  const VertexId other = payer == e.u ? e.v : e.u;
  --pebbles_[payer];
  --total_;
  const std::size_t idx = accepted_.size();
  accepted_.push_back(e);
  tail_.push_back(payer);
  out_[payer][out_count_[payer]++] = {other, idx};
  return true;
}

bool PebbleGame::independent_after(const Edge& e) const {
  PebbleGame probe = *this;
  return probe.try_edge(e);
}

Edge PebbleGame::orientation(std::size_t accepted_index) const {
  const Edge& e = accepted_.at(accepted_index);
  VertexId tail = tail_[accepted_index];
  return {tail, tail == e.u ? e.v : e.u};
}

PebbleClass classify(std::size_t remaining_pebbles, bool independent) {
  const bool rigid = remaining_pebbles == 3;
  if (rigid) return independent ? PebbleClass::kMinimallyRigid : PebbleClass::kRigidRedundant;
  return independent ? PebbleClass::kFlexibleIndependent : PebbleClass::kFlexibleRedundant;
}

PebbleVerdict play(std::size_t num_vertices, std::span<const Edge> edges) {
  if (num_vertices < 2) throw std::invalid_argument("pebble game needs at least 2 vertices");
  PebbleGame game(num_vertices);
  PebbleVerdict verdict;
  verdict.num_vertices = num_vertices;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    (game.try_edge(edges[i]) ? verdict.accepted : verdict.rejected).push_back(i);
  }
  verdict.remaining_pebbles = game.total_pebbles();
  verdict.classification = classify(verdict.remaining_pebbles, verdict.rejected.empty());
  return verdict;
}

}  // namespace rodcone
