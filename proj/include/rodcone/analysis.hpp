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

#ifndef RODCONE_ANALYSIS_HPP_
#define RODCONE_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rodcone/cone.hpp"
#include "rodcone/geometry.hpp"
#include "rodcone/oracle.hpp"
#include "rodcone/pebble.hpp"

namespace rodcone {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VerdictMode { kCombinatorial, kCrossValidated };
enum class FieldChoice { kZp, kRational };
enum class Agreement { kAgree, kDisagree, kSkipped };

std::string_view to_string(Agreement a);

struct DecideOptions {
  VerdictMode mode = VerdictMode::kCombinatorial;
  std::uint64_t seed = kDefaultSeed;
  int seeds = 3;  // independent realizations for the algebraic side
  FieldChoice field = FieldChoice::kZp;
  SampleOptions sampling;
  std::vector<PointId> inner_choice;  // empty: lowest-index point per line
};

struct AlgebraicCheck {
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> ranks;  // of M(S^C) per seed
  std::size_t full_rank = 0;
  bool rigid = false;
};

struct RigidityVerdict {
  bool connected = true;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  PebbleVerdict combinatorial;
  std::optional<AlgebraicCheck> algebraic;
  Agreement agreement = Agreement::kSkipped;
  std::string skip_reason;
  std::string reproduction;  // JSON bundle, set on disagreement

  bool rigid() const { return connected && combinatorial.rigid(); }
  /// Internal degrees of freedom: remaining pebbles minus the three
  /// trivial motions.
  std::size_t internal_dof() const { return combinatorial.remaining_pebbles - 3; }
};

/// Rigidity of rod configurations realizing `geometry`: the pebble game on
/// a cone graph, optionally cross-checked against the concurrence-matrix
/// rank of sampled string configurations of S^C. A disconnected geometry
/// is flexible and skips the algebraic side. Disagreement is reported in
/// the verdict (with a reproduction bundle); see require_agreement.
RigidityVerdict decide_rod_rigidity(const IncidenceGeometry& geometry,
                                    const DecideOptions& options = {});

class OracleDisagreement : public std::runtime_error {
 public:
  explicit OracleDisagreement(std::string bundle);
  const std::string& bundle() const { return bundle_; }

 private:
  std::string bundle_;
};

/// Throws OracleDisagreement when the verdict records a disagreement.
void require_agreement(const RigidityVerdict& verdict);

/// Lines in breadth-first order over the line-intersection graph, starting
/// at line 0 and visiting neighbours by index. Every prefix is connected
/// when the geometry is.
std::vector<LineId> line_bfs_order(const IncidenceGeometry& geometry);

/// The maximally independent subgraph built line by line: per line, the
/// spoke to the anchor point p (lowest-index point already seen), the spoke
/// to the next seen point q1, spokes and star edges to unseen points, then
/// whichever spokes to the remaining seen points and star edges (p, q) to
/// seen points with an accepted spoke keep the edge set independent.
struct CanonicalSubgraph {
  ConeGraph cone_graph;  // inner vertex of each line is its anchor point
  std::vector<LineId> line_order;
  std::vector<std::size_t> probe_order;  // cone edge indices in the order tried
  std::vector<std::size_t> accepted;     // E', in acceptance order
  std::size_t remaining_pebbles = 0;
  ConeIncidenceGeometry cone_geometry;
  DerivedSubgeometry derived;  // S'

  bool minimally_rigid() const { return remaining_pebbles == 3; }
};

/// Throws AnalysisError for a disconnected geometry.
CanonicalSubgraph canonical_subgraph(const IncidenceGeometry& geometry);

struct MinimalityReport {
  bool minimally_rigid = false;
  std::vector<LineId> removable_rods;        // rods whose deletion keeps rigidity
  std::vector<PebbleClass> after_deletion;   // per line
};

/// Deletes each rod in turn (keeping all points) and re-decides rigidity.
/// Throws AnalysisError unless the geometry is rigid.
MinimalityReport decide_minimal_rigidity(const IncidenceGeometry& geometry,
                                         bool parallel = true);

/// Body-and-joint counts: 2|I| <= 3|L| + 2|P| - 3 globally and
/// 2|I'| <= 3|L'| + 2|P'| - 3 for every nonempty set of bodies L' with its
/// attached joints P'. Throws BudgetExceeded above `line_budget` lines.
bool check_body_joint_counts(const IncidenceGeometry& geometry, std::size_t line_budget = 20);

/// {"classification", "remaining_pebbles", "accepted_edges", "agreement",
///  "removable_rods"?, ...}
std::string verdict_json(const RigidityVerdict& verdict,
                         const MinimalityReport* minimality = nullptr);

}  // namespace rodcone

#endif  // RODCONE_ANALYSIS_HPP_
