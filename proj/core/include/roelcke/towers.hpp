// Copyright 2026 The roelcke Authors
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

#ifndef ROELCKE_TOWERS_HPP
#define ROELCKE_TOWERS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "roelcke/cantor.hpp"
#include "roelcke/dyadic.hpp"
#include "roelcke/finrel.hpp"
#include "roelcke/homeo.hpp"

namespace roelcke::towers {

using finrel::IndexRelation;
using homeo::PrefixMap;

/// Deepest canonical level at which traces are materialized.
inline constexpr std::size_t kMaxLevel = 12;

enum class Kind { clopen, graph, product, involution };
enum class Side { left, right };

const char* to_string(Kind kind);

// A closed relation on the Cantor space with full domain and range, given
// by its traces on the canonical level-n partitions. Clopen and graph
// towers are exact; products outside the closed cases are approximations
// from above, defined up to their budget level.
class RelationTower {
 public:
  /// Union of the level-`seed_level` rectangles listed in `seed`. The seed
  /// must have full domain and range.
  static RelationTower clopen(std::size_t seed_level, IndexRelation seed);
  /// Graph of a homeomorphism.
  static RelationTower graph(PrefixMap f);
  /// The full relation X x X.
  static RelationTower full() { return clopen(0, IndexRelation::full(1)); }
  /// The diagonal, graph of the identity.
  static RelationTower diagonal() { return graph(PrefixMap::identity()); }

  Kind kind() const;
  bool exact() const;
  /// Highest level with a defined trace; nullopt for exact towers.
  std::optional<std::size_t> budget() const;

  /// Level-n trace; BudgetError above kMaxLevel or above the budget.
  IndexRelation trace(std::size_t n) const;

  // Kind-specific payloads; ValidationError on the wrong kind.
  std::size_t seed_level() const;
  const IndexRelation& seed() const;
  const PrefixMap& map() const;

  struct Node;

 private:
  explicit RelationTower(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend RelationTower involute(const RelationTower&);
  friend RelationTower approximate_product(const RelationTower&, const RelationTower&,
                                           std::size_t);

  std::shared_ptr<const Node> node_;
};

/// Transposed relation.
RelationTower involute(const RelationTower& t);

/// t1 * t2 with t2 acting first. Exact when both are graphs, both clopen, or
/// one is a graph and the other exact; otherwise an approximation whose
/// level-n trace is the projection of the level-`budget` trace composition.
RelationTower product(const RelationTower& t1, const RelationTower& t2,
                      std::size_t budget = kMaxLevel);

/// The budgeted superset of t1 * t2, whatever the operand kinds: level-n
/// traces (n <= budget) are projections of the composed level-budget traces.
/// Shrinks as the budget grows.
RelationTower approximate_product(const RelationTower& t1, const RelationTower& t2,
                                  std::size_t budget);
/// g.T (left) or T.g (right), i.e. product with graph(g) on that side.
RelationTower translate(const PrefixMap& g, const RelationTower& t, Side side);

IndexRelation trace_at(const RelationTower& t, std::size_t level);
/// Trace on an arbitrary partition, aggregated from the level given by the
/// partition's longest word.
IndexRelation trace_at(const RelationTower& t, const cantor::Partition& partition);

bool same_neighborhood(const RelationTower& a, const RelationTower& b,
                       const cantor::Partition& partition);
bool same_neighborhood(const RelationTower& a, const RelationTower& b, std::size_t level);

struct HausdorffBounds {
  DyadicValue lower;
  DyadicValue upper;
};

/// Bounds on the Hausdorff distance between two exact towers under the sum
/// metric on pairs. lower is the Hausdorff distance of the level-n trace
/// cells; upper = lower + 2^(1-n).
HausdorffBounds hausdorff_bounds(const RelationTower& a, const RelationTower& b,
                                 std::size_t n);

struct CoherenceReport {
  bool ok = true;
  std::optional<std::size_t> failed_level;
  std::string reason;
};

/// Checks trace(n) = projection of trace(n+1) and trace(n) in E_0, n < levels.
/// Throws BudgetError when levels exceeds kMaxLevel; an approximate tower
/// whose budget ends earlier fails the report at the first missing level.
CoherenceReport check_coherence(const RelationTower& t, std::size_t levels);
/// Same checks on an explicit trace sequence, entry n at level n.
CoherenceReport check_coherence(std::span<const IndexRelation> traces);

}  // namespace roelcke::towers

#endif  // ROELCKE_TOWERS_HPP
