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

#ifndef ROELCKE_FINREL_HPP
#define ROELCKE_FINREL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace roelcke::finrel {

using Index = std::uint32_t;
using Pair = std::pair<Index, Index>;

// A binary relation on {0, ..., size-1}, stored as a dense boolean matrix
// with one bit row per first coordinate. Values are immutable once built.
class IndexRelation {
 public:
  // Empty relation on a set of `size` elements. Size must be positive.
  explicit IndexRelation(std::size_t size);
  IndexRelation(std::size_t size, std::span<const Pair> pairs);
  IndexRelation(std::size_t size, std::initializer_list<Pair> pairs);

  static IndexRelation diagonal(std::size_t size);
  static IndexRelation full(std::size_t size);

  std::size_t size() const { return size_; }
  bool contains(Index a, Index b) const;
  std::size_t pair_count() const;
  bool empty() const { return pair_count() == 0; }

  // Sorted lexicographically, no duplicates.
  std::vector<Pair> pairs() const;

  // Second coordinates related to `a`, ascending.
  std::vector<Index> row(Index a) const;
  // First coordinates related to `b`, ascending.
  std::vector<Index> column(Index b) const;

  bool has_full_domain() const;
  bool has_full_range() const;
  bool is_e0() const { return has_full_domain() && has_full_range(); }

  bool subset_of(const IndexRelation& other) const;
  IndexRelation united(const IndexRelation& other) const;

  bool operator==(const IndexRelation& other) const = default;
  // Size first, then lexicographic order of the sorted pair lists.
  std::strong_ordering operator<=>(const IndexRelation& other) const;

  // Mutable builder access; only used while constructing values.
  void insert(Index a, Index b);

  std::size_t hash() const;

 private:
  friend IndexRelation compose(const IndexRelation&, const IndexRelation&);
  friend IndexRelation transpose(const IndexRelation&);

  std::size_t words_per_row() const { return words_; }
  const std::uint64_t* row_bits(Index a) const {
    return bits_.data() + static_cast<std::size_t>(a) * words_;
  }
  std::uint64_t* row_bits(Index a) {
    return bits_.data() + static_cast<std::size_t>(a) * words_;
  }

  std::size_t size_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct IndexRelationHash {
  std::size_t operator()(const IndexRelation& r) const { return r.hash(); }
};

struct RelationClassification {
  bool is_e0 = false;
  bool is_symmetric = false;
  bool contains_diagonal = false;
  bool is_idempotent = false;
  bool is_equivalence = false;

  bool operator==(const RelationClassification&) const = default;
};

/// Composition in the convention where the second argument acts first:
/// (x, y) is in compose(r, s) iff some z has (x, z) in s and (z, y) in r.
/// Throws ValidationError when the sizes differ.
IndexRelation compose(const IndexRelation& r, const IndexRelation& s);

IndexRelation transpose(const IndexRelation& r);

RelationClassification classify(const IndexRelation& r);

/// Image of r under the relabelling a -> perm[a] on both coordinates.
IndexRelation conjugate(const IndexRelation& r, std::span<const Index> perm);

inline constexpr std::size_t kDefaultEnumerationCap = 4;
inline constexpr std::size_t kDefaultClosureCap = 100000;

/// Every relation on k points with full domain and full range, in canonical
/// (lexicographic pair-list) order. Throws BudgetError when k > cap.
std::vector<IndexRelation> enumerate_e0(std::size_t k,
                                        std::size_t cap = kDefaultEnumerationCap);

/// The subsemigroup generated by `generators`, in insertion order: the
/// generators first, then products in breadth-first order. Throws
/// BudgetError when more than `cap` elements would be produced.
std::vector<IndexRelation> closure(std::span<const IndexRelation> generators,
                                   std::size_t cap = kDefaultClosureCap);

/// True when every product of two members is again a member.
bool is_composition_closed(std::span<const IndexRelation> elements);

/// Greatest member of S containing the diagonal, or nullopt when S has no
/// such member. S must be closed under composition (ValidationError
/// otherwise). The result is checked to be idempotent and to contain every
/// diagonal-containing member; a failure there raises InternalError.
std::optional<IndexRelation> greatest_delta_element(
    std::span<const IndexRelation> elements);

/// Members of E_0 on k points fixed under conjugation by every permutation,
/// in canonical order. Throws BudgetError when k > cap.
std::vector<IndexRelation> invariant_under_symmetric_group(
    std::size_t k, std::size_t cap = kDefaultEnumerationCap);

}  // namespace roelcke::finrel

#endif  // ROELCKE_FINREL_HPP
