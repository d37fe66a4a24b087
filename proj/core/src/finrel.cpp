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

#include "roelcke/finrel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "roelcke/error.hpp"

namespace roelcke::finrel {

namespace {

std::size_t words_for(std::size_t size) { return (size + 63) / 64; }

void require_same_size(const IndexRelation& r, const IndexRelation& s,
                       const char* op) {
  if (r.size() != s.size()) {
    throw ValidationError(std::string(op) + ": size mismatch (" +
                          std::to_string(r.size()) + " vs " +
                          std::to_string(s.size()) + ")");
  }
}

}  // namespace

IndexRelation::IndexRelation(std::size_t size)
    : size_(size), words_(words_for(size)), bits_(size * words_for(size), 0) {
  if (size == 0) {
    throw ValidationError("relation size must be positive");
  }
}

IndexRelation::IndexRelation(std::size_t size, std::span<const Pair> pairs)
    : IndexRelation(size) {
  for (auto [a, b] : pairs) insert(a, b);
}

IndexRelation::IndexRelation(std::size_t size, std::initializer_list<Pair> pairs)
    : IndexRelation(size, std::span<const Pair>(pairs.begin(), pairs.size())) {}

IndexRelation IndexRelation::diagonal(std::size_t size) {
  IndexRelation r(size);
  for (Index a = 0; a < size; ++a) r.insert(a, a);
  return r;
}

IndexRelation IndexRelation::full(std::size_t size) {
  IndexRelation r(size);
  for (Index a = 0; a < size; ++a)
    for (Index b = 0; b < size; ++b) r.insert(a, b);
  return r;
}

void IndexRelation::insert(Index a, Index b) {
  if (a >= size_ || b >= size_) {
    throw ValidationError("pair (" + std::to_string(a) + "," +
                          std::to_string(b) + ") outside [0," +
                          std::to_string(size_) + ")");
  }
  row_bits(a)[b / 64] |= std::uint64_t{1} << (b % 64);
}

bool IndexRelation::contains(Index a, Index b) const {
  if (a >= size_ || b >= size_) return false;
  return (row_bits(a)[b / 64] >> (b % 64)) & 1U;
}

std::size_t IndexRelation::pair_count() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Pair> IndexRelation::pairs() const {
  std::vector<Pair> out;
  for (Index a = 0; a < size_; ++a) {
    for (Index b : row(a)) out.emplace_back(a, b);
  }
  return out;
}

std::vector<Index> IndexRelation::row(Index a) const {
  std::vector<Index> out;
  const auto* bits = row_bits(a);
  for (std::size_t w = 0; w < words_; ++w) {
    auto word = bits[w];
    while (word != 0) {
      auto bit = static_cast<Index>(std::countr_zero(word));
      out.push_back(static_cast<Index>(w * 64) + bit);
      word &= word - 1;
    }
  }
  return out;
}

std::vector<Index> IndexRelation::column(Index b) const {
  std::vector<Index> out;
  for (Index a = 0; a < size_; ++a) {
    if (contains(a, b)) out.push_back(a);
  }
  return out;
}

bool IndexRelation::has_full_domain() const {
  for (Index a = 0; a < size_; ++a) {
    const auto* bits = row_bits(a);
    if (std::all_of(bits, bits + words_, [](auto w) { return w == 0; })) {
      return false;
    }
  }
  return true;
}

bool IndexRelation::has_full_range() const {
  std::vector<std::uint64_t> seen(words_, 0);
  for (Index a = 0; a < size_; ++a) {
    const auto* bits = row_bits(a);
    for (std::size_t w = 0; w < words_; ++w) seen[w] |= bits[w];
  }
  for (std::size_t w = 0; w < words_; ++w) {
    std::size_t live = std::min<std::size_t>(64, size_ - w * 64);
    auto mask = live == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << live) - 1;
    if ((seen[w] & mask) != mask) return false;
  }
  return true;
}

bool IndexRelation::subset_of(const IndexRelation& other) const {
  require_same_size(*this, other, "subset_of");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if ((bits_[i] & ~other.bits_[i]) != 0) return false;
  }
  return true;
}

IndexRelation IndexRelation::united(const IndexRelation& other) const {
  require_same_size(*this, other, "united");
  IndexRelation out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
  return out;
}

std::strong_ordering IndexRelation::operator<=>(const IndexRelation& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  auto lhs = pairs();
  auto rhs = other.pairs();
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(),
                                                rhs.begin(), rhs.end());
}

std::size_t IndexRelation::hash() const {
  std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : bits_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

IndexRelation compose(const IndexRelation& r, const IndexRelation& s) {
  require_same_size(r, s, "compose");
  IndexRelation out(r.size());
  const auto words = r.words_per_row();
  for (Index x = 0; x < s.size(); ++x) {
    auto* dst = out.row_bits(x);
    const auto* via = s.row_bits(x);
    for (std::size_t w = 0; w < words; ++w) {
      auto word = via[w];
      while (word != 0) {
        auto z = static_cast<Index>(w * 64) + static_cast<Index>(std::countr_zero(word));
        const auto* src = r.row_bits(z);
        for (std::size_t k = 0; k < words; ++k) dst[k] |= src[k];
        word &= word - 1;
      }
    }
  }
  return out;
}

IndexRelation transpose(const IndexRelation& r) {
  IndexRelation out(r.size());
  for (auto [a, b] : r.pairs()) out.insert(b, a);
  return out;
}

RelationClassification classify(const IndexRelation& r) {
  RelationClassification c;
  c.is_e0 = r.is_e0();
  c.is_symmetric = transpose(r) == r;
  c.contains_diagonal = IndexRelation::diagonal(r.size()).subset_of(r);
  c.is_idempotent = compose(r, r) == r;
  c.is_equivalence = c.is_symmetric && c.contains_diagonal && c.is_idempotent;
  return c;
}

IndexRelation conjugate(const IndexRelation& r, std::span<const Index> perm) {
  if (perm.size() != r.size()) {
    throw ValidationError("conjugate: permutation size mismatch");
  }
  IndexRelation out(r.size());
  for (auto [a, b] : r.pairs()) out.insert(perm[a], perm[b]);
  return out;
}

std::vector<IndexRelation> enumerate_e0(std::size_t k, std::size_t cap) {
  if (k == 0) throw ValidationError("enumerate_e0: size must be positive");
  if (k > cap) {
    throw BudgetError("enumerate_e0: size " + std::to_string(k) +
                      " exceeds cap " + std::to_string(cap));
  }
  const std::size_t cells = k * k;
  std::vector<IndexRelation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    IndexRelation r(k);
    for (std::size_t c = 0; c < cells; ++c) {
      if ((mask >> c) & 1U) r.insert(static_cast<Index>(c / k), static_cast<Index>(c % k));
    }
    if (r.is_e0()) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexRelation> closure(std::span<const IndexRelation> generators,
                                   std::size_t cap) {
  std::vector<IndexRelation> elements;
  if (generators.empty()) return elements;
  for (const auto& g : generators) require_same_size(generators.front(), g, "closure");

  std::unordered_set<IndexRelation, IndexRelationHash> seen;
  auto add = [&](IndexRelation r) {
    if (seen.insert(r).second) {
      if (elements.size() >= cap) {
        throw BudgetError("closure: more than " + std::to_string(cap) + " elements");
      }
      elements.push_back(std::move(r));
    }
  };
  for (const auto& g : generators) add(g);
  // Every element is a word in the generators; extending each word on the
  // right by every generator reaches all of them.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) add(compose(elements[i], g));
  }
  return elements;
}

bool is_composition_closed(std::span<const IndexRelation> elements) {
  std::unordered_set<IndexRelation, IndexRelationHash> members(elements.begin(),
                                                                elements.end());
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (a.size() != b.size() || !members.contains(compose(a, b))) return false;
    }
  }
  return true;
}

std::optional<IndexRelation> greatest_delta_element(
    std::span<const IndexRelation> elements) {
  if (!is_composition_closed(elements)) {
    throw ValidationError("greatest_delta_element: set is not closed under composition");
  }
  std::vector<const IndexRelation*> above_diagonal;
  for (const auto& p : elements) {
    if (IndexRelation::diagonal(p.size()).subset_of(p)) above_diagonal.push_back(&p);
  }
  if (above_diagonal.empty()) return std::nullopt;

  // For p, q above the diagonal, pq contains both p and q, so the product of
  // all of them dominates every one and stays in the set.
  IndexRelation top = *above_diagonal.front();
  for (const auto* q : above_diagonal) top = compose(top, *q);

  if (compose(top, top) != top) {
    throw InternalError("greatest_delta_element: result is not idempotent");
  }
  for (const auto* q : above_diagonal) {
    if (!q->subset_of(top)) {
      throw InternalError("greatest_delta_element: result is not an upper bound");
    }
  }
  return top;
}

std::vector<IndexRelation> invariant_under_symmetric_group(std::size_t k,
                                                           std::size_t cap) {
  auto candidates = enumerate_e0(k, cap);
  // The transposition (0 1) and the k-cycle generate the symmetric group.
  std::vector<Index> swap01(k), cycle(k);
  std::iota(swap01.begin(), swap01.end(), Index{0});
  if (k >= 2) std::swap(swap01[0], swap01[1]);
  for (std::size_t i = 0; i < k; ++i) cycle[i] = static_cast<Index>((i + 1) % k);

  std::vector<IndexRelation> out;
  for (auto& r : candidates) {
    if (conjugate(r, swap01) == r && conjugate(r, cycle) == r) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace roelcke::finrel
