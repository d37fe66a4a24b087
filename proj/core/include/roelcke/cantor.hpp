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

#ifndef ROELCKE_CANTOR_HPP
#define ROELCKE_CANTOR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roelcke/finrel.hpp"

namespace roelcke::cantor {

inline constexpr std::size_t kMaxDepth = 64;

// A finite binary word, naming the cylinder of all infinite sequences that
// extend it. The empty word names the whole space.
class Word {
 public:
  Word() = default;
  // Throws ValidationError on characters other than '0'/'1' or length > 64.
  // "e" is accepted as the empty word.
  static Word parse(std::string_view text);
  // The word of length `length` spelling `value` in binary, most significant
  // bit first.
  static Word from_bits(std::uint64_t value, std::size_t length);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  // Binary value of the word; the level-n index of a length-n word.
  std::uint64_t value() const { return bits_; }
  int at(std::size_t i) const { return static_cast<int>((bits_ >> (len_ - 1 - i)) & 1U); }

  Word prefix(std::size_t n) const;
  Word suffix_after(std::size_t n) const;
  Word child(int bit) const;
  Word parent() const { return prefix(len_ - 1); }
  bool is_prefix_of(const Word& other) const;
  Word concat(const Word& tail) const;

  // "e" for the empty word.
  std::string str() const;

  bool operator==(const Word&) const = default;
  // Lexicographic with '0' < '1' and a proper prefix first.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  Word(std::uint64_t bits, std::size_t len) : bits_(bits), len_(len) {}
  std::uint64_t bits_ = 0;
  std::size_t len_ = 0;
};

std::size_t common_prefix_length(const Word& a, const Word& b);
bool comparable(const Word& a, const Word& b);

struct CodeReport {
  bool antichain = true;
  bool complete = false;
  // Pairs (u, w) with u a prefix of w (including duplicates).
  std::vector<std::pair<Word, Word>> prefix_conflicts;
  // Kraft sum as numerator / 2^64; complete iff antichain and numerator == 2^64.
  unsigned __int128 kraft_numerator = 0;

  bool ok() const { return antichain && complete; }
  std::string kraft_string() const;
};

CodeReport validate_code(std::span<const Word> words);
bool is_antichain(std::span<const Word> words);
bool is_complete_code(std::span<const Word> words);

// A clopen subset of the Cantor space: a finite union of cylinders, kept as
// a sorted antichain with no sibling pair (w0, w1) both present.
class ClopenSet {
 public:
  ClopenSet() = default;
  // Canonicalizes; throws ValidationError when `words` is not an antichain.
  explicit ClopenSet(std::vector<Word> words);
  ClopenSet(std::initializer_list<Word> words);
  static ClopenSet whole() { return ClopenSet({Word()}); }
  static ClopenSet cylinder(const Word& w) { return ClopenSet({w}); }

  const std::vector<Word>& cylinders() const { return words_; }
  bool empty() const { return words_.empty(); }
  std::size_t max_length() const;

  // Membership of the cylinder `w`: true iff cyl(w) is contained in the set.
  bool covers(const Word& w) const;
  // True iff cyl(w) meets the set.
  bool meets(const Word& w) const;

  ClopenSet united(const ClopenSet& other) const;
  ClopenSet intersected(const ClopenSet& other) const;
  ClopenSet complement() const;
  ClopenSet minus(const ClopenSet& other) const { return intersected(other.complement()); }
  bool disjoint_from(const ClopenSet& other) const { return intersected(other).empty(); }
  bool subset_of(const ClopenSet& other) const { return minus(other).empty(); }

  bool operator==(const ClopenSet&) const = default;
  auto operator<=>(const ClopenSet&) const = default;

 private:
  std::vector<Word> words_;
};

/// Sorted, sibling-merged form of an antichain. Throws ValidationError when
/// the input is not an antichain.
ClopenSet canonicalize_clopen(std::span<const Word> words);

/// Splits the union of an antichain of cylinders into exactly k non-empty
/// disjoint pieces. The cylinders are sorted; while there are too many the
/// tail is merged into the k-th piece, while there are too few the
/// lexicographically last cylinder w is replaced by w0, w1.
std::vector<ClopenSet> split_clopen(std::span<const Word> cylinders, std::size_t k);
std::vector<ClopenSet> split_clopen(const ClopenSet& set, std::size_t k);

// A finite clopen partition of the Cantor space; block index = position.
class Partition {
 public:
  // Throws ValidationError unless the blocks are non-empty, pairwise
  // disjoint and cover the space.
  explicit Partition(std::vector<ClopenSet> blocks);
  static Partition level(std::size_t n);

  const std::vector<ClopenSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  const ClopenSet& operator[](std::size_t i) const { return blocks_[i]; }
  std::size_t max_length() const;
  bool refines(const Partition& coarser) const;
  // Block index of every level-m cylinder, for m >= max_length().
  std::vector<finrel::Index> block_of_level(std::size_t m) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<ClopenSet> blocks_;
};

Partition common_refinement(const Partition& a, const Partition& b);

/// Truncates a pair of level-m indices to level n.
finrel::Pair project_pair(std::size_t m, std::size_t n, finrel::Pair pair);

/// Image of a level-m relation under truncation to level n <= m.
finrel::IndexRelation project_relation(const finrel::IndexRelation& r,
                                       std::size_t m, std::size_t n);

/// Level-m relation whose pairs are all refinements of the pairs of a
/// level-n relation (n <= m).
finrel::IndexRelation refine_relation(const finrel::IndexRelation& r,
                                      std::size_t n, std::size_t m);

}  // namespace roelcke::cantor

#endif  // ROELCKE_CANTOR_HPP
