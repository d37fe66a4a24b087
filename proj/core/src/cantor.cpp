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

#include "roelcke/cantor.hpp"

#include <algorithm>

#include "roelcke/error.hpp"

namespace roelcke::cantor {

namespace {

constexpr std::size_t kMaxPartitionLevel = 24;

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t shift_right(std::uint64_t v, std::size_t n) { return n >= 64 ? 0 : v >> n; }
std::uint64_t shift_left(std::uint64_t v, std::size_t n) { return n >= 64 ? 0 : v << n; }

// Complement of the union of `words` (sorted, antichain, all extending
// `root`) inside cyl(root).
void complement_within(const Word& root, std::span<const Word> words,
                       std::vector<Word>& out) {
  if (words.empty()) {
    out.push_back(root);
    return;
  }
  if (words.size() == 1 && words.front() == root) return;
  if (root.size() >= kMaxDepth) return;
  const Word left = root.child(0);
  auto split = std::partition_point(words.begin(), words.end(),
                                    [&](const Word& w) { return left.is_prefix_of(w); });
  complement_within(left, words.subspan(0, static_cast<std::size_t>(split - words.begin())), out);
  complement_within(root.child(1), words.subspan(static_cast<std::size_t>(split - words.begin())), out);
}

}  // namespace

// ---- Word ----

Word Word::parse(std::string_view text) {
  if (text == "e") return Word();
  if (text.empty()) throw ValidationError("empty word must be written as 'e'");
  if (text.size() > kMaxDepth) {
    throw ValidationError("word longer than " + std::to_string(kMaxDepth) + ": " +
                          std::string(text));
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw ValidationError("bad word: " + std::string(text));
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Word(bits, text.size());
}

Word Word::from_bits(std::uint64_t value, std::size_t length) {
  if (length > kMaxDepth) throw BudgetError("word length exceeds depth cap");
  return Word(value & low_mask(length), length);
}

Word Word::prefix(std::size_t n) const {
  if (n > len_) throw ValidationError("prefix longer than word");
  return Word(shift_right(bits_, len_ - n), n);
}

Word Word::suffix_after(std::size_t n) const {
  if (n > len_) throw ValidationError("suffix offset past end of word");
  return Word(bits_ & low_mask(len_ - n), len_ - n);
}

Word Word::child(int bit) const {
  if (len_ >= kMaxDepth) {
    throw BudgetError("word depth cap " + std::to_string(kMaxDepth) + " exceeded");
  }
  return Word((bits_ << 1) | static_cast<std::uint64_t>(bit & 1), len_ + 1);
}

bool Word::is_prefix_of(const Word& other) const {
  return len_ <= other.len_ && shift_right(other.bits_, other.len_ - len_) == bits_;
}

Word Word::concat(const Word& tail) const {
  if (len_ + tail.len_ > kMaxDepth) {
    throw BudgetError("word depth cap " + std::to_string(kMaxDepth) + " exceeded");
  }
  return Word(shift_left(bits_, tail.len_) | tail.bits_, len_ + tail.len_);
}

std::string Word::str() const {
  if (len_ == 0) return "e";
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) s[i] = static_cast<char>('0' + at(i));
  return s;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  const std::size_t common = std::min(len_, other.len_);
  const auto a = prefix(common).bits_;
  const auto b = other.prefix(common).bits_;
  if (a != b) return a <=> b;
  return len_ <=> other.len_;
}

std::size_t common_prefix_length(const Word& a, const Word& b) {
  std::size_t n = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (n < limit && a.at(n) == b.at(n)) ++n;
  return n;
}

bool comparable(const Word& a, const Word& b) {
  return a.is_prefix_of(b) || b.is_prefix_of(a);
}

// ---- codes ----

std::string CodeReport::kraft_string() const {
  // numerator / 2^64, reduced.
  if (kraft_numerator == 0) return "0";
  unsigned __int128 num = kraft_numerator;
  int exp = 64;
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  std::string digits;
  for (auto n = num; n > 0; n /= 10) digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(n % 10)));
  if (exp == 0) return digits;
  if (exp == 64) return digits + "/2^64";
  return digits + "/" + std::to_string(std::uint64_t{1} << exp);
}

CodeReport validate_code(std::span<const Word> words) {
  CodeReport report;
  std::vector<Word> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end());
  // In sorted order every extension of w follows w directly, so conflicts
  // are found by scanning forward while the prefix relation holds.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size() && sorted[i].is_prefix_of(sorted[j]); ++j) {
      report.antichain = false;
      report.prefix_conflicts.emplace_back(sorted[i], sorted[j]);
    }
  }
  for (const auto& w : sorted) {
    report.kraft_numerator += static_cast<unsigned __int128>(1) << (64 - w.size());
  }
  report.complete =
      report.antichain && report.kraft_numerator == (static_cast<unsigned __int128>(1) << 64);
  return report;
}

bool is_antichain(std::span<const Word> words) { return validate_code(words).antichain; }
bool is_complete_code(std::span<const Word> words) { return validate_code(words).ok(); }

// ---- ClopenSet ----

ClopenSet canonicalize_clopen(std::span<const Word> words) {
  return ClopenSet(std::vector<Word>(words.begin(), words.end()));
}

ClopenSet::ClopenSet(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (words[i].is_prefix_of(words[i + 1])) {
      throw ValidationError("not an antichain: " + words[i].str() + " is a prefix of " +
                            words[i + 1].str());
    }
  }
  // Stack merge: siblings are adjacent once their subtrees have collapsed.
  for (auto& w : words) {
    words_.push_back(w);
    while (words_.size() >= 2) {
      const Word& b = words_[words_.size() - 1];
      const Word& a = words_[words_.size() - 2];
      if (a.size() == b.size() && !a.empty() && a.at(a.size() - 1) == 0 &&
          a.parent() == b.parent() && b.at(b.size() - 1) == 1) {
        Word p = a.parent();
        words_.pop_back();
        words_.back() = p;
      } else {
        break;
      }
    }
  }
}

ClopenSet::ClopenSet(std::initializer_list<Word> words)
    : ClopenSet(std::vector<Word>(words)) {}

std::size_t ClopenSet::max_length() const {
  std::size_t m = 0;
  for (const auto& w : words_) m = std::max(m, w.size());
  return m;
}

bool ClopenSet::covers(const Word& w) const {
  return intersected(ClopenSet::cylinder(w)) == ClopenSet::cylinder(w);
}

bool ClopenSet::meets(const Word& w) const {
  return std::any_of(words_.begin(), words_.end(),
                     [&](const Word& u) { return comparable(u, w); });
}

ClopenSet ClopenSet::united(const ClopenSet& other) const {
  auto words = minus(other).words_;
  words.insert(words.end(), other.words_.begin(), other.words_.end());
  return ClopenSet(std::move(words));
}

ClopenSet ClopenSet::intersected(const ClopenSet& other) const {
  std::vector<Word> out;
  for (const auto& a : words_) {
    for (const auto& b : other.words_) {
      if (a.is_prefix_of(b)) {
        out.push_back(b);
      } else if (b.is_prefix_of(a)) {
        out.push_back(a);
      }
    }
  }
  return ClopenSet(std::move(out));
}

ClopenSet ClopenSet::complement() const {
  std::vector<Word> out;
  complement_within(Word(), words_, out);
  return ClopenSet(std::move(out));
}

// ---- splitting ----

std::vector<ClopenSet> split_clopen(std::span<const Word> cylinders, std::size_t k) {
  if (cylinders.empty()) throw ValidationError("split_clopen: empty clopen set");
  if (k == 0) throw ValidationError("split_clopen: piece count must be positive");
  std::vector<Word> words(cylinders.begin(), cylinders.end());
  std::sort(words.begin(), words.end());
  if (!is_antichain(words)) throw ValidationError("split_clopen: not an antichain");

  while (words.size() < k) {
    Word last = words.back();
    words.pop_back();
    words.push_back(last.child(0));
    words.push_back(last.child(1));
  }
  std::vector<ClopenSet> pieces;
  pieces.reserve(k);
  for (std::size_t i = 0; i + 1 < k; ++i) pieces.push_back(ClopenSet::cylinder(words[i]));
  pieces.emplace_back(std::vector<Word>(words.begin() + static_cast<std::ptrdiff_t>(k - 1),
                                        words.end()));
  return pieces;
}

std::vector<ClopenSet> split_clopen(const ClopenSet& set, std::size_t k) {
  return split_clopen(set.cylinders(), k);
}

// ---- Partition ----

Partition::Partition(std::vector<ClopenSet> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ValidationError("partition has no blocks");
  std::vector<Word> all;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) {
      throw ValidationError("partition block " + std::to_string(i) + " is empty");
    }
    all.insert(all.end(), blocks_[i].cylinders().begin(), blocks_[i].cylinders().end());
  }
  auto report = validate_code(all);
  if (!report.antichain) {
    throw ValidationError("partition blocks overlap at " +
                          report.prefix_conflicts.front().first.str() + " / " +
                          report.prefix_conflicts.front().second.str());
  }
  if (!report.complete) {
    throw ValidationError("partition does not cover the space (Kraft sum " +
                          report.kraft_string() + ")");
  }
}

Partition Partition::level(std::size_t n) {
  if (n > kMaxPartitionLevel) {
    throw BudgetError("partition level " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxPartitionLevel));
  }
  std::vector<ClopenSet> blocks;
  blocks.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    blocks.push_back(ClopenSet::cylinder(Word::from_bits(v, n)));
  }
  return Partition(std::move(blocks));
}

std::size_t Partition::max_length() const {
  std::size_t m = 0;
  for (const auto& b : blocks_) m = std::max(m, b.max_length());
  return m;
}

bool Partition::refines(const Partition& coarser) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](const ClopenSet& b) {
    return std::any_of(coarser.blocks_.begin(), coarser.blocks_.end(),
                       [&](const ClopenSet& c) { return b.subset_of(c); });
  });
}

std::vector<finrel::Index> Partition::block_of_level(std::size_t m) const {
  if (m < max_length()) throw ValidationError("block_of_level: level below partition depth");
  if (m > kMaxPartitionLevel) throw BudgetError("block_of_level: level exceeds cap");
  std::vector<finrel::Index> out(std::size_t{1} << m, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (const auto& w : blocks_[i].cylinders()) {
      const std::uint64_t first = w.value() << (m - w.size());
      const std::uint64_t count = std::uint64_t{1} << (m - w.size());
      for (std::uint64_t j = 0; j < count; ++j) out[first + j] = static_cast<finrel::Index>(i);
    }
  }
  return out;
}

Partition common_refinement(const Partition& a, const Partition& b) {
  std::vector<ClopenSet> blocks;
  for (const auto& u : a.blocks()) {
    for (const auto& v : b.blocks()) {
      auto meet = u.intersected(v);
      if (!meet.empty()) blocks.push_back(std::move(meet));
    }
  }
  return Partition(std::move(blocks));
}

finrel::Pair project_pair(std::size_t m, std::size_t n, finrel::Pair pair) {
  if (n > m) throw ValidationError("project_pair: target level above source level");
  if (m > kMaxPartitionLevel) throw ValidationError("project_pair: level out of range");
  const std::uint64_t bound = std::uint64_t{1} << m;
  if (pair.first >= bound || pair.second >= bound) {
    throw ValidationError("project_pair: index out of range for level " + std::to_string(m));
  }
  const auto shift = static_cast<unsigned>(m - n);
  return {pair.first >> shift, pair.second >> shift};
}

finrel::IndexRelation project_relation(const finrel::IndexRelation& r, std::size_t m,
                                       std::size_t n) {
  if (r.size() != (std::size_t{1} << m)) {
    throw ValidationError("project_relation: relation size does not match level");
  }
  finrel::IndexRelation out(std::size_t{1} << n);
  for (auto p : r.pairs()) {
    auto q = project_pair(m, n, p);
    out.insert(q.first, q.second);
  }
  return out;
}

finrel::IndexRelation refine_relation(const finrel::IndexRelation& r, std::size_t n,
                                      std::size_t m) {
  if (n > m) throw ValidationError("refine_relation: target level below source level");
  if (m > kMaxPartitionLevel) throw BudgetError("refine_relation: level exceeds cap");
  if (r.size() != (std::size_t{1} << n)) {
    throw ValidationError("refine_relation: relation size does not match level");
  }
  finrel::IndexRelation out(std::size_t{1} << m);
  const auto shift = static_cast<unsigned>(m - n);
  const finrel::Index span = finrel::Index{1} << shift;
  for (auto [a, b] : r.pairs()) {
    for (finrel::Index i = 0; i < span; ++i)
      for (finrel::Index j = 0; j < span; ++j) out.insert((a << shift) + i, (b << shift) + j);
  }
  return out;
}

}  // namespace roelcke::cantor
