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

#ifndef ROELCKE_HOMEO_HPP
#define ROELCKE_HOMEO_HPP

#include <span>
#include <utility>
#include <vector>

#include "roelcke/cantor.hpp"
#include "roelcke/dyadic.hpp"
#include "roelcke/finrel.hpp"

namespace roelcke::homeo {

using cantor::ClopenSet;
using cantor::Partition;
using cantor::Word;

// d -> r: every point d.t is sent to r.t.
struct Rule {
  Word domain;
  Word range;

  bool operator==(const Rule&) const = default;
  auto operator<=>(const Rule&) const = default;
};

// A prefix-exchange homeomorphism of the Cantor space: a bijection between
// two complete prefix codes acting by prefix substitution. Always held in
// canonical form (sibling rules merged, sorted by domain word), so equality
// of values is equality of maps.
class PrefixMap {
 public:
  PrefixMap() : rules_{Rule{}} {}
  static PrefixMap identity() { return PrefixMap(); }

  const std::vector<Rule>& rules() const { return rules_; }
  std::vector<Word> domain_code() const;
  std::vector<Word> range_code() const;
  std::size_t max_domain_length() const;
  std::size_t max_range_length() const;

  // Image of the point-prefix `x` when x is long enough to fix a rule;
  // throws ValidationError when x is a proper prefix of a domain word.
  Word apply(const Word& x) const;
  // Image of the cylinder of `w` as a list of cylinders (one cylinder when
  // w extends a domain word).
  std::vector<Word> image_of_cylinder(const Word& w) const;

  bool operator==(const PrefixMap&) const = default;
  auto operator<=>(const PrefixMap&) const = default;

 private:
  friend PrefixMap canonicalize(std::vector<Rule> rules);
  explicit PrefixMap(std::vector<Rule> rules) : rules_(std::move(rules)) {}
  // Index of the rule whose domain word is a prefix of w, or npos.
  std::size_t rule_covering(const Word& w) const;

  std::vector<Rule> rules_;
};

/// Validates that both sides of `rules` are complete prefix codes and
/// returns the reduced, sorted form. Throws ValidationError otherwise.
PrefixMap canonicalize(std::vector<Rule> rules);

/// x -> f(g(x)).
PrefixMap compose(const PrefixMap& f, const PrefixMap& g);
PrefixMap invert(const PrefixMap& f);

ClopenSet image_clopen(const PrefixMap& f, const ClopenSet& set);

/// Pairs (a, b) with f(block a) meeting block b.
finrel::IndexRelation trace(const PrefixMap& f, const Partition& partition);
/// Trace on the canonical level-n partition, computed rule by rule.
finrel::IndexRelation trace_level(const PrefixMap& f, std::size_t n);

/// True iff f maps every block onto itself.
bool in_stabilizer(const PrefixMap& f, const Partition& partition);

/// sup over x of 2^-lcp(f(x), g(x)).
DyadicValue sup_distance(const PrefixMap& f, const PrefixMap& g);

/// Cylinder-to-cylinder rules carrying the union of `from` onto the union of
/// `to`: both lists are sorted, the last cylinder of the shorter list is
/// split until the counts agree, and the lists are paired in order.
std::vector<Rule> map_clopen(std::span<const Word> from, std::span<const Word> to);
std::vector<Rule> map_clopen(const ClopenSet& from, const ClopenSet& to);

}  // namespace roelcke::homeo

#endif  // ROELCKE_HOMEO_HPP
