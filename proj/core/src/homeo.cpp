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

#include "roelcke/homeo.hpp"

#include <algorithm>
#include <string>

#include "roelcke/error.hpp"

namespace roelcke::homeo {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool last_bit_is(const Word& w, int bit) { return !w.empty() && w.at(w.size() - 1) == bit; }

bool siblings(const Word& zero, const Word& one) {
  return zero.size() == one.size() && last_bit_is(zero, 0) && last_bit_is(one, 1) &&
         zero.parent() == one.parent();
}

// First n bits of a.t, reading only as much of t as needed.
Word prefix_of_concat(const Word& a, const Word& t, std::size_t n) {
  if (a.size() >= n) return a.prefix(n);
  return a.concat(t.prefix(n - a.size()));
}

void require_code(std::span<const Word> words, const char* side) {
  auto report = cantor::validate_code(words);
  if (!report.antichain) {
    throw ValidationError(std::string(side) + " words do not form an antichain: " +
                          report.prefix_conflicts.front().first.str() + " is a prefix of " +
                          report.prefix_conflicts.front().second.str());
  }
  if (!report.complete) {
    throw ValidationError(std::string(side) + " code is incomplete (Kraft sum " +
                          report.kraft_string() + ")");
  }
}

}  // namespace

PrefixMap canonicalize(std::vector<Rule> rules) {
  std::vector<Word> domain, range;
  for (const auto& r : rules) {
    domain.push_back(r.domain);
    range.push_back(r.range);
  }
  require_code(domain, "domain");
  require_code(range, "range");

  std::sort(rules.begin(), rules.end());
  std::vector<Rule> reduced;
  reduced.reserve(rules.size());
  for (auto& rule : rules) {
    reduced.push_back(rule);
    while (reduced.size() >= 2) {
      const Rule& a = reduced[reduced.size() - 2];
      const Rule& b = reduced[reduced.size() - 1];
      if (!siblings(a.domain, b.domain) || !siblings(a.range, b.range)) break;
      Rule merged{a.domain.parent(), a.range.parent()};
      reduced.pop_back();
      reduced.back() = merged;
    }
  }
  return PrefixMap(std::move(reduced));
}

std::vector<Word> PrefixMap::domain_code() const {
  std::vector<Word> out;
  for (const auto& r : rules_) out.push_back(r.domain);
  return out;
}

std::vector<Word> PrefixMap::range_code() const {
  std::vector<Word> out;
  for (const auto& r : rules_) out.push_back(r.range);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PrefixMap::max_domain_length() const {
  std::size_t m = 0;
  for (const auto& r : rules_) m = std::max(m, r.domain.size());
  return m;
}

std::size_t PrefixMap::max_range_length() const {
  std::size_t m = 0;
  for (const auto& r : rules_) m = std::max(m, r.range.size());
  return m;
}

std::size_t PrefixMap::rule_covering(const Word& w) const {
  auto it = std::upper_bound(rules_.begin(), rules_.end(), w,
                             [](const Word& x, const Rule& r) { return x < r.domain; });
  if (it == rules_.begin()) return npos;
  --it;
  return it->domain.is_prefix_of(w) ? static_cast<std::size_t>(it - rules_.begin()) : npos;
}

Word PrefixMap::apply(const Word& x) const {
  auto i = rule_covering(x);
  if (i == npos) {
    throw ValidationError("apply: " + x.str() + " is too short to fix a rule");
  }
  return rules_[i].range.concat(x.suffix_after(rules_[i].domain.size()));
}

std::vector<Word> PrefixMap::image_of_cylinder(const Word& w) const {
  if (auto i = rule_covering(w); i != npos) {
    return {rules_[i].range.concat(w.suffix_after(rules_[i].domain.size()))};
  }
  std::vector<Word> out;
  auto it = std::lower_bound(rules_.begin(), rules_.end(), w,
                             [](const Rule& r, const Word& x) { return r.domain < x; });
  for (; it != rules_.end() && w.is_prefix_of(it->domain); ++it) out.push_back(it->range);
  return out;
}

PrefixMap compose(const PrefixMap& f, const PrefixMap& g) {
  std::vector<Rule> rules;
  for (const auto& [d, r] : g.rules()) {
    // Refine g's range word r against f's domain code.
    const auto& fr = f.rules();
    auto it = std::upper_bound(fr.begin(), fr.end(), r,
                               [](const Word& x, const Rule& q) { return x < q.domain; });
    if (it != fr.begin() && std::prev(it)->domain.is_prefix_of(r)) {
      const auto& q = *std::prev(it);
      rules.push_back({d, q.range.concat(r.suffix_after(q.domain.size()))});
      continue;
    }
    for (auto jt = std::lower_bound(fr.begin(), fr.end(), r,
                                    [](const Rule& q, const Word& x) { return q.domain < x; });
         jt != fr.end() && r.is_prefix_of(jt->domain); ++jt) {
      rules.push_back({d.concat(jt->domain.suffix_after(r.size())), jt->range});
    }
  }
  return canonicalize(std::move(rules));
}

PrefixMap invert(const PrefixMap& f) {
  std::vector<Rule> rules;
  rules.reserve(f.rules().size());
  for (const auto& [d, r] : f.rules()) rules.push_back({r, d});
  return canonicalize(std::move(rules));
}

ClopenSet image_clopen(const PrefixMap& f, const ClopenSet& set) {
  std::vector<Word> words;
  for (const auto& w : set.cylinders()) {
    auto img = f.image_of_cylinder(w);
    words.insert(words.end(), img.begin(), img.end());
  }
  return ClopenSet(std::move(words));
}

finrel::IndexRelation trace(const PrefixMap& f, const Partition& partition) {
  finrel::IndexRelation out(partition.size());
  for (std::size_t a = 0; a < partition.size(); ++a) {
    auto image = image_clopen(f, partition[a]);
    for (std::size_t b = 0; b < partition.size(); ++b) {
      if (!image.disjoint_from(partition[b])) {
        out.insert(static_cast<finrel::Index>(a), static_cast<finrel::Index>(b));
      }
    }
  }
  return out;
}

finrel::IndexRelation trace_level(const PrefixMap& f, std::size_t n) {
  if (n > 24) throw BudgetError("trace_level: level exceeds cap");
  finrel::IndexRelation out(std::size_t{1} << n);
  for (const auto& [d, r] : f.rules()) {
    const std::size_t shortest = std::min(d.size(), r.size());
    const std::size_t free_bits = n > shortest ? n - shortest : 0;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << free_bits); ++t) {
      const Word tail = Word::from_bits(t, free_bits);
      const auto x = prefix_of_concat(d, tail, n);
      const auto y = prefix_of_concat(r, tail, n);
      out.insert(static_cast<finrel::Index>(x.value()), static_cast<finrel::Index>(y.value()));
    }
  }
  return out;
}

bool in_stabilizer(const PrefixMap& f, const Partition& partition) {
  return std::all_of(partition.blocks().begin(), partition.blocks().end(),
                     [&](const ClopenSet& block) { return image_clopen(f, block) == block; });
}

DyadicValue sup_distance(const PrefixMap& f, const PrefixMap& g) {
  DyadicValue best;
  for (const auto& [d, u] : f.rules()) {
    for (const auto& [e, v] : g.rules()) {
      if (!cantor::comparable(d, e)) continue;
      const Word& cell = d.size() >= e.size() ? d : e;
      // On cyl(cell): f(cell.s) = fu.s and g(cell.s) = gv.s.
      const Word fu = u.concat(cell.suffix_after(d.size()));
      const Word gv = v.concat(cell.suffix_after(e.size()));
      DyadicValue here;
      if (fu == gv) {
        continue;
      } else if (cantor::comparable(fu, gv)) {
        here = DyadicValue::power_of_two(-static_cast<int>(std::min(fu.size(), gv.size())));
      } else {
        here = DyadicValue::power_of_two(-static_cast<int>(cantor::common_prefix_length(fu, gv)));
      }
      best = std::max(best, here);
    }
  }
  return best;
}

std::vector<Rule> map_clopen(std::span<const Word> from, std::span<const Word> to) {
  if (from.empty() || to.empty()) throw ValidationError("map_clopen: empty clopen set");
  std::vector<Word> lhs(from.begin(), from.end());
  std::vector<Word> rhs(to.begin(), to.end());
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  if (!cantor::is_antichain(lhs) || !cantor::is_antichain(rhs)) {
    throw ValidationError("map_clopen: input is not an antichain");
  }
  auto grow = [](std::vector<Word>& words) {
    Word last = words.back();
    words.pop_back();
    words.push_back(last.child(0));
    words.push_back(last.child(1));
  };
  while (lhs.size() < rhs.size()) grow(lhs);
  while (rhs.size() < lhs.size()) grow(rhs);
  std::vector<Rule> rules;
  rules.reserve(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) rules.push_back({lhs[i], rhs[i]});
  return rules;
}

std::vector<Rule> map_clopen(const ClopenSet& from, const ClopenSet& to) {
  return map_clopen(from.cylinders(), to.cylinders());
}

}  // namespace roelcke::homeo
