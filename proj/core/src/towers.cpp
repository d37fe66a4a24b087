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

#include "roelcke/towers.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_map>

#include "roelcke/error.hpp"

namespace roelcke::towers {

using cantor::Word;

struct RelationTower::Node {
  Kind kind = Kind::clopen;
  bool exact = true;
  std::size_t seed_level = 0;
  std::optional<IndexRelation> seed;
  std::optional<PrefixMap> map;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  std::size_t budget = 0;

  mutable std::mutex memo_mutex;
  mutable std::unordered_map<std::size_t, IndexRelation> memo;
};

namespace {

using Node = RelationTower::Node;

void require_level(std::size_t n) {
  if (n > kMaxLevel) {
    throw BudgetError("tower level " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxLevel));
  }
}

std::optional<std::size_t> level_limit(const Node& node) {
  switch (node.kind) {
    case Kind::clopen:
    case Kind::graph:
      return std::nullopt;
    case Kind::product:
      return node.budget;
    case Kind::involution:
      return level_limit(*node.lhs);
  }
  return std::nullopt;
}

IndexRelation trace_of(const Node& node, std::size_t n);

IndexRelation compute_trace(const Node& node, std::size_t n) {
  switch (node.kind) {
    case Kind::clopen:
      if (n >= node.seed_level) return cantor::refine_relation(*node.seed, node.seed_level, n);
      return cantor::project_relation(*node.seed, node.seed_level, n);
    case Kind::graph:
      return homeo::trace_level(*node.map, n);
    case Kind::involution:
      return finrel::transpose(trace_of(*node.lhs, n));
    case Kind::product: {
      if (n > node.budget) {
        throw BudgetError("level " + std::to_string(n) + " above product budget " +
                          std::to_string(node.budget));
      }
      const auto b = node.budget;
      return cantor::project_relation(
          finrel::compose(trace_of(*node.lhs, b), trace_of(*node.rhs, b)), b, n);
    }
  }
  throw InternalError("unknown tower kind");
}

IndexRelation trace_of(const Node& node, std::size_t n) {
  require_level(n);
  {
    std::lock_guard lock(node.memo_mutex);
    if (auto it = node.memo.find(n); it != node.memo.end()) return it->second;
  }
  auto value = compute_trace(node, n);
  std::lock_guard lock(node.memo_mutex);
  return node.memo.emplace(n, std::move(value)).first->second;
}

// Level-m indices under a cylinder w, |w| <= m.
template <typename Fn>
void for_each_index_under(const Word& w, std::size_t m, Fn&& fn) {
  const auto shift = m - w.size();
  const std::uint64_t first = w.value() << shift;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << shift); ++i) {
    fn(static_cast<finrel::Index>(first + i));
  }
}

// Exact clopen seed of the image of a clopen tower under id x g (left) or
// g^-1 x id (right).
RelationTower translate_clopen(const PrefixMap& g, std::size_t s, const IndexRelation& seed,
                               Side side) {
  const PrefixMap moving = side == Side::left ? g : homeo::invert(g);
  std::vector<std::vector<Word>> images(seed.size());
  std::size_t m = s;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    images[i] = moving.image_of_cylinder(Word::from_bits(i, s));
    for (const auto& w : images[i]) m = std::max(m, w.size());
  }
  require_level(m);
  IndexRelation out(std::size_t{1} << m);
  for (auto [a, b] : seed.pairs()) {
    const auto fixed = Word::from_bits(side == Side::left ? a : b, s);
    const auto& moved = images[side == Side::left ? b : a];
    for_each_index_under(fixed, m, [&](finrel::Index x) {
      for (const auto& w : moved) {
        for_each_index_under(w, m, [&](finrel::Index y) {
          if (side == Side::left) {
            out.insert(x, y);
          } else {
            out.insert(y, x);
          }
        });
      }
    });
  }
  return RelationTower::clopen(m, std::move(out));
}

}  // namespace

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::clopen:
      return "clopen";
    case Kind::graph:
      return "graph";
    case Kind::product:
      return "product";
    case Kind::involution:
      return "involution";
  }
  return "?";
}

RelationTower RelationTower::clopen(std::size_t seed_level, IndexRelation seed) {
  require_level(seed_level);
  if (seed.size() != (std::size_t{1} << seed_level)) {
    throw ValidationError("clopen tower: seed size " + std::to_string(seed.size()) +
                          " does not match level " + std::to_string(seed_level));
  }
  if (!seed.is_e0()) {
    throw ValidationError("clopen tower: seed must have full domain and range");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::clopen;
  node->seed_level = seed_level;
  node->seed = std::move(seed);
  return RelationTower(std::move(node));
}

RelationTower RelationTower::graph(PrefixMap f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::graph;
  node->map = std::move(f);
  return RelationTower(std::move(node));
}

Kind RelationTower::kind() const { return node_->kind; }
bool RelationTower::exact() const { return node_->exact; }
std::optional<std::size_t> RelationTower::budget() const { return level_limit(*node_); }

IndexRelation RelationTower::trace(std::size_t n) const { return trace_of(*node_, n); }

std::size_t RelationTower::seed_level() const {
  if (node_->kind != Kind::clopen) throw ValidationError("tower is not clopen");
  return node_->seed_level;
}

const IndexRelation& RelationTower::seed() const {
  if (node_->kind != Kind::clopen) throw ValidationError("tower is not clopen");
  return *node_->seed;
}

const PrefixMap& RelationTower::map() const {
  if (node_->kind != Kind::graph) throw ValidationError("tower is not a graph");
  return *node_->map;
}

RelationTower involute(const RelationTower& t) {
  switch (t.kind()) {
    case Kind::clopen:
      return RelationTower::clopen(t.seed_level(), finrel::transpose(t.seed()));
    case Kind::graph:
      return RelationTower::graph(homeo::invert(t.map()));
    case Kind::involution:
      return RelationTower(t.node_->lhs);
    case Kind::product:
      break;
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::involution;
  node->exact = t.exact();
  node->lhs = t.node_;
  return RelationTower(std::move(node));
}

RelationTower product(const RelationTower& t1, const RelationTower& t2, std::size_t budget) {
  require_level(budget);
  if (t1.kind() == Kind::graph && t2.kind() == Kind::graph) {
    return RelationTower::graph(homeo::compose(t1.map(), t2.map()));
  }
  if (t1.kind() == Kind::clopen && t2.kind() == Kind::clopen) {
    const auto m = std::max(t1.seed_level(), t2.seed_level());
    return RelationTower::clopen(
        m, finrel::compose(cantor::refine_relation(t1.seed(), t1.seed_level(), m),
                           cantor::refine_relation(t2.seed(), t2.seed_level(), m)));
  }
  // Exact towers are clopen or graph, so one graph side leaves a clopen
  // other side here.
  if (t1.kind() == Kind::graph && t2.exact()) {
    return translate_clopen(t1.map(), t2.seed_level(), t2.seed(), Side::left);
  }
  if (t2.kind() == Kind::graph && t1.exact()) {
    return translate_clopen(t2.map(), t1.seed_level(), t1.seed(), Side::right);
  }
  return approximate_product(t1, t2, budget);
}

RelationTower approximate_product(const RelationTower& t1, const RelationTower& t2,
                                  std::size_t budget) {
  require_level(budget);
  for (const auto* t : {&t1, &t2}) {
    if (auto limit = t->budget(); limit && *limit < budget) {
      throw BudgetError("product budget " + std::to_string(budget) +
                        " above operand budget " + std::to_string(*limit));
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::product;
  node->exact = false;
  node->lhs = t1.node_;
  node->rhs = t2.node_;
  node->budget = budget;
  return RelationTower(std::move(node));
}

RelationTower translate(const PrefixMap& g, const RelationTower& t, Side side) {
  const auto budget = t.budget().value_or(kMaxLevel);
  return side == Side::left ? product(RelationTower::graph(g), t, budget)
                            : product(t, RelationTower::graph(g), budget);
}

IndexRelation trace_at(const RelationTower& t, std::size_t level) { return t.trace(level); }

IndexRelation trace_at(const RelationTower& t, const cantor::Partition& partition) {
  const auto m = partition.max_length();
  require_level(m);
  const auto block = partition.block_of_level(m);
  IndexRelation out(partition.size());
  for (auto [a, b] : t.trace(m).pairs()) out.insert(block[a], block[b]);
  return out;
}

bool same_neighborhood(const RelationTower& a, const RelationTower& b,
                       const cantor::Partition& partition) {
  return trace_at(a, partition) == trace_at(b, partition);
}

bool same_neighborhood(const RelationTower& a, const RelationTower& b, std::size_t level) {
  return a.trace(level) == b.trace(level);
}

HausdorffBounds hausdorff_bounds(const RelationTower& a, const RelationTower& b,
                                 std::size_t n) {
  if (!a.exact() || !b.exact()) {
    throw ValidationError("hausdorff_bounds: both towers must be exact");
  }
  const auto lhs = a.trace(n).pairs();
  const auto rhs = b.trace(n).pairs();
  // Distances in units of 2^-n: distinct level-n cells x, y are 2^-lcp apart,
  // i.e. 2^(bit_width(x ^ y)) units.
  auto cell = [](finrel::Index x, finrel::Index y) -> std::uint64_t {
    return x == y ? 0 : std::uint64_t{1} << std::bit_width(x ^ y);
  };
  auto directed = [&](const std::vector<finrel::Pair>& from,
                      const std::vector<finrel::Pair>& to) {
    std::uint64_t worst = 0;
    for (auto [x, y] : from) {
      std::uint64_t best = UINT64_MAX;
      for (auto [u, v] : to) best = std::min(best, cell(x, u) + cell(y, v));
      worst = std::max(worst, best);
    }
    return worst;
  };
  const auto units = std::max(directed(lhs, rhs), directed(rhs, lhs));
  HausdorffBounds out;
  out.lower = DyadicValue::from_parts(units, static_cast<int>(n));
  out.upper = out.lower + DyadicValue::power_of_two(1 - static_cast<int>(n));
  return out;
}

CoherenceReport check_coherence(std::span<const IndexRelation> traces) {
  CoherenceReport report;
  auto fail = [&](std::size_t n, std::string reason) {
    report.ok = false;
    report.failed_level = n;
    report.reason = std::move(reason);
    return report;
  };
  for (std::size_t n = 0; n < traces.size(); ++n) {
    if (traces[n].size() != (std::size_t{1} << n)) return fail(n, "wrong size for level");
    if (!traces[n].is_e0()) return fail(n, "trace lacks full domain or range");
    if (n + 1 < traces.size() && cantor::project_relation(traces[n + 1], n + 1, n) != traces[n]) {
      return fail(n, "trace differs from projection of the next level");
    }
  }
  return report;
}

CoherenceReport check_coherence(const RelationTower& t, std::size_t levels) {
  require_level(levels);
  std::vector<IndexRelation> traces;
  for (std::size_t n = 0; n <= levels; ++n) {
    try {
      traces.push_back(t.trace(n));
    } catch (const BudgetError& e) {
      return CoherenceReport{false, n, e.what()};
    }
  }
  return check_coherence(traces);
}

}  // namespace roelcke::towers
