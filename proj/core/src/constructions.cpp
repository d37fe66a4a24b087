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

#include "roelcke/constructions.hpp"

#include <map>
#include <string>

#include "roelcke/error.hpp"

namespace roelcke::constructions {

using cantor::Word;
using finrel::Index;
using homeo::Rule;

namespace {

void append(std::vector<Rule>& rules, const std::vector<Rule>& more) {
  rules.insert(rules.end(), more.begin(), more.end());
}

void require_relation(const Partition& partition, const IndexRelation& r, const char* what) {
  if (r.size() != partition.size()) {
    throw ValidationError(std::string(what) + ": relation size " + std::to_string(r.size()) +
                          " does not match " + std::to_string(partition.size()) + " blocks");
  }
  if (!r.is_e0()) {
    throw ValidationError(std::string(what) +
                          ": relation lacks full domain or range, so no map realizes it");
  }
}

ClopenSet union_of(const std::vector<ClopenSet>& sets) {
  std::vector<Word> words;
  for (const auto& s : sets) {
    words.insert(words.end(), s.cylinders().begin(), s.cylinders().end());
  }
  return ClopenSet(std::move(words));
}

}  // namespace

bool DoubleCosetCertificate::valid() const {
  return homeo::in_stabilizer(u, partition) && homeo::in_stabilizer(v, partition) &&
         homeo::compose(homeo::compose(homeo::invert(u), g), v) == f;
}

bool ClusterCertificate::valid(const RelationTower& r, const RelationTower& s) const {
  if (homeo::trace_level(f, refinement_level) != r.trace(refinement_level)) return false;
  if (homeo::trace_level(g, refinement_level) != s.trace(refinement_level)) return false;
  const auto rs = towers::product(r, s);
  return homeo::trace_level(homeo::compose(f, g), level) == rs.trace(level);
}

PrefixMap realize(const Partition& partition, const IndexRelation& r) {
  require_relation(partition, r, "realize");
  // W(a,b) subdivides U_a over the row of a; W'(a,b) subdivides U_b over the
  // column of b. Both in ascending index order.
  std::map<finrel::Pair, ClopenSet> source, target;
  for (Index a = 0; a < r.size(); ++a) {
    const auto row = r.row(a);
    auto pieces = cantor::split_clopen(partition[a], row.size());
    for (std::size_t i = 0; i < row.size(); ++i) source[{a, row[i]}] = std::move(pieces[i]);
  }
  for (Index b = 0; b < r.size(); ++b) {
    const auto column = r.column(b);
    auto pieces = cantor::split_clopen(partition[b], column.size());
    for (std::size_t i = 0; i < column.size(); ++i) target[{column[i], b}] = std::move(pieces[i]);
  }
  std::vector<Rule> rules;
  for (const auto& [pair, from] : source) append(rules, homeo::map_clopen(from, target.at(pair)));
  return homeo::canonicalize(std::move(rules));
}

JointRealization joint_realize(const Partition& partition, const IndexRelation& r,
                               const IndexRelation& s) {
  require_relation(partition, r, "joint_realize");
  require_relation(partition, s, "joint_realize");
  const auto k = static_cast<Index>(partition.size());

  // V(a,c,b) subdivides U_c over (a,c) in s and (c,b) in r, ordered by (a,b).
  // W(c,b) collects them over a, Y'(a,c) over b.
  std::map<finrel::Pair, std::vector<ClopenSet>> w_parts, y_prime_parts;
  for (Index c = 0; c < k; ++c) {
    const auto into = s.column(c);
    const auto out_of = r.row(c);
    auto pieces = cantor::split_clopen(partition[c], into.size() * out_of.size());
    std::size_t i = 0;
    for (Index a : into) {
      for (Index b : out_of) {
        w_parts[{c, b}].push_back(pieces[i]);
        y_prime_parts[{a, c}].push_back(std::move(pieces[i]));
        ++i;
      }
    }
  }

  // W'(c,b) subdivides U_b over the column of b in r; Y(a,c) subdivides U_a
  // over the row of a in s.
  std::map<finrel::Pair, ClopenSet> w_prime, y;
  for (Index b = 0; b < k; ++b) {
    const auto column = r.column(b);
    auto pieces = cantor::split_clopen(partition[b], column.size());
    for (std::size_t i = 0; i < column.size(); ++i) w_prime[{column[i], b}] = std::move(pieces[i]);
  }
  for (Index a = 0; a < k; ++a) {
    const auto row = s.row(a);
    auto pieces = cantor::split_clopen(partition[a], row.size());
    for (std::size_t i = 0; i < row.size(); ++i) y[{a, row[i]}] = std::move(pieces[i]);
  }

  std::vector<Rule> f_rules, g_rules;
  for (const auto& [pair, parts] : w_parts) {
    append(f_rules, homeo::map_clopen(union_of(parts), w_prime.at(pair)));
  }
  for (const auto& [pair, parts] : y_prime_parts) {
    append(g_rules, homeo::map_clopen(y.at(pair), union_of(parts)));
  }
  return {homeo::canonicalize(std::move(f_rules)), homeo::canonicalize(std::move(g_rules))};
}

DoubleCosetCertificate double_coset_witness(const Partition& partition, const PrefixMap& f,
                                            const PrefixMap& g) {
  const auto common = homeo::trace(f, partition);
  if (common != homeo::trace(g, partition)) {
    throw PreconditionError("double_coset_witness: traces differ, so f and g lie in different "
                            "double cosets");
  }
  std::vector<ClopenSet> f_images, g_images;
  for (const auto& block : partition.blocks()) {
    f_images.push_back(homeo::image_clopen(f, block));
    g_images.push_back(homeo::image_clopen(g, block));
  }
  // u carries f(U_a) n U_b onto g(U_a) n U_b for every pair of the trace.
  std::vector<Rule> rules;
  for (auto [a, b] : common.pairs()) {
    append(rules, homeo::map_clopen(f_images[a].intersected(partition[b]),
                                    g_images[a].intersected(partition[b])));
  }
  DoubleCosetCertificate cert{homeo::canonicalize(std::move(rules)), PrefixMap(), partition, f,
                              g};
  cert.v = homeo::compose(homeo::invert(g), homeo::compose(cert.u, f));
  if (!cert.valid()) throw InternalError("double_coset_witness: certificate failed to verify");
  return cert;
}

std::vector<PrefixMap> roelcke_net(const Partition& partition, std::size_t cap) {
  std::vector<PrefixMap> net;
  for (const auto& r : finrel::enumerate_e0(partition.size(), cap)) {
    net.push_back(realize(partition, r));
  }
  return net;
}

ClusterCertificate cluster_witness(const RelationTower& r, const RelationTower& s,
                                   std::size_t n) {
  if (!r.exact() || !s.exact()) {
    throw ValidationError("cluster_witness: the product of the two towers is not exact");
  }
  const auto rs = towers::product(r, s);
  if (!rs.exact()) {
    throw ValidationError("cluster_witness: the product of the two towers is not exact");
  }
  const auto target = rs.trace(n);
  for (std::size_t m = n; m <= towers::kMaxLevel; ++m) {
    const auto rm = r.trace(m);
    const auto sm = s.trace(m);
    if (cantor::project_relation(finrel::compose(rm, sm), m, n) != target) continue;
    auto [f, g] = joint_realize(Partition::level(m), rm, sm);
    ClusterCertificate cert{std::move(f), std::move(g), n, m};
    if (!cert.valid(r, s)) throw InternalError("cluster_witness: certificate failed to verify");
    return cert;
  }
  throw BudgetError("cluster_witness: no refinement level up to " +
                    std::to_string(towers::kMaxLevel) + " separates the product trace");
}

PrefixMap dense_orbit_witness(const ClopenSet& u1, const ClopenSet& u2, const ClopenSet& v1,
                              const ClopenSet& v2) {
  if (u1.empty()) throw PreconditionError("dense_orbit_witness: U1 is empty");
  if (u2.empty()) throw PreconditionError("dense_orbit_witness: U2 is empty");
  if (!u1.disjoint_from(u2)) throw PreconditionError("dense_orbit_witness: U1 and U2 intersect");
  const auto rest = u1.united(u2).complement();
  if (rest.empty()) throw PreconditionError("dense_orbit_witness: U1 and U2 cover the space");
  if (v1.empty()) throw PreconditionError("dense_orbit_witness: V1 is empty");
  if (v2.empty()) throw PreconditionError("dense_orbit_witness: V2 is empty");
  if (!v1.disjoint_from(v2)) throw PreconditionError("dense_orbit_witness: V1 and V2 intersect");

  // Shrunk targets leave the range complement non-empty.
  const auto t1 = ClopenSet::cylinder(v1.cylinders().front().child(0));
  const auto t2 = ClopenSet::cylinder(v2.cylinders().front().child(0));
  std::vector<Rule> rules;
  append(rules, homeo::map_clopen(u1, t1));
  append(rules, homeo::map_clopen(u2, t2));
  append(rules, homeo::map_clopen(rest, t1.united(t2).complement()));
  auto f = homeo::canonicalize(std::move(rules));
  if (!homeo::image_clopen(f, u1).subset_of(v1) || !homeo::image_clopen(f, u2).subset_of(v2)) {
    throw InternalError("dense_orbit_witness: containment failed to verify");
  }
  return f;
}

ConjugationWitness conjugation_witness(const PrefixMap& f, const ClopenSet& u,
                                       const ClopenSet& v) {
  if (u.empty()) throw PreconditionError("conjugation_witness: U is empty");
  const auto fu = homeo::image_clopen(f, u);
  if (!fu.disjoint_from(u)) throw PreconditionError("conjugation_witness: f(U) meets U");
  const auto domain_rest = u.united(fu).complement();
  if (domain_rest.empty()) {
    throw PreconditionError("conjugation_witness: U and f(U) cover the space");
  }
  if (v.empty()) throw PreconditionError("conjugation_witness: V is empty");
  if (!v.disjoint_from(u)) throw PreconditionError("conjugation_witness: V meets U");
  const auto range_rest = u.united(v).complement();
  if (range_rest.empty()) throw PreconditionError("conjugation_witness: U and V cover the space");

  std::vector<Rule> rules;
  for (const auto& w : u.cylinders()) rules.push_back({w, w});
  append(rules, homeo::map_clopen(fu, v));
  append(rules, homeo::map_clopen(domain_rest, range_rest));
  ConjugationWitness out{homeo::canonicalize(std::move(rules)), PrefixMap()};
  out.g = homeo::compose(homeo::compose(out.h, f), homeo::invert(out.h));
  if (homeo::image_clopen(out.h, u) != u || homeo::image_clopen(out.h, fu) != v ||
      homeo::image_clopen(out.g, u) != v) {
    throw InternalError("conjugation_witness: witness failed to verify");
  }
  return out;
}

}  // namespace roelcke::constructions
