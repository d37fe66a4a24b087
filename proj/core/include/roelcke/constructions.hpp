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

#ifndef ROELCKE_CONSTRUCTIONS_HPP
#define ROELCKE_CONSTRUCTIONS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "roelcke/cantor.hpp"
#include "roelcke/finrel.hpp"
#include "roelcke/homeo.hpp"
#include "roelcke/towers.hpp"

namespace roelcke::constructions {

using cantor::ClopenSet;
using cantor::Partition;
using finrel::IndexRelation;
using homeo::PrefixMap;
using towers::RelationTower;

// f = u^-1 . g . v with u, v preserving every block of the partition.
struct DoubleCosetCertificate {
  PrefixMap u;
  PrefixMap v;
  Partition partition;
  PrefixMap f;
  PrefixMap g;

  /// Re-checks all three equations exactly.
  bool valid() const;
};

// Maps f, g whose traces at level m match those of R and S, and whose
// composite has the trace of RS at level n.
struct ClusterCertificate {
  PrefixMap f;
  PrefixMap g;
  std::size_t level = 0;             // n
  std::size_t refinement_level = 0;  // m >= n

  bool valid(const RelationTower& r, const RelationTower& s) const;
};

struct JointRealization {
  PrefixMap f;
  PrefixMap g;
};

struct ConjugationWitness {
  PrefixMap h;
  PrefixMap g;  // h . f . h^-1
};

/// A homeomorphism whose trace on `partition` is exactly r. Each block U_a is
/// split into pieces W(a,b), each block U_b into pieces W'(a,b), one per
/// pair of r, and W(a,b) is carried onto W'(a,b).
/// Throws ValidationError unless r has full domain and range.
PrefixMap realize(const Partition& partition, const IndexRelation& r);

/// Homeomorphisms f, g with traces r and s on `partition` whose composite
/// f . g has trace compose(r, s).
JointRealization joint_realize(const Partition& partition, const IndexRelation& r,
                               const IndexRelation& s);

/// Throws PreconditionError when the traces of f and g on the partition
/// differ; the certificate is verified before it is returned.
DoubleCosetCertificate double_coset_witness(const Partition& partition, const PrefixMap& f,
                                            const PrefixMap& g);

/// One realization per relation with full domain and range, in canonical
/// order. Throws BudgetError when the block count exceeds the enumeration cap.
std::vector<PrefixMap> roelcke_net(const Partition& partition,
                                   std::size_t cap = finrel::kDefaultEnumerationCap);

/// Requires the product of r and s to be exact (ValidationError otherwise).
/// Searches the least m >= n at which the composed level-m traces project
/// onto the level-n trace of rs, then realizes those traces jointly.
ClusterCertificate cluster_witness(const RelationTower& r, const RelationTower& s,
                                   std::size_t n);

/// A homeomorphism f with f(u1) inside v1 and f(u2) inside v2.
PrefixMap dense_orbit_witness(const ClopenSet& u1, const ClopenSet& u2, const ClopenSet& v1,
                              const ClopenSet& v2);

/// h fixing u pointwise and carrying f(u) onto v, and g = h f h^-1, so that
/// g(u) = v.
ConjugationWitness conjugation_witness(const PrefixMap& f, const ClopenSet& u,
                                       const ClopenSet& v);

}  // namespace roelcke::constructions

#endif  // ROELCKE_CONSTRUCTIONS_HPP
