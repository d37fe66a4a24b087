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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "roelcke/error.hpp"
#include "roelcke/finrel.hpp"
#include "support/generators.hpp"
#include "support/printers.hpp"
#include "support/oracles.hpp"

namespace roelcke::finrel {
namespace {

IndexRelation rel(std::size_t k, std::initializer_list<Pair> pairs) { return IndexRelation(k, pairs); }

const IndexRelation kSwap2 = rel(2, {{0, 1}, {1, 0}});

TEST(IndexRelation, CanonicalPairsAndQueries) {
  IndexRelation r(3);
  r.insert(2, 0);
  r.insert(0, 1);
  r.insert(2, 0);
  EXPECT_EQ(r.pairs(), (std::vector<Pair>{{0, 1}, {2, 0}}));
  EXPECT_EQ(r.pair_count(), 2U);
  EXPECT_EQ(r.row(2), std::vector<Index>{0});
  EXPECT_EQ(r.column(1), std::vector<Index>{0});
  EXPECT_FALSE(r.has_full_domain());
  EXPECT_THROW(r.insert(3, 0), ValidationError);
  EXPECT_THROW(IndexRelation(0), ValidationError);
}

TEST(IndexRelation, WideRelationsSpanSeveralWords) {
  const auto d = IndexRelation::diagonal(130);
  EXPECT_EQ(d.pair_count(), 130U);
  EXPECT_TRUE(classify(d).is_equivalence);
  const auto f = IndexRelation::full(70);
  EXPECT_EQ(compose(f, IndexRelation::diagonal(70)), f);
  EXPECT_EQ(compose(d, d), d);
  EXPECT_EQ(f.pair_count(), 4900U);
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(IndexRelation::diagonal(2), kSwap2), kSwap2);
  EXPECT_EQ(compose(kSwap2, rel(2, {{0, 0}, {0, 1}, {1, 0}})), rel(2, {{0, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(compose(IndexRelation::full(2), IndexRelation::full(2)), IndexRelation::full(2));
  EXPECT_THROW(compose(IndexRelation::full(2), IndexRelation::full(3)), ValidationError);
}

TEST(Compose, SecondArgumentActsFirst) {
  const auto r = rel(3, {{1, 2}});
  const auto s = rel(3, {{0, 1}});
  EXPECT_EQ(compose(r, s), rel(3, {{0, 2}}));
  EXPECT_TRUE(compose(s, r).empty());
}

TEST(Compose, MatchesWitnessSearchOnAllPairsK2) {
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const auto ma = oracle::mask_matrix(2, a);
      const auto mb = oracle::mask_matrix(2, b);
      EXPECT_EQ(compose(oracle::from_matrix(ma), oracle::from_matrix(mb)),
                oracle::from_matrix(oracle::compose(ma, mb)));
    }
  }
}

TEST(Compose, MatchesWitnessSearchRandomized) {
  gen::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto k = gen::uniform(rng, 1, 9);
    const auto r = gen::random_relation(rng, k, 0.3);
    const auto s = gen::random_relation(rng, k, 0.3);
    EXPECT_EQ(compose(r, s),
              oracle::from_matrix(oracle::compose(oracle::to_matrix(r), oracle::to_matrix(s))));
  }
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(IndexRelation::diagonal(3)), IndexRelation::diagonal(3));
  EXPECT_EQ(transpose(rel(2, {{0, 1}, {1, 1}})), rel(2, {{1, 0}, {1, 1}}));
  const auto r = kSwap2;
  const auto s = rel(2, {{0, 0}, {0, 1}, {1, 0}});
  const auto expected = rel(2, {{0, 0}, {1, 0}, {1, 1}});
  EXPECT_EQ(transpose(compose(r, s)), expected);
  EXPECT_EQ(compose(transpose(s), transpose(r)), expected);
}

TEST(Classify, Examples) {
  const auto d = classify(IndexRelation::diagonal(2));
  EXPECT_TRUE(d.is_e0 && d.is_symmetric && d.contains_diagonal && d.is_idempotent &&
              d.is_equivalence);
  EXPECT_EQ(classify(kSwap2), (RelationClassification{true, true, false, false, false}));
  EXPECT_FALSE(classify(rel(2, {{0, 0}, {0, 1}})).is_e0);
}

TEST(Classify, EquivalenceLawOverAllRelations) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * k)); ++mask) {
      const auto m = oracle::mask_matrix(k, mask);
      const auto c = classify(oracle::from_matrix(m));
      bool sym = true, refl = true;
      for (std::size_t a = 0; a < k; ++a) {
        refl = refl && m[a][a];
        for (std::size_t b = 0; b < k; ++b) sym = sym && m[a][b] == m[b][a];
      }
      EXPECT_EQ(c.is_symmetric, sym);
      EXPECT_EQ(c.contains_diagonal, refl);
      EXPECT_EQ(c.is_idempotent, oracle::compose(m, m) == m);
      EXPECT_EQ(c.is_e0, oracle::full_domain_and_range(m));
      EXPECT_EQ(c.is_equivalence, c.is_symmetric && c.contains_diagonal && c.is_idempotent);
    }
  }
}

TEST(EnumerateE0, CountsMatchBruteForceAndInclusionExclusion) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto count = enumerate_e0(k).size();
    EXPECT_EQ(count, oracle::count_e0_brute_force(k));
    EXPECT_EQ(static_cast<long long>(count), oracle::count_e0_inclusion_exclusion(static_cast<long long>(k)));
  }
  EXPECT_EQ(enumerate_e0(1).size(), 1U);
  EXPECT_EQ(enumerate_e0(2).size(), 7U);
  EXPECT_EQ(enumerate_e0(3).size(), 265U);
  EXPECT_EQ(enumerate_e0(4).size(), 41503U);
  EXPECT_EQ(oracle::count_e0_inclusion_exclusion(4), 41503);
}

TEST(EnumerateE0, SortedDistinctAndCapped) {
  const auto all = enumerate_e0(3);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  for (const auto& r : all) EXPECT_TRUE(r.is_e0());
  EXPECT_EQ(enumerate_e0(1).front(), IndexRelation::diagonal(1));
  EXPECT_THROW(enumerate_e0(5), BudgetError);
  EXPECT_THROW(enumerate_e0(3, 2), BudgetError);
}

TEST(EnumerateE0, CanonicalOrderIsLexicographicOnPairLists) {
  const auto all = enumerate_e0(2);
  std::vector<std::vector<Pair>> lists;
  for (const auto& r : all) lists.push_back(r.pairs());
  EXPECT_TRUE(std::is_sorted(lists.begin(), lists.end()));
  EXPECT_EQ(all.front(), rel(2, {{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(all.back(), rel(2, {{0, 1}, {1, 0}, {1, 1}}));
}

TEST(Closure, Examples) {
  const std::vector<IndexRelation> d{IndexRelation::diagonal(2)};
  EXPECT_EQ(closure(d), d);
  const std::vector<IndexRelation> sw{kSwap2};
  EXPECT_EQ(closure(sw), (std::vector<IndexRelation>{kSwap2, IndexRelation::diagonal(2)}));
  const std::vector<IndexRelation> full{IndexRelation::full(2)};
  EXPECT_EQ(closure(full), full);
}

TEST(Closure, SmallestClosedSuperset) {
  gen::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto k = gen::uniform(rng, 2, 3);
    std::vector<IndexRelation> g;
    for (std::size_t j = 0; j < gen::uniform(rng, 1, 3); ++j) g.push_back(gen::random_relation(rng, k));
    const auto c = closure(g);
    EXPECT_TRUE(is_composition_closed(c));
    std::set<IndexRelation> members(c.begin(), c.end());
    EXPECT_EQ(members.size(), c.size());
    // Every member is a product of generators: grow words by brute force.
    std::set<IndexRelation> reached(g.begin(), g.end());
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& a : std::vector<IndexRelation>(reached.begin(), reached.end()))
        for (const auto& b : g) grew = reached.insert(oracle::from_matrix(oracle::compose(oracle::to_matrix(a), oracle::to_matrix(b)))).second || grew;
    }
    EXPECT_EQ(reached, members);
  }
}

TEST(Closure, CapAndSizeChecks) {
  const std::vector<IndexRelation> sw{kSwap2};
  EXPECT_THROW(closure(sw, 1), BudgetError);
  const std::vector<IndexRelation> mixed{kSwap2, IndexRelation::full(3)};
  EXPECT_THROW(closure(mixed), ValidationError);
}

TEST(GreatestDeltaElement, Examples) {
  const std::vector<IndexRelation> d{IndexRelation::diagonal(2)};
  EXPECT_EQ(greatest_delta_element(d), IndexRelation::diagonal(2));
  const auto p = rel(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}});
  const std::vector<IndexRelation> sp{p};
  EXPECT_EQ(greatest_delta_element(sp), p);
  const auto all = enumerate_e0(2);
  EXPECT_EQ(greatest_delta_element(all), IndexRelation::full(2));
  const std::vector<IndexRelation> sw{kSwap2};
  EXPECT_THROW(greatest_delta_element(sw), ValidationError);
  const std::vector<IndexRelation> none{rel(2, {{0, 1}, {1, 1}})};
  ASSERT_TRUE(is_composition_closed(none));
  EXPECT_EQ(greatest_delta_element(none), std::nullopt);
}

TEST(GreatestDeltaElement, UpperBoundAndIdempotentOnRandomClosures) {
  gen::Rng rng(21);
  int nonempty = 0;
  for (int i = 0; i < 300; ++i) {
    const auto k = gen::uniform(rng, 1, 4);
    std::vector<IndexRelation> g;
    for (std::size_t j = 0; j < gen::uniform(rng, 1, 3); ++j) g.push_back(gen::random_e0(rng, k));
    const auto s = closure(g);
    const auto p = greatest_delta_element(s);
    const auto diag = IndexRelation::diagonal(k);
    bool any = false;
    for (const auto& t : s) {
      if (!diag.subset_of(t)) continue;
      any = true;
      ASSERT_TRUE(p.has_value());
      EXPECT_TRUE(t.subset_of(*p));
    }
    EXPECT_EQ(any, p.has_value());
    if (p) {
      ++nonempty;
      EXPECT_EQ(compose(*p, *p), *p);
      EXPECT_NE(std::find(s.begin(), s.end(), *p), s.end());
    }
  }
  EXPECT_GT(nonempty, 0);
}

TEST(InvariantUnderSymmetricGroup, Examples) {
  EXPECT_EQ(invariant_under_symmetric_group(1), std::vector<IndexRelation>{IndexRelation::diagonal(1)});
  for (std::size_t k = 2; k <= 4; ++k) {
    auto off = IndexRelation(k);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b)
        if (a != b) off.insert(a, b);
    std::vector<IndexRelation> expected{IndexRelation::diagonal(k), off, IndexRelation::full(k)};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(invariant_under_symmetric_group(k), expected) << "k=" << k;
  }
  EXPECT_THROW(invariant_under_symmetric_group(5), BudgetError);
}

TEST(InvariantUnderSymmetricGroup, AgreesWithAllPermutations) {
  std::vector<Index> perm{0, 1, 2};
  std::vector<IndexRelation> brute;
  for (const auto& r : enumerate_e0(3)) {
    bool fixed = true;
    std::vector<Index> p{0, 1, 2};
    do fixed = fixed && conjugate(r, p) == r;
    while (std::next_permutation(p.begin(), p.end()));
    if (fixed) brute.push_back(r);
  }
  EXPECT_EQ(invariant_under_symmetric_group(3), brute);
}

TEST(Conjugate, RelabelsBothCoordinates) {
  const std::vector<Index> p{1, 2, 0};
  EXPECT_EQ(conjugate(rel(3, {{0, 1}}), p), rel(3, {{1, 2}}));
}

TEST(SemigroupLaws, ExhaustiveK2) {
  std::vector<IndexRelation> all;
  for (std::uint64_t m = 0; m < 16; ++m) all.push_back(oracle::from_matrix(oracle::mask_matrix(2, m)));
  for (const auto& r : all) {
    EXPECT_EQ(transpose(transpose(r)), r);
    for (const auto& s : all) {
      EXPECT_EQ(transpose(compose(r, s)), compose(transpose(s), transpose(r)));
      for (const auto& t : all) {
        EXPECT_EQ(compose(compose(r, s), t), compose(r, compose(s, t)));
      }
      for (const auto& r2 : all) {
        if (!r.subset_of(r2)) continue;
        for (const auto& s2 : all)
          if (s.subset_of(s2)) EXPECT_TRUE(compose(r, s).subset_of(compose(r2, s2)));
      }
    }
  }
}

TEST(SemigroupLaws, E0ClosedExhaustive) {
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto all = enumerate_e0(k);
    for (const auto& r : all) {
      EXPECT_TRUE(transpose(r).is_e0());
      for (const auto& s : all) ASSERT_TRUE(compose(r, s).is_e0());
    }
  }
}

TEST(SemigroupLaws, RandomizedK3K4) {
  gen::Rng rng(3);
  for (int i = 0; i < 4000; ++i) {
    const auto k = gen::uniform(rng, 3, 4);
    const auto r = gen::random_relation(rng, k), s = gen::random_relation(rng, k),
               t = gen::random_relation(rng, k);
    EXPECT_EQ(compose(compose(r, s), t), compose(r, compose(s, t)));
    const auto r2 = r.united(gen::random_relation(rng, k, 0.2));
    const auto s2 = s.united(gen::random_relation(rng, k, 0.2));
    EXPECT_TRUE(compose(r, s).subset_of(compose(r2, s2)));
  }
}

TEST(Ordering, SizeThenPairList) {
  EXPECT_LT(IndexRelation::full(2), IndexRelation::diagonal(3));
  EXPECT_LT(rel(2, {{0, 0}, {1, 1}}), rel(2, {{0, 1}}));
  EXPECT_EQ(rel(2, {{0, 1}}).hash(), rel(2, {{0, 1}}).hash());
}

}  // namespace
}  // namespace roelcke::finrel
