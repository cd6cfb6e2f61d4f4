#include <random>
#include <set>

#include <gtest/gtest.h>

#include "gcurv/enumerate.hpp"
#include "gcurv/families.hpp"
#include "gcurv/isomorphism.hpp"
#include "oracles.hpp"

using namespace gcurv;

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(11);
  for (const Graph& g : {petersen(), prism(5), mobius(5), prism(6)}) {
    const auto bits = canonical_form(g).bits;
    for (int t = 0; t < 10; ++t) EXPECT_EQ(canonical_form(oracle::random_relabel(g, rng)).bits, bits);
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  EXPECT_FALSE(are_isomorphic(prism(4), mobius(4)));
  EXPECT_FALSE(are_isomorphic(prism(5), petersen()));
  EXPECT_TRUE(are_isomorphic(complete(4), mobius(2)));
  EXPECT_TRUE(are_isomorphic(generate({Family::complete_bipartite, 3}), mobius(3)));
}

TEST(Canonical, CanonicalGraphIsAFixedPoint) {
  const Graph c = canonical_graph(petersen());
  EXPECT_EQ(canonical_graph(c), c);
  EXPECT_EQ(canonical_form(c).bits, canonical_form(petersen()).bits);
}

TEST(Enumerate, ClassCounts) {
  EXPECT_EQ(enumerate_cubic(4).size(), 1u);
  EXPECT_EQ(enumerate_cubic(6).size(), 2u);
  EXPECT_EQ(enumerate_cubic(8).size(), 5u);
  EXPECT_EQ(enumerate_cubic(10).size(), 19u);
}

TEST(Enumerate, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_cubic(7), DomainError);
  EXPECT_THROW(enumerate_cubic(2), DomainError);
  EXPECT_THROW(enumerate_cubic(14), DomainError);
}

// Orbit-counting: the labelled connected cubic graphs on n vertices split
// into classes of size n!/|Aut|.
TEST(Enumerate, OrbitSumMatchesLabelledBruteForce) {
  for (int n : {4, 6, 8}) {
    std::int64_t sum = 0;
    for (const Graph& g : enumerate_cubic(n)) sum += oracle::factorial(n) / oracle::automorphism_count(g);
    EXPECT_EQ(sum, oracle::labelled_connected_cubic(n)) << "n=" << n;
  }
}

TEST(Enumerate, RepresentativesAreConnectedCubicAndDistinct) {
  for (int n = 4; n <= 10; n += 2) {
    std::set<std::string> seen;
    for (const Graph& g : enumerate_cubic(n)) {
      EXPECT_TRUE(g.is_regular(3));
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(seen.insert(canonical_form(g).bits).second);
    }
  }
}

TEST(Enumerate, RandomRelabelHitsExactlyOneClass) {
  std::mt19937 rng(5);
  const auto classes = enumerate_cubic(10);
  for (const Graph& g : classes) {
    const Graph h = oracle::random_relabel(g, rng);
    int hits = 0;
    for (const Graph& c : classes) hits += are_isomorphic(h, c);
    EXPECT_EQ(hits, 1);
  }
}

TEST(Enumerate, FamiliesAppear) {
  const auto classes = enumerate_cubic(10);
  auto contains = [&](const Graph& g) {
    for (const Graph& c : classes)
      if (are_isomorphic(c, g)) return true;
    return false;
  };
  EXPECT_TRUE(contains(petersen()));
  EXPECT_TRUE(contains(prism(5)));
  EXPECT_TRUE(contains(mobius(5)));
}
