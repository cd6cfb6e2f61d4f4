#include <random>

#include <gtest/gtest.h>

#include "gcurv/classification.hpp"
#include "gcurv/families.hpp"
#include "oracles.hpp"

using namespace gcurv;

TEST(PredictedSign, ByGirth) {
  EXPECT_EQ(predicted_sign(complete(4), {0, 1}), PredictedSign::at_least_third);
  EXPECT_EQ(predicted_sign(prism(4), {0, 1}), PredictedSign::zero);
  EXPECT_EQ(predicted_sign(petersen(), {0, 1}), PredictedSign::at_most_minus_third);
  EXPECT_THROW(predicted_sign(generate({Family::cycle, 5}), {0, 1}), DomainError);
}

TEST(PredictedSign, Intervals) {
  EXPECT_TRUE(within_prediction(PredictedSign::at_least_third, Rational(2, 3)));
  EXPECT_FALSE(within_prediction(PredictedSign::at_least_third, Rational(1, 4)));
  EXPECT_TRUE(within_prediction(PredictedSign::zero, Rational(0)));
  EXPECT_FALSE(within_prediction(PredictedSign::at_most_minus_third, Rational(-1, 4)));
}

TEST(Recognise, FamiliesUnderRelabelling) {
  std::mt19937 rng(13);
  for (int n = 3; n <= 10; ++n) {
    for (int t = 0; t < 10; ++t) {
      const Graph y = oracle::random_relabel(prism(n), rng);
      const auto v = classify_cubic(y);
      if (n == 3) {
        EXPECT_EQ(v.name(), "Y3");
      } else {
        EXPECT_EQ(v.kind, LadderKind::prism) << n;
        EXPECT_EQ(v.n, n);
      }
    }
  }
  for (int n = 2; n <= 10; ++n)
    for (int t = 0; t < 10; ++t) {
      const auto v = classify_cubic(oracle::random_relabel(mobius(n), rng));
      EXPECT_EQ(v.kind, LadderKind::mobius);
      EXPECT_EQ(v.n, n);
    }
}

TEST(Recognise, SmallCoincidences) {
  EXPECT_EQ(classify_cubic(complete(4)).name(), "M2");
  EXPECT_EQ(classify_cubic(generate({Family::complete_bipartite, 3})).name(), "M3");
}

TEST(Recognise, SoundOnAllClasses) {
  // Every recognised graph must actually be isomorphic to the named family member.
  for (int n = 4; n <= 12; n += 2)
    for (const Graph& g : enumerate_cubic(n)) {
      const auto v = classify_cubic(g);
      if (v.kind == LadderKind::prism) {
        EXPECT_TRUE(are_isomorphic(g, prism(v.n)));
      } else if (v.kind == LadderKind::mobius) {
        EXPECT_TRUE(are_isomorphic(g, mobius(v.n)));
      }
    }
}

TEST(Recognise, PetersenHasWitnesses) {
  const Graph g = petersen();
  const auto v = classify_cubic(g);
  ASSERT_EQ(v.kind, LadderKind::none);
  ASSERT_TRUE(v.witness_edge && v.witness_vertex);
  EXPECT_LT(kappa(g, v.witness_edge->u, v.witness_edge->v, Rational(0)).kappa, Rational(0));
  EXPECT_LT(be_curvature(g, *v.witness_vertex, Dimension::infinite()).curvature, -kZeroBand);
}

TEST(Recognise, RejectsNonCubicOrDisconnected) {
  EXPECT_THROW(classify_cubic(generate({Family::cycle, 6})), DomainError);
  std::vector<Edge> es;
  for (const Edge& e : complete(4).edges()) {
    es.push_back(e);
    es.emplace_back(e.u + 4, e.v + 4);
  }
  EXPECT_THROW(classify_cubic(Graph(8, es)), DomainError);
}

TEST(Census, GroupsAndSigns) {
  const auto census = enumerate_cubic_two_balls();
  std::map<int, int> per_group;
  int complete_count = 0;
  for (const auto& c : census) {
    ++per_group[c.triangles];
    complete_count += c.complete_cubic;
  }
  EXPECT_EQ(per_group[3], 1);
  EXPECT_EQ(per_group[2], 2);
  EXPECT_EQ(per_group[1], 5);
  EXPECT_EQ(per_group[0], 8);
  EXPECT_EQ(complete_count, 2);
}

TEST(Census, EveryClassOccursInSomeCubicGraph) {
  // Collect rooted 2-balls seen in real cubic graphs (S_2-S_2 edges dropped).
  std::set<std::string> seen;
  auto add = [&](const Graph& g) {
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto b = ball_decomposition(g, x);
      std::vector<Vertex> order{x};
      for (int r = 1; r <= 2; ++r)
        for (Vertex v : b.sphere(r)) order.push_back(v);
      std::vector<Edge> es;
      const int n = static_cast<int>(order.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!(i >= 4 && j >= 4) && g.adjacent(order[i], order[j])) es.emplace_back(i, j);
      seen.insert(detail::rooted_key(Graph(n, es)));
    }
  };
  for (int n = 4; n <= 12; n += 2)
    for (const Graph& g : enumerate_cubic(n)) add(g);
  const auto census = enumerate_cubic_two_balls();
  EXPECT_EQ(seen.size(), census.size());
  for (const auto& c : census) EXPECT_TRUE(seen.count(detail::rooted_key(c.structure))) << c.label;
}

TEST(Census, CentreCurvatureMatchesFullGraphs) {
  // The centre curvature of a census class equals K at any vertex whose 2-ball it is.
  const auto census = enumerate_cubic_two_balls();
  for (const auto& c : census) {
    const double k = be_curvature(c.structure, 0, Dimension::infinite()).curvature;
    EXPECT_NEAR(k, c.centre_curvature, 1e-9) << c.label;
  }
  const auto k_petersen = be_curvature(petersen(), 0, Dimension::infinite()).curvature;
  bool found = false;
  for (const auto& c : census)
    if (c.triangles == 0 && c.structure.order() == 10) {
      EXPECT_NEAR(c.centre_curvature, k_petersen, 1e-9);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Sweep, SmallOrders) {
  for (int n : {4, 6}) {
    const auto r = verify_equivalence(n);
    EXPECT_TRUE(r.holds());
  }
  const auto r = verify_equivalence(6);
  EXPECT_EQ(r.positive_set, (std::vector<std::string>{"M2", "M3", "Y3"}));
  EXPECT_THROW(verify_equivalence(5), DomainError);
  EXPECT_THROW(verify_equivalence(14), DomainError);
}

TEST(Sweep, UpToTen) {
  const auto r = verify_equivalence(10);
  EXPECT_EQ(r.rows.size(), 27u);
  EXPECT_EQ(r.exceptions(), 0u);
  EXPECT_EQ(r.positive_set, (std::vector<std::string>{"M2", "M3", "Y3", "M4", "Y4", "M5", "Y5"}));
  EXPECT_LE(r.max_method_gap(), kMethodAgreement);
}

TEST(Positivity, OnlySmallestLaddersArePositive) {
  std::vector<std::string> be_positive, ollivier_positive;
  auto check = [&](const Graph& g, const std::string& name) {
    bool all_be = true, all_k = true;
    for (Vertex x = 0; x < g.order(); ++x)
      all_be = all_be && be_curvature(g, x, Dimension::infinite()).sign == Sign::positive;
    for (const Edge& e : g.edges()) all_k = all_k && kappa(g, e.u, e.v, Rational(0)).kappa > Rational(0);
    if (all_be) be_positive.push_back(name);
    if (all_k) ollivier_positive.push_back(name);
  };
  for (int n = 2; n <= 6; ++n) check(mobius(n), "M" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) check(prism(n), "Y" + std::to_string(n));
  std::sort(be_positive.begin(), be_positive.end());
  EXPECT_EQ(be_positive, (std::vector<std::string>{"M2", "M3", "Y3", "Y4"}));
  EXPECT_EQ(ollivier_positive, (std::vector<std::string>{"M2"}));
}
