#include <gtest/gtest.h>

#include "dp1/weylgraph.hpp"

using namespace dp1;

namespace {
const WeightedGraph& G() { return WeightedGraph::instance(); }
ClassId id(const LatticeVector& v) { return require_index(v); }
}  // namespace

TEST(WeylGraph, SimpleRootsAreRoots) {
  for (const auto& r : simple_roots()) {
    EXPECT_EQ(pairing(r, r), -2);
    EXPECT_EQ(pairing(r, canonical_class()), 0);
    EXPECT_EQ(reflect(r, r), -r);
    EXPECT_EQ(reflect(r, canonical_class()), canonical_class());
  }
}

TEST(WeylGraph, ReflectionSwapsBlowups) {
  const LatticeVector r = blowup(1) - blowup(2);
  EXPECT_TRUE(is_root(r));
  EXPECT_EQ(reflect(r, blowup(1)), blowup(2));
  EXPECT_EQ(reflect(r, blowup(2)), blowup(1));
  EXPECT_EQ(reflect(r, blowup(3)), blowup(3));
}

TEST(WeylGraph, ReflectionIsAnIsometricInvolution) {
  const auto& cls = all_classes();
  for (const auto& r : simple_roots())
    for (std::size_t i = 0; i < cls.size(); i += 7)
      for (std::size_t j = 0; j < cls.size(); j += 5) {
        EXPECT_EQ(reflect(r, reflect(r, cls[i])), cls[i]);
        EXPECT_EQ(pairing(reflect(r, cls[i]), reflect(r, cls[j])), pairing(cls[i], cls[j]));
      }
}

TEST(WeylGraph, WeightMatrix) {
  for (int i = 0; i < kNumClasses; ++i) {
    int hist[4] = {0, 0, 0, 0};
    EXPECT_EQ(G().weight(static_cast<ClassId>(i), static_cast<ClassId>(i)), -1);
    for (int j = 0; j < kNumClasses; ++j) {
      if (i == j) continue;
      const int w = G().weight(static_cast<ClassId>(i), static_cast<ClassId>(j));
      ASSERT_GE(w, 0);
      ASSERT_LE(w, 3);
      EXPECT_EQ(w, G().weight(static_cast<ClassId>(j), static_cast<ClassId>(i)));
      ++hist[w];
    }
    EXPECT_EQ(hist[3], 1);
    EXPECT_EQ(hist[2], 56);
    EXPECT_EQ(hist[1], 126);
    EXPECT_EQ(hist[0], 56);
    EXPECT_EQ(G().compatible(static_cast<ClassId>(i), weight_set({1, 2})).count(), 182);
  }
}

TEST(WeylGraph, GeneratorsPreserveWeightsAndPartners) {
  for (const auto& g : G().generators()) {
    std::array<bool, kNumClasses> hit{};
    for (int i = 0; i < kNumClasses; ++i) {
      hit[g[static_cast<std::size_t>(i)]] = true;
      EXPECT_EQ(G().partner(g[static_cast<std::size_t>(i)]), g[G().partner(static_cast<ClassId>(i))]);
      for (int j = 0; j < kNumClasses; j += 3)
        EXPECT_EQ(G().weight(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(j)]),
                  G().weight(static_cast<ClassId>(i), static_cast<ClassId>(j)));
    }
    for (bool h : hit) EXPECT_TRUE(h);
  }
}

TEST(WeylGraph, GroupOrder) {
  EXPECT_EQ(weyl_order(), 696729600ull);
  EXPECT_EQ(weyl_order(), (1ull << 14) * 243ull * 25ull * 7ull);
  const auto& gens = G().generators();
  EXPECT_EQ(group_order(std::span<const Permutation>(gens.data(), gens.size())), weyl_order());
}

TEST(WeylGraph, SubgroupOrder) {
  // The seven reflections E_i - E_{i+1} generate S_8.
  const auto& gens = G().generators();
  EXPECT_EQ(group_order(std::span<const Permutation>(gens.data(), 7)), 40320u);
}

TEST(WeylGraph, SmallOrbits) {
  const ClassId e1 = id(blowup(1));
  EXPECT_EQ(orbit_size(G(), std::vector<ClassId>{e1}), 240u);
  std::vector<ClassId> pair{id(line(1, 2)), id(line(3, 4))};
  ASSERT_EQ(G().weight(pair[0], pair[1]), 1);
  EXPECT_EQ(orbit_size(G(), pair, {.ordered = true}), 30240u);
  EXPECT_EQ(orbit_size(G(), pair), 15120u);
  // Partner pairs form one orbit of size 120.
  std::vector<ClassId> pp{e1, id(sextic(1))};
  EXPECT_EQ(orbit_size(G(), pp), 120u);
  EXPECT_EQ(weyl_order() % orbit_size(G(), pp), 0u);
}

TEST(WeylGraph, OrbitIsWorkerIndependent) {
  std::vector<ClassId> k{id(line(1, 2)), id(line(3, 4)), id(line(5, 6))};
  const auto a = orbit_elements(G(), k, {.workers = 1});
  const auto b = orbit_elements(G(), k, {.workers = 3});
  EXPECT_EQ(a, b);
  EXPECT_EQ(weyl_order() % a.size(), 0u);
}

TEST(WeylGraph, BudgetExceeded) {
  std::vector<ClassId> pair{id(line(1, 2)), id(line(3, 4))};
  EXPECT_THROW(orbit_size(G(), pair, {.max_elements = 1000}), BudgetExceeded);
}

TEST(WeylGraph, WeightSubgraph) {
  std::vector<ClassId> k{id(line(1, 2)), id(line(1, 3)), id(line(2, 3)), id(line(4, 5))};
  const auto w0 = weight_subgraph(G(), k, 0);
  EXPECT_EQ(w0.edge_count(), 3);
  const auto w1 = weight_subgraph(G(), k, 1);
  EXPECT_EQ(w1.edge_count(), 3);
  EXPECT_EQ(w1.degree(3), 3);
}

TEST(WeylGraph, ClassSetOps) {
  ClassSet s;
  s.set(0);
  s.set(63);
  s.set(64);
  s.set(239);
  EXPECT_EQ(s.count(), 4);
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ((s & ClassSet::above(63)).to_vector(), (std::vector<ClassId>{64, 239}));
  EXPECT_EQ(ClassSet::above(-1).count(), 240);
  EXPECT_EQ(ClassSet::above(239).count(), 0);
  EXPECT_EQ(ClassSet::above(191).count(), 48);
}
