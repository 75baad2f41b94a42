#include <gtest/gtest.h>

#include <map>
#include <set>

#include "dp1/picard.hpp"

using namespace dp1;

TEST(Picard, TwoGenerationRoutesAgree) {
  const auto a = classes_by_taxonomy();
  const auto b = classes_by_search();
  ASSERT_EQ(a.size(), 240u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::set<LatticeVector>(a.begin(), a.end()).size(), 240u);
}

TEST(Picard, FamilyCardinalities) {
  std::map<Family, int> n;
  for (const auto& e : all_classes()) ++n[family(e)];
  EXPECT_EQ(n[Family::BlowUp], 8);
  EXPECT_EQ(n[Family::Line], 28);
  EXPECT_EQ(n[Family::Conic], 56);
  EXPECT_EQ(n[Family::Cubic], 56);
  EXPECT_EQ(n[Family::Quartic], 56);
  EXPECT_EQ(n[Family::Quintic], 28);
  EXPECT_EQ(n[Family::Sextic], 8);
}

TEST(Picard, KnownMembersAndOrder) {
  EXPECT_TRUE(class_index(blowup(1)).has_value());
  EXPECT_TRUE(class_index(LatticeVector{{6, 3, 2, 2, 2, 2, 2, 2, 2}}).has_value());
  // Lexicographic order puts E1 first and the sextics last.
  EXPECT_EQ(all_classes().front(), blowup(1));
  EXPECT_EQ(all_classes()[7], blowup(8));
  EXPECT_EQ(all_classes().back(), sextic(1));
  EXPECT_FALSE(class_index(LatticeVector{{1, 1, 0, 0, 0, 0, 0, 0, 0}}).has_value());
}

TEST(Picard, LatticeEquations) {
  const auto K = canonical_class();
  EXPECT_EQ(pairing(K, K), 1);
  for (const auto& e : all_classes()) {
    EXPECT_EQ(pairing(e, e), -1);
    EXPECT_EQ(pairing(e, K), -1);
  }
}

TEST(Picard, PairingExamples) {
  EXPECT_EQ(pairing(blowup(1), blowup(1)), -1);
  EXPECT_EQ(pairing(line(1, 2), blowup(1)), 1);
  EXPECT_EQ(pairing(line(1, 2), blowup(3)), 0);
  EXPECT_EQ(pairing(blowup(1), sextic(1)), 3);
  EXPECT_EQ(pairing(line(1, 2), line(3, 4)), 1);
  EXPECT_EQ(pairing(line(1, 2), line(1, 3)), 0);
  EXPECT_EQ(pairing(cubic(7, 8), cubic(8, 7)), 3);
}

TEST(Picard, Partner) {
  EXPECT_EQ(partner(blowup(1)), sextic(1));
  EXPECT_EQ(partner(line(1, 2)), (LatticeVector{{5, 1, 1, 2, 2, 2, 2, 2, 2}}));
  EXPECT_EQ(partner(line(1, 2)), quintic(1, 2));
  int fixed = 0;
  for (const auto& e : all_classes()) {
    const auto f = partner(e);
    EXPECT_TRUE(is_exceptional(f));
    EXPECT_EQ(partner(f), e);
    EXPECT_EQ(pairing(e, f), 3);
    fixed += f == e;
  }
  EXPECT_EQ(fixed, 0);
}

TEST(Picard, PairingDistributionIsUniform) {
  for (const auto& e : all_classes()) {
    const auto pc = pairing_distribution(e);
    EXPECT_EQ(pc, (PairingCounts{1, 56, 126, 56}));
    EXPECT_EQ(pc.n3 + pc.n2 + pc.n1 + pc.n0, 239);
  }
}

TEST(Picard, PartnersShareNeighbourhoods) {
  const auto& all = all_classes();
  for (const auto& e1 : all) {
    const auto e2 = partner(e1);
    for (const auto& f : all) {
      if (f == e1 || f == e2) continue;
      EXPECT_EQ(pairing(e1, f) == 1, pairing(e2, f) == 1);
      EXPECT_EQ(pairing(e1, f) == 0, pairing(e2, f) == 2);
    }
  }
}

TEST(Picard, RootCorrespondence) {
  const auto K = canonical_class();
  std::set<LatticeVector> roots;
  for (const auto& e : all_classes()) {
    const auto r = e + K;
    EXPECT_EQ(pairing(r, r), -2);
    EXPECT_EQ(pairing(r, K), 0);
    roots.insert(r);
  }
  EXPECT_EQ(roots.size(), 240u);
}

TEST(Picard, TextRoundTrip) {
  for (const auto& e : all_classes()) EXPECT_EQ(parse_class(to_string(e)), e);
  EXPECT_EQ(to_string(blowup(1)), "0 -1 0 0 0 0 0 0 0");
  EXPECT_THROW(parse_class("1 2 3"), std::invalid_argument);
  EXPECT_THROW(parse_class("0 -1 0 0 0 0 0 0 0 7"), std::invalid_argument);
  EXPECT_THROW(require_index(LatticeVector{{1, 0, 0, 0, 0, 0, 0, 0, 0}}), std::invalid_argument);
}
