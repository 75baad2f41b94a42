#include <gtest/gtest.h>

#include <random>

#include "dp1/search.hpp"

using namespace dp1;

namespace {

std::vector<Fp> residues(const PrimeField& f, std::initializer_list<long long> xs) {
  std::vector<Fp> v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

PointConfig<RationalField> family_config() {
  const RationalField q;
  const auto params = family_params(mpq_class(3, 5), mpq_class(1, 2), mpq_class(-1, 2));
  return setup_a(q, std::span<const mpq_class>(params));
}

}  // namespace

TEST(Search, ResidueDeterminant) {
  const ModP f(7);
  std::uint32_t m[9] = {1, 2, 3, 4, 5, 6, 0, 1, 1};
  // 1*(5-6) - 2*(4-0) + 3*(4-0) = 3
  EXPECT_EQ(f.det(m, 3), 3u);
  std::uint32_t s[4] = {0, 1, 1, 0};
  EXPECT_EQ(f.det(s, 2), 6u);
  EXPECT_THROW(ModP(9), std::invalid_argument);
}

TEST(Search, ProjectivePlaneCount) {
  for (std::uint32_t p : {2u, 5u, 19u}) {
    const auto pts = projective_points(p);
    EXPECT_EQ(pts.size(), p * p + p + 1);
    const ModP f(p);
    for (const auto& q : pts) EXPECT_EQ(normalize(f, q), q);
  }
}

TEST(Search, IncrementalTestMatchesPlane) {
  for (std::uint32_t p : {23u, 31u}) {
    const ModP f(p);
    const PrimeField field(p);
    const auto pts = projective_points(p);
    std::mt19937_64 rng(p);
    int gp = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      GPState st(f);
      bool ok = true;
      std::array<ProjPoint<Fp>, 8> exact;
      for (std::size_t i = 0; i < 8; ++i) {
        const auto q = pts[rng() % pts.size()];
        for (std::size_t c = 0; c < 3; ++c) exact[i][c] = field.from_int(q[c]);
        if (ok && st.admits(q))
          st.push(q);
        else
          ok = false;
      }
      const bool want = general_position(field, std::span<const ProjPoint<Fp>>(exact)).ok;
      ASSERT_EQ(ok, want) << "p=" << p << " trial " << trial;
      gp += want;
    }
    EXPECT_GT(gp, 0);
  }
}

TEST(Search, NoGeneralPositionBelowThirteen) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    const auto g = general_position_exists(p);
    EXPECT_FALSE(g.exists) << p;
  }
}

TEST(Search, GeneralPositionOverF19) {
  const auto g = general_position_exists(19);
  ASSERT_TRUE(g.exists);
  const PrimeField field(19);
  std::array<ProjPoint<Fp>, 8> exact;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t c = 0; c < 3; ++c) exact[i][c] = field.from_int(g.witness[i][c]);
  EXPECT_TRUE(general_position(field, std::span<const ProjPoint<Fp>>(exact)).ok);
  EXPECT_EQ(g.witness[3], (ResPoint{1, 1, 1}));
}

TEST(Search, SmallFieldHasNoTuplesInGeneralPosition) {
  const auto r = eckardt_search(5, 'A', pinned_type8());
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.tuples, 15625u);
  EXPECT_EQ(r.general_position, 0u);
  EXPECT_TRUE(r.realizations.empty());
}

TEST(Search, RepresentativePreconditions) {
  auto k = to_classes(pinned_type8());
  auto no_line = k;
  no_line.erase(std::find(no_line.begin(), no_line.end(), line(1, 2)));
  EXPECT_THROW(eckardt_search(7, 'A', std::span<const LatticeVector>(no_line)), std::invalid_argument);
  auto with_e = k;
  with_e.back() = blowup(4);
  EXPECT_THROW(eckardt_search(7, 'A', std::span<const LatticeVector>(with_e)), std::invalid_argument);
  EXPECT_THROW(eckardt_search(7, 'C', pinned_type8()), std::invalid_argument);
  EXPECT_THROW(eckardt_search(3, 'A', pinned_type8()), std::domain_error);
}

TEST(Search, DeterministicAcrossWorkers) {
  SearchOptions one, three;
  three.workers = 3;
  const auto a = eckardt_search(13, 'A', pinned_type8(), one);
  const auto b = eckardt_search(13, 'A', pinned_type8(), three);
  EXPECT_EQ(a.fingerprint, b.fingerprint);
  EXPECT_EQ(a.tuples, 4826809u);
  EXPECT_EQ(a.general_position, 0u);
  // Set-up B at p = 7 with two workers.
  const auto k = to_classes(pinned_type8());
  SearchOptions two;
  two.workers = 2;
  const auto c = eckardt_search(7, 'B', std::span<const LatticeVector>(k), one);
  const auto d = eckardt_search(7, 'B', std::span<const LatticeVector>(k), two);
  EXPECT_EQ(c.fingerprint, d.fingerprint);
  EXPECT_EQ(c.tuples, 5764801u);
}

TEST(Search, BudgetReportsCompletedPrefix) {
  SearchOptions opt;
  opt.budget_seconds = 1e-9;
  const auto r = eckardt_search(19, 'A', pinned_type8(), opt);
  EXPECT_FALSE(r.complete);
  EXPECT_LT(r.chunks_done, 19u);
  EXPECT_EQ(r.tuples, std::uint64_t{r.chunks_done} * 19 * 19 * 19 * 19 * 19);
}

TEST(Search, CliqueEightOverF19) {
  const auto r = eckardt_search(19, 'A', pinned_type8());
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(r.tuples, 47045881u);
  EXPECT_GT(r.general_position, 0u);
  EXPECT_EQ(r.realization_count, r.realizations.size());
  EXPECT_EQ(r.reverified, r.realizations.size());
  const std::vector<std::uint32_t> example{2, 4, 16, 7, 18, 16};
  bool found = false;
  for (const auto& z : r.realizations) found |= z.params == example;
  EXPECT_TRUE(found);
  for (std::size_t i = 1; i < r.realizations.size(); ++i)
    EXPECT_LT(r.realizations[i - 1].params, r.realizations[i].params);
  EXPECT_NE(to_text(r).find("realization: 2 4 16 7 18 16 | (0:1:1) (0:10:1)"), std::string::npos);
}

TEST(Search, VerifyF19Example) {
  const PrimeField f(19);
  const auto params = residues(f, {2, 4, 16, 7, 18, 16});
  const auto cfg = setup_a(f, std::span<const Fp>(params));
  const auto k = to_classes(pinned_type8());
  const auto v = verify_config(f, cfg, std::span<const LatticeVector>(k));
  EXPECT_TRUE(v.general_position.ok);
  EXPECT_EQ(v.concurrent, 10);
  EXPECT_FALSE(v.partner_pair);
  for (const auto& c : v.classes) EXPECT_TRUE(c.exists && c.through_target) << to_string(c.cls);
}

TEST(Search, VerifyFamilyPointQ) {
  const RationalField q;
  const auto cfg = family_config();
  EXPECT_TRUE(general_position(q, std::span<const ProjPoint<mpq_class>>(cfg.points)).ok);

  const std::vector<LatticeVector> six{line(1, 2), line(3, 4), line(5, 6), line(7, 8), cubic(7, 8), cubic(8, 7)};
  const auto v6 = verify_config(q, cfg, std::span<const LatticeVector>(six));
  EXPECT_EQ(v6.concurrent, 6);
  EXPECT_TRUE(v6.partner_pair);
  EXPECT_TRUE(v6.partners_concurrent);
  EXPECT_EQ(pairing(cubic(7, 8), cubic(8, 7)), 3);

  const auto ten = family_clique();
  const auto v10 = verify_config(q, cfg, std::span<const LatticeVector>(ten));
  EXPECT_EQ(v10.concurrent, 10);
  EXPECT_TRUE(v10.partner_pair);
  EXPECT_TRUE(v10.partners_concurrent);
  for (int i = 6; i < 10; ++i) EXPECT_EQ(ten[static_cast<std::size_t>(i)].degree(), 5);
}

TEST(Search, FamilySlice) {
  const auto s = family_slice();
  EXPECT_FALSE(s.has_var(0) || s.has_var(1) || s.has_var(2) || s.has_var(3));
  EXPECT_EQ(s.degree(5), 2);
  Assignment at;
  at[4] = mpq_class(1, 2);
  at[5] = mpq_class(-1, 2);
  EXPECT_EQ(evaluate(s, at), 0);
  const auto fp = classify_family_point(mpq_class(1, 2), mpq_class(-1, 2));
  EXPECT_TRUE(fp.on_curve && fp.avoids_v2 && fp.realizes);
  EXPECT_EQ(*fp.a, mpq_class(3, 5));
  EXPECT_EQ(fp.concurrent, 10);
  const auto off = classify_family_point(mpq_class(1), mpq_class(1));
  EXPECT_FALSE(off.on_curve);
  EXPECT_FALSE(off.realizes);
}

TEST(Search, FamilyPointScan) {
  const auto h1 = family_point_scan(1);
  bool q = false;
  for (const auto& p : h1) q |= p.e == mpq_class(1, 2) && p.f == mpq_class(-1, 2) && p.realizes;
  EXPECT_FALSE(q);  // 1/2 has height 2
  const auto h2 = family_point_scan(2);
  for (const auto& p : h2) q |= p.e == mpq_class(1, 2) && p.f == mpq_class(-1, 2) && p.realizes;
  EXPECT_TRUE(q);
  const auto h = family_point_scan(100);
  for (const auto& p : h) {
    EXPECT_TRUE(p.on_curve);
    EXPECT_TRUE(p.avoids_v2) << p.e << ", " << p.f;
    EXPECT_LE(height(p.e), 100);
    EXPECT_LE(height(p.f), 100);
  }
  EXPECT_EQ(h.size(), 6u);
}
