#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dp1/cliques.hpp"
#include "dp1/plane.hpp"

using namespace dp1;

namespace {

using FpPoint = ProjPoint<Fp>;
using QPoint = ProjPoint<mpq_class>;

PointConfig<PrimeField> f19_example(const PrimeField& f) {
  const std::vector<Fp> params{f.from_int(2), f.from_int(4), f.from_int(16), f.from_int(7), f.from_int(18), f.from_int(16)};
  return setup_a(f, std::span<const Fp>(params));
}

PointConfig<RationalField> family_q(const RationalField& q) {
  // b..f at the family point; a = 3 stands in for the derived value.
  const std::vector<mpq_class> params{mpq_class(3), mpq_class(-1), mpq_class(5, 4), mpq_class(-1), mpq_class(1, 2),
                                      mpq_class(-1, 2)};
  return setup_a(q, std::span<const mpq_class>(params));
}

std::vector<LatticeVector> classes_of(const Clique& k) {
  std::vector<LatticeVector> v;
  for (auto i : k) v.push_back(all_classes()[i]);
  return v;
}

std::array<FpPoint, 8> random_points(const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.characteristic() - 1);
  std::array<FpPoint, 8> pts;
  for (auto& p : pts) {
    do {
      p = {f.from_int(d(rng)), f.from_int(d(rng)), f.from_int(d(rng))};
    } while (is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2]));
  }
  return pts;
}

}  // namespace

TEST(Plane, Monomials) {
  const auto m2 = monomials(2);
  ASSERT_EQ(m2.size(), 6u);
  EXPECT_EQ(m2[0], (std::array<int, 3>{2, 0, 0}));
  EXPECT_EQ(m2[1], (std::array<int, 3>{1, 1, 0}));
  EXPECT_EQ(m2[2], (std::array<int, 3>{1, 0, 1}));
  EXPECT_EQ(m2[5], (std::array<int, 3>{0, 0, 2}));
  EXPECT_EQ(monomials(6).size(), 28u);
}

TEST(Plane, LineThroughTwoPoints) {
  const RationalField q;
  const std::array<QPoint, 2> pts{{{0, 1, 1}, {1, 0, 1}}};
  const std::array<Condition, 2> conds{{{0, 1}, {1, 1}}};
  const auto m = condition_matrix(q, 1, std::span<const QPoint>(pts), std::span<const Condition>(conds));
  EXPECT_EQ(m.rows, 2u);
  EXPECT_EQ(m.cols, 3u);
  EXPECT_EQ(rank(q, m), 2u);
}

TEST(Plane, MultiplicityRowCounts) {
  const RationalField q;
  const QPoint p{1, 2, 1};
  EXPECT_EQ(multiplicity_rows(q, p, 3, 2, 2).size(), 3u);
  EXPECT_EQ(multiplicity_rows(q, p, 6, 3, 2).size(), 6u);
  EXPECT_THROW(multiplicity_rows(q, p, 1, 3, 2), std::invalid_argument);
}

TEST(Plane, CubicSystemIsSquare) {
  // c_{7,8} with the target: 6 simple points, one double point, and P.
  const RationalField q;
  const auto cfg = family_q(q);
  const auto conds = class_conditions(cubic(7, 8));
  const auto m = condition_matrix(q, 3, std::span<const QPoint>(cfg.points), std::span<const Condition>(conds), cfg.target);
  EXPECT_EQ(m.rows, 10u);
  EXPECT_EQ(m.cols, 10u);
}

TEST(Plane, GeneralPositionWitnesses) {
  const PrimeField f(19);
  auto cfg = f19_example(f);
  EXPECT_TRUE(general_position(f, std::span<const FpPoint>(cfg.points)).ok);
  auto dup = cfg.points;
  dup[1] = dup[0];
  const auto r = general_position(f, std::span<const FpPoint>(dup));
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.witness.find("coincident"), std::string::npos);
  // d = 0 puts P7 on the line x = 0 through P1 and P2.
  auto col = cfg.points;
  col[6] = {f.zero(), f.one(), f.from_int(18)};
  const auto r2 = general_position(f, std::span<const FpPoint>(col));
  EXPECT_FALSE(r2.ok);
  EXPECT_NE(r2.witness.find("collinear"), std::string::npos);
}

TEST(Plane, ConicAndCubicViolations) {
  const RationalField q;
  // Six points on x^2 + y^2 = z^2 plus two generic points.
  std::array<QPoint, 8> pts{{{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1},
                             {mpq_class(3, 5), mpq_class(4, 5), 1}, {mpq_class(5, 13), mpq_class(-12, 13), 1},
                             {2, 3, 7}, {5, -7, 11}}};
  const auto r = general_position(q, std::span<const QPoint>(pts));
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.witness.find("conic"), std::string::npos) << r.witness;
}

TEST(Plane, F19ExampleRealizesCliqueEight) {
  const PrimeField f(19);
  const auto cfg = f19_example(f);
  const auto cls = classes_of(pinned_type8());
  EXPECT_EQ(concurrent_count(f, std::span<const FpPoint>(cfg.points), cfg.target, std::span<const LatticeVector>(cls)), 10);
}

TEST(Plane, SetupLines) {
  const RationalField q;
  const auto cfg = family_q(q);
  const auto l12 = curve_for_class(q, std::span<const QPoint>(cfg.points), line(1, 2));
  ASSERT_TRUE(l12);
  EXPECT_EQ(l12->coeffs, (std::vector<mpq_class>{1, 0, 0}));  // x = 0
  const auto l56 = curve_for_class(q, std::span<const QPoint>(cfg.points), line(5, 6));
  ASSERT_TRUE(l56);
  EXPECT_EQ(l56->coeffs, (std::vector<mpq_class>{1, -1, 0}));  // x = y
  const auto lines = classes_of(four_lines());
  EXPECT_EQ(concurrent_count(q, std::span<const QPoint>(cfg.points), cfg.target, std::span<const LatticeVector>(lines)), 4);
  // A line not through P.
  const auto l13 = curve_for_class(q, std::span<const QPoint>(cfg.points), line(1, 3));
  ASSERT_TRUE(l13);
  EXPECT_FALSE(is_zero(evaluate(q, *l13, cfg.target)));
}

TEST(Plane, BlowupClassesAreRejected) {
  const PrimeField f(19);
  const auto cfg = f19_example(f);
  EXPECT_THROW(curve_for_class(f, std::span<const FpPoint>(cfg.points), blowup(1)), std::invalid_argument);
  const std::vector<LatticeVector> k{line(1, 2), blowup(3)};
  EXPECT_THROW(concurrent_count(f, std::span<const FpPoint>(cfg.points), cfg.target, std::span<const LatticeVector>(k)),
               std::invalid_argument);
}

TEST(Plane, RefusesCharacteristicTwoAndThree) {
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    std::array<FpPoint, 8> pts;
    for (auto& x : pts) x = {f.one(), f.one(), f.one()};
    EXPECT_THROW(curve_for_class(f, std::span<const FpPoint>(pts), line(1, 2)), std::domain_error);
  }
}

TEST(Plane, UniqueCurveForEveryClassInGeneralPosition) {
  const PrimeField f(1009);
  std::mt19937_64 rng(2024);
  int configs = 0;
  while (configs < 3) {
    const auto pts = random_points(f, rng);
    if (!general_position(f, std::span<const FpPoint>(pts)).ok) continue;
    ++configs;
    for (const auto& cls : all_classes()) {
      if (cls.degree() == 0) continue;
      const auto m = condition_matrix(f, cls.degree(), std::span<const FpPoint>(pts),
                                      std::span<const Condition>(class_conditions(cls)));
      EXPECT_EQ(nullspace(f, m).size(), 1u) << to_string(cls);
    }
  }
}

TEST(Plane, ProjectiveScalingInvariance) {
  const PrimeField f(19);
  const auto cfg = f19_example(f);
  auto scaled = cfg.points;
  for (std::size_t i = 0; i < 8; ++i)
    for (auto& c : scaled[i]) c = c * f.from_int(static_cast<long long>(i + 2));
  EXPECT_TRUE(general_position(f, std::span<const FpPoint>(scaled)).ok);
  const auto cls = classes_of(pinned_type8());
  auto target = cfg.target;
  target[2] = f.from_int(5);
  EXPECT_EQ(concurrent_count(f, std::span<const FpPoint>(scaled), target, std::span<const LatticeVector>(cls)), 10);
}

TEST(Plane, GeneralPositionIsSymmetric) {
  const PrimeField f(31);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = random_points(f, rng);
    const bool base = general_position(f, std::span<const FpPoint>(pts)).ok;
    for (int k = 0; k < 4; ++k) {
      std::shuffle(pts.begin(), pts.end(), rng);
      EXPECT_EQ(general_position(f, std::span<const FpPoint>(pts)).ok, base);
    }
  }
}

TEST(Plane, ChartRuleMatchesAllPartials) {
  const PrimeField f(1009);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = random_points(f, rng);
    const int n = 3 + trial % 4;  // 3..6, all prime to 1009
    const int m = trial % 2 ? 2 : 3;
    std::vector<Condition> conds{{0, m}, {1, 1}, {2, 1}};
    auto a = condition_matrix(f, n, std::span<const FpPoint>(pts), std::span<const Condition>(conds), std::nullopt,
                              DerivativeRule::Chart);
    auto b = condition_matrix(f, n, std::span<const FpPoint>(pts), std::span<const Condition>(conds), std::nullopt,
                              DerivativeRule::AllPartials);
    const auto na = nullspace(f, a);
    const auto rb = rank(f, b);
    EXPECT_EQ(na.size() + rb, static_cast<std::size_t>(monomial_count(n)));
    // Each chart-rule solution satisfies the all-partials system.
    for (const auto& v : na)
      for (std::size_t i = 0; i < b.rows; ++i) {
        Fp s = f.zero();
        for (std::size_t j = 0; j < b.cols; ++j) s += b(i, j) * v[j];
        EXPECT_TRUE(is_zero(s));
      }
  }
}
