#include <gtest/gtest.h>

#include <random>

#include "dp1/symbolic.hpp"

using namespace dp1;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

const std::vector<MultiPoly>& SA() { return general_position_polynomials('A'); }

Assignment family_q() {
  Assignment at;
  at[1] = mpq_class(-1);
  at[2] = mpq_class(5, 4);
  at[3] = mpq_class(-1);
  at[4] = mpq_class(1, 2);
  at[5] = mpq_class(-1, 2);
  return at;
}

}  // namespace

TEST(Symbolic, SetupTemplates) {
  const auto a = symbolic_point_setup('A');
  EXPECT_EQ(a.points[6][0], P("d"));
  EXPECT_EQ(a.points[6][1], P("1"));
  EXPECT_EQ(a.points[6][2], P("e"));
  EXPECT_EQ(a.target[2], P("1"));
  EXPECT_TRUE(a.target[0].is_zero() && a.target[1].is_zero());
  const auto b = symbolic_point_setup('B');
  EXPECT_EQ(b.points[5][0], P("1"));
  EXPECT_EQ(b.points[5][1], P("c"));
  EXPECT_EQ(b.points[5][2], P("d"));
  EXPECT_THROW(symbolic_point_setup('C'), std::invalid_argument);
  EXPECT_EQ(symbolic_chart(a.points[1]), 1);  // (0:1:a)
  EXPECT_EQ(symbolic_chart(b.points[7]), 0);  // (1:g:h)
}

TEST(Symbolic, ConicConditionRows) {
  const auto m = symbolic_condition_matrix(symbolic_point_setup('A'), CurveSpec::of(conic(2, 4, 8)));
  ASSERT_EQ(m.rows, 6u);
  ASSERT_EQ(m.cols, 6u);
  const std::vector<std::vector<const char*>> want{{"0", "0", "0", "1", "1", "1"},   {"1", "0", "1", "0", "0", "1"},
                                                   {"1", "1", "1", "1", "1", "1"},   {"1", "1", "c", "1", "c", "c^2"},
                                                   {"d^2", "d", "de", "1", "e", "e^2"}, {"0", "0", "0", "0", "0", "1"}};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(m(i, j), P(want[i][j])) << i << "," << j;
}

TEST(Symbolic, ConicResidual) {
  const auto r = constraint_polynomial('A', conic(2, 4, 8));
  EXPECT_TRUE(equal_up_to_scalar(r.residual, P("(d-1)(e-d-1)")));
  ASSERT_EQ(r.stripped.size(), 1u);
  EXPECT_EQ(r.stripped[0].factor, P("c-1"));
  EXPECT_TRUE(r.identity_holds());
}

TEST(Symbolic, LineThroughTargetIsUnconstrained) {
  const auto r = constraint_polynomial('A', line(1, 2));
  EXPECT_TRUE(r.raw.is_zero());
  EXPECT_TRUE(r.residual.is_zero());
  EXPECT_TRUE(r.identity_holds());
}

TEST(Symbolic, NonSquareSystemIsRejected) {
  CurveSpec spec{2, {1, 1, 1, 1, 0, 0, 0, 0}, true};
  EXPECT_THROW(constraint_polynomial(symbolic_point_setup('A'), spec, SA()), std::invalid_argument);
  EXPECT_THROW(CurveSpec::of(blowup(3)), std::invalid_argument);
}

TEST(Symbolic, GeneralPositionSet) {
  const auto& S = SA();
  for (const char* f : {"d - f", "c + d - f - 1", "b*d - f + 1", "d", "c - 1", "a - 1"})
    EXPECT_TRUE(contains_up_to_scalar(S, P(f))) << f;
  for (const auto& s : S) EXPECT_FALSE(s.is_constant());
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      ASSERT_TRUE(gcd(S[i], S[j]).is_constant()) << S[i] << " / " << S[j];
}

TEST(Symbolic, GeneralPositionSetMatchesPlaneTest) {
  // S nonvanishing <=> the eight points pass the concrete test.
  const std::uint32_t prime = 101;
  const PrimeField f(prime);
  std::mt19937_64 rng(31);
  int both = 0, neither = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::array<std::uint32_t, kNumVars> vals{};
    std::vector<Fp> params;
    for (int v = 0; v < 6; ++v) {
      vals[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(rng() % prime);
      params.push_back(f.from_int(vals[static_cast<std::size_t>(v)]));
    }
    bool s_ok = true;
    for (const auto& s : SA()) s_ok = s_ok && evaluate_mod(s, vals, prime) != 0;
    const auto cfg = setup_a(f, std::span<const Fp>(params));
    const bool gp = general_position(f, std::span<const ProjPoint<Fp>>(cfg.points)).ok;
    EXPECT_EQ(s_ok, gp);
    (gp ? both : neither)++;
  }
  EXPECT_GT(both, 0);
  EXPECT_GT(neither, 0);
}

TEST(Symbolic, StrippingIsConfluent) {
  const auto r = constraint_polynomial('A', cubic(7, 8));
  auto rev = SA();
  std::reverse(rev.begin(), rev.end());
  EXPECT_TRUE(equal_up_to_scalar(strip_factors(r.residual, SA()).core, strip_factors(r.residual, rev).core));
  EXPECT_TRUE(r.identity_holds());
}

TEST(Symbolic, CubicEliminationReproducesF1AndF2) {
  const auto rep = reproduce_f2();
  EXPECT_TRUE(rep.c78.identity_holds());
  EXPECT_TRUE(rep.c87.identity_holds());
  EXPECT_TRUE(rep.f1_matches);
  EXPECT_TRUE(rep.identity_holds);
  EXPECT_TRUE(rep.f2_matches);
  EXPECT_TRUE(equal_up_to_factors(rep.c78.residual, f1_polynomial(), SA()));
  // Everything removed from the eliminated polynomial is an S-member.
  for (const auto& f : rep.stripped.factors) EXPECT_TRUE(contains_up_to_scalar(SA(), f.factor));
  EXPECT_EQ(evaluate(f2_polynomial(), family_q()), 0);
}

TEST(Symbolic, QuotedFormsDifferInOnePlace) {
  const auto quoted1 = parse_poly(kF1Quoted);
  const auto [p, q] = split_linear(f1_polynomial(), 0);
  EXPECT_EQ(quoted1 - f1_polynomial(), q.scaled(-2));
  const auto [qp, qq] = split_linear(quoted1, 0);
  EXPECT_NE(P("f-d") * qp + qq, P("d(d-f)(c+d-f-1)(bd-f+1)"));
  EXPECT_EQ(P("f-d") * p + q, P("d(d-f)(c+d-f-1)(bd-f+1)"));

  const auto quoted2 = parse_poly(kF2Quoted);
  EXPECT_EQ(f2_polynomial() - quoted2, P("4bde^2f - 4bde^2"));
  EXPECT_NE(evaluate(quoted2, family_q()), 0);
}

TEST(Symbolic, SubstituteLinear) {
  const auto conic = P("(d-1)(e-d-1)");
  const auto sol = solve_linear(conic, 4);
  EXPECT_EQ(sol.num, P("d+1"));
  EXPECT_EQ(sol.den, P("1"));
  EXPECT_EQ(sol.side_condition, P("d-1"));
  EXPECT_TRUE(substitute_linear({conic}, sol).front().is_zero());

  const LinearSolution identity{2, P("c"), P("1"), P("1")};
  const std::vector<MultiPoly> sys{P("c^2 + a"), P("b*c - 1")};
  EXPECT_EQ(substitute_linear(sys, identity), sys);

  EXPECT_THROW(solve_linear(P("e^2 - d"), 4), std::invalid_argument);
  EXPECT_THROW(solve_linear(P("d"), 4), std::invalid_argument);
}

TEST(Symbolic, F1VanishesWhereTheCubicMeetsTarget) {
  // Random rational b..f, a solved from F1: the plane module finds c_{7,8}
  // through P exactly.
  const RationalField q;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-9, 9);
  const auto [p, qq] = split_linear(f1_polynomial(), 0);
  int checked = 0;
  while (checked < 5) {
    Assignment at;
    for (int v = 1; v < 6; ++v) at[static_cast<std::size_t>(v)] = mpq_class(d(rng), 1 + std::abs(d(rng)));
    const mpq_class pv = evaluate(p, at);
    if (pv == 0) continue;
    at[0] = -evaluate(qq, at) / pv;
    std::vector<mpq_class> params;
    for (int v = 0; v < 6; ++v) params.push_back(*at[static_cast<std::size_t>(v)]);
    const auto cfg = setup_a(q, std::span<const mpq_class>(params));
    if (!general_position(q, std::span<const ProjPoint<mpq_class>>(cfg.points)).ok) continue;
    EXPECT_EQ(evaluate(f1_polynomial(), at), 0);
    const auto curve = curve_for_class(q, std::span<const ProjPoint<mpq_class>>(cfg.points), cubic(7, 8));
    ASSERT_TRUE(curve);
    EXPECT_EQ(evaluate(q, *curve, cfg.target), 0);
    ++checked;
  }
}

TEST(Symbolic, OracleAgreementSetupA) {
  for (const auto& cls : {cubic(7, 8), cubic(8, 7)}) {
    const auto r = constraint_polynomial('A', cls);
    const auto rep = oracle_check('A', cls, r.residual, 100, 1000003, 12345);
    EXPECT_EQ(rep.samples, 100);
    EXPECT_EQ(rep.agreements, 100) << (rep.disagreements.empty() ? "" : rep.disagreements.front());
    EXPECT_GE(rep.on_hypersurface, 40);
    EXPECT_LT(rep.on_hypersurface, 100);
  }
}

TEST(Symbolic, SetupBCubicSevenFive) {
  const auto& S = general_position_polynomials('B');
  const auto r = constraint_polynomial('B', cubic(7, 5));
  EXPECT_TRUE(r.identity_holds());
  EXPECT_TRUE(equal_up_to_factors(r.residual, c75_numerator(), S));
  EXPECT_TRUE(strip_factors(c75_denominator(), S).core.is_constant());
  const auto rep = oracle_check('B', cubic(7, 5), r.residual, 100, 1000003, 777);
  EXPECT_EQ(rep.agreements, 100);
  EXPECT_GE(rep.on_hypersurface, 40);
}
