#include <gtest/gtest.h>

#include <random>

#include "dp1/field.hpp"
#include "dp1/linalg.hpp"

using namespace dp1;

TEST(Field, PrimeFieldArithmetic) {
  const PrimeField f(19);
  const auto a = f.from_int(7), b = f.from_int(-3);
  EXPECT_EQ(b.v, 16u);
  EXPECT_EQ((a + b).v, 4u);
  EXPECT_EQ((a - b).v, 10u);
  EXPECT_EQ((a * b).v, (7u * 16u) % 19u);
  for (int x = 1; x < 19; ++x) EXPECT_EQ((f.from_int(x) * f.from_int(x).inverse()).v, 1u);
  EXPECT_THROW(f.zero().inverse(), std::domain_error);
  EXPECT_EQ(f.parse("-1").v, 18u);
  EXPECT_EQ(f.parse("1/2").v, 10u);
  EXPECT_THROW(f.parse("x"), std::invalid_argument);
  EXPECT_THROW(PrimeField(21), std::invalid_argument);
}

TEST(Field, Rationals) {
  const RationalField q;
  EXPECT_EQ(q.parse("5/4"), mpq_class(5, 4));
  EXPECT_EQ(q.parse("-2/4"), mpq_class(-1, 2));
  EXPECT_EQ(q.str(q.parse("10/-4")), "-5/2");
  EXPECT_THROW(q.parse("1/0"), std::domain_error);
  EXPECT_THROW(q.parse("abc"), std::invalid_argument);
}

TEST(LinAlg, DeterminantAgreesWithBareiss) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  const RationalField q;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 7;
    Matrix<mpq_class> m(n, n, mpq_class(0));
    Matrix<mpz_class> z(n, n, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int v = d(rng);
        m(i, j) = v;
        z(i, j) = v;
      }
    // Make some matrices singular.
    if (trial % 5 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) {
        m(1, j) = m(0, j) * 3;
        z(1, j) = z(0, j) * 3;
      }
    EXPECT_EQ(determinant(q, m), mpq_class(bareiss_determinant(z, mpz_class(1))));
  }
}

TEST(LinAlg, KnownDeterminant) {
  const RationalField q;
  Matrix<mpq_class> m(3, 3, mpq_class(0));
  const int v[9] = {2, 0, 1, 1, 3, 2, 1, 1, 2};
  for (int i = 0; i < 9; ++i) m.a[static_cast<std::size_t>(i)] = v[i];
  EXPECT_EQ(determinant(q, m), mpq_class(6));
}

TEST(LinAlg, NullspaceOverQAndFp) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  const RationalField q;
  const PrimeField f(101);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 2 + trial % 5, c = 3 + trial % 6;
    Matrix<mpq_class> m(r, c, mpq_class(0));
    Matrix<Fp> mf(r, c, f.zero());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const int v = d(rng);
        m(i, j) = mpq_class(v, 1 + (i + j) % 3);
        mf(i, j) = f.from_int(v) / f.from_int(static_cast<long long>(1 + (i + j) % 3));
      }
    if (r > 2)
      for (std::size_t j = 0; j < c; ++j) {
        m(2, j) = m(0, j) - m(1, j);
        mf(2, j) = mf(0, j) - mf(1, j);
      }
    const auto ns = nullspace(q, m);
    EXPECT_EQ(ns.size() + rank(q, m), c);
    for (const auto& v : ns)
      for (std::size_t i = 0; i < r; ++i) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
    // Small entries: the rank modulo 101 matches the rational rank.
    EXPECT_EQ(rank(f, mf), rank(q, m));
    const auto nf = nullspace(f, mf);
    for (const auto& v : nf)
      for (std::size_t i = 0; i < r; ++i) {
        Fp s = f.zero();
        for (std::size_t j = 0; j < c; ++j) s += mf(i, j) * v[j];
        EXPECT_TRUE(is_zero(s));
      }
  }
}

TEST(LinAlg, BareissEchelonMatchesGaussRank) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  const RationalField q;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 7;
    Matrix<mpz_class> z(r, c, mpz_class(0));
    Matrix<mpq_class> m(r, c, mpq_class(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const int v = (j % 3 == 1) ? 0 : d(rng);  // zero columns force pivot skips
        z(i, j) = v;
        m(i, j) = v;
      }
    const auto piv = bareiss_echelon(z, mpz_class(1));
    // Plain Gauss for the reference rank.
    std::size_t gr = 0;
    {
      auto g = m;
      for (std::size_t col = 0; col < c && gr < r; ++col) {
        std::size_t p = gr;
        while (p < r && g(p, col) == 0) ++p;
        if (p == r) continue;
        g.swap_rows(p, gr);
        for (std::size_t i = gr + 1; i < r; ++i) {
          const mpq_class f = g(i, col) / g(gr, col);
          for (std::size_t j = col; j < c; ++j) g(i, j) -= f * g(gr, j);
        }
        ++gr;
      }
    }
    EXPECT_EQ(piv.size(), gr);
    EXPECT_EQ(rank(q, m), gr);
  }
}
