#pragma once

// Dense exact linear algebra: echelon forms, rank, nullspace and
// determinants over the fields of field.hpp, plus fraction-free (Bareiss)
// elimination over integral domains such as Z and polynomial rings.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dp1/field.hpp"

namespace dp1 {

template <class E>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<E> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), a(r * c, fill) {}

  E& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void append_row(const std::vector<E>& row) {
    if (rows == 0 && cols == 0) cols = row.size();
    if (row.size() != cols) throw std::invalid_argument("row length mismatch");
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
  }
};

inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

/// Fraction-free row echelon form in place; returns the pivot columns.
/// Entries stay in the ring: every division is exact.
template <class R>
std::vector<std::size_t> bareiss_echelon(Matrix<R>& m, const R& one) {
  std::vector<std::size_t> pivots;
  R prev = one;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j)
        m(i, j) = exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      m(i, c) = one - one;
    }
    prev = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Determinant of a square matrix over an integral domain by Bareiss.
template <class R>
R bareiss_determinant(Matrix<R> m, const R& one) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return one;
  R prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return one - one;
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return negate ? (one - one) - d : d;
}

/// Reduced row echelon form over a field, in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& field, Matrix<typename F::Elem>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    const typename F::Elem inv = field.one() / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const typename F::Elem f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Over Q, eliminate fraction-free on an integer copy first, then finish
/// the (much smaller) back substitution with rationals.
inline std::vector<std::size_t> rref(const RationalField& field, Matrix<mpq_class>& m) {
  Matrix<mpz_class> z(m.rows, m.cols, mpz_class(0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols; ++j) z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  bareiss_echelon(z, mpz_class(1));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = mpq_class(z(i, j));
  std::vector<std::size_t> pivots;
  // Rows are already in echelon form; normalize and clear upwards.
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    if (is_zero(m(r, c))) continue;
    const mpq_class inv = field.one() / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (is_zero(m(i, c))) continue;
      const mpq_class f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& field, Matrix<typename F::Elem> m) {
  return rref(field, m).size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& field, Matrix<typename F::Elem> m) {
  using E = typename F::Elem;
  const auto pivots = rref(field, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<E>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<E> v(m.cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.zero() - m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
typename F::Elem determinant(const F& field, Matrix<typename F::Elem> m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  typename F::Elem d = field.one();
  const std::size_t n = m.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return field.zero();
    if (p != c) {
      m.swap_rows(p, c);
      d = field.zero() - d;
    }
    d = d * m(c, c);
    const typename F::Elem inv = field.one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const typename F::Elem f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return d;
}

}  // namespace dp1
