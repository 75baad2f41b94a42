#pragma once

// Plane geometry over an exact field: projective points, the general
// position test for eight points, linear systems of plane curves with
// prescribed multiplicities and concurrency at the target point P.
//
// The row builders are written over any commutative ring with from_int(),
// so the symbolic module reuses them with polynomial coordinates.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp1/field.hpp"
#include "dp1/linalg.hpp"
#include "dp1/picard.hpp"

namespace dp1 {

template <class E>
using ProjPoint = std::array<E, 3>;

/// Exponents (i, j, k) of x^i y^j z^k with i+j+k = n, lexicographically
/// descending: x^2, xy, xz, y^2, yz, z^2 for n = 2.
inline std::vector<std::array<int, 3>> monomials(int n) {
  std::vector<std::array<int, 3>> out;
  for (int i = n; i >= 0; --i)
    for (int j = n - i; j >= 0; --j) out.push_back({i, j, n - i - j});
  return out;
}

inline int monomial_count(int n) { return (n + 1) * (n + 2) / 2; }

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

template <class Ring>
typename Ring::Elem power(const Ring& ring, const typename Ring::Elem& x, int e) {
  typename Ring::Elem r = ring.one();
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

/// Hasse derivative of every degree-n monomial at pt, of order d[c] in
/// coordinate c.  Order (0,0,0) is plain evaluation.
template <class Ring>
std::vector<typename Ring::Elem> derivative_row(const Ring& ring, const ProjPoint<typename Ring::Elem>& pt, int n,
                                                std::array<int, 3> d) {
  std::vector<typename Ring::Elem> row;
  for (const auto& e : monomials(n)) {
    long long coef = 1;
    for (int c = 0; c < 3; ++c) coef *= binomial(e[static_cast<std::size_t>(c)], d[static_cast<std::size_t>(c)]);
    if (coef == 0) {
      row.push_back(ring.zero());
      continue;
    }
    typename Ring::Elem v = ring.from_int(coef);
    for (std::size_t c = 0; c < 3; ++c)
      v = v * power(ring, pt[c], e[c] - d[c]);
    row.push_back(v);
  }
  return row;
}

enum class DerivativeRule {
  Chart,        // Taylor coefficients in the two coordinates other than the chart coordinate
  AllPartials,  // every derivative of order m-1 in x, y, z
};

/// Rows forcing multiplicity >= m at pt.  Under the chart rule pt[chart]
/// must be a unit, and the rows are the Hasse derivatives of order < m in
/// the two remaining coordinates: m(m+1)/2 rows.
template <class Ring>
std::vector<std::vector<typename Ring::Elem>> multiplicity_rows(const Ring& ring,
                                                                const ProjPoint<typename Ring::Elem>& pt, int n,
                                                                int m, int chart,
                                                                DerivativeRule rule = DerivativeRule::Chart) {
  std::vector<std::vector<typename Ring::Elem>> rows;
  if (m <= 0) return rows;
  if (m * (m + 1) / 2 > monomial_count(n))
    throw std::invalid_argument("multiplicity " + std::to_string(m) + " needs more conditions than degree " +
                                std::to_string(n) + " has coefficients");
  if (rule == DerivativeRule::Chart) {
    const int u = chart == 0 ? 1 : 0;
    const int v = chart == 2 ? 1 : 2;
    for (int total = 0; total < m; ++total)
      for (int a = total; a >= 0; --a) {
        std::array<int, 3> d{0, 0, 0};
        d[static_cast<std::size_t>(u)] = a;
        d[static_cast<std::size_t>(v)] = total - a;
        rows.push_back(derivative_row(ring, pt, n, d));
      }
  } else {
    const int k = m - 1;
    for (int i = k; i >= 0; --i)
      for (int j = k - i; j >= 0; --j) rows.push_back(derivative_row(ring, pt, n, {i, j, k - i - j}));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Points over a field.

/// Index of the last nonzero coordinate.
template <class E>
int chart_of(const ProjPoint<E>& p) {
  for (int c = 2; c >= 0; --c)
    if (!is_zero(p[static_cast<std::size_t>(c)])) return c;
  throw std::invalid_argument("the zero vector is not a projective point");
}

/// Scales the last nonzero coordinate to 1.
template <class F>
ProjPoint<typename F::Elem> normalize(const F& field, const ProjPoint<typename F::Elem>& p) {
  const int c = chart_of(p);
  const typename F::Elem inv = field.one() / p[static_cast<std::size_t>(c)];
  ProjPoint<typename F::Elem> q;
  for (std::size_t i = 0; i < 3; ++i) q[i] = p[i] * inv;
  return q;
}

template <class F>
bool same_point(const F& field, const ProjPoint<typename F::Elem>& p, const ProjPoint<typename F::Elem>& q) {
  return normalize(field, p) == normalize(field, q);
}

template <class F>
std::string to_string(const F& field, const ProjPoint<typename F::Elem>& p) {
  return "(" + field.str(p[0]) + ":" + field.str(p[1]) + ":" + field.str(p[2]) + ")";
}

struct Condition {
  int point = 0;  // index into the point list
  int multiplicity = 1;
};

/// Rows of the linear system for degree-n curves with the given conditions,
/// followed by an evaluation row at `extra` when present.
template <class F>
Matrix<typename F::Elem> condition_matrix(const F& field, int n,
                                          std::span<const ProjPoint<typename F::Elem>> points,
                                          std::span<const Condition> conditions,
                                          const std::optional<ProjPoint<typename F::Elem>>& extra = std::nullopt,
                                          DerivativeRule rule = DerivativeRule::Chart) {
  Matrix<typename F::Elem> m;
  m.cols = static_cast<std::size_t>(monomial_count(n));
  for (const auto& c : conditions) {
    const auto& p = points[static_cast<std::size_t>(c.point)];
    for (auto& row : multiplicity_rows(field, p, n, c.multiplicity, chart_of(p), rule)) m.append_row(row);
  }
  if (extra) m.append_row(derivative_row(field, *extra, n, {0, 0, 0}));
  return m;
}

struct GPResult {
  bool ok = true;
  std::string witness;  // first violated condition, empty when ok
  explicit operator bool() const { return ok; }
};

/// No two points equal, no three collinear, no six on a conic and no cubic
/// through all eight singular at one of them.
template <class F>
GPResult general_position(const F& field, std::span<const ProjPoint<typename F::Elem>> pts) {
  using E = typename F::Elem;
  const int n = static_cast<int>(pts.size());
  auto label = [](int i) { return "P" + std::to_string(i + 1); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (same_point(field, pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]))
        return {false, "coincident points " + label(i) + ", " + label(j)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Matrix<E> m(3, 3, field.zero());
        for (std::size_t c = 0; c < 3; ++c) {
          m(0, c) = pts[static_cast<std::size_t>(i)][c];
          m(1, c) = pts[static_cast<std::size_t>(j)][c];
          m(2, c) = pts[static_cast<std::size_t>(k)][c];
        }
        if (is_zero(determinant(field, m)))
          return {false, "collinear " + label(i) + ", " + label(j) + ", " + label(k)};
      }
  if (n >= 6) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != 6) continue;
      std::vector<Condition> conds;
      std::string who;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) {
          conds.push_back({i, 1});
          who += (who.empty() ? "" : ", ") + label(i);
        }
      if (is_zero(determinant(field, condition_matrix(field, 2, pts, conds))))
        return {false, "six on a conic: " + who};
    }
  }
  if (n == 8) {
    for (int s = 0; s < 8; ++s) {
      std::vector<Condition> conds;
      for (int i = 0; i < 8; ++i) conds.push_back({i, i == s ? 2 : 1});
      if (is_zero(determinant(field, condition_matrix(field, 3, pts, conds))))
        return {false, "cubic through all eight, singular at " + label(s)};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Curves for exceptional classes.

template <class F>
struct PlaneCurve {
  int degree = 0;
  std::vector<typename F::Elem> coeffs;  // over monomials(degree)
};

template <class F>
typename F::Elem evaluate(const F& field, const PlaneCurve<F>& c, const ProjPoint<typename F::Elem>& p) {
  const auto row = derivative_row(field, p, c.degree, {0, 0, 0});
  typename F::Elem s = field.zero();
  for (std::size_t i = 0; i < row.size(); ++i) s = s + row[i] * c.coeffs[i];
  return s;
}

/// Scales the first nonzero coefficient to 1.
template <class F>
PlaneCurve<F> monic(const F& field, PlaneCurve<F> c) {
  for (const auto& x : c.coeffs)
    if (!is_zero(x)) {
      const typename F::Elem inv = field.one() / x;
      for (auto& y : c.coeffs) y = y * inv;
      break;
    }
  return c;
}

template <class F>
std::string to_string(const F& field, const PlaneCurve<F>& c) {
  static const char* var = "xyz";
  std::string s;
  const auto mons = monomials(c.degree);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (is_zero(c.coeffs[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + field.str(c.coeffs[i]) + ")";
    for (std::size_t v = 0; v < 3; ++v)
      if (mons[i][v]) s += std::string("*") + var[v] + (mons[i][v] > 1 ? "^" + std::to_string(mons[i][v]) : "");
  }
  return s.empty() ? "0" : s;
}

struct ExcessDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Derivative conditions degenerate in characteristic 2 and 3 (the Euler
/// relation fails once p divides the degree); curve computations refuse.
template <class F>
void require_curve_characteristic(const F& field) {
  const auto p = field.characteristic();
  if (p == 2 || p == 3)
    throw std::domain_error("curve conditions are not supported in characteristic " + std::to_string(p));
}

inline std::vector<Condition> class_conditions(const LatticeVector& cls) {
  std::vector<Condition> conds;
  for (int i = 1; i <= 8; ++i)
    if (cls.mult(i) > 0) conds.push_back({i - 1, cls.mult(i)});
  return conds;
}

/// The unique curve of degree a with multiplicity b_i at P_i, or none.
template <class F>
std::optional<PlaneCurve<F>> curve_for_class(const F& field, std::span<const ProjPoint<typename F::Elem>> pts,
                                             const LatticeVector& cls) {
  require_curve_characteristic(field);
  if (cls.degree() < 1) throw std::invalid_argument("blow-up class " + to_string(cls) + " has no plane curve");
  if (pts.size() != 8) throw std::invalid_argument("need eight points");
  for (int i = 1; i <= 8; ++i)
    if (cls.mult(i) < 0) throw std::invalid_argument("negative multiplicity in " + to_string(cls));
  const auto conds = class_conditions(cls);
  const auto ns = nullspace(field, condition_matrix(field, cls.degree(), pts, conds));
  if (ns.empty()) return std::nullopt;
  if (ns.size() > 1)
    throw ExcessDimension("curves of class " + to_string(cls) + " form a family of dimension " +
                          std::to_string(ns.size() - 1));
  return monic(field, PlaneCurve<F>{cls.degree(), ns.front()});
}

// ---------------------------------------------------------------------------
// Point set-ups.

template <class F>
struct PointConfig {
  char setup = 'A';
  std::vector<typename F::Elem> params;  // a..f (A) or a..h (B)
  std::array<ProjPoint<typename F::Elem>, 8> points;
  ProjPoint<typename F::Elem> target;
};

/// P1=(0:1:1) P2=(0:1:a) P3=(1:0:1) P4=(1:0:b) P5=(1:1:1) P6=(1:1:c)
/// P7=(d:1:e) P8=(d:1:f), P=(0:0:1).
template <class F>
PointConfig<F> setup_a(const F& field, std::span<const typename F::Elem> p) {
  if (p.size() != 6) throw std::invalid_argument("set-up A takes 6 parameters");
  const auto o = field.one(), z = field.zero();
  PointConfig<F> c;
  c.setup = 'A';
  c.params.assign(p.begin(), p.end());
  c.points = {{{z, o, o}, {z, o, p[0]}, {o, z, o}, {o, z, p[1]}, {o, o, o}, {o, o, p[2]}, {p[3], o, p[4]}, {p[3], o, p[5]}}};
  c.target = {z, z, o};
  return c;
}

/// As A for P1..P5; P6=(1:c:d) P7=(1:e:f) P8=(1:g:h).
template <class F>
PointConfig<F> setup_b(const F& field, std::span<const typename F::Elem> p) {
  if (p.size() != 8) throw std::invalid_argument("set-up B takes 8 parameters");
  const auto o = field.one(), z = field.zero();
  PointConfig<F> c;
  c.setup = 'B';
  c.params.assign(p.begin(), p.end());
  c.points = {{{z, o, o}, {z, o, p[0]}, {o, z, o}, {o, z, p[1]}, {o, o, o}, {o, p[2], p[3]}, {o, p[4], p[5]}, {o, p[6], p[7]}}};
  c.target = {z, z, o};
  return c;
}

/// Members of the clique whose curve exists and passes through the target.
/// Cliques containing blow-up classes are rejected: their exceptional curve
/// meets no point of the plane other than P_i, which general position keeps
/// away from P.
template <class F>
int concurrent_count(const F& field, std::span<const ProjPoint<typename F::Elem>> pts,
                     const ProjPoint<typename F::Elem>& target, std::span<const LatticeVector> clique) {
  for (const auto& cls : clique)
    if (cls.degree() == 0) throw std::invalid_argument("clique contains the blow-up class " + to_string(cls));
  int n = 0;
  for (const auto& cls : clique) {
    const auto curve = curve_for_class(field, pts, cls);
    if (curve && is_zero(evaluate(field, *curve, target))) ++n;
  }
  return n;
}

}  // namespace dp1
