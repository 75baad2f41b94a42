#pragma once

// Concurrency constraints as polynomials in the set-up parameters.
//
// A curve class with the target row appended gives a square homogeneous
// system; a curve through P exists iff its determinant vanishes.  That raw
// determinant also picks up factors along which the 8-point system stops
// having a unique solution.  Those are the common factors of the maximal
// minors of the system without the target row; dividing them out leaves
// the residual, which is the evaluation at P of the primitive cofactor
// vector, i.e. of the curve itself.

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp1/linalg.hpp"
#include "dp1/picard.hpp"
#include "dp1/plane.hpp"
#include "dp1/poly.hpp"

namespace dp1 {

struct SymbolicSetup {
  char tag = 'A';
  int num_params = 6;
  std::array<ProjPoint<MultiPoly>, 8> points;
  ProjPoint<MultiPoly> target;
};

inline SymbolicSetup symbolic_point_setup(char tag) {
  auto v = [](char c) { return MultiPoly::var(c - 'a'); };
  const MultiPoly o(1L), z;
  SymbolicSetup s;
  s.tag = tag;
  if (tag == 'A') {
    s.num_params = 6;
    s.points = {{{z, o, o}, {z, o, v('a')}, {o, z, o}, {o, z, v('b')}, {o, o, o}, {o, o, v('c')}, {v('d'), o, v('e')},
                 {v('d'), o, v('f')}}};
  } else if (tag == 'B') {
    s.num_params = 8;
    s.points = {{{z, o, o}, {z, o, v('a')}, {o, z, o}, {o, z, v('b')}, {o, o, o}, {o, v('c'), v('d')},
                 {o, v('e'), v('f')}, {o, v('g'), v('h')}}};
  } else {
    throw std::invalid_argument(std::string("unknown point set-up '") + tag + "'");
  }
  s.target = {z, z, o};
  return s;
}

/// Last coordinate that is a nonzero constant; derivative rows are taken
/// in the other two coordinates.
inline int symbolic_chart(const ProjPoint<MultiPoly>& p) {
  for (int c = 2; c >= 0; --c) {
    const auto& x = p[static_cast<std::size_t>(c)];
    if (!x.is_zero() && x.is_constant()) return c;
  }
  throw std::invalid_argument("symbolic point has no constant nonzero coordinate");
}

struct CurveSpec {
  int degree = 1;
  std::array<int, 8> mult{};
  bool through_target = true;

  static CurveSpec of(const LatticeVector& cls, bool through_target = true) {
    if (cls.degree() < 1) throw std::invalid_argument("blow-up class " + to_string(cls) + " has no plane curve");
    CurveSpec s;
    s.degree = cls.degree();
    for (int i = 1; i <= 8; ++i) {
      if (cls.mult(i) < 0) throw std::invalid_argument("negative multiplicity in " + to_string(cls));
      s.mult[static_cast<std::size_t>(i - 1)] = cls.mult(i);
    }
    s.through_target = through_target;
    return s;
  }
};

inline Matrix<MultiPoly> symbolic_condition_matrix(const SymbolicSetup& s, const CurveSpec& spec) {
  const PolyRing ring;
  Matrix<MultiPoly> m;
  m.cols = static_cast<std::size_t>(monomial_count(spec.degree));
  for (std::size_t i = 0; i < 8; ++i) {
    if (spec.mult[i] <= 0) continue;
    for (auto& row : multiplicity_rows(ring, s.points[i], spec.degree, spec.mult[i], symbolic_chart(s.points[i])))
      m.append_row(row);
  }
  if (spec.through_target) m.append_row(derivative_row(ring, s.target, spec.degree, {0, 0, 0}));
  return m;
}

inline MultiPoly symbolic_determinant(const Matrix<MultiPoly>& m) { return bareiss_determinant(m, MultiPoly(1L)); }

/// Determinants of m with one column deleted, for an (n-1) x n matrix.
inline std::vector<MultiPoly> maximal_minors(const Matrix<MultiPoly>& m) {
  if (m.rows + 1 != m.cols) throw std::invalid_argument("maximal minors need an (n-1) x n matrix");
  std::vector<MultiPoly> out;
  for (std::size_t skip = 0; skip < m.cols; ++skip) {
    Matrix<MultiPoly> sub(m.rows, m.rows, MultiPoly{});
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0, k = 0; j < m.cols; ++j)
        if (j != skip) sub(i, k++) = m(i, j);
    out.push_back(symbolic_determinant(sub));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Splitting into pairwise coprime factors.

inline MultiPoly derivative(const MultiPoly& p, int v) {
  std::vector<MultiPoly::Term> ts;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e) ts.emplace_back(quotient(m, Monomial::var(v)), c * e);
  }
  return MultiPoly::from_terms(std::move(ts));
}

namespace detail {

/// Factors of p found by contents and square-free parts (not a full
/// factorization).
inline void split_factors(const MultiPoly& p, std::vector<MultiPoly>& out) {
  if (p.is_constant()) return;
  for (int v = 0; v < kNumVars; ++v) {
    if (!p.has_var(v)) continue;
    const MultiPoly c = content_in(p, v);
    if (!c.is_constant()) {
      split_factors(c, out);
      split_factors(exact_div(p, c), out);
      return;
    }
  }
  for (int v = 0; v < kNumVars; ++v) {
    if (!p.has_var(v)) continue;
    const MultiPoly g = gcd(p, derivative(p, v));
    if (!g.is_constant()) {
      split_factors(g, out);
      split_factors(exact_div(p, g), out);
      return;
    }
  }
  out.push_back(primitive_integer(p));
}

}  // namespace detail

/// Adds the pending factors to a pairwise coprime basis, splitting
/// members that share a factor.
inline void refine_into(std::vector<MultiPoly>& basis, std::vector<MultiPoly>& todo) {
  while (!todo.empty()) {
    MultiPoly f = todo.back();
    todo.pop_back();
    if (f.is_constant()) continue;
    f = primitive_integer(f);
    bool merged = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == f) {
        merged = true;
        break;
      }
      const MultiPoly g = gcd(basis[i], f);
      if (g.is_constant()) continue;
      const MultiPoly b = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      todo.push_back(g);
      todo.push_back(exact_div(b, g));
      todo.push_back(exact_div(f, g));
      merged = true;
      break;
    }
    if (!merged) basis.push_back(f);
  }
}

/// Refines the inputs into a list of pairwise coprime, square-free,
/// non-constant polynomials (integer-primitive, positive leading
/// coefficient) whose products recover every input up to scalar.
/// Inputs are consumed in order, each first trial-divided by the factors
/// found so far, so small polynomials should come first.
inline std::vector<MultiPoly> coprime_basis(const std::vector<MultiPoly>& polys) {
  std::vector<MultiPoly> basis;
  std::vector<MultiPoly> todo;
  for (const auto& input : polys) {
    MultiPoly p = input;
    if (p.is_zero()) continue;
    for (const auto& b : basis)
      while (auto q = divide(p, b)) p = std::move(*q);
    detail::split_factors(p, todo);
    refine_into(basis, todo);
  }
  std::sort(basis.begin(), basis.end(), [](const MultiPoly& x, const MultiPoly& y) {
    if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
    return to_string(x) < to_string(y);
  });
  return basis;
}

/// Determinants whose vanishing breaks general position, before splitting:
/// 56 collinearities, 28 six-point conics, 8 singular cubics.
inline std::vector<MultiPoly> general_position_determinants(const SymbolicSetup& s) {
  std::vector<MultiPoly> dets;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (std::size_t k = j + 1; k < 8; ++k) {
        Matrix<MultiPoly> m(3, 3, MultiPoly{});
        for (std::size_t c = 0; c < 3; ++c) {
          m(0, c) = s.points[i][c];
          m(1, c) = s.points[j][c];
          m(2, c) = s.points[k][c];
        }
        dets.push_back(symbolic_determinant(m));
      }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 6) continue;
    CurveSpec spec{2, {}, false};
    for (std::size_t i = 0; i < 8; ++i) spec.mult[i] = (mask >> i) & 1u;
    dets.push_back(symbolic_determinant(symbolic_condition_matrix(s, spec)));
  }
  for (std::size_t sing = 0; sing < 8; ++sing) {
    CurveSpec spec{3, {1, 1, 1, 1, 1, 1, 1, 1}, false};
    spec.mult[sing] = 2;
    dets.push_back(symbolic_determinant(symbolic_condition_matrix(s, spec)));
  }
  return dets;
}

/// The set S for a set-up: general position holds iff no member vanishes.
/// Members are pairwise coprime; computed once per set-up.
inline const std::vector<MultiPoly>& general_position_polynomials(char tag) {
  static std::mutex mu;
  static std::map<char, std::vector<MultiPoly>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(tag);
  if (it == cache.end()) {
    const auto dets = general_position_determinants(symbolic_point_setup(tag));
    for (const auto& d : dets)
      if (d.is_zero()) throw std::logic_error("set-up template is degenerate");
    it = cache.emplace(tag, coprime_basis(dets)).first;
  }
  return it->second;
}

inline bool contains_up_to_scalar(const std::vector<MultiPoly>& set, const MultiPoly& p) {
  const MultiPoly q = primitive_integer(p);
  for (const auto& s : set)
    if (primitive_integer(s) == q) return true;
  return false;
}

inline bool equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b) {
  return primitive_integer(a) == primitive_integer(b);
}

// ---------------------------------------------------------------------------
// Stripping S-factors.

struct FactorPower {
  MultiPoly factor;
  int multiplicity = 0;
};

struct Stripped {
  MultiPoly core;  // no member of the set divides it
  std::vector<FactorPower> factors;
};

/// Trial division by every member of `set` as often as it goes.
inline Stripped strip_factors(MultiPoly p, const std::vector<MultiPoly>& set) {
  Stripped r;
  if (p.is_zero()) {
    r.core = p;
    return r;
  }
  for (const auto& s : set) {
    int k = 0;
    while (auto q = divide(p, s)) {
      p = std::move(*q);
      ++k;
    }
    if (k) r.factors.push_back({s, k});
  }
  r.core = std::move(p);
  return r;
}

/// a and b agree after removing members of `set` and a rational scalar.
inline bool equal_up_to_factors(const MultiPoly& a, const MultiPoly& b, const std::vector<MultiPoly>& set) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return equal_up_to_scalar(strip_factors(a, set).core, strip_factors(b, set).core);
}

struct ConstraintResult {
  MultiPoly raw;
  std::vector<FactorPower> stripped;  // members of S dividing every maximal minor
  mpq_class scalar = 1;
  MultiPoly residual;

  /// raw = scalar * residual * prod(stripped), by exact multiplication.
  bool identity_holds() const {
    MultiPoly prod = residual.scaled(scalar);
    for (const auto& f : stripped) prod *= pow(f.factor, f.multiplicity);
    return prod == raw;
  }
};

/// Constraint for a curve of the given spec to pass through the target.
inline ConstraintResult constraint_polynomial(const SymbolicSetup& s, const CurveSpec& spec,
                                              const std::vector<MultiPoly>& gp_set) {
  if (!spec.through_target) throw std::invalid_argument("a constraint needs the target row");
  const auto m = symbolic_condition_matrix(s, spec);
  if (m.rows != m.cols)
    throw std::invalid_argument("condition matrix is " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                                ", not square; eliminate a variable first");
  ConstraintResult r;
  r.raw = symbolic_determinant(m);
  if (r.raw.is_zero()) return r;

  Matrix<MultiPoly> base = m;
  base.rows -= 1;
  base.a.resize(base.rows * base.cols);
  const auto minors = maximal_minors(base);
  MultiPoly rest = r.raw;
  for (const auto& f : gp_set) {
    int common = -1;
    for (const auto& minor : minors) {
      if (minor.is_zero()) continue;
      int k = 0;
      MultiPoly x = minor;
      while (common < 0 || k < common) {
        auto q = divide(x, f);
        if (!q) break;
        x = std::move(*q);
        ++k;
      }
      common = common < 0 ? k : std::min(common, k);
      if (common == 0) break;
    }
    if (common > 0) {
      r.stripped.push_back({f, common});
      rest = exact_div(rest, pow(f, common));
    }
  }
  r.residual = primitive_integer(rest);
  r.scalar = rest.leading().second / r.residual.leading().second;
  return r;
}

inline ConstraintResult constraint_polynomial(char tag, const LatticeVector& cls) {
  return constraint_polynomial(symbolic_point_setup(tag), CurveSpec::of(cls), general_position_polynomials(tag));
}

// ---------------------------------------------------------------------------
// Eliminating a variable that occurs linearly.

struct LinearSolution {
  int var = 0;
  MultiPoly num, den;     // var = num / den, reduced
  MultiPoly side_condition;  // must not vanish: the coefficient of var in the source
};

/// From src = coef*var + rest, var = -rest/coef.
inline LinearSolution solve_linear(const MultiPoly& src, int var) {
  if (src.degree(var) != 1)
    throw std::invalid_argument(std::string("variable ") + var_name(var) + " does not occur linearly");
  const auto cs = src.coefficients_in(var);
  LinearSolution s;
  s.var = var;
  s.side_condition = primitive_integer(cs[1]);
  const MultiPoly g = gcd(cs[0], cs[1]);
  s.num = exact_div(-cs[0], g);
  s.den = exact_div(cs[1], g);
  if (s.den.is_constant()) {
    s.num = s.num.scaled(mpq_class(1) / s.den.constant_value());
    s.den = MultiPoly(1L);
  }
  return s;
}

/// Each polynomial with var replaced by num/den and the denominator cleared.
inline std::vector<MultiPoly> substitute_linear(const std::vector<MultiPoly>& system, const LinearSolution& sol) {
  std::vector<MultiPoly> out;
  out.reserve(system.size());
  for (const auto& p : system) out.push_back(substitute_fraction(p, sol.var, sol.num, sol.den));
  return out;
}

// ---------------------------------------------------------------------------
// Published constraint polynomials.  The quoted forms are kept verbatim;
// each differs from the determinant computation in one place, and the
// corrected forms below are the ones used for comparisons.

inline constexpr const char* kF1Quoted =
    "a(bd^2f - 2bdf + bf - bd^3 + bd^2 + bd - b - cf + c - df^2 + 2f^2 + d^2f - 2f - d^2 + d)"
    " + (f-d)(bcd^2 - 2bdf + bf + bd - b - cdf - cf + cd + c + 2f^2 - 2f)";

/// Cubic c_{7,8} through P in set-up A.  The quoted form has +(f-d)(...);
/// with that sign the identity (f-d)p + q = d(d-f)(c+d-f-1)(bd-f+1) for
/// F1 = a*p + q fails, with the minus sign it holds.
inline const MultiPoly& f1_polynomial() {
  static const MultiPoly p = parse_poly(
      "a(bd^2f - 2bdf + bf - bd^3 + bd^2 + bd - b - cf + c - df^2 + 2f^2 + d^2f - 2f - d^2 + d)"
      " - (f-d)(bcd^2 - 2bdf + bf + bd - b - cdf - cf + cd + c + 2f^2 - 2f)");
  return p;
}

inline constexpr const char* kF2Quoted =
    "b^2cd^4 - 2b^2cd^3 + b^2cd^2 + 2b^2d^3ef - 5b^2d^2ef + 4b^2def - b^2ef - 2b^2d^4e + 3b^2d^3e + b^2d^2e"
    " - 3b^2de + b^2e - 2b^2d^4f + 3b^2d^3f + b^2d^2f - 3b^2df + b^2f + 2b^2d^5 - 3b^2d^4 + 2b^2d - b^2"
    " + bc^2d^3 - bc^2d^2 + bcd^2ef - 3bcdef + 2bcef - 2bcd^3e + 2bcd^2e + 2bcde - 2bce - 2bcd^3f"
    " + 2bcd^2f + 2bcdf - 2bcf + bcd^4 - 2bcd^2 - bcd + 2bc - 2bd^2e^2f + 4bde^2 - 2be^2f + 2bd^3e^2"
    " - 2bd^2e^2 - 2bde^2 + 2be^2 - 2bd^2ef^2 + 4bdef^2 - 2bef^2 + 4bd^3ef - bd^2ef - 7bdef + 4bef"
    " - 2bd^4e - bd^3e + 4bd^2e + bde - 2be + 2bd^3f^2 - 2bd^2f^2 - 2bdf^2 + 2bf^2 - 2bd^4f - bd^3f"
    " + 4bd^2f + bdf - 2bf + 3bd^4 - 3bd^3 - bd^2 + bd - c^2def - c^2ef + c^2de + c^2e + c^2df + c^2f"
    " - c^2d - c^2 + 2ce^2f - 2ce^2 + 2cef^2 + cd^2ef - cdef - 4cef - cd^2e + cde + 2ce - 2cf^2 - cd^2f"
    " + cdf + 2cf + cd^2 - cd + 2de^2f^2 - 4e^2f^2 - 2d^2e^2f + 4e^2f + 2d^2e^2 - 2de^2 - 2d^2ef^2"
    " + 4ef^2 + 2d^3ef + 2d^2ef - 2def - 4ef - 2d^3e + 2de + 2d^2f^2 - 2df^2 - 2d^3f + 2df + 2d^3 - 2d^2";

/// Cubic c_{8,7} through P in set-up A after eliminating a.  The quoted
/// form has the monomial 4bde^2 where the computation gives 4bde^2f; only
/// the latter vanishes at (b,c,d,e,f) = (-1, 5/4, -1, 1/2, -1/2).
inline const MultiPoly& f2_polynomial() {
  static const MultiPoly p = [] {
    std::string s = kF2Quoted;
    const std::string bad = "+ 4bde^2 -";
    s.replace(s.find(bad), bad.size(), "+ 4bde^2f -");
    return parse_poly(s);
  }();
  return p;
}

/// Cubic c_{7,5} through P in set-up B: numerator and denominator.
inline const MultiPoly& c75_numerator() {
  static const MultiPoly p = parse_poly(
      "-a b c^3 g h + a b c^3 g + a b c^3 h - a b c^3 + a b c^2 d g h - a b c^2 d g - a b c^2 d h + a b c^2 d"
      " + a b c^2 g h - a b c^2 g - a b c^2 h + a b c^2 +a b c d g^3 - a b c d g^2 h - a b c d g^2+ a b c d g"
      " + a b c d h - a b c d - a b c g^3 + a b c g^2 h + ab c g^2 - a b c g h - a b d g^3 + a b d g^2 h"
      " + a b d g^2 - a b d g h + a b g^3 - a b g^2 h - a b g^2 + a b g h + a c^3 g h - a c^3 g - a c^3 h^2"
      " + a c^3 h - a c^2 d g h + a c^2 d g + a c^2 d h^2 - a c^2 d h - a c^2 g h + a c^2 g + a c^2 h^2"
      " - a c^2 h - a c d g^3 + a c d g^2 h + a c d g^2 - a c d g - a c d h^2 + a c d h + a c g^3 - a c g^2 h"
      " - a c g^2 + a c g h + a d^2 g^3 - a d^2 g^2 h - a d^2 g^2 + a d^2 g h - a d g^3 + a d g^2 h + a d g^2"
      " - a d g h + b c^2 d g h - b c^2 d g - b c^2 d h + b c^2 d - b c^2 g h + b c^2 g + b c^2 h - b c^2"
      " - b c d^2 g h + b c d^2 g + b c d^2 h - b c d^2  -b c d g^2 h + b c d g^2 + b c d g h^2 - b c d g"
      " -   b c d h + b c d + b c g^2 h - b c g^2 - b c g h^2 + b c g h + b d g^2 h - b d g^2 - b d g h^2 + b d g h"
      " - b g^2 h + b g^2 + b g h^2 - b g h - c^2 d g h + c^2 d g + c^2 d h^2 - c^2 d h + c^2 g h - c^2 g"
      " - c^2 h^2 + c^2 h + c d^2 g h - c d^2 g - c d^2 h^2 + c d^2 h + c d g^2 h - c d g^2 - c d g h^2 + c d g"
      " + c d h^2 - c d h - c g^2 h + c g^2 + c g h^2 - c g h - d^2 g^2 h + d^2 g^2 + d^2 g h^2 - d^2 g h"
      " + d g^2 h - d g^2 - d g h^2 + d g h");
  return p;
}

inline const MultiPoly& c75_denominator() {
  static const MultiPoly p = parse_poly("b c d - b c - b d + b - c d + c + d^2 - d");
  return p;
}

/// F1 = a*p + q.
struct LinearSplit {
  MultiPoly p, q;
};

inline LinearSplit split_linear(const MultiPoly& f, int var) {
  if (f.degree(var) != 1)
    throw std::invalid_argument(std::string("variable ") + var_name(var) + " does not occur linearly");
  const auto cs = f.coefficients_in(var);
  return {cs[1], cs[0]};
}

// ---------------------------------------------------------------------------
// The c_{7,8} / c_{8,7} elimination in set-up A.

struct F2Reproduction {
  ConstraintResult c78, c87;
  MultiPoly f1_core;          // c78 residual without S-factors
  bool f1_matches = false;    // f1_core equals F1 up to scalar
  bool identity_holds = false;  // (f-d)p + q = d(d-f)(c+d-f-1)(bd-f+1)
  LinearSolution a;           // a = -q/p
  MultiPoly eliminated;       // c87 residual with a substituted, denominators cleared
  Stripped stripped;          // eliminated split into S-factors and core
  bool f2_matches = false;    // core equals F2 up to scalar
};

inline F2Reproduction reproduce_f2() {
  const auto& S = general_position_polynomials('A');
  const auto setup = symbolic_point_setup('A');
  F2Reproduction r;
  r.c78 = constraint_polynomial(setup, CurveSpec::of(cubic(7, 8)), S);
  r.c87 = constraint_polynomial(setup, CurveSpec::of(cubic(8, 7)), S);
  r.f1_core = strip_factors(r.c78.residual, S).core;
  r.f1_matches = equal_up_to_scalar(r.f1_core, f1_polynomial());
  const auto [p, q] = split_linear(r.f1_core, 0);
  const MultiPoly rhs = parse_poly("d(d-f)(c+d-f-1)(bd-f+1)");
  // f1_core is F1 up to a scalar; the identity is scale-sensitive, so
  // normalize to F1's leading coefficient first.
  const mpq_class k = f1_polynomial().leading().second / r.f1_core.leading().second;
  r.identity_holds = parse_poly("f-d") * p.scaled(k) + q.scaled(k) == rhs;
  r.a = solve_linear(r.f1_core, 0);
  r.eliminated = substitute_linear({r.c87.residual}, r.a).front();
  r.stripped = strip_factors(r.eliminated, S);
  r.f2_matches = equal_up_to_scalar(r.stripped.core, f2_polynomial());
  return r;
}

// ---------------------------------------------------------------------------
// Symbolic versus concrete.

struct OracleReport {
  int samples = 0;
  int on_hypersurface = 0;  // samples where the residual vanishes
  int agreements = 0;
  std::vector<std::string> disagreements;
};

/// Compares "residual vanishes" with "the plane curve of cls passes through
/// P" at random parameter values mod prime with every S-member nonzero.
/// Every other sample is moved onto the hypersurface by solving for a
/// variable of degree 1 in the residual, so both outcomes are exercised.
inline OracleReport oracle_check(char tag, const LatticeVector& cls, const MultiPoly& residual, int samples,
                                 std::uint32_t prime, std::uint64_t seed) {
  const auto& S = general_position_polynomials(tag);
  const PrimeField field(prime);
  const int nparams = tag == 'A' ? 6 : 8;
  int linear_var = -1;
  for (int v = 0; v < nparams && linear_var < 0; ++v)
    if (residual.degree(v) == 1) linear_var = v;
  std::uint64_t state = seed | 1u;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<std::uint32_t>(state % prime);
  };
  OracleReport rep;
  int attempts = 0;
  while (rep.samples < samples) {
    if (++attempts > 100 * samples) throw std::runtime_error("oracle sampling keeps hitting degenerate parameters");
    std::array<std::uint32_t, kNumVars> vals{};
    for (int v = 0; v < nparams; ++v) vals[static_cast<std::size_t>(v)] = next();
    if (rep.samples % 2 == 1 && linear_var >= 0) {
      const auto cs = residual.coefficients_in(linear_var);
      const std::uint32_t c1 = evaluate_mod(cs[1], vals, prime);
      if (c1 == 0) continue;
      const Fp x = field.zero() - Fp{evaluate_mod(cs[0], vals, prime), prime} / Fp{c1, prime};
      vals[static_cast<std::size_t>(linear_var)] = x.v;
    }
    bool degenerate = false;
    for (const auto& s : S)
      if (evaluate_mod(s, vals, prime) == 0) {
        degenerate = true;
        break;
      }
    if (degenerate) continue;
    std::vector<Fp> params;
    for (int v = 0; v < nparams; ++v) params.push_back(field.from_int(vals[static_cast<std::size_t>(v)]));
    const auto cfg = tag == 'A' ? setup_a(field, std::span<const Fp>(params)) : setup_b(field, std::span<const Fp>(params));
    const auto curve = curve_for_class(field, std::span<const ProjPoint<Fp>>(cfg.points), cls);
    const bool concrete = curve && is_zero(evaluate(field, *curve, cfg.target));
    const bool symbolic = evaluate_mod(residual, vals, prime) == 0;
    ++rep.samples;
    rep.on_hypersurface += symbolic;
    if (concrete == symbolic) {
      ++rep.agreements;
    } else {
      std::string w;
      for (int v = 0; v < nparams; ++v) w += std::string(v ? "," : "") + std::to_string(vals[static_cast<std::size_t>(v)]);
      rep.disagreements.push_back(w);
    }
  }
  return rep;
}

}  // namespace dp1
