#pragma once

// Exhaustive searches over F_p and exact verification of configurations.
//
// The F_p kernel works on raw residues: points are normalized triples,
// general position is tested incrementally as points are added (conics
// through every 5 chosen points are cached so a new point costs one dot
// product per conic), and "the curve of a class passes through P" is the
// vanishing of the square determinant with the P row, which is equivalent
// because the curve is unique in general position.  Every realization is
// re-verified through the plane module.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dp1/cliques.hpp"
#include "dp1/field.hpp"
#include "dp1/picard.hpp"
#include "dp1/plane.hpp"
#include "dp1/symbolic.hpp"

namespace dp1 {

// ---------------------------------------------------------------------------
// Residue arithmetic.

class ModP {
 public:
  explicit ModP(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p < (1u << 16)) {
      inv_.assign(p, 0);
      for (std::uint32_t x = 1; x < p; ++x) inv_[x] = pow(x, p - 2);
    }
  }
  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_); }
  std::uint32_t pow(std::uint32_t x, std::uint32_t e) const {
    std::uint32_t r = 1;
    for (; e; e >>= 1, x = mul(x, x))
      if (e & 1) r = mul(r, x);
    return r;
  }
  std::uint32_t inv(std::uint32_t x) const { return inv_.empty() ? pow(x, p_ - 2) : inv_[x]; }

  /// Determinant of the n x n row-major matrix m (destroyed).
  std::uint32_t det(std::uint32_t* m, int n) const {
    std::uint32_t d = 1;
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (piv < n && m[piv * n + c] == 0) ++piv;
      if (piv == n) return 0;
      if (piv != c) {
        for (int j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
        d = sub(0, d);
      }
      d = mul(d, m[c * n + c]);
      const std::uint32_t iv = inv(m[c * n + c]);
      for (int i = c + 1; i < n; ++i) {
        if (m[i * n + c] == 0) continue;
        const std::uint32_t f = mul(m[i * n + c], iv);
        for (int j = c; j < n; ++j) m[i * n + j] = sub(m[i * n + j], mul(f, m[c * n + j]));
      }
    }
    return d;
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
};

using ResPoint = std::array<std::uint32_t, 3>;

/// P^2(F_p) with the last nonzero coordinate 1: (x:y:1), then (x:1:0), then (1:0:0).
inline std::vector<ResPoint> projective_points(std::uint32_t p) {
  std::vector<ResPoint> out;
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) out.push_back({x, y, 1});
  for (std::uint32_t x = 0; x < p; ++x) out.push_back({x, 1, 0});
  out.push_back({1, 0, 0});
  return out;
}

inline ResPoint normalize(const ModP& f, ResPoint q) {
  for (int c = 2; c >= 0; --c)
    if (q[static_cast<std::size_t>(c)]) {
      const std::uint32_t iv = f.inv(q[static_cast<std::size_t>(c)]);
      for (auto& x : q) x = f.mul(x, iv);
      return q;
    }
  throw std::invalid_argument("the zero vector is not a projective point");
}

namespace detail {

inline constexpr int kMaxCols = 28;  // sextics

/// Hasse-derivative row of order d at q for degree n, written to out.
inline void residue_row(const ModP& f, const ResPoint& q, int n, std::array<int, 3> d, std::uint32_t* out) {
  std::array<std::array<std::uint32_t, 7>, 3> pw{};
  for (std::size_t c = 0; c < 3; ++c) {
    pw[c][0] = 1;
    for (int e = 1; e <= n; ++e) pw[c][static_cast<std::size_t>(e)] = f.mul(pw[c][static_cast<std::size_t>(e - 1)], q[c]);
  }
  int k = 0;
  for (int i = n; i >= 0; --i)
    for (int j = n - i; j >= 0; --j) {
      const std::array<int, 3> e{i, j, n - i - j};
      std::uint32_t v = 1;
      for (std::size_t c = 0; c < 3; ++c) {
        if (e[c] < d[c]) {
          v = 0;
          break;
        }
        v = f.mul(v, f.mul(static_cast<std::uint32_t>(binomial(e[c], d[c]) % f.p()), pw[c][static_cast<std::size_t>(e[c] - d[c])]));
      }
      out[k++] = v;
    }
}

/// Appends the m(m+1)/2 multiplicity rows of q; returns the new row count.
inline int residue_multiplicity_rows(const ModP& f, const ResPoint& q, int n, int m, std::uint32_t* mat, int row) {
  int chart = 2;
  while (chart >= 0 && q[static_cast<std::size_t>(chart)] == 0) --chart;
  const int u = chart == 0 ? 1 : 0, v = chart == 2 ? 1 : 2;
  const int cols = monomial_count(n);
  for (int total = 0; total < m; ++total)
    for (int a = total; a >= 0; --a) {
      std::array<int, 3> d{0, 0, 0};
      d[static_cast<std::size_t>(u)] = a;
      d[static_cast<std::size_t>(v)] = total - a;
      residue_row(f, q, n, d, mat + row * cols);
      ++row;
    }
  return row;
}

}  // namespace detail

/// Incremental general-position state over F_p.
class GPState {
 public:
  explicit GPState(const ModP& f) : f_(f) {}

  const std::vector<ResPoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }

  /// Whether q can join without breaking general position (for up to 8 points).
  bool admits(const ResPoint& q) const {
    for (const auto& x : pts_)
      if (x == q) return false;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      for (std::size_t j = i + 1; j < pts_.size(); ++j)
        if (det3(pts_[i], pts_[j], q) == 0) return false;
    if (!conics_.empty()) {
      std::uint32_t row[6];
      detail::residue_row(f_, q, 2, {0, 0, 0}, row);
      for (const auto& c : conics_) {
        std::uint64_t s = 0;
        for (int k = 0; k < 6; ++k) s += std::uint64_t{row[k]} * c[static_cast<std::size_t>(k)] % f_.p();
        if (s % f_.p() == 0) return false;
      }
    }
    if (pts_.size() == 7) {
      for (int s = 0; s < 8; ++s) {
        std::uint32_t m[100];
        int r = 0;
        for (int i = 0; i < 8; ++i) {
          const ResPoint& x = i < 7 ? pts_[static_cast<std::size_t>(i)] : q;
          r = detail::residue_multiplicity_rows(f_, x, 3, i == s ? 2 : 1, m, r);
        }
        if (f_.det(m, 10) == 0) return false;
      }
    }
    return true;
  }

  /// Adds q (assumed admitted) and caches the conics through q and each
  /// 4-subset of the previous points.
  void push(const ResPoint& q) {
    marks_.push_back(conics_.size());
    const std::size_t n = pts_.size();
    if (n >= 4) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          for (std::size_t c = b + 1; c < n; ++c)
            for (std::size_t d = c + 1; d < n; ++d) conics_.push_back(conic_through({pts_[a], pts_[b], pts_[c], pts_[d], q}));
    }
    pts_.push_back(q);
  }
  void pop() {
    pts_.pop_back();
    conics_.resize(marks_.back());
    marks_.pop_back();
  }

 private:
  std::uint32_t det3(const ResPoint& a, const ResPoint& b, const ResPoint& c) const {
    std::uint32_t m[9] = {a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]};
    return f_.det(m, 3);
  }

  /// Coefficients of the unique conic through five points, no three collinear.
  std::array<std::uint32_t, 6> conic_through(const std::array<ResPoint, 5>& q) const {
    std::uint32_t m[5][6];
    for (int i = 0; i < 5; ++i) detail::residue_row(f_, q[static_cast<std::size_t>(i)], 2, {0, 0, 0}, m[i]);
    // Row reduce; the kernel is one-dimensional.
    std::array<int, 5> pivcol{};
    int r = 0;
    for (int c = 0; c < 6 && r < 5; ++c) {
      int piv = r;
      while (piv < 5 && m[piv][c] == 0) ++piv;
      if (piv == 5) continue;
      for (int j = 0; j < 6; ++j) std::swap(m[piv][j], m[r][j]);
      const std::uint32_t iv = f_.inv(m[r][c]);
      for (int j = 0; j < 6; ++j) m[r][j] = f_.mul(m[r][j], iv);
      for (int i = 0; i < 5; ++i) {
        if (i == r || m[i][c] == 0) continue;
        const std::uint32_t t = m[i][c];
        for (int j = 0; j < 6; ++j) m[i][j] = f_.sub(m[i][j], f_.mul(t, m[r][j]));
      }
      pivcol[static_cast<std::size_t>(r)] = c;
      ++r;
    }
    int free = 0;
    for (int c = 0, k = 0; c < 6; ++c) {
      if (k < r && pivcol[static_cast<std::size_t>(k)] == c) {
        ++k;
        continue;
      }
      free = c;
      break;
    }
    std::array<std::uint32_t, 6> v{};
    v[static_cast<std::size_t>(free)] = 1;
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(pivcol[static_cast<std::size_t>(i)])] = f_.sub(0, m[i][free]);
    return v;
  }

  const ModP& f_;
  std::vector<ResPoint> pts_;
  std::vector<std::array<std::uint32_t, 6>> conics_;
  std::vector<std::size_t> marks_;
};

/// Whether the curve of cls through pts passes through target, assuming
/// general position (so the curve is unique).
inline bool residue_curve_through(const ModP& f, std::span<const ResPoint> pts, const ResPoint& target,
                                  const LatticeVector& cls) {
  const int n = cls.degree();
  const int cols = monomial_count(n);
  std::uint32_t m[detail::kMaxCols * detail::kMaxCols];
  int r = 0;
  for (int i = 1; i <= 8; ++i)
    if (cls.mult(i) > 0) r = detail::residue_multiplicity_rows(f, pts[static_cast<std::size_t>(i - 1)], n, cls.mult(i), m, r);
  detail::residue_row(f, target, n, {0, 0, 0}, m + r * cols);
  ++r;
  if (r != cols) throw std::logic_error("class " + to_string(cls) + " does not give a square system");
  return f.det(m, cols) == 0;
}

// ---------------------------------------------------------------------------
// Existence of eight points in general position.

struct GPExistence {
  std::uint32_t p = 0;
  bool exists = false;
  std::array<ResPoint, 8> witness{};
  std::uint64_t nodes = 0;  // partial configurations examined
};

/// Fixes the frame (1:0:0), (0:1:0), (0:0:1), (1:1:1) and tries every
/// increasing 4-tuple of remaining points with incremental pruning.
inline GPExistence general_position_exists(std::uint32_t p) {
  const ModP f(p);
  GPExistence out;
  out.p = p;
  const std::array<ResPoint, 4> frame{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
  std::vector<ResPoint> cand;
  for (const auto& q : projective_points(p))
    if (std::find(frame.begin(), frame.end(), q) == frame.end()) cand.push_back(q);
  GPState st(f);
  for (const auto& q : frame) st.push(q);
  std::array<std::size_t, 4> idx{};
  auto rec = [&](auto&& self, int depth, std::size_t from) -> bool {
    for (std::size_t i = from; i < cand.size(); ++i) {
      ++out.nodes;
      if (!st.admits(cand[i])) continue;
      idx[static_cast<std::size_t>(depth)] = i;
      if (depth == 3) {
        for (int k = 0; k < 4; ++k) out.witness[static_cast<std::size_t>(k)] = frame[static_cast<std::size_t>(k)];
        for (int k = 0; k < 3; ++k) out.witness[static_cast<std::size_t>(4 + k)] = cand[idx[static_cast<std::size_t>(k)]];
        out.witness[7] = cand[i];
        return true;
      }
      st.push(cand[i]);
      const bool found = self(self, depth + 1, i + 1);
      st.pop();
      if (found) return true;
    }
    return false;
  };
  out.exists = cand.size() >= 4 && rec(rec, 0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Searching a set-up for concurrent curves.

/// Points of a set-up in the order they become available as parameters are
/// fixed: entry {point index, number of parameters needed}.
struct SetupShape {
  char tag;
  int params;
  std::vector<std::pair<int, int>> ready;
};

inline SetupShape setup_shape(char tag) {
  if (tag == 'A') return {'A', 6, {{0, 0}, {2, 0}, {4, 0}, {1, 1}, {3, 2}, {5, 3}, {6, 5}, {7, 6}}};
  if (tag == 'B') return {'B', 8, {{0, 0}, {2, 0}, {4, 0}, {1, 1}, {3, 2}, {5, 4}, {6, 6}, {7, 8}}};
  throw std::invalid_argument(std::string("unknown point set-up '") + tag + "'");
}

inline std::array<ResPoint, 8> setup_points(char tag, std::span<const std::uint32_t> v) {
  if (tag == 'A')
    return {{{0, 1, 1}, {0, 1, v[0]}, {1, 0, 1}, {1, 0, v[1]}, {1, 1, 1}, {1, 1, v[2]}, {v[3], 1, v[4]}, {v[3], 1, v[5]}}};
  return {{{0, 1, 1}, {0, 1, v[0]}, {1, 0, 1}, {1, 0, v[1]}, {1, 1, 1}, {1, v[2], v[3]}, {1, v[4], v[5]}, {1, v[6], v[7]}}};
}

/// Lines that pass through P = (0:0:1) for every parameter value.
inline std::vector<LatticeVector> builtin_lines(char tag) {
  if (tag == 'A') return {line(1, 2), line(3, 4), line(5, 6), line(7, 8)};
  return {line(1, 2), line(3, 4)};
}

struct Realization {
  std::vector<std::uint32_t> params;
  std::array<ResPoint, 8> points;
};

struct SearchOptions {
  int workers = 1;
  double budget_seconds = 0;  // 0: unlimited
  std::size_t max_realizations = 1000;  // per chunk; the count is always exact
};

struct SearchReport {
  std::uint32_t p = 0;
  char setup = 'A';
  std::string representative;  // class list
  std::uint64_t tuples = 0;    // parameter tuples covered (pruned subtrees included)
  std::uint64_t general_position = 0;
  std::uint64_t realization_count = 0;
  std::vector<Realization> realizations;  // odometer order
  std::size_t reverified = 0;             // realizations confirmed by the plane module
  bool complete = true;
  std::uint32_t chunks_done = 0;  // leading values of the first parameter fully scanned
  double seconds = 0;
  std::uint64_t fingerprint = 0;
};

namespace detail {

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline void fnv(std::uint64_t& h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
}

struct ChunkResult {
  bool done = false;
  std::uint64_t tuples = 0, gp = 0, realizations = 0;
  std::vector<std::vector<std::uint32_t>> found;
};

}  // namespace detail

/// Scans every parameter tuple of the set-up over F_p in odometer order
/// (first parameter slowest) and records those where the eight points are
/// in general position and every class of the representative passes
/// through P = (0:0:1).
inline SearchReport eckardt_search(std::uint32_t p, char tag, std::span<const LatticeVector> rep,
                                   const SearchOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const SetupShape shape = setup_shape(tag);
  for (const auto& c : rep)
    if (c.degree() == 0) throw std::invalid_argument("representative contains the blow-up class " + to_string(c));
  for (const auto& l : {line(1, 2), line(3, 4)})
    if (std::find(rep.begin(), rep.end(), l) == rep.end())
      throw std::invalid_argument("representative must contain " + to_string(l));
  if (p == 2 || p == 3) throw std::domain_error("curve conditions are not supported in characteristic " + std::to_string(p));
  const ModP f(p);

  // Classes to test: everything except lines through P by construction,
  // cheapest first.
  const auto fixed = builtin_lines(tag);
  std::vector<LatticeVector> tests;
  for (const auto& c : rep)
    if (std::find(fixed.begin(), fixed.end(), c) == fixed.end()) tests.push_back(c);
  std::stable_sort(tests.begin(), tests.end(), [](const auto& x, const auto& y) { return x.degree() < y.degree(); });

  SearchReport out;
  out.p = p;
  out.setup = tag;
  for (std::size_t i = 0; i < rep.size(); ++i) out.representative += (i ? ";" : "") + to_string(rep[i]);

  std::vector<detail::ChunkResult> chunks(p);
  std::atomic<std::uint32_t> next{0};
  std::atomic<bool> out_of_time{false};
  const ResPoint target{0, 0, 1};
  auto expired = [&] {
    if (opt.budget_seconds <= 0) return false;
    const double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return el > opt.budget_seconds;
  };

  auto work = [&] {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(shape.params), 0);
    std::vector<std::uint64_t> subtree(static_cast<std::size_t>(shape.params) + 1, 1);
    for (int l = shape.params - 1; l >= 0; --l) subtree[static_cast<std::size_t>(l)] = subtree[static_cast<std::size_t>(l) + 1] * p;
    for (;;) {
      const std::uint32_t a = next.fetch_add(1);
      if (a >= p || out_of_time.load()) return;
      auto& res = chunks[a];
      GPState st(f);
      std::uint64_t ticks = 0;
      bool aborted = false;
      // Adds the points that become available once `level` parameters are
      // fixed; returns how many were pushed, or -1 on a violation.
      auto add_ready = [&](int level) {
        int pushed = 0;
        std::array<ResPoint, 8> pts = setup_points(tag, v);
        for (const auto& [idx, need] : shape.ready) {
          if (need != level) continue;
          const auto q = normalize(f, pts[static_cast<std::size_t>(idx)]);
          if (!st.admits(q)) {
            for (int k = 0; k < pushed; ++k) st.pop();
            return -1;
          }
          st.push(q);
          ++pushed;
        }
        return pushed;
      };
      auto rec = [&](auto&& self, int level) -> void {
        if (aborted) return;
        if (level == shape.params) {
          ++res.gp;
          const std::array<ResPoint, 8> raw = setup_points(tag, v);
          std::array<ResPoint, 8> pts;
          for (std::size_t i = 0; i < 8; ++i) pts[i] = normalize(f, raw[i]);
          for (const auto& c : tests)
            if (!residue_curve_through(f, pts, target, c)) return;
          ++res.realizations;
          if (res.found.size() < opt.max_realizations) res.found.push_back(v);
          return;
        }
        for (std::uint32_t x = 0; x < p; ++x) {
          if ((++ticks & 0xffff) == 0 && expired()) {
            aborted = true;
            out_of_time = true;
            return;
          }
          v[static_cast<std::size_t>(level)] = x;
          const int pushed = add_ready(level + 1);
          if (pushed < 0) continue;
          self(self, level + 1);
          for (int k = 0; k < pushed; ++k) st.pop();
          if (aborted) return;
        }
      };
      const int base = add_ready(0);
      v[0] = a;
      const int first = base < 0 ? -1 : add_ready(1);
      if (base >= 0 && first >= 0) rec(rec, 1);
      if (aborted) return;
      res.tuples = subtree[1];
      res.done = true;
    }
  };

  const int nw = std::max(1, std::min<int>(opt.workers, static_cast<int>(p)));
  std::vector<std::thread> pool;
  for (int i = 1; i < nw; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::uint64_t h = detail::kFnvOffset;
  detail::fnv(h, std::string(1, tag) + "|" + std::to_string(p) + "|" + out.representative);
  for (std::uint32_t a = 0; a < p; ++a) {
    const auto& c = chunks[a];
    if (!c.done) break;
    ++out.chunks_done;
    out.tuples += c.tuples;
    out.general_position += c.gp;
    out.realization_count += c.realizations;
    std::string line = "|" + std::to_string(a) + ":" + std::to_string(c.tuples) + ":" + std::to_string(c.gp) + ":" +
                       std::to_string(c.realizations);
    for (const auto& r : c.found) {
      Realization z{r, setup_points(tag, r)};
      for (auto& q : z.points) q = normalize(f, q);
      out.realizations.push_back(std::move(z));
      line += "(";
      for (auto x : r) line += std::to_string(x) + ",";
      line += ")";
    }
    detail::fnv(h, line);
  }
  out.complete = out.chunks_done == p;
  out.fingerprint = h;

  const PrimeField field(p);
  for (const auto& z : out.realizations) {
    std::vector<Fp> params;
    for (auto x : z.params) params.push_back(field.from_int(x));
    const auto cfg = tag == 'A' ? setup_a(field, std::span<const Fp>(params)) : setup_b(field, std::span<const Fp>(params));
    if (general_position(field, std::span<const ProjPoint<Fp>>(cfg.points)).ok &&
        concurrent_count(field, std::span<const ProjPoint<Fp>>(cfg.points), cfg.target, rep) == static_cast<int>(rep.size()))
      ++out.reverified;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline std::string point_text(const ResPoint& q) {
  return "(" + std::to_string(q[0]) + ":" + std::to_string(q[1]) + ":" + std::to_string(q[2]) + ")";
}

/// Field order is fixed; wall time is the only line that varies between runs.
inline std::string to_text(const SearchReport& r) {
  char fp[17];
  std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(r.fingerprint));
  std::string s;
  s += "p: " + std::to_string(r.p) + "\n";
  s += std::string("setup: ") + r.setup + "\n";
  s += "representative: " + r.representative + "\n";
  s += "complete: " + std::string(r.complete ? "yes" : "no") + "\n";
  s += "chunks: " + std::to_string(r.chunks_done) + "/" + std::to_string(r.p) + "\n";
  s += "tuples: " + std::to_string(r.tuples) + "\n";
  s += "general_position: " + std::to_string(r.general_position) + "\n";
  s += "realizations: " + std::to_string(r.realization_count) + "\n";
  s += "reverified: " + std::to_string(r.reverified) + "/" + std::to_string(r.realizations.size()) + "\n";
  s += "fingerprint: " + std::string(fp) + "\n";
  for (const auto& z : r.realizations) {
    s += "realization:";
    for (auto x : z.params) s += " " + std::to_string(x);
    s += " |";
    for (const auto& q : z.points) s += " " + point_text(q);
    s += "\n";
  }
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", r.seconds);
  s += "seconds: " + std::string(t) + "\n";
  return s;
}

inline std::string to_text(const GPExistence& g) {
  std::string s = "p: " + std::to_string(g.p) + "\nexists: " + (g.exists ? "yes" : "no") + "\nnodes: " + std::to_string(g.nodes) + "\n";
  if (g.exists) {
    s += "witness:";
    for (const auto& q : g.witness) s += " " + point_text(q);
    s += "\n";
  }
  return s;
}

inline std::vector<LatticeVector> to_classes(std::span<const ClassId> k) {
  std::vector<LatticeVector> out;
  for (auto v : k) out.push_back(all_classes()[v]);
  return out;
}

inline SearchReport eckardt_search(std::uint32_t p, char tag, const Clique& rep, const SearchOptions& opt = {}) {
  const auto cls = to_classes(rep);
  return eckardt_search(p, tag, std::span<const LatticeVector>(cls), opt);
}

// ---------------------------------------------------------------------------
// Verifying one configuration exactly.

struct ClassCheck {
  LatticeVector cls;
  bool exists = false;
  bool through_target = false;
};

struct Verification {
  GPResult general_position;
  std::vector<ClassCheck> classes;
  int concurrent = 0;
  bool partner_pair = false;          // some two members pair to 3
  bool partners_concurrent = true;    // with a partner pair: every member's partner passes through P too
};

template <class F>
Verification verify_config(const F& field, const PointConfig<F>& cfg, std::span<const LatticeVector> clique) {
  using E = typename F::Elem;
  Verification v;
  v.general_position = general_position(field, std::span<const ProjPoint<E>>(cfg.points));
  auto through = [&](const LatticeVector& c, bool& exists) {
    const auto curve = curve_for_class(field, std::span<const ProjPoint<E>>(cfg.points), c);
    exists = curve.has_value();
    return exists && is_zero(evaluate(field, *curve, cfg.target));
  };
  for (const auto& c : clique) {
    if (c.degree() == 0) throw std::invalid_argument("clique contains the blow-up class " + to_string(c));
    ClassCheck cc{c};
    cc.through_target = through(c, cc.exists);
    v.concurrent += cc.through_target;
    v.classes.push_back(cc);
  }
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (pairing(clique[i], clique[j]) == 3) v.partner_pair = true;
  if (v.partner_pair) {
    for (const auto& c : clique) {
      const auto q = partner(c);
      if (q.degree() == 0) continue;
      bool exists = false;
      if (!through(q, exists)) v.partners_concurrent = false;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// The rational family through the point Q.

/// (b, c, d) of the slice.
inline std::array<mpq_class, 3> family_slice_values() { return {mpq_class(-1), mpq_class(5, 4), mpq_class(-1)}; }

/// F2 restricted to b = -1, c = 5/4, d = -1: a polynomial in e and f.
inline MultiPoly family_slice() {
  MultiPoly s = f2_polynomial();
  const auto vals = family_slice_values();
  for (int i = 0; i < 3; ++i) s = substitute(s, 1 + i, MultiPoly(vals[static_cast<std::size_t>(i)]));
  return s;
}

/// The ten classes concurrent at Q: four lines, the two cubics and the
/// partners of the lines.
inline std::vector<LatticeVector> family_clique() {
  std::vector<LatticeVector> k{line(1, 2), line(3, 4), line(5, 6), line(7, 8), cubic(7, 8), cubic(8, 7)};
  for (int i = 0; i < 4; ++i) k.push_back(partner(k[static_cast<std::size_t>(i)]));
  return k;
}

struct FamilyPoint {
  mpq_class e, f;
  std::optional<mpq_class> a;  // -q/p; none where p vanishes
  bool on_curve = false;
  bool avoids_v2 = false;
  bool realizes = false;
  int concurrent = 0;
};

inline std::vector<mpq_class> family_params(const mpq_class& a, const mpq_class& e, const mpq_class& f) {
  const auto s = family_slice_values();
  return {a, s[0], s[1], s[2], e, f};
}

/// Classifies one point (e, f) of the slice.
inline FamilyPoint classify_family_point(const mpq_class& e, const mpq_class& f) {
  FamilyPoint fp;
  fp.e = e;
  fp.f = f;
  const auto s = family_slice_values();
  Assignment at;
  at[1] = s[0];
  at[2] = s[1];
  at[3] = s[2];
  at[4] = e;
  at[5] = f;
  fp.on_curve = evaluate(f2_polynomial(), at) == 0;
  const auto [p, q] = split_linear(f1_polynomial(), 0);
  const mpq_class pv = evaluate(p, at);
  if (pv == 0) return fp;
  fp.a = -evaluate(q, at) / pv;
  at[0] = *fp.a;
  fp.avoids_v2 = true;
  for (const auto& m : general_position_polynomials('A'))
    if (evaluate(m, at) == 0) {
      fp.avoids_v2 = false;
      break;
    }
  if (!fp.on_curve || !fp.avoids_v2) return fp;
  const RationalField Q;
  const auto params = family_params(*fp.a, e, f);
  const auto cfg = setup_a(Q, std::span<const mpq_class>(params));
  const auto clique = family_clique();
  const auto v = verify_config(Q, cfg, std::span<const LatticeVector>(clique));
  fp.concurrent = v.concurrent;
  fp.realizes = v.general_position.ok && v.concurrent == 10 && v.partner_pair;
  return fp;
}

inline mpz_class height(const mpq_class& x) { return std::max(mpz_class(abs(x.get_num())), mpz_class(x.get_den())); }

namespace detail {

inline std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace detail

/// Rational points (e, f) on the slice with max(|num|, den) <= H for both
/// coordinates: every e of height <= H, then the rational roots in f.
inline std::vector<FamilyPoint> family_point_scan(long H) {
  const MultiPoly slice = family_slice();
  if (slice.degree(5) > 2) throw std::logic_error("slice is not quadratic in f");
  const auto cf = slice.coefficients_in(5);
  std::vector<std::pair<mpq_class, mpq_class>> pts;
  for (long den = 1; den <= H; ++den)
    for (long num = -H; num <= H; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const mpq_class e(num, den);
      Assignment at;
      at[4] = e;
      std::array<mpq_class, 3> k{};
      for (std::size_t i = 0; i < cf.size(); ++i) k[i] = evaluate(cf[i], at);
      std::vector<mpq_class> roots;
      if (k[2] != 0) {
        const mpq_class disc = k[1] * k[1] - 4 * k[2] * k[0];
        const auto sn = detail::exact_sqrt(disc.get_num()), sd = detail::exact_sqrt(disc.get_den());
        if (!sn || !sd) continue;
        const mpq_class r(*sn, *sd);
        roots.push_back((-k[1] + r) / (2 * k[2]));
        if (r != 0) roots.push_back((-k[1] - r) / (2 * k[2]));
      } else if (k[1] != 0) {
        roots.push_back(-k[0] / k[1]);
      } else {
        continue;  // the whole line e = const lies on the slice, or misses it
      }
      for (auto& f : roots) {
        f.canonicalize();
        if (height(f) <= H) pts.emplace_back(e, f);
      }
    }
  std::sort(pts.begin(), pts.end());
  std::vector<FamilyPoint> out;
  for (const auto& [e, f] : pts) out.push_back(classify_family_point(e, f));
  return out;
}

}  // namespace dp1
