#pragma once

// Sparse multivariate polynomials over Q in the variables a..h.
//
// A monomial is packed into 64 bits: total degree in the top byte, then 7
// bits per variable from h down to a, so integer comparison of keys is the
// graded lexicographic order with a < b < ... < h.  Terms are kept sorted by
// decreasing key with no zero coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dp1 {

inline constexpr int kNumVars = 8;
inline constexpr int kMaxVarDegree = 127;

struct Monomial {
  std::uint64_t key = 0;

  static Monomial from_exponents(const std::array<int, kNumVars>& e) {
    std::uint64_t k = 0;
    int total = 0;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[static_cast<std::size_t>(v)] < 0 || e[static_cast<std::size_t>(v)] > kMaxVarDegree)
        throw std::overflow_error("exponent out of range");
      k |= static_cast<std::uint64_t>(e[static_cast<std::size_t>(v)]) << (7 * v);
      total += e[static_cast<std::size_t>(v)];
    }
    if (total > 255) throw std::overflow_error("total degree out of range");
    return {k | (static_cast<std::uint64_t>(total) << 56)};
  }
  static Monomial var(int v, int e = 1) {
    std::array<int, kNumVars> x{};
    x[static_cast<std::size_t>(v)] = e;
    return from_exponents(x);
  }

  int exponent(int v) const { return static_cast<int>((key >> (7 * v)) & 127u); }
  int total() const { return static_cast<int>(key >> 56); }

  friend Monomial operator*(Monomial a, Monomial b) {
    for (int v = 0; v < kNumVars; ++v)
      if (a.exponent(v) + b.exponent(v) > kMaxVarDegree) throw std::overflow_error("exponent overflow");
    if (a.total() + b.total() > 255) throw std::overflow_error("total degree overflow");
    return {a.key + b.key};
  }
  bool divides(Monomial b) const {
    for (int v = 0; v < kNumVars; ++v)
      if (exponent(v) > b.exponent(v)) return false;
    return true;
  }
  /// b / a, assuming a divides b.
  friend Monomial quotient(Monomial b, Monomial a) { return {b.key - a.key}; }

  auto operator<=>(const Monomial&) const = default;
};

class MultiPoly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  MultiPoly() = default;
  MultiPoly(long c) {  // NOLINT: constants convert implicitly
    if (c) terms_.emplace_back(Monomial{}, mpq_class(c));
  }
  MultiPoly(const mpq_class& c) {  // NOLINT
    if (sgn(c)) terms_.emplace_back(Monomial{}, c);
  }
  static MultiPoly var(int v) {
    MultiPoly p;
    p.terms_.emplace_back(Monomial::var(v), mpq_class(1));
    return p;
  }
  static MultiPoly term(Monomial m, const mpq_class& c) {
    MultiPoly p;
    if (sgn(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  /// Builds from arbitrary terms: sorts and merges equal monomials.
  static MultiPoly from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return x.first.key > y.first.key; });
    MultiPoly p;
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) p.terms_.back().second += t.second;
      else p.terms_.push_back(std::move(t));
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.key == 0); }
    /// Coefficient of the constant monomial (the last term when present).
  mpq_class constant_value() const {
    return !terms_.empty() && terms_.back().first.key == 0 ? terms_.back().second : mpq_class(0);
  }
  const Term& leading() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.total(); }

  int degree(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
    return d;
  }
  bool has_var(int v) const { return degree(v) > 0; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) return a.times_term(b.terms_[0].first, b.terms_[0].second);
    if (a.size() == 1) return b.times_term(a.terms_[0].first, a.terms_[0].second);
    std::map<std::uint64_t, mpq_class, std::greater<>> acc;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        auto [it, fresh] = acc.try_emplace((x.first * y.first).key);
        it->second += x.second * y.second;
      }
    MultiPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (sgn(c)) r.terms_.emplace_back(Monomial{k}, std::move(c));
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly times_term(Monomial m, const mpq_class& c) const {
    MultiPoly r;
    if (sgn(c) == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;
  }
  MultiPoly scaled(const mpq_class& c) const { return times_term(Monomial{}, c); }

  /// Exact quotient a / b, or nullopt when b does not divide a.
  friend std::optional<MultiPoly> divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return MultiPoly{};
    if (b.size() == 1) {
      const auto& [m, c] = b.terms_[0];
      MultiPoly q;
      for (const auto& t : a.terms_) {
        if (!m.divides(t.first)) return std::nullopt;
        q.terms_.emplace_back(quotient(t.first, m), t.second / c);
      }
      return q;
    }
    std::map<std::uint64_t, mpq_class, std::greater<>> rem;
    for (const auto& t : a.terms_) rem.emplace(t.first.key, t.second);
    const auto& [lm, lc] = b.terms_[0];
    std::vector<Term> q;
    while (!rem.empty()) {
      auto it = rem.begin();
      const Monomial m{it->first};
      if (!lm.divides(m)) return std::nullopt;
      const Monomial qm = quotient(m, lm);
      const mpq_class qc = it->second / lc;
      rem.erase(it);
      for (std::size_t i = 1; i < b.terms_.size(); ++i) {
        const auto k = (b.terms_[i].first * qm).key;
        auto [jt, fresh] = rem.try_emplace(k);
        jt->second -= qc * b.terms_[i].second;
        if (sgn(jt->second) == 0) rem.erase(jt);
      }
      q.emplace_back(qm, qc);
    }
    MultiPoly r;
    r.terms_ = std::move(q);  // produced in decreasing order
    return r;
  }

  /// Coefficients of v^0, v^1, ... as polynomials free of v.
  std::vector<MultiPoly> coefficients_in(int v) const {
    std::vector<std::vector<Term>> parts(static_cast<std::size_t>(std::max(0, degree(v)) + 1));
    for (const auto& t : terms_) {
      const int e = t.first.exponent(v);
      parts[static_cast<std::size_t>(e)].emplace_back(quotient(t.first, Monomial::var(v, e)), t.second);
    }
    std::vector<MultiPoly> out;
    for (auto& p : parts) out.push_back(from_terms(std::move(p)));
    return out;
  }

  static MultiPoly from_coefficients(int v, const std::vector<MultiPoly>& cs) {
    MultiPoly r;
    for (std::size_t e = 0; e < cs.size(); ++e)
      if (!cs[e].is_zero()) r += cs[e].times_term(Monomial::var(v, static_cast<int>(e)), mpq_class(1));
    return r;
  }

 private:
  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first.key > b.terms_[j].first.key)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first.key > a.terms_[i].first.key) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? mpq_class(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        mpq_class c = subtract ? mpq_class(a.terms_[i].second - b.terms_[j].second)
                               : mpq_class(a.terms_[i].second + b.terms_[j].second);
        if (sgn(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide(a, b);
  if (!q) throw std::logic_error("inexact polynomial division");
  return std::move(*q);
}

inline MultiPoly pow(const MultiPoly& p, int e) {
  MultiPoly r(1L);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

inline char var_name(int v) { return static_cast<char>('a' + v); }

// ---------------------------------------------------------------------------
// Normal forms and gcd.

/// Scaled so the leading coefficient is 1.
inline MultiPoly monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(mpq_class(1) / p.leading().second);
}

/// Scaled to integer coefficients with gcd 1 and positive leading coefficient.
inline MultiPoly primitive_integer(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  for (const auto& t : p.terms()) {
    const mpz_class n = t.second.get_num() * (l / t.second.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class s(l, g);
  s.canonicalize();
  if (sgn(p.leading().second) < 0) s = -s;
  return p.scaled(s);
}

namespace detail {

/// Pseudo-remainder of a by b as polynomials in v.
inline MultiPoly prem(MultiPoly a, const MultiPoly& b, int v) {
  const int db = b.degree(v);
  const auto bc = b.coefficients_in(v);
  const MultiPoly& lb = bc.back();
  while (!a.is_zero() && a.degree(v) >= db) {
    const int da = a.degree(v);
    const MultiPoly la = a.coefficients_in(v).back();
    a = lb * a - la.times_term(Monomial::var(v, da - db), mpq_class(1)) * b;
  }
  return a;
}

inline constexpr std::uint64_t kCertPrime = 2147483647ull;  // 2^31 - 1

inline std::uint64_t mod_pow(std::uint64_t x, std::uint64_t e) {
  std::uint64_t r = 1;
  x %= kCertPrime;
  for (; e; e >>= 1, x = x * x % kCertPrime)
    if (e & 1) r = r * x % kCertPrime;
  return r;
}

inline std::uint64_t mod_q(const mpq_class& c) {
  const mpz_class P = static_cast<unsigned long>(kCertPrime);
  mpz_class n = c.get_num() % P, d = c.get_den() % P;
  if (n < 0) n += P;
  if (d == 0) return kCertPrime;  // sentinel: not reducible
  return n.get_ui() * mod_pow(d.get_ui(), kCertPrime - 2) % kCertPrime;
}

/// Image in F_q[v] after sending every other variable to vals; empty when
/// a coefficient denominator vanishes.
inline std::vector<std::uint64_t> univariate_image(const MultiPoly& p, int v, const std::array<std::uint64_t, kNumVars>& vals) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(0, p.degree(v)) + 1), 0);
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t t = mod_q(c);
    if (t == kCertPrime) return {};
    for (int x = 0; x < kNumVars; ++x)
      if (x != v && m.exponent(x)) t = t * mod_pow(vals[static_cast<std::size_t>(x)], static_cast<std::uint64_t>(m.exponent(x))) % kCertPrime;
    auto& slot = out[static_cast<std::size_t>(m.exponent(v))];
    slot = (slot + t) % kCertPrime;
  }
  return out;
}

inline int univariate_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto trim = [](std::vector<std::uint64_t>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    const std::uint64_t inv = mod_pow(b.back(), kCertPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = a.back() * inv % kCertPrime;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + (kCertPrime - f) * b[i]) % kCertPrime;
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// True when the polynomials certainly have no common factor: for each
/// variable, some image with nonvanishing leading coefficients has a
/// constant gcd.  False means "unknown".
inline bool certainly_coprime(const std::vector<const MultiPoly*>& ps) {
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  auto next = [&seed] {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed % (kCertPrime - 2) + 1;
  };
  for (int v = 0; v < kNumVars; ++v) {
    bool everywhere = true;
    for (auto* p : ps) everywhere = everywhere && p->has_var(v);
    if (!everywhere) continue;
    bool settled = false;
    for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
      std::array<std::uint64_t, kNumVars> vals{};
      for (auto& x : vals) x = next();
      std::vector<std::uint64_t> g;
      bool usable = true;
      for (std::size_t i = 0; i < ps.size() && usable; ++i) {
        auto img = univariate_image(*ps[i], v, vals);
        if (img.empty() || img.back() == 0) usable = false;
        else if (i == 0) g = std::move(img);
        else {
          const int d = univariate_gcd_degree(g, img);
          if (d == 0) {
            settled = true;
            break;
          }
          // Keep the image of smaller degree; a constant gcd anywhere settles it.
          if (img.size() < g.size()) g = std::move(img);
        }
      }
      if (!usable) continue;
      if (!settled) return false;
    }
    if (!settled) return false;
  }
  return true;
}

inline bool certainly_coprime(const MultiPoly& a, const MultiPoly& b) { return certainly_coprime({&a, &b}); }

}  // namespace detail

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// gcd of the coefficients of p viewed as a polynomial in v.
inline MultiPoly content_in(const MultiPoly& p, int v) {
  auto cs = p.coefficients_in(v);
  std::erase_if(cs, [](const MultiPoly& c) { return c.is_zero(); });
  std::vector<const MultiPoly*> ptrs;
  for (const auto& c : cs) ptrs.push_back(&c);
  if (cs.size() > 1 && detail::certainly_coprime(ptrs)) return MultiPoly(1L);
  std::sort(cs.begin(), cs.end(), [](const MultiPoly& x, const MultiPoly& y) { return x.size() < y.size(); });
  MultiPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd(g, c);
    if (g.is_constant()) return MultiPoly(1L);
  }
  return g;
}

/// Greatest common divisor, normalized monic; gcd(0, 0) = 0.
inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1L);
  if (detail::certainly_coprime(a, b)) return MultiPoly(1L);
  int v = -1;
  for (int x = kNumVars - 1; x >= 0 && v < 0; --x)
    if (a.has_var(x) || b.has_var(x)) v = x;
  const MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  const MultiPoly c = gcd(ca, cb);
  MultiPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (pb.degree(v) > 0) {
    const MultiPoly r = detail::prem(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = MultiPoly{};
      break;
    }
    pb = exact_div(r, content_in(r, v));
  }
  // pa is primitive in v; a positive-degree remainder chain ending in a
  // nonzero constant-in-v polynomial means the primitive parts are coprime.
  MultiPoly g = (pb.is_zero() && pa.degree(v) > 0) ? pa : MultiPoly(1L);
  return monic(c * g);
}

// ---------------------------------------------------------------------------
// Evaluation and substitution.

using Assignment = std::array<std::optional<mpq_class>, kNumVars>;

inline mpq_class evaluate(const MultiPoly& p, const Assignment& at) {
  mpq_class s = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class t = c;
    for (int v = 0; v < kNumVars; ++v) {
      const int e = m.exponent(v);
      if (!e) continue;
      if (!at[static_cast<std::size_t>(v)])
        throw std::invalid_argument(std::string("variable ") + var_name(v) + " is unassigned");
      mpq_class x;
      mpz_pow_ui(x.get_num_mpz_t(), at[static_cast<std::size_t>(v)]->get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(x.get_den_mpz_t(), at[static_cast<std::size_t>(v)]->get_den_mpz_t(), static_cast<unsigned long>(e));
      t *= x;
    }
    s += t;
  }
  return s;
}

/// Value modulo a prime p (every coefficient denominator must be prime to p).
inline std::uint32_t evaluate_mod(const MultiPoly& p, const std::array<std::uint32_t, kNumVars>& at, std::uint32_t prime) {
  const mpz_class P = prime;
  mpz_class s = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), c.get_den_mpz_t(), P.get_mpz_t()) == 0)
      throw std::domain_error("coefficient denominator vanishes mod p");
    mpz_class t = c.get_num() * inv;
    for (int v = 0; v < kNumVars; ++v) {
      const int e = m.exponent(v);
      if (!e) continue;
      mpz_class x;
      mpz_powm_ui(x.get_mpz_t(), mpz_class(at[static_cast<std::size_t>(v)]).get_mpz_t(), static_cast<unsigned long>(e),
                  P.get_mpz_t());
      t = t * x % P;
    }
    s = (s + t) % P;
  }
  if (s < 0) s += P;
  return static_cast<std::uint32_t>(s.get_ui());
}

/// p with v replaced by the polynomial q.
inline MultiPoly substitute(const MultiPoly& p, int v, const MultiPoly& q) {
  const auto cs = p.coefficients_in(v);
  MultiPoly r;
  for (std::size_t e = cs.size(); e-- > 0;) r = r * q + cs[e];  // Horner
  return r;
}

/// Numerator of p(v = num/den) after multiplying through by den^deg_v(p).
inline MultiPoly substitute_fraction(const MultiPoly& p, int v, const MultiPoly& num, const MultiPoly& den) {
  const auto cs = p.coefficients_in(v);
  const int d = static_cast<int>(cs.size()) - 1;
  MultiPoly r;
  MultiPoly nk(1L);
  std::vector<MultiPoly> den_pows{MultiPoly(1L)};
  for (int k = 1; k <= d; ++k) den_pows.push_back(den_pows.back() * den);
  for (int k = 0; k <= d; ++k) {
    if (!cs[static_cast<std::size_t>(k)].is_zero())
      r += cs[static_cast<std::size_t>(k)] * nk * den_pows[static_cast<std::size_t>(d - k)];
    nk *= num;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text.

inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    const mpq_class a = abs(c);
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (int v = 0; v < kNumVars; ++v) {
      const int e = m.exponent(v);
      if (!e) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) s += a.get_str();
    else if (a == 1) s += mono;
    else s += a.get_str() + "*" + mono;
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i_) + ": " + why);
  }
  bool at_factor_start() {
    skip();
    if (i_ >= s_.size()) return false;
    const char ch = s_[i_];
    return ch == '(' || std::isdigit(static_cast<unsigned char>(ch)) || (ch >= 'a' && ch <= 'h');
  }

  MultiPoly expr() {
    skip();
    MultiPoly r;
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) neg = s_[i_++] == '-';
    r = neg ? -term() : term();
    for (;;) {
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) return r;
      const bool minus = s_[i_++] == '-';
      const MultiPoly t = term();
      r = minus ? r - t : r + t;
    }
  }

  MultiPoly term() {
    MultiPoly r = power();
    for (;;) {
      skip();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        r *= power();
      } else if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        const MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        r = r.scaled(mpq_class(1) / d.constant_value());
      } else if (at_factor_start()) {
        r *= power();  // implicit multiplication
      } else {
        return r;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = atom();
    skip();
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      base = pow(base, std::stoi(std::string(s_.substr(start, i_ - start))));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    const char ch = s_[i_];
    if (ch == '(') {
      ++i_;
      MultiPoly r = expr();
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
      ++i_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return MultiPoly(mpq_class(mpz_class(std::string(s_.substr(start, i_ - start)))));
    }
    if (ch >= 'a' && ch <= 'h') {
      ++i_;
      return MultiPoly::var(ch - 'a');
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses sums of products of variables a..h, integers, parentheses and
/// powers.  Juxtaposition multiplies, so "2bd^2f" is 2*b*d^2*f; division
/// is allowed by constants only.
inline MultiPoly parse_poly(std::string_view s) { return detail::PolyParser(s).parse(); }

/// Polynomial ring object for the generic row builders of plane.hpp.
struct PolyRing {
  using Elem = MultiPoly;
  Elem zero() const { return {}; }
  Elem one() const { return MultiPoly(1L); }
  Elem from_int(long long x) const { return MultiPoly(static_cast<long>(x)); }
};

}  // namespace dp1
