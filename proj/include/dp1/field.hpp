#pragma once

// Exact fields: the rationals (GMP) and prime fields F_p.  Elements carry
// their own arithmetic operators; the field objects supply constants,
// parsing and printing so generic code can be written once.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dp1 {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Element of F_p for p < 2^31.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
  }
  friend Fp operator-(Fp a, Fp b) { return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p}; }
  friend Fp operator-(Fp a) { return {a.v ? a.p - a.v : 0, a.p}; }
  friend Fp operator*(Fp a, Fp b) {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % a.p), a.p};
  }
  Fp inverse() const {
    if (v == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid on (v, p).
    std::int64_t r0 = p, r1 = v, s0 = 0, s1 = 1;
    while (r1) {
      const std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    s0 %= static_cast<std::int64_t>(p);
    if (s0 < 0) s0 += p;
    return {static_cast<std::uint32_t>(s0), p};
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
};

inline bool is_zero(const Fp& x) { return x.v == 0; }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

class PrimeField {
 public:
  using Elem = Fp;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("p must be a prime below 2^31");
  }
  std::uint32_t characteristic() const { return p_; }
  Elem zero() const { return {0, p_}; }
  Elem one() const { return {1 % p_, p_}; }
  Elem from_int(long long x) const {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r), p_};
  }
  Elem parse(std::string_view s) const {
    const auto slash = s.find('/');
    if (slash != std::string_view::npos) return parse(s.substr(0, slash)) / parse(s.substr(slash + 1));
    try {
      std::size_t used = 0;
      const long long x = std::stoll(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("");
      return from_int(x);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
  }
  std::string str(const Elem& x) const { return std::to_string(x.v); }
  std::string name() const { return "F_" + std::to_string(p_); }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long x) const { return Elem(static_cast<long>(x)); }
  Elem parse(std::string_view s) const {
    Elem r;
    if (s.empty() || r.set_str(std::string(s), 10) != 0) throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    if (r.get_den() == 0) throw std::domain_error("zero denominator: '" + std::string(s) + "'");
    r.canonicalize();
    return r;
  }
  std::string str(const Elem& x) const { return x.get_str(); }
  std::string name() const { return "Q"; }
};

}  // namespace dp1
