#pragma once

// Picard lattice of a degree-1 del Pezzo surface, written in the basis
// L, E1..E8 of the blow-up of P^2 in eight points.  A vector (a; b1..b8)
// stands for the class a*L - sum b_i*E_i, so E_i itself has b_i = -1.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dp1 {

struct LatticeVector {
  std::array<int, 9> c{};

  constexpr int degree() const { return c[0]; }
  // 1-based, matching the point labels P1..P8.
  constexpr int mult(int i) const { return c[static_cast<std::size_t>(i)]; }

  constexpr auto operator<=>(const LatticeVector&) const = default;

  constexpr LatticeVector operator+(const LatticeVector& o) const {
    LatticeVector r;
    for (std::size_t i = 0; i < 9; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  constexpr LatticeVector operator-(const LatticeVector& o) const {
    LatticeVector r;
    for (std::size_t i = 0; i < 9; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  constexpr LatticeVector operator-() const {
    LatticeVector r;
    for (std::size_t i = 0; i < 9; ++i) r.c[i] = -c[i];
    return r;
  }
  friend constexpr LatticeVector operator*(int k, const LatticeVector& v) {
    LatticeVector r;
    for (std::size_t i = 0; i < 9; ++i) r.c[i] = k * v.c[i];
    return r;
  }
};

using ExceptionalClass = LatticeVector;
using ClassId = std::uint8_t;
inline constexpr int kNumClasses = 240;

/// Intersection pairing of signature (1, -1^8): a*a' - sum b_i*b'_i.
constexpr int pairing(const LatticeVector& x, const LatticeVector& y) {
  int s = x.c[0] * y.c[0];
  for (std::size_t i = 1; i < 9; ++i) s -= x.c[i] * y.c[i];
  return s;
}

/// K_X = -3L + sum E_i.
constexpr LatticeVector canonical_class() {
  return LatticeVector{{-3, -1, -1, -1, -1, -1, -1, -1, -1}};
}

constexpr bool is_exceptional(const LatticeVector& v) {
  return pairing(v, v) == -1 && pairing(v, canonical_class()) == -1;
}

/// The unique class meeting e with multiplicity 3: -2K - e.
constexpr LatticeVector partner(const LatticeVector& e) {
  return (-2) * canonical_class() - e;
}

// ---------------------------------------------------------------------------
// Named classes, indices 1-based as in the usual notation.

inline LatticeVector blowup(int i) {
  LatticeVector v;
  v.c[static_cast<std::size_t>(i)] = -1;
  return v;
}

/// Line through P_i and P_j.
inline LatticeVector line(int i, int j) {
  LatticeVector v;
  v.c[0] = 1;
  v.c[static_cast<std::size_t>(i)] = 1;
  v.c[static_cast<std::size_t>(j)] = 1;
  return v;
}

/// Conic through the five points other than P_i, P_j, P_k.
inline LatticeVector conic(int i, int j, int k) {
  LatticeVector v;
  v.c[0] = 2;
  for (int m = 1; m <= 8; ++m) v.c[static_cast<std::size_t>(m)] = 1;
  v.c[static_cast<std::size_t>(i)] = v.c[static_cast<std::size_t>(j)] =
      v.c[static_cast<std::size_t>(k)] = 0;
  return v;
}

/// Cubic missing P_i and singular at P_j.
inline LatticeVector cubic(int i, int j) {
  LatticeVector v;
  v.c[0] = 3;
  for (int m = 1; m <= 8; ++m) v.c[static_cast<std::size_t>(m)] = 1;
  v.c[static_cast<std::size_t>(i)] = 0;
  v.c[static_cast<std::size_t>(j)] = 2;
  return v;
}

/// Quartic singular at P_i, P_j, P_k.
inline LatticeVector quartic(int i, int j, int k) {
  LatticeVector v;
  v.c[0] = 4;
  for (int m = 1; m <= 8; ++m) v.c[static_cast<std::size_t>(m)] = 1;
  v.c[static_cast<std::size_t>(i)] = v.c[static_cast<std::size_t>(j)] =
      v.c[static_cast<std::size_t>(k)] = 2;
  return v;
}

/// Quintic singular at every point except P_i and P_j.
inline LatticeVector quintic(int i, int j) {
  LatticeVector v;
  v.c[0] = 5;
  for (int m = 1; m <= 8; ++m) v.c[static_cast<std::size_t>(m)] = 2;
  v.c[static_cast<std::size_t>(i)] = v.c[static_cast<std::size_t>(j)] = 1;
  return v;
}

/// Sextic with a triple point at P_i and double points elsewhere.
inline LatticeVector sextic(int i) {
  LatticeVector v;
  v.c[0] = 6;
  for (int m = 1; m <= 8; ++m) v.c[static_cast<std::size_t>(m)] = 2;
  v.c[static_cast<std::size_t>(i)] = 3;
  return v;
}

enum class Family { BlowUp, Line, Conic, Cubic, Quartic, Quintic, Sextic };

inline Family family(const LatticeVector& v) {
  switch (v.degree()) {
    case 0: return Family::BlowUp;
    case 1: return Family::Line;
    case 2: return Family::Conic;
    case 3: return Family::Cubic;
    case 4: return Family::Quartic;
    case 5: return Family::Quintic;
    case 6: return Family::Sextic;
    default: throw std::invalid_argument("not an exceptional class degree");
  }
}

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::BlowUp: return "blowup";
    case Family::Line: return "line";
    case Family::Conic: return "conic";
    case Family::Cubic: return "cubic";
    case Family::Quartic: return "quartic";
    case Family::Quintic: return "quintic";
    case Family::Sextic: return "sextic";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Generation.  The taxonomy route lists each family from its geometric
// description; the search route solves the two lattice equations directly.

inline std::vector<LatticeVector> classes_by_taxonomy() {
  std::vector<LatticeVector> out;
  for (int i = 1; i <= 8; ++i) out.push_back(blowup(i));
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) out.push_back(line(i, j));
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k) out.push_back(conic(i, j, k));
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if (i != j) out.push_back(cubic(i, j));
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k) out.push_back(quartic(i, j, k));
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) out.push_back(quintic(i, j));
  for (int i = 1; i <= 8; ++i) out.push_back(sextic(i));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LatticeVector> classes_by_search() {
  // 0 <= a <= 6 and |b_i| bounded by sum b_i^2 = a^2 + 1.
  std::vector<LatticeVector> out;
  LatticeVector v;
  std::function<void(int, int, int)> rec = [&](int i, int sum, int sq) {
    const int a = v.c[0];
    if (i == 9) {
      if (3 * a - sum == 1 && a * a - sq == -1) out.push_back(v);
      return;
    }
    for (int b = -7; b <= 7; ++b) {
      if (sq + b * b > a * a + 1) continue;
      v.c[static_cast<std::size_t>(i)] = b;
      rec(i + 1, sum + b, sq + b * b);
    }
    v.c[static_cast<std::size_t>(i)] = 0;
  };
  for (int a = 0; a <= 6; ++a) {
    v = LatticeVector{};
    v.c[0] = a;
    rec(1, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The 240 exceptional classes in lexicographic order of (a, b1..b8).
inline const std::vector<LatticeVector>& all_classes() {
  static const std::vector<LatticeVector> classes = classes_by_taxonomy();
  return classes;
}

inline std::optional<ClassId> class_index(const LatticeVector& v) {
  const auto& all = all_classes();
  auto it = std::lower_bound(all.begin(), all.end(), v);
  if (it == all.end() || *it != v) return std::nullopt;
  return static_cast<ClassId>(it - all.begin());
}

inline ClassId require_index(const LatticeVector& v);

struct PairingCounts {
  int n3 = 0, n2 = 0, n1 = 0, n0 = 0;
  auto operator<=>(const PairingCounts&) const = default;
};

/// Number of other classes meeting e with multiplicity 3, 2, 1, 0.
inline PairingCounts pairing_distribution(const LatticeVector& e) {
  PairingCounts pc;
  for (const auto& f : all_classes()) {
    if (f == e) continue;
    switch (pairing(e, f)) {
      case 3: ++pc.n3; break;
      case 2: ++pc.n2; break;
      case 1: ++pc.n1; break;
      case 0: ++pc.n0; break;
      default: throw std::logic_error("pairing outside {0,1,2,3}");
    }
  }
  return pc;
}

// ---------------------------------------------------------------------------
// Text encoding: "a b1 ... b8".

inline std::string to_string(const LatticeVector& v) {
  std::string s;
  for (std::size_t i = 0; i < 9; ++i) {
    if (i) s += ' ';
    s += std::to_string(v.c[i]);
  }
  return s;
}

inline LatticeVector parse_class(std::string_view text) {
  std::istringstream in{std::string(text)};
  LatticeVector v;
  for (std::size_t i = 0; i < 9; ++i) {
    if (!(in >> v.c[i]))
      throw std::invalid_argument("class needs 9 integers: '" + std::string(text) + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing data in class: '" + std::string(text) + "'");
  return v;
}

inline ClassId require_index(const LatticeVector& v) {
  auto id = class_index(v);
  if (!id) throw std::invalid_argument("not an exceptional class: " + to_string(v));
  return *id;
}

}  // namespace dp1
