#pragma once

// The complete weighted graph on the 240 exceptional classes and the action
// of W(E8) on it.  Group elements are never materialized: the group is
// handled through the eight simple reflections as permutations of the class
// indices, and orbits are closed by breadth-first search.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "dp1/picard.hpp"

namespace dp1 {

/// A set of class indices, one bit per class.
struct ClassSet {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }

  ClassSet operator&(const ClassSet& o) const {
    return {{w[0] & o.w[0], w[1] & o.w[1], w[2] & o.w[2], w[3] & o.w[3]}};
  }
  ClassSet operator|(const ClassSet& o) const {
    return {{w[0] | o.w[0], w[1] | o.w[1], w[2] | o.w[2], w[3] | o.w[3]}};
  }
  ClassSet& operator&=(const ClassSet& o) { return *this = *this & o; }
  ClassSet& operator|=(const ClassSet& o) { return *this = *this | o; }
  bool operator==(const ClassSet&) const = default;

  /// Elements strictly greater than i.
  static ClassSet above(int i) {
    ClassSet s;
    for (int k = 0; k < 4; ++k) {
      const int lo = k * 64;
      if (i < lo) s.w[static_cast<std::size_t>(k)] = ~std::uint64_t{0};
      else if (i < lo + 63) s.w[static_cast<std::size_t>(k)] = ~std::uint64_t{0} << ((i - lo) + 1);
    }
    s.w[3] &= (std::uint64_t{1} << (kNumClasses - 192)) - 1;
    return s;
  }

  /// Lowest element, or -1.
  int first() const {
    for (int k = 0; k < 4; ++k)
      if (w[static_cast<std::size_t>(k)]) return k * 64 + std::countr_zero(w[static_cast<std::size_t>(k)]);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < 4; ++k) {
      std::uint64_t x = w[static_cast<std::size_t>(k)];
      while (x) {
        f(k * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  std::vector<ClassId> to_vector() const {
    std::vector<ClassId> v;
    for_each([&](int i) { v.push_back(static_cast<ClassId>(i)); });
    return v;
  }
};

struct ClassSetHash {
  std::size_t operator()(const ClassSet& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : s.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

/// Bit mask over intersection multiplicities 0..3.
using WeightSet = std::uint8_t;

constexpr WeightSet weight_set(std::initializer_list<int> ws) {
  WeightSet m = 0;
  for (int w : ws) m = static_cast<WeightSet>(m | (1u << w));
  return m;
}

inline std::string to_string(WeightSet ws) {
  std::string s;
  for (int w = 0; w < 4; ++w)
    if (ws & (1u << w)) {
      if (!s.empty()) s += ',';
      s += std::to_string(w);
    }
  return s;
}

inline WeightSet parse_weight_set(std::string_view text) {
  WeightSet m = 0;
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') continue;
    if (ch < '0' || ch > '3') throw std::invalid_argument("weights must be in 0..3");
    m = static_cast<WeightSet>(m | (1u << (ch - '0')));
  }
  return m;
}

// ---------------------------------------------------------------------------

using Permutation = std::array<ClassId, kNumClasses>;

/// E_i - E_{i+1} for i = 1..7 and L - E1 - E2 - E3.
inline std::array<LatticeVector, 8> simple_roots() {
  std::array<LatticeVector, 8> r{};
  for (int i = 1; i <= 7; ++i) {
    r[static_cast<std::size_t>(i - 1)].c[static_cast<std::size_t>(i)] = -1;
    r[static_cast<std::size_t>(i - 1)].c[static_cast<std::size_t>(i + 1)] = 1;
  }
  r[7] = LatticeVector{{1, 1, 1, 1, 0, 0, 0, 0, 0}};
  return r;
}

constexpr bool is_root(const LatticeVector& r) {
  return pairing(r, r) == -2 && pairing(r, canonical_class()) == 0;
}

/// Reflection in the hyperplane orthogonal to r (r.r = -2).
constexpr LatticeVector reflect(const LatticeVector& r, const LatticeVector& x) {
  return x + pairing(x, r) * r;
}

inline constexpr std::uint64_t kWeylOrder = 696729600ull;

constexpr std::uint64_t weyl_order() { return kWeylOrder; }

class WeightedGraph {
 public:
  WeightedGraph() {
    const auto& cls = all_classes();
    for (int i = 0; i < kNumClasses; ++i)
      for (int j = 0; j < kNumClasses; ++j)
        weight_[static_cast<std::size_t>(i * kNumClasses + j)] =
            static_cast<std::int8_t>(pairing(cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(j)]));

    for (unsigned m = 0; m < 16; ++m)
      for (int i = 0; i < kNumClasses; ++i) {
        ClassSet s;
        for (int j = 0; j < kNumClasses; ++j) {
          if (i == j) continue;
          const int w = weight(static_cast<ClassId>(i), static_cast<ClassId>(j));
          if (m & (1u << w)) s.set(j);
        }
        adjacency_[m][static_cast<std::size_t>(i)] = s;
      }

    const auto roots = simple_roots();
    for (std::size_t g = 0; g < 8; ++g)
      for (int i = 0; i < kNumClasses; ++i)
        generators_[g][static_cast<std::size_t>(i)] =
            require_index(reflect(roots[g], cls[static_cast<std::size_t>(i)]));

    for (int i = 0; i < kNumClasses; ++i)
      partner_[static_cast<std::size_t>(i)] = require_index(dp1::partner(cls[static_cast<std::size_t>(i)]));
  }

  static const WeightedGraph& instance() {
    static const WeightedGraph g;
    return g;
  }

  int weight(ClassId i, ClassId j) const {
    return weight_[static_cast<std::size_t>(i) * kNumClasses + j];
  }
  const LatticeVector& vertex(ClassId i) const { return all_classes()[i]; }
  ClassId partner(ClassId i) const { return partner_[i]; }

  /// Vertices j != i with weight(i, j) in ws.
  const ClassSet& compatible(ClassId i, WeightSet ws) const { return adjacency_[ws & 15u][i]; }

  const std::array<Permutation, 8>& generators() const { return generators_; }

 private:
  std::vector<std::int8_t> weight_ = std::vector<std::int8_t>(kNumClasses * kNumClasses);
  std::array<std::array<ClassSet, kNumClasses>, 16> adjacency_{};
  std::array<Permutation, 8> generators_{};
  std::array<ClassId, kNumClasses> partner_{};
};

// ---------------------------------------------------------------------------
// Cliques.

using Clique = std::vector<ClassId>;  // strictly increasing

inline ClassSet to_set(std::span<const ClassId> k) {
  ClassSet s;
  for (auto v : k) s.set(v);
  return s;
}

/// True when every pairwise weight in k lies in ws.
inline bool is_clique(const WeightedGraph& g, std::span<const ClassId> k, WeightSet ws) {
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      const int w = g.weight(k[i], k[j]);
      if (w < 0 || !(ws & (1u << w))) return false;
    }
  return true;
}

/// Number of pairs in k of weight w.
inline int count_weight(const WeightedGraph& g, std::span<const ClassId> k, int w) {
  int n = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) n += g.weight(k[i], k[j]) == w;
  return n;
}

inline Clique apply(const Permutation& p, std::span<const ClassId> k) {
  Clique out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = p[k[i]];
  std::sort(out.begin(), out.end());
  return out;
}

/// Simple graph on at most 16 vertices, adjacency as bit rows.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, 16> adj{};

  void add_edge(int i, int j) {
    adj[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(i)] | (1u << j));
    adj[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(j)] | (1u << i));
  }
  bool has_edge(int i, int j) const { return (adj[static_cast<std::size_t>(i)] >> j) & 1u; }
  int degree(int i) const { return std::popcount(adj[static_cast<std::size_t>(i)]); }
  int edge_count() const {
    int s = 0;
    for (int i = 0; i < n; ++i) s += degree(i);
    return s / 2;
  }
};

/// The graph of weight-w edges inside k, vertices in the order of k.
inline SmallGraph weight_subgraph(const WeightedGraph& g, std::span<const ClassId> k, int w) {
  if (k.size() > 16) throw std::invalid_argument("weight_subgraph supports at most 16 vertices");
  SmallGraph s;
  s.n = static_cast<int>(k.size());
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      if (g.weight(k[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(j)]) == w) s.add_edge(i, j);
  return s;
}

// ---------------------------------------------------------------------------
// Orbits.

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrbitOptions {
  std::size_t max_elements = 50'000'000;
  unsigned workers = 1;
  bool ordered = false;  // treat the clique as a tuple rather than a set
};

namespace detail {

template <class Key, class Hash, class Image>
std::uint64_t bfs_orbit(const Key& seed, Image&& image, const OrbitOptions& opt,
                        std::vector<Key>* elements) {
  std::unordered_set<Key, Hash> seen;
  seen.reserve(std::min<std::size_t>(opt.max_elements, 1u << 20));
  seen.insert(seed);
  if (elements) elements->push_back(seed);
  std::vector<Key> frontier{seed};
  const unsigned workers = std::max(1u, opt.workers);

  while (!frontier.empty()) {
    // Images are computed per fixed chunk and inserted in chunk order, so the
    // visiting order does not depend on the worker count.
    std::vector<std::vector<Key>> imgs(frontier.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        imgs[i].reserve(8);
        for (std::size_t gen = 0; gen < 8; ++gen) imgs[i].push_back(image(gen, frontier[i]));
      }
    };
    if (workers == 1 || frontier.size() < 4096) {
      work(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + workers - 1) / workers;
      for (unsigned t = 0; t < workers; ++t) {
        const std::size_t b = t * chunk, e = std::min(frontier.size(), b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
      }
      for (auto& th : pool) th.join();
    }
    std::vector<Key> next;
    for (auto& v : imgs)
      for (auto& k : v)
        if (seen.insert(k).second) {
          if (seen.size() > opt.max_elements)
            throw BudgetExceeded("orbit exceeds " + std::to_string(opt.max_elements) + " elements");
          if (elements) elements->push_back(k);
          next.push_back(std::move(k));
        }
    frontier = std::move(next);
  }
  return seen.size();
}

struct StringHash {
  std::size_t operator()(const std::string& s) const noexcept { return std::hash<std::string>{}(s); }
};

}  // namespace detail

/// Size of the W(E8)-orbit of a clique (as a set, or as a tuple when
/// opt.ordered).  Throws BudgetExceeded past opt.max_elements.
inline std::uint64_t orbit_size(const WeightedGraph& g, std::span<const ClassId> k,
                                const OrbitOptions& opt = {}) {
  const auto& gens = g.generators();
  if (opt.ordered) {
    std::string seed(k.begin(), k.end());
    return detail::bfs_orbit<std::string, detail::StringHash>(
        seed,
        [&](std::size_t gen, const std::string& s) {
          std::string r(s);
          for (auto& ch : r) ch = static_cast<char>(gens[gen][static_cast<ClassId>(ch)]);
          return r;
        },
        opt, nullptr);
  }
  return detail::bfs_orbit<ClassSet, ClassSetHash>(
      to_set(k),
      [&](std::size_t gen, const ClassSet& s) {
        ClassSet r;
        s.for_each([&](int v) { r.set(gens[gen][static_cast<std::size_t>(v)]); });
        return r;
      },
      opt, nullptr);
}

/// The orbit itself, as sorted cliques in canonical order.
inline std::vector<Clique> orbit_elements(const WeightedGraph& g, std::span<const ClassId> k,
                                          const OrbitOptions& opt = {}) {
  const auto& gens = g.generators();
  std::vector<ClassSet> elems;
  detail::bfs_orbit<ClassSet, ClassSetHash>(
      to_set(k),
      [&](std::size_t gen, const ClassSet& s) {
        ClassSet r;
        s.for_each([&](int v) { r.set(gens[gen][static_cast<std::size_t>(v)]); });
        return r;
      },
      opt, &elems);
  std::vector<Clique> out;
  out.reserve(elems.size());
  for (const auto& s : elems) out.push_back(s.to_vector());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Group order by Schreier-Sims on the 240 points; an independent check of
// |W(E8)| from the generators alone.

namespace detail {

struct StabLevel {
  int base = 0;
  std::vector<Permutation> gens;
  std::vector<int> orbit;
  std::vector<int> transversal_index;  // -1 when not in orbit
  std::vector<Permutation> transversal;
};

inline Permutation compose(const Permutation& a, const Permutation& b) {  // a then b
  Permutation r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Permutation inverse(const Permutation& a) {
  Permutation r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[a[i]] = static_cast<ClassId>(i);
  return r;
}

inline Permutation identity_perm() {
  Permutation r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<ClassId>(i);
  return r;
}

inline void rebuild_orbit(StabLevel& lv) {
  lv.orbit.assign(1, lv.base);
  lv.transversal_index.assign(kNumClasses, -1);
  lv.transversal.assign(1, identity_perm());
  lv.transversal_index[static_cast<std::size_t>(lv.base)] = 0;
  for (std::size_t q = 0; q < lv.orbit.size(); ++q) {
    const int x = lv.orbit[q];
    for (const auto& s : lv.gens) {
      const int y = s[static_cast<std::size_t>(x)];
      if (lv.transversal_index[static_cast<std::size_t>(y)] < 0) {
        lv.transversal_index[static_cast<std::size_t>(y)] = static_cast<int>(lv.transversal.size());
        lv.transversal.push_back(compose(lv.transversal[static_cast<std::size_t>(
                                             lv.transversal_index[static_cast<std::size_t>(x)])],
                                         s));
        lv.orbit.push_back(y);
      }
    }
  }
}

}  // namespace detail

/// Order of the permutation group generated by gens (deterministic Schreier-Sims).
inline std::uint64_t group_order(std::span<const Permutation> gens) {
  using namespace detail;
  const Permutation id = identity_perm();
  std::vector<StabLevel> chain;

  auto new_level = [&](const Permutation& moving) {
    int b = 0;
    while (b < kNumClasses && moving[static_cast<std::size_t>(b)] == b) ++b;
    StabLevel lv;
    lv.base = b;
    chain.push_back(std::move(lv));
  };

  // Level i holds the strong generators fixing the first i base points.
  for (const auto& g : gens) {
    if (g == id) continue;
    bool moves_base = false;
    for (const auto& lv : chain) moves_base |= g[static_cast<std::size_t>(lv.base)] != lv.base;
    if (!moves_base) new_level(g);
    for (std::size_t l = 0; l < chain.size(); ++l) {
      chain[l].gens.push_back(g);
      if (g[static_cast<std::size_t>(chain[l].base)] != chain[l].base) break;
    }
  }
  for (auto& lv : chain) rebuild_orbit(lv);

  auto sift = [&](Permutation h, std::size_t from) {
    for (std::size_t l = from; l < chain.size(); ++l) {
      const int y = h[static_cast<std::size_t>(chain[l].base)];
      const int t = chain[l].transversal_index[static_cast<std::size_t>(y)];
      if (t < 0) return std::make_pair(l, h);
      h = compose(h, inverse(chain[l].transversal[static_cast<std::size_t>(t)]));
    }
    return std::make_pair(chain.size(), h);
  };

  std::size_t i = chain.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t oi = 0; oi < chain[i].orbit.size() && !restarted; ++oi) {
      const int x = chain[i].orbit[oi];
      for (std::size_t si = 0; si < chain[i].gens.size(); ++si) {
        const Permutation& s = chain[i].gens[si];
        const int y = s[static_cast<std::size_t>(x)];
        const Permutation h = compose(
            compose(chain[i].transversal[static_cast<std::size_t>(chain[i].transversal_index[static_cast<std::size_t>(x)])], s),
            inverse(chain[i].transversal[static_cast<std::size_t>(chain[i].transversal_index[static_cast<std::size_t>(y)])]));
        auto [j, r] = sift(h, i + 1);
        if (j == chain.size() && r == id) continue;
        if (j == chain.size()) new_level(r);
        for (std::size_t l = i + 1; l <= j; ++l) {
          chain[l].gens.push_back(r);
          rebuild_orbit(chain[l]);
        }
        i = j + 1;  // resume the descent at level j
        restarted = true;
        break;
      }
    }
  }
  std::uint64_t order = 1;
  for (const auto& lv : chain) order *= lv.orbit.size();
  return order;
}

}  // namespace dp1
