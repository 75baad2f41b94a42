#pragma once

// Cliques of the weighted graph: enumeration, isomorphism types, the
// sub-orbit table, maximality facts, the weight-{1,3} orbit split and the
// blow-down obstruction.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dp1/canon.hpp"
#include "dp1/weylgraph.hpp"

namespace dp1 {

// ---------------------------------------------------------------------------
// Enumeration.

struct EnumerateOptions {
  unsigned workers = 1;
};

namespace detail {

template <class Visit>
void extend_cliques(const WeightedGraph& g, WeightSet ws, int remaining, Clique& current, const ClassSet& cand,
                    Visit& visit) {
  if (remaining == 0) {
    visit(current);
    return;
  }
  if (cand.count() < remaining) return;
  cand.for_each([&](int v) {
    const ClassSet next = cand & g.compatible(static_cast<ClassId>(v), ws) & ClassSet::above(v);
    current.push_back(static_cast<ClassId>(v));
    extend_cliques(g, ws, remaining - 1, current, next, visit);
    current.pop_back();
  });
}

inline ClassSet common_candidates(const WeightedGraph& g, WeightSet ws, std::span<const ClassId> required) {
  ClassSet cand = ClassSet::above(-1);
  for (auto r : required) {
    cand &= g.compatible(r, ws);
  }
  return cand;
}

}  // namespace detail

/// Calls visit(clique) for every clique of the given size with pairwise
/// weights in ws that contains `required`.  The visited clique lists the
/// required members first, then the free members in increasing order.
template <class Visit>
void for_each_clique(const WeightedGraph& g, WeightSet ws, int size, std::span<const ClassId> required,
                     Visit&& visit) {
  if (!is_clique(g, required, ws)) return;
  const int free = size - static_cast<int>(required.size());
  if (free < 0) return;
  Clique current(required.begin(), required.end());
  detail::extend_cliques(g, ws, free, current, detail::common_candidates(g, ws, required), visit);
}

/// All such cliques, each sorted, in canonical (lexicographic) order.
inline std::vector<Clique> enumerate_cliques(const WeightedGraph& g, WeightSet ws, int size,
                                             std::span<const ClassId> required, const EnumerateOptions& opt = {}) {
  if (!is_clique(g, required, ws)) throw std::invalid_argument("required members are not mutually compatible");
  const int free = size - static_cast<int>(required.size());
  if (free < 0) return {};
  if (free == 0) {
    Clique k(required.begin(), required.end());
    std::sort(k.begin(), k.end());
    return {k};
  }
  const ClassSet cand = detail::common_candidates(g, ws, required);
  const std::vector<ClassId> firsts = cand.to_vector();

  // One branch per choice of the smallest free member; branches are
  // independent and are concatenated in branch order before sorting.
  std::vector<std::vector<Clique>> branch(firsts.size());
  auto run_branch = [&](std::size_t b) {
    const int v = firsts[b];
    Clique current(required.begin(), required.end());
    current.push_back(static_cast<ClassId>(v));
    const ClassSet next = cand & g.compatible(static_cast<ClassId>(v), ws) & ClassSet::above(v);
    auto collect = [&](const Clique& k) {
      Clique s(k);
      std::sort(s.begin(), s.end());
      branch[b].push_back(std::move(s));
    };
    detail::extend_cliques(g, ws, free - 1, current, next, collect);
  };
  const unsigned workers = std::max(1u, opt.workers);
  if (workers == 1) {
    for (std::size_t b = 0; b < firsts.size(); ++b) run_branch(b);
  } else {
    std::atomic<std::size_t> next_branch{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t b; (b = next_branch.fetch_add(1)) < firsts.size();) run_branch(b);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<Clique> out;
  for (auto& v : branch)
    for (auto& k : v) out.push_back(std::move(k));
  std::sort(out.begin(), out.end());
  return out;
}

/// Bron-Kerbosch with pivoting over cliques containing `required`; calls
/// visit(clique) for each maximal one (required members first).
template <class Visit>
void for_each_maximal_clique(const WeightedGraph& g, WeightSet ws, std::span<const ClassId> required,
                             Visit&& visit) {
  if (!is_clique(g, required, ws)) return;
  Clique r(required.begin(), required.end());
  ClassSet p = detail::common_candidates(g, ws, required);
  for (auto q : required) p.reset(q);
  std::function<void(ClassSet, ClassSet)> bk = [&](ClassSet P, ClassSet X) {
    if (P.empty() && X.empty()) {
      visit(static_cast<const Clique&>(r));
      return;
    }
    int pivot = -1, best = -1;
    (P | X).for_each([&](int u) {
      const int c = (P & g.compatible(static_cast<ClassId>(u), ws)).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    ClassSet todo = P;
    g.compatible(static_cast<ClassId>(pivot), ws).for_each([&](int u) { todo.reset(u); });
    todo.for_each([&](int v) {
      const auto& nv = g.compatible(static_cast<ClassId>(v), ws);
      r.push_back(static_cast<ClassId>(v));
      bk(P & nv, X & nv);
      r.pop_back();
      P.reset(v);
      X.set(v);
    });
  };
  bk(p, ClassSet{});
}

/// Size of a largest clique with weights in ws that contains `required`.
inline int max_clique_size(const WeightedGraph& g, WeightSet ws, std::span<const ClassId> required) {
  int best = 0;
  for_each_maximal_clique(g, ws, required, [&](const Clique& k) { best = std::max(best, static_cast<int>(k.size())); });
  return best;
}

inline bool is_maximal(const WeightedGraph& g, WeightSet ws, std::span<const ClassId> k) {
  ClassSet cand = detail::common_candidates(g, ws, k);
  for (auto v : k) cand.reset(v);
  return cand.empty();
}

// ---------------------------------------------------------------------------
// Isomorphism types.

struct IsoType {
  WeightSet regime = 0;  // {1,2} or {1,3}
  int size = 0;
  GraphCode code;        // weight-2 (resp. weight-3) subgraph

  auto operator<=>(const IsoType&) const = default;
};

inline std::string describe(const IsoType& t) {
  return "weights={" + to_string(t.regime) + "} size=" + std::to_string(t.size) + " graph=" + describe(t.code);
}

/// Isomorphism type of a clique with weights in {1,2} or {1,3}.  A clique
/// whose edges all have weight 1 belongs to both regimes and is reported
/// under {1,2}.
inline IsoType classify(const WeightedGraph& g, std::span<const ClassId> k) {
  if (k.size() > 16) throw std::invalid_argument("classify supports cliques of at most 16 classes");
  bool has2 = false, has3 = false;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      const int w = g.weight(k[i], k[j]);
      if (w == 2) has2 = true;
      else if (w == 3) has3 = true;
      else if (w != 1) throw std::invalid_argument("clique has a pair of weight " + std::to_string(w));
    }
  if (has2 && has3) throw std::invalid_argument("clique mixes weights 2 and 3");
  IsoType t;
  t.size = static_cast<int>(k.size());
  t.regime = has3 ? weight_set({1, 3}) : weight_set({1, 2});
  t.code = canonical_form(weight_subgraph(g, k, has3 ? 3 : 2));
  return t;
}

/// Weight-2 graphs of the eight size-10 types, vertices 0..9.
inline SmallGraph reference_graph(int type) {
  switch (type) {
    // A vertex of degree 3 with three legs of length 2, plus a triangle.
    case 1: return make_graph(10, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {7, 8}, {8, 9}, {7, 9}});
    // Measured from the enumeration: a 4-cycle plus two adjacent centres
    // carrying two leaves each.
    case 2: return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {4, 6}, {4, 7}, {5, 8}, {5, 9}});
    case 3: return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 7}, {7, 8}, {6, 8}});
    case 4: return make_graph(10, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {8, 9}});
    case 5: return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
    case 6: return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    case 7: return make_graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 6}, {5, 7}, {5, 8}, {5, 9}});
    case 8: return make_graph(10, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {6, 8}});
    default: throw std::invalid_argument("type must be 1..8");
  }
}

inline IsoType reference_type(int type) {
  IsoType t;
  t.regime = weight_set({1, 2});
  t.size = 10;
  t.code = canonical_form(reference_graph(type));
  return t;
}

/// 1..8 for the size-10 weight-{1,2} types, 0 otherwise.
inline int type_number(const IsoType& t) {
  static const std::array<IsoType, 8> refs = [] {
    std::array<IsoType, 8> r;
    for (int i = 0; i < 8; ++i) r[static_cast<std::size_t>(i)] = reference_type(i + 1);
    return r;
  }();
  for (int i = 0; i < 8; ++i)
    if (refs[static_cast<std::size_t>(i)] == t) return i + 1;
  return 0;
}

/// The twelve-vertex weight-2 graph of the maximal clique: four triangles.
inline GraphCode four_triangles() {
  return canonical_form(make_graph(
      12, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {6, 8}, {9, 10}, {10, 11}, {9, 11}}));
}

// ---------------------------------------------------------------------------
// Sub-orbit table.

/// The fixed weight-1 pair {l12, l34} used for sub-orbits.
inline std::array<ClassId, 2> fixed_pair() { return {require_index(line(1, 2)), require_index(line(3, 4))}; }

inline constexpr std::uint64_t kUnorderedWeight1Pairs = 240 * 126 / 2;

struct SuborbitRow {
  int type = 0;
  std::uint64_t suborbit = 0;
  int w1_edges = 0;
  std::uint64_t orbit = 0;
  std::uint64_t stabilizer = 0;
  std::uint64_t maximal = 0;  // members of the sub-orbit with no extension
  Clique sample;              // first member in canonical order
};

struct SuborbitTable {
  std::uint64_t total = 0;
  int unknown_types = 0;  // size-10 cliques matching no reference graph
  std::vector<SuborbitRow> rows;
};

inline SuborbitTable suborbit_table(const WeightedGraph& g, const std::vector<Clique>& cliques) {
  SuborbitTable t;
  std::array<SuborbitRow, 9> acc{};
  for (const auto& k : cliques) {
    const int ty = type_number(classify(g, k));
    auto& r = acc[static_cast<std::size_t>(ty)];
    if (r.suborbit == 0) r.sample = k;
    ++r.suborbit;
    r.maximal += is_maximal(g, weight_set({1, 2}), k);
  }
  t.total = cliques.size();
  t.unknown_types = static_cast<int>(acc[0].suborbit);
  for (int ty = 1; ty <= 8; ++ty) {
    auto r = acc[static_cast<std::size_t>(ty)];
    r.type = ty;
    if (r.suborbit) {
      r.w1_edges = count_weight(g, r.sample, 1);
      // Each orbit member contains w1_edges weight-1 pairs, and each of the
      // 15120 pairs lies in `suborbit` members.
      if ((kUnorderedWeight1Pairs * r.suborbit) % static_cast<std::uint64_t>(r.w1_edges) != 0)
        throw std::logic_error("double counting does not divide for type " + std::to_string(ty));
      r.orbit = kUnorderedWeight1Pairs * r.suborbit / static_cast<std::uint64_t>(r.w1_edges);
      r.stabilizer = weyl_order() % r.orbit == 0 ? weyl_order() / r.orbit : 0;
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

inline SuborbitTable suborbit_table(const WeightedGraph& g, const EnumerateOptions& opt = {}) {
  const auto pair = fixed_pair();
  return suborbit_table(g, enumerate_cliques(g, weight_set({1, 2}), 10, pair, opt));
}

// ---------------------------------------------------------------------------
// Maximality.

struct MaximalityReport {
  std::map<int, std::uint64_t> maximal12;  // sizes of maximal {1,2}-cliques through the fixed pair
  std::uint64_t size12_total = 0;
  std::uint64_t size12_four_triangles = 0;
  int max_weight2_only = 0;
  std::map<int, std::uint64_t> maximal13;  // sizes of maximal {1,3}-cliques through the fixed pair
  std::uint64_t size16_partner_structured = 0;

  int max12() const { return maximal12.empty() ? 0 : maximal12.rbegin()->first; }
  int max13() const { return maximal13.empty() ? 0 : maximal13.rbegin()->first; }
  bool no_maximal13_between(int lo, int hi) const {
    for (auto [s, n] : maximal13)
      if (s >= lo && s <= hi && n) return false;
    return true;
  }
};

/// Every clique of size >= 4 contains a weight-1 pair (weight-2-only
/// cliques have at most 3 members, and weight-3 pairs are partners), and W8
/// is transitive on weight-1 pairs, so cliques through the fixed pair
/// represent all of them.
inline MaximalityReport maximality_facts(const WeightedGraph& g) {
  MaximalityReport rep;
  const auto pair = fixed_pair();
  const GraphCode t4 = four_triangles();
  for_each_maximal_clique(g, weight_set({1, 2}), pair, [&](const Clique& k) {
    ++rep.maximal12[static_cast<int>(k.size())];
    if (k.size() == 12) {
      ++rep.size12_total;
      rep.size12_four_triangles += canonical_form(weight_subgraph(g, k, 2)) == t4;
    }
  });
  // W8 is transitive on classes: fix E1.
  const ClassId e1 = require_index(blowup(1));
  rep.max_weight2_only = max_clique_size(g, weight_set({2}), std::array<ClassId, 1>{e1});
  for_each_maximal_clique(g, weight_set({1, 3}), pair, [&](const Clique& k) {
    ++rep.maximal13[static_cast<int>(k.size())];
    if (k.size() == 16) {
      bool ok = count_weight(g, k, 3) == 8;
      for (auto v : k) ok = ok && std::find(k.begin(), k.end(), g.partner(v)) != k.end();
      rep.size16_partner_structured += ok;
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Weight-{1,3} cliques.

/// The 120 partner pairs, as (smaller, larger) class indices.
inline std::vector<std::pair<ClassId, ClassId>> partner_pairs(const WeightedGraph& g) {
  std::vector<std::pair<ClassId, ClassId>> out;
  for (int i = 0; i < kNumClasses; ++i) {
    const ClassId j = g.partner(static_cast<ClassId>(i));
    if (i < j) out.emplace_back(static_cast<ClassId>(i), j);
  }
  return out;
}

/// All weight-{1,3} cliques of size 16, each the union of 8 partner pairs
/// meeting each other with multiplicity 1.
inline std::vector<Clique> cliques16_13(const WeightedGraph& g) {
  const auto pairs = partner_pairs(g);
  const int n = static_cast<int>(pairs.size());
  std::vector<ClassSet> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto [a, b] = pairs[static_cast<std::size_t>(i)];
      const auto [c, d] = pairs[static_cast<std::size_t>(j)];
      if (g.weight(a, c) == 1 && g.weight(a, d) == 1 && g.weight(b, c) == 1 && g.weight(b, d) == 1)
        adj[static_cast<std::size_t>(i)].set(j);
    }
  std::vector<Clique> out;
  std::vector<int> cur;
  std::function<void(ClassSet)> rec = [&](ClassSet cand) {
    if (cur.size() == 8) {
      Clique k;
      for (int p : cur) {
        k.push_back(pairs[static_cast<std::size_t>(p)].first);
        k.push_back(pairs[static_cast<std::size_t>(p)].second);
      }
      std::sort(k.begin(), k.end());
      out.push_back(std::move(k));
      return;
    }
    if (static_cast<int>(cur.size()) + cand.count() < 8) return;
    cand.for_each([&](int v) {
      cur.push_back(v);
      rec(cand & adj[static_cast<std::size_t>(v)] & ClassSet::above(v));
      cur.pop_back();
    });
  };
  ClassSet all;
  for (int i = 0; i < n; ++i) all.set(i);
  rec(all);
  std::sort(out.begin(), out.end());
  return out;
}

struct Orbit13 {
  int pairs = 0;              // partner pairs inside the clique
  std::uint64_t size = 0;     // orbit size
  Clique representative;      // smallest member in canonical order
};

struct Decomposition13 {
  bool complete = false;
  std::uint64_t frames = 0;                    // 16-cliques
  std::map<int, std::uint64_t> cliques_by_pairs;  // distinct size-10 cliques per pair count
  std::vector<Orbit13> orbits;
  std::string note;
};

struct Decomposition13Options {
  std::size_t max_keys = 40'000'000;  // distinct 10-cliques held at once (10 bytes each)
  double budget_seconds = 0;          // 0 = unlimited
};

/// Splits the size-10 weight-{1,3} cliques into W8-orbits.  Every such
/// clique lies in a 16-clique, so each is a 10-subset of one; the subsets
/// are grouped by their number of partner pairs, deduplicated, and closed
/// under the generators with a visited bitmap.
inline Decomposition13 orbit_decomposition_13(const WeightedGraph& g, const Decomposition13Options& opt = {}) {
  using Key = std::array<ClassId, 10>;
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (opt.budget_seconds <= 0) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > opt.budget_seconds;
  };
  Decomposition13 res;
  const auto frames = cliques16_13(g);
  res.frames = frames.size();
  const auto& gens = g.generators();

  for (int k = 2; k <= 5; ++k) {
    // C(8,k) * C(8-k, 10-2k) * 2^(10-2k) subsets per frame.
    auto binom = [](int n, int r) {
      std::uint64_t b = 1;
      for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
      return b;
    };
    const std::uint64_t per_frame = binom(8, k) * binom(8 - k, 10 - 2 * k) * (1ull << (10 - 2 * k));
    if (per_frame * frames.size() > opt.max_keys) {
      res.note = "budget: " + std::to_string(per_frame * frames.size()) + " subsets for " + std::to_string(k) +
                 " pairs exceed max_keys";
      return res;
    }
    std::vector<Key> keys;
    keys.reserve(per_frame * frames.size());
    for (const auto& f : frames) {
      // Pairs of this frame in order of their smaller member.
      std::vector<std::pair<ClassId, ClassId>> fp;
      for (auto v : f)
        if (v < g.partner(v)) fp.emplace_back(v, g.partner(v));
      for (unsigned full = 0; full < 256; ++full) {
        if (std::popcount(full) != k) continue;
        const unsigned rest = 255u & ~full;
        for (unsigned half = rest;; half = (half - 1) & rest) {
          if (std::popcount(half) == 10 - 2 * k) {
            const int h = 10 - 2 * k;
            for (unsigned side = 0; side < (1u << h); ++side) {
              Key key{};
              int n = 0, hi = 0;
              for (int p = 0; p < 8; ++p) {
                if (full & (1u << p)) {
                  key[static_cast<std::size_t>(n++)] = fp[static_cast<std::size_t>(p)].first;
                  key[static_cast<std::size_t>(n++)] = fp[static_cast<std::size_t>(p)].second;
                } else if (half & (1u << p)) {
                  key[static_cast<std::size_t>(n++)] = (side >> hi) & 1u ? fp[static_cast<std::size_t>(p)].second
                                                                          : fp[static_cast<std::size_t>(p)].first;
                  ++hi;
                }
              }
              std::sort(key.begin(), key.end());
              keys.push_back(key);
            }
          }
          if (half == 0) break;
        }
      }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    keys.shrink_to_fit();
    res.cliques_by_pairs[k] = keys.size();

    std::vector<bool> seen(keys.size(), false);
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < keys.size(); ++s) {
      if (seen[s]) continue;
      if (out_of_time()) {
        res.note = "time budget exceeded during orbits with " + std::to_string(k) + " pairs";
        return res;
      }
      Orbit13 orb;
      orb.pairs = k;
      orb.representative.assign(keys[s].begin(), keys[s].end());
      seen[s] = true;
      queue.assign(1, s);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const Key cur = keys[queue[q]];
        for (const auto& gen : gens) {
          Key img;
          for (std::size_t i = 0; i < 10; ++i) img[i] = gen[cur[i]];
          std::sort(img.begin(), img.end());
          const auto it = std::lower_bound(keys.begin(), keys.end(), img);
          if (it == keys.end() || *it != img) throw std::logic_error("generator image left the clique set");
          const auto idx = static_cast<std::size_t>(it - keys.begin());
          if (!seen[idx]) {
            seen[idx] = true;
            queue.push_back(idx);
          }
        }
      }
      orb.size = queue.size();
      res.orbits.push_back(std::move(orb));
    }
  }
  res.complete = true;
  return res;
}

// ---------------------------------------------------------------------------
// Blow-down obstruction and representatives.

struct BlowdownWitness {
  ClassId disjoint_class = 0;
  std::array<ClassId, 4> members{};
};

/// A class disjoint from four members of k simultaneously, if any.
inline std::optional<BlowdownWitness> blowdown_obstruction(const WeightedGraph& g, std::span<const ClassId> k) {
  for (int c = 0; c < kNumClasses; ++c) {
    BlowdownWitness w;
    w.disjoint_class = static_cast<ClassId>(c);
    int n = 0;
    for (auto v : k)
      if (g.weight(static_cast<ClassId>(c), v) == 0) {
        w.members[static_cast<std::size_t>(n++)] = v;
        if (n == 4) return w;
      }
  }
  return std::nullopt;
}

/// Ten classes forming a type-4 clique with no class disjoint from four of them.
inline Clique blowdown_set() {
  const std::array<LatticeVector, 10> s{{
      {{1, 0, 0, 0, 0, 0, 0, 1, 1}},
      {{1, 0, 0, 1, 1, 0, 0, 0, 0}},
      {{1, 1, 1, 0, 0, 0, 0, 0, 0}},
      {{1, 0, 0, 0, 0, 1, 1, 0, 0}},
      {{4, 2, 1, 2, 1, 2, 1, 1, 1}},
      {{4, 1, 2, 2, 1, 1, 1, 1, 2}},
      {{4, 1, 1, 2, 1, 1, 2, 2, 1}},
      {{4, 1, 2, 1, 2, 1, 2, 1, 1}},
      {{4, 2, 1, 1, 2, 1, 1, 2, 1}},
      {{4, 2, 1, 1, 1, 1, 2, 1, 2}},
  }};
  Clique k;
  for (const auto& v : s) k.push_back(require_index(v));
  std::sort(k.begin(), k.end());
  return k;
}

/// First clique (in the given order) containing all of must_contain and no
/// member rejected by exclude.
inline std::optional<Clique> find_representative(const std::vector<Clique>& db, std::span<const ClassId> must_contain,
                                                 const std::function<bool(ClassId)>& exclude = {}) {
  for (const auto& k : db) {
    bool ok = true;
    for (auto m : must_contain) ok = ok && std::binary_search(k.begin(), k.end(), m);
    if (ok && exclude)
      for (auto v : k) ok = ok && !exclude(v);
    if (ok) return k;
  }
  return std::nullopt;
}

inline Clique four_lines() {
  Clique k{require_index(line(1, 2)), require_index(line(3, 4)), require_index(line(5, 6)), require_index(line(7, 8))};
  std::sort(k.begin(), k.end());
  return k;
}

inline bool is_blowup_class(ClassId v) { return all_classes()[v].degree() == 0; }

/// Lines l_ij other than the fixed l12 and l34.
inline bool is_other_line(ClassId v) {
  const auto& c = all_classes()[v];
  return c.degree() == 1 && c != line(1, 2) && c != line(3, 4);
}

/// The clique-8 representative used for the F_19 search.
inline Clique pinned_type8() {
  Clique k{require_index(line(1, 2)),       require_index(line(3, 4)),       require_index(line(5, 6)),
           require_index(line(7, 8)),       require_index(quartic(1, 3, 5)), require_index(quartic(2, 3, 8)),
           require_index(quartic(2, 4, 6)), require_index(quartic(1, 4, 7)), require_index(quartic(2, 5, 7)),
           require_index(quartic(1, 6, 8))};
  std::sort(k.begin(), k.end());
  return k;
}

/// One representative per type containing the four lines l12, l34, l56, l78
/// and no blow-up class; type 8 uses the pinned representative.
inline std::array<Clique, 8> four_line_representatives(const WeightedGraph& g, const EnumerateOptions& opt = {}) {
  const auto fl = four_lines();
  const auto db = enumerate_cliques(g, weight_set({1, 2}), 10, fl, opt);
  std::array<Clique, 8> reps;
  for (const auto& k : db) {
    bool has_e = false;
    for (auto v : k) has_e |= is_blowup_class(v);
    if (has_e) continue;
    const int ty = type_number(classify(g, k));
    if (ty && reps[static_cast<std::size_t>(ty - 1)].empty()) reps[static_cast<std::size_t>(ty - 1)] = k;
  }
  reps[7] = pinned_type8();
  return reps;
}

}  // namespace dp1
