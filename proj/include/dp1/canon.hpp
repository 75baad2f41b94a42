#pragma once

// Canonical forms of graphs on at most 16 vertices.  A graph is split into
// connected components; each component is labelled by colour refinement
// followed by exhaustive individualization, keeping the lexicographically
// smallest adjacency code over all discrete leaves.  The graphs met here
// (weight-2 or weight-3 subgraphs of cliques) have tiny automorphism trees,
// so no pruning is attempted.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dp1/weylgraph.hpp"

namespace dp1 {

struct ComponentCode {
  int n = 0;
  std::vector<std::uint16_t> rows;  // adjacency rows under the canonical labelling

  auto operator<=>(const ComponentCode&) const = default;
};

namespace detail {

// Colours are ranks 0..k-1.  A vertex's signature is its colour followed by
// the number of neighbours of each colour (at most 15, so 4 bits each).
inline std::vector<int> refine(const SmallGraph& g, const std::vector<int>& verts, std::vector<int> color) {
  const std::size_t n = verts.size();
  using Sig = std::pair<std::uint64_t, std::uint64_t>;
  int ncolors = 0;
  {
    std::array<int, 16> distinct{};
    std::copy_n(color.begin(), n, distinct.begin());
    std::sort(distinct.begin(), distinct.begin() + static_cast<std::ptrdiff_t>(n));
    const auto dend = std::unique(distinct.begin(), distinct.begin() + static_cast<std::ptrdiff_t>(n));
    ncolors = static_cast<int>(dend - distinct.begin());
    for (auto& c : color) c = static_cast<int>(std::lower_bound(distinct.begin(), dend, c) - distinct.begin());
  }
  std::array<Sig, 16> sig{}, keys{};
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t counts = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (g.has_edge(verts[i], verts[j])) counts += std::uint64_t{1} << (4 * (15 - color[j]));
      sig[i] = {static_cast<std::uint64_t>(color[i]), counts};
    }
    std::copy_n(sig.begin(), n, keys.begin());
    std::sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(n));
    const auto kend = std::unique(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      color[i] = static_cast<int>(std::lower_bound(keys.begin(), kend, sig[i]) - keys.begin());
    const int nn = static_cast<int>(kend - keys.begin());
    if (nn == ncolors) return color;
    ncolors = nn;
  }
}

inline void search_leaves(const SmallGraph& g, const std::vector<int>& verts, const std::vector<int>& color,
                          ComponentCode& best, bool& have) {
  const int n = static_cast<int>(verts.size());
  // First colour class with more than one vertex.
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (int c : color) ++size[static_cast<std::size_t>(c)];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (size[static_cast<std::size_t>(c)] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    ComponentCode code;
    code.n = n;
    code.rows.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
          code.rows[static_cast<std::size_t>(color[static_cast<std::size_t>(i)])] |=
              static_cast<std::uint16_t>(1u << color[static_cast<std::size_t>(j)]);
    if (!have || code < best) {
      best = std::move(code);
      have = true;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] != target) continue;
    std::vector<int> c2(color.size());
    for (std::size_t i = 0; i < color.size(); ++i) c2[i] = 2 * color[i] + 1;
    c2[static_cast<std::size_t>(v)] = 2 * target;
    search_leaves(g, verts, refine(g, verts, std::move(c2)), best, have);
  }
}

}  // namespace detail

inline std::vector<std::vector<int>> components(const SmallGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> members{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t q = 0; q < members.size(); ++q)
      for (int t = 0; t < g.n; ++t)
        if (g.has_edge(members[q], t) && comp[static_cast<std::size_t>(t)] < 0) {
          comp[static_cast<std::size_t>(t)] = static_cast<int>(out.size());
          members.push_back(t);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline ComponentCode canonical_component(const SmallGraph& g, const std::vector<int>& verts) {
  ComponentCode best;
  bool have = false;
  detail::search_leaves(g, verts, detail::refine(g, verts, std::vector<int>(verts.size(), 0)), best, have);
  return best;
}

/// Isomorphism class of a graph: its components' canonical codes, sorted.
struct GraphCode {
  std::vector<ComponentCode> parts;
  auto operator<=>(const GraphCode&) const = default;

  int vertices() const {
    int n = 0;
    for (const auto& p : parts) n += p.n;
    return n;
  }
  int edges() const {
    int e = 0;
    for (const auto& p : parts)
      for (auto r : p.rows) e += std::popcount(r);
    return e / 2;
  }
};

inline GraphCode canonical_form(const SmallGraph& g) {
  GraphCode code;
  for (const auto& comp : components(g)) code.parts.push_back(canonical_component(g, comp));
  std::sort(code.parts.begin(), code.parts.end());
  return code;
}

/// Short description such as "K3+K3+P2+K1", for reports.
inline std::string describe(const GraphCode& code) {
  std::string s;
  for (const auto& p : code.parts) {
    if (!s.empty()) s += '+';
    int e = 0, maxdeg = 0;
    for (auto r : p.rows) {
      e += std::popcount(r);
      maxdeg = std::max(maxdeg, std::popcount(r));
    }
    e /= 2;
    const int n = p.n;
    if (n == 1) s += "K1";
    else if (e == n * (n - 1) / 2) s += "K" + std::to_string(n);
    else if (e == n && maxdeg == 2) s += "C" + std::to_string(n);
    else if (e == n - 1 && maxdeg == n - 1) s += "K1," + std::to_string(n - 1);
    else if (e == n - 1 && maxdeg == 2) s += "P" + std::to_string(n);
    else s += "G(" + std::to_string(n) + "," + std::to_string(e) + ")";
  }
  return s;
}

/// Hex text form of a code, stable across runs.
inline std::string to_string(const GraphCode& code) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (const auto& p : code.parts) {
    if (!s.empty()) s += '|';
    for (auto r : p.rows) {
      for (int k = 12; k >= 0; k -= 4) s += hex[(r >> k) & 15];
    }
  }
  return s;
}

inline SmallGraph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  SmallGraph g;
  g.n = n;
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace dp1
