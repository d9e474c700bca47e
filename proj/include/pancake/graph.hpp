#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pancake/common.hpp"
#include "pancake/permutation.hpp"

namespace pancake {

/// Pancake graph P_n: vertices are the lexicographic ranks of S_n in
/// one-line notation, and vertex v is adjacent to v flipped by every
/// prefix reversal r_{1j}, 2 <= j <= n. Immutable after construction.
///
/// Adjacency is precomputed as a flat table of n!*(n-1) 32-bit ids up to
/// n = kTableN; for larger n neighbors are derived on demand from
/// rank/unrank. Vertex ids stay 32-bit, which caps the degree at n = 12.
class PancakeGraph {
 public:
  static constexpr int kTableN = 8;
  static constexpr int kMaxN = 12;

  explicit PancakeGraph(int n) : n_(n) {
    if (n < 2) throw std::domain_error("PancakeGraph: n must be >= 2");
    if (n > kMaxN)
      throw scale_error("PancakeGraph: n = " + std::to_string(n) +
                        " exceeds the supported bound n <= " +
                        std::to_string(kMaxN) + " (32-bit vertex ids)");
    vertex_count_ = static_cast<vertex_t>(factorial(static_cast<unsigned>(n)));
    if (n <= kTableN) build_tables();
  }

  int n() const { return n_; }
  vertex_t vertex_count() const { return vertex_count_; }
  int degree() const { return n_ - 1; }
  std::uint64_t edge_count() const {
    return static_cast<std::uint64_t>(vertex_count_) *
           static_cast<std::uint64_t>(n_ - 1) / 2;
  }
  bool has_adjacency_table() const { return !adjacency_.empty(); }

  /// Neighbor of v via r_{1j}, 2 <= j <= n.
  vertex_t neighbor(vertex_t v, int j) const {
    if (!adjacency_.empty())
      return adjacency_[static_cast<std::size_t>(v) *
                            static_cast<std::size_t>(n_ - 1) +
                        static_cast<std::size_t>(j - 2)];
    return flip_rank(v, j);
  }

  /// All n-1 neighbors of v; slot j-2 holds the neighbor via r_{1j}.
  /// Only available in table mode (n <= kTableN).
  std::span<const vertex_t> neighbors(vertex_t v) const {
    if (adjacency_.empty())
      throw std::logic_error("neighbors(): no adjacency table at this n");
    return {adjacency_.data() +
                static_cast<std::size_t>(v) * static_cast<std::size_t>(n_ - 1),
            static_cast<std::size_t>(n_ - 1)};
  }

  bool adjacent(vertex_t u, vertex_t v) const {
    for (int j = 2; j <= n_; ++j)
      if (neighbor(u, j) == v) return true;
    return false;
  }

  Permutation label(vertex_t v) const { return perm_unrank(v, n_); }
  vertex_t id_of(const Permutation& p) const {
    if (p.size() != n_) throw std::domain_error("id_of: degree mismatch");
    return static_cast<vertex_t>(perm_rank(p));
  }
  vertex_t identity_vertex() const { return 0; }

  /// First symbol of v's one-line form (the block index of B^(i)).
  int first_symbol(vertex_t v) const {
    if (!first_.empty()) return first_[v];
    // lexicographic rank encodes the leading symbol directly
    return static_cast<int>(v / factorial(static_cast<unsigned>(n_ - 1))) + 1;
  }

  /// Last symbol of v's one-line form (the block index of B_(j)).
  int last_symbol(vertex_t v) const {
    if (!last_.empty()) return last_[v];
    return label(v).image(n_);
  }

 private:
  void build_tables() {
    const std::size_t nv = vertex_count_;
    const std::size_t deg = static_cast<std::size_t>(n_ - 1);
    adjacency_.resize(nv * deg);
    first_.resize(nv);
    last_.resize(nv);
    std::vector<std::uint8_t> form(static_cast<std::size_t>(n_));
    for (vertex_t v = 0; v < vertex_count_; ++v) {
      const Permutation p = perm_unrank(v, n_);
      std::copy(p.one_line().begin(), p.one_line().end(), form.begin());
      first_[v] = form.front();
      last_[v] = form.back();
      for (int j = 2; j <= n_; ++j) {
        std::reverse(form.begin(), form.begin() + j);
        adjacency_[v * deg + static_cast<std::size_t>(j - 2)] =
            static_cast<vertex_t>(perm_rank(Permutation(form)));
        std::reverse(form.begin(), form.begin() + j);  // restore
      }
    }
  }

  vertex_t flip_rank(vertex_t v, int j) const {
    if (j < 2 || j > n_) throw std::domain_error("neighbor: j out of range");
    Permutation p = perm_unrank(v, n_);
    std::vector<std::uint8_t> e(p.one_line());
    std::reverse(e.begin(), e.begin() + j);
    return static_cast<vertex_t>(perm_rank(Permutation(std::move(e))));
  }

  int n_;
  vertex_t vertex_count_;
  std::vector<vertex_t> adjacency_;
  std::vector<std::uint8_t> first_, last_;
};

inline PancakeGraph build_pancake(int n) { return PancakeGraph(n); }

// ---------------------------------------------------------------------------
// Vertex-set neighborhoods, per N(F) = {x in V\F : exists y in F, xy in E}.
// ---------------------------------------------------------------------------

inline std::vector<char> membership_mask(const PancakeGraph& g,
                                         const std::vector<vertex_t>& set) {
  std::vector<char> in(g.vertex_count(), 0);
  for (vertex_t v : set) {
    if (v >= g.vertex_count()) throw std::domain_error("vertex id out of range");
    in[v] = 1;
  }
  return in;
}

/// Open neighborhood N(F), sorted ascending. Disjoint from F by definition.
inline std::vector<vertex_t> neighborhood(const PancakeGraph& g,
                                          const std::vector<vertex_t>& F) {
  const auto in = membership_mask(g, F);
  std::vector<char> out(g.vertex_count(), 0);
  for (vertex_t v : F)
    for (int j = 2; j <= g.n(); ++j) {
      const vertex_t w = g.neighbor(v, j);
      if (!in[w]) out[w] = 1;
    }
  std::vector<vertex_t> result;
  for (vertex_t v = 0; v < g.vertex_count(); ++v)
    if (out[v]) result.push_back(v);
  return result;
}

/// Closed neighborhood C(F) = F union N(F), sorted ascending.
inline std::vector<vertex_t> closed_neighborhood(const PancakeGraph& g,
                                                 const std::vector<vertex_t>& F) {
  auto in = membership_mask(g, F);
  for (vertex_t v : F)
    for (int j = 2; j <= g.n(); ++j) in[g.neighbor(v, j)] = 1;
  std::vector<vertex_t> result;
  for (vertex_t v = 0; v < g.vertex_count(); ++v)
    if (in[v]) result.push_back(v);
  return result;
}

/// Remainder R(F) = V \ (F union N(F)), sorted ascending.
inline std::vector<vertex_t> remainder(const PancakeGraph& g,
                                       const std::vector<vertex_t>& F) {
  auto in = membership_mask(g, F);
  for (vertex_t v : F)
    for (int j = 2; j <= g.n(); ++j) in[g.neighbor(v, j)] = 1;
  std::vector<vertex_t> result;
  for (vertex_t v = 0; v < g.vertex_count(); ++v)
    if (!in[v]) result.push_back(v);
  return result;
}

// ---------------------------------------------------------------------------
// Traversals
// ---------------------------------------------------------------------------

/// BFS distances from root over V minus `removed`; -1 marks unreachable
/// (and removed) vertices.
inline std::vector<std::int32_t> bfs_distances(
    const PancakeGraph& g, vertex_t root,
    const std::vector<char>* removed = nullptr) {
  std::vector<std::int32_t> dist(g.vertex_count(), -1);
  if (removed && (*removed)[root]) return dist;
  std::vector<vertex_t> frontier{root}, next;
  dist[root] = 0;
  std::int32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (vertex_t u : frontier)
      for (int j = 2; j <= g.n(); ++j) {
        const vertex_t w = g.neighbor(u, j);
        if (dist[w] >= 0 || (removed && (*removed)[w])) continue;
        dist[w] = d;
        next.push_back(w);
      }
    frontier.swap(next);
  }
  return dist;
}

/// Connected components of V minus `removed`, each sorted ascending,
/// listed in order of smallest member.
inline std::vector<std::vector<vertex_t>> connected_components(
    const PancakeGraph& g, const std::vector<vertex_t>& removed = {}) {
  const auto gone = membership_mask(g, removed);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::vector<vertex_t>> components;
  std::vector<vertex_t> stack;
  for (vertex_t root = 0; root < g.vertex_count(); ++root) {
    if (gone[root] || seen[root]) continue;
    std::vector<vertex_t> comp;
    stack.assign(1, root);
    seen[root] = 1;
    while (!stack.empty()) {
      const vertex_t u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int j = 2; j <= g.n(); ++j) {
        const vertex_t w = g.neighbor(u, j);
        if (gone[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

inline bool is_connected_without(const PancakeGraph& g,
                                 const std::vector<vertex_t>& removed) {
  return connected_components(g, removed).size() == 1;
}

/// Length of the shortest cycle through `root` (exact for the graph girth
/// when some shortest cycle passes through root). Returns 0 if no cycle.
inline int girth_from(const PancakeGraph& g, vertex_t root) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<std::int32_t> dist(g.vertex_count(), -1);
  std::vector<vertex_t> parent(g.vertex_count(), 0);
  std::deque<vertex_t> queue{root};
  dist[root] = 0;
  parent[root] = root;
  int best = kInf;
  while (!queue.empty()) {
    const vertex_t u = queue.front();
    queue.pop_front();
    if (2 * dist[u] + 1 > best) break;  // no shorter closed walk possible
    for (int j = 2; j <= g.n(); ++j) {
      const vertex_t w = g.neighbor(u, j);
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u]) {
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  return best == kInf ? 0 : best;
}

/// Girth of P_n. Rooting the cycle search at the identity is exact:
/// Cayley graphs are vertex-transitive, so some shortest cycle passes
/// through every vertex. Returns 0 (acyclic) only for n = 2.
inline int girth(const PancakeGraph& g) {
  return girth_from(g, g.identity_vertex());
}

/// Diameter of P_n: the identity's eccentricity, which equals the diameter
/// by vertex-transitivity.
inline int diameter(const PancakeGraph& g) {
  const auto dist = bfs_distances(g, g.identity_vertex());
  std::int32_t ecc = 0;
  for (std::int32_t d : dist) {
    if (d < 0) throw std::logic_error("diameter: graph not connected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

// ---------------------------------------------------------------------------
// Block decomposition of Lemma-style structure checks
// ---------------------------------------------------------------------------

enum class BlockKind {
  first_symbol,  // B^(i)  = {pi : pi(1) = i}
  last_symbol,   // B_(j)  = {pi : pi(n) = j}
  both,          // B^(i)_(j) = B^(i) intersect B_(j)
  suffix_pair,   // {pi : pi(n-1) = i, pi(n) = k}
};

struct Block {
  BlockKind kind;
  int i = 0;  // first symbol (first_symbol/both) or pi(n-1) (suffix_pair)
  int j = 0;  // last symbol (last_symbol/both) or pi(n) (suffix_pair)
  std::vector<vertex_t> members;  // sorted ascending
};

inline Block block(const PancakeGraph& g, BlockKind kind, int i, int j = 0) {
  const int n = g.n();
  auto check_symbol = [n](int s) {
    if (s < 1 || s > n) throw std::domain_error("block: symbol out of range");
  };
  Block b{kind, i, j, {}};
  switch (kind) {
    case BlockKind::first_symbol:
      check_symbol(i);
      for (vertex_t v = 0; v < g.vertex_count(); ++v)
        if (g.first_symbol(v) == i) b.members.push_back(v);
      break;
    case BlockKind::last_symbol:
      check_symbol(i);
      b.j = i;
      b.i = 0;
      for (vertex_t v = 0; v < g.vertex_count(); ++v)
        if (g.last_symbol(v) == i) b.members.push_back(v);
      break;
    case BlockKind::both:
      check_symbol(i);
      check_symbol(j);
      // empty when i == j: no permutation has pi(1) = pi(n)
      for (vertex_t v = 0; v < g.vertex_count(); ++v)
        if (g.first_symbol(v) == i && g.last_symbol(v) == j)
          b.members.push_back(v);
      break;
    case BlockKind::suffix_pair: {
      check_symbol(i);
      check_symbol(j);
      for (vertex_t v = 0; v < g.vertex_count(); ++v) {
        const Permutation p = g.label(v);
        if (p.image(n - 1) == i && p.image(n) == j) b.members.push_back(v);
      }
      break;
    }
  }
  return b;
}

inline std::vector<vertex_t> block_first(const PancakeGraph& g, int i) {
  return block(g, BlockKind::first_symbol, i).members;
}
inline std::vector<vertex_t> block_last(const PancakeGraph& g, int j) {
  return block(g, BlockKind::last_symbol, j).members;
}
inline std::vector<vertex_t> block_both(const PancakeGraph& g, int i, int j) {
  return block(g, BlockKind::both, i, j).members;
}
inline std::vector<vertex_t> block_suffix_pair(const PancakeGraph& g, int i,
                                               int k) {
  return block(g, BlockKind::suffix_pair, i, k).members;
}

/// Subgraph induced by a vertex set, keeping a bidirectional local/global
/// id map instead of relabeling silently.
struct InducedSubgraph {
  std::vector<vertex_t> global_of_local;        // sorted ascending
  std::vector<std::vector<vertex_t>> adjacency;  // local ids, sorted

  std::size_t size() const { return global_of_local.size(); }

  vertex_t global_id(vertex_t local) const { return global_of_local[local]; }

  std::optional<vertex_t> local_id(vertex_t global) const {
    auto it = std::lower_bound(global_of_local.begin(), global_of_local.end(),
                               global);
    if (it == global_of_local.end() || *it != global) return std::nullopt;
    return static_cast<vertex_t>(it - global_of_local.begin());
  }

  std::uint64_t edge_count() const {
    std::uint64_t twice = 0;
    for (const auto& row : adjacency) twice += row.size();
    return twice / 2;
  }

  bool adjacent(vertex_t a, vertex_t b) const {
    const auto& row = adjacency[a];
    return std::binary_search(row.begin(), row.end(), b);
  }
};

inline InducedSubgraph induced_subgraph(const PancakeGraph& g,
                                        std::vector<vertex_t> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  InducedSubgraph sub;
  sub.global_of_local = std::move(S);
  sub.adjacency.resize(sub.global_of_local.size());
  for (vertex_t a = 0; a < sub.global_of_local.size(); ++a) {
    for (int j = 2; j <= g.n(); ++j) {
      const vertex_t w = g.neighbor(sub.global_of_local[a], j);
      if (auto b = sub.local_id(w)) sub.adjacency[a].push_back(*b);
    }
    std::sort(sub.adjacency[a].begin(), sub.adjacency[a].end());
  }
  return sub;
}

// ---------------------------------------------------------------------------
// Exports
// ---------------------------------------------------------------------------

/// Sorted edge list (u < v, ascending).
inline std::vector<std::pair<vertex_t, vertex_t>> edge_list(
    const PancakeGraph& g) {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(g.edge_count());
  for (vertex_t v = 0; v < g.vertex_count(); ++v)
    for (int j = 2; j <= g.n(); ++j) {
      const vertex_t w = g.neighbor(v, j);
      if (v < w) edges.emplace_back(v, w);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// JSON export: {"n":, "vertices": [one-line forms by id], "edges": [[u,v]]}.
inline nlohmann::json graph_to_json(const PancakeGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  auto vertices = nlohmann::json::array();
  for (vertex_t v = 0; v < g.vertex_count(); ++v)
    vertices.push_back(g.label(v).as_ints());
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : edge_list(g))
    edges.push_back(nlohmann::json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

/// Plain text edge list, one "u v" pair per line, ids ascending.
inline std::string graph_to_edge_list_text(const PancakeGraph& g) {
  std::string out;
  for (const auto& [u, v] : edge_list(g)) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace pancake
