#pragma once

// Switching isomorphism and canonical forms. The isomorphism search is an
// underlying-graph backtracking where sign compatibility is tracked by a
// union-find with parity (cycle sign products are the switching invariant, so
// relative switch values are constrained exactly by the mapped edges). The
// canonical code minimizes, over all canonical orderings of the underlying
// graph, the spanning-forest-normalized signature.

#include <cstdint>
#include <functional>
#include <optional>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Certificate for switching isomorphism: switched(relabeled(g, perm),
/// switching) == h.
struct IsoWitness {
  std::vector<int> perm;
  VertexSet switching;
};

inline bool check_iso_witness(const SignedGraph& g, const SignedGraph& h,
                              const IsoWitness& w) {
  if (int(w.perm.size()) != g.order() || g.order() != h.order()) return false;
  return switched(relabeled(g, w.perm), w.switching) == h;
}

namespace detail {

// Union-find with parity and an undo trail; no path compression so that
// rollback stays trivial.
class ParityDSU {
 public:
  explicit ParityDSU(int n) : parent_(n), rank_(n, 0), par_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<int, int> find(int v) const {
    int p = 0;
    while (parent_[v] != v) {
      p ^= par_[v];
      v = parent_[v];
    }
    return {v, p};
  }

  // Adds the constraint parity(u) xor parity(v) == p; false on conflict.
  bool unite(int u, int v, int p) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) return (pu ^ pv) == p;
    if (rank_[ru] < rank_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    trail_.push_back({rv, rank_[ru]});
    parent_[rv] = ru;
    par_[rv] = pu ^ pv ^ p;
    if (rank_[ru] == rank_[rv]) ++rank_[ru];
    return true;
  }

  size_t mark() const { return trail_.size(); }

  void rollback(size_t m) {
    while (trail_.size() > m) {
      auto [child, old_rank] = trail_.back();
      trail_.pop_back();
      int root = parent_[child];
      parent_[child] = child;
      par_[child] = 0;
      rank_[root] = old_rank;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<int> par_;  // parity to parent
  std::vector<std::pair<int, int>> trail_;
};

inline std::vector<int> search_order(const SignedGraph& g) {
  // BFS from a maximum-degree vertex, visiting remaining components the same
  // way; keeps newly mapped vertices adjacent to mapped ones where possible.
  const int n = g.order();
  std::vector<int> order;
  std::vector<char> vis(n, 0);
  auto next_seed = [&]() {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!vis[v] && (best < 0 || g.degree(v) > g.degree(best))) best = v;
    return best;
  };
  while (int(order.size()) < n) {
    int s = next_seed();
    std::queue<int> q;
    q.push(s);
    vis[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      order.push_back(u);
      for (int v = 0; v < n; ++v)
        if (g.at(u, v) != 0 && !vis[v]) {
          vis[v] = 1;
          q.push(v);
        }
    }
  }
  return order;
}

struct IsoSearchResult {
  std::vector<int> perm;
  VertexSet switching;  // empty in underlying mode
};

// Shared backtracking for underlying isomorphism; `signed_mode` adds the
// parity constraints that make it a switching isomorphism search.
inline std::optional<IsoSearchResult> iso_search(const SignedGraph& g,
                                                 const SignedGraph& h,
                                                 bool signed_mode) {
  const int n = g.order();
  if (h.order() != n) return std::nullopt;
  {
    std::vector<int> dg, dh;
    for (int v = 0; v < n; ++v) {
      dg.push_back(g.degree(v));
      dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
  }
  std::vector<int> order = search_order(g);
  std::vector<int> map(n, -1);   // g vertex -> h vertex
  std::vector<char> used(n, 0);  // h side
  ParityDSU dsu(n);

  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == n) return true;
    int v = order[pos];
    for (int w = 0; w < n; ++w) {
      if (used[w] || h.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        int u = order[q];
        if ((g.at(u, v) != 0) != (h.at(map[u], w) != 0)) ok = false;
      }
      if (!ok) continue;
      size_t m = dsu.mark();
      if (signed_mode) {
        for (int q = 0; q < pos && ok; ++q) {
          int u = order[q];
          if (g.at(u, v) == 0) continue;
          int parity = g.at(u, v) == h.at(map[u], w) ? 0 : 1;
          if (!dsu.unite(u, v, parity)) ok = false;
        }
      }
      if (ok) {
        map[v] = w;
        used[w] = 1;
        if (rec(pos + 1)) return true;
        map[v] = -1;
        used[w] = 0;
      }
      dsu.rollback(m);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  IsoSearchResult out;
  out.perm = map;
  if (signed_mode) {
    // Turn parities into the switching set on h's labels.
    for (int v = 0; v < n; ++v)
      if (dsu.find(v).second == 1) out.switching.push_back(map[v]);
    std::sort(out.switching.begin(), out.switching.end());
  }
  return out;
}

}  // namespace detail

/// Underlying-graph isomorphism (signs ignored): perm with
/// relabeled(underlying g, perm) == underlying h.
inline std::optional<std::vector<int>> underlying_isomorphic(const SignedGraph& g,
                                                             const SignedGraph& h) {
  auto r = detail::iso_search(g, h, false);
  if (!r) return std::nullopt;
  return r->perm;
}

/// Switching isomorphism with a re-checked witness.
inline std::optional<IsoWitness> switching_isomorphic(const SignedGraph& g,
                                                      const SignedGraph& h) {
  auto found = detail::iso_search(g, h, true);
  if (!found) return std::nullopt;
  IsoWitness w{found->perm, found->switching};
  if (!check_iso_witness(g, h, w))
    throw std::logic_error("switching_isomorphic: witness failed recheck");
  return w;
}

// ---------------------------------------------------------------------------
// Canonical forms.
// ---------------------------------------------------------------------------

namespace detail {

/// Canonical labeling of the underlying graph: the vertex order minimizing
/// the 0/1 upper-triangle string (row of each newly placed vertex against the
/// earlier ones). Returns one optimal old->new permutation plus the full
/// automorphism group of the relabeled graph.
struct UnderlyingCanon {
  std::vector<int> to_canon;
  std::vector<std::vector<int>> automorphisms;  // on canonical labels
  std::vector<uint8_t> triangle;                // canonical 0/1 string
};

inline UnderlyingCanon canonical_underlying(const SignedGraph& g) {
  const int n = g.order();
  const int tri_len = n * (n - 1) / 2;
  std::vector<uint8_t> best(tri_len, 2);  // sentinel above any real string
  std::vector<uint8_t> cur(tri_len, 0);
  std::vector<int> order(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> best_orders;

  // `tight` tracks whether the current prefix equals the best string's
  // prefix; only then may a locally greater segment be pruned. Off the tight
  // path the subtree is explored fully and leaves are compared in full
  // (the best string may have been replaced mid-subtree).
  std::function<void(int, int, bool)> rec = [&](int pos, int prefix_len, bool tight) {
    if (pos == n) {
      if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end())) {
        best = cur;
        best_orders.clear();
      }
      if (cur == best) best_orders.push_back(order);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int len = prefix_len;
      for (int q = 0; q < pos; ++q) cur[len++] = g.at(order[q], v) != 0 ? 1 : 0;
      bool next_tight = tight;
      if (tight) {
        bool greater = false, smaller = false;
        for (int i = prefix_len; i < len && !greater && !smaller; ++i) {
          if (cur[i] > best[i]) greater = true;
          if (cur[i] < best[i]) smaller = true;
        }
        if (greater) continue;
        if (smaller) next_tight = false;
      }
      used[v] = 1;
      order[pos] = v;
      rec(pos + 1, len, next_tight);
      used[v] = 0;
    }
  };
  rec(0, 0, true);

  UnderlyingCanon out;
  out.triangle = best;
  out.to_canon.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) out.to_canon[best_orders[0][pos]] = pos;
  for (const auto& ord : best_orders) {
    std::vector<int> pi(n);
    for (int pos = 0; pos < n; ++pos) pi[ord[pos]] = pos;
    // pi and to_canon both produce the canonical string, so pi o to_canon^-1
    // is an automorphism of the canonical graph.
    std::vector<int> aut(n);
    for (int old = 0; old < n; ++old) aut[out.to_canon[old]] = pi[old];
    out.automorphisms.push_back(std::move(aut));
  }
  return out;
}

/// Spanning-forest structure of a fixed labeled graph: BFS forest from the
/// lowest-index vertex of each component, plus the co-tree edge list.
struct ForestInfo {
  std::vector<int> parent;                 // -1 for roots
  std::vector<int> bfs_order;
  std::vector<std::pair<int, int>> cotree;  // (u,v) with u < v, lexicographic
};

inline ForestInfo forest_info(const SignedGraph& g) {
  const int n = g.order();
  ForestInfo f;
  f.parent.assign(n, -2);
  for (int s = 0; s < n; ++s) {
    if (f.parent[s] != -2) continue;
    f.parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      f.bfs_order.push_back(u);
      for (int v = 0; v < n; ++v)
        if (g.at(u, v) != 0 && f.parent[v] == -2) {
          f.parent[v] = u;
          q.push(v);
        }
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.at(u, v) != 0 && f.parent[v] != u && f.parent[u] != v)
        f.cotree.push_back({u, v});
  return f;
}

/// Normalized co-tree signature: switch so all forest edges are positive and
/// read off the co-tree signs (bit set = negative). This is a complete
/// invariant for switching equivalence at fixed labels.
inline uint64_t normalized_cotree_bits(const SignedGraph& g, const ForestInfo& f) {
  const int n = g.order();
  std::vector<int> eps(n, 0);
  for (int u : f.bfs_order) eps[u] = f.parent[u] < 0 ? 1 : eps[f.parent[u]] * g.at(f.parent[u], u);
  // Edge 0 sits in the most significant bit so that integer order equals
  // lexicographic order over the co-tree edge list (and hence SG1 order).
  uint64_t bits = 0;
  const size_t m = f.cotree.size();
  for (size_t e = 0; e < m; ++e) {
    auto [u, v] = f.cotree[e];
    if (g.at(u, v) * eps[u] * eps[v] < 0) bits |= uint64_t(1) << (m - 1 - e);
  }
  return bits;
}

/// Rebuilds the signed graph with the given normalized co-tree signature.
inline SignedGraph graph_from_bits(const SignedGraph& underlying, const ForestInfo& f,
                                   uint64_t bits) {
  const int n = underlying.order();
  std::vector<SignedEdge> edges;
  std::vector<char> is_cotree(size_t(n) * n, 0);
  const size_t m = f.cotree.size();
  for (size_t e = 0; e < m; ++e) {
    auto [u, v] = f.cotree[e];
    edges.push_back({u, v, (bits >> (m - 1 - e)) & 1 ? -1 : +1});
    is_cotree[size_t(u) * n + v] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (underlying.at(u, v) != 0 && !is_cotree[size_t(u) * n + v])
        edges.push_back({u, v, +1});
  return build(n, edges);
}

}  // namespace detail

struct CanonicalCode {
  std::string code;
  bool operator==(const CanonicalCode& o) const { return code == o.code; }
  bool operator<(const CanonicalCode& o) const { return code < o.code; }
};

/// The canonical representative: relabel to the canonical underlying order,
/// then take the automorphism image whose normalized signature has the
/// smallest co-tree bit pattern.
inline SignedGraph canonical_form(const SignedGraph& g) {
  auto uc = detail::canonical_underlying(g);
  SignedGraph base = relabeled(g, uc.to_canon);
  auto forest = detail::forest_info(base);
  if (forest.cotree.size() > 60)
    throw std::invalid_argument("canonical_form: cycle space too large");
  uint64_t best_bits = ~uint64_t(0);
  for (const auto& aut : uc.automorphisms) {
    uint64_t b = detail::normalized_cotree_bits(relabeled(base, aut), forest);
    if (b < best_bits) best_bits = b;
  }
  return detail::graph_from_bits(base, forest, best_bits);
}

/// Byte string identifying the switching-isomorphism class: the SG1 line of
/// the canonical representative.
inline CanonicalCode canonical_code(const SignedGraph& g) {
  return CanonicalCode{to_sg1(canonical_form(g))};
}

}  // namespace signed_spectra
