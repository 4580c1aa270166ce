#pragma once

// The forbidden-induced-subgraph catalog: three specific signed graphs
// (forbidden up to switching isomorphism and negation), five underlying
// graphs forbidden for every signing, and the path/cycle rules (P_n for
// n >= 6 and C_n for n >= 5). An item is correctly forbidden iff it has at
// least two eigenvalues > 1 or at least two < -1; the catalog verifies this
// when first built, so an edge-list slip fails hard.

#include <istream>

#include "signed_spectra/spectrum.hpp"
#include "signed_spectra/switching_iso.hpp"

namespace signed_spectra {

enum class ForbiddenKind { signed_item, all_signings, path_rule, cycle_rule };

struct ForbiddenItem {
  ForbiddenKind kind = ForbiddenKind::signed_item;
  SignedGraph graph;  // unused for the path/cycle rules
  std::string name;
};

inline SignedGraph path_graph(int n) {
  std::vector<SignedEdge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, +1});
  return build(n, e);
}

inline SignedGraph cycle_graph(int n) {
  std::vector<SignedEdge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, +1});
  e.push_back({0, n - 1, +1});
  return build(n, e);
}

/// Violates the interlacing bound for membership: at least two eigenvalues
/// above 1 or at least two below -1.
inline bool breaks_interlacing(const SignedGraph& g) {
  auto c = interlacing_counts(g);
  return c.count_gt1 >= 2 || c.count_ltm1 >= 2;
}

/// SIGNED items: the one graph. ALL_SIGNINGS items: every one of the 2^|E|
/// signings. Rules: the small instantiations (P6, P7 and C5, C6, C7), again
/// under every signing — with one exact boundary case: the balanced 6-cycle
/// has spectrum {+-2, +-1, +-1}, so it sits ON the interlacing bound instead
/// of breaking it. The rule check asserts that boundary case precisely, so a
/// computation slip anywhere still fails.
inline bool verify_forbidden(const ForbiddenItem& item) {
  auto all_signings_fail = [](const SignedGraph& underlying, bool balanced_c6_boundary) {
    auto edges = underlying.edges();
    const size_t m = edges.size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
      std::vector<SignedEdge> se = edges;
      for (size_t i = 0; i < m; ++i) se[i].sign = (mask >> i) & 1 ? -1 : +1;
      SignedGraph g = build(underlying.order(), se);
      bool expect_break = !(balanced_c6_boundary && is_balanced(g));
      if (breaks_interlacing(g) != expect_break) return false;
    }
    return true;
  };
  switch (item.kind) {
    case ForbiddenKind::signed_item:
      return breaks_interlacing(item.graph);
    case ForbiddenKind::all_signings:
      return all_signings_fail(item.graph, false);
    case ForbiddenKind::path_rule:
      return all_signings_fail(path_graph(6), false) &&
             all_signings_fail(path_graph(7), false);
    case ForbiddenKind::cycle_rule:
      return all_signings_fail(cycle_graph(5), false) &&
             all_signings_fail(cycle_graph(6), true) &&
             all_signings_fail(cycle_graph(7), false);
  }
  return false;
}

namespace detail {

inline std::vector<ForbiddenItem> build_catalog() {
  std::vector<ForbiddenItem> cat;
  // The 4-cycle with exactly one negative edge.
  cat.push_back({ForbiddenKind::signed_item,
                 build(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}),
                 "C4 with one negative edge"});
  // An apex vertex joined (all positive) to the disjoint union of a
  // triangle and an edge.
  cat.push_back({ForbiddenKind::signed_item,
                 build(6, {{0, 1, 1},
                           {0, 2, 1},
                           {0, 3, 1},
                           {0, 4, 1},
                           {0, 5, 1},
                           {1, 2, 1},
                           {3, 4, 1},
                           {3, 5, 1},
                           {4, 5, 1}}),
                 "apex over K3 + K2, all positive"});
  // K5 minus the edge {1,4}, with {0,1} negative.
  cat.push_back({ForbiddenKind::signed_item,
                 build(5, {{0, 1, -1},
                           {0, 2, 1},
                           {0, 3, 1},
                           {0, 4, 1},
                           {1, 2, 1},
                           {1, 3, 1},
                           {2, 3, 1},
                           {2, 4, 1},
                           {3, 4, 1}}),
                 "K5 minus an edge, one negative edge at the common vertex"});
  // The pentagon: forbidden for every signing, as are the rest below.
  cat.push_back({ForbiddenKind::all_signings, cycle_graph(5), "C5"});
  // Pentagon with one chord.
  cat.push_back({ForbiddenKind::all_signings,
                 build(5, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}}),
                 "C5 plus a chord"});
  // Two triangles sharing an edge, plus a pendant vertex on one
  // shared-edge endpoint (P3 joined to an apex, plus a pendant).
  cat.push_back({ForbiddenKind::all_signings,
                 build(5, {{0, 2, 1}, {0, 3, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}, {1, 3, 1}}),
                 "two triangles sharing an edge plus a pendant"});
  // K4 minus an edge, with a path of length two hanging off one
  // degree-3 vertex.
  cat.push_back({ForbiddenKind::all_signings,
                 build(6, {{0, 3, 1}, {0, 4, 1}, {1, 3, 1}, {1, 4, 1}, {3, 4, 1}, {1, 5, 1}, {5, 2, 1}}),
                 "diamond with a hanging P3"});
  // A 4-cycle and a triangle sharing one vertex.
  cat.push_back({ForbiddenKind::all_signings,
                 build(6, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {1, 5, 1}, {4, 5, 1}}),
                 "C4 and K3 glued at a vertex"});
  cat.push_back({ForbiddenKind::path_rule, SignedGraph(), "P_n, n >= 6, every signing"});
  cat.push_back({ForbiddenKind::cycle_rule, SignedGraph(), "C_n, n >= 5, every signing"});
  for (const auto& item : cat)
    if (!verify_forbidden(item))
      throw std::logic_error("forbidden catalog: item \"" + item.name +
                             "\" does not break interlacing");
  return cat;
}

inline bool is_path(const SignedGraph& g) {
  if (g.order() < 2) return false;
  int deg1 = 0;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d == 1)
      ++deg1;
    else if (d != 2)
      return false;
  }
  return deg1 == 2 && components(g).size() == 1;
}

inline bool is_cycle(const SignedGraph& g) {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return components(g).size() == 1;
}

// The balanced 6-cycle is the one signed cycle of length >= 5 that satisfies
// the interlacing bound (spectrum {+-2, +-1, +-1}); members can and do
// contain it (A10 and A11 instances), so the rule must not match it.
inline bool cycle_rule_matches(const SignedGraph& g) {
  if (g.order() < 5 || !is_cycle(g)) return false;
  return !(g.order() == 6 && is_balanced(g));
}

}  // namespace detail

/// The built-in catalog, verified on first use.
inline const std::vector<ForbiddenItem>& catalog() {
  static const std::vector<ForbiddenItem> cat = detail::build_catalog();
  return cat;
}

/// Catalog file format: one item per line, `SIGNED SG1 ...` or
/// `ALLSIGN SG1 ...`; the path/cycle rules are always appended. Every parsed
/// item goes through the same verification gate as the built-ins.
inline std::vector<ForbiddenItem> parse_catalog(std::istream& in) {
  std::vector<ForbiddenItem> cat;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    size_t sp = line.find(' ');
    std::string tag = line.substr(0, sp);
    if (sp == std::string::npos || (tag != "SIGNED" && tag != "ALLSIGN"))
      throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                  ": expected SIGNED or ALLSIGN prefix");
    SignedGraph g = parse_sg1(line.substr(sp + 1));
    ForbiddenKind kind =
        tag == "SIGNED" ? ForbiddenKind::signed_item : ForbiddenKind::all_signings;
    ForbiddenItem item{kind, std::move(g), tag + " item, line " + std::to_string(lineno)};
    if (!verify_forbidden(item))
      throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                  ": item does not break interlacing");
    cat.push_back(std::move(item));
  }
  cat.push_back({ForbiddenKind::path_rule, SignedGraph(), "P_n, n >= 6, every signing"});
  cat.push_back({ForbiddenKind::cycle_rule, SignedGraph(), "C_n, n >= 5, every signing"});
  return cat;
}

struct Violation {
  size_t item_index = 0;
  ForbiddenKind kind = ForbiddenKind::signed_item;
  std::string item_name;
  VertexSet vertices;        // induced witness in g
  std::vector<int> mapping;  // item vertex i -> position within `vertices`
};

/// True iff the recorded witness really exhibits the item inside g.
inline bool check_violation(const SignedGraph& g, const Violation& v,
                            const std::vector<ForbiddenItem>& cat) {
  if (v.item_index >= cat.size()) return false;
  const ForbiddenItem& item = cat[v.item_index];
  SignedGraph h = induced(g, v.vertices);
  switch (item.kind) {
    case ForbiddenKind::signed_item: {
      if (int(v.mapping.size()) != item.graph.order()) return false;
      SignedGraph image = relabeled(item.graph, v.mapping);
      return switching_isomorphic(image, h).has_value() ||
             switching_isomorphic(negated(image), h).has_value();
    }
    case ForbiddenKind::all_signings:
      return underlying_isomorphic(relabeled(item.graph, v.mapping), h).has_value();
    case ForbiddenKind::path_rule:
      return h.order() >= 6 && detail::is_path(h);
    case ForbiddenKind::cycle_rule:
      return detail::cycle_rule_matches(h);
  }
  return false;
}

/// Scans induced subgraphs of up to max_size vertices for a catalog match,
/// in size-lexicographic subset order, smallest catalog item first. The first
/// hit is returned with a re-checked witness.
inline std::optional<Violation> scan(const SignedGraph& g, int max_size = 6,
                                     const std::vector<ForbiddenItem>& cat = catalog()) {
  const int n = g.order();
  // Catalog order: finite items by order, then the rules.
  std::vector<size_t> finite, rules;
  for (size_t i = 0; i < cat.size(); ++i)
    (cat[i].kind == ForbiddenKind::signed_item || cat[i].kind == ForbiddenKind::all_signings
         ? finite
         : rules)
        .push_back(i);
  std::stable_sort(finite.begin(), finite.end(),
                   [&](size_t a, size_t b) { return cat[a].graph.order() < cat[b].graph.order(); });

  std::optional<Violation> hit;
  auto try_subset = [&](const VertexSet& subset) -> bool {
    SignedGraph h = induced(g, subset);
    const int k = h.order();
    for (size_t idx : finite) {
      const ForbiddenItem& item = cat[idx];
      if (item.graph.order() != k) continue;
      if (item.kind == ForbiddenKind::signed_item) {
        auto w = switching_isomorphic(item.graph, h);
        bool neg = false;
        if (!w) {
          w = switching_isomorphic(negated(item.graph), h);
          neg = w.has_value();
        }
        (void)neg;
        if (w) {
          hit = Violation{idx, item.kind, item.name, subset, w->perm};
          return true;
        }
      } else {
        if (auto p = underlying_isomorphic(item.graph, h)) {
          hit = Violation{idx, item.kind, item.name, subset, *p};
          return true;
        }
      }
    }
    for (size_t idx : rules) {
      const ForbiddenItem& item = cat[idx];
      bool match = item.kind == ForbiddenKind::path_rule ? (k >= 6 && detail::is_path(h))
                                                         : detail::cycle_rule_matches(h);
      if (match) {
        std::vector<int> identity(k);
        for (int i = 0; i < k; ++i) identity[i] = i;
        hit = Violation{idx, item.kind, item.name, subset, identity};
        return true;
      }
    }
    return false;
  };

  for (int size = 1; size <= std::min(max_size, n); ++size) {
    VertexSet subset(size);
    std::function<bool(int, int)> comb = [&](int pos, int start) -> bool {
      if (pos == size) return try_subset(subset);
      for (int v = start; v < n; ++v) {
        subset[pos] = v;
        if (comb(pos + 1, v + 1)) return true;
      }
      return false;
    };
    if (comb(0, 0)) break;
  }
  if (hit && !check_violation(g, *hit, cat))
    throw std::logic_error("scan: witness failed recheck");
  return hit;
}

}  // namespace signed_spectra
