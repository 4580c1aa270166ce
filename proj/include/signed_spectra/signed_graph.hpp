#pragma once

// Signed graphs as dense symmetric {-1,0,+1} matrices, plus the structural
// operations everything else is built on: switching, negation, induced
// subgraphs, connectivity/bipartiteness/completeness flags, balance, and the
// SG1 text format.

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace signed_spectra {

/// Vertex indices into a graph, always a subset of {0..n-1}.
using VertexSet = std::vector<int>;

struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = +1;
};

/// Signed graph on vertices 0..n-1. The adjacency matrix is stored densely;
/// entries are in {-1,0,+1}, the diagonal is zero and the matrix is kept
/// symmetric by construction. Instances are immutable once built.
class SignedGraph {
 public:
  SignedGraph() = default;

  explicit SignedGraph(int n) : n_(checked_order(n)), a_(size_t(n_) * n_, 0) {}

  SignedGraph(int n, const std::vector<SignedEdge>& edges) : SignedGraph(n) {
    for (const auto& e : edges) add_edge(e.u, e.v, e.sign);
  }

  int order() const { return n_; }

  int sign(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return a_[size_t(u) * n_ + v];
  }

  bool adjacent(int u, int v) const { return sign(u, v) != 0; }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 0; u < n_; ++u)
      if (at(v, u) != 0) ++d;
    return d;
  }

  int edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (at(u, v) != 0) ++m;
    return m;
  }

  std::vector<SignedEdge> edges() const {
    std::vector<SignedEdge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (at(u, v) != 0) out.push_back({u, v, at(u, v)});
    return out;
  }

  bool operator==(const SignedGraph& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const SignedGraph& o) const { return !(*this == o); }

  // Unchecked access for the algorithms below; callers guarantee the range.
  int at(int u, int v) const { return a_[size_t(u) * n_ + v]; }

 private:
  friend SignedGraph build(int, const std::vector<SignedEdge>&);
  friend SignedGraph switched(const SignedGraph&, const VertexSet&);
  friend SignedGraph negated(const SignedGraph&);
  friend SignedGraph induced(const SignedGraph&, const VertexSet&);
  friend SignedGraph relabeled(const SignedGraph&, const std::vector<int>&);
  friend SignedGraph from_entries(int, std::vector<signed char>);

  static int checked_order(int n) {
    if (n < 0) throw std::invalid_argument("SignedGraph: negative vertex count");
    return n;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("SignedGraph: vertex " + std::to_string(v) +
                                  " out of range [0," + std::to_string(n_) + ")");
  }

  void add_edge(int u, int v, int s) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("SignedGraph: loop at vertex " + std::to_string(u));
    if (s != +1 && s != -1)
      throw std::invalid_argument("SignedGraph: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") has sign " + std::to_string(s));
    if (at(u, v) != 0)
      throw std::invalid_argument("SignedGraph: duplicate edge (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
    set(u, v, s);
  }

  void set(int u, int v, int s) {
    a_[size_t(u) * n_ + v] = static_cast<signed char>(s);
    a_[size_t(v) * n_ + u] = static_cast<signed char>(s);
  }

  int n_ = 0;
  std::vector<signed char> a_;
};

/// Builds a signed graph from an explicit edge list. Rejects loops, duplicate
/// pairs, out-of-range indices and signs outside {-1,+1}, naming the edge.
inline SignedGraph build(int n, const std::vector<SignedEdge>& edges) {
  return SignedGraph(n, edges);
}

/// Internal: wraps a full symmetric entry array (row-major) as a graph.
inline SignedGraph from_entries(int n, std::vector<signed char> entries) {
  SignedGraph g(n);
  if (entries.size() != size_t(n) * n)
    throw std::invalid_argument("from_entries: wrong entry count");
  for (int u = 0; u < n; ++u) {
    if (entries[size_t(u) * n + u] != 0)
      throw std::invalid_argument("from_entries: nonzero diagonal");
    for (int v = u + 1; v < n; ++v) {
      int s = entries[size_t(u) * n + v];
      if (s != entries[size_t(v) * n + u])
        throw std::invalid_argument("from_entries: not symmetric");
      if (s != 0) g.set(u, v, s);
    }
  }
  return g;
}

inline void check_vertex_set(const SignedGraph& g, const VertexSet& xs, const char* what) {
  std::vector<char> seen(g.order(), 0);
  for (int v : xs) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                  " out of range");
    if (seen[v])
      throw std::invalid_argument(std::string(what) + ": duplicate vertex " +
                                  std::to_string(v));
    seen[v] = 1;
  }
}

/// Switching at X: flips the sign of every edge with exactly one endpoint in X.
inline SignedGraph switched(const SignedGraph& g, const VertexSet& x) {
  check_vertex_set(g, x, "switched");
  std::vector<char> in(g.order(), 0);
  for (int v : x) in[v] = 1;
  SignedGraph h = g;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.at(u, v) != 0 && in[u] != in[v]) h.set(u, v, -g.at(u, v));
  return h;
}

/// The negative: every nonzero entry sign-flipped.
inline SignedGraph negated(const SignedGraph& g) {
  SignedGraph h = g;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.at(u, v) != 0) h.set(u, v, -g.at(u, v));
  return h;
}

/// Subgraph induced by S, relabeled 0..|S|-1 in the order S is given.
inline SignedGraph induced(const SignedGraph& g, const VertexSet& s) {
  check_vertex_set(g, s, "induced");
  SignedGraph h(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (int sg = g.at(s[i], s[j]); sg != 0) h.set(int(i), int(j), sg);
  return h;
}

/// Relabels vertices: vertex v of g becomes perm[v] in the result.
inline SignedGraph relabeled(const SignedGraph& g, const std::vector<int>& perm) {
  if (int(perm.size()) != g.order())
    throw std::invalid_argument("relabeled: permutation size mismatch");
  VertexSet p(perm.begin(), perm.end());
  check_vertex_set(g, p, "relabeled");
  SignedGraph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (int s = g.at(u, v); s != 0) h.set(perm[u], perm[v], s);
  return h;
}

/// Connected components in BFS order from the lowest-index unvisited vertex.
inline std::vector<VertexSet> components(const SignedGraph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> vis(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (vis[s]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    vis[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v = 0; v < g.order(); ++v)
        if (g.at(u, v) != 0 && !vis[v]) {
          vis[v] = 1;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

struct StructureFlags {
  bool connected = false;
  bool complete = false;
  bool bipartite = false;
  bool has_isolated_vertex = false;
  bool has_isolated_edge = false;
  int min_degree = 0;
};

inline bool is_complete_underlying(const SignedGraph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.at(u, v) == 0) return false;
  return true;  // n <= 1 counts as complete
}

inline bool is_bipartite_underlying(const SignedGraph& g) {
  std::vector<int> color(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < g.order(); ++v) {
        if (g.at(u, v) == 0) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Computes all structural predicates on the underlying graph. An isolated
/// edge is a connected component equal to K2.
inline StructureFlags structure(const SignedGraph& g) {
  StructureFlags f;
  auto comps = components(g);
  f.connected = comps.size() <= 1;
  f.complete = is_complete_underlying(g);
  f.bipartite = is_bipartite_underlying(g);
  f.min_degree = 0;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (v == 0 || d < f.min_degree) f.min_degree = d;
    if (d == 0) f.has_isolated_vertex = true;
  }
  for (const auto& c : comps)
    if (c.size() == 2) f.has_isolated_edge = true;
  return f;
}

/// If g is balanced, returns a switching set X with switched(g, X) all
/// positive; otherwise nullopt. Uses the BFS spanning tree from the
/// lowest-index vertex of each component, so the output is deterministic.
inline std::optional<VertexSet> balance_switching(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> eps(n, 0);  // +1/-1 once visited
  for (int s = 0; s < n; ++s) {
    if (eps[s] != 0) continue;
    eps[s] = +1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (g.at(u, v) != 0 && eps[v] == 0) {
          eps[v] = eps[u] * g.at(u, v);
          q.push(v);
        }
    }
  }
  // Tree edges are positive after switching {v: eps[v] == -1}; the graph is
  // balanced iff every co-tree edge also ends up positive.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.at(u, v) != 0 && g.at(u, v) * eps[u] * eps[v] != +1) return std::nullopt;
  VertexSet x;
  for (int v = 0; v < n; ++v)
    if (eps[v] == -1) x.push_back(v);
  return x;
}

inline bool is_balanced(const SignedGraph& g) { return balance_switching(g).has_value(); }

inline bool is_antibalanced(const SignedGraph& g) { return is_balanced(negated(g)); }

// ---------------------------------------------------------------------------
// SG1 text format: "SG1 <n> <triangle>" where <triangle> lists the upper
// triangle in row-major pair order (0,1),(0,2),...,(1,2),... one character
// per entry: '0', '+', '-'. For n <= 1 the triangle is empty and omitted.
// ---------------------------------------------------------------------------

inline std::string to_sg1(const SignedGraph& g) {
  std::string s = "SG1 " + std::to_string(g.order());
  if (g.order() >= 2) {
    s += ' ';
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        int e = g.at(u, v);
        s += (e == 0 ? '0' : e > 0 ? '+' : '-');
      }
  }
  return s;
}

inline SignedGraph parse_sg1(const std::string& line) {
  std::istringstream in(line);
  std::string tag, tri;
  long long n = -1;
  in >> tag >> n;
  if (tag != "SG1" || n < 0 || in.fail())
    throw std::invalid_argument("SG1: expected \"SG1 <n> <triangle>\", got \"" + line + "\"");
  in >> tri;
  std::string extra;
  if (in >> extra) throw std::invalid_argument("SG1: trailing input \"" + extra + "\"");
  const size_t want = size_t(n) * (n - 1) / 2;
  if (tri.size() != want)
    throw std::invalid_argument("SG1: triangle has " + std::to_string(tri.size()) +
                                " entries, expected " + std::to_string(want));
  std::vector<SignedEdge> edges;
  size_t k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      char c = tri[k++];
      if (c == '+')
        edges.push_back({u, v, +1});
      else if (c == '-')
        edges.push_back({u, v, -1});
      else if (c != '0')
        throw std::invalid_argument(std::string("SG1: illegal character '") + c +
                                    "' in triangle");
    }
  return SignedGraph(static_cast<int>(n), edges);
}

}  // namespace signed_spectra
