#pragma once

// Equitable partitions and their quotient matrices, the all-ones-block
// perturbation verifier, maximal clique enumeration, and the clique-format
// classifier (formats I/II/III of the structure theory).

#include <functional>

#include "signed_spectra/exact_linalg.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

struct EquitablePartition {
  std::vector<VertexSet> blocks;
};

inline void check_partition(const SignedGraph& g, const EquitablePartition& p) {
  std::vector<char> seen(g.order(), 0);
  int covered = 0;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty())
      throw std::invalid_argument("partition: block " + std::to_string(b) + " is empty");
    for (int v : p.blocks[b]) {
      if (v < 0 || v >= g.order())
        throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                    " out of range");
      if (seen[v])
        throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                    " appears twice");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != g.order())
    throw std::invalid_argument("partition: covers " + std::to_string(covered) + " of " +
                                std::to_string(g.order()) + " vertices");
}

/// Checks that every ordered block pair has constant signed row sums (which,
/// A being symmetric, also gives constant column sums for the transposed
/// pair) and returns the quotient matrix of those sums. Throws naming the
/// offending block pair and two witness vertices.
inline Matrix<BigInt> verify_equitable(const SignedGraph& g, const EquitablePartition& p) {
  check_partition(g, p);
  const int b = static_cast<int>(p.blocks.size());
  Matrix<BigInt> q(b, b);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      long long sum0 = 0;
      int witness0 = p.blocks[i][0];
      for (int w : p.blocks[j]) sum0 += g.at(witness0, w);
      for (int v : p.blocks[i]) {
        long long s = 0;
        for (int w : p.blocks[j]) s += g.at(v, w);
        if (s != sum0)
          throw std::runtime_error(
              "not equitable: blocks (" + std::to_string(i) + "," + std::to_string(j) +
              "): vertex " + std::to_string(witness0) + " has row sum " +
              std::to_string(sum0) + " but vertex " + std::to_string(v) + " has " +
              std::to_string(s));
      }
      q(i, j) = sum0;
    }
  return q;
}

/// Eigenvalue data of a quotient matrix: multiplicities of +-1 among its
/// roots plus the residual factor. Every root is an eigenvalue of A.
inline Pm1Split quotient_spectrum(const Matrix<BigInt>& q) { return extract_pm1(char_poly(q)); }

/// Checks whether adding eps(i,j) * J on each block pair turns A into a
/// matrix with all eigenvalues +-1, i.e. (A'-I)(A'+I) = 0 exactly.
inline bool verify_j_perturbation(const SignedGraph& g, const EquitablePartition& p,
                                  const Matrix<int>& eps) {
  check_partition(g, p);
  const int b = static_cast<int>(p.blocks.size());
  if (eps.rows() != b || eps.cols() != b)
    throw std::invalid_argument("verify_j_perturbation: eps has wrong dimensions");
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      if (eps(i, j) != eps(j, i))
        throw std::invalid_argument("verify_j_perturbation: eps not symmetric");
      if (eps(i, j) < -1 || eps(i, j) > 1)
        throw std::invalid_argument("verify_j_perturbation: eps entries must be in {-1,0,1}");
    }
  Matrix<BigInt> a = adjacency_matrix<BigInt>(g);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      if (eps(i, j) == 0) continue;
      for (int v : p.blocks[i])
        for (int w : p.blocks[j]) a(v, w) += eps(i, j);
    }
  Matrix<BigInt> minus = a, plus = a;
  for (int i = 0; i < g.order(); ++i) {
    minus(i, i) -= 1;
    plus(i, i) += 1;
  }
  return (minus * plus).is_zero();
}

/// All maximal cliques of the underlying graph, Bron-Kerbosch, each clique
/// sorted and the list in deterministic lexicographic order.
inline std::vector<VertexSet> maximal_cliques(const SignedGraph& g) {
  const int n = g.order();
  std::vector<uint64_t> nbr(n, 0);
  if (n > 62) throw std::invalid_argument("maximal_cliques: order too large");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.at(u, v) != 0) nbr[u] |= uint64_t(1) << v;
  std::vector<VertexSet> out;
  std::function<void(uint64_t, uint64_t, uint64_t)> rec = [&](uint64_t r, uint64_t p,
                                                              uint64_t x) {
    if (p == 0 && x == 0) {
      VertexSet c;
      for (int v = 0; v < n; ++v)
        if (r & (uint64_t(1) << v)) c.push_back(v);
      out.push_back(std::move(c));
      return;
    }
    while (p) {
      int v = __builtin_ctzll(p);
      uint64_t bit = uint64_t(1) << v;
      rec(r | bit, p & nbr[v], x & nbr[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  rec(0, n >= 62 ? ~uint64_t(0) : (uint64_t(1) << n) - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Clique formats. For a maximal clique C of size c >= 3 in a member graph,
// the c x n submatrix of A is, up to vertex ordering, switching and taking
// the negative, one of
//   (I)   clique J-I; every nonzero outside column equals one mixed-sign
//         pattern (+1 on C1, -1 on C2, zero elsewhere), c1+c2 < c;
//   (II)  clique J-I; outside columns are all-ones on C1 or on C2 with
//         C1 u C2 = C;
//   (III) clique J~_{c1,c2}; outside columns are all-ones on C1 or on C2.
// ---------------------------------------------------------------------------

struct CliqueFormat {
  enum class Format { I, II, III };
  Format format = Format::I;
  int c1 = 0, c2 = 0, x = 0, y = 0, z = 0;
  bool negated = false;   // pattern read off the negative of the input
  VertexSet C1, C2, X, Y, Z;  // original vertex labels
  VertexSet switching;        // applied to (negated ? -G : G) before reading
};

namespace detail {

struct FormatMismatch {};  // internal control flow for the two-pass classifier

inline std::optional<CliqueFormat> try_clique_format(const SignedGraph& h,
                                                     const VertexSet& clique,
                                                     bool negated) {
  const int n = h.order();
  const int c = static_cast<int>(clique.size());
  std::vector<char> in_c(n, 0);
  for (int v : clique) in_c[v] = 1;

  // Switch so the first clique vertex sees positive edges inside C.
  VertexSet sw;
  std::vector<char> flip(n, 0);
  for (int i = 1; i < c; ++i)
    if (h.sign(clique[0], clique[i]) < 0) {
      flip[clique[i]] = 1;
      sw.push_back(clique[i]);
    }
  auto csign = [&](int u, int v) {
    int s = h.at(u, v);
    if (flip[u]) s = -s;
    if (flip[v]) s = -s;
    return s;
  };

  // Split C into the positive side C1 (containing clique[0]) and the
  // negative-clique side C2; C2 empty means the clique is plain J-I.
  std::vector<char> neg_side(n, 0);
  for (int i = 1; i < c; ++i)
    for (int j = i + 1; j < c; ++j)
      if (csign(clique[i], clique[j]) < 0) {
        neg_side[clique[i]] = 1;
        neg_side[clique[j]] = 1;
      }
  VertexSet c1v, c2v;
  for (int v : clique) (neg_side[v] ? c2v : c1v).push_back(v);
  // All pairs within C2 must be negative, every other pair positive.
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      int s = csign(clique[i], clique[j]);
      bool both_neg = neg_side[clique[i]] && neg_side[clique[j]];
      if (both_neg ? s != -1 : s != +1) return std::nullopt;
    }
  const bool tilde = !c2v.empty();
  if (tilde && (c1v.size() < 2 || c2v.size() < 2)) return std::nullopt;

  // Bucket the outside columns.
  VertexSet xs, ys, zs;
  std::optional<std::vector<int>> mixed_pattern;  // format I pattern on C
  bool any_mixed = false, any_uniform = false;
  std::vector<VertexSet> uniform_supports;  // distinct supports seen (J-I case)
  std::vector<VertexSet> support_of(n);

  for (int u = 0; u < n; ++u) {
    if (in_c[u]) continue;
    std::vector<int> col(c);
    int nz = 0, first_nz = -1;
    for (int i = 0; i < c; ++i) {
      col[i] = csign(clique[i], u);
      if (col[i] != 0) {
        ++nz;
        if (first_nz < 0) first_nz = i;
      }
    }
    if (nz == 0) {
      zs.push_back(u);
      continue;
    }
    if (nz == c)
      throw std::runtime_error("clique_format: clique not maximal: vertex " +
                               std::to_string(u) + " is adjacent to all of C");
    if (col[first_nz] < 0) {  // switch u so its first clique entry is +1
      for (int& s : col) s = -s;
      flip[u] = 1;
      sw.push_back(u);
    }
    bool has_neg = false;
    VertexSet supp;
    for (int i = 0; i < c; ++i) {
      if (col[i] < 0) has_neg = true;
      if (col[i] != 0) supp.push_back(clique[i]);
    }
    if (has_neg) {
      if (tilde) return std::nullopt;  // mixed columns only occur with J-I
      any_mixed = true;
      if (!mixed_pattern)
        mixed_pattern = col;
      else if (*mixed_pattern != col)
        return std::nullopt;
      xs.push_back(u);
    } else {
      any_uniform = true;
      support_of[u] = supp;
      bool known = false;
      for (auto& s : uniform_supports)
        if (s == supp) known = true;
      if (!known) uniform_supports.push_back(supp);
      xs.push_back(u);  // provisional; sides are assigned below
    }
  }

  if (xs.empty()) return std::nullopt;  // x > 0 in every format
  if (any_mixed && any_uniform) return std::nullopt;

  CliqueFormat out;
  out.negated = negated;
  out.Z = zs;
  out.z = static_cast<int>(zs.size());

  if (any_mixed) {
    // Format I: single pattern, +1 rows are C1, -1 rows are C2.
    out.format = CliqueFormat::Format::I;
    for (int i = 0; i < c; ++i) {
      if ((*mixed_pattern)[i] > 0) out.C1.push_back(clique[i]);
      if ((*mixed_pattern)[i] < 0) out.C2.push_back(clique[i]);
    }
    out.X = xs;
    out.c1 = static_cast<int>(out.C1.size());
    out.c2 = static_cast<int>(out.C2.size());
    out.x = static_cast<int>(out.X.size());
    if (out.c1 + out.c2 >= c) return std::nullopt;
  } else {
    // Formats II and III: at most two supports, forming the sides.
    if (uniform_supports.size() > 2) return std::nullopt;
    VertexSet s1, s2;
    if (tilde) {
      s1 = c1v;  // positive side of the J~ clique
      s2 = c2v;
      for (auto& s : uniform_supports)
        if (s != s1 && s != s2) return std::nullopt;
    } else {
      s1 = uniform_supports[0];
      if (uniform_supports.size() == 2) {
        s2 = uniform_supports[1];
        // The two supports must partition C.
        VertexSet uni = s1;
        uni.insert(uni.end(), s2.begin(), s2.end());
        std::sort(uni.begin(), uni.end());
        VertexSet csorted = clique;
        std::sort(csorted.begin(), csorted.end());
        if (uni != csorted) return std::nullopt;
      } else {
        for (int v : clique)
          if (std::find(s1.begin(), s1.end(), v) == s1.end()) s2.push_back(v);
        if (s2.empty()) return std::nullopt;
      }
      // C1 holds the lowest-index clique vertex when both sides carry
      // columns; otherwise C1 is the side that has them (x > 0).
      bool s1_has = false, s2_has = false;
      for (int u : xs) {
        if (support_of[u] == s1) s1_has = true;
        if (support_of[u] == s2) s2_has = true;
      }
      if (!s1_has && !s2_has) return std::nullopt;
      bool swap_sides;
      if (s1_has != s2_has) {
        swap_sides = s2_has;
      } else {
        int min_c = *std::min_element(clique.begin(), clique.end());
        swap_sides = std::find(s2.begin(), s2.end(), min_c) != s2.end();
      }
      if (swap_sides) std::swap(s1, s2);
    }
    if (tilde) {
      // x > 0 on the positive side; the negated pass covers the swap.
      bool ok = false;
      for (int u : xs)
        if (support_of[u] == s1) ok = true;
      if (!ok) return std::nullopt;
      // Prefer the labeling with the lowest clique vertex in C1 when both
      // sides carry columns; if that fails x > 0, the other pass resolves it.
      int min_c = *std::min_element(clique.begin(), clique.end());
      bool min_in_s2 = std::find(s2.begin(), s2.end(), min_c) != s2.end();
      bool s2_has = false;
      for (int u : xs)
        if (support_of[u] == s2) s2_has = true;
      if (min_in_s2 && s2_has) return std::nullopt;
    }
    VertexSet real_x, real_y;
    for (int u : xs) {
      if (support_of[u] == s1)
        real_x.push_back(u);
      else if (support_of[u] == s2)
        real_y.push_back(u);
      else
        return std::nullopt;
    }
    if (real_x.empty()) return std::nullopt;
    out.format = tilde ? CliqueFormat::Format::III : CliqueFormat::Format::II;
    out.C1 = s1;
    out.C2 = s2;
    out.X = real_x;
    out.Y = real_y;
    out.c1 = static_cast<int>(s1.size());
    out.c2 = static_cast<int>(s2.size());
    out.x = static_cast<int>(real_x.size());
    out.y = static_cast<int>(real_y.size());
    if (tilde && (out.c1 < 2 || out.c2 < 2)) return std::nullopt;
  }

  std::sort(out.C1.begin(), out.C1.end());
  std::sort(out.C2.begin(), out.C2.end());
  std::sort(sw.begin(), sw.end());
  out.switching = sw;

  // Reconstruct the block pattern literally and verify it.
  SignedGraph norm = switched(h, sw);
  auto expect = [&](int cu, int u, int want) {
    if (norm.sign(cu, u) != want) throw FormatMismatch{};
  };
  try {
    for (int a : out.C1)
      for (int b : out.C1)
        if (a != b) expect(a, b, +1);
    for (int a : out.C2)
      for (int b : out.C2)
        if (a != b) expect(a, b, out.format == CliqueFormat::Format::III ? -1 : +1);
    for (int a : out.C1)
      for (int b : out.C2) expect(a, b, +1);
    for (int u : out.X) {
      for (int a : out.C1) expect(a, u, +1);
      for (int b : out.C2)
        expect(b, u, out.format == CliqueFormat::Format::I ? -1 : 0);
    }
    for (int u : out.Y) {
      for (int a : out.C1) expect(a, u, 0);
      for (int b : out.C2) expect(b, u, +1);
    }
    for (int u : out.Z)
      for (int a : clique) expect(a, u, 0);
  } catch (const FormatMismatch&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace detail

/// Classifies the maximal clique C (|C| >= 3) into format I, II or III,
/// trying the graph and then its negative. Throws when the clique is not a
/// clique, not maximal, has no outside vertices, or fits no format (the
/// latter signals a non-member or a bug).
inline CliqueFormat clique_format(const SignedGraph& g, const VertexSet& clique) {
  check_vertex_set(g, clique, "clique_format");
  if (clique.size() < 3)
    throw std::invalid_argument("clique_format: clique must have at least 3 vertices");
  for (size_t i = 0; i < clique.size(); ++i)
    for (size_t j = i + 1; j < clique.size(); ++j)
      if (g.sign(clique[i], clique[j]) == 0)
        throw std::invalid_argument("clique_format: vertices " +
                                    std::to_string(clique[i]) + "," +
                                    std::to_string(clique[j]) + " not adjacent");
  if (static_cast<size_t>(g.order()) == clique.size())
    throw std::runtime_error("clique_format: no outside vertices");
  if (auto r = detail::try_clique_format(g, clique, false)) return *r;
  if (auto r = detail::try_clique_format(negated(g), clique, true)) return *r;
  throw std::runtime_error("clique_format: no format matches");
}

// ---------------------------------------------------------------------------
// Partition text form: "[0-3|4-7]", blocks separated by '|', each block a
// comma list of indices or inclusive ranges.
// ---------------------------------------------------------------------------

inline std::string format_partition(const EquitablePartition& p) {
  std::string s = "[";
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += '|';
    const auto& blk = p.blocks[b];
    for (size_t i = 0; i < blk.size();) {
      size_t j = i;
      while (j + 1 < blk.size() && blk[j + 1] == blk[j] + 1) ++j;
      if (i) s += ',';
      s += std::to_string(blk[i]);
      if (j > i) s += "-" + std::to_string(blk[j]);
      i = j + 1;
    }
  }
  return s + "]";
}

inline EquitablePartition parse_partition(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("partition: expected [..|..], got \"" + text + "\"");
  EquitablePartition p;
  std::string body = text.substr(1, text.size() - 2);
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t bar = body.find('|', pos);
    std::string blk = body.substr(pos, bar == std::string::npos ? bar : bar - pos);
    VertexSet vs;
    size_t q = 0;
    while (q < blk.size()) {
      size_t comma = blk.find(',', q);
      std::string item = blk.substr(q, comma == std::string::npos ? comma : comma - q);
      size_t dash = item.find('-');
      try {
        if (dash == std::string::npos) {
          vs.push_back(std::stoi(item));
        } else {
          int a = std::stoi(item.substr(0, dash));
          int b = std::stoi(item.substr(dash + 1));
          if (b < a) throw std::invalid_argument("range");
          for (int v = a; v <= b; ++v) vs.push_back(v);
        }
      } catch (const std::exception&) {
        throw std::invalid_argument("partition: bad item \"" + item + "\"");
      }
      if (comma == std::string::npos) break;
      q = comma + 1;
    }
    if (vs.empty()) throw std::invalid_argument("partition: empty block");
    p.blocks.push_back(std::move(vs));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return p;
}

}  // namespace signed_spectra
