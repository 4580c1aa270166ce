#pragma once

// Generators for the twenty block-matrix families (the signed complete graphs
// TJ = J~_{m,l} and A1..A19), their claimed spectra, instance verification,
// and the m<->l negation identities. Each family is a table of block sizes
// and block kinds; one assembler builds them all, so every matrix definition
// is reviewable in one place.

#include <cstdio>

#include "signed_spectra/partitions.hpp"
#include "signed_spectra/spectrum.hpp"
#include "signed_spectra/switching_iso.hpp"

namespace signed_spectra {

enum class Family {
  TJ, A1, A2, A3, A4, A5, A6, A7, A8, A9, A10,
  A11, A12, A13, A14, A15, A16, A17, A18, A19,
};

inline const char* family_name(Family f) {
  static const char* names[] = {"TJ", "A1", "A2", "A3", "A4", "A5", "A6",
                                "A7", "A8", "A9", "A10", "A11", "A12", "A13",
                                "A14", "A15", "A16", "A17", "A18", "A19"};
  return names[static_cast<int>(f)];
}

inline const std::vector<Family>& all_families() {
  static const std::vector<Family> fs = {
      Family::TJ, Family::A1, Family::A2, Family::A3, Family::A4, Family::A5,
      Family::A6, Family::A7, Family::A8, Family::A9, Family::A10, Family::A11,
      Family::A12, Family::A13, Family::A14, Family::A15, Family::A16,
      Family::A17, Family::A18, Family::A19};
  return fs;
}

inline int family_arity(Family f) {
  switch (f) {
    case Family::A8:
    case Family::A9:
      return 1;
    case Family::A5:
    case Family::A6:
    case Family::A7:
      return 3;
    case Family::A12:
    case Family::A15:
      return 4;
    case Family::A16:
    case Family::A17:
      return 0;
    default:
      return 2;
  }
}

struct FamilyInstance {
  Family family = Family::TJ;
  std::vector<int> params;

  bool operator==(const FamilyInstance& o) const {
    return family == o.family && params == o.params;
  }
};

inline std::string to_string(const FamilyInstance& inst) {
  std::string s = family_name(inst.family);
  s += '(';
  for (size_t i = 0; i < inst.params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(inst.params[i]);
  }
  return s + ")";
}

/// Parses "A12(6,3,3,6)", "TJ(2,2)", "A16()" or bare "A16".
inline FamilyInstance parse_instance(const std::string& text) {
  size_t open = text.find('(');
  std::string name = text.substr(0, open);
  FamilyInstance inst;
  bool found = false;
  for (Family f : all_families())
    if (name == family_name(f)) {
      inst.family = f;
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown family \"" + name + "\"");
  if (open != std::string::npos) {
    if (text.back() != ')')
      throw std::invalid_argument("instance \"" + text + "\": missing ')'");
    std::string body = text.substr(open + 1, text.size() - open - 2);
    size_t pos = 0;
    while (pos < body.size()) {
      size_t comma = body.find(',', pos);
      std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
      try {
        inst.params.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("instance \"" + text + "\": bad parameter \"" + item +
                                    "\"");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (static_cast<int>(inst.params.size()) != family_arity(inst.family))
    throw std::invalid_argument("instance \"" + text + "\": " +
                                family_name(inst.family) + " takes " +
                                std::to_string(family_arity(inst.family)) +
                                " parameters");
  return inst;
}

namespace detail {

enum class BlockKind { O, J, NJ, JmI, ImJ, I, R, NR };

struct FamilyShape {
  std::vector<int> sizes;
  std::vector<std::vector<BlockKind>> grid;
};

inline void constraint(bool ok, const FamilyInstance& inst, const std::string& what) {
  if (!ok)
    throw std::invalid_argument(to_string(inst) + ": constraint violated: " + what);
}

inline bool pair_in(int a, int b, std::initializer_list<std::pair<int, int>> opts) {
  for (auto [x, y] : opts)
    if (a == x && b == y) return true;
  return false;
}

/// Validates parameters and lays out the block structure. K = J-I and
/// W = I-J keep the grid tables readable.
inline FamilyShape family_shape(const FamilyInstance& inst, bool allow_a5_k1) {
  using enum BlockKind;
  const BlockKind K = JmI, W = ImJ;
  const auto& p = inst.params;
  auto at = [&](size_t i) { return p[i]; };
  FamilyShape s;
  switch (inst.family) {
    case Family::TJ: {
      int m = at(0), l = at(1);
      constraint(m >= 2 && l >= 2, inst, "m,l >= 2");
      s.sizes = {m, l};
      s.grid = {{K, J}, {J, W}};
      break;
    }
    case Family::A1: {
      int m = at(0), l = at(1);
      constraint(m >= 2 && l >= 2, inst, "m,l >= 2");
      s.sizes = {m, 2 * l};
      s.grid = {{K, J}, {J, NR}};
      break;
    }
    case Family::A2: {
      int m = at(0), l = at(1);
      constraint(m >= 2 && l >= 2, inst, "m,l >= 2");
      s.sizes = {2 * m, 2 * l};
      s.grid = {{R, J}, {J, NR}};
      break;
    }
    case Family::A3: {
      int m = at(0), l = at(1);
      constraint(m >= 1 && l >= 1, inst, "m,l >= 1");
      s.sizes = {m, 1, 1, l};
      s.grid = {{K, J, J, O}, {J, O, J, NJ}, {J, J, O, J}, {O, NJ, J, W}};
      break;
    }
    case Family::A4: {
      int m = at(0), l = at(1);
      constraint(m >= 1 && l >= 1, inst, "m,l >= 1");
      s.sizes = {m, l, 2, 2};
      s.grid = {{K, J, J, O}, {J, W, O, J}, {J, O, R, O}, {O, J, O, NR}};
      break;
    }
    case Family::A5: {
      int m = at(0), l = at(1), k = at(2);
      constraint(pair_in(m, l, {{3, 8}, {4, 6}, {6, 5}}), inst,
                 "(m,l) in {(3,8),(4,6),(6,5)}");
      constraint(k >= (allow_a5_k1 ? 1 : 2), inst,
                 allow_a5_k1 ? "k >= 1" : "k >= 2 (k = 1 is the unsigned case)");
      s.sizes = {m, l, k};
      s.grid = {{K, J, J}, {J, K, O}, {J, O, W}};
      break;
    }
    case Family::A6: {
      int m = at(0), l = at(1), k = at(2);
      constraint(m >= 1, inst, "m >= 1");
      constraint(pair_in(l, k, {{3, 4}, {4, 3}}), inst, "(l,k) in {(3,4),(4,3)}");
      s.sizes = {m, l, 2 * k};
      s.grid = {{K, J, J}, {J, W, O}, {J, O, R}};
      break;
    }
    case Family::A7: {
      int m = at(0), l = at(1), k = at(2);
      constraint(m >= 1, inst, "m >= 1");
      constraint(pair_in(l, k, {{3, 3}, {4, 2}}), inst, "(l,k) in {(3,3),(4,2)}");
      s.sizes = {2 * m, l, 2 * k};
      s.grid = {{R, J, J}, {J, K, O}, {J, O, NR}};
      break;
    }
    case Family::A8: {
      int m = at(0);
      constraint(m >= 1, inst, "m >= 1");
      s.sizes = {2, m, 1, 4};
      s.grid = {{R, J, J, O}, {J, W, O, J}, {J, O, O, O}, {O, J, O, NR}};
      break;
    }
    case Family::A9: {
      int m = at(0);
      constraint(m >= 1, inst, "m >= 1");
      s.sizes = {2 * m, 2, 2, 1};
      s.grid = {{R, J, J, O}, {J, R, O, J}, {J, O, NR, O}, {O, J, O, O}};
      break;
    }
    case Family::A10: {
      int m = at(0), l = at(1);
      constraint(pair_in(m, l, {{3, 4}, {4, 3}}), inst, "(m,l) in {(3,4),(4,3)}");
      s.sizes = {m, l, m, l};
      s.grid = {{K, J, O, O}, {J, O, J, K}, {O, J, W, O}, {O, K, O, O}};
      break;
    }
    case Family::A11: {
      int m = at(0), l = at(1);
      constraint(pair_in(m, l, {{3, 4}, {4, 3}}), inst, "(m,l) in {(3,4),(4,3)}");
      s.sizes = {m, m, l, l};
      s.grid = {{K, J, J, O}, {J, W, O, J}, {J, O, O, K}, {O, J, K, O}};
      break;
    }
    case Family::A12: {
      int m = at(0), l = at(1), k = at(2), j = at(3);
      constraint((m == 6 && l == 3 && k == 3 && j == 6) ||
                     (m == 6 && l == 6 && k == 3 && j == 3) ||
                     (m == 6 && l == 4 && k == 3 && j == 4) ||
                     (m == 4 && l == 4 && k == 4 && j == 4),
                 inst, "(m,l,k,j) in {(6,3,3,6),(6,6,3,3),(6,4,3,4),(4,4,4,4)}");
      s.sizes = {m, l, k, j};
      s.grid = {{K, J, J, O}, {J, W, O, J}, {J, O, K, J}, {O, J, J, W}};
      break;
    }
    case Family::A13: {
      int m = at(0), l = at(1);
      constraint(pair_in(m, l, {{6, 2}, {5, 3}}), inst, "(m,l) in {(6,2),(5,3)}");
      s.sizes = {m, 2 * l, 4, 1};
      s.grid = {{K, J, O, O}, {J, NR, J, J}, {O, J, W, O}, {O, J, O, O}};
      break;
    }
    case Family::A14: {
      int m = at(0), l = at(1);
      constraint(pair_in(m, l, {{6, 2}, {5, 3}}), inst, "(m,l) in {(6,2),(5,3)}");
      s.sizes = {m, 2 * l, 4};
      s.grid = {{K, J, O}, {J, NR, J}, {O, J, NR}};
      break;
    }
    case Family::A15: {
      int m = at(0), l = at(1), k = at(2), j = at(3);
      constraint((m == 3 && l == 3 && k == 3 && j == 3) ||
                     (m == 4 && l == 3 && k == 3 && j == 2) ||
                     (m == 4 && l == 4 && k == 2 && j == 2),
                 inst, "(m,l,k,j) in {(3,3,3,3),(4,3,3,2),(4,4,2,2)}");
      s.sizes = {m, l, 2 * k, 2 * j};
      s.grid = {{K, J, J, O}, {J, W, O, J}, {J, O, R, J}, {O, J, J, NR}};
      break;
    }
    case Family::A16: {
      s.sizes = {2, 2, 3, 3};
      s.grid = {{R, J, J, O}, {J, NR, O, J}, {J, O, O, I}, {O, J, I, O}};
      break;
    }
    case Family::A17: {
      s.sizes = {2, 2, 2, 1, 2, 1};
      s.grid = {{R, J, J, J, O, O},  {J, NR, O, O, J, J}, {J, O, R, O, J, O},
                {J, O, O, O, O, O},  {O, J, J, O, NR, O}, {O, J, O, O, O, O}};
      break;
    }
    case Family::A18: {
      int m = at(0), l = at(1);
      constraint(pair_in(m, l, {{4, 3}, {3, 4}}), inst, "(m,l) in {(4,3),(3,4)}");
      s.sizes = {m, 2 * l, 1, 2};
      s.grid = {{K, J, J, O}, {J, NR, O, J}, {J, O, O, O}, {O, J, O, NR}};
      break;
    }
    case Family::A19: {
      int m = at(0), l = at(1);
      constraint(pair_in(m, l, {{3, 3}, {4, 2}}), inst, "(m,l) in {(3,3),(4,2)}");
      s.sizes = {2, m, 2 * l, 1, 2};
      s.grid = {{R, J, J, J, O},  {J, W, O, O, J},  {J, O, R, O, J},
                {J, O, O, O, O},  {O, J, J, O, NR}};
      break;
    }
  }
  return s;
}

inline int block_entry(BlockKind k, int i, int j, int rows, int cols) {
  switch (k) {
    case BlockKind::O:
      return 0;
    case BlockKind::J:
      return 1;
    case BlockKind::NJ:
      return -1;
    case BlockKind::JmI:
      return i == j ? 0 : 1;
    case BlockKind::ImJ:
      return i == j ? 0 : -1;
    case BlockKind::I:
      return i == j ? 1 : 0;
    case BlockKind::R:
      return i + j == rows - 1 ? 1 : 0;
    case BlockKind::NR:
      return i + j == rows - 1 ? -1 : 0;
  }
  (void)cols;
  return 0;
}

}  // namespace detail

inline int instance_order(const FamilyInstance& inst, bool allow_a5_k1 = false) {
  auto s = detail::family_shape(inst, allow_a5_k1);
  int n = 0;
  for (int b : s.sizes) n += b;
  return n;
}

inline void validate_instance(const FamilyInstance& inst, bool allow_a5_k1 = false) {
  detail::family_shape(inst, allow_a5_k1);
}

/// Builds the exact block matrix of the instance as a signed graph.
inline SignedGraph generate(const FamilyInstance& inst, bool allow_a5_k1 = false) {
  auto shape = detail::family_shape(inst, allow_a5_k1);
  const int b = static_cast<int>(shape.sizes.size());
  std::vector<int> offset(b + 1, 0);
  for (int i = 0; i < b; ++i) offset[i + 1] = offset[i] + shape.sizes[i];
  const int n = offset[b];
  std::vector<signed char> entries(size_t(n) * n, 0);
  for (int bi = 0; bi < b; ++bi)
    for (int bj = 0; bj < b; ++bj)
      for (int i = 0; i < shape.sizes[bi]; ++i)
        for (int j = 0; j < shape.sizes[bj]; ++j) {
          int v = detail::block_entry(shape.grid[bi][bj], i, j, shape.sizes[bi],
                                      shape.sizes[bj]);
          entries[size_t(offset[bi] + i) * n + (offset[bj] + j)] =
              static_cast<signed char>(v);
        }
  return from_entries(n, std::move(entries));
}

/// The defining block partition of the instance (consecutive vertex ranges).
inline EquitablePartition family_block_partition(const FamilyInstance& inst,
                                                 bool allow_a5_k1 = false) {
  auto shape = detail::family_shape(inst, allow_a5_k1);
  EquitablePartition p;
  int at = 0;
  for (int sz : shape.sizes) {
    VertexSet blk;
    for (int i = 0; i < sz; ++i) blk.push_back(at++);
    p.blocks.push_back(std::move(blk));
  }
  return p;
}

/// Per-block-pair perturbation that strips every all-ones component: after
/// adding it, each diagonal block is -I, +I, +-R or O, off-diagonal blocks
/// are +-I or O, and isolated single-vertex blocks get a +1 diagonal. The
/// result squares to the identity, which verify_j_perturbation checks.
inline Matrix<int> family_perturbation(const FamilyInstance& inst,
                                       bool allow_a5_k1 = false) {
  using detail::BlockKind;
  auto shape = detail::family_shape(inst, allow_a5_k1);
  const int b = static_cast<int>(shape.sizes.size());
  Matrix<int> eps(b, b);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      switch (shape.grid[i][j]) {
        case BlockKind::J:
        case BlockKind::JmI:
          eps(i, j) = -1;
          break;
        case BlockKind::NJ:
        case BlockKind::ImJ:
          eps(i, j) = +1;
          break;
        default:
          eps(i, j) = 0;
      }
    }
  // A single-vertex block whose row became all zero needs a nonzero diagonal.
  for (int i = 0; i < b; ++i) {
    if (shape.sizes[i] != 1) continue;
    bool zero_row = true;
    for (int j = 0; j < b && zero_row; ++j) {
      BlockKind k = shape.grid[i][j];
      int net = detail::block_entry(k, 0, 0, 1, 1) + eps(i, j);
      if (k != BlockKind::O && k != BlockKind::J && k != BlockKind::NJ) zero_row = false;
      if (net != 0) zero_row = false;
    }
    if (zero_row) eps(i, i) += 1;
  }
  return eps;
}

/// Multiplicities of -+1 plus the monic quadratic whose roots are the two
/// exceptional eigenvalues, stored as exact (r+s, r*s) pairs.
struct ClaimedSpectrum {
  int mult_plus1 = 0;
  int mult_minus1 = 0;
  IntPolynomial residual;
};

inline ClaimedSpectrum claimed_spectrum(const FamilyInstance& inst,
                                        bool allow_a5_k1 = false) {
  validate_instance(inst, allow_a5_k1);
  const auto& p = inst.params;
  int plus = 0, minus = 0;
  long long sum = 0, prod = 0;
  switch (inst.family) {
    case Family::TJ: {
      // From the quotient [[m-1,l],[m,1-l]] and trace(A^2) = (m+l)(m+l-1).
      int m = p[0], l = p[1];
      minus = m - 1, plus = l - 1;
      sum = m - l;
      prod = -(2LL * m * l - m - l + 1);
      break;
    }
    case Family::A1: {
      int m = p[0], l = p[1];
      minus = l + m - 2, plus = l;
      sum = m - 2;
      prod = 1 - m - 2LL * m * l;
      break;
    }
    case Family::A2: {
      int m = p[0], l = p[1];
      minus = plus = m + l - 1;
      sum = 0;
      prod = -(1 + 4LL * m * l);
      break;
    }
    case Family::A3: {
      int m = p[0], l = p[1];
      minus = m, plus = l;
      sum = m - l;  // roots m+1 and -(l+1)
      prod = -static_cast<long long>(m + 1) * (l + 1);
      break;
    }
    case Family::A4: {
      int m = p[0], l = p[1];
      minus = m + 1, plus = l + 1;
      sum = m - l;
      prod = -(2LL * m * l + m + l + 1);
      break;
    }
    case Family::A5: {
      int m = p[0], l = p[1], k = p[2];
      plus = k;
      if (m == 3) {  // (3,8)
        minus = 9;
        sum = 9 - k;
        prod = -(11LL * k + 10);
      } else if (m == 4) {  // (4,6)
        minus = 8;
        sum = 8 - k;
        prod = -(11LL * k + 9);
      } else {  // (6,5)
        minus = 9;
        sum = 9 - k;
        prod = -(14LL * k + 10);
      }
      (void)l;
      break;
    }
    case Family::A6: {
      int m = p[0], l = p[1];
      plus = 5;
      if (l == 3) {  // (l,k) = (3,4)
        minus = m + 4;
        sum = m - 1;
        prod = -(11LL * m + 2);
      } else {  // (4,3)
        minus = m + 3;
        sum = m - 2;
        prod = -(11LL * m + 3);
      }
      break;
    }
    case Family::A7: {
      // For (l,k) = (3,3) the pair is (1 +- 3 sqrt(8m+1))/2: the sum is 1
      // and trace(A^2) = 38m+12 forces the product -(18m+2).
      int m = p[0], l = p[1];
      minus = m + 4;
      if (l == 3) {  // (l,k) = (3,3)
        plus = m + 3;
        sum = 1;
        prod = -(18LL * m + 2);
      } else {  // (4,2)
        plus = m + 2;
        sum = 2;
        prod = -(16LL * m + 3);
      }
      break;
    }
    case Family::A8: {
      int m = p[0];
      minus = 3, plus = m + 2;
      sum = 1 - m;
      prod = -(6LL * m + 2);
      break;
    }
    case Family::A9: {
      int m = p[0];
      minus = m + 2, plus = m + 1;
      sum = 1;
      prod = -(8LL * m + 2);
      break;
    }
    case Family::A10:
      minus = plus = 6;
      sum = 0;
      prod = -36;
      break;
    case Family::A11:
      minus = plus = 6;
      sum = 0;
      prod = p[0] == 3 ? -45 : -52;
      break;
    case Family::A12: {
      // trace(A^2) separates the two 18-vertex cases: 216 for (6,3,3,6)
      // (pair +-10) and 234 for (6,6,3,3) (pair +-sqrt(109)).
      int m = p[0], l = p[1];
      if (m == 6 && l == 3) {
        minus = plus = 8;
        sum = 0;
        prod = -100;
      } else if (m == 6 && l == 6) {
        minus = plus = 8;
        sum = 0;
        prod = -109;
      } else if (m == 6 && l == 4) {
        minus = 8, plus = 7;  // trace 0 and r+s = 1 pin the asymmetric split
        sum = 1;
        prod = -92;
      } else {  // (4,4,4,4)
        minus = plus = 7;
        sum = 0;
        prod = -81;
      }
      break;
    }
    case Family::A13:
      if (p[0] == 6) {
        minus = 7, plus = 6;
        sum = 1;
        prod = -60;
      } else {  // (5,3)
        minus = plus = 7;
        sum = 0;
        prod = -72;
      }
      break;
    case Family::A14:
      if (p[0] == 6) {
        minus = 7, plus = 5;
        sum = 2;
        prod = -51;
      } else {  // (5,3)
        minus = 7, plus = 6;
        sum = 1;
        prod = -62;
      }
      break;
    case Family::A15: {
      int m = p[0], l = p[1];
      if (m == 3) {
        minus = plus = 8;
        sum = 0;
        prod = -85;
      } else if (l == 3) {  // (4,3,3,2)
        minus = 8, plus = 7;
        sum = 1;
        prod = -78;
      } else {  // (4,4,2,2)
        minus = plus = 7;
        sum = 0;
        prod = -73;
      }
      break;
    }
    case Family::A16:
      minus = plus = 4;
      sum = 0;
      prod = -17;
      break;
    case Family::A17:
      minus = plus = 4;
      sum = 0;
      prod = -20;
      break;
    case Family::A18:
      if (p[0] == 4) {  // (4,3)
        minus = 6, plus = 5;
        sum = 1;
        prod = -44;
      } else {  // (3,4)
        minus = plus = 6;
        sum = 0;
        prod = -45;
      }
      break;
    case Family::A19:
      if (p[0] == 3) {
        minus = plus = 6;
        sum = 0;
        prod = -40;
      } else {  // (4,2)
        minus = 5, plus = 6;
        sum = -1;
        prod = -38;
      }
      break;
  }
  ClaimedSpectrum c;
  c.mult_plus1 = plus;
  c.mult_minus1 = minus;
  c.residual = IntPolynomial{BigInt(prod), BigInt(-sum), BigInt(1)};
  int n = instance_order(inst, allow_a5_k1);
  if (plus + minus + 2 != n)
    throw std::logic_error(to_string(inst) + ": claimed multiplicities do not sum to " +
                           std::to_string(n));
  return c;
}

struct VerifyInstanceResult {
  bool ok = false;
  ExactSpectrum actual;
  ClaimedSpectrum claimed;
  std::string diff;

  explicit operator bool() const { return ok; }
};

/// Exact comparison of the generated matrix's spectrum with the claim.
inline VerifyInstanceResult verify_instance(const FamilyInstance& inst,
                                            bool allow_a5_k1 = false) {
  VerifyInstanceResult r;
  r.claimed = claimed_spectrum(inst, allow_a5_k1);
  r.actual = exact_spectrum(generate(inst, allow_a5_k1));
  r.ok = r.actual.mult_plus1 == r.claimed.mult_plus1 &&
         r.actual.mult_minus1 == r.claimed.mult_minus1 &&
         r.actual.residual == r.claimed.residual;
  if (!r.ok)
    r.diff = to_string(inst) + ": claimed (+1^" + std::to_string(r.claimed.mult_plus1) +
             ", -1^" + std::to_string(r.claimed.mult_minus1) + ", " +
             r.claimed.residual.str() + ") got (+1^" + std::to_string(r.actual.mult_plus1) +
             ", -1^" + std::to_string(r.actual.mult_minus1) + ", " +
             r.actual.residual.str() + ")";
  return r;
}

/// The m<->l negation identities: negating A2/A3/A4 (and TJ) is switching
/// isomorphic to swapping the two parameters.
inline bool identity_checks(Family f, int m, int l) {
  if (f != Family::A2 && f != Family::A3 && f != Family::A4 && f != Family::TJ)
    throw std::invalid_argument("identity_checks: only TJ, A2, A3, A4 have the m<->l identity");
  SignedGraph nleft = negated(generate(FamilyInstance{f, {m, l}}));
  SignedGraph right = generate(FamilyInstance{f, {l, m}});
  return switching_isomorphic(nleft, right).has_value();
}

/// All valid instances (default constraints, k >= 2 for A5) of order <= max_n.
inline std::vector<FamilyInstance> enumerate_instances(int max_n) {
  std::vector<FamilyInstance> out;
  auto add = [&](Family f, std::vector<int> params) {
    FamilyInstance inst{f, std::move(params)};
    if (instance_order(inst) <= max_n) out.push_back(std::move(inst));
  };
  for (int m = 2; m + 2 <= max_n; ++m)
    for (int l = 2; m + l <= max_n; ++l) add(Family::TJ, {m, l});
  for (int m = 2; m + 4 <= max_n; ++m)
    for (int l = 2; m + 2 * l <= max_n; ++l) add(Family::A1, {m, l});
  for (int m = 2; 2 * m + 4 <= max_n; ++m)
    for (int l = 2; 2 * m + 2 * l <= max_n; ++l) add(Family::A2, {m, l});
  for (int m = 1; m + 3 <= max_n; ++m)
    for (int l = 1; m + l + 2 <= max_n; ++l) add(Family::A3, {m, l});
  for (int m = 1; m + 5 <= max_n; ++m)
    for (int l = 1; m + l + 4 <= max_n; ++l) add(Family::A4, {m, l});
  for (auto [m, l] : {std::pair{3, 8}, {4, 6}, {6, 5}})
    for (int k = 2; m + l + k <= max_n; ++k) add(Family::A5, {m, l, k});
  for (auto [l, k] : {std::pair{3, 4}, {4, 3}})
    for (int m = 1; m + l + 2 * k <= max_n; ++m) add(Family::A6, {m, l, k});
  for (auto [l, k] : {std::pair{3, 3}, {4, 2}})
    for (int m = 1; 2 * m + l + 2 * k <= max_n; ++m) add(Family::A7, {m, l, k});
  for (int m = 1; m + 7 <= max_n; ++m) add(Family::A8, {m});
  for (int m = 1; 2 * m + 5 <= max_n; ++m) add(Family::A9, {m});
  for (auto [m, l] : {std::pair{3, 4}, {4, 3}}) {
    add(Family::A10, {m, l});
    add(Family::A11, {m, l});
  }
  for (auto t : {std::array{6, 3, 3, 6}, {6, 6, 3, 3}, {6, 4, 3, 4}, {4, 4, 4, 4}})
    add(Family::A12, {t[0], t[1], t[2], t[3]});
  for (auto [m, l] : {std::pair{6, 2}, {5, 3}}) {
    add(Family::A13, {m, l});
    add(Family::A14, {m, l});
  }
  for (auto t : {std::array{3, 3, 3, 3}, {4, 3, 3, 2}, {4, 4, 2, 2}})
    add(Family::A15, {t[0], t[1], t[2], t[3]});
  add(Family::A16, {});
  add(Family::A17, {});
  for (auto [m, l] : {std::pair{4, 3}, {3, 4}}) add(Family::A18, {m, l});
  for (auto [m, l] : {std::pair{3, 3}, {4, 2}}) add(Family::A19, {m, l});
  return out;
}

/// Instances of exactly order n.
inline std::vector<FamilyInstance> instances_of_order(int n) {
  std::vector<FamilyInstance> out;
  for (auto& inst : enumerate_instances(n))
    if (instance_order(inst) == n) out.push_back(inst);
  return out;
}

}  // namespace signed_spectra
