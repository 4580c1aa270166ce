#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: characteristic polynomials by subset-DP cofactor expansion in plain
// int64 arithmetic, determinants by recursive cofactor expansion, and small
// random-input generators. Nothing here calls into the implementation being
// checked.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "signed_spectra/exact_linalg.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace oracles {

using signed_spectra::BigInt;
using signed_spectra::BigRat;
using signed_spectra::SignedGraph;

// Dense int64 polynomial, ascending coefficients, fixed length n+1.
using I64Poly = std::vector<long long>;

inline I64Poly poly_mul_trunc(const I64Poly& a, const I64Poly& b, size_t len) {
  I64Poly r(len, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// det(tI - A) for an integer matrix with small entries (|coeffs| stay in
/// int64 for n <= 8 with +-1 entries). Subset DP over column sets: row
/// popcount(S)-1 is expanded over the columns of S.
inline I64Poly oracle_char_poly_i64(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  const size_t len = size_t(n) + 1;
  std::vector<I64Poly> det(size_t(1) << n);
  det[0] = I64Poly(len, 0);
  det[0][0] = 1;
  for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
    int row = __builtin_popcount(s) - 1;
    I64Poly acc(len, 0);
    int sign = (row % 2 == 0) ? 1 : -1;  // (-1)^(row + column position)
    for (int j = 0; j < n; ++j) {
      if (!(s & (uint32_t(1) << j))) continue;
      // entry of tI - A at (row, j)
      I64Poly entry(2, 0);
      entry[0] = -a[row][j];
      entry[1] = (row == j) ? 1 : 0;
      I64Poly sub = poly_mul_trunc(entry, det[s & ~(uint32_t(1) << j)], len);
      for (size_t k = 0; k < len; ++k) acc[k] += sign * sub[k];
      sign = -sign;  // alternates over the set bits of s only
    }
    det[s] = std::move(acc);
  }
  return det[(size_t(1) << n) - 1];
}

inline I64Poly oracle_char_poly_i64(const SignedGraph& g) {
  std::vector<std::vector<long long>> a(g.order(), std::vector<long long>(g.order(), 0));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) a[i][j] = g.at(i, j);
  return oracle_char_poly_i64(a);
}

/// Divides p by (t - root) in place if the division is exact; returns success.
inline bool i64_synth_div(I64Poly& p, long long root) {
  I64Poly q(p.size(), 0);
  long long acc = 0;
  for (size_t i = p.size(); i-- > 1;) {
    acc = p[i] + acc * root;
    q[i - 1] = acc;
  }
  if (p[0] + acc * root != 0) return false;
  q.back() = 0;
  p = std::move(q);
  return true;
}

struct OracleSpectrum {
  int mult_plus1 = 0;
  int mult_minus1 = 0;
  int residual_degree = 0;
  I64Poly residual;  // length n+1, padded with zeros
};

inline OracleSpectrum oracle_pm1_split(const SignedGraph& g) {
  OracleSpectrum o;
  I64Poly p = oracle_char_poly_i64(g);
  auto deg = [](const I64Poly& q) {
    int d = -1;
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) d = static_cast<int>(i);
    return d;
  };
  while (deg(p) > 0 && i64_synth_div(p, +1)) ++o.mult_plus1;
  while (deg(p) > 0 && i64_synth_div(p, -1)) ++o.mult_minus1;
  o.residual = p;
  o.residual_degree = deg(p);
  return o;
}

/// Recursive cofactor determinant over exact rationals, for dim <= ~7.
inline BigRat oracle_det(const std::vector<std::vector<BigRat>>& m) {
  const size_t n = m.size();
  if (n == 0) return BigRat(1);
  if (n == 1) return m[0][0];
  BigRat acc = 0;
  int sign = 1;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] != 0) {
      std::vector<std::vector<BigRat>> sub(n - 1, std::vector<BigRat>(n - 1));
      for (size_t i = 1; i < n; ++i) {
        size_t cj = 0;
        for (size_t k = 0; k < n; ++k) {
          if (k == j) continue;
          sub[i - 1][cj++] = m[i][k];
        }
      }
      acc += sign * m[0][j] * oracle_det(sub);
    }
    sign = -sign;
  }
  return acc;
}

// --- random generators ------------------------------------------------------

inline SignedGraph random_signed_graph(std::mt19937& rng, int max_n = 8,
                                       double edge_p = 0.5, double neg_p = 0.4) {
  std::uniform_int_distribution<int> nd(0, max_n);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  int n = nd(rng);
  std::vector<signed_spectra::SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (ud(rng) < edge_p) edges.push_back({u, v, ud(rng) < neg_p ? -1 : +1});
  return signed_spectra::build(n, edges);
}

inline signed_spectra::VertexSet random_subset(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> bit(0, 1);
  signed_spectra::VertexSet x;
  for (int v = 0; v < n; ++v)
    if (bit(rng)) x.push_back(v);
  return x;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// All signed graphs on n labeled vertices (3^(n(n-1)/2) of them), streamed.
template <class F>
void for_all_signed_graphs(int n, F&& f) {
  const int pairs = n * (n - 1) / 2;
  std::vector<int> code(pairs, 0);
  for (;;) {
    std::vector<signed_spectra::SignedEdge> edges;
    int k = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (code[k] == 1) edges.push_back({u, v, +1});
        if (code[k] == 2) edges.push_back({u, v, -1});
        ++k;
      }
    f(signed_spectra::build(n, edges));
    int i = 0;
    while (i < pairs && code[i] == 2) code[i++] = 0;
    if (i == pairs) break;
    ++code[i];
  }
}

}  // namespace oracles
