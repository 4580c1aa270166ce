#pragma once

// Exact spectral analysis of signed graphs: multiplicities of the eigenvalues
// +1 and -1, the residual polynomial carrying everything else, membership in
// the two-exceptional-eigenvalue class, and the Gram/interlacing reports used
// as proof devices.

#include <cmath>
#include <optional>

#include "signed_spectra/exact_linalg.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Spectrum of a signed graph split as {+1^a, -1^b} plus an integer monic
/// polynomial whose roots (with multiplicity) are the remaining eigenvalues.
struct ExactSpectrum {
  int mult_plus1 = 0;
  int mult_minus1 = 0;
  IntPolynomial residual = IntPolynomial::one();

  int order() const { return mult_plus1 + mult_minus1 + std::max(residual.degree(), 0); }
  bool operator==(const ExactSpectrum& o) const {
    return mult_plus1 == o.mult_plus1 && mult_minus1 == o.mult_minus1 &&
           residual == o.residual;
  }
};

inline ExactSpectrum exact_spectrum(const SignedGraph& g) {
  Pm1Split s = extract_pm1(char_poly(adjacency_matrix<BigInt>(g)));
  return ExactSpectrum{s.mult_plus1, s.mult_minus1, std::move(s.residual)};
}

/// The pair (p +- sqrt(d)) / q with q in {1,2}; d = 0 collapses to the single
/// rational eigenvalue p/q. Equality is exact; doubles are display-only.
struct SurdPair {
  BigInt p = 0;
  BigInt d = 0;
  BigInt q = 1;

  double approx_plus() const {
    return (p.convert_to<double>() + std::sqrt(d.convert_to<double>())) /
           q.convert_to<double>();
  }
  double approx_minus() const {
    return (p.convert_to<double>() - std::sqrt(d.convert_to<double>())) /
           q.convert_to<double>();
  }

  bool operator==(const SurdPair& o) const { return p == o.p && d == o.d && q == o.q; }

  std::string str() const {
    std::ostringstream os;
    if (d == 0) {
      os << p;
      if (q != 1) os << "/" << q;
      return os.str();
    }
    BigInt r = boost::multiprecision::sqrt(d);
    if (r * r == d) {  // rational pair
      os << (p + r) / q << ", " << (p - r) / q;
      return os.str();
    }
    if (q == 1 && p == 0) {
      os << "+-sqrt(" << d << ")";
      return os.str();
    }
    os << "(" << p << " +- sqrt(" << d << "))";
    if (q != 1) os << "/" << q;
    return os.str();
  }
};

/// Roots of a monic degree-2 integer polynomial t^2 + b t + c as a surd pair.
inline SurdPair surd_from_quadratic(const IntPolynomial& r) {
  if (r.degree() != 2 || !r.is_monic())
    throw std::invalid_argument("surd_from_quadratic: need monic quadratic");
  BigInt b = r.coeff(1), c = r.coeff(0);
  BigInt p = -b, d = b * b - 4 * c, q = 2;
  if (d < 0) throw std::invalid_argument("surd_from_quadratic: complex roots");
  if (p % 2 == 0 && d % 4 == 0) {
    p /= 2;
    d /= 4;
    q = 1;
  }
  return SurdPair{p, d, q};
}

struct Membership {
  bool member = false;
  // Present when the residual has degree 2 (the surd pair) or degree 1
  // (d == 0, the single rational exceptional eigenvalue); absent for degree 0.
  std::optional<SurdPair> exceptional;
};

/// Membership in the class of signed graphs with all but at most two
/// eigenvalues equal to +-1.
inline Membership in_class_G(const SignedGraph& g) {
  ExactSpectrum s = exact_spectrum(g);
  Membership m;
  m.member = s.residual.degree() <= 2;
  if (s.residual.degree() == 2)
    m.exceptional = surd_from_quadratic(s.residual);
  else if (s.residual.degree() == 1)
    m.exceptional = SurdPair{-s.residual.coeff(0), 0, 1};
  return m;
}

struct GramReport {
  RationalMatrix matrix;
  Inertia inertia;
  bool psd = false;
  int rank = 0;
};

inline GramReport make_gram_report(RationalMatrix m) {
  GramReport r;
  r.inertia = inertia(m);
  r.psd = (r.inertia.n_neg == 0);
  r.rank = r.inertia.rank();
  r.matrix = std::move(m);
  return r;
}

/// Report on A^2 - I. For members with two exceptional eigenvalues
/// s < -1 < 1 < r this is psd of rank 2.
inline GramReport square_psd_rank_check(const SignedGraph& g) {
  auto a = adjacency_matrix<BigRat>(g);
  auto m = a * a;
  for (int i = 0; i < g.order(); ++i) m(i, i) -= 1;
  return make_gram_report(std::move(m));
}

/// Report on N N^T - I where N is the given row subset of A. By interlacing,
/// members with two exceptional eigenvalues give psd of rank at most 2.
inline GramReport gram_submatrix(const SignedGraph& g, const VertexSet& rows) {
  if (rows.empty()) throw std::invalid_argument("gram_submatrix: empty row set");
  check_vertex_set(g, rows, "gram_submatrix");
  const int k = static_cast<int>(rows.size());
  RationalMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      BigInt dot = 0;
      for (int v = 0; v < g.order(); ++v) dot += g.at(rows[i], v) * g.at(rows[j], v);
      m(i, j) = BigRat(dot) - (i == j ? 1 : 0);
    }
  return make_gram_report(std::move(m));
}

struct Deg1Violation {
  enum class Kind { degree_one, close_columns };
  Kind kind = Kind::degree_one;
  int u = -1;
  int v = -1;  // unused for degree_one

  bool operator==(const Deg1Violation& o) const {
    return kind == o.kind && u == o.u && v == o.v;
  }
};

/// Facts that contradict membership (for graphs without the isolated-edge
/// escape): vertices of degree one, and ordered column pairs (x,y) with
/// x.x == x.y differing in at most two coordinates. Pure reporter; non-members
/// may legitimately be flagged.
inline std::vector<Deg1Violation> deg1_checks(const SignedGraph& g) {
  std::vector<Deg1Violation> out;
  const int n = g.order();
  std::vector<char> in_isolated_edge(n, 0);
  for (const auto& c : components(g))
    if (c.size() == 2)
      for (int v : c) in_isolated_edge[v] = 1;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1 && !in_isolated_edge[v])
      out.push_back({Deg1Violation::Kind::degree_one, v, -1});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      long long xx = 0, xy = 0;
      int diff = 0;
      for (int w = 0; w < n; ++w) {
        xx += g.at(w, u) * g.at(w, u);
        xy += g.at(w, u) * g.at(w, v);
        if (g.at(w, u) != g.at(w, v)) ++diff;
      }
      if (xx == xy && diff <= 2)
        out.push_back({Deg1Violation::Kind::close_columns, u, v});
    }
  return out;
}

struct InterlacingCounts {
  int count_gt1 = 0;   // eigenvalues > 1
  int count_ltm1 = 0;  // eigenvalues < -1
};

/// Counts via inertia of A -+ I. An induced subgraph of a member must have
/// both counts at most 1.
inline InterlacingCounts interlacing_counts(const SignedGraph& g) {
  auto shifted = [&](int delta) {
    auto m = adjacency_matrix<BigRat>(g);
    for (int i = 0; i < g.order(); ++i) m(i, i) += delta;
    return m;
  };
  InterlacingCounts c;
  c.count_gt1 = inertia(shifted(-1)).n_pos;
  c.count_ltm1 = inertia(shifted(+1)).n_neg;
  return c;
}

}  // namespace signed_spectra
