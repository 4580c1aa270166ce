#pragma once

// Exact integer/rational matrix kernels. Everything spectral in this library
// runs through these three operations; there is no floating point anywhere on
// the verification path.

#include <boost/multiprecision/cpp_int.hpp>

#include "signed_spectra/matrix.hpp"
#include "signed_spectra/polynomial.hpp"

namespace signed_spectra {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using IntPolynomial = Polynomial<BigInt>;
using RationalMatrix = Matrix<BigRat>;

struct Inertia {
  int n_pos = 0;
  int n_zero = 0;
  int n_neg = 0;

  int rank() const { return n_pos + n_neg; }
  bool operator==(const Inertia& o) const {
    return n_pos == o.n_pos && n_zero == o.n_zero && n_neg == o.n_neg;
  }
};

/// Eigenvalue sign counts of an exactly symmetric rational matrix, by
/// Sylvester's law of inertia. Symmetric congruence elimination: a 1x1 pivot
/// on the first nonzero diagonal entry when one exists, otherwise a 2x2 pivot
/// on the lexicographically first nonzero off-diagonal entry of the active
/// block (the all-zero-diagonal case every adjacency matrix starts in).
inline Inertia inertia(RationalMatrix s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("inertia: matrix not square");
  if (!s.is_symmetric()) throw std::invalid_argument("inertia: matrix not symmetric");
  const int n = s.rows();
  std::vector<int> active;
  for (int i = 0; i < n; ++i) active.push_back(i);
  Inertia out;

  auto eliminate_1x1 = [&](int p) {
    const BigRat d = s(p, p);
    if (d > 0)
      ++out.n_pos;
    else
      ++out.n_neg;
    for (int i : active) {
      if (i == p || s(i, p) == 0) continue;
      const BigRat f = s(i, p) / d;
      for (int j : active) {
        if (j == p) continue;
        s(i, j) -= f * s(p, j);
      }
    }
  };

  while (!active.empty()) {
    int pivot = -1;
    for (int i : active)
      if (s(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot >= 0) {
      eliminate_1x1(pivot);
      active.erase(std::find(active.begin(), active.end(), pivot));
      continue;
    }
    // Diagonal of the active block is all zero: find first off-diagonal entry.
    int pi = -1, pj = -1;
    for (size_t a = 0; a < active.size() && pi < 0; ++a)
      for (size_t b = a + 1; b < active.size(); ++b)
        if (s(active[a], active[b]) != 0) {
          pi = active[a];
          pj = active[b];
          break;
        }
    if (pi < 0) {
      out.n_zero += static_cast<int>(active.size());
      break;
    }
    // 2x2 pivot [[0,b],[b,0]]: contributes one positive and one negative
    // eigenvalue; Schur complement S[k][l] -= (S[k][i]*S[j][l] + S[k][j]*S[i][l])/b.
    const BigRat b = s(pi, pj);
    ++out.n_pos;
    ++out.n_neg;
    for (int k : active) {
      if (k == pi || k == pj) continue;
      const BigRat ki = s(k, pi), kj = s(k, pj);
      if (ki == 0 && kj == 0) continue;
      for (int l : active) {
        if (l == pi || l == pj) continue;
        s(k, l) -= (ki * s(pj, l) + kj * s(pi, l)) / b;
      }
    }
    active.erase(std::find(active.begin(), active.end(), pi));
    active.erase(std::find(active.begin(), active.end(), pj));
  }
  return out;
}

/// det(tI - M) as an exact monic integer polynomial, by Faddeev-LeVerrier.
/// The trace divisions are exact for integer input; this is asserted.
inline IntPolynomial char_poly(const Matrix<BigInt>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const int n = m.rows();
  std::vector<BigInt> c(size_t(n) + 1, BigInt(0));
  c[n] = 1;
  if (n == 0) return IntPolynomial(std::move(c));
  Matrix<BigInt> am = m;  // A * M_1
  c[n - 1] = -am.trace();
  for (int k = 2; k <= n; ++k) {
    Matrix<BigInt> mk = am;
    for (int i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    am = m * mk;
    BigInt t = am.trace();
    if (t % k != 0) throw std::logic_error("char_poly: inexact trace division");
    c[n - k] = -t / k;
  }
  return IntPolynomial(std::move(c));
}

struct Pm1Split {
  int mult_plus1 = 0;   // multiplicity of root +1
  int mult_minus1 = 0;  // multiplicity of root -1
  IntPolynomial residual;
};

/// Factors p = (t-1)^a (t+1)^b q with q(1), q(-1) both nonzero, by repeated
/// exact synthetic division. Requires monic input.
inline Pm1Split extract_pm1(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("extract_pm1: polynomial not monic");
  Pm1Split out;
  std::vector<BigInt> c = p.coefficients();
  auto synth = [&](int root) -> bool {
    // c / (t - root): remainder is the evaluation at root.
    std::vector<BigInt> q(c.size() - 1);
    BigInt acc = 0;
    for (size_t i = c.size(); i-- > 1;) {
      acc = c[i] + acc * root;
      q[i - 1] = acc;
    }
    BigInt rem = c[0] + acc * root;
    if (rem != 0) return false;
    c = std::move(q);
    return true;
  };
  while (c.size() > 1 && synth(+1)) ++out.mult_plus1;
  while (c.size() > 1 && synth(-1)) ++out.mult_minus1;
  out.residual = IntPolynomial(std::move(c));
  return out;
}

// --- small helpers over integer polynomials -------------------------------

inline BigInt int_content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  return g;
}

/// Primitive part with positive leading coefficient; zero maps to zero.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = int_content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coefficients();
  for (BigInt& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

/// gcd in Z[t] up to sign, primitive pseudo-remainder sequence.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    // Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b stays integral.
    int da = a.degree(), db = b.degree();
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    BigInt lb = b.leading();
    IntPolynomial scaled = a;
    for (int i = 0; i < da - db + 1; ++i) scaled = scaled * lb;
    auto [q, r] = divmod(scaled, b);
    (void)q;
    a = b;
    b = primitive_part(r);
  }
  return primitive_part(a);
}

/// Squarefree part: same roots, all with multiplicity one.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : IntPolynomial::one();
  IntPolynomial g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return primitive_part(p);
  // Integral because g divides p in Q[t] and both sides are primitive-scaled.
  BigInt lg = g.leading();
  IntPolynomial scaled = p;
  for (int i = 0; i < p.degree() - g.degree() + 1; ++i) scaled = scaled * lg;
  auto [q, r] = divmod(scaled, g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: gcd does not divide");
  return primitive_part(q);
}

/// True iff every complex root of q is a root of p (multiplicity ignored).
inline bool roots_subset(const IntPolynomial& q, const IntPolynomial& p) {
  if (q.degree() <= 0) return true;
  IntPolynomial sf = squarefree_part(q);
  // sf | p over Q[t]; p monic in all our uses, but scale to be safe.
  BigInt ls = sf.leading();
  IntPolynomial scaled = p;
  for (int i = 0; i < p.degree() - sf.degree() + 1; ++i) scaled = scaled * ls;
  return divmod(scaled, sf).second.is_zero();
}

}  // namespace signed_spectra
