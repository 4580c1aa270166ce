#pragma once

// Univariate polynomials with exact coefficients, ascending degree order.
// Canonical form never stores trailing zero coefficients.

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace signed_spectra {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> cs) : c_(cs) { trim(); }
  explicit Polynomial(std::vector<T> cs) : c_(std::move(cs)) { trim(); }

  static Polynomial one() { return Polynomial({T(1)}); }
  static Polynomial t() { return Polynomial({T(0), T(1)}); }

  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const std::vector<T>& coefficients() const { return c_; }

  T coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator-(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial operator*(const T& s) const {
    std::vector<T> r = c_;
    for (T& x : r) x *= s;
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const { return *this * T(-1); }

  T operator()(const T& x) const {
    T v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  /// p(-t), sign-adjusted per coefficient.
  Polynomial reflected() const {
    std::vector<T> r = c_;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Polynomial(std::move(r));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<T> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(int(i));
    return Polynomial(std::move(r));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      T a = c_[k];
      if (a == T(0)) continue;
      bool neg = a < T(0);
      T mag = neg ? T(-a) : a;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      bool unit = (mag == T(1));
      if (k == 0 || !unit) {
        std::ostringstream os;
        os << mag;
        s += os.str();
      }
      if (k > 0) {
        if (!unit) s += "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Quotient and remainder of a by b, valid whenever every leading-coefficient
/// division is exact in T (always for fields, or monic b over the integers).
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a,
                                               const Polynomial<T>& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  std::vector<T> rem(a.coefficients());
  int db = b.degree();
  if (int(rem.size()) - 1 < db) return {Polynomial<T>(), a};
  std::vector<T> quo(rem.size() - db, T(0));
  for (int k = int(rem.size()) - 1; k >= db; --k) {
    if (rem[k] == T(0)) continue;
    T q = rem[k] / b.leading();
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
  }
  return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

/// Exact division; throws if b does not divide a over T.
template <class T>
Polynomial<T> divide_exact(const Polynomial<T>& a, const Polynomial<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::invalid_argument("divide_exact: nonzero remainder");
  return q;
}

template <class T>
bool divides(const Polynomial<T>& b, const Polynomial<T>& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

}  // namespace signed_spectra
