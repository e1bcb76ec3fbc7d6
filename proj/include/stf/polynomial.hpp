#pragma once

// Dense univariate polynomials, lowest degree first, over an exact field.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stf/rational.hpp"

namespace stf {

template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
  static Polynomial monomial(Scalar c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  /// x - root
  static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }
  const Scalar& lead() const { return c_.back(); }
  Scalar coeff(int k) const {
    return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : Scalar(0);
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Scalar(static_cast<int>(i));
    return Polynomial(std::move(out));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    Scalar inv = Scalar(1) / lead();
    for (auto& v : r.c_) v *= inv;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Scalar>{}, a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar inv_lead = Scalar(1) / b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    Scalar q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == Scalar(0)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <typename Scalar>
Polynomial<Scalar> operator%(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  return divmod(a, b).second;
}

/// Monic gcd; gcd(0, 0) = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    Polynomial<Scalar> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using RationalPoly = Polynomial<Rational>;

/// Human-readable form such as "x^2 - 2"; used in reports and diagnostics.
std::string to_string(const RationalPoly& f);

}  // namespace stf
