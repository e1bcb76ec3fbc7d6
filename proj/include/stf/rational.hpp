#pragma once

// Exact rationals over GMP, usable as an Eigen scalar.

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace stf {

using Integer = mpz_class;

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(const Integer& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  const mpq_class& raw() const { return v_; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact integer power, e >= 0.
Rational pow(const Rational& base, unsigned e);

/// Reduces a nonzero rational p/q to a nonzero integer of the same square
/// class (p*q).
Integer square_class_integer(const Rational& r);

}  // namespace stf

template <>
struct std::hash<stf::Rational> {
  std::size_t operator()(const stf::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};

namespace Eigen {

template <>
struct NumTraits<stf::Rational> : GenericNumTraits<stf::Rational> {
  using Real = stf::Rational;
  using NonInteger = stf::Rational;
  using Literal = stf::Rational;
  using Nested = stf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 60
  };
  static inline stf::Rational epsilon() { return 0; }
  static inline stf::Rational dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
