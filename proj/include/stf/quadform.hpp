#pragma once

// Non-degenerate quadratic forms over Q and their complete invariants
// (dimension, discriminant, signature, Hasse invariants).

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stf/matrix.hpp"
#include "stf/rational.hpp"

namespace stf {

/// A place of Q: a prime, or the real place.
class Place {
 public:
  static Place infinity() { return Place(0); }
  static Place prime(std::uint64_t p);

  bool is_infinite() const { return p_ == 0; }
  std::uint64_t prime_number() const { return p_; }
  /// "inf" or the decimal prime.
  std::string to_string() const;
  static Place parse(const std::string& s);

  /// Finite places in increasing order, then infinity.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    auto key = [](const Place& x) { return x.p_ == 0 ? UINT64_MAX : x.p_; };
    return key(a) <=> key(b);
  }
  friend bool operator==(const Place&, const Place&) = default;

 private:
  explicit Place(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Symmetric Gram matrix with nonzero determinant.
class SymmetricForm {
 public:
  /// Throws std::invalid_argument if gram is empty or not symmetric,
  /// DegenerateForm if det(gram) = 0.
  explicit SymmetricForm(ExactMatrix gram);
  static SymmetricForm diagonal(const std::vector<Rational>& entries);

  int dim() const { return static_cast<int>(gram_.rows()); }
  const ExactMatrix& gram() const { return gram_; }

  /// The form in basis q: q^T * gram * q. q must be invertible.
  SymmetricForm transformed(const ExactMatrix& q) const;

 private:
  ExactMatrix gram_;
};

struct WittInvariants {
  int dim = 0;
  Integer disc;                      // signed squarefree representative of det
  std::pair<int, int> signature;     // (positives, negatives)
  std::vector<Place> hasse_minus_one_at;  // sorted

  friend bool operator==(const WittInvariants&, const WittInvariants&) = default;
};

/// (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_v.
/// Throws std::invalid_argument for zero arguments or a composite place.
int hilbert_symbol(const Rational& a, const Rational& b, Place v);

/// The finite superset of places outside which every Hilbert symbol of the
/// given entries is +1: infinity, 2 and every prime dividing a numerator or
/// denominator.
std::vector<Place> relevant_places(const std::vector<Rational>& entries);

/// Hasse invariant prod_{i<j} (a_i, a_j)_v of a diagonal form.
int hasse_invariant(const std::vector<Rational>& diagonal, Place v);

/// Needs the prime factors of every diagonal entry; throws std::out_of_range
/// when one of them exceeds the factorization bound (2^63).
WittInvariants invariants(const SymmetricForm& form);
WittInvariants invariants_of_diagonal(const std::vector<Rational>& diagonal);

/// Hasse-Minkowski: equal dimension, discriminant, signature and Hasse invariants.
bool equivalent(const SymmetricForm& a, const SymmetricForm& b);

/// Isotropy over Q_v of a diagonal form (dimension-split local criteria).
bool is_locally_isotropic(const std::vector<Rational>& diagonal, Place v);

/// Isotropy over Q, decided place by place over relevant_places().
bool is_isotropic(const SymmetricForm& form);

}  // namespace stf
