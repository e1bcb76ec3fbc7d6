#include "stf/quadform.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stf/errors.hpp"
#include "stf/number_theory.hpp"

namespace stf {

namespace {

Integer to_integer(std::uint64_t p) { return Integer(std::to_string(p)); }

// n = p^v * u with p not dividing u.
std::pair<unsigned long, Integer> split_valuation(const Integer& n, std::uint64_t p) {
  Integer u;
  Integer pz = to_integer(p);
  unsigned long v = mpz_remove(u.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return {v, u};
}

unsigned mod8(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return static_cast<unsigned>(r.get_ui());
}

// (u - 1)/2 and (u^2 - 1)/8 modulo 2 for odd u.
int epsilon2(const Integer& u) { return mod8(u) % 4 == 3 ? 1 : 0; }
int omega2(const Integer& u) {
  unsigned r = mod8(u);
  return (r == 3 || r == 5) ? 1 : 0;
}

int hilbert_integer(const Integer& a, const Integer& b, Place v) {
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const std::uint64_t p = v.prime_number();
  auto [alpha, u] = split_valuation(a, p);
  auto [beta, w] = split_valuation(b, p);
  if (p == 2) {
    int e = epsilon2(u) * epsilon2(w) + static_cast<int>(alpha % 2) * omega2(w) +
            static_cast<int>(beta % 2) * omega2(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int sign = 1;
  if ((alpha % 2 == 1) && (beta % 2 == 1) && p % 4 == 3) sign = -sign;
  if (beta % 2 == 1) sign *= legendre_symbol(u, p);
  if (alpha % 2 == 1) sign *= legendre_symbol(w, p);
  return sign;
}

void add_primes(const Integer& n, std::set<std::uint64_t>& out) {
  if (n == 0) return;
  for (auto [p, e] : factorize(n).factors) out.insert(p);
}

// Is d a square in Q_v?
bool is_local_square(const Rational& d, Place v) {
  if (v.is_infinite()) return d.sign() > 0;
  Integer n = square_class_integer(d);
  const std::uint64_t p = v.prime_number();
  auto [val, u] = split_valuation(n, p);
  if (val % 2 == 1) return false;
  if (p == 2) return mod8(u) == 1;
  return legendre_symbol(u, p) == 1;
}

Rational product(const std::vector<Rational>& xs) {
  Rational acc(1);
  for (const auto& x : xs) acc *= x;
  return acc;
}

std::vector<Rational> diagonal_of(const SymmetricForm& form) {
  return congruence_diagonalize(form.gram()).diagonal;
}

}  // namespace

Place Place::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("Place: " + std::to_string(p) + " is not prime");
  return Place(p);
}

std::string Place::to_string() const { return is_infinite() ? "inf" : std::to_string(p_); }

Place Place::parse(const std::string& s) {
  if (s == "inf") return infinity();
  std::size_t used = 0;
  unsigned long long p = 0;
  try {
    p = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed place: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("malformed place: '" + s + "'");
  return prime(p);
}

SymmetricForm::SymmetricForm(ExactMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0) throw std::invalid_argument("SymmetricForm: empty Gram matrix");
  if (!is_symmetric(gram_)) throw std::invalid_argument("SymmetricForm: Gram matrix is not symmetric");
  if (det(gram_).is_zero()) throw DegenerateForm("degenerate form");
}

SymmetricForm SymmetricForm::diagonal(const std::vector<Rational>& entries) {
  return SymmetricForm(diagonal_matrix(entries));
}

SymmetricForm SymmetricForm::transformed(const ExactMatrix& q) const {
  return SymmetricForm(q.transpose() * gram_ * q);
}

int hilbert_symbol(const Rational& a, const Rational& b, Place v) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("hilbert_symbol: zero argument");
  return hilbert_integer(square_class_integer(a), square_class_integer(b), v);
}

std::vector<Place> relevant_places(const std::vector<Rational>& entries) {
  std::set<std::uint64_t> primes{2};
  for (const auto& a : entries) {
    add_primes(a.numerator(), primes);
    add_primes(a.denominator(), primes);
  }
  std::vector<Place> out;
  for (auto p : primes) out.push_back(Place::prime(p));
  out.push_back(Place::infinity());
  return out;
}

int hasse_invariant(const std::vector<Rational>& diagonal, Place v) {
  int c = 1;
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) c *= hilbert_symbol(diagonal[i], diagonal[j], v);
  }
  return c;
}

WittInvariants invariants_of_diagonal(const std::vector<Rational>& diagonal) {
  WittInvariants out;
  out.dim = static_cast<int>(diagonal.size());
  int pos = 0, neg = 0;
  for (const auto& a : diagonal) {
    if (a.is_zero()) throw DegenerateForm("degenerate form");
    (a.sign() > 0 ? pos : neg)++;
  }
  out.signature = {pos, neg};
  out.disc = squarefree_part(product(diagonal));
  for (Place v : relevant_places(diagonal)) {
    if (hasse_invariant(diagonal, v) == -1) out.hasse_minus_one_at.push_back(v);
  }
  return out;
}

WittInvariants invariants(const SymmetricForm& form) { return invariants_of_diagonal(diagonal_of(form)); }

bool equivalent(const SymmetricForm& a, const SymmetricForm& b) {
  if (a.dim() != b.dim()) return false;
  return invariants(a) == invariants(b);
}

bool is_locally_isotropic(const std::vector<Rational>& diagonal, Place v) {
  const std::size_t n = diagonal.size();
  if (n <= 1) return false;
  if (v.is_infinite()) {
    bool pos = false, neg = false;
    for (const auto& a : diagonal) (a.sign() > 0 ? pos : neg) = true;
    return pos && neg;
  }
  const Rational d = product(diagonal);
  switch (n) {
    case 2:
      return is_local_square(-d, v);
    case 3:
      return hasse_invariant(diagonal, v) == hilbert_symbol(Rational(-1), -d, v);
    case 4:
      return !is_local_square(d, v) || hasse_invariant(diagonal, v) == hilbert_symbol(Rational(-1), Rational(-1), v);
    default:
      return true;
  }
}

bool is_isotropic(const SymmetricForm& form) {
  std::vector<Rational> diagonal = diagonal_of(form);
  if (diagonal.size() == 2) {
    return squarefree_part(-product(diagonal)) == 1;
  }
  for (Place v : relevant_places(diagonal)) {
    if (!is_locally_isotropic(diagonal, v)) return false;
  }
  return diagonal.size() > 1;
}

}  // namespace stf
