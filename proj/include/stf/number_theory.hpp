#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stf/rational.hpp"

namespace stf {

/// sign * prod(prime^exponent), primes ascending.
struct IntegerFactorization {
  int sign = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
};

/// Largest magnitude accepted by factorize() and squarefree_part().
inline const Integer kFactorBound = Integer(1) << 63;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);

/// Trial division up to 10^6, then Pollard-Brent rho on the cofactor.
/// Throws std::domain_error for n = 0 and std::out_of_range when |n| > 2^63.
IntegerFactorization factorize(const Integer& n);

/// The unique squarefree d with n = d*s^2, sign preserved.
Integer squarefree_part(const Integer& n);

/// Square-class representative of a nonzero rational.
Integer squarefree_part(const Rational& r);

/// Returns -1, 0 or +1. Throws std::invalid_argument when p is 2 or not prime.
int legendre_symbol(const Integer& a, std::uint64_t p);

/// Exponent of p in n (n != 0).
unsigned valuation(const Integer& n, std::uint64_t p);

}  // namespace stf
