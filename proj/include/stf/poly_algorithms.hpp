#pragma once

// Algorithms on RationalPoly: separability, traces in Q[x]/(f), reduction
// modulo primes and the complete irreducibility test over Q.

#include <cstdint>
#include <vector>

#include "stf/modpoly.hpp"
#include "stf/polynomial.hpp"
#include "stf/rational.hpp"

namespace stf {

using IntegerPoly = std::vector<Integer>;  // lowest degree first, no trailing zeros

/// Scales f to a primitive integer polynomial with positive leading coefficient.
IntegerPoly primitive_integer_part(const RationalPoly& f);

/// f mod p; coefficients must be integers.
ModPoly reduce_mod_p(const IntegerPoly& f, std::uint64_t p);

/// gcd(f, f') is constant. Throws std::invalid_argument on constants.
bool is_separable(const RationalPoly& f);

/// Power sums of the roots of monic f: entries Tr(x^0) .. Tr(x^count).
std::vector<Rational> power_traces(const RationalPoly& f, int count);

/// Tr_{Q[x]/(f)/Q}(g mod f) for monic f.
Rational trace_of_element(const RationalPoly& f, const RationalPoly& g);

/// Sorted degrees of the irreducible factors of f mod p. Throws BadPrime when
/// p divides the leading coefficient or the discriminant of the primitive
/// integer form of f.
std::vector<int> cycle_type_mod_p(const RationalPoly& f, std::uint64_t p);

/// Coefficient bound for lc(f)/lc(h) * h over every integer factor h of f.
Integer factor_coefficient_bound(const IntegerPoly& f);

/// Complete decision by Zassenhaus: a good prime, modular factorization,
/// quadratic Hensel lifting, then factor-subset recombination.
bool is_irreducible_over_rationals(const RationalPoly& f);

/// Diagnostics from the last phase of the irreducibility test.
struct IrreducibilityTrace {
  bool irreducible = false;
  std::uint64_t prime = 0;           // 0 when no modular work was needed
  int modular_factor_count = 0;
  Integer lifted_modulus = 0;        // p^(2^j) reached by Hensel lifting
  long subsets_tested = 0;
  IntegerPoly factor;                // a nontrivial primitive factor, if found
};
IrreducibilityTrace analyze_irreducibility(const RationalPoly& f);

}  // namespace stf
