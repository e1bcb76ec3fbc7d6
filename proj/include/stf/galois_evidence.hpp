#pragma once

// Evidence that charpoly(A D) has Galois group S_n for generic symmetric A and
// nonzero diagonal D: Frobenius cycle types sampled over primes, a sound
// (never falsely positive) S_n criterion, and the block-split identity.

#include <cstdint>
#include <map>
#include <vector>

#include "stf/matrix.hpp"
#include "stf/polynomial.hpp"

namespace stf {

using CycleType = std::vector<int>;  // sorted ascending, sums to deg f

struct CycleTypeSample {
  RationalPoly f;
  std::map<CycleType, long> entries;
  long primes_used = 0;
  long primes_skipped = 0;  // divided lc(f) * disc(f)
};

/// Cycle types of f mod p for the first prime_budget good primes p > prime_floor.
/// Throws NotSquarefree when f has a repeated root, std::invalid_argument on constants.
CycleTypeSample sample_cycle_types(const RationalPoly& f, long prime_budget, std::uint64_t prime_floor = 100);

enum class SnVerdict { kCertified, kInconclusive };
const char* to_string(SnVerdict v);

/// Sound for a sample of an irreducible f of degree n: Certified needs a type
/// with a prime part q, n/2 < q <= n, and the type (1, ..., 1, 2). For n <= 3
/// the transposition alone suffices; n = 1 is always Certified.
SnVerdict sn_certificate(const CycleTypeSample& sample, int n);

struct SpecReport {
  int n = 0;
  std::vector<Rational> d;
  std::uint64_t seed = 0;
  ExactMatrix a;
  RationalPoly f;
  bool separable = false;
  bool irreducible = false;
  SnVerdict sn_verdict = SnVerdict::kInconclusive;
  CycleTypeSample cycle_stats;
};

/// Samples A with entries in [-coeff_bound, coeff_bound], f = charpoly(A D).
/// Throws std::invalid_argument on a zero entry of d.
SpecReport generic_experiment(const std::vector<Rational>& d, long coeff_bound, long prime_budget,
                              std::uint64_t seed, std::uint64_t prime_floor = 100);

/// charpoly(T D) == (x - d_1 t_11) * charpoly(T' D') with T', D' the trailing
/// (n-1)-blocks. Throws std::invalid_argument unless T is symmetric with
/// t_1j = 0 for j >= 2 and sizes agree.
bool block_split_check(const std::vector<Rational>& d, const ExactMatrix& t);

}  // namespace stf
