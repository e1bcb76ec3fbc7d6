#include "stf/galois_evidence.hpp"

#include <algorithm>
#include <stdexcept>

#include "stf/errors.hpp"
#include "stf/number_theory.hpp"
#include "stf/poly_algorithms.hpp"
#include "stf/trace_form.hpp"

namespace stf {

CycleTypeSample sample_cycle_types(const RationalPoly& f, long prime_budget, std::uint64_t prime_floor) {
  if (f.degree() < 1) throw std::invalid_argument("sample_cycle_types: f must be non-constant");
  if (prime_budget < 0) throw std::invalid_argument("sample_cycle_types: negative prime budget");
  if (!is_separable(f)) throw NotSquarefree("sample_cycle_types: f has a repeated root");
  CycleTypeSample out;
  out.f = f;
  std::uint64_t p = prime_floor;
  while (out.primes_used < prime_budget) {
    p = next_prime(p);
    try {
      ++out.entries[cycle_type_mod_p(f, p)];
      ++out.primes_used;
    } catch (const BadPrime&) {
      ++out.primes_skipped;
    }
  }
  return out;
}

const char* to_string(SnVerdict v) { return v == SnVerdict::kCertified ? "Certified" : "Inconclusive"; }

SnVerdict sn_certificate(const CycleTypeSample& sample, int n) {
  if (n == 1) return SnVerdict::kCertified;
  CycleType transposition(static_cast<std::size_t>(n - 1), 1);
  transposition.back() = 2;
  const bool has_transposition = sample.entries.count(transposition) > 0;
  if (n <= 3) return has_transposition ? SnVerdict::kCertified : SnVerdict::kInconclusive;
  // A prime part q > n/2 is the only part divisible by q, so a power of that
  // element is a q-cycle; with transitivity the group is then primitive.
  bool has_long_prime_cycle = false;
  for (const auto& [type, count] : sample.entries) {
    for (int part : type) {
      if (2 * part > n && is_prime(static_cast<std::uint64_t>(part))) has_long_prime_cycle = true;
    }
  }
  return has_transposition && has_long_prime_cycle ? SnVerdict::kCertified : SnVerdict::kInconclusive;
}

SpecReport generic_experiment(const std::vector<Rational>& d, long coeff_bound, long prime_budget,
                              std::uint64_t seed, std::uint64_t prime_floor) {
  if (d.empty()) throw std::invalid_argument("generic_experiment: empty diagonal");
  for (const auto& x : d) {
    if (x.is_zero()) throw std::invalid_argument("generic_experiment: diagonal entries must be nonzero");
  }
  SpecReport r;
  r.n = static_cast<int>(d.size());
  r.d = d;
  r.seed = seed;
  r.a = sample_symmetric(seed, 0, r.n, coeff_bound);
  r.f = charpoly((r.a * diagonal_matrix(d)).eval());
  r.separable = is_separable(r.f);
  r.irreducible = r.separable && is_irreducible_over_rationals(r.f);
  if (r.separable) r.cycle_stats = sample_cycle_types(r.f, prime_budget, prime_floor);
  else r.cycle_stats.f = r.f;
  if (r.irreducible) r.sn_verdict = sn_certificate(r.cycle_stats, r.n);
  return r;
}

bool block_split_check(const std::vector<Rational>& d, const ExactMatrix& t) {
  const auto n = static_cast<Eigen::Index>(d.size());
  if (n == 0 || t.rows() != n || t.cols() != n) throw std::invalid_argument("block_split_check: size mismatch");
  if (!is_symmetric(t)) throw std::invalid_argument("block_split_check: T is not symmetric");
  for (Eigen::Index j = 1; j < n; ++j) {
    if (!t(0, j).is_zero()) throw std::invalid_argument("block_split_check: t_1j must vanish for j >= 2");
  }
  const RationalPoly whole = charpoly((t * diagonal_matrix(d)).eval());
  const std::vector<Rational> tail(d.begin() + 1, d.end());
  const ExactMatrix lower = t.bottomRightCorner(n - 1, n - 1);
  const RationalPoly rest = charpoly((lower * diagonal_matrix(tail)).eval());
  return whole == RationalPoly::linear(d[0] * t(0, 0)) * rest;
}

}  // namespace stf
