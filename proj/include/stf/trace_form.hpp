#pragma once

// Constructive realization of a non-degenerate form over Q as a scaled trace
// form x -> Tr_{F/Q}(alpha x^2), with an exactly checkable certificate.
//
// Pipeline: diagonalize D, search symmetric integer A until charpoly(A D) is
// separable and irreducible, take F = Q[x]/(f) with f = charpoly(A D), use the
// Krylov basis v, Mv, ..., M^(n-1) v of M = A D, and recover alpha from the
// Hankel sequence h_m = v^T D M^m v through the trace pairing.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stf/matrix.hpp"
#include "stf/polynomial.hpp"
#include "stf/quadform.hpp"

namespace stf {

struct SearchPolicy {
  std::uint64_t seed = 0;
  std::vector<long> coeff_bound_schedule{1, 2, 3, 5, 9};
  int max_tries_per_bound = 200;
  /// Candidates evaluated concurrently; results do not depend on this.
  int threads = 1;

  /// Throws std::invalid_argument unless bounds are positive and strictly
  /// increasing and the try count is positive.
  void validate() const;
};

struct Certificate {
  SymmetricForm D;
  ExactMatrix A;
  RationalPoly f;
  RationalPoly alpha;
  ExactMatrix P;
  ExactMatrix gram;
  std::uint64_t seed = 0;
  long tries = 0;
};

/// G_ij = Tr(alpha * x^(i+j)) in the power basis of Q[x]/(f).
/// Throws std::invalid_argument when alpha = 0 mod f or f is not monic.
ExactMatrix scaled_trace_gram(const RationalPoly& f, const RationalPoly& alpha);

/// The alpha (deg < n) whose trace sequence Tr(alpha x^m), m = 0..2n-2, is h.
/// Throws InconsistentHankel when h[n..2n-2] do not match.
RationalPoly solve_alpha(const RationalPoly& f, const std::vector<Rational>& h);

/// The counter-th candidate of a seeded search: independent uniform integers in
/// [-bound, bound] on and above the diagonal, mirrored below it.
ExactMatrix sample_symmetric(std::uint64_t seed, std::uint64_t counter, Eigen::Index n, long bound);

/// Builds the certificate for a given symmetric A and cyclic vector v of A*D.
/// Throws SingularKrylov when v is not cyclic.
Certificate certify(const SymmetricForm& D, const ExactMatrix& A, const ExactVector& v);

/// Randomized search for A, then certify(). Throws SearchExhausted.
Certificate realize(const SymmetricForm& D, const SearchPolicy& policy = {});

enum class CertificateClause {
  kValid,
  kShapeMismatch,
  kANotSymmetric,
  kNotSeparable,
  kNotIrreducible,
  kCharpolyMismatch,
  kAlphaZero,
  kGramMismatch,
  kPSingular,
  kCongruenceMismatch,
};

/// Stable snake_case name, e.g. "gram_mismatch".
std::string to_string(CertificateClause clause);

struct Verdict {
  CertificateClause clause = CertificateClause::kValid;
  bool valid() const { return clause == CertificateClause::kValid; }
};

/// Checks every clause exactly and reports the first one that fails.
Verdict verify_certificate(const Certificate& c);

}  // namespace stf
