#include "stf/trace_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "stf/errors.hpp"
#include "stf/poly_algorithms.hpp"
#include "stf/random.hpp"

namespace stf {

namespace {

constexpr std::size_t idx(Eigen::Index i) { return static_cast<std::size_t>(i); }

bool acceptable(const RationalPoly& f) { return is_separable(f) && is_irreducible_over_rationals(f); }

ExactVector unit_vector(Eigen::Index n, Eigen::Index k) {
  ExactVector v = ExactVector::Zero(n);
  v(k) = Rational(1);
  return v;
}

}  // namespace

ExactMatrix sample_symmetric(std::uint64_t seed, std::uint64_t counter, Eigen::Index n, long bound) {
  if (bound <= 0) throw std::invalid_argument("sample_symmetric: bound must be positive");
  SplitMix64 rng = stream_for(seed, counter);
  ExactMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      a(i, j) = Rational(rng.uniform(-bound, bound));
      a(j, i) = a(i, j);
    }
  }
  return a;
}

void SearchPolicy::validate() const {
  if (coeff_bound_schedule.empty()) throw std::invalid_argument("SearchPolicy: empty bound schedule");
  for (std::size_t i = 0; i < coeff_bound_schedule.size(); ++i) {
    if (coeff_bound_schedule[i] <= 0) throw std::invalid_argument("SearchPolicy: bounds must be positive");
    if (i > 0 && coeff_bound_schedule[i] <= coeff_bound_schedule[i - 1]) {
      throw std::invalid_argument("SearchPolicy: bounds must be strictly increasing");
    }
  }
  if (max_tries_per_bound <= 0) throw std::invalid_argument("SearchPolicy: try count must be positive");
  if (threads <= 0) throw std::invalid_argument("SearchPolicy: thread count must be positive");
}

ExactMatrix scaled_trace_gram(const RationalPoly& f, const RationalPoly& alpha) {
  if (!f.is_monic()) throw std::invalid_argument("scaled_trace_gram: f must be monic");
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("scaled_trace_gram: f must be non-constant");
  const RationalPoly a = alpha % f;
  if (a.is_zero()) throw std::invalid_argument("scaled_trace_gram: alpha is zero mod f");
  // Tr(a x^m) = sum_k a_k p_{k+m}.
  const std::vector<Rational> p = power_traces(f, 3 * n);
  std::vector<Rational> h(2 * static_cast<std::size_t>(n) - 1, Rational(0));
  for (std::size_t m = 0; m < h.size(); ++m) {
    for (int k = 0; k <= a.degree(); ++k) h[m] += a.coeff(k) * p[m + static_cast<std::size_t>(k)];
  }
  ExactMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = h[idx(i + j)];
  }
  return g;
}

RationalPoly solve_alpha(const RationalPoly& f, const std::vector<Rational>& h) {
  if (!f.is_monic()) throw std::invalid_argument("solve_alpha: f must be monic");
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("solve_alpha: f must be non-constant");
  if (h.size() != 2 * static_cast<std::size_t>(n) - 1) {
    throw std::invalid_argument("solve_alpha: expected 2n-1 Hankel entries");
  }
  const std::vector<Rational> p = power_traces(f, 3 * n);
  ExactMatrix t(n, n);
  ExactVector rhs(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = 0; k < n; ++k) t(m, k) = p[idx(m + k)];
    rhs(m) = h[idx(m)];
  }
  ExactVector a;
  try {
    a = solve(t, rhs);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("solve_alpha: trace pairing is singular (f not separable)");
  }
  for (std::size_t m = static_cast<std::size_t>(n); m < h.size(); ++m) {
    Rational tr(0);
    for (Eigen::Index k = 0; k < n; ++k) tr += a(k) * p[m + idx(k)];
    if (tr != h[m]) throw InconsistentHankel("solve_alpha: Hankel entry " + std::to_string(m) + " is inconsistent");
  }
  std::vector<Rational> coeffs(a.data(), a.data() + a.size());
  return RationalPoly(std::move(coeffs));
}

Certificate certify(const SymmetricForm& D, const ExactMatrix& A, const ExactVector& v) {
  const Eigen::Index n = D.dim();
  if (A.rows() != n || A.cols() != n || v.size() != n) throw std::invalid_argument("certify: dimension mismatch");
  if (!is_symmetric(A)) throw std::invalid_argument("certify: A is not symmetric");
  const ExactMatrix m = A * D.gram();
  RationalPoly f = charpoly(m);
  ExactMatrix p = krylov_matrix(m, v);
  // h_k = v^T D M^k v, k = 0..2n-2.
  std::vector<Rational> h;
  ExactVector dv = D.gram() * v;
  ExactVector w = v;
  for (Eigen::Index k = 0; k <= 2 * n - 2; ++k) {
    h.push_back(dv.dot(w));
    w = (m * w).eval();
  }
  RationalPoly alpha = solve_alpha(f, h);
  ExactMatrix gram = scaled_trace_gram(f, alpha);
  return Certificate{D, A, std::move(f), std::move(alpha), std::move(p), std::move(gram), 0, 0};
}

Certificate realize(const SymmetricForm& D, const SearchPolicy& policy) {
  policy.validate();
  const Eigen::Index n = D.dim();
  const auto diag = congruence_diagonalize(D.gram());
  const ExactMatrix& q = diag.q;

  if (n == 1) {
    Certificate c = certify(D, ExactMatrix::Identity(1, 1), unit_vector(1, 0));
    c.seed = policy.seed;
    return c;
  }

  const ExactMatrix d_prime = diagonal_matrix(diag.diagonal);
  const auto threads = static_cast<std::uint64_t>(policy.threads);
  std::uint64_t counter = 0;
  for (long bound : policy.coeff_bound_schedule) {
    const std::uint64_t end = counter + static_cast<std::uint64_t>(policy.max_tries_per_bound);
    while (counter < end) {
      const std::uint64_t batch = std::min(threads, end - counter);
      std::vector<char> ok(batch, 0);
      std::vector<ExactMatrix> cand(batch);
      auto work = [&](std::uint64_t i) {
        cand[i] = sample_symmetric(policy.seed, counter + i, n, bound);
        ok[i] = acceptable(charpoly((cand[i] * d_prime).eval())) ? 1 : 0;
      };
      if (batch == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (std::uint64_t i = 0; i < batch; ++i) pool.emplace_back(work, i);
        for (auto& t : pool) t.join();
      }
      for (std::uint64_t i = 0; i < batch; ++i) {
        if (!ok[i]) continue;
        // A' D' and A D = Q A' D' Q^-1 share f; e_1 maps to Q e_1.
        const ExactMatrix a = q * cand[i] * q.transpose();
        Certificate c = certify(D, a, q * unit_vector(n, 0));
        c.seed = policy.seed;
        c.tries = static_cast<long>(counter + i + 1);
        if (!verify_certificate(c).valid()) throw std::logic_error("realize: produced an invalid certificate");
        return c;
      }
      counter += batch;
    }
  }
  throw SearchExhausted("realize: no separable irreducible characteristic polynomial found");
}

std::string to_string(CertificateClause clause) {
  switch (clause) {
    case CertificateClause::kValid: return "valid";
    case CertificateClause::kShapeMismatch: return "shape_mismatch";
    case CertificateClause::kANotSymmetric: return "a_not_symmetric";
    case CertificateClause::kNotSeparable: return "not_separable";
    case CertificateClause::kNotIrreducible: return "not_irreducible";
    case CertificateClause::kCharpolyMismatch: return "charpoly_mismatch";
    case CertificateClause::kAlphaZero: return "alpha_zero";
    case CertificateClause::kGramMismatch: return "gram_mismatch";
    case CertificateClause::kPSingular: return "p_singular";
    case CertificateClause::kCongruenceMismatch: return "congruence_mismatch";
  }
  return "unknown";
}

Verdict verify_certificate(const Certificate& c) {
  using C = CertificateClause;
  const Eigen::Index n = c.D.dim();
  auto square_n = [n](const ExactMatrix& m) { return m.rows() == n && m.cols() == n; };
  if (!square_n(c.A) || !square_n(c.P) || !square_n(c.gram) || c.f.degree() != n || !c.f.is_monic() ||
      c.alpha.degree() >= n) {
    return {C::kShapeMismatch};
  }
  if (!is_symmetric(c.A)) return {C::kANotSymmetric};
  if (!is_separable(c.f)) return {C::kNotSeparable};
  if (!is_irreducible_over_rationals(c.f)) return {C::kNotIrreducible};
  if (charpoly((c.A * c.D.gram()).eval()) != c.f) return {C::kCharpolyMismatch};
  if (c.alpha.is_zero()) return {C::kAlphaZero};
  if (scaled_trace_gram(c.f, c.alpha) != c.gram) return {C::kGramMismatch};
  if (det(c.P).is_zero()) return {C::kPSingular};
  if (c.P.transpose() * c.D.gram() * c.P != c.gram) return {C::kCongruenceMismatch};
  return {C::kValid};
}

}  // namespace stf
