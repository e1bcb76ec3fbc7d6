#pragma once

// Generators and independent oracles shared by the test suites. Nothing here
// calls into the code path it is used to check.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "stf/matrix.hpp"
#include "stf/polynomial.hpp"
#include "stf/rational.hpp"

namespace stf::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline long nonzero(Rng& rng, long lo, long hi) {
  long v = 0;
  while (v == 0) v = uniform(rng, lo, hi);
  return v;
}

inline Rational random_rational(Rng& rng, long num_bound, long den_bound) {
  return Rational(Integer(uniform(rng, -num_bound, num_bound)), Integer(uniform(rng, 1, den_bound)));
}

inline ExactMatrix random_matrix(Rng& rng, int rows, int cols, long bound) {
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(uniform(rng, -bound, bound));
  return m;
}

inline ExactMatrix random_symmetric(Rng& rng, int n, long bound) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(uniform(rng, -bound, bound));
  return m;
}

inline ExactMatrix random_invertible(Rng& rng, int n, long bound) {
  for (;;) {
    ExactMatrix m = random_matrix(rng, n, n, bound);
    if (!det(m).is_zero()) return m;
  }
}

inline std::vector<Rational> random_nonzero_diagonal(Rng& rng, int n, long bound) {
  std::vector<Rational> d;
  for (int i = 0; i < n; ++i) d.emplace_back(nonzero(rng, -bound, bound));
  return d;
}

/// Trial-division factorization of |n| (n != 0).
inline std::map<long long, int> trial_division(long long n) {
  std::map<long long, int> out;
  unsigned long long m = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  for (unsigned long long p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      ++out[static_cast<long long>(p)];
      m /= p;
    }
  }
  if (m > 1) ++out[static_cast<long long>(m)];
  return out;
}

/// Cofactor expansion determinant.
inline Rational laplace_det(const ExactMatrix& m) {
  const auto n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    ExactMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Rational term = m(0, j) * laplace_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

/// Companion matrix of monic f (last column holds -a_0..-a_{n-1}).
inline ExactMatrix companion(const RationalPoly& f) {
  const int n = f.degree();
  ExactMatrix c = ExactMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return c;
}

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  if (n < 0) n = -n;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Brute-force irreducibility over Q for integer polynomials of degree <= 4:
/// rational-root test, then every integer quadratic a x^2 + b x + c with
/// a | lc, c | f(0) and |b| below the given coefficient bound.
inline bool brute_force_irreducible(const std::vector<long long>& f, long long middle_bound) {
  const int n = static_cast<int>(f.size()) - 1;
  auto poly = [&](const std::vector<long long>& v) {
    std::vector<Rational> c;
    for (auto x : v) c.emplace_back(Integer(std::to_string(x)));
    return RationalPoly(std::move(c));
  };
  RationalPoly F = poly(f);
  // Content does not affect irreducibility over Q.
  if (n <= 1) return true;
  if (f[0] == 0) return false;  // x divides f
  for (long long a : divisors(f.back())) {
    for (long long c : divisors(f[0])) {
      for (int s : {1, -1}) {
        RationalPoly lin = poly({s * c, a});
        if ((F % lin).is_zero()) return false;
      }
    }
  }
  if (n < 4) return true;
  for (long long a : divisors(f.back())) {
    for (long long c : divisors(f[0])) {
      for (int s : {1, -1}) {
        for (long long b = -middle_bound; b <= middle_bound; ++b) {
          RationalPoly quad = poly({s * c, b, a});
          if ((F % quad).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

// Local solvability oracle: a primitive solution of z^2 = a x^2 + b y^2 modulo
// p^k for squarefree integers a, b. k = 3 for odd p, k = 6 for p = 2.
inline int brute_force_hilbert(long a, long b, long p) {
  long mod = p == 2 ? 64 : p * p * p;
  for (long x = 0; x < mod; ++x)
    for (long y = 0; y < mod; ++y)
      for (long z = 0; z < mod; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        long lhs = (z * z) % mod;
        long rhs = ((a % mod + mod) % mod * (x * x % mod) + (b % mod + mod) % mod * (y * y % mod)) % mod;
        if (lhs == rhs) return 1;
      }
  return -1;
}


}  // namespace stf::testing
