#include "stf/number_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stf {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t to_u64(const Integer& n) {
  // mpz_get_ui is only 64-bit on LP64 targets; go through the limbs explicitly.
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

std::uint64_t rho_split(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  // Brent's cycle detection with batched gcds.
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 64;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = rho_split(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set below 2^64.
  for (std::uint64_t a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  ++n;
  while (!is_prime(n)) ++n;
  return n;
}

IntegerFactorization factorize(const Integer& n) {
  if (n == 0) throw std::domain_error("factorize: zero");
  Integer mag = abs(n);
  if (mag > kFactorBound) throw std::out_of_range("factorize: |n| exceeds 2^63");
  IntegerFactorization result;
  result.sign = sgn(n);
  std::uint64_t m = to_u64(mag);
  for (std::uint64_t p = 2; p <= kTrialLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    result.factors.emplace_back(p, e);
  }
  if (m > 1) {
    std::map<std::uint64_t, unsigned> rest;
    split_into(m, rest);
    result.factors.insert(result.factors.end(), rest.begin(), rest.end());
  }
  return result;
}

Integer squarefree_part(const Integer& n) {
  IntegerFactorization f = factorize(n);
  Integer d = f.sign;
  for (auto [p, e] : f.factors) {
    if (e % 2 == 1) d *= Integer(std::to_string(p));
  }
  return d;
}

Integer squarefree_part(const Rational& r) { return squarefree_part(square_class_integer(r)); }

int legendre_symbol(const Integer& a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre_symbol: modulus must be an odd prime");
  Integer pz(std::to_string(p));
  return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

unsigned valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer pz(std::to_string(p));
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), pz.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
    ++v;
  }
  return v;
}

}  // namespace stf
