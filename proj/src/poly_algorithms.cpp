#include "stf/poly_algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "stf/errors.hpp"
#include "stf/number_theory.hpp"

namespace stf {

// ---------------------------------------------------------------------------
// Formatting

std::string to_string(const RationalPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    Rational c = f.coeff(k);
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag;
    if (k > 0 && !unit) os << "*";
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (coefficients are exact integers; "mod m" means
// residues in [0, m)).

namespace {

void trim(IntegerPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const IntegerPoly& a) { return static_cast<int>(a.size()) - 1; }

IntegerPoly mod(IntegerPoly a, const Integer& m) {
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  trim(a);
  return a;
}

IntegerPoly symmetric_mod(IntegerPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

IntegerPoly add(const IntegerPoly& a, const IntegerPoly& b) {
  IntegerPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntegerPoly sub(const IntegerPoly& a, const IntegerPoly& b) {
  IntegerPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IntegerPoly mul(const IntegerPoly& a, const IntegerPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntegerPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

IntegerPoly scale(IntegerPoly a, const Integer& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

// Division by a monic polynomial is exact over Z.
std::pair<IntegerPoly, IntegerPoly> divmod_monic(IntegerPoly a, const IntegerPoly& h) {
  const int dh = deg(h);
  if (deg(a) < dh) return {{}, a};
  IntegerPoly q(static_cast<std::size_t>(deg(a) - dh + 1), 0);
  for (int k = deg(a) - dh; k >= 0; --k) {
    Integer c = a[static_cast<std::size_t>(k + dh)];
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dh; ++j) a[static_cast<std::size_t>(k + j)] -= c * h[static_cast<std::size_t>(j)];
  }
  a.resize(static_cast<std::size_t>(dh));
  trim(a);
  trim(q);
  return {q, a};
}

IntegerPoly from_modpoly(const ModPoly& a) {
  IntegerPoly r;
  r.reserve(a.coeffs.size());
  for (auto c : a.coeffs) r.emplace_back(std::to_string(c));
  return r;
}

RationalPoly to_rational(const IntegerPoly& a) {
  std::vector<Rational> c(a.begin(), a.end());
  return RationalPoly(std::move(c));
}

Integer content(const IntegerPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

IntegerPoly primitive(IntegerPoly a) {
  Integer g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// s*a + t*b = 1 over F_p for coprime a, b.
std::pair<ModPoly, ModPoly> extended_gcd(const ModPoly& a, const ModPoly& b) {
  const std::uint64_t p = a.modulus;
  ModPoly r0 = a, r1 = b;
  ModPoly s0(p, {1}), s1(p, {}), t0(p, {}), t1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    ModPoly s2 = sub(s0, mul(q, s1));
    ModPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw std::logic_error("extended_gcd: inputs are not coprime");
  std::uint64_t inv = inverse_mod(r0.coeffs[0], p);
  return {scale(s0, inv), scale(t0, inv)};
}

struct HenselPair {
  IntegerPoly g, h, s, t;
};

// One quadratic step: f = g*h, s*g + t*h = 1 modulo m become valid modulo m^2.
// h stays monic and lc(g) = lc(f).
HenselPair hensel_step(const IntegerPoly& f, const HenselPair& in, const Integer& m) {
  const Integer m2 = m * m;
  const auto& [g, h, s, t] = in;
  IntegerPoly e = mod(sub(f, mul(g, h)), m2);
  auto [q, r] = divmod_monic(mod(mul(s, e), m2), h);
  IntegerPoly g1 = mod(add(add(g, mul(t, e)), mul(q, g)), m2);
  IntegerPoly h1 = mod(add(h, r), m2);
  IntegerPoly b = mod(sub(add(mul(s, g1), mul(t, h1)), IntegerPoly{1}), m2);
  auto [c, d] = divmod_monic(mod(mul(s, b), m2), h1);
  IntegerPoly s1 = mod(sub(s, d), m2);
  IntegerPoly t1 = mod(sub(sub(t, mul(t, b)), mul(c, g1)), m2);
  return {g1, h1, s1, t1};
}

IntegerPoly product_mod_p(const std::vector<ModPoly>& fs, std::uint64_t p) {
  ModPoly acc(p, {1});
  for (const auto& f : fs) acc = mul(acc, f);
  return from_modpoly(acc);
}

// f = lc(f) * prod(factors) mod p, factors monic and pairwise coprime.
// Appends the monic lifts modulo p^(2^steps).
void multifactor_lift(const IntegerPoly& f, const std::vector<ModPoly>& factors, std::uint64_t p,
                      int steps, const Integer& final_modulus, std::vector<IntegerPoly>& out) {
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), final_modulus.get_mpz_t());
    out.push_back(mod(scale(f, inv), final_modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());

  const Integer pz(std::to_string(p));
  IntegerPoly h = product_mod_p(left, p);
  ModPoly g_mod = scale(reduce_mod_p(product_mod_p(right, p), p), reduce_mod_p(IntegerPoly{f.back()}, p).coeffs[0]);
  auto [s, t] = extended_gcd(g_mod, reduce_mod_p(h, p));
  HenselPair pair{from_modpoly(g_mod), h, from_modpoly(s), from_modpoly(t)};
  Integer m = pz;
  for (int i = 0; i < steps; ++i) {
    pair = hensel_step(f, pair, m);
    m *= m;
  }
  multifactor_lift(pair.h, left, p, steps, final_modulus, out);
  multifactor_lift(pair.g, right, p, steps, final_modulus, out);
}

bool divides_over_z(const IntegerPoly& g, const IntegerPoly& f) {
  return (to_rational(f) % to_rational(g)).is_zero();
}

}  // namespace

// ---------------------------------------------------------------------------

IntegerPoly primitive_integer_part(const RationalPoly& f) {
  if (f.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.denominator());
  IntegerPoly out;
  for (const auto& c : f.coeffs()) out.push_back(c.numerator() * (den / c.denominator()));
  return primitive(std::move(out));
}

ModPoly reduce_mod_p(const IntegerPoly& f, std::uint64_t p) {
  const Integer pz(std::to_string(p));
  std::vector<std::uint64_t> c;
  c.reserve(f.size());
  for (const auto& v : f) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    std::uint64_t u = 0;
    mpz_export(&u, nullptr, -1, sizeof(u), 0, 0, r.get_mpz_t());
    c.push_back(u);
  }
  return ModPoly(p, std::move(c));
}

bool is_separable(const RationalPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_separable: constant polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<Rational> power_traces(const RationalPoly& f, int count) {
  if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("power_traces: f must be monic of degree >= 1");
  if (count < 0) throw std::invalid_argument("power_traces: negative count");
  const int n = f.degree();
  // Newton: p_k + a_{n-1} p_{k-1} + ... + a_{n-k+1} p_1 + k a_{n-k} = 0 for k <= n,
  // and the pure recurrence of f beyond.
  std::vector<Rational> pk(static_cast<std::size_t>(count) + 1);
  pk[0] = Rational(n);
  for (int k = 1; k <= count; ++k) {
    Rational acc = k <= n ? Rational(k) * f.coeff(n - k) : Rational(0);
    for (int i = 1; i <= std::min(k - 1, n); ++i) acc += f.coeff(n - i) * pk[static_cast<std::size_t>(k - i)];
    pk[static_cast<std::size_t>(k)] = -acc;
  }
  return pk;
}

Rational trace_of_element(const RationalPoly& f, const RationalPoly& g) {
  std::vector<Rational> traces = power_traces(f, f.degree() - 1);
  RationalPoly reduced = g % f;
  Rational tr(0);
  for (int k = 0; k <= reduced.degree(); ++k) tr += reduced.coeff(k) * traces[static_cast<std::size_t>(k)];
  return tr;
}

std::vector<int> cycle_type_mod_p(const RationalPoly& f, std::uint64_t p) {
  if (f.degree() < 1) throw std::invalid_argument("cycle_type_mod_p: constant polynomial");
  if (!is_prime(p)) throw std::invalid_argument("cycle_type_mod_p: modulus is not prime");
  IntegerPoly F = primitive_integer_part(f);
  ModPoly fp = reduce_mod_p(F, p);
  if (fp.degree() != deg(F)) throw BadPrime("p divides the leading coefficient");
  if (gcd(fp, derivative(fp)).degree() != 0) throw BadPrime("p divides the discriminant");
  std::vector<int> degrees;
  for (const auto& fac : factor_mod_p(fp).factors) {
    for (unsigned e = 0; e < fac.exponent; ++e) degrees.push_back(fac.factor.degree());
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

Integer factor_coefficient_bound(const IntegerPoly& f) {
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  if (root * root < norm2) root += 1;
  // Mignotte: |h_j| <= C(deg h, j) * ||f||_2 <= 2^deg f * ||f||_2, times |lc f|
  // for the lc-normalized candidate.
  Integer bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(deg(f)));
  return bound;
}

IrreducibilityTrace analyze_irreducibility(const RationalPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible_over_rationals: constant polynomial");
  IrreducibilityTrace trace;
  if (f.degree() == 1) {
    trace.irreducible = true;
    return trace;
  }
  IntegerPoly F = primitive_integer_part(f);
  RationalPoly Fq = to_rational(F);
  RationalPoly common = gcd(Fq, Fq.derivative());
  if (common.degree() > 0) {
    trace.irreducible = false;
    trace.factor = primitive_integer_part(common);
    return trace;
  }

  // Among the first five good primes keep the one with the fewest factors.
  std::uint64_t best_p = 0;
  ModFactorization best;
  int good = 0;
  for (std::uint64_t p = 3; good < 5; p = next_prime(p)) {
    ModPoly fp = reduce_mod_p(F, p);
    if (fp.degree() != deg(F) || gcd(fp, derivative(fp)).degree() != 0) continue;
    ++good;
    ModFactorization fac = factor_mod_p(fp);
    if (best_p == 0 || fac.factors.size() < best.factors.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.factors.size() == 1) break;
  }
  trace.prime = best_p;
  trace.modular_factor_count = static_cast<int>(best.factors.size());
  if (best.factors.size() == 1) {
    trace.irreducible = true;
    return trace;
  }

  const Integer bound = factor_coefficient_bound(F);
  const Integer pz(std::to_string(best_p));
  Integer modulus = pz;
  int steps = 0;
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++steps;
  }
  trace.lifted_modulus = modulus;

  std::vector<ModPoly> modular;
  for (const auto& fac : best.factors) modular.push_back(fac.factor);
  std::vector<IntegerPoly> lifted;
  multifactor_lift(F, modular, best_p, steps, modulus, lifted);

  const int r = static_cast<int>(lifted.size());
  const Integer lc = F.back();
  // Subsets up to half the factors suffice: the complement of a factor is a factor.
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    int size = std::popcount(mask);
    if (2 * size > r) continue;
    if (2 * size == r && (mask & 1u) == 0) continue;
    ++trace.subsets_tested;
    IntegerPoly candidate{lc};
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) candidate = mod(mul(candidate, lifted[static_cast<std::size_t>(i)]), modulus);
    }
    candidate = primitive(symmetric_mod(candidate, modulus));
    if (deg(candidate) < 1 || deg(candidate) >= deg(F)) continue;
    if (divides_over_z(candidate, F)) {
      trace.irreducible = false;
      trace.factor = candidate;
      return trace;
    }
  }
  trace.irreducible = true;
  return trace;
}

bool is_irreducible_over_rationals(const RationalPoly& f) { return analyze_irreducibility(f).irreducible; }

}  // namespace stf
