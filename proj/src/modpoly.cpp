#include "stf/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "stf/number_theory.hpp"

namespace stf {

namespace {

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_field(const ModPoly& a, const ModPoly& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("ModPoly: mismatched moduli");
}

ModPoly x_poly(std::uint64_t p) { return ModPoly(p, {0, 1}); }

ModPoly one(std::uint64_t p) { return ModPoly(p, {1}); }

// Polynomial whose p-th power is f, for f with f' = 0.
ModPoly pth_root(const ModPoly& f) {
  const std::uint64_t p = f.modulus;
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < f.coeffs.size(); i += p) out.push_back(f.coeffs[i]);
  // Coefficients of F_p are fixed by Frobenius, so no root extraction is needed.
  return ModPoly(p, std::move(out));
}

// Monic squarefree parts: f = prod(parts[i].first ^ parts[i].second).
void squarefree_decompose(const ModPoly& f, unsigned multiplier,
                          std::vector<std::pair<ModPoly, unsigned>>& parts) {
  if (f.degree() < 1) return;
  ModPoly d = derivative(f);
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), multiplier * static_cast<unsigned>(f.modulus), parts);
    return;
  }
  // Yun's algorithm; the leftover c collects multiplicities divisible by p.
  ModPoly c = gcd(f, d);
  ModPoly w = divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly z = divmod(w, y).first;
    if (z.degree() > 0) parts.emplace_back(monic(z), i * multiplier);
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0) {
    squarefree_decompose(pth_root(c), multiplier * static_cast<unsigned>(f.modulus), parts);
  }
}

// Splits a monic squarefree product of irreducibles of degree d.
void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.modulus;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> rc(static_cast<std::size_t>(f.degree()));
    for (auto& v : rc) v = dist(rng);
    ModPoly a(p, rc);
    if (a.degree() < 1) continue;
    ModPoly b;
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)).
      ModPoly t = a, s = a;
      for (int i = 1; i < d; ++i) {
        s = rem(mul(s, s), f);
        t = add(t, s);
      }
      b = t;
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p - 1)/2)
      ModPoly norm = a, s = a;
      for (int i = 1; i < d; ++i) {
        s = powmod(s, p, f);
        norm = rem(mul(norm, s), f);
      }
      b = sub(powmod(norm, (p - 1) / 2, f), one(p));
    }
    ModPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

bool factor_less(const ModFactor& a, const ModFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  if (a.factor.coeffs != b.factor.coeffs) {
    return std::lexicographical_compare(a.factor.coeffs.rbegin(), a.factor.coeffs.rend(),
                                        b.factor.coeffs.rbegin(), b.factor.coeffs.rend());
  }
  return a.exponent < b.exponent;
}

}  // namespace

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> c) : modulus(p), coeffs(std::move(c)) {
  if (p < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
  for (auto& v : coeffs) v %= p;
  trim(coeffs);
}

ModPoly ModPoly::from_signed(std::uint64_t p, const std::vector<std::int64_t>& c) {
  std::vector<std::uint64_t> r(c.size());
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = static_cast<std::uint64_t>(((c[i] % sp) + sp) % sp);
  return ModPoly(p, std::move(r));
}

ModPoly add(const ModPoly& a, const ModPoly& b) {
  require_same_field(a, b);
  const std::uint64_t p = a.modulus;
  std::vector<std::uint64_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    std::uint64_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    c[i] = (x + y) % p;
  }
  return ModPoly(p, std::move(c));
}

ModPoly sub(const ModPoly& a, const ModPoly& b) {
  require_same_field(a, b);
  const std::uint64_t p = a.modulus;
  std::vector<std::uint64_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    std::uint64_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    c[i] = (x + p - y) % p;
  }
  return ModPoly(p, std::move(c));
}

ModPoly mul(const ModPoly& a, const ModPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus, {});
  const std::uint64_t p = a.modulus;
  std::vector<std::uint64_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] = (c[i + j] + mulmod(a.coeffs[i], b.coeffs[j], p)) % p;
    }
  }
  return ModPoly(p, std::move(c));
}

ModPoly scale(const ModPoly& a, std::uint64_t s) {
  std::vector<std::uint64_t> c = a.coeffs;
  for (auto& v : c) v = mulmod(v, s, a.modulus);
  return ModPoly(a.modulus, std::move(c));
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse_mod: non-invertible");
  return powmod(a, p - 2, p);
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("ModPoly division by zero");
  const std::uint64_t p = a.modulus;
  if (a.degree() < b.degree()) return {ModPoly(p, {}), a};
  std::vector<std::uint64_t> r = a.coeffs;
  const int db = b.degree();
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const std::uint64_t inv = inverse_mod(b.lead(), p);
  for (int k = a.degree() - db; k >= 0; --k) {
    std::uint64_t c = mulmod(r[static_cast<std::size_t>(k + db)], inv, p);
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(k + j)];
      slot = (slot + p - mulmod(c, b.coeffs[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly rem(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly monic(const ModPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, inverse_mod(a.lead(), a.modulus));
}

ModPoly gcd(ModPoly a, ModPoly b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

ModPoly derivative(const ModPoly& a) {
  if (a.coeffs.size() <= 1) return ModPoly(a.modulus, {});
  std::vector<std::uint64_t> c(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) c[i - 1] = mulmod(a.coeffs[i], i % a.modulus, a.modulus);
  return ModPoly(a.modulus, std::move(c));
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m) {
  ModPoly result = rem(one(m.modulus), m);
  ModPoly b = rem(base, m);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, b), m);
    e >>= 1;
    if (e > 0) b = rem(mul(b, b), m);
  }
  return result;
}

ModFactorization factor_mod_p(const ModPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
  const std::uint64_t p = f.modulus;
  ModFactorization out;
  out.unit = f.lead();
  std::vector<std::pair<ModPoly, unsigned>> parts;
  squarefree_decompose(monic(f), 1, parts);

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
  for (auto& [part, mult] : parts) {
    // Distinct-degree factorization.
    ModPoly rest = part;
    ModPoly h = x_poly(p);
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
      h = powmod(h, p, rest);
      ModPoly g = gcd(rest, sub(h, x_poly(p)));
      if (g.degree() > 0) {
        std::vector<ModPoly> pieces;
        equal_degree_split(g, d, rng, pieces);
        for (auto& q : pieces) out.factors.push_back({std::move(q), mult});
        rest = divmod(rest, g).first;
        h = rem(h, rest);
      }
    }
    if (rest.degree() > 0) out.factors.push_back({rest, mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  // Merge repeats that came from different squarefree layers.
  std::vector<ModFactor> merged;
  for (auto& fac : out.factors) {
    if (!merged.empty() && merged.back().factor == fac.factor) {
      merged.back().exponent += fac.exponent;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  out.factors = std::move(merged);
  return out;
}

bool is_irreducible_mod_p(const ModPoly& f) {
  if (f.degree() < 1) return false;
  const std::uint64_t p = f.modulus;
  ModPoly g = monic(f);
  ModPoly h = x_poly(p);
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, p, g);
    if (gcd(g, sub(h, x_poly(p))).degree() > 0) return false;
  }
  return true;
}

}  // namespace stf
