#pragma once

// Polynomials over a word-sized prime field.

#include <cstdint>
#include <utility>
#include <vector>

namespace stf {

struct ModPoly {
  std::uint64_t modulus = 2;
  /// Residues in [0, modulus), lowest degree first, no trailing zeros.
  std::vector<std::uint64_t> coeffs;

  ModPoly() = default;
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> c);
  /// Reduces signed coefficients into [0, p).
  static ModPoly from_signed(std::uint64_t p, const std::vector<std::int64_t>& c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  std::uint64_t lead() const { return coeffs.back(); }
  bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }

  friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

struct ModFactor {
  ModPoly factor;  // monic irreducible
  unsigned exponent;
};

/// Leading coefficient times prod(factor^exponent) equals the input.
struct ModFactorization {
  std::uint64_t unit = 1;
  std::vector<ModFactor> factors;
};

ModPoly add(const ModPoly& a, const ModPoly& b);
ModPoly sub(const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModPoly& a, const ModPoly& b);
ModPoly scale(const ModPoly& a, std::uint64_t s);
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly rem(const ModPoly& a, const ModPoly& b);
ModPoly monic(const ModPoly& a);
ModPoly gcd(ModPoly a, ModPoly b);
ModPoly derivative(const ModPoly& a);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Squarefree, distinct-degree, then Cantor-Zassenhaus equal-degree splitting.
/// Factors are sorted by (degree, coefficients). Throws on the zero polynomial.
ModFactorization factor_mod_p(const ModPoly& f);

/// True iff f has positive degree and no monic factor of lower positive degree.
bool is_irreducible_mod_p(const ModPoly& f);

}  // namespace stf
