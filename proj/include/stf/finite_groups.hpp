#pragma once

// H = Z/m x| Z/p^k with (a,x)(b,y) = (a + alpha^x b, x + y), alpha a unit of
// multiplicative order p, and exhaustive checks of its subgroup structure.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace stf {

struct Element {
  std::uint64_t a = 0;  // residue mod m
  std::uint64_t x = 0;  // residue mod p^k
  auto operator<=>(const Element&) const = default;
};

struct SemidirectGroup {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t m = 0;
  std::uint64_t alpha = 0;
  std::uint64_t pk = 0;  // p^k

  std::uint64_t order() const { return m * pk; }
  /// Dense index of g in [0, order()).
  std::uint64_t id(const Element& g) const { return g.a * pk + g.x; }
  Element element(std::uint64_t id) const { return {id / pk, id % pk}; }
};

/// Multiplicative order of u modulo m (u a unit).
std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t m);

/// Units of Z/m of order exactly p, ascending.
std::vector<std::uint64_t> units_of_order(std::uint64_t p, std::uint64_t m);

/// Validates p prime, k >= 1, m >= 1, p not dividing m, p dividing phi(m), and
/// picks the smallest alpha of order p. Throws InvalidParams otherwise.
SemidirectGroup construct_group(std::uint64_t p, unsigned k, std::uint64_t m);
/// Same with a caller-chosen alpha, which must have order p.
SemidirectGroup construct_group(std::uint64_t p, unsigned k, std::uint64_t m, std::uint64_t alpha);

Element multiply(const SemidirectGroup& g, const Element& u, const Element& v);
Element inverse(const SemidirectGroup& g, const Element& u);

/// u^n by repeated multiplication.
Element power(const SemidirectGroup& g, const Element& u, std::uint64_t n);
/// (a (1 + alpha^x + ... + alpha^((n-1)x)), n x).
Element power_closed_form(const SemidirectGroup& g, const Element& u, std::uint64_t n);

std::uint64_t element_order(const SemidirectGroup& g, const Element& u);

/// Membership mask over element ids.
using ElementSet = std::vector<bool>;

std::size_t count(const ElementSet& s);
std::vector<Element> members(const SemidirectGroup& g, const ElementSet& s);

/// Subgroup generated by gens (breadth-first products until stable).
ElementSet subgroup_closure(const SemidirectGroup& g, const std::vector<Element>& gens);
/// Smallest normal subgroup containing gens.
ElementSet normal_closure(const SemidirectGroup& g, const std::vector<Element>& gens);

/// Subgroup generated by all elements of p-power order.
ElementSet p_generated_subgroup(const SemidirectGroup& g);

/// Every normal subgroup, found as closures of unions of conjugacy classes.
std::vector<ElementSet> normal_subgroups(const SemidirectGroup& g);

/// H has no nontrivial quotient of order prime to p, via the normal closure of
/// the p-generated subgroup.
bool prime_to_p_quotient_check(const SemidirectGroup& g);
/// The same by enumerating all normal subgroups; nullopt when |H| > limit.
std::optional<bool> prime_to_p_quotient_check_exhaustive(const SemidirectGroup& g, std::uint64_t limit = 300);

struct IndexSubgroups {
  ElementSet h0;  // n Z/m inside Z/m
  ElementSet h1;  // h0 x| Z/p^k
  std::uint64_t index_h0 = 0;
  std::uint64_t index_h1 = 0;
};

/// Throws NonDivisor unless n divides m. Verifies h0 and h1 are subgroups and h0
/// is alpha-invariant (std::logic_error otherwise).
IndexSubgroups index_subgroups(const SemidirectGroup& g, std::uint64_t n);

struct GroupReport {
  SemidirectGroup group;
  bool lemma_a = false;
  bool lemma_b_derived = false;
  std::optional<bool> lemma_b_exhaustive;
  struct IndexRow {
    std::uint64_t n, index_h0, index_h1;
  };
  std::vector<IndexRow> lemma_c;  // every divisor n of m, or just the one requested
};

GroupReport verify_group(std::uint64_t p, unsigned k, std::uint64_t m, std::optional<std::uint64_t> n = std::nullopt,
                         bool exhaustive = false);

}  // namespace stf
