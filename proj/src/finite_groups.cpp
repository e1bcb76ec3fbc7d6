#include "stf/finite_groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "stf/errors.hpp"
#include "stf/number_theory.hpp"

namespace stf {

namespace {

std::uint64_t alpha_power(const SemidirectGroup& g, std::uint64_t x) { return powmod(g.alpha % g.m, x, g.m); }

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t phi = m;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    while (m % q == 0) m /= q;
    phi -= phi / q;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

void insert_all(const SemidirectGroup& g, ElementSet& s, std::deque<Element>& queue, const Element& e) {
  const auto i = g.id(e);
  if (!s[i]) {
    s[i] = true;
    queue.push_back(e);
  }
}

std::vector<ElementSet> conjugacy_classes(const SemidirectGroup& g) {
  const std::uint64_t n = g.order();
  ElementSet assigned(n, false);
  std::vector<ElementSet> classes;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    ElementSet cls(n, false);
    const Element u = g.element(i);
    for (std::uint64_t j = 0; j < n; ++j) {
      const Element h = g.element(j);
      const Element c = multiply(g, multiply(g, h, u), inverse(g, h));
      cls[g.id(c)] = true;
      assigned[g.id(c)] = true;
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

ElementSet full(const SemidirectGroup& g) { return ElementSet(g.order(), true); }

}  // namespace

std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(u % m, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  std::uint64_t r = 1, acc = u % m;
  while (acc != 1) {
    acc = mulmod(acc, u % m, m);
    ++r;
  }
  return r;
}

std::vector<std::uint64_t> units_of_order(std::uint64_t p, std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; u < m; ++u) {
    if (std::gcd(u, m) == 1 && multiplicative_order(u, m) == p) out.push_back(u);
  }
  return out;
}

SemidirectGroup construct_group(std::uint64_t p, unsigned k, std::uint64_t m, std::uint64_t alpha) {
  if (!is_prime(p)) throw InvalidParams("p must be prime");
  if (k < 1) throw InvalidParams("k must be at least 1");
  if (m < 1) throw InvalidParams("m must be at least 1");
  if (m % p == 0) throw InvalidParams("p divides m");
  if (euler_phi(m) % p != 0) throw InvalidParams("p does not divide phi(m)");
  if (std::gcd(alpha % m, m) != 1 || multiplicative_order(alpha, m) != p) {
    throw InvalidParams("alpha does not have multiplicative order p");
  }
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (pk > UINT64_MAX / p / m) throw InvalidParams("group order overflows");
    pk *= p;
  }
  return SemidirectGroup{p, k, m, alpha % m, pk};
}

SemidirectGroup construct_group(std::uint64_t p, unsigned k, std::uint64_t m) {
  if (!is_prime(p)) throw InvalidParams("p must be prime");
  if (m < 1) throw InvalidParams("m must be at least 1");
  if (m % p == 0) throw InvalidParams("p divides m");
  if (euler_phi(m) % p != 0) throw InvalidParams("p does not divide phi(m)");
  return construct_group(p, k, m, units_of_order(p, m).front());
}

Element multiply(const SemidirectGroup& g, const Element& u, const Element& v) {
  const std::uint64_t b = mulmod(alpha_power(g, u.x), v.a, g.m);
  return {(u.a + b) % g.m, (u.x + v.x) % g.pk};
}

Element inverse(const SemidirectGroup& g, const Element& u) {
  // (a,x)^-1 = (-alpha^-x a, -x), and alpha^-x = alpha^(p^k - x) since alpha^p = 1.
  const std::uint64_t nx = (g.pk - u.x) % g.pk;
  const std::uint64_t b = mulmod(alpha_power(g, nx), u.a, g.m);
  return {(g.m - b) % g.m, nx};
}

Element power(const SemidirectGroup& g, const Element& u, std::uint64_t n) {
  Element acc{0, 0};
  for (std::uint64_t i = 0; i < n; ++i) acc = multiply(g, acc, u);
  return acc;
}

Element power_closed_form(const SemidirectGroup& g, const Element& u, std::uint64_t n) {
  const std::uint64_t step = alpha_power(g, u.x);
  std::uint64_t sum = 0, term = 1 % g.m;
  for (std::uint64_t i = 0; i < n; ++i) {
    sum = (sum + term) % g.m;
    term = mulmod(term, step, g.m);
  }
  return {mulmod(u.a, sum, g.m), mulmod(n % g.pk, u.x, g.pk)};
}

std::uint64_t element_order(const SemidirectGroup& g, const Element& u) {
  Element acc = u;
  std::uint64_t r = 1;
  while (!(acc == Element{0, 0})) {
    acc = multiply(g, acc, u);
    ++r;
  }
  return r;
}

std::size_t count(const ElementSet& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

std::vector<Element> members(const SemidirectGroup& g, const ElementSet& s) {
  std::vector<Element> out;
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    if (s[i]) out.push_back(g.element(i));
  }
  return out;
}

ElementSet subgroup_closure(const SemidirectGroup& g, const std::vector<Element>& gens) {
  ElementSet s(g.order(), false);
  std::deque<Element> queue;
  insert_all(g, s, queue, Element{0, 0});
  while (!queue.empty()) {
    const Element u = queue.front();
    queue.pop_front();
    for (const auto& h : gens) insert_all(g, s, queue, multiply(g, u, h));
  }
  return s;
}

ElementSet normal_closure(const SemidirectGroup& g, const std::vector<Element>& gens) {
  std::set<Element> conjugates;
  for (std::uint64_t j = 0; j < g.order(); ++j) {
    const Element h = g.element(j);
    for (const auto& u : gens) conjugates.insert(multiply(g, multiply(g, h, u), inverse(g, h)));
  }
  return subgroup_closure(g, {conjugates.begin(), conjugates.end()});
}

ElementSet p_generated_subgroup(const SemidirectGroup& g) {
  std::vector<Element> gens;
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    std::uint64_t o = element_order(g, g.element(i));
    while (o % g.p == 0) o /= g.p;
    if (o == 1) gens.push_back(g.element(i));
  }
  return subgroup_closure(g, gens);
}

std::vector<ElementSet> normal_subgroups(const SemidirectGroup& g) {
  const auto classes = conjugacy_classes(g);
  std::set<ElementSet> found;
  std::deque<ElementSet> queue;
  ElementSet trivial(g.order(), false);
  trivial[0] = true;
  found.insert(trivial);
  queue.push_back(trivial);
  // Each normal subgroup is reached from the trivial one by adding its classes one at a time.
  while (!queue.empty()) {
    const ElementSet n = queue.front();
    queue.pop_front();
    for (const auto& cls : classes) {
      bool contained = true;
      for (std::uint64_t i = 0; i < cls.size() && contained; ++i) contained = !cls[i] || n[i];
      if (contained) continue;
      std::vector<Element> gens = members(g, n);
      for (const auto& e : members(g, cls)) gens.push_back(e);
      ElementSet next = subgroup_closure(g, gens);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {found.begin(), found.end()};
}

bool prime_to_p_quotient_check(const SemidirectGroup& g) {
  // Any quotient of order prime to p kills every p-element.
  return normal_closure(g, members(g, p_generated_subgroup(g))) == full(g);
}

std::optional<bool> prime_to_p_quotient_check_exhaustive(const SemidirectGroup& g, std::uint64_t limit) {
  if (g.order() > limit) return std::nullopt;
  for (const auto& n : normal_subgroups(g)) {
    const std::uint64_t index = g.order() / count(n);
    if (index > 1 && index % g.p != 0) return false;
  }
  return true;
}

IndexSubgroups index_subgroups(const SemidirectGroup& g, std::uint64_t n) {
  if (n == 0 || g.m % n != 0) throw NonDivisor("n must divide m");
  IndexSubgroups out{ElementSet(g.order(), false), ElementSet(g.order(), false), 0, 0};
  for (std::uint64_t a = 0; a < g.m; a += n) {
    out.h0[g.id({a, 0})] = true;
    for (std::uint64_t x = 0; x < g.pk; ++x) out.h1[g.id({a, x})] = true;
  }
  for (std::uint64_t a = 0; a < g.m; a += n) {
    if (mulmod(g.alpha, a, g.m) % n != 0) throw std::logic_error("index_subgroups: H0 is not alpha-invariant");
  }
  if (subgroup_closure(g, members(g, out.h0)) != out.h0 || subgroup_closure(g, members(g, out.h1)) != out.h1) {
    throw std::logic_error("index_subgroups: not closed under multiplication");
  }
  out.index_h0 = g.order() / count(out.h0);
  out.index_h1 = g.order() / count(out.h1);
  return out;
}

GroupReport verify_group(std::uint64_t p, unsigned k, std::uint64_t m, std::optional<std::uint64_t> n,
                         bool exhaustive) {
  GroupReport r;
  r.group = construct_group(p, k, m);
  r.lemma_a = p_generated_subgroup(r.group) == full(r.group);
  r.lemma_b_derived = prime_to_p_quotient_check(r.group);
  if (exhaustive) r.lemma_b_exhaustive = prime_to_p_quotient_check_exhaustive(r.group);
  std::vector<std::uint64_t> ns;
  if (n) {
    ns.push_back(*n);
  } else {
    for (std::uint64_t d = 1; d <= m; ++d) {
      if (m % d == 0) ns.push_back(d);
    }
  }
  for (auto d : ns) {
    const auto s = index_subgroups(r.group, d);
    r.lemma_c.push_back({d, s.index_h0, s.index_h1});
  }
  return r;
}

}  // namespace stf
