#include <doctest.h>

#include <cmath>

#include "stf/errors.hpp"
#include "stf/matrix.hpp"
#include "stf/modpoly.hpp"
#include "stf/number_theory.hpp"
#include "stf/poly_algorithms.hpp"
#include "support.hpp"

using namespace stf;
using namespace stf::testing;

namespace {

RationalPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPoly(std::move(v));
}

ExactMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (long x : r) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

std::vector<long long> as_map_vec(const IntegerFactorization& f) {
  std::vector<long long> out;
  for (auto [p, e] : f.factors) {
    out.push_back(static_cast<long long>(p));
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("rational canonical form and encoding") {
  Rational a = Rational::parse("-6/4");
  CHECK(a.to_string() == "-3/2");
  CHECK(Rational::parse("4/2").to_string() == "2");
  CHECK(Rational::parse("0/7").to_string() == "0");
  CHECK(Rational::parse("-0").to_string() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  Rng rng(11);
  Rational acc(1);
  for (int i = 0; i < 300; ++i) {
    Rational r = random_rational(rng, 50, 30);
    switch (i % 4) {
      case 0: acc += r; break;
      case 1: acc -= r; break;
      case 2: acc *= r.is_zero() ? Rational(3) : r; break;
      default: acc /= r.is_zero() ? Rational(7) : r; break;
    }
    REQUIRE(acc.denominator() >= 1);
    REQUIRE(gcd(acc.numerator(), acc.denominator()) == 1);
    REQUIRE(Rational::parse(acc.to_string()) == acc);
  }
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(Integer(1)) == 1);
  CHECK(squarefree_part(Integer(12)) == 3);
  CHECK(squarefree_part(Integer(-18)) == -2);
  CHECK_THROWS_AS(squarefree_part(Integer(0)), std::domain_error);
  CHECK(squarefree_part(Rational(Integer(3), Integer(8))) == 6);

  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    long long n = uniform(rng, -200000, 200000);
    if (n == 0) continue;
    long long expect = n < 0 ? -1 : 1;
    for (auto [p, e] : trial_division(n))
      if (e % 2) expect *= p;
    REQUIRE(squarefree_part(Integer(std::to_string(n))) == Integer(std::to_string(expect)));
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(Integer(1)).factors.empty());
  CHECK(factorize(Integer(1)).sign == 1);
  CHECK(as_map_vec(factorize(Integer(360))) == std::vector<long long>{2, 3, 3, 2, 5, 1});
  CHECK(as_map_vec(factorize(Integer(97))) == std::vector<long long>{97, 1});
  CHECK(factorize(Integer(-10)).sign == -1);
  CHECK_THROWS_AS(factorize(Integer(0)), std::domain_error);
  CHECK_THROWS_AS(factorize((Integer(1) << 63) + 1), std::out_of_range);

  // Semiprime with both factors above the trial-division limit.
  Integer big = Integer("1000003") * Integer("1000033") * Integer("1000037");
  auto f = factorize(big);
  CHECK(as_map_vec(f) == std::vector<long long>{1000003, 1, 1000033, 1, 1000037, 1});
  CHECK(as_map_vec(factorize(Integer("9223372036854775783"))) ==
        std::vector<long long>{9223372036854775783LL, 1});

  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    long long n = uniform(rng, 2, 5'000'000'000LL);
    auto got = factorize(Integer(std::to_string(n)));
    std::map<long long, int> m;
    for (auto [p, e] : got.factors) {
      REQUIRE(is_prime(p));
      m[static_cast<long long>(p)] = static_cast<int>(e);
    }
    REQUIRE(m == trial_division(n));
  }
}

TEST_CASE("legendre_symbol") {
  CHECK(legendre_symbol(Integer(1), 7) == 1);
  CHECK(legendre_symbol(Integer(2), 7) == 1);
  CHECK(legendre_symbol(Integer(2), 3) == -1);
  CHECK(legendre_symbol(Integer(14), 7) == 0);
  CHECK_THROWS_AS(legendre_symbol(Integer(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre_symbol(Integer(1), 9), std::invalid_argument);
  // Oracle: enumerate squares.
  for (std::uint64_t p : {3, 5, 7, 11, 13, 101}) {
    for (long a = -30; a <= 30; ++a) {
      long r = ((a % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
      int expect = 0;
      if (r != 0) {
        expect = -1;
        for (std::uint64_t x = 1; x < p; ++x)
          if (x * x % p == static_cast<std::uint64_t>(r)) expect = 1;
      }
      REQUIRE(legendre_symbol(Integer(a), p) == expect);
    }
  }
}

TEST_CASE("is_separable") {
  CHECK_FALSE(is_separable(P({1, -2, 1})));
  CHECK(is_separable(P({-2, 0, 1})));
  CHECK(is_separable(P({-1, 0, 1})));
  CHECK_THROWS_AS(is_separable(P({3})), std::invalid_argument);
}

TEST_CASE("factor_mod_p examples") {
  auto f1 = factor_mod_p(ModPoly(5, {0, 0, 1}));
  REQUIRE(f1.factors.size() == 1);
  CHECK(f1.factors[0].factor == ModPoly(5, {0, 1}));
  CHECK(f1.factors[0].exponent == 2);

  auto f2 = factor_mod_p(ModPoly::from_signed(7, {-2, 0, 1}));
  REQUIRE(f2.factors.size() == 2);
  // Sorted by coefficients: x - 4 = x + 3 precedes x - 3 = x + 4.
  CHECK(f2.factors[0].factor == ModPoly::from_signed(7, {-4, 1}));
  CHECK(f2.factors[1].factor == ModPoly::from_signed(7, {-3, 1}));

  auto f3 = factor_mod_p(ModPoly::from_signed(3, {-2, 0, 1}));
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].factor == ModPoly(3, {1, 0, 1}));
  CHECK(f3.factors[0].exponent == 1);

  CHECK_THROWS_AS(factor_mod_p(ModPoly(5, {})), std::invalid_argument);

  // Inseparable p-th powers: (x^3 + 1)^... over F_3 and x^4 + x^2 + 1 over F_2.
  auto f4 = factor_mod_p(ModPoly(3, {1, 0, 0, 1}));
  REQUIRE(f4.factors.size() == 1);
  CHECK(f4.factors[0].factor == ModPoly(3, {1, 1}));
  CHECK(f4.factors[0].exponent == 3);
  auto f5 = factor_mod_p(ModPoly(2, {1, 0, 1, 0, 1}));
  REQUIRE(f5.factors.size() == 1);
  CHECK(f5.factors[0].factor == ModPoly(2, {1, 1, 1}));
  CHECK(f5.factors[0].exponent == 2);
}

TEST_CASE("factor_mod_p reproduces its input") {
  Rng rng(2024);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; primes.size() < 40; p = next_prime(p)) primes.push_back(p);
  primes.push_back(1'048'573);  // largest prime below 2^20
  primes.push_back(65'537);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint64_t p = primes[static_cast<std::size_t>(trial) % primes.size()];
    int n = static_cast<int>(uniform(rng, 1, 8));
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(p) - 1));
    // Bias towards repeated factors now and then.
    ModPoly f(p, c);
    if (f.is_zero()) continue;
    if (trial % 5 == 0) f = mul(f, f);
    auto fac = factor_mod_p(f);
    ModPoly prod(p, {fac.unit});
    for (const auto& [g, e] : fac.factors) {
      REQUIRE(g.lead() == 1);
      REQUIRE(is_irreducible_mod_p(g));
      for (unsigned k = 0; k < e; ++k) prod = mul(prod, g);
    }
    REQUIRE(prod == f);
  }
}

TEST_CASE("is_irreducible_mod_p against root enumeration for small degrees") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    // All monic cubics over F_p: irreducible iff no root.
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c) {
          ModPoly f(p, {a, b, c, 1});
          bool has_root = false;
          for (std::uint64_t x = 0; x < p; ++x) {
            if ((a + b * x + c * x * x + x * x * x) % p == 0) has_root = true;
          }
          REQUIRE(is_irreducible_mod_p(f) == !has_root);
        }
  }
}

TEST_CASE("cycle_type_mod_p") {
  CHECK(cycle_type_mod_p(P({-2, 0, 1}), 7) == std::vector<int>{1, 1});
  CHECK(cycle_type_mod_p(P({-2, 0, 1}), 3) == std::vector<int>{2});
  CHECK_THROWS_AS(cycle_type_mod_p(P({-2, 0, 1}), 2), BadPrime);
  CHECK_THROWS_AS(cycle_type_mod_p(P({1, 0, 3}), 3), BadPrime);
  // x^4 + 1 is reducible modulo every prime.
  for (std::uint64_t p = 3; p < 200; p = next_prime(p)) {
    auto t = cycle_type_mod_p(P({1, 0, 0, 0, 1}), p);
    CHECK(t.size() >= 2);
  }
}

TEST_CASE("is_irreducible_over_rationals examples") {
  CHECK_FALSE(is_irreducible_over_rationals(P({-1, 0, 1})));
  CHECK(is_irreducible_over_rationals(P({-2, 0, 1})));
  CHECK(is_irreducible_over_rationals(P({1, 0, 0, 0, 1})));
  CHECK_THROWS_AS(is_irreducible_over_rationals(P({4})), std::invalid_argument);

  auto trace = analyze_irreducibility(P({1, 0, 0, 0, 1}));
  CHECK(trace.irreducible);
  CHECK(trace.modular_factor_count >= 2);
  CHECK(trace.subsets_tested > 0);

  // Swinnerton-Dyer style: (x^2-2)(x^2-3) splits into quadratics only.
  auto sd = analyze_irreducibility(P({6, 0, -5, 0, 1}));
  CHECK_FALSE(sd.irreducible);
  CHECK(sd.factor.size() == 3);
  // x^4 - 10x^2 + 1 is irreducible yet reducible mod every prime.
  CHECK(is_irreducible_over_rationals(P({1, 0, -10, 0, 1})));
  // Non-monic with rational coefficients: (2x+1)(3x^2-1)/4.
  std::vector<Rational> c{Rational(-1, 4), Rational(-1, 2), Rational(3, 4), Rational(3, 2)};
  CHECK_FALSE(is_irreducible_over_rationals(RationalPoly(c)));
  // Repeated root.
  CHECK_FALSE(is_irreducible_over_rationals(P({1, -2, 1})));
  // Degree 1 and a degree-8 product of two irreducible quartics.
  CHECK(is_irreducible_over_rationals(P({3, 7})));
  CHECK_FALSE(is_irreducible_over_rationals(P({1, 0, 0, 0, 1}) * P({1, 0, -10, 0, 1})));
  CHECK(is_irreducible_over_rationals(P({-2, 0, 0, 0, 0, 0, 0, 0, 1})));
}

TEST_CASE("is_irreducible_over_rationals agrees with brute force (deg <= 4)") {
  Rng rng(777);
  int irreducible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(uniform(rng, 1, 4));
    std::vector<long long> f(static_cast<std::size_t>(n) + 1);
    for (auto& v : f) v = uniform(rng, -10, 10);
    if (f.back() == 0) f.back() = nonzero(rng, -10, 10);
    double norm = 0;
    for (auto v : f) norm += static_cast<double>(v * v);
    long long bound = 2 * static_cast<long long>(std::ceil(std::sqrt(norm))) + 1;
    std::vector<Rational> c;
    for (auto v : f) c.emplace_back(v);
    bool got = is_irreducible_over_rationals(RationalPoly(c));
    REQUIRE(got == brute_force_irreducible(f, bound));
    irreducible += got;
  }
  CHECK(irreducible > 20);
}

TEST_CASE("power_traces") {
  CHECK(power_traces(P({-5, 1}), 2) == std::vector<Rational>{1, 5, 25});
  CHECK(power_traces(P({-2, 0, 1}), 2) == std::vector<Rational>{2, 0, 4});
  CHECK(power_traces(P({0, -1, 1}), 2) == std::vector<Rational>{2, 1, 1});
  CHECK_THROWS_AS(power_traces(P({1, 2}), 2), std::invalid_argument);

  // Newton consistency against traces of companion-matrix powers.
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(uniform(rng, 1, 6));
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.push_back(random_rational(rng, 9, 4));
    c.emplace_back(1);
    RationalPoly f(c);
    auto traces = power_traces(f, 2 * n);
    ExactMatrix comp = companion(f);
    ExactMatrix pw = ExactMatrix::Identity(n, n);
    for (int k = 0; k <= 2 * n; ++k) {
      REQUIRE(pw.trace() == traces[static_cast<std::size_t>(k)]);
      pw = (pw * comp).eval();
    }
  }
}

TEST_CASE("trace_of_element") {
  RationalPoly f = P({-2, 0, 1});
  CHECK(trace_of_element(f, P({1})) == Rational(2));
  CHECK(trace_of_element(f, P({0, 1})) == Rational(0));
  CHECK(trace_of_element(f, RationalPoly({Rational(1, 2), Rational(1, 4)})) == Rational(1));
  // Reduction mod f first: x^2 = 2 in Q[x]/(x^2 - 2).
  CHECK(trace_of_element(f, P({0, 0, 1})) == Rational(4));
}

TEST_CASE("det") {
  CHECK(det(ExactMatrix::Identity(4, 4)) == Rational(1));
  CHECK(det(M({{1, 1}, {1, 2}})) == Rational(1));
  CHECK(det(M({{1, 1}, {1, 1}})) == Rational(0));
  CHECK(det(M({{0, 1}, {1, 0}})) == Rational(-1));
  CHECK_THROWS_AS(det(ExactMatrix(2, 3)), std::invalid_argument);

  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(uniform(rng, 1, 5));
    ExactMatrix m = random_matrix(rng, n, n, 9);
    if (trial % 7 == 0) m.row(0) = m.row(n - 1);
    if (trial % 3 == 0) m(0, 0) = Rational(Integer(uniform(rng, -9, 9)), Integer(uniform(rng, 1, 5)));
    REQUIRE(det(m) == laplace_det(m));
  }
}

TEST_CASE("charpoly") {
  CHECK(charpoly(ExactMatrix::Identity(2, 2)) == P({1, -2, 1}));
  CHECK(charpoly(M({{0, 1}, {1, 0}})) == P({-1, 0, 1}));
  CHECK(charpoly(M({{3, 0}, {0, -4}})) == P({-12, 1, 1}));
  CHECK_THROWS_AS(charpoly(ExactMatrix(2, 3)), std::invalid_argument);

  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(uniform(rng, 1, 6));
    ExactMatrix m = random_matrix(rng, n, n, 9);
    RationalPoly f = charpoly(m);
    REQUIRE(f.is_monic());
    REQUIRE(f.degree() == n);
    REQUIRE(f == charpoly_by_interpolation(m));
  }
}

TEST_CASE("krylov_matrix") {
  ExactVector e1 = ExactVector::Zero(2);
  e1(0) = 1;
  CHECK(krylov_matrix(M({{1, 1}, {1, -1}}), e1) == M({{1, 1}, {0, 1}}));
  CHECK_THROWS_AS(krylov_matrix(ExactMatrix::Identity(2, 2), e1), SingularKrylov);
  ExactVector one = ExactVector::Ones(1);
  CHECK(krylov_matrix(M({{5}}), one) == M({{1}}));
  CHECK_THROWS_AS(krylov_matrix(M({{1, 0}, {0, 1}}), ExactVector::Ones(3)), std::invalid_argument);
}

TEST_CASE("irreducible charpoly makes every nonzero vector cyclic") {
  Rng rng(31);
  int instances = 0;
  while (instances < 50) {
    int n = static_cast<int>(uniform(rng, 2, 5));
    ExactMatrix m = random_matrix(rng, n, n, 5);
    if (!is_irreducible_over_rationals(charpoly(m))) continue;
    ++instances;
    for (int k = 0; k < 10; ++k) {
      ExactVector v = random_matrix(rng, n, 1, 4);
      if (v.isZero()) continue;
      REQUIRE_NOTHROW(krylov_matrix(m, v));
    }
  }
}

TEST_CASE("congruence_diagonalize") {
  auto d1 = congruence_diagonalize(M({{1, 0}, {0, -1}}));
  CHECK(d1.q == ExactMatrix::Identity(2, 2));
  CHECK(d1.diagonal == std::vector<Rational>{1, -1});

  auto d2 = congruence_diagonalize(M({{1, 1}, {1, 2}}));
  CHECK(d2.q == M({{1, -1}, {0, 1}}));
  CHECK(d2.diagonal == std::vector<Rational>{1, 1});

  auto d3 = congruence_diagonalize(M({{0, 1}, {1, 0}}));
  CHECK(squarefree_part(d3.diagonal[0] * d3.diagonal[1]) == -1);
  CHECK((d3.q.transpose() * M({{0, 1}, {1, 0}}) * d3.q) == diagonal_matrix(d3.diagonal));

  CHECK_THROWS_AS(congruence_diagonalize(M({{1, 2}, {3, 4}})), std::invalid_argument);

  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(uniform(rng, 1, 6));
    ExactMatrix b = random_symmetric(rng, n, 3);
    if (trial % 4 == 0) b.diagonal().setZero();  // forces the e_i + e_j path
    if (trial % 9 == 0) {                        // and a degenerate direction
      b.row(n - 1) = b.row(0);
      b.col(n - 1) = b.col(0);
      b(n - 1, n - 1) = b(0, 0);
    }
    auto res = congruence_diagonalize(b);
    ExactMatrix t = res.q.transpose() * b * res.q;
    REQUIRE(t == diagonal_matrix(res.diagonal));
    Rational dq = det(res.q);
    REQUIRE_FALSE(dq.is_zero());
    Rational prod(1);
    int zeros = 0;
    for (const auto& d : res.diagonal) {
      prod *= d;
      zeros += d.is_zero();
    }
    REQUIRE(dq * dq * det(b) == prod);
    // Number of zero entries equals the corank.
    int rank = 0;
    {
      ExactMatrix a = b;
      for (int c = 0, r = 0; c < n && r < n; ++c) {
        int piv = r;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) continue;
        a.row(r).swap(a.row(piv));
        for (int i = r + 1; i < n; ++i) a.row(i) -= (a(i, c) / a(r, c)) * a.row(r);
        ++r;
        ++rank;
      }
    }
    REQUIRE(zeros == n - rank);
  }
}
