#include <random>

#include "civar/errors.hpp"
#include "civar/matrix.hpp"
#include "civar/poly.hpp"
#include "civar/univariate.hpp"
#include "doctest.h"

using namespace civar;

TEST_CASE("prime field axioms on random samples") {
  PrimeField f(101);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Scalar> d(0, 100);
  for (int i = 0; i < 500; ++i) {
    Scalar a = d(rng), b = d(rng), c = d(rng);
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.add(a, f.neg(a)) == 0);
  }
  PrimeField big(2147483647);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("characteristic must be an odd prime below 2^31") {
  CHECK_THROWS_AS(PrimeField(2), InputError);
  CHECK_THROWS_AS(PrimeField(100), InputError);
  CHECK_THROWS_AS(PrimeField(1ULL << 31), InputError);
  CHECK_NOTHROW(PrimeField(3));
}

TEST_CASE("poly_parse examples") {
  auto ring = make_ring(101, {"x", "y"});
  Poly p = poly_parse("x^2 + 3*x*y", ring);
  REQUIRE(p.size() == 2);
  CHECK(p.terms()[0].mono == Monomial::variable(0, 2));
  CHECK(p.terms()[0].coeff == 1);
  CHECK(p.terms()[1].mono == Monomial::variable(0) * Monomial::variable(1));
  CHECK(p.terms()[1].coeff == 3);

  CHECK(poly_parse("0", ring).is_zero());

  auto rx = make_ring(101, {"x"});
  CHECK(poly_parse("102*x", rx) == Poly::variable(rx, 0));
}

TEST_CASE("poly_parse errors") {
  auto ring = make_ring(101, {"x", "y"});
  CHECK_THROWS_AS(poly_parse("x + z", ring), InputError);
  CHECK_THROWS_AS(poly_parse("x +", ring), InputError);
  CHECK_THROWS_AS(poly_parse("x ^ y", ring), InputError);
  try {
    poly_parse("x + + y", ring);
    FAIL("expected a syntax error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("parse accepts optional star, juxtaposition and leading sign") {
  auto ring = make_ring(101, {"x", "y"});
  CHECK(poly_parse("-2x y^2", ring) == poly_parse("99*x*y^2", ring));
  CHECK(poly_parse("x - x", ring).is_zero());
  CHECK(poly_parse("  y*x ", ring) == poly_parse("x*y", ring));
}

TEST_CASE("print then parse is the identity on random polynomials") {
  auto ring = make_ring(101, {"x", "y", "z"});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 3), c(0, 100), n(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PolyTerm> terms;
    int count = n(rng);
    for (int k = 0; k < count; ++k) {
      int ex[3] = {e(rng), e(rng), e(rng)};
      terms.push_back({Monomial(ex), static_cast<Scalar>(c(rng))});
    }
    Poly p = Poly::from_terms(ring, terms);
    CHECK(poly_parse(p.to_string(), ring) == p);
  }
}

TEST_CASE("polynomial ring axioms") {
  auto ring = make_ring(101, {"x", "y"});
  Poly a = poly_parse("x^2 - 3*x*y + 7", ring);
  Poly b = poly_parse("y^3 + x", ring);
  Poly c = poly_parse("2*x*y - 1", ring);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a - a).is_zero());
  CHECK(poly_parse("x^2 + x*y", ring).is_homogeneous());
  CHECK_FALSE(poly_parse("x^2 + y", ring).is_homogeneous());
}

TEST_CASE("solve_linear examples") {
  PrimeField f(101);
  Matrix id = Matrix::identity(f, 2);
  auto s1 = solve_linear(id, {1, 2});
  CHECK(s1.consistent);
  CHECK(s1.particular == FpVector{1, 2});
  CHECK(s1.kernel.empty());

  Matrix zero(f, 2, 2);
  auto s2 = solve_linear(zero, {0, 0});
  CHECK(s2.consistent);
  CHECK(s2.particular == FpVector{0, 0});
  CHECK(s2.kernel.size() == 2);

  Matrix m(f, 2, 2);
  m(0, 0) = 1; m(0, 1) = 1; m(1, 0) = 2; m(1, 1) = 2;
  CHECK_FALSE(solve_linear(m, {1, 3}).consistent);

  CHECK_THROWS_AS(solve_linear(m, {1, 2, 3}), InputError);
}

TEST_CASE("solve_linear solutions satisfy the system (property)") {
  PrimeField f(101);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Scalar> d(0, 100);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (d(rng) % 3 == 0) ? 0 : d(rng);
    // Consistent right-hand side built from a known x.
    FpVector x(c);
    for (auto& v : x) v = d(rng);
    FpVector rhs = m.apply(x);
    auto sol = solve_linear(m, rhs);
    REQUIRE(sol.consistent);
    CHECK(m.apply(sol.particular) == rhs);
    CHECK(sol.kernel.size() == c - rank(m));
    for (const auto& k : sol.kernel) {
      FpVector s = sol.particular;
      for (std::size_t i = 0; i < c; ++i) s[i] = f.add(s[i], k[i]);
      CHECK(m.apply(s) == rhs);
    }
  }
}

TEST_CASE("echelon basis span membership") {
  PrimeField f(101);
  EchelonBasis b(f, 3);
  CHECK(b.insert({0, 1, 2}));
  CHECK(b.insert({1, 1, 0}));
  CHECK_FALSE(b.insert({2, 3, 2}));
  CHECK(b.contains({1, 2, 2}));
  CHECK_FALSE(b.contains({0, 0, 1}));
}

TEST_CASE("univariate factorization reproduces the input") {
  PrimeField f(101);
  std::mt19937_64 rng(0xC15);
  // (x - 3)^2 (x^2 + 1)? x^2+1 splits mod 101 since 101 = 1 mod 4; use x^2 - 2
  UPoly a(f, {98, 1});          // x - 3
  UPoly b(f, {99, 0, 1});       // x^2 - 2 (2 is a non-residue mod 101)
  UPoly c(f, {5, 1});           // x + 5
  UPoly g = a * a * b * c * c * c;
  auto fs = factor(g, rng);
  UPoly prod = UPoly::constant(f, 1);
  for (const auto& fac : fs)
    for (int k = 0; k < fac.multiplicity; ++k) prod = prod * fac.poly;
  CHECK(prod == g);
  REQUIRE(fs.size() == 3);
  CHECK(fs[2].poly == b);
  CHECK(fs[2].multiplicity == 1);

  // p-th powers exercise the square-free recursion.
  PrimeField f3(3);
  UPoly h(f3, {1, 1});  // x + 1
  UPoly h3 = h * h * h * UPoly(f3, {1, 0, 1});
  auto fs3 = factor(h3, rng);
  UPoly prod3 = UPoly::constant(f3, 1);
  for (const auto& fac : fs3)
    for (int k = 0; k < fac.multiplicity; ++k) prod3 = prod3 * fac.poly;
  CHECK(prod3 == h3);
}

TEST_CASE("minimal polynomial of a matrix") {
  PrimeField f(101);
  Matrix a(f, 3, 3);
  a(0, 0) = 2; a(1, 1) = 2; a(2, 2) = 5;
  UPoly m = minimal_polynomial(a);
  CHECK(m.degree() == 2);
  CHECK(m.evaluate(a).is_zero());
  Matrix n(f, 2, 2);
  n(0, 1) = 1;
  CHECK(minimal_polynomial(n) == UPoly(f, {0, 0, 1}));
}
