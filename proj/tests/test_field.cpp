#include <doctest.h>

#include "dscode/error.hpp"
#include "dscode/field.hpp"

using namespace dscode;

TEST_CASE("small number theory helpers") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(13));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(1));
  CHECK_FALSE(is_odd_prime(-3));
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(-1, 5) == 1);
  CHECK(legendre(-1, 7) == -1);
  CHECK(legendre(14, 7) == 0);
  CHECK(mod_p(-4, 3) == 2);
  CHECK(prime_factors(242) == std::vector<std::uint64_t>{2, 11});
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field(4, 2), NotOddPrime);
  CHECK_THROWS_AS(Field(2, 3), NotOddPrime);
  CHECK_THROWS_AS(Field(3, 0), DegreeTooSmall);
  CHECK_THROWS_AS(Field(3, 10), FieldTooLarge);
  CHECK_THROWS_AS(Field(3, 9, 1000), FieldTooLarge);
  CHECK_NOTHROW(Field(3, 9));
  // x^2 + 1 is irreducible over F_3, x^2 + 2 = (x+1)(x+2) is not.
  CHECK_NOTHROW(Field(3, std::vector<std::uint32_t>{1, 0, 1}));
  CHECK_THROWS_AS(Field(3, std::vector<std::uint32_t>{2, 0, 1}), ReducibleModulus);
}

TEST_CASE("default modulus is the first irreducible") {
  const Field f(3, 2);
  CHECK(std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()) ==
        std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::irreducible_moduli(3, 2, 3).size() == 3);
  CHECK(Field::irreducible_moduli(3, 2, 3)[0] == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("field axioms hold exhaustively in F_27 and F_25") {
  for (auto [p, m] : {std::pair{3, 3}, std::pair{5, 2}}) {
    const Field f(p, m);
    CHECK(f.q() == (p == 3 ? 27u : 25u));
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      const Elem x{a};
      CHECK(f.add(x, f.neg(x)) == f.zero());
      CHECK(f.mul(x, f.one()) == x);
      if (a != 0) CHECK(f.mul(x, f.inv(x)) == f.one());
      CHECK(f.from_coeffs(f.coeffs(x)) == x);
      CHECK(f.pow(x, f.q()) == x);
      for (std::uint32_t c = 0; c < f.q(); c += 5) {
        const Elem y{c};
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.sub(f.add(x, y), y) == x);
        CHECK(f.mul(f.add(x, y), x) == f.add(f.square(x), f.mul(y, x)));
      }
    }
    CHECK_THROWS_AS(f.inv(f.zero()), DivisionByZero);
  }
}

TEST_CASE("generator has full order and log/exp invert") {
  const Field f(5, 3);
  std::vector<bool> seen(f.q(), false);
  for (std::uint32_t k = 0; k + 1 < f.q(); ++k) {
    const Elem x = f.exp(k);
    CHECK_FALSE(seen[x.index]);
    seen[x.index] = true;
    CHECK(f.log(x) == k);
  }
}

TEST_CASE("trace table agrees with the Frobenius definition") {
  for (auto [p, m] : {std::pair{3, 4}, std::pair{5, 3}, std::pair{7, 2}}) {
    const Field f(p, m);
    std::vector<int> per_value(p, 0);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      CHECK(f.trace(Elem{a}) == f.trace_frobenius(Elem{a}));
      ++per_value[f.trace(Elem{a})];
    }
    // Tr is onto F_p with equal fibres.
    for (int c : per_value) CHECK(c == static_cast<int>(f.q() / f.p()));
    // Tr(a) = m a on the prime subfield.
    for (std::uint32_t a = 0; a < f.p(); ++a) CHECK(f.trace(f.prime(a)) == (a * f.m()) % f.p());
  }
}

TEST_CASE("quadratic character") {
  const Field f(7, 2);
  int plus = 0, minus = 0;
  for (std::uint32_t a = 1; a < f.q(); ++a) {
    const int e = f.quad_char(Elem{a});
    plus += e == 1;
    minus += e == -1;
    CHECK(f.quad_char(f.square(Elem{a})) == 1);
  }
  CHECK(plus == minus);
  CHECK(f.quad_char(f.zero()) == 0);
  // Over an even-degree extension every prime-field element is a square.
  for (std::uint32_t a = 1; a < f.p(); ++a) CHECK(f.quad_char(f.prime(a)) == 1);
  const Field g(7, 1);
  CHECK(g.quad_char(g.prime(3)) == legendre(3, 7));
}
