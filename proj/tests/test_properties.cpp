// Randomized invariants; every generator is seeded so failures reproduce.
#include <doctest.h>

#include <random>

#include "dscode/closed_form.hpp"
#include "dscode/code.hpp"
#include "dscode/field.hpp"

using namespace dscode;

namespace {

std::uint32_t random_elem(std::mt19937& rng, const Field& f) {
  return std::uniform_int_distribution<std::uint32_t>(0, f.q() - 1)(rng);
}

}  // namespace

TEST_CASE("two weight paths agree on random b") {
  std::mt19937 rng(20240611);
  for (auto [p, m] : {std::pair{3, 5}, std::pair{5, 4}, std::pair{7, 3}}) {
    const Field f(p, m);
    const DefiningSet ds(f);
    for (int i = 0; i < 300; ++i) {
      const Elem b{random_elem(rng, f)};
      CHECK(static_cast<std::int64_t>(hamming_weight(codeword(ds, b))) ==
            static_cast<std::int64_t>(ds.size()) + 1 - count_Nb(f, b));
    }
  }
}

TEST_CASE("codewords are linear in b") {
  std::mt19937 rng(7);
  const Field f(5, 3);
  const DefiningSet ds(f);
  for (int i = 0; i < 200; ++i) {
    const Elem a{random_elem(rng, f)}, b{random_elem(rng, f)};
    const std::uint32_t lambda = std::uniform_int_distribution<std::uint32_t>(1, 4)(rng);
    const auto ca = codeword(ds, a), cb = codeword(ds, b);
    const auto sum = codeword(ds, f.add(a, b));
    const auto scaled = codeword(ds, f.mul(f.prime(lambda), a));
    for (std::size_t k = 0; k < ds.size(); ++k) {
      CHECK(sum[k] == (ca[k] + cb[k]) % 5);
      CHECK(scaled[k] == (lambda * ca[k]) % 5);
    }
  }
}

TEST_CASE("distribution does not depend on the modulus") {
  for (auto [p, m] : {std::pair{3, 4}, std::pair{5, 3}}) {
    const auto moduli = Field::irreducible_moduli(p, m, 2);
    REQUIRE(moduli.size() == 2);
    REQUIRE(moduli[0] != moduli[1]);
    const Field f0(p, moduli[0]), f1(p, moduli[1]);
    CHECK(brute_weight_distribution(DefiningSet(f0)) == brute_weight_distribution(DefiningSet(f1)));
  }
}

TEST_CASE("Frobenius preserves weights") {
  std::mt19937 rng(99);
  const Field f(3, 6);
  const DefiningSet ds(f);
  for (int i = 0; i < 100; ++i) {
    const Elem b{random_elem(rng, f)};
    CHECK(weight_of(ds, b) == weight_of(ds, f.pow(b, 3)));
  }
}

TEST_CASE("quadratic character is multiplicative") {
  std::mt19937 rng(3);
  const Field f(7, 3);
  for (int i = 0; i < 500; ++i) {
    const Elem x{random_elem(rng, f)}, y{random_elem(rng, f)};
    CHECK(f.quad_char(f.mul(x, y)) == f.quad_char(x) * f.quad_char(y));
  }
}

TEST_CASE("every nonzero b falls in exactly one class") {
  for (auto [p, m] : {std::pair{3, 3}, std::pair{5, 3}, std::pair{3, 6}}) {
    const Field f(p, m);
    std::int64_t total = 0;
    for (const auto& [label, n] : closed_form::class_census(p, m)) total += n;
    CHECK(total == static_cast<std::int64_t>(f.q()) - 1);
  }
}
