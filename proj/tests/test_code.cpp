#include <doctest.h>

#include "dscode/code.hpp"
#include "dscode/error.hpp"
#include "dscode/field.hpp"

using namespace dscode;

TEST_CASE("defining set membership") {
  const Field f(3, 3);
  const DefiningSet ds(f);
  CHECK(ds.size() == 8);
  CHECK_FALSE(ds.contains(f.zero()));
  for (Elem x : ds.elements()) CHECK(f.trace(f.add(f.square(x), x)) == 0);
  std::size_t count = 0;
  for (std::uint32_t a = 1; a < f.q(); ++a) count += f.trace(f.add(f.square(Elem{a}), Elem{a})) == 0;
  CHECK(count == ds.size());
}

TEST_CASE("weight distribution container") {
  WeightDistribution d{{0, 1}, {4, 6}};
  d.add(5, 2);
  d.add(5, -2);
  CHECK(d.multiplicity(5) == 0);
  CHECK(d.entries().size() == 2);
  CHECK(d.total() == 7);
  CHECK(d.min_distance() == 4);
  CHECK(d.nonzero_weights() == std::vector<std::int64_t>{4});
  CHECK(WeightDistribution{{0, 1}}.min_distance() == 0);
}

TEST_CASE("small example by enumeration") {
  const Field f(3, 4);
  const DefiningSet ds(f);
  const auto serial = brute_weight_distribution(ds, Engine::Serial);
  CHECK(serial == WeightDistribution{{0, 1}, {18, 44}, {21, 30}, {24, 6}});
  CHECK(brute_weight_distribution(ds, Engine::Parallel, 2) == serial);
  CHECK(weight_enumerator_string(serial) == "1+44x^18+30x^21+6x^24");
  CHECK(distribution_csv(serial) == "weight,multiplicity\n0,1\n18,44\n21,30\n24,6\n");
  CHECK_THROWS_AS(brute_weight_distribution(ds, Engine::Serial, 0, 50), FieldTooLarge);
}

TEST_CASE("weight via N_b agrees with the codeword") {
  const Field f(5, 3);
  const DefiningSet ds(f);
  for (std::uint32_t b = 0; b < f.q(); ++b) {
    const auto w = static_cast<std::int64_t>(hamming_weight(codeword(ds, Elem{b})));
    CHECK(w == weight_of(ds, Elem{b}));
    CHECK(w == static_cast<std::int64_t>(ds.size()) + 1 - count_Nb(f, Elem{b}));
  }
}

TEST_CASE("power moments, dual distance and secret sharing") {
  const Field f(3, 4);
  const DefiningSet ds(f);
  const auto d = brute_weight_distribution(ds);
  CHECK(power_moment_check(d, 3, 4, 29) == std::pair{true, true});
  CHECK(power_moment_check(d, 3, 4, 30) == std::pair{true, false});
  CHECK(dual_distance_two(ds));
  const auto ss = secret_sharing_ratio(d, 3);
  CHECK(ss.w_min == 18);
  CHECK(ss.w_max == 24);
  CHECK(ss.passes);  // 3/4 > 2/3
  CHECK_FALSE(secret_sharing_ratio(WeightDistribution{{0, 1}, {2, 1}, {3, 1}}, 3).passes);  // 2/3 is not > 2/3
  CHECK_THROWS_AS(secret_sharing_ratio(WeightDistribution{{0, 1}}, 3), EmptyDistribution);
}

TEST_CASE("defining set export") {
  const Field f(3, 2);
  const DefiningSet ds(f);
  const std::string text = export_defining_set(ds);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == ds.size());
  CHECK(text.find(',') != std::string::npos);
}
