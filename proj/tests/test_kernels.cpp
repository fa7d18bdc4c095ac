#include <doctest.h>

#include "dscode/code.hpp"
#include "dscode/field.hpp"
#include "dscode/kernels.hpp"

using namespace dscode;

TEST_CASE("parallel kernels equal the serial reference") {
  for (auto [p, m] : {std::pair{3, 5}, std::pair{5, 3}, std::pair{7, 3}, std::pair{3, 6}}) {
    const Field f(p, m);
    const DefiningSet ds(f);
    const auto t = defining_trace_table(f);
    const auto ws = kernels::weight_histogram_serial(f, ds.elements());
    const auto js = kernels::joint_trace_histograms_serial(f, t);
    for (int threads : {1, 2, 3, 8}) {
      CHECK(kernels::weight_histogram_parallel(f, ds.elements(), threads) == ws);
      CHECK(kernels::joint_trace_histograms_parallel(f, t, threads) == js);
    }
  }
}

TEST_CASE("weight histogram shape") {
  const Field f(3, 4);
  const DefiningSet ds(f);
  const auto h = kernels::weight_histogram_serial(f, ds.elements());
  CHECK(h.size() == ds.size() + 1);
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  CHECK(total == f.q());
  CHECK(h[0] == 1);
}

TEST_CASE("joint histogram rows add up to the field") {
  const Field f(5, 2);
  const auto t = defining_trace_table(f);
  const auto j = kernels::joint_trace_histograms_serial(f, t);
  for (std::uint32_t b = 0; b < f.q(); ++b) {
    std::uint64_t total = 0;
    for (std::uint32_t k = 0; k < f.p() * f.p(); ++k) total += j[b * f.p() * f.p() + k];
    CHECK(total == f.q());
  }
}
