#include <omp.h>

#include "dscode/kernels.hpp"

namespace dscode::kernels {

namespace {
int width(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }
}  // namespace

std::vector<std::uint64_t> weight_histogram_parallel(const Field& field, std::span<const Elem> support,
                                                     int threads) {
  const std::size_t n = support.size();
  std::vector<std::uint32_t> logs(n);
  for (std::size_t i = 0; i < n; ++i) logs[i] = field.log(support[i]);

  std::vector<std::uint64_t> hist(n + 1, 0);
  hist[0] = 1;
  const auto trace = field.trace_table();
  const std::int64_t order = field.q() - 1;

#pragma omp parallel num_threads(width(threads))
  {
    // Integer partial histograms merged under a critical section: the sum
    // is order-independent, so the result does not depend on scheduling.
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(static)
    for (std::int64_t lb = 0; lb < order; ++lb) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < n; ++i) {
        w += trace[field.exp(static_cast<std::uint32_t>(lb) + logs[i]).index] != 0;
      }
      ++local[w];
    }
#pragma omp critical(dscode_weight_merge)
    for (std::size_t w = 0; w <= n; ++w) hist[w] += local[w];
  }
  return hist;
}

std::vector<std::uint32_t> joint_trace_histograms_parallel(const Field& field,
                                                           std::span<const std::uint32_t> f_trace,
                                                           int threads) {
  const std::uint32_t p = field.p(), q = field.q();
  std::vector<std::uint32_t> out(std::size_t{q} * p * p, 0);
  // Each b owns a disjoint slice of the output.
#pragma omp parallel for schedule(dynamic, 16) num_threads(width(threads))
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(q); ++b) {
    std::uint32_t* cell = out.data() + static_cast<std::size_t>(b) * p * p;
    const Elem be{static_cast<std::uint32_t>(b)};
    for (std::uint32_t x = 0; x < q; ++x) {
      ++cell[f_trace[x] * p + field.trace(field.mul(be, Elem{x}))];
    }
  }
  return out;
}

}  // namespace dscode::kernels
