#include "dscode/kernels.hpp"

namespace dscode::kernels {

std::vector<std::uint64_t> weight_histogram_serial(const Field& field, std::span<const Elem> support) {
  const std::size_t n = support.size();
  std::vector<std::uint32_t> logs(n);
  for (std::size_t i = 0; i < n; ++i) logs[i] = field.log(support[i]);

  std::vector<std::uint64_t> hist(n + 1, 0);
  hist[0] = 1;  // b = 0
  const auto trace = field.trace_table();
  for (std::uint32_t lb = 0; lb + 1 < field.q(); ++lb) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += trace[field.exp(lb + logs[i]).index] != 0;
    ++hist[w];
  }
  return hist;
}

std::vector<std::uint32_t> joint_trace_histograms_serial(const Field& field,
                                                         std::span<const std::uint32_t> f_trace) {
  const std::uint32_t p = field.p(), q = field.q();
  std::vector<std::uint32_t> out(std::size_t{q} * p * p, 0);
  for (std::uint32_t b = 0; b < q; ++b) {
    std::uint32_t* cell = out.data() + std::size_t{b} * p * p;
    for (std::uint32_t x = 0; x < q; ++x) {
      ++cell[f_trace[x] * p + field.trace(field.mul(Elem{b}, Elem{x}))];
    }
  }
  return out;
}

}  // namespace dscode::kernels
