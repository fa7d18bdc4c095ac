#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dscode/field.hpp"

// Enumeration kernels. Every kernel has a serial reference and an OpenMP
// version; the two return bit-identical results for any thread count.
namespace dscode::kernels {

/// Histogram (index = weight, length support.size()+1) of the Hamming
/// weights of (Tr(b d))_{d in support} over all b in F_q.
std::vector<std::uint64_t> weight_histogram_serial(const Field& field, std::span<const Elem> support);
std::vector<std::uint64_t> weight_histogram_parallel(const Field& field, std::span<const Elem> support,
                                                     int threads = 0);

/// For every b in F_q, the p x p table of counts
///   #{x in F_q : f_trace[x] == s and Tr(b x) == t}
/// stored at out[(b * p + s) * p + t]. f_trace holds one trace value per
/// field element, e.g. Tr(x^2 + x).
std::vector<std::uint32_t> joint_trace_histograms_serial(const Field& field,
                                                         std::span<const std::uint32_t> f_trace);
std::vector<std::uint32_t> joint_trace_histograms_parallel(const Field& field,
                                                           std::span<const std::uint32_t> f_trace,
                                                           int threads = 0);

}  // namespace dscode::kernels
