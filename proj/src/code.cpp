#include "dscode/code.hpp"

#include <sstream>

#include "dscode/checked.hpp"
#include "dscode/error.hpp"
#include "dscode/kernels.hpp"

namespace dscode {

DefiningSet::DefiningSet(const Field& field) : field_(&field), member_(field.q(), false) {
  const auto t = defining_trace_table(field);
  for (std::uint32_t x = 1; x < field.q(); ++x) {
    if (t[x] == 0) {
      elements_.push_back(Elem{x});
      member_[x] = true;
    }
  }
}

WeightDistribution::WeightDistribution(
    std::initializer_list<std::pair<const std::int64_t, std::int64_t>> rows) {
  for (const auto& [w, a] : rows) add(w, a);
}

void WeightDistribution::add(std::int64_t w, std::int64_t count) {
  if (count == 0) return;
  auto& a = rows_[w];
  a = checked_add(a, count);
  if (a == 0) rows_.erase(w);
}

std::int64_t WeightDistribution::multiplicity(std::int64_t w) const {
  const auto it = rows_.find(w);
  return it == rows_.end() ? 0 : it->second;
}

std::int64_t WeightDistribution::total() const {
  std::int64_t t = 0;
  for (const auto& [w, a] : rows_) t = checked_add(t, a);
  return t;
}

std::vector<std::int64_t> WeightDistribution::nonzero_weights() const {
  std::vector<std::int64_t> out;
  for (const auto& [w, a] : rows_) {
    if (w != 0) out.push_back(w);
  }
  return out;
}

std::int64_t WeightDistribution::min_distance() const {
  const auto ws = nonzero_weights();
  return ws.empty() ? 0 : ws.front();
}

std::vector<std::uint32_t> defining_trace_table(const Field& field) {
  std::vector<std::uint32_t> t(field.q());
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    const Elem e{x};
    t[x] = field.trace(field.add(field.square(e), e));
  }
  return t;
}

std::vector<std::uint32_t> codeword(const DefiningSet& ds, Elem b) {
  const Field& f = ds.field();
  std::vector<std::uint32_t> c;
  c.reserve(ds.size());
  for (Elem d : ds.elements()) c.push_back(f.trace(f.mul(b, d)));
  return c;
}

std::size_t hamming_weight(std::span<const std::uint32_t> word) {
  std::size_t w = 0;
  for (auto c : word) w += c != 0;
  return w;
}

std::int64_t count_Nb(const Field& field, Elem b) {
  std::int64_t count = 0;
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    const Elem e{x};
    if (field.trace(field.add(field.square(e), e)) == 0 && field.trace(field.mul(b, e)) == 0) ++count;
  }
  return count;
}

std::int64_t weight_of(const DefiningSet& ds, Elem b) {
  const auto n0 = static_cast<std::int64_t>(ds.size()) + 1;
  return n0 - count_Nb(ds.field(), b);
}

WeightDistribution brute_weight_distribution(const DefiningSet& ds, Engine engine, int threads,
                                             std::int64_t max_q) {
  const Field& f = ds.field();
  if (f.q() > max_q) throw FieldTooLarge(f.p(), f.m(), max_q);
  const auto hist = engine == Engine::Serial ? kernels::weight_histogram_serial(f, ds.elements())
                                             : kernels::weight_histogram_parallel(f, ds.elements(), threads);
  WeightDistribution dist;
  for (std::size_t w = 0; w < hist.size(); ++w) dist.add(static_cast<std::int64_t>(w), static_cast<std::int64_t>(hist[w]));
  return dist;
}

std::pair<bool, bool> power_moment_check(const WeightDistribution& dist, std::int64_t p, std::int64_t m,
                                         std::int64_t n) {
  std::int64_t count = 0, first = 0;
  for (const auto& [w, a] : dist.entries()) {
    if (w == 0) continue;
    count = checked_add(count, a);
    first = checked_add(first, checked_mul(w, a));
  }
  const std::int64_t q = checked_pow(p, m);
  const std::int64_t expected_first = checked_mul(checked_mul(checked_pow(p, m - 1), p - 1), n);
  return {count == q - 1, first == expected_first};
}

bool dual_distance_two(const DefiningSet& ds) {
  const Field& f = ds.field();
  for (Elem d : ds.elements()) {
    for (std::uint32_t lambda = 2; lambda < f.p(); ++lambda) {
      if (ds.contains(f.mul(f.prime(lambda), d))) return true;
    }
  }
  return false;
}

SsRatio secret_sharing_ratio(const WeightDistribution& dist, std::int64_t p) {
  const auto ws = dist.nonzero_weights();
  if (ws.empty()) throw EmptyDistribution();
  SsRatio r;
  r.w_min = ws.front();
  r.w_max = ws.back();
  r.passes = checked_mul(r.w_min, p) > checked_mul(r.w_max, p - 1);
  return r;
}

std::string weight_enumerator_string(const WeightDistribution& dist) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, a] : dist.entries()) {
    if (!first) os << '+';
    first = false;
    os << a;
    if (w == 1) os << 'x';
    else if (w > 1) os << "x^" << w;
  }
  return first ? "0" : os.str();
}

std::string export_defining_set(const DefiningSet& ds) {
  std::ostringstream os;
  for (Elem d : ds.elements()) {
    const auto c = ds.field().coeffs(d);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << '\n';
  }
  return os.str();
}

std::string distribution_csv(const WeightDistribution& dist) {
  std::ostringstream os;
  os << "weight,multiplicity\n";
  for (const auto& [w, a] : dist.entries()) os << w << ',' << a << '\n';
  return os.str();
}

}  // namespace dscode
