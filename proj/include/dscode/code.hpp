#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dscode/field.hpp"

namespace dscode {

/// D = { x in F_q^* : Tr(x^2 + x) = 0 }, in ascending canonical index order.
///
/// Holds a reference to its field; the field must outlive it.
class DefiningSet {
 public:
  explicit DefiningSet(const Field& field);

  const Field& field() const { return *field_; }
  std::span<const Elem> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem x) const { return member_[x.index]; }

 private:
  const Field* field_;
  std::vector<Elem> elements_;
  std::vector<bool> member_;
};

/// Multiset weight -> multiplicity. Only positive multiplicities are stored.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  WeightDistribution(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> rows);

  /// Adds `count` codewords of weight w; a row that reaches zero is removed.
  void add(std::int64_t w, std::int64_t count);
  std::int64_t multiplicity(std::int64_t w) const;
  const std::map<std::int64_t, std::int64_t>& entries() const { return rows_; }
  std::int64_t total() const;
  /// Distinct nonzero weights, ascending.
  std::vector<std::int64_t> nonzero_weights() const;
  /// Smallest nonzero weight, or 0 if none.
  std::int64_t min_distance() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  std::map<std::int64_t, std::int64_t> rows_;
};

/// Tr(x^2 + x) for every element, indexed canonically.
std::vector<std::uint32_t> defining_trace_table(const Field& field);

/// c_b = (Tr(b d_1), ..., Tr(b d_n)).
std::vector<std::uint32_t> codeword(const DefiningSet& ds, Elem b);
std::size_t hamming_weight(std::span<const std::uint32_t> word);

/// |N_b| = #{x in F_q : Tr(x^2 + x) = 0 and Tr(b x) = 0}, by one pass over F_q.
std::int64_t count_Nb(const Field& field, Elem b);

/// wt(c_b) = n_0 - |N_b| with n_0 = |D| + 1.
std::int64_t weight_of(const DefiningSet& ds, Elem b);

enum class Engine { Serial, Parallel };

/// Exact weight distribution over all q codewords (zero word included).
/// Throws FieldTooLarge if q exceeds max_q.
WeightDistribution brute_weight_distribution(const DefiningSet& ds, Engine engine = Engine::Parallel,
                                             int threads = 0, std::int64_t max_q = kDefaultMaxQ);

/// The first two power moments: (sum_{w>0} A_w == p^m - 1,
/// sum w A_w == p^{m-1} (p-1) n).
std::pair<bool, bool> power_moment_check(const WeightDistribution& dist, std::int64_t p, std::int64_t m,
                                         std::int64_t n);

/// True iff two coordinates are F_p^*-multiples of each other, i.e. the dual
/// code has minimum distance 2 (weight 1 is impossible since 0 is not in D).
bool dual_distance_two(const DefiningSet& ds);

struct SsRatio {
  std::int64_t w_min = 0;
  std::int64_t w_max = 0;
  bool passes = false;  // w_min / w_max > (p-1)/p, compared exactly
};

/// Throws EmptyDistribution if dist has no nonzero weight.
SsRatio secret_sharing_ratio(const WeightDistribution& dist, std::int64_t p);

/// "1+44x^18+30x^21+6x^24"; the leading 1 is the zero word.
std::string weight_enumerator_string(const WeightDistribution& dist);

/// One element per line as "c0,c1,...,c_{m-1}", low degree first.
std::string export_defining_set(const DefiningSet& ds);

/// "weight,multiplicity" header then one ascending row per weight.
std::string distribution_csv(const WeightDistribution& dist);

}  // namespace dscode
