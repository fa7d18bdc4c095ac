#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dscode/closed_form.hpp"
#include "dscode/cyclotomic.hpp"
#include "dscode/field.hpp"

// Brute-force ground truth for every closed form in closed_form.hpp.
// Character sums are accumulated as exact elements of Z[zeta_p]; counts are
// direct enumerations over F_q. Nothing here uses a Gauss-sum value.
namespace dscode::oracle {

/// sum_{y in F_p^*} sum_{x in F_q} zeta_p^{y Tr(x^2 + x)} as an exact cyclotomic integer.
CycInt lemma8_exact(const Field& field);
std::int64_t lemma8(const Field& field);

/// B(b) as an exact cyclotomic integer, then as a rational integer.
CycInt lemma9_exact(const Field& field, Elem b);
std::int64_t lemma9(const Field& field, Elem b);

std::int64_t lemma10(const Field& field, std::int64_t a);
closed_form::Lemma11Counts lemma11(const Field& field);
std::int64_t lemma12(const Field& field);
/// |N_b| by direct enumeration.
std::int64_t nb(const Field& field, Elem b);
std::int64_t lemma16(const Field& field, std::int64_t c);
std::int64_t lemma17(const Field& field, std::int64_t c);

/// Number of b in F_q^* per census label (see closed_form::census_label).
std::vector<std::pair<std::string, std::int64_t>> class_census(const Field& field);

/// B(b) and |N_b| for every b in F_q (index = canonical index), from one
/// parallel sweep of joint trace histograms.
struct PerB {
  std::vector<std::int64_t> B;
  std::vector<std::int64_t> Nb;
};
PerB all_b(const Field& field, int threads = 0);

struct Args {
  std::int64_t c = 0;
  Elem b;
};

std::int64_t evaluate(const Field& field, closed_form::LemmaId id, const Args& args = {});
/// Builds F_{p^m} first; throws FieldTooLarge when p^m > max_q.
std::int64_t evaluate(std::int64_t p, std::int64_t m, closed_form::LemmaId id, const Args& args = {},
                      std::int64_t max_q = kDefaultMaxQ);

}  // namespace dscode::oracle
