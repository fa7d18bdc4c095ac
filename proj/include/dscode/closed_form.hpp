#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dscode/code.hpp"
#include "dscode/field.hpp"

// Closed-form weight distributions and character-sum values for the
// defining-set codes C_D, D = { x != 0 : Tr(x^2 + x) = 0 }.
//
// Everything is evaluated in exact integer/rational arithmetic. The Gauss
// sum G (even m) and the product G * Gbar (odd m) are rational integers, so
// they are fixed first and all other expressions are built from them.
namespace dscode::closed_form {

/// The (parity of m, p | m) regime; theorem_number() gives its 1-based position.
enum class CaseTag { EvenDivides, EvenCoprime, OddDivides, OddCoprime };

std::string_view to_string(CaseTag tag);
int theorem_number(CaseTag tag);

/// Throws NotOddPrime, or DegreeTooSmall when m < 2.
CaseTag classify(std::int64_t p, std::int64_t m);

/// The trace data of b that the character sums depend on.
struct BClass {
  std::uint32_t t2 = 0;  // Tr(b^2)
  std::uint32_t t1 = 0;  // Tr(b)
  bool disc = false;     // Tr(b)^2 == m Tr(b^2) in F_p
  friend constexpr auto operator<=>(const BClass&, const BClass&) = default;
};

BClass make_bclass(std::int64_t p, std::int64_t m, std::uint32_t t2, std::uint32_t t1);
BClass classify_b(const Field& field, Elem b);

/// G = -(-1)^{m(p-1)/4} p^{m/2}. Throws OddM.
std::int64_t G_even(std::int64_t p, std::int64_t m);
/// G Gbar = (-1)^{(m+1)(p-1)/4} p^{(m+1)/2}. Throws EvenM.
std::int64_t GGbar_odd(std::int64_t p, std::int64_t m);

std::int64_t predicted_length(std::int64_t p, std::int64_t m);

struct PredictedDistribution {
  CaseTag tag = CaseTag::EvenDivides;
  std::int64_t length = 0;
  std::int64_t dimension = 0;
  /// Nonzero-word rows, ascending weight, zero multiplicities pruned and
  /// coinciding weights merged.
  std::vector<std::pair<std::int64_t, std::int64_t>> rows;

  /// The rows plus the zero codeword, as a distribution.
  WeightDistribution with_zero_word() const;
};

/// Throws NonIntegralTableEntry if any table expression is not a
/// nonnegative integer (m < 3 for the odd cases, m = 2 for some even ones).
PredictedDistribution predicted_distribution(std::int64_t p, std::int64_t m);

/// sum_{y in F_p^*} sum_{x in F_q} zeta_p^{y Tr(x^2 + x)}.
std::int64_t lemma8_value(std::int64_t p, std::int64_t m);

/// B(b) = sum_{y,z in F_p^*} sum_{x in F_q} chi_1(y x^2 + y x + b z x) for b != 0.
std::int64_t lemma9_B(std::int64_t p, std::int64_t m, const BClass& cls);

/// |{x : Tr(x^2) = 0, Tr(x) = a}|.
std::int64_t lemma10_N0a(std::int64_t p, std::int64_t m, std::int64_t a);

struct Lemma11Counts {
  std::int64_t zero_nonzero = 0;     // Tr(x^2) = 0, Tr(x) != 0
  std::int64_t nonzero_nonzero = 0;  // Tr(x^2) != 0, Tr(x) != 0
  std::int64_t nonzero_zero = 0;     // Tr(x^2) != 0, Tr(x) = 0
};
Lemma11Counts lemma11_counts(std::int64_t p, std::int64_t m);

/// |{x : Tr(x) != 0, Tr(x)^2 = m Tr(x^2)}|. Throws PDividesM.
std::int64_t lemma12_V(std::int64_t p, std::int64_t m);

/// Predicted |N_b| for b != 0 of the given class.
std::int64_t lemma_Nb_predicted(std::int64_t p, std::int64_t m, const BClass& cls);

/// |{x : Tr(x^2) = c}| for odd m. Throws EvenM.
std::int64_t lemma16_uc(std::int64_t p, std::int64_t m, std::int64_t c);

/// |{x : Tr(x^2) = c, Tr(x) = 0}| for odd m with p | m and c != 0.
std::int64_t lemma17_vc(std::int64_t p, std::int64_t m, std::int64_t c);

/// Label of the coarsest class of b != 0 whose size the lemmas determine.
std::string census_label(std::int64_t p, std::int64_t m, const BClass& cls);

/// Predicted number of b in F_q^* per census label; the sizes sum to q - 1.
std::vector<std::pair<std::string, std::int64_t>> class_census(std::int64_t p, std::int64_t m);

/// Whether w_min/w_max > (p-1)/p is claimed for this (p, m).
bool ss_ratio_claimed(std::int64_t p, std::int64_t m);
/// Whether the dual distance is asserted to be 2 (the two-moment cases).
bool dual_distance_claimed(std::int64_t p, std::int64_t m);

/// Lemma identifiers shared by the closed forms and their brute-force oracles.
enum class LemmaId { L8, L9, L10, L11_ZN, L11_NN, L11_NZ, L12, Nb, L16, L17 };

std::string_view lemma_name(LemmaId id);

/// Extra parameters: `c` for L10/L16/L17, `cls` for L9/Nb.
struct LemmaArgs {
  std::int64_t c = 0;
  BClass cls;
};

std::int64_t evaluate(std::int64_t p, std::int64_t m, LemmaId id, const LemmaArgs& args = {});

}  // namespace dscode::closed_form
