#include <doctest.h>

#include "dscode/closed_form.hpp"
#include "dscode/error.hpp"

using namespace dscode;
using namespace dscode::closed_form;

using Rows = std::vector<std::pair<std::int64_t, std::int64_t>>;

TEST_CASE("classification") {
  CHECK(classify(3, 6) == CaseTag::EvenDivides);
  CHECK(classify(3, 4) == CaseTag::EvenCoprime);
  CHECK(classify(3, 3) == CaseTag::OddDivides);
  CHECK(classify(5, 3) == CaseTag::OddCoprime);
  CHECK(theorem_number(CaseTag::EvenDivides) == 1);
  CHECK(theorem_number(CaseTag::OddCoprime) == 4);
  CHECK(to_string(CaseTag::OddDivides) == "OddDivides");
  CHECK_THROWS_AS(classify(9, 3), NotOddPrime);
  CHECK_THROWS_AS(classify(3, 1), DegreeTooSmall);
}

TEST_CASE("Gauss constants") {
  CHECK(G_even(3, 2) == 3);
  CHECK(G_even(3, 4) == -9);
  CHECK(G_even(5, 2) == -5);
  CHECK(G_even(7, 2) == 7);
  CHECK(GGbar_odd(3, 3) == 9);
  CHECK(GGbar_odd(5, 3) == 25);
  CHECK(GGbar_odd(7, 3) == 49);
  CHECK_THROWS_AS(G_even(3, 3), OddM);
  CHECK_THROWS_AS(GGbar_odd(3, 4), EvenM);
}

TEST_CASE("tables reproduce the worked examples") {
  auto check = [](int p, int m, std::int64_t n, const Rows& rows) {
    const auto pd = predicted_distribution(p, m);
    CHECK(pd.length == n);
    CHECK(pd.dimension == m);
    CHECK(pd.rows == rows);
    CHECK(predicted_length(p, m) == n);
  };
  check(3, 6, 260, {{162, 98}, {171, 324}, {180, 306}});
  check(3, 4, 29, {{18, 44}, {21, 30}, {24, 6}});
  check(3, 3, 8, {{4, 6}, {5, 6}, {6, 8}, {7, 6}});
  check(5, 5, 624, {{480, 300}, {495, 1000}, {500, 624}, {505, 1000}, {520, 200}});
  check(3, 5, 71, {{42, 30}, {45, 60}, {48, 90}, {51, 42}, {54, 20}});
  check(5, 3, 19, {{14, 36}, {15, 24}, {16, 60}, {19, 4}});
}

TEST_CASE("zero word is added back") {
  const auto d = predicted_distribution(3, 4).with_zero_word();
  CHECK(d.multiplicity(0) == 1);
  CHECK(d.total() == 81);
}

TEST_CASE("table rows always account for q - 1 codewords") {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int m = 3; m <= 12; ++m) {
      std::int64_t q = 1;
      for (int i = 0; i < m; ++i) q *= p;
      if (q > 1'000'000'000) break;
      const auto pd = predicted_distribution(p, m);
      std::int64_t total = 0;
      for (const auto& [w, a] : pd.rows) total += a;
      CHECK(total == q - 1);
    }
  }
}

// Values below were produced by the brute-force oracle before the closed
// forms were compared against them.
TEST_CASE("frozen lemma values for F_27") {
  CHECK(lemma8_value(3, 3) == 0);
  CHECK(lemma9_B(3, 3, make_bclass(3, 3, 1, 1)) == 9);
  CHECK(lemma9_B(3, 3, make_bclass(3, 3, 2, 0)) == 18);
  CHECK(lemma9_B(3, 3, make_bclass(3, 3, 2, 1)) == -9);
  CHECK(lemma_Nb_predicted(3, 3, make_bclass(3, 3, 0, 0)) == 3);
  CHECK(lemma_Nb_predicted(3, 3, make_bclass(3, 3, 2, 0)) == 5);
  CHECK(lemma10_N0a(3, 3, 1) == 3);
  const auto l11 = lemma11_counts(3, 3);
  CHECK(l11.zero_nonzero == 6);
  CHECK(l11.nonzero_nonzero == 12);
  CHECK(l11.nonzero_zero == 6);
  CHECK(lemma16_uc(3, 3, 0) == 9);
  CHECK(lemma16_uc(3, 3, 1) == 6);
  CHECK(lemma16_uc(3, 3, 2) == 12);
  CHECK(lemma17_vc(3, 3, 1) == 0);
  CHECK(lemma17_vc(3, 3, 2) == 6);
  CHECK_THROWS_AS(lemma12_V(3, 3), PDividesM);
}

TEST_CASE("frozen lemma values for F_81") {
  CHECK(lemma8_value(3, 4) == 9);
  CHECK(lemma9_B(3, 4, make_bclass(3, 4, 0, 0)) == 18);
  CHECK(lemma9_B(3, 4, make_bclass(3, 4, 2, 0)) == -36);
  CHECK(lemma9_B(3, 4, make_bclass(3, 4, 1, 1)) == -9);
  CHECK(lemma_Nb_predicted(3, 4, make_bclass(3, 4, 2, 0)) == 6);
  CHECK(lemma10_N0a(3, 4, 0) == 9);
  CHECK(lemma10_N0a(3, 4, 2) == 6);
  CHECK(lemma11_counts(3, 4).nonzero_nonzero == 42);
  CHECK(lemma12_V(3, 4) == 18);
  CHECK_THROWS_AS(lemma16_uc(3, 4, 0), EvenM);
  CHECK_THROWS_AS(lemma17_vc(3, 4, 1), CaseError);
}

TEST_CASE("class census sums to q - 1") {
  for (auto [p, m] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{3, 6}, std::pair{5, 5}, std::pair{7, 4}}) {
    std::int64_t q = 1, total = 0;
    for (int i = 0; i < m; ++i) q *= p;
    for (const auto& [label, n] : class_census(p, m)) total += n;
    CHECK(total == q - 1);
  }
  CHECK(census_label(3, 4, make_bclass(3, 4, 1, 1)) == "t2!=0,t1!=0,disc");
  CHECK(census_label(3, 3, make_bclass(3, 3, 0, 0)) == "t2=0,t1=0");
}

TEST_CASE("dispatch by identifier") {
  CHECK(evaluate(3, 4, LemmaId::L8) == 9);
  CHECK(evaluate(3, 4, LemmaId::L10, {2, {}}) == 6);
  CHECK(evaluate(3, 4, LemmaId::L9, {0, make_bclass(3, 4, 2, 0)}) == -36);
  CHECK(lemma_name(LemmaId::L12) == "lemma12");
}

TEST_CASE("claims") {
  CHECK(ss_ratio_claimed(3, 6));
  CHECK_FALSE(ss_ratio_claimed(3, 4));
  CHECK(ss_ratio_claimed(3, 8));
  CHECK(ss_ratio_claimed(5, 5));
  CHECK_FALSE(ss_ratio_claimed(3, 3));
  CHECK(dual_distance_claimed(3, 4));
  CHECK(dual_distance_claimed(5, 3));
  CHECK_FALSE(dual_distance_claimed(3, 6));
  CHECK_FALSE(dual_distance_claimed(3, 3));
}
