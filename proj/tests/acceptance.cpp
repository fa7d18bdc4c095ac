// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dscode/closed_form.hpp"
#include "dscode/code.hpp"
#include "dscode/cyclotomic.hpp"
#include "dscode/field.hpp"
#include "dscode/oracle.hpp"
#include "dscode/report.hpp"

using namespace dscode;
namespace cf = dscode::closed_form;

namespace {

const std::vector<std::pair<int, int>> kGrid{{3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 8},
                                             {5, 3}, {5, 4}, {5, 5}, {7, 3}, {7, 4}};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << what;
  }
};

std::string pm(int p, int m) { return "(" + std::to_string(p) + "," + std::to_string(m) + ")"; }

std::string params(const WeightDistribution& d, std::size_t n, int m) {
  return "[" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(d.min_distance()) + "]";
}

void golden(Outcome& o) {
  struct Case {
    int p, m;
    const char* params;
    const char* enumerator;
  };
  const Case cases[] = {
      {3, 6, "[260,6,162]", "1+98x^162+324x^171+306x^180"},
      {3, 4, "[29,4,18]", "1+44x^18+30x^21+6x^24"},
      {3, 3, "[8,3,4]", "1+6x^4+6x^5+8x^6+6x^7"},
      {5, 5, "[624,5,480]", "1+300x^480+1000x^495+624x^500+1000x^505+200x^520"},
      {3, 5, "[71,5,42]", "1+30x^42+60x^45+90x^48+42x^51+20x^54"},
      {5, 3, "[19,3,14]", "1+36x^14+24x^15+60x^16+4x^19"},
  };
  for (const auto& c : cases) {
    const Field f(c.p, c.m);
    const DefiningSet ds(f);
    const auto d = brute_weight_distribution(ds, Engine::Serial);
    const std::string got_params = params(d, ds.size(), c.m), got_enum = weight_enumerator_string(d);
    if (got_params != c.params || got_enum != c.enumerator)
      o.fail(pm(c.p, c.m) + " gave " + got_params + " " + got_enum);
  }
  if (o.pass) o.detail << "6 examples exact";
}

void prediction_grid(Outcome& o) {
  bool seen[4] = {false, false, false, false};
  for (auto [p, m] : kGrid) {
    const Field f(p, m);
    const DefiningSet ds(f);
    const auto brute = brute_weight_distribution(ds, Engine::Serial);
    const auto pd = cf::predicted_distribution(p, m);
    seen[static_cast<int>(pd.tag)] = true;
    if (pd.with_zero_word() != brute || pd.length != static_cast<std::int64_t>(ds.size()))
      o.fail(pm(p, m) + " predicted " + weight_enumerator_string(pd.with_zero_word()) + " brute " +
             weight_enumerator_string(brute));
  }
  for (int t = 0; t < 4; ++t) {
    if (!seen[t]) o.fail(std::string("case ") + std::string(cf::to_string(static_cast<cf::CaseTag>(t))) + " not covered");
  }
  if (o.pass) o.detail << kGrid.size() << " entries, all four cases";
}

void gauss_suite(Outcome& o) {
  int run = 0;
  for (int p : {3, 5, 7, 11, 13}) {
    for (int m : {1, 2, 3}) {
      std::int64_t q = 1;
      for (int i = 0; i < m; ++i) q *= p;
      if (q > kDefaultMaxQ) continue;
      const auto g = report::gauss_check(Field(p, m));
      ++run;
      if (!g.square_identity) o.fail(pm(p, m) + " G^2=" + std::to_string(g.square) + " expected " +
                                     std::to_string(g.expected_square));
      if (!g.within_tolerance) o.fail(pm(p, m) + " |exact-closed|=" + std::to_string(g.abs_error));
    }
  }
  if (o.pass) o.detail << run << " (p,m) pairs";
}

void lemma_suite(Outcome& o) {
  std::size_t rows = 0;
  for (auto [p, m] : kGrid) {
    const Field f(p, m);
    for (const auto& l : report::lemma_checks(f, 1)) {
      ++rows;
      if (!l.match)
        o.fail(pm(p, m) + " " + l.id + " closed=" + std::to_string(l.closed) + " oracle=" + std::to_string(l.oracle));
    }
  }
  if (o.pass) o.detail << rows << " closed/oracle rows";
}

void structural(Outcome& o) {
  std::ostringstream reported;
  for (auto [p, m] : kGrid) {
    const Field f(p, m);
    const DefiningSet ds(f);
    const auto d = brute_weight_distribution(ds, Engine::Serial);
    const auto n = static_cast<std::int64_t>(ds.size());
    const auto mom = power_moment_check(d, p, m, n);
    if (!mom.first || !mom.second) o.fail(pm(p, m) + " power moments");
    const bool dual = dual_distance_two(ds);
    if (cf::dual_distance_claimed(p, m)) {
      if (!dual) o.fail(pm(p, m) + " dual distance is not 2 (asserted)");
    } else {
      reported << ' ' << pm(p, m) << "=" << (dual ? "2" : ">2");
    }
    const auto ss = secret_sharing_ratio(d, p);
    if (cf::ss_ratio_claimed(p, m) && !ss.passes)
      o.fail(pm(p, m) + " ss ratio " + std::to_string(ss.w_min) + "/" + std::to_string(ss.w_max));
    if (p == 3 && m == 3 && ss.passes) o.fail("(3,3) ss ratio should miss the threshold");
  }
  if (o.pass) o.detail << "moments, claimed dual distances and ss ratios hold;";
  else o.detail << ";";
  o.detail << " unasserted dual distance:" << reported.str();
}

void properties(Outcome& o) {
  std::mt19937 rng(0x5eed);
  std::size_t samples = 0;
  for (auto [p, m] : kGrid) {
    const Field f(p, m);
    const DefiningSet ds(f);
    const auto n0 = static_cast<std::int64_t>(ds.size()) + 1;
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    for (int i = 0; i < 1000; ++i, ++samples) {
      const Elem b{pick(rng)};
      const auto direct = static_cast<std::int64_t>(hamming_weight(codeword(ds, b)));
      if (direct != n0 - count_Nb(f, b)) {
        o.fail(pm(p, m) + " two-path weight at b=" + std::to_string(b.index));
        break;
      }
    }
    for (int i = 0; i < 50; ++i) {
      const Elem a{pick(rng)}, b{pick(rng)};
      const auto ca = codeword(ds, a), cb = codeword(ds, b), cs = codeword(ds, f.add(a, b));
      for (std::size_t k = 0; k < ds.size(); ++k) {
        if (cs[k] != (ca[k] + cb[k]) % f.p()) {
          o.fail(pm(p, m) + " linearity");
          i = 50;
          break;
        }
      }
    }
    std::int64_t census = 0, enumerated = 0;
    for (const auto& [label, k] : cf::class_census(p, m)) census += k;
    for (const auto& [label, k] : oracle::class_census(f)) enumerated += k;
    if (census != f.q() - 1 || enumerated != f.q() - 1) o.fail(pm(p, m) + " class census");
  }
  for (auto [p, m] : {std::pair{3, 4}, std::pair{5, 3}}) {
    const auto moduli = Field::irreducible_moduli(p, m, 2);
    const Field f0(p, moduli[0]), f1(p, moduli[1]);
    if (moduli[0] == moduli[1] ||
        brute_weight_distribution(DefiningSet(f0), Engine::Serial) !=
            brute_weight_distribution(DefiningSet(f1), Engine::Serial))
      o.fail(pm(p, m) + " basis dependence");
  }
  if (o.pass) o.detail << samples << " random b, linearity, census, two moduli";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"golden examples", golden},
      {"prediction grid", prediction_grid},
      {"gauss sums", gauss_suite},
      {"lemma oracles", lemma_suite},
      {"structural invariants", structural},
      {"property tests", properties},
  };
  int failures = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", index, name, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
