#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dscode/closed_form.hpp"
#include "dscode/code.hpp"
#include "dscode/cyclotomic.hpp"
#include "dscode/error.hpp"
#include "dscode/field.hpp"

namespace dscode::report {

/// Process exit codes. Stable across versions.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kCapExceeded = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { Json, Csv, Text };

struct Checks {
  bool distribution = true;
  bool lemmas = true;
  bool gauss = true;
  bool moments = true;
  bool dual = true;
  bool ss_ratio = true;
};

using Entry = std::pair<std::int64_t, std::int64_t>;  // (p, m)

struct RunConfig {
  std::vector<Entry> entries;
  std::int64_t max_q = kDefaultMaxQ;
  std::optional<Format> format;  // unset: per-command default
  std::string out;               // empty: standard output
  Checks checks;
  int jobs = 0;  // 0: OpenMP default
  bool timestamps = false;
  bool enumerate = true;            // build: brute-force the distribution
  bool corrupt_prediction = false;  // test hook: perturb the predicted table
};

/// "3,3;3,4;5,3". Throws UsageError.
std::vector<Entry> parse_grid(std::string_view text);
/// Comma list drawn from distribution, lemmas, gauss, moments, dual, ss-ratio; "all" enables everything.
Checks parse_checks(std::string_view text);
Format parse_format(std::string_view text);

/// CAP and JOBS from the environment (lookup returns nullopt when unset).
void apply_env(RunConfig& cfg, const std::function<std::optional<std::string>(const char*)>& lookup);
/// key=value lines; '#' starts a comment. Keys: p, m, grid, max_q, format,
/// out, checks, jobs, timestamps.
void apply_config_text(RunConfig& cfg, std::string_view text);

struct LemmaCheck {
  std::string id;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::int64_t closed = 0;
  std::int64_t oracle = 0;
  bool match = false;
};

/// Lemma evaluators against brute-force oracles for every realized parameter,
/// plus the b-class census. Every b in F_q^* is checked for the per-b lemmas;
/// one row is reported per realized class.
std::vector<LemmaCheck> lemma_checks(const Field& field, int threads = 0);

struct GaussCheck {
  CycInt exact;
  ClosedGauss closed;
  std::complex<double> exact_embedded;
  double abs_error = 0.0;
  double tolerance = 0.0;      // 1e-9 * p^{m/2}
  std::int64_t square = 0;     // G^2 as a rational integer (0 if not rational)
  std::int64_t expected_square = 0;  // eta(-1) q
  bool square_identity = false;
  bool within_tolerance = false;
  bool ok() const { return square_identity && within_tolerance; }
};

GaussCheck gauss_check(const Field& field);

struct VerifyReport {
  std::int64_t p = 0, m = 0;
  closed_form::CaseTag tag = closed_form::CaseTag::EvenDivides;
  bool in_hypothesis = true;  // m > 2
  std::vector<std::string> notes;

  std::int64_t n_bruteforce = 0;
  std::int64_t n_predicted = 0;
  WeightDistribution bruteforce;
  WeightDistribution predicted;  // zero word included
  bool prediction_available = false;
  bool match = false;

  std::pair<bool, bool> moments{false, false};
  bool dual_distance_two = false;
  bool dual_claimed = false;
  SsRatio ss;
  bool ss_claimed = false;

  std::vector<LemmaCheck> lemmas;
  std::optional<GaussCheck> gauss;
  Checks checks;
  double runtime_ms = 0.0;

  bool ok() const;
};

/// Throws FieldTooLarge when p^m > cfg.max_q.
VerifyReport verify(std::int64_t p, std::int64_t m, const RunConfig& cfg, int threads = 0);

std::string to_json(const std::vector<VerifyReport>& reports, bool timestamps);
std::string to_text(const std::vector<VerifyReport>& reports);
std::string to_csv(const std::vector<VerifyReport>& reports);

// Subcommands. Each writes to cfg.out when set, else to `out`; diagnostics go
// to `err`. The return value is the process exit code.
int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_predict(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gauss(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dscode::report
