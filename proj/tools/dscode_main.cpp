// dscode: build, predict and verify the trace-defined codes C_D over F_{p^m}.
//
// Settings resolve as flags > --config file > CAP/JOBS environment > defaults.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dscode/report.hpp"

namespace {

using dscode::report::RunConfig;

struct Flags {
  std::int64_t p = 0, m = 0;
  std::string grid, format, out, checks, config;
  std::int64_t max_q = 0;
  int jobs = 0;
  bool timestamps = false, no_enumerate = false, corrupt = false;
};

void add_common(CLI::App* sub, Flags& f, bool with_checks) {
  sub->add_option("--p", f.p, "odd prime characteristic");
  sub->add_option("--m", f.m, "extension degree");
  sub->add_option("--grid", f.grid, "list of p,m pairs separated by ';'");
  sub->add_option("--max-q", f.max_q, "refuse fields larger than this (default 20000)");
  sub->add_option("--format", f.format, "json, csv or text");
  sub->add_option("--out", f.out, "output file");
  sub->add_option("--jobs", f.jobs, "worker threads (0: OpenMP default)");
  sub->add_option("--config", f.config, "key=value settings file");
  sub->add_flag("--timestamps", f.timestamps, "record runtimes in the report");
  if (with_checks) {
    sub->add_option("--checks", f.checks, "distribution,lemmas,gauss,moments,dual,ss-ratio or all");
    sub->add_flag("--corrupt-prediction", f.corrupt)->group("");
  }
}

RunConfig resolve(CLI::App* sub, const Flags& f) {
  RunConfig cfg;
  dscode::report::apply_env(cfg, [](const char* name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name)) return std::string(v);
    return std::nullopt;
  });
  if (sub->count("--config")) {
    std::ifstream in(f.config);
    if (!in) throw dscode::report::UsageError("cannot read config file: " + f.config);
    std::stringstream text;
    text << in.rdbuf();
    dscode::report::apply_config_text(cfg, text.str());
  }
  const bool has_p = sub->count("--p") > 0, has_m = sub->count("--m") > 0;
  if (has_p != has_m) throw dscode::report::UsageError("--p and --m go together");
  if (has_p && sub->count("--grid")) throw dscode::report::UsageError("use either --p/--m or --grid");
  if (has_p) cfg.entries = {{f.p, f.m}};
  if (sub->count("--grid")) cfg.entries = dscode::report::parse_grid(f.grid);
  if (sub->count("--max-q")) cfg.max_q = f.max_q;
  if (sub->count("--format")) cfg.format = dscode::report::parse_format(f.format);
  if (sub->count("--out")) cfg.out = f.out;
  if (sub->count("--jobs")) cfg.jobs = f.jobs;
  if (f.timestamps) cfg.timestamps = true;
  if (sub->get_option_no_throw("--checks") && sub->count("--checks"))
    cfg.checks = dscode::report::parse_checks(f.checks);
  if (f.no_enumerate) cfg.enumerate = false;
  if (f.corrupt) cfg.corrupt_prediction = true;
  if (cfg.max_q < 1) throw dscode::report::UsageError("max-q must be positive");
  if (cfg.jobs < 0) throw dscode::report::UsageError("jobs must be nonnegative");
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defining-set codes from Tr(x^2 + x) = 0: enumeration, closed forms, verification"};
  app.require_subcommand(1);
  Flags f;
  auto* build = app.add_subcommand("build", "construct C_D and enumerate its weights");
  auto* predict = app.add_subcommand("predict", "closed-form length and weight distribution");
  auto* verify = app.add_subcommand("verify", "compare closed forms with brute force");
  auto* gauss = app.add_subcommand("gauss", "exact quadratic Gauss sum against its closed form");
  add_common(build, f, false);
  build->add_flag("--no-enumerate", f.no_enumerate, "skip the weight enumeration");
  add_common(predict, f, false);
  add_common(verify, f, true);
  add_common(gauss, f, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dscode::report::kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunConfig cfg;
  try {
    cfg = resolve(sub, f);
  } catch (const dscode::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dscode::report::kUsage;
  }

  if (sub == build) return dscode::report::cmd_build(cfg, std::cout, std::cerr);
  if (sub == predict) return dscode::report::cmd_predict(cfg, std::cout, std::cerr);
  if (sub == verify) return dscode::report::cmd_verify(cfg, std::cout, std::cerr);
  return dscode::report::cmd_gauss(cfg, std::cout, std::cerr);
}
