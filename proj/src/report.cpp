#include "dscode/report.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dscode/checked.hpp"
#include "dscode/oracle.hpp"

namespace dscode::report {

namespace cf = closed_form;
using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(std::string_view text, const char* what) {
  const std::string t = trim(text);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + t + "'");
  }
}

bool parse_bool(std::string_view text) {
  const std::string t = trim(text);
  if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
  if (t == "0" || t == "false" || t == "no" || t == "off") return false;
  throw UsageError("invalid boolean: '" + t + "'");
}

// (p, m) pairs that carry a free-text optimality remark; never verified.
std::optional<std::string> optimality_note(std::int64_t p, std::int64_t m) {
  if (p == 3 && m == 4) return "reported optimal against external code tables (not verified)";
  if (p == 3 && m == 3) return "reported almost optimal; optimal [8,3] code has d=5 (not verified)";
  if (p == 3 && m == 5) return "reported near optimal against [71,5,42] (not verified)";
  if (p == 5 && m == 3) return "reported optimal against external code tables (not verified)";
  return std::nullopt;
}

Json rows_json(const WeightDistribution& d) {
  Json a = Json::array();
  for (const auto& [w, c] : d.entries()) a.push_back(Json::array({w, c}));
  return a;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot open output file: " + cfg.out);
  f << text;
}

void require_entries(const RunConfig& cfg) {
  if (cfg.entries.empty()) throw UsageError("no (p, m) given: use --p/--m or --grid");
}

// Maps library errors onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const FieldTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotOddPrime& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegreeTooSmall& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(9) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
     << "i";
  return os.str();
}

}  // namespace

std::vector<Entry> parse_grid(std::string_view text) {
  std::vector<Entry> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(';', start), text.size());
    const std::string item = trim(text.substr(start, end - start));
    if (!item.empty()) {
      const auto comma = item.find(',');
      if (comma == std::string::npos) throw UsageError("grid entry must be 'p,m': '" + item + "'");
      out.emplace_back(parse_int(std::string_view(item).substr(0, comma), "p"),
                       parse_int(std::string_view(item).substr(comma + 1), "m"));
    }
    start = end + 1;
  }
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

Checks parse_checks(std::string_view text) {
  Checks c{false, false, false, false, false, false};
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string item = trim(text.substr(start, end - start));
    if (item == "all") c = Checks{};
    else if (item == "distribution") c.distribution = true;
    else if (item == "lemmas") c.lemmas = true;
    else if (item == "gauss") c.gauss = true;
    else if (item == "moments") c.moments = true;
    else if (item == "dual") c.dual = true;
    else if (item == "ss-ratio") c.ss_ratio = true;
    else if (!item.empty()) throw UsageError("unknown check family: '" + item + "'");
    start = end + 1;
  }
  return c;
}

Format parse_format(std::string_view text) {
  const std::string t = trim(text);
  if (t == "json") return Format::Json;
  if (t == "csv") return Format::Csv;
  if (t == "text") return Format::Text;
  throw UsageError("unknown format: '" + t + "'");
}

void apply_env(RunConfig& cfg, const std::function<std::optional<std::string>(const char*)>& lookup) {
  if (auto v = lookup("CAP")) cfg.max_q = parse_int(*v, "CAP");
  if (auto v = lookup("JOBS")) cfg.jobs = static_cast<int>(parse_int(*v, "JOBS"));
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::optional<std::int64_t> p, m;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line is not key=value: '" + trim(line) + "'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    for (auto& ch : key) {
      if (ch == '-') ch = '_';
    }
    if (key == "p") p = parse_int(value, "p");
    else if (key == "m") m = parse_int(value, "m");
    else if (key == "grid") cfg.entries = parse_grid(value);
    else if (key == "max_q" || key == "cap") cfg.max_q = parse_int(value, "max_q");
    else if (key == "format") cfg.format = parse_format(value);
    else if (key == "out") cfg.out = value;
    else if (key == "checks") cfg.checks = parse_checks(value);
    else if (key == "jobs") cfg.jobs = static_cast<int>(parse_int(value, "jobs"));
    else if (key == "timestamps") cfg.timestamps = parse_bool(value);
    else throw UsageError("unknown config key: '" + key + "'");
  }
  if (p.has_value() != m.has_value()) throw UsageError("config must set both p and m");
  if (p) cfg.entries = {{*p, *m}};
}

std::vector<LemmaCheck> lemma_checks(const Field& field, int threads) {
  const std::int64_t p = field.p(), m = field.m(), q = field.q();
  const cf::CaseTag tag = cf::classify(p, m);
  std::vector<LemmaCheck> out;
  auto add = [&](std::string id, std::vector<std::pair<std::string, std::int64_t>> params, std::int64_t closed,
                 std::int64_t oracle) {
    out.push_back({std::move(id), std::move(params), closed, oracle, closed == oracle});
  };

  add("lemma8", {}, cf::lemma8_value(p, m), oracle::lemma8(field));

  // Per-b character sums: every b is compared, one row per realized class.
  struct ClassRow {
    std::int64_t members = 0;
    std::int64_t closed_B = 0, closed_Nb = 0;
    std::int64_t oracle_B = 0, oracle_Nb = 0;
    bool ok_B = true, ok_Nb = true;
  };
  const oracle::PerB per_b = oracle::all_b(field, threads);
  std::map<cf::BClass, ClassRow> classes;
  for (std::uint32_t b = 1; b < field.q(); ++b) {
    const cf::BClass cls = cf::classify_b(field, Elem{b});
    auto [it, fresh] = classes.try_emplace(cls);
    ClassRow& row = it->second;
    if (fresh) {
      row.closed_B = cf::lemma9_B(p, m, cls);
      row.closed_Nb = cf::lemma_Nb_predicted(p, m, cls);
      row.oracle_B = per_b.B[b];
      row.oracle_Nb = per_b.Nb[b];
    }
    ++row.members;
    // Keep the first disagreeing oracle value so a mismatch is visible.
    if (row.ok_B && per_b.B[b] != row.closed_B) {
      row.ok_B = false;
      row.oracle_B = per_b.B[b];
    }
    if (row.ok_Nb && per_b.Nb[b] != row.closed_Nb) {
      row.ok_Nb = false;
      row.oracle_Nb = per_b.Nb[b];
    }
  }
  for (const auto& [cls, row] : classes) {
    const std::vector<std::pair<std::string, std::int64_t>> params{
        {"t2", cls.t2}, {"t1", cls.t1}, {"disc", cls.disc ? 1 : 0}, {"members", row.members}};
    out.push_back({"lemma9", params, row.closed_B, row.oracle_B, row.ok_B});
  }
  for (const auto& [cls, row] : classes) {
    const std::vector<std::pair<std::string, std::int64_t>> params{
        {"t2", cls.t2}, {"t1", cls.t1}, {"disc", cls.disc ? 1 : 0}, {"members", row.members}};
    out.push_back({"lemma_Nb", params, row.closed_Nb, row.oracle_Nb, row.ok_Nb});
  }

  for (std::int64_t a = 0; a < p; ++a) add("lemma10", {{"a", a}}, cf::lemma10_N0a(p, m, a), oracle::lemma10(field, a));

  const cf::Lemma11Counts l11 = cf::lemma11_counts(p, m), b11 = oracle::lemma11(field);
  add("lemma11.N(0,0bar)", {}, l11.zero_nonzero, b11.zero_nonzero);
  add("lemma11.N(0bar,0bar)", {}, l11.nonzero_nonzero, b11.nonzero_nonzero);
  add("lemma11.N(0bar,0)", {}, l11.nonzero_zero, b11.nonzero_zero);

  if (m % p != 0) add("lemma12", {}, cf::lemma12_V(p, m), oracle::lemma12(field));
  if (m % 2 != 0) {
    for (std::int64_t c = 0; c < p; ++c) add("lemma16", {{"c", c}}, cf::lemma16_uc(p, m, c), oracle::lemma16(field, c));
  }
  if (tag == cf::CaseTag::OddDivides) {
    for (std::int64_t c = 1; c < p; ++c) add("lemma17", {{"c", c}}, cf::lemma17_vc(p, m, c), oracle::lemma17(field, c));
  }

  // Class census: predicted class sizes against enumeration, and their total.
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> census;
  std::int64_t predicted_total = 0;
  for (const auto& [label, n] : cf::class_census(p, m)) {
    census[label].first = n;
    predicted_total += n;
  }
  for (const auto& [label, n] : oracle::class_census(field)) census[label].second = n;
  for (const auto& [label, v] : census) add("census[" + label + "]", {}, v.first, v.second);
  add("census.total", {}, predicted_total, q - 1);

  // The Gauss-sum constants the tables are built from, against exact sums.
  const CycInt G = gauss_sum_exact(field);
  if (m % 2 == 0) {
    add("G_even", {}, cf::G_even(p, m), G.as_integer().value_or(0));
  } else {
    const Field prime_field(p, 1, p);
    const CycInt GGbar = G * gauss_sum_exact(prime_field);
    add("GGbar_odd", {}, cf::GGbar_odd(p, m), GGbar.as_integer().value_or(0));
  }
  return out;
}

GaussCheck gauss_check(const Field& field) {
  const std::int64_t p = field.p(), m = field.m(), q = field.q();
  CycInt exact = gauss_sum_exact(field);
  const ClosedGauss closed = gauss_closed(p, m);
  const auto embedded = exact.embed();
  const double tol = 1e-9 * std::pow(static_cast<double>(p), m / 2.0);
  const double error = std::abs(embedded - closed.value());
  const std::int64_t expected = field.quad_char(field.neg(field.one())) * q;
  const CycInt sq = exact * exact;
  return GaussCheck{std::move(exact),
                    closed,
                    embedded,
                    error,
                    tol,
                    sq.as_integer().value_or(0),
                    expected,
                    sq == CycInt::integer(field.p(), expected),
                    error < tol};
}

bool VerifyReport::ok() const {
  if (checks.distribution && in_hypothesis && !match) return false;
  if (checks.moments && in_hypothesis && !(moments.first && moments.second)) return false;
  if (checks.dual && dual_claimed && !dual_distance_two) return false;
  if (checks.ss_ratio && ss_claimed && !ss.passes) return false;
  if (checks.lemmas) {
    for (const auto& l : lemmas) {
      if (!l.match) return false;
    }
  }
  if (gauss && !gauss->ok()) return false;
  return true;
}

VerifyReport verify(std::int64_t p, std::int64_t m, const RunConfig& cfg, int threads) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.p = p;
  r.m = m;
  r.tag = cf::classify(p, m);
  r.checks = cfg.checks;
  r.in_hypothesis = m > 2;
  if (!r.in_hypothesis) r.notes.push_back("m <= 2 is outside the hypothesis m > 2; distribution and moments are reported, not asserted");

  const Field field(p, m, cfg.max_q);
  const DefiningSet ds(field);
  r.n_bruteforce = static_cast<std::int64_t>(ds.size());
  r.bruteforce = brute_weight_distribution(ds, Engine::Parallel, threads, cfg.max_q);

  try {
    const auto pd = cf::predicted_distribution(p, m);
    r.n_predicted = pd.length;
    r.predicted = pd.with_zero_word();
    r.prediction_available = true;
    if (cfg.corrupt_prediction && !pd.rows.empty()) r.predicted.add(pd.rows.front().first, 1);
  } catch (const NonIntegralTableEntry& e) {
    r.notes.push_back(std::string("no closed-form table: ") + e.what());
  }
  r.match = r.prediction_available && r.predicted == r.bruteforce && r.n_predicted == r.n_bruteforce;

  r.moments = power_moment_check(r.bruteforce, p, m, r.n_bruteforce);
  r.dual_distance_two = dual_distance_two(ds);
  r.dual_claimed = r.in_hypothesis && cf::dual_distance_claimed(p, m);
  if (!r.bruteforce.nonzero_weights().empty()) r.ss = secret_sharing_ratio(r.bruteforce, p);
  r.ss_claimed = r.in_hypothesis && cf::ss_ratio_claimed(p, m);

  if (cfg.checks.lemmas) r.lemmas = lemma_checks(field, threads);
  if (cfg.checks.gauss) r.gauss = gauss_check(field);
  if (auto note = optimality_note(p, m)) r.notes.push_back(*note);

  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string to_json(const std::vector<VerifyReport>& reports, bool timestamps) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["p"] = r.p;
    j["m"] = r.m;
    j["case"] = std::string(cf::to_string(r.tag));
    j["theorem"] = cf::theorem_number(r.tag);
    j["length"] = {{"predicted", r.prediction_available ? Json(r.n_predicted) : Json(nullptr)},
                   {"bruteforce", r.n_bruteforce}};
    j["distribution"] = {{"predicted", r.prediction_available ? rows_json(r.predicted) : Json(nullptr)},
                         {"bruteforce", rows_json(r.bruteforce)}};
    Json checks;
    checks["match"] = r.match;
    checks["moments"] = Json::array({r.moments.first, r.moments.second});
    checks["dual_distance_two"] = r.dual_distance_two;
    checks["dual_distance_claimed"] = r.dual_claimed;
    checks["ss_ratio"] = {{"wmin", r.ss.w_min}, {"wmax", r.ss.w_max}, {"passes", r.ss.passes}, {"claimed", r.ss_claimed}};
    j["checks"] = checks;
    Json lemmas = Json::array();
    for (const auto& l : r.lemmas) {
      Json params = Json::object();
      for (const auto& [k, v] : l.params) params[k] = v;
      lemmas.push_back({{"id", l.id}, {"params", params}, {"closed", l.closed}, {"oracle", l.oracle}, {"match", l.match}});
    }
    j["lemmas"] = lemmas;
    if (r.gauss) {
      const auto& g = *r.gauss;
      j["gauss"] = {{"closed", g.closed.to_string()},
                    {"exact", Json(std::vector<std::int64_t>(g.exact.coeffs().begin(), g.exact.coeffs().end()))},
                    {"square", g.square},
                    {"expected_square", g.expected_square},
                    {"square_identity", g.square_identity},
                    {"within_tolerance", g.within_tolerance}};
    }
    j["in_hypothesis"] = r.in_hypothesis;
    j["notes"] = r.notes;
    j["ok"] = r.ok();
    j["runtime_ms"] = timestamps ? Json(r.runtime_ms) : Json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string to_text(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& r : reports) {
    os << '(' << r.p << ',' << r.m << ") " << cf::to_string(r.tag) << " theorem " << cf::theorem_number(r.tag)
       << ": " << (r.ok() ? "OK" : "FAIL") << '\n';
    os << "  length      bruteforce " << r.n_bruteforce;
    if (r.prediction_available) os << "  predicted " << r.n_predicted;
    os << '\n';
    os << "  bruteforce  " << weight_enumerator_string(r.bruteforce) << '\n';
    if (r.prediction_available) os << "  predicted   " << weight_enumerator_string(r.predicted) << '\n';
    os << "  match       " << yn(r.match) << '\n';
    os << "  moments     " << yn(r.moments.first) << ' ' << yn(r.moments.second) << '\n';
    os << "  dual d=2    " << yn(r.dual_distance_two) << (r.dual_claimed ? " (asserted)" : "") << '\n';
    os << "  ss ratio    " << r.ss.w_min << '/' << r.ss.w_max << " > " << (r.p - 1) << '/' << r.p << ": "
       << yn(r.ss.passes) << (r.ss_claimed ? " (claimed)" : "") << '\n';
    if (!r.lemmas.empty()) {
      std::size_t good = 0;
      for (const auto& l : r.lemmas) good += l.match;
      os << "  lemmas      " << good << '/' << r.lemmas.size() << " match\n";
      for (const auto& l : r.lemmas) {
        if (l.match) continue;
        os << "    MISMATCH " << l.id;
        for (const auto& [k, v] : l.params) os << ' ' << k << '=' << v;
        os << " closed=" << l.closed << " oracle=" << l.oracle << '\n';
      }
    }
    if (r.gauss) os << "  gauss       " << (r.gauss->ok() ? "ok" : "FAIL") << " (" << r.gauss->closed.to_string() << ")\n";
    for (const auto& n : r.notes) os << "  note        " << n << '\n';
  }
  return os.str();
}

std::string to_csv(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  os << "p,m,weight,bruteforce,predicted\n";
  for (const auto& r : reports) {
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> rows;
    for (const auto& [w, a] : r.bruteforce.entries()) rows[w].first = a;
    for (const auto& [w, a] : r.predicted.entries()) rows[w].second = a;
    for (const auto& [w, v] : rows) os << r.p << ',' << r.m << ',' << w << ',' << v.first << ',' << v.second << '\n';
  }
  return os.str();
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_entries(cfg);
    if (!cfg.out.empty() && cfg.entries.size() > 1) throw UsageError("--out with build takes a single (p, m)");
    const Format fmt = cfg.format.value_or(Format::Text);
    std::ostringstream summary;
    Json all = Json::array();
    for (const auto& [p, m] : cfg.entries) {
      const Field field(p, m, cfg.max_q);
      const DefiningSet ds(field);
      std::optional<WeightDistribution> dist;
      if (cfg.enumerate) dist = brute_weight_distribution(ds, Engine::Parallel, cfg.jobs, cfg.max_q);

      std::ostringstream header;
      header << '[' << ds.size() << ',' << m;
      if (dist) header << ',' << dist->min_distance();
      header << ']';

      if (fmt == Format::Json) {
        Json j;
        j["p"] = p;
        j["m"] = m;
        j["parameters"] = header.str();
        j["length"] = ds.size();
        j["dimension"] = m;
        j["modulus"] = std::vector<std::uint32_t>(field.modulus().begin(), field.modulus().end());
        if (dist) {
          j["min_distance"] = dist->min_distance();
          j["enumerator"] = weight_enumerator_string(*dist);
          j["distribution"] = rows_json(*dist);
        }
        all.push_back(std::move(j));
      } else if (fmt == Format::Csv) {
        if (!dist) throw UsageError("csv output needs the enumerated distribution");
        summary << distribution_csv(*dist);
      } else {
        summary << header.str() << '\n';
        if (dist) summary << weight_enumerator_string(*dist) << '\n';
      }
      if (!cfg.out.empty()) emit(cfg, export_defining_set(ds), out);
    }
    if (fmt == Format::Json) summary << all.dump(2) << '\n';
    out << summary.str();
    return static_cast<int>(kOk);
  });
}

int cmd_predict(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_entries(cfg);
    const Format fmt = cfg.format.value_or(Format::Text);
    std::ostringstream os;
    Json all = Json::array();
    if (fmt == Format::Csv) os << "p,m,weight,multiplicity\n";
    for (const auto& [p, m] : cfg.entries) {
      const auto pd = cf::predicted_distribution(p, m);
      if (fmt == Format::Json) {
        Json rows = Json::array();
        for (const auto& [w, a] : pd.rows) rows.push_back(Json::array({w, a}));
        all.push_back({{"p", p},
                       {"m", m},
                       {"case", std::string(cf::to_string(pd.tag))},
                       {"theorem", cf::theorem_number(pd.tag)},
                       {"length", pd.length},
                       {"dimension", pd.dimension},
                       {"rows", rows}});
      } else if (fmt == Format::Csv) {
        for (const auto& [w, a] : pd.rows) os << p << ',' << m << ',' << w << ',' << a << '\n';
      } else {
        os << "p " << p << " m " << m << '\n';
        os << "case " << cf::to_string(pd.tag) << '\n';
        os << "theorem " << cf::theorem_number(pd.tag) << '\n';
        os << "length " << pd.length << '\n';
        os << "dimension " << pd.dimension << '\n';
        os << "rows " << pd.rows.size() << '\n';
        for (const auto& [w, a] : pd.rows) os << w << ' ' << a << '\n';
      }
    }
    if (fmt == Format::Json) os << all.dump(2) << '\n';
    emit(cfg, os.str(), out);
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_entries(cfg);
    // Validate everything before doing any work.
    for (const auto& [p, m] : cfg.entries) {
      cf::classify(p, m);
      std::int64_t q = 1;
      for (std::int64_t i = 0; i < m; ++i) {
        if (q > cfg.max_q / p) throw FieldTooLarge(p, m, cfg.max_q);
        q *= p;
      }
      if (q > cfg.max_q) throw FieldTooLarge(p, m, cfg.max_q);
    }

    const auto count = static_cast<std::int64_t>(cfg.entries.size());
    std::vector<std::optional<VerifyReport>> results(cfg.entries.size());
    std::vector<std::exception_ptr> errors(cfg.entries.size());
    const int outer = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
    const int inner = count == 1 ? cfg.jobs : 1;
#pragma omp parallel for schedule(dynamic, 1) num_threads(outer)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        results[i] = verify(cfg.entries[i].first, cfg.entries[i].second, cfg, inner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    std::vector<VerifyReport> reports;
    bool all_ok = true;
    for (auto& r : results) {
      all_ok = all_ok && r->ok();
      reports.push_back(std::move(*r));
    }
    switch (cfg.format.value_or(Format::Json)) {
      case Format::Json: emit(cfg, to_json(reports, cfg.timestamps), out); break;
      case Format::Csv: emit(cfg, to_csv(reports), out); break;
      case Format::Text: emit(cfg, to_text(reports), out); break;
    }
    return static_cast<int>(all_ok ? kOk : kMismatch);
  });
}

int cmd_gauss(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_entries(cfg);
    const Format fmt = cfg.format.value_or(Format::Text);
    std::ostringstream os;
    Json all = Json::array();
    if (fmt == Format::Csv) os << "p,m,closed,exact_re,exact_im,abs_error,square,expected_square,ok\n";
    bool all_ok = true;
    for (const auto& [p, m] : cfg.entries) {
      const Field field(p, m, cfg.max_q);
      const GaussCheck g = gauss_check(field);
      all_ok = all_ok && g.ok();
      if (fmt == Format::Json) {
        all.push_back({{"p", p},
                       {"m", m},
                       {"closed", g.closed.to_string()},
                       {"exact", std::vector<std::int64_t>(g.exact.coeffs().begin(), g.exact.coeffs().end())},
                       {"exact_embedded", {g.exact_embedded.real(), g.exact_embedded.imag()}},
                       {"closed_value", {g.closed.value().real(), g.closed.value().imag()}},
                       {"abs_error", g.abs_error},
                       {"square", g.square},
                       {"expected_square", g.expected_square},
                       {"square_identity", g.square_identity},
                       {"within_tolerance", g.within_tolerance}});
      } else if (fmt == Format::Csv) {
        os << p << ',' << m << ',' << g.closed.to_string() << ',' << g.exact_embedded.real() << ','
           << g.exact_embedded.imag() << ',' << g.abs_error << ',' << g.square << ',' << g.expected_square << ','
           << (g.ok() ? 1 : 0) << '\n';
      } else {
        os << "p " << p << " m " << m << " q " << field.q() << '\n';
        os << "exact        " << g.exact.to_string() << '\n';
        os << "closed       " << g.closed.to_string() << '\n';
        os << "embedded     " << format_complex(g.exact_embedded) << '\n';
        os << "closed value " << format_complex(g.closed.value()) << '\n';
        os << "abs error    " << std::scientific << std::setprecision(3) << g.abs_error << std::defaultfloat
           << " (tolerance " << std::scientific << g.tolerance << std::defaultfloat << ")\n";
        os << "G^2          " << g.square << " expected " << g.expected_square << ": "
           << (g.square_identity ? "holds" : "FAILS") << '\n';
      }
    }
    if (fmt == Format::Json) os << all.dump(2) << '\n';
    emit(cfg, os.str(), out);
    return static_cast<int>(all_ok ? kOk : kMismatch);
  });
}

}  // namespace dscode::report
