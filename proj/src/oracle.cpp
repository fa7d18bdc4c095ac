#include "dscode/oracle.hpp"

#include <map>

#include "dscode/code.hpp"
#include "dscode/error.hpp"
#include "dscode/kernels.hpp"

namespace dscode::oracle {

namespace {

std::int64_t rational_value(const CycInt& v, const char* what) {
  const auto n = v.as_integer();
  if (!n) throw Error(std::string(what) + ": character sum is not a rational integer: " + v.to_string());
  return *n;
}

// sum_{y,z in F_p^*} sum_{s,t} hist[s][t] zeta^{y s + z t}
CycInt double_character_sum(std::uint32_t p, const std::uint32_t* hist) {
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint32_t s = 0; s < p; ++s) {
    for (std::uint32_t t = 0; t < p; ++t) {
      const std::int64_t h = hist[s * p + t];
      if (h == 0) continue;
      for (std::uint32_t y = 1; y < p; ++y) {
        for (std::uint32_t z = 1; z < p; ++z) counts[(y * s + z * t) % p] += h;
      }
    }
  }
  return CycInt::from_exponent_counts(p, std::move(counts));
}

// Counts x in F_q by (Tr(x^2), Tr(x)).
std::vector<std::int64_t> square_trace_pairs(const Field& f) {
  const std::uint32_t p = f.p();
  std::vector<std::int64_t> out(std::size_t{p} * p, 0);
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    const Elem e{x};
    ++out[f.trace(f.square(e)) * p + f.trace(e)];
  }
  return out;
}

}  // namespace

CycInt lemma8_exact(const Field& field) {
  const std::uint32_t p = field.p();
  const auto t = defining_trace_table(field);
  std::vector<std::int64_t> hist(p, 0);
  for (auto v : t) ++hist[v];
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint32_t y = 1; y < p; ++y) {
    for (std::uint32_t s = 0; s < p; ++s) counts[(std::uint64_t{y} * s) % p] += hist[s];
  }
  return CycInt::from_exponent_counts(p, std::move(counts));
}

std::int64_t lemma8(const Field& field) { return rational_value(lemma8_exact(field), "lemma8"); }

CycInt lemma9_exact(const Field& field, Elem b) {
  const std::uint32_t p = field.p();
  const auto t = defining_trace_table(field);
  std::vector<std::uint32_t> hist(std::size_t{p} * p, 0);
  for (std::uint32_t x = 0; x < field.q(); ++x) ++hist[t[x] * p + field.trace(field.mul(b, Elem{x}))];
  return double_character_sum(p, hist.data());
}

std::int64_t lemma9(const Field& field, Elem b) { return rational_value(lemma9_exact(field, b), "lemma9"); }

std::int64_t lemma10(const Field& field, std::int64_t a) {
  const auto pairs = square_trace_pairs(field);
  return pairs[mod_p(a, field.p())];
}

closed_form::Lemma11Counts lemma11(const Field& field) {
  const std::uint32_t p = field.p();
  const auto pairs = square_trace_pairs(field);
  closed_form::Lemma11Counts c;
  for (std::uint32_t s = 0; s < p; ++s) {
    for (std::uint32_t t = 0; t < p; ++t) {
      const std::int64_t n = pairs[s * p + t];
      if (s == 0 && t != 0) c.zero_nonzero += n;
      if (s != 0 && t != 0) c.nonzero_nonzero += n;
      if (s != 0 && t == 0) c.nonzero_zero += n;
    }
  }
  return c;
}

std::int64_t lemma12(const Field& field) {
  const std::uint32_t p = field.p();
  const std::uint64_t m = field.m() % p;
  std::int64_t v = 0;
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    const Elem e{x};
    const std::uint64_t t1 = field.trace(e), t2 = field.trace(field.square(e));
    if (t1 != 0 && (t1 * t1) % p == (m * t2) % p) ++v;
  }
  return v;
}

std::int64_t nb(const Field& field, Elem b) {
  const auto t = defining_trace_table(field);
  std::int64_t n = 0;
  for (std::uint32_t x = 0; x < field.q(); ++x) n += t[x] == 0 && field.trace(field.mul(b, Elem{x})) == 0;
  return n;
}

std::int64_t lemma16(const Field& field, std::int64_t c) {
  const auto pairs = square_trace_pairs(field);
  const auto s = static_cast<std::uint32_t>(mod_p(c, field.p()));
  std::int64_t u = 0;
  for (std::uint32_t t = 0; t < field.p(); ++t) u += pairs[s * field.p() + t];
  return u;
}

std::int64_t lemma17(const Field& field, std::int64_t c) {
  const auto pairs = square_trace_pairs(field);
  return pairs[mod_p(c, field.p()) * field.p()];
}

std::vector<std::pair<std::string, std::int64_t>> class_census(const Field& field) {
  std::map<std::string, std::int64_t> counts;
  for (std::uint32_t b = 1; b < field.q(); ++b) {
    ++counts[closed_form::census_label(field.p(), field.m(), closed_form::classify_b(field, Elem{b}))];
  }
  return {counts.begin(), counts.end()};
}

PerB all_b(const Field& field, int threads) {
  const std::uint32_t p = field.p(), q = field.q();
  const auto t = defining_trace_table(field);
  const auto hist = kernels::joint_trace_histograms_parallel(field, t, threads);
  PerB out;
  out.B.resize(q);
  out.Nb.resize(q);
  for (std::uint32_t b = 0; b < q; ++b) {
    const std::uint32_t* cell = hist.data() + std::size_t{b} * p * p;
    out.Nb[b] = cell[0];
    out.B[b] = rational_value(double_character_sum(p, cell), "lemma9");
  }
  return out;
}

std::int64_t evaluate(const Field& field, closed_form::LemmaId id, const Args& args) {
  using closed_form::LemmaId;
  switch (id) {
    case LemmaId::L8: return lemma8(field);
    case LemmaId::L9: return lemma9(field, args.b);
    case LemmaId::L10: return lemma10(field, args.c);
    case LemmaId::L11_ZN: return lemma11(field).zero_nonzero;
    case LemmaId::L11_NN: return lemma11(field).nonzero_nonzero;
    case LemmaId::L11_NZ: return lemma11(field).nonzero_zero;
    case LemmaId::L12: return lemma12(field);
    case LemmaId::Nb: return nb(field, args.b);
    case LemmaId::L16: return lemma16(field, args.c);
    case LemmaId::L17: return lemma17(field, args.c);
  }
  return 0;
}

std::int64_t evaluate(std::int64_t p, std::int64_t m, closed_form::LemmaId id, const Args& args,
                      std::int64_t max_q) {
  const Field field(p, m, max_q);
  return evaluate(field, id, args);
}

}  // namespace dscode::oracle
