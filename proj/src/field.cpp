#include "dscode/field.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

#include "dscode/error.hpp"

namespace dscode {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
  unsigned __int128 r = 1, x = b % n;
  while (e) {
    if (e & 1) r = r * x % n;
    x = x * x % n;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) {
      const std::uint64_t sub = lead * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly digits(std::uint64_t k, std::uint32_t p, std::uint32_t len) {
  Poly d(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return d;
}

std::uint32_t index_of(const Poly& a, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return static_cast<std::uint32_t>(idx);
}

// Irreducible iff no monic factor of degree 1..deg/2 divides f.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g = digits(k, p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t checked_field_size(std::int64_t p, std::int64_t m, std::int64_t max_q) {
  if (!is_odd_prime(p)) throw NotOddPrime(p);
  if (m < 1) throw DegreeTooSmall(m);
  const std::int64_t limit = std::min<std::int64_t>(max_q, std::numeric_limits<std::int32_t>::max());
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    if (q > limit / p) throw FieldTooLarge(p, m, max_q);
    q *= p;
  }
  if (q > limit) throw FieldTooLarge(p, m, max_q);
  return static_cast<std::uint64_t>(q);
}

}  // namespace

bool is_odd_prime(std::int64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int legendre(std::int64_t a, std::int64_t p) {
  const std::uint64_t r = static_cast<std::uint64_t>(mod_p(a, p));
  if (r == 0) return 0;
  const std::uint64_t e = modpow(r, static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p));
  return e == 1 ? 1 : -1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::vector<std::uint32_t>> Field::irreducible_moduli(std::int64_t p, std::int64_t m,
                                                                  std::size_t count) {
  if (!is_odd_prime(p)) throw NotOddPrime(p);
  if (m < 1) throw DegreeTooSmall(m);
  const auto up = static_cast<std::uint32_t>(p);
  const auto um = static_cast<std::uint32_t>(m);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < um; ++i) total *= up;
  // Counting k upward compares coefficients high-degree first after the leading 1.
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t k = 0; k < total && out.size() < count; ++k) {
    Poly f = digits(k, up, um);
    f.push_back(1);
    if (is_irreducible(f, up)) out.push_back(std::move(f));
  }
  return out;
}

Field::Field(std::int64_t p, std::int64_t m, std::int64_t max_q) {
  q_ = static_cast<std::uint32_t>(checked_field_size(p, m, max_q));
  p_ = static_cast<std::uint32_t>(p);
  m_ = static_cast<std::uint32_t>(m);
  modulus_ = irreducible_moduli(p, m, 1).front();
  build(max_q);
}

Field::Field(std::int64_t p, std::vector<std::uint32_t> modulus, std::int64_t max_q) {
  if (modulus.size() < 2) throw DegreeTooSmall(static_cast<long long>(modulus.size()) - 1);
  const auto m = static_cast<std::int64_t>(modulus.size() - 1);
  q_ = static_cast<std::uint32_t>(checked_field_size(p, m, max_q));
  p_ = static_cast<std::uint32_t>(p);
  m_ = static_cast<std::uint32_t>(m);
  for (auto c : modulus) {
    if (c >= p_) throw ReducibleModulus();
  }
  if (modulus.back() != 1 || !is_irreducible(modulus, p_)) throw ReducibleModulus();
  modulus_ = std::move(modulus);
  build(max_q);
}

void Field::build(std::int64_t /*max_q*/) {
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);

  // Smallest canonical index of multiplicative order q-1.
  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    const Poly c = digits(cand, p_, m_);
    bool primitive = true;
    for (auto r : factors) {
      Poly t = poly_powmod(c, order / r, modulus_, p_);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  assert(g != 0);
  generator_ = Elem{g};

  log_.assign(q_, 0);
  exp_.assign(2 * order, 0);
  const Poly gp = digits(g, p_, m_);
  Poly cur{1};
  for (std::uint64_t k = 0; k < order; ++k) {
    const std::uint32_t idx = index_of(cur, p_);
    exp_[k] = idx;
    exp_[k + order] = idx;
    log_[idx] = static_cast<std::uint32_t>(k);
    cur = poly_mulmod(cur, gp, modulus_, p_);
  }

  // Trace is F_p-linear: evaluate it on the power basis, then extend.
  std::vector<std::uint32_t> basis(m_);
  std::uint32_t place = 1;
  for (std::uint32_t j = 0; j < m_; ++j) {
    basis[j] = trace_frobenius(Elem{place});
    place *= p_;
  }
  trace_.assign(q_, 0);
  for (std::uint32_t x = 0; x < q_; ++x) {
    std::uint64_t t = 0;
    std::uint32_t rest = x;
    for (std::uint32_t j = 0; j < m_; ++j) {
      t += std::uint64_t{rest % p_} * basis[j];
      rest /= p_;
    }
    trace_[x] = static_cast<std::uint32_t>(t % p_);
  }
}

Elem Field::alpha() const {
  return Elem{index_of(poly_mod(Poly{0, 1}, modulus_, p_), p_)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const { return digits(x.index, p_, m_); }

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != m_) throw std::invalid_argument("coefficient vector length must equal m");
  std::uint64_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    idx = idx * p_ + c[i];
  }
  return Elem{static_cast<std::uint32_t>(idx)};
}

Elem Field::add(Elem a, Elem b) const {
  std::uint32_t x = a.index, y = b.index, r = 0, place = 1;
  for (std::uint32_t j = 0; j < m_; ++j) {
    r += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Elem{r};
}

Elem Field::neg(Elem a) const {
  std::uint32_t x = a.index, r = 0, place = 1;
  for (std::uint32_t j = 0; j < m_; ++j) {
    r += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return Elem{r};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::inv(Elem a) const {
  if (a.index == 0) throw DivisionByZero();
  const std::uint32_t order = q_ - 1;
  return Elem{exp_[(order - log_[a.index]) % order]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a.index == 0) return Elem{e == 0 ? 1u : 0u};
  const std::uint64_t order = q_ - 1;
  return Elem{exp_[(std::uint64_t{log_[a.index]} * (e % order)) % order]};
}

std::uint32_t Field::trace_frobenius(Elem x) const {
  Elem s = zero();
  Elem y = x;
  for (std::uint32_t i = 0; i < m_; ++i) {
    s = add(s, y);
    y = pow(y, p_);
  }
  assert(in_prime_subfield(s));
  return s.index;
}

int Field::quad_char(Elem x) const {
  if (x.index == 0) return 0;
  const Elem y = pow(x, (q_ - 1) / 2);
  if (y == one()) return 1;
  assert(y == neg(one()));
  return -1;
}

}  // namespace dscode
