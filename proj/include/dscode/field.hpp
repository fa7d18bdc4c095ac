#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace dscode {

/// Default cap on the field size for anything that enumerates F_q.
inline constexpr std::int64_t kDefaultMaxQ = 20000;

/// An element of F_{p^m}, addressed by its canonical index: the base-p number
/// whose digits are the coefficients of the representative polynomial,
/// constant term as the least significant digit. Prime-field values a in
/// [0, p) therefore have index a.
struct Elem {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

bool is_odd_prime(std::int64_t n);

/// Legendre symbol (a/p) in {-1, 0, +1}; a may be negative.
int legendre(std::int64_t a, std::int64_t p);

/// Nonnegative representative of a mod p.
constexpr std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// F_{p^m} for odd p, realized as F_p[x]/(f) with f monic irreducible.
///
/// Construction precomputes log/antilog tables against a fixed generator and
/// the absolute trace of every element, so multiplication and trace are O(1)
/// lookups. Immutable after construction; safe to share across threads.
class Field {
 public:
  /// Field with the lexicographically smallest monic irreducible modulus.
  /// Throws NotOddPrime, DegreeTooSmall or FieldTooLarge.
  Field(std::int64_t p, std::int64_t m, std::int64_t max_q = kDefaultMaxQ);

  /// Field with an explicit modulus (coefficients constant term first,
  /// length m+1, leading 1). Throws ReducibleModulus if it is not irreducible.
  Field(std::int64_t p, std::vector<std::uint32_t> modulus, std::int64_t max_q = kDefaultMaxQ);

  /// The first `count` monic irreducible polynomials of degree m over F_p in
  /// the order used to pick the default modulus.
  static std::vector<std::vector<std::uint32_t>> irreducible_moduli(std::int64_t p, std::int64_t m,
                                                                    std::size_t count);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::span<const std::uint32_t> modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Class of x in F_p[x]/(f).
  Elem alpha() const;
  /// Embedding of an integer into the prime subfield.
  Elem prime(std::int64_t a) const { return Elem{static_cast<std::uint32_t>(mod_p(a, p_))}; }
  bool in_prime_subfield(Elem x) const { return x.index < p_; }

  std::vector<std::uint32_t> coeffs(Elem x) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a.index == 0 || b.index == 0) return Elem{0};
    return Elem{exp_[log_[a.index] + log_[b.index]]};
  }
  Elem square(Elem a) const { return mul(a, a); }
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem pow(Elem a, std::uint64_t e) const;

  /// Discrete log to the base generator(); x must be nonzero.
  std::uint32_t log(Elem x) const { return log_[x.index]; }
  /// generator()^k for 0 <= k < 2(q-1).
  Elem exp(std::uint32_t k) const { return Elem{exp_[k]}; }

  /// Absolute trace, from the precomputed table.
  std::uint32_t trace(Elem x) const { return trace_[x.index]; }
  /// Absolute trace evaluated from its definition, the sum of x^{p^i}.
  std::uint32_t trace_frobenius(Elem x) const;
  std::span<const std::uint32_t> trace_table() const { return trace_; }

  /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
  int quad_char(Elem x) const;

 private:
  void build(std::int64_t max_q);

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem generator_;
  std::vector<std::uint32_t> log_;    // size q, log_[0] unused
  std::vector<std::uint32_t> exp_;    // size 2(q-1)
  std::vector<std::uint32_t> trace_;  // size q
};

}  // namespace dscode
