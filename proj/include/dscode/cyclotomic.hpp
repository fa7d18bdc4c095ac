#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dscode {

class Field;

/// Exact element of Z[zeta_p], stored as sum coeffs[i] * zeta_p^i, i in [0, p).
///
/// Canonical form has coeffs[0] == 0, reached by subtracting coeffs[0] from
/// every coordinate (1 + zeta + ... + zeta^{p-1} = 0). Two values are equal
/// iff their canonical vectors are equal. Coefficient arithmetic is 64-bit and
/// throws ArithmeticOverflow instead of wrapping.
class CycInt {
 public:
  /// Zero of Z[zeta_p].
  explicit CycInt(std::uint32_t p);

  /// sum counts[t] * zeta_p^t for counts of length p (canonicalized).
  static CycInt from_exponent_counts(std::uint32_t p, std::vector<std::int64_t> counts);
  /// zeta_p^t, t reduced mod p.
  static CycInt root(std::uint32_t p, std::int64_t t);
  static CycInt integer(std::uint32_t p, std::int64_t n);

  std::uint32_t p() const { return p_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// The rational integer this value equals, if it is one.
  std::optional<std::int64_t> as_integer() const;

  CycInt operator-() const;
  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  /// Convolution of exponents mod p.
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, std::int64_t n);
  friend bool operator==(const CycInt&, const CycInt&) = default;

  /// Value under zeta_p = exp(2 pi i / p), double precision.
  std::complex<double> embed() const;

  std::string to_string() const;

 private:
  void canonicalize();

  std::uint32_t p_;
  std::vector<std::int64_t> coeffs_;
};

/// Closed-form Gauss sum value unit * p^{half_exponent / 2}.
struct ClosedGauss {
  enum class Unit { PlusOne, MinusOne, PlusI, MinusI };

  std::uint32_t p = 0;
  Unit unit = Unit::PlusOne;
  int half_exponent = 0;

  std::complex<double> value() const;
  /// e.g. "+3", "+i·√3", "-9√3".
  std::string to_string() const;
};

/// G(eta, chi_1) = sum over nonzero x of eta(x) zeta_p^{Tr x}, exactly.
CycInt gauss_sum_exact(const Field& field);

/// (-1)^{m-1} i^{(p-1)^2 m / 4} sqrt(q); for m = 1 this is the prime-field sum.
ClosedGauss gauss_closed(std::int64_t p, std::int64_t m);

/// sum over x in F_q of zeta_p^{Tr(b x)}, exactly.
CycInt additive_character_sum(const Field& field, std::uint32_t b_index);

}  // namespace dscode
