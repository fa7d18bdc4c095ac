#include "dscode/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dscode/checked.hpp"
#include "dscode/error.hpp"
#include "dscode/field.hpp"

namespace dscode {

CycInt::CycInt(std::uint32_t p) : p_(p), coeffs_(p, 0) {}

CycInt CycInt::from_exponent_counts(std::uint32_t p, std::vector<std::int64_t> counts) {
  if (counts.size() != p) throw std::invalid_argument("exponent count vector must have length p");
  CycInt r(p);
  r.coeffs_ = std::move(counts);
  r.canonicalize();
  return r;
}

CycInt CycInt::root(std::uint32_t p, std::int64_t t) {
  std::vector<std::int64_t> c(p, 0);
  c[static_cast<std::size_t>(mod_p(t, p))] = 1;
  return from_exponent_counts(p, std::move(c));
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t n) {
  std::vector<std::int64_t> c(p, 0);
  c[0] = n;
  return from_exponent_counts(p, std::move(c));
}

void CycInt::canonicalize() {
  const std::int64_t c0 = coeffs_[0];
  if (c0 == 0) return;
  for (auto& c : coeffs_) c = checked_sub(c, c0);
}

bool CycInt::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> CycInt::as_integer() const {
  // n is canonically (0, -n, -n, ..., -n).
  for (std::size_t i = 2; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != coeffs_[1]) return std::nullopt;
  }
  return checked_sub(0, coeffs_[1]);
}

CycInt CycInt::operator-() const {
  CycInt r(p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked_sub(0, coeffs_[i]);
  return r;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  if (a.p_ != b.p_) throw PrimeMismatch(a.p_, b.p_);
  CycInt r(a.p_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
  r.canonicalize();
  return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.p_ != b.p_) throw PrimeMismatch(a.p_, b.p_);
  const std::uint32_t p = a.p_;
  std::vector<std::int64_t> c(p, 0);
  for (std::uint32_t i = 0; i < p; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::uint32_t j = 0; j < p; ++j) {
      const std::uint32_t k = (i + j) % p;
      c[k] = checked_add(c[k], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return CycInt::from_exponent_counts(p, std::move(c));
}

CycInt operator*(const CycInt& a, std::int64_t n) {
  CycInt r(a.p_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = checked_mul(a.coeffs_[i], n);
  return r;
}

std::complex<double> CycInt::embed() const {
  std::complex<double> z{0.0, 0.0};
  for (std::uint32_t t = 0; t < p_; ++t) {
    if (coeffs_[t] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * t / p_;
    z += static_cast<double>(coeffs_[t]) * std::polar(1.0, angle);
  }
  return z;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ')';
  return os.str();
}

std::complex<double> ClosedGauss::value() const {
  const double mag = std::pow(static_cast<double>(p), half_exponent / 2.0);
  switch (unit) {
    case Unit::PlusOne: return {mag, 0.0};
    case Unit::MinusOne: return {-mag, 0.0};
    case Unit::PlusI: return {0.0, mag};
    case Unit::MinusI: return {0.0, -mag};
  }
  return {};
}

std::string ClosedGauss::to_string() const {
  std::ostringstream os;
  const bool negative = unit == Unit::MinusOne || unit == Unit::MinusI;
  const bool imaginary = unit == Unit::PlusI || unit == Unit::MinusI;
  os << (negative ? '-' : '+');
  if (imaginary) os << "i·";
  const std::int64_t whole = checked_pow(p, half_exponent / 2);
  if (half_exponent % 2 == 0) {
    os << whole;
  } else {
    if (whole != 1) os << whole;
    os << "√" << p;
  }
  return os.str();
}

CycInt gauss_sum_exact(const Field& field) {
  std::vector<std::int64_t> counts(field.p(), 0);
  for (std::uint32_t x = 1; x < field.q(); ++x) {
    counts[field.trace(Elem{x})] += field.quad_char(Elem{x});
  }
  return CycInt::from_exponent_counts(field.p(), std::move(counts));
}

ClosedGauss gauss_closed(std::int64_t p, std::int64_t m) {
  if (!is_odd_prime(p)) throw NotOddPrime(p);
  if (m < 1) throw DegreeTooSmall(m);
  const std::int64_t h = (p - 1) / 2;
  // i^{(p-1)^2 m / 4} = i^{h^2 m}; only the exponent mod 4 matters.
  const std::int64_t i_exp = ((h % 4) * (h % 4) % 4) * (m % 4) % 4;
  int re = 1, im = 0;  // running unit as a Gaussian integer
  for (std::int64_t k = 0; k < i_exp; ++k) {
    const int nre = -im, nim = re;
    re = nre;
    im = nim;
  }
  if ((m - 1) % 2 != 0) {
    re = -re;
    im = -im;
  }
  ClosedGauss g;
  g.p = static_cast<std::uint32_t>(p);
  g.half_exponent = static_cast<int>(m);
  if (re == 1) g.unit = ClosedGauss::Unit::PlusOne;
  else if (re == -1) g.unit = ClosedGauss::Unit::MinusOne;
  else if (im == 1) g.unit = ClosedGauss::Unit::PlusI;
  else g.unit = ClosedGauss::Unit::MinusI;
  return g;
}

CycInt additive_character_sum(const Field& field, std::uint32_t b_index) {
  std::vector<std::int64_t> counts(field.p(), 0);
  const Elem b{b_index};
  for (std::uint32_t x = 0; x < field.q(); ++x) counts[field.trace(field.mul(b, Elem{x}))] += 1;
  return CycInt::from_exponent_counts(field.p(), std::move(counts));
}

}  // namespace dscode
