#pragma once

// Exact arithmetic in Z[zeta_e]. Values are kept reduced modulo the e-th
// cyclotomic polynomial, so equality and zero tests are coefficient-wise.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace camina {

/// Coefficients of Phi_e, lowest degree first. Computed by dividing
/// x^e - 1 by Phi_d for every proper divisor d; memoized per thread.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t e);

class CyclotomicValue {
public:
  CyclotomicValue() : CyclotomicValue(1) {}
  explicit CyclotomicValue(std::uint32_t e);

  static CyclotomicValue integer(std::uint32_t e, std::int64_t value);
  /// zeta_e^k.
  static CyclotomicValue root(std::uint32_t e, std::int64_t k);
  /// sum_k coeffs[k] zeta_e^k for an arbitrary-length coefficient list
  /// (indices taken mod e).
  static CyclotomicValue from_coefficients(std::uint32_t e, std::span<const std::int64_t> coeffs);

  std::uint32_t e() const { return e_; }
  /// Length e; entries at degree >= phi(e) are zero.
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  CyclotomicValue operator+(const CyclotomicValue& o) const;
  CyclotomicValue operator-(const CyclotomicValue& o) const;
  CyclotomicValue operator-() const;
  CyclotomicValue operator*(const CyclotomicValue& o) const;
  CyclotomicValue operator*(std::int64_t k) const;
  /// Complex conjugate: zeta -> zeta^-1.
  CyclotomicValue conj() const;

  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

  /// "3" for rationals, otherwise "z8[0 1 0 -1]" (canonical coefficients,
  /// trailing zeros trimmed).
  std::string to_string() const;

private:
  void reduce();

  std::uint32_t e_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace camina
