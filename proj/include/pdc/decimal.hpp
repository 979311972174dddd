#pragma once

// Base-10 floating point over an exact significand. Used only by the
// analysis path (ratios, K, log-gap data); the counting pipeline is pure
// ExactInt.

#include <compare>
#include <string>
#include <string_view>

#include "pdc/arith.hpp"

namespace pdc {

/// value = significand * 10^exponent, rounded to at most `precision`
/// significant digits (half away from zero). Every arithmetic operation has
/// relative error below 10^(1 - precision); the result of a binary operation
/// carries the smaller of the two operand precisions.
class BigDecimal {
 public:
  static constexpr int kDefaultPrecision = 80;

  BigDecimal() = default;
  BigDecimal(const ExactInt& significand, long exponent, int precision = kDefaultPrecision);

  /// Parses "0.409223", "-2.23", "1.5e-7".
  static BigDecimal parse(std::string_view text, int precision = kDefaultPrecision);

  const ExactInt& significand() const { return significand_; }
  long exponent() const { return exponent_; }
  int precision() const { return precision_; }
  int sign() const { return sgn(significand_); }
  bool is_zero() const { return sign() == 0; }

  /// floor(log10 |x|); 0 for zero.
  long leading_exponent() const;

  BigDecimal with_precision(int precision) const;
  BigDecimal abs() const;

  BigDecimal operator-() const;
  friend BigDecimal operator+(const BigDecimal& a, const BigDecimal& b);
  friend BigDecimal operator-(const BigDecimal& a, const BigDecimal& b);
  friend BigDecimal operator*(const BigDecimal& a, const BigDecimal& b);
  /// Throws ArithmeticError on division by zero.
  friend BigDecimal operator/(const BigDecimal& a, const BigDecimal& b);

  friend std::strong_ordering operator<=>(const BigDecimal& a, const BigDecimal& b);
  friend bool operator==(const BigDecimal& a, const BigDecimal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// Fixed notation rounded (half away from zero) to `decimals` places.
  std::string to_fixed(int decimals) const;
  /// Plain notation with `digits` significant digits.
  std::string to_significant(int digits) const;
  /// "2.27150e4": all `precision` digits of the significand.
  std::string to_scientific() const;

 private:
  ExactInt significand_ = 0;
  long exponent_ = 0;
  int precision_ = kDefaultPrecision;
};

/// Nearest BigDecimal with `precision` significant digits.
BigDecimal to_decimal(const ExactInt& value, int precision = BigDecimal::kDefaultPrecision);

BigDecimal ln2(int precision = BigDecimal::kDefaultPrecision);

/// e^x at x.precision(). |x| must be below 1e15.
BigDecimal exp(const BigDecimal& x);

/// Natural logarithm; x must be positive.
BigDecimal log(const BigDecimal& x);

BigDecimal pow(const BigDecimal& base, unsigned long exponent);

}  // namespace pdc
