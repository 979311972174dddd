#pragma once

// Exact integer plumbing shared by every stage of the pipeline.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdc {

using ExactInt = mpz_class;

/// Raised when an exact identity that must hold does not (e.g. a division
/// that the formulas guarantee to be exact leaves a remainder).
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a / b, asserting b | a. Throws ArithmeticError naming operand bit lengths
/// otherwise.
ExactInt exact_div(const ExactInt& a, const ExactInt& b);

/// Number of decimal digits of |a| (1 for zero).
std::size_t digit_count(const ExactInt& a);

ExactInt factorial(unsigned long n);

ExactInt pow_ui(const ExactInt& base, unsigned long exponent);

/// 10^k.
ExactInt pow10(unsigned long k);

std::string to_string(const ExactInt& a);

/// Parses an optionally signed base-10 integer; throws std::invalid_argument.
ExactInt parse_exact(const std::string& text);

}  // namespace pdc
