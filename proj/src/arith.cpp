#include "pdc/arith.hpp"

#include <cctype>

namespace pdc {

ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  if (sgn(b) == 0) {
    throw ArithmeticError("exact_div: division by zero (dividend has " +
                          std::to_string(mpz_sizeinbase(a.get_mpz_t(), 2)) + " bits)");
  }
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw ArithmeticError("exact_div: " + std::to_string(mpz_sizeinbase(a.get_mpz_t(), 2)) +
                          "-bit dividend is not divisible by " +
                          std::to_string(mpz_sizeinbase(b.get_mpz_t(), 2)) + "-bit divisor");
  }
  ExactInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::size_t digit_count(const ExactInt& a) {
  if (sgn(a) == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t d = mpz_sizeinbase(a.get_mpz_t(), 10);
  if (d > 1 && mpz_cmpabs(a.get_mpz_t(), pow10(d - 1).get_mpz_t()) < 0) --d;
  return d;
}

ExactInt factorial(unsigned long n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactInt pow_ui(const ExactInt& base, unsigned long exponent) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

ExactInt pow10(unsigned long k) {
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

std::string to_string(const ExactInt& a) { return a.get_str(10); }

ExactInt parse_exact(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  ExactInt r(text[0] == '+' ? text.substr(1) : text, 10);
  return r;
}

}  // namespace pdc
