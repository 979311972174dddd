#include "pdc/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pdc {

namespace {

// Guard digits carried by intermediate fixed-point and aligned computations.
constexpr int kGuard = 12;

// Divides n by 10^k, rounding half away from zero.
ExactInt round_shift(const ExactInt& n, unsigned long k) {
  if (k == 0) return n;
  const ExactInt d = pow10(k);
  ExactInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  ExactInt twice = 2 * abs(r);
  if (twice >= d) q += sgn(n);
  return q;
}

// Rounds (sig, exp) to at most `precision` digits and strips trailing zeros.
void normalize(ExactInt& sig, long& exp, int precision) {
  if (sgn(sig) == 0) {
    exp = 0;
    return;
  }
  long digits = static_cast<long>(digit_count(sig));
  if (digits > precision) {
    const long drop = digits - precision;
    sig = round_shift(sig, static_cast<unsigned long>(drop));
    exp += drop;
  }
  // Strip trailing zeros (this also absorbs a carry such as 999 -> 1000).
  ExactInt q, r;
  while (true) {
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), sig.get_mpz_t(), 10);
    if (sgn(r) != 0) break;
    sig = q;
    ++exp;
  }
}

// Value of x scaled by 10^scale, rounded to an integer.
ExactInt to_fixed_point(const BigDecimal& x, long scale) {
  const long shift = x.exponent() + scale;
  if (shift >= 0) return x.significand() * pow10(static_cast<unsigned long>(shift));
  return round_shift(x.significand(), static_cast<unsigned long>(-shift));
}

// atanh(1/k) * 10^scale.
ExactInt fixed_atanh_inv(unsigned long k, long scale) {
  ExactInt term = pow10(static_cast<unsigned long>(scale)) / k;
  ExactInt sum = term;
  const unsigned long k2 = k * k;
  for (unsigned long i = 1;; ++i) {
    term /= k2;
    if (sgn(term) == 0) break;
    sum += term / (2 * i + 1);
  }
  return sum;
}

// atanh(u) * 10^scale for a fixed-point |u| < 1.
ExactInt fixed_atanh(const ExactInt& u, long scale) {
  const ExactInt one = pow10(static_cast<unsigned long>(scale));
  const ExactInt u2 = u * u / one;
  ExactInt power = u;
  ExactInt sum = u;
  for (unsigned long i = 1;; ++i) {
    power = power * u2 / one;
    if (sgn(power) == 0) break;
    sum += power / (2 * i + 1);
  }
  return sum;
}

ExactInt fixed_ln2(long scale) { return 2 * fixed_atanh_inv(3, scale); }

// ln 10 = 3 ln 2 + ln(5/4), ln(5/4) = 2 atanh(1/9).
ExactInt fixed_ln10(long scale) {
  return 6 * fixed_atanh_inv(3, scale) + 2 * fixed_atanh_inv(9, scale);
}

ExactInt rounded_div(const ExactInt& a, const ExactInt& b) {
  ExactInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) >= abs(b)) q += sgn(a) * sgn(b);
  return q;
}

}  // namespace

BigDecimal::BigDecimal(const ExactInt& significand, long exponent, int precision)
    : significand_(significand), exponent_(exponent), precision_(precision) {
  if (precision < 1) throw std::invalid_argument("BigDecimal precision must be >= 1");
  normalize(significand_, exponent_, precision_);
}

BigDecimal BigDecimal::parse(std::string_view text, int precision) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) --exponent;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') {
      throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    }
    const std::string tail(text.substr(i + 1));
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size()) {
      throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    }
    exponent += e;
  }
  ExactInt sig(digits, 10);
  if (negative) sig = -sig;
  return BigDecimal(sig, exponent, precision);
}

long BigDecimal::leading_exponent() const {
  if (is_zero()) return 0;
  return exponent_ + static_cast<long>(digit_count(significand_)) - 1;
}

BigDecimal BigDecimal::with_precision(int precision) const {
  return BigDecimal(significand_, exponent_, precision);
}

BigDecimal BigDecimal::abs() const {
  BigDecimal r = *this;
  r.significand_ = ::abs(significand_);
  return r;
}

BigDecimal BigDecimal::operator-() const {
  BigDecimal r = *this;
  r.significand_ = -significand_;
  return r;
}

BigDecimal operator+(const BigDecimal& a, const BigDecimal& b) {
  const int precision = std::min(a.precision_, b.precision_);
  if (a.is_zero()) return b.with_precision(precision);
  if (b.is_zero()) return a.with_precision(precision);
  // Operands are aligned at the smaller exponent, but never more than
  // precision + guard digits below the larger leading digit.
  const long lead = std::max(a.leading_exponent(), b.leading_exponent());
  const long floor_exp = lead - (precision + kGuard);
  const long target = std::max(std::min(a.exponent_, b.exponent_), floor_exp);
  auto align = [target](const BigDecimal& x) -> ExactInt {
    if (x.exponent_ >= target) {
      return x.significand_ * pow10(static_cast<unsigned long>(x.exponent_ - target));
    }
    return round_shift(x.significand_, static_cast<unsigned long>(target - x.exponent_));
  };
  return BigDecimal(align(a) + align(b), target, precision);
}

BigDecimal operator-(const BigDecimal& a, const BigDecimal& b) { return a + (-b); }

BigDecimal operator*(const BigDecimal& a, const BigDecimal& b) {
  return BigDecimal(a.significand_ * b.significand_, a.exponent_ + b.exponent_,
                    std::min(a.precision_, b.precision_));
}

BigDecimal operator/(const BigDecimal& a, const BigDecimal& b) {
  if (b.is_zero()) throw ArithmeticError("BigDecimal division by zero");
  const int precision = std::min(a.precision_, b.precision_);
  if (a.is_zero()) return BigDecimal(0, 0, precision);
  const long da = static_cast<long>(digit_count(a.significand_));
  const long db = static_cast<long>(digit_count(b.significand_));
  const long shift = std::max(0L, precision + kGuard + db - da);
  ExactInt q = a.significand_ * pow10(static_cast<unsigned long>(shift)) / b.significand_;
  return BigDecimal(q, a.exponent_ - b.exponent_ - shift, precision);
}

std::strong_ordering operator<=>(const BigDecimal& a, const BigDecimal& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  if (a.is_zero()) return std::strong_ordering::equal;
  const int s = a.sign();
  const long la = a.leading_exponent();
  const long lb = b.leading_exponent();
  if (la != lb) return s > 0 ? la <=> lb : lb <=> la;
  const long e = std::min(a.exponent_, b.exponent_);
  const ExactInt x = a.significand_ * pow10(static_cast<unsigned long>(a.exponent_ - e));
  const ExactInt y = b.significand_ * pow10(static_cast<unsigned long>(b.exponent_ - e));
  const int c = cmp(x, y);
  return c <=> 0;
}

std::string BigDecimal::to_fixed(int decimals) const {
  if (decimals < 0) throw std::invalid_argument("to_fixed: negative decimals");
  const ExactInt scaled = to_fixed_point(*this, decimals);
  std::string body = ::pdc::to_string(::abs(scaled));
  if (decimals > 0) {
    if (body.size() <= static_cast<std::size_t>(decimals)) {
      body.insert(0, static_cast<std::size_t>(decimals) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(decimals), ".");
  }
  return (sgn(scaled) < 0 ? "-" : "") + body;
}

std::string BigDecimal::to_significant(int digits) const {
  if (digits < 1) throw std::invalid_argument("to_significant: digits must be >= 1");
  const BigDecimal rounded = with_precision(digits);
  const long lead = rounded.leading_exponent();
  const long decimals = std::max(0L, static_cast<long>(digits) - 1 - lead);
  return rounded.to_fixed(static_cast<int>(decimals));
}

std::string BigDecimal::to_scientific() const {
  if (is_zero()) return "0";
  std::string body = ::pdc::to_string(::abs(significand_));
  const long lead = leading_exponent();
  if (body.size() < static_cast<std::size_t>(precision_)) {
    body.append(static_cast<std::size_t>(precision_) - body.size(), '0');
  }
  std::string out = sign() < 0 ? "-" : "";
  out += body[0];
  if (body.size() > 1) out += "." + body.substr(1);
  return out + "e" + std::to_string(lead);
}

BigDecimal to_decimal(const ExactInt& value, int precision) {
  if (precision < 1) throw std::invalid_argument("to_decimal: precision must be >= 1");
  return BigDecimal(value, 0, precision);
}

BigDecimal ln2(int precision) {
  if (precision < 1) throw std::invalid_argument("ln2: precision must be >= 1");
  const long scale = precision + kGuard;
  return BigDecimal(fixed_ln2(scale), -scale, precision);
}

BigDecimal exp(const BigDecimal& x) {
  const int precision = x.precision();
  if (x.is_zero()) return BigDecimal(1, 0, precision);
  if (x.leading_exponent() >= 15) throw std::domain_error("exp: argument too large");
  const long int_digits = std::max(0L, x.leading_exponent() + 1);
  const long scale = precision + kGuard + int_digits;
  const ExactInt one = pow10(static_cast<unsigned long>(scale));
  const ExactInt xf = to_fixed_point(x, scale);
  const ExactInt l2 = fixed_ln2(scale);
  // x = k ln 2 + r, |r| <= ln2 / 2.
  const ExactInt k = rounded_div(xf, l2);
  ExactInt r = xf - k * l2;
  constexpr unsigned kHalvings = 16;
  r >>= kHalvings;
  ExactInt sum = one;
  ExactInt term = one;
  for (unsigned long i = 1;; ++i) {
    term = term * r / one / i;
    if (sgn(term) == 0) break;
    sum += term;
  }
  for (unsigned i = 0; i < kHalvings; ++i) sum = sum * sum / one;
  BigDecimal result(sum, -scale, precision + kGuard);
  if (!k.fits_slong_p()) throw std::domain_error("exp: argument too large");
  const long kk = k.get_si();
  const ExactInt two_k = ExactInt(1) << static_cast<mp_bitcnt_t>(kk >= 0 ? kk : -kk);
  const BigDecimal scale2(two_k, 0, precision + kGuard);
  result = kk >= 0 ? result * scale2 : result / scale2;
  return result.with_precision(precision);
}

BigDecimal log(const BigDecimal& x) {
  if (x.sign() <= 0) throw std::domain_error("log: argument must be positive");
  const int precision = x.precision();
  const long scale = precision + kGuard;
  const ExactInt one = pow10(static_cast<unsigned long>(scale));
  const long digits = static_cast<long>(digit_count(x.significand()));
  // mantissa in [1, 10) as fixed point; decade = floor(log10 x).
  ExactInt mantissa = x.significand() * one;
  mantissa /= pow10(static_cast<unsigned long>(digits - 1));
  const long decade = x.exponent() + digits - 1;
  long halvings = 0;
  while (mantissa >= 2 * one) {
    mantissa >>= 1;
    ++halvings;
  }
  const ExactInt u = (mantissa - one) * one / (mantissa + one);
  ExactInt total = 2 * fixed_atanh(u, scale);
  total += halvings * fixed_ln2(scale);
  total += decade * fixed_ln10(scale);
  return BigDecimal(total, -scale, precision);
}

BigDecimal pow(const BigDecimal& base, unsigned long exponent) {
  const int precision = base.precision();
  int extra = kGuard;
  for (unsigned long e = exponent; e > 0; e /= 10) ++extra;
  BigDecimal acc(1, 0, precision + extra);
  BigDecimal sq = base.with_precision(precision + extra);
  for (unsigned long e = exponent; e > 0; e >>= 1) {
    if (e & 1UL) acc = acc * sq;
    if (e > 1) sq = sq * sq;
  }
  return acc.with_precision(precision);
}

}  // namespace pdc
