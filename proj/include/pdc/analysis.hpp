#pragma once

// Numerical checks of the asymptotic statements and the congruence
// conjecture. Nothing here proves anything; it measures computed data.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pdc/arith.hpp"
#include "pdc/decimal.hpp"

namespace pdc::analysis {

/// K = e^{-(ln 2)^2 / 2} / (4 (ln 2)^2) ~ 0.409223.
BigDecimal constant_K(int precision = BigDecimal::kDefaultPrecision);

struct RatioRecord {
  unsigned n = 0;
  BigDecimal ratio;  // r_n = p_n (ln 2)^{2n} / n!
  BigDecimal gap;    // K - r_n
  BigDecimal log_n;
  std::optional<BigDecimal> log_gap;  // only when gap > 0
};

/// r_n with relative error below 10^(5 - precision). Requires precision >= 20.
RatioRecord compute_ratio(unsigned n, const ExactInt& p_n,
                          int precision = BigDecimal::kDefaultPrecision);

/// Six decimals, half-up, trailing zeros dropped ("0.3512", "0.40868").
std::string format_ratio(const BigDecimal& ratio);

struct Figure4Point {
  unsigned n = 0;
  BigDecimal log_n;
  BigDecimal log_gap;
};

/// One point per record. Throws std::domain_error if some gap is not positive.
std::vector<Figure4Point> figure4_data(const std::vector<RatioRecord>& records);

/// Header "n,log_n,log_gap", values with 12 significant digits.
void write_figure4_csv(std::ostream& out, const std::vector<Figure4Point>& points);

struct FitResult {
  BigDecimal slope;
  BigDecimal intercept;
  BigDecimal intercept_unit_slope;  // least-squares intercept with slope fixed at -1
  std::size_t points = 0;
};

/// Least-squares line through the points with n >= n_min. Throws
/// std::invalid_argument with fewer than two such points or a degenerate x range.
FitResult fit_tail_intercept(const std::vector<Figure4Point>& points, unsigned n_min);

bool is_prime(unsigned long p);

/// p^(m-1) (p - 1). Throws std::invalid_argument if p is not prime or m == 0.
ExactInt totient_prime_power(unsigned long p, unsigned m);

struct CongruenceReport {
  unsigned long prime = 0;
  unsigned power = 0;
  ExactInt modulus;
  ExactInt period;
  unsigned first_n = 0;  // tested n range, inclusive
  unsigned last_n = 0;
  std::vector<unsigned> violations;

  bool holds() const { return violations.empty(); }
};

/// Tests q_{n + phi(p^m)} == q_n (mod p^m) for n in [max(n_min, m), N - phi(p^m)].
/// Throws std::invalid_argument when p is not prime or the range is empty.
CongruenceReport check_congruence(const std::vector<ExactInt>& qs, unsigned long p, unsigned m,
                                  unsigned n_min = 0);

/// f_{n,k} 2^{k+1} (ln 2)^{n+1} / n!, which tends to 1.
BigDecimal fubini_growth_ratio(const ExactInt& f_nk, unsigned n, unsigned k,
                               int precision = 40);

/// q_n 4 (ln 2)^{2n+2} e^{(ln 2)^2} / n!^2, which tends to 1.
BigDecimal q_growth_ratio(const ExactInt& q_n, unsigned n, int precision = 40);

/// Exact check of s(n, n-k) 2^k k! <= n^{2k}.
bool stirling1_bound_holds(const ExactInt& s_n_nk, unsigned n, unsigned k);

}  // namespace pdc::analysis
