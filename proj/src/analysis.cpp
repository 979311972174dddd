#include "pdc/analysis.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace pdc::analysis {

namespace {

constexpr int kExtra = 10;

}  // namespace

BigDecimal constant_K(int precision) {
  if (precision < 1) throw std::invalid_argument("constant_K: precision must be >= 1");
  const int w = precision + kExtra;
  const BigDecimal l = ln2(w);
  const BigDecimal l2 = l * l;
  const BigDecimal half(5, -1, w);
  const BigDecimal four(4, 0, w);
  return (exp(-(l2 * half)) / (four * l2)).with_precision(precision);
}

RatioRecord compute_ratio(unsigned n, const ExactInt& p_n, int precision) {
  if (precision < 20) throw std::invalid_argument("compute_ratio: precision must be >= 20");
  const int w = precision + kExtra;
  const BigDecimal r = to_decimal(p_n, w) * pow(ln2(w), 2UL * n) / to_decimal(factorial(n), w);
  RatioRecord out;
  out.n = n;
  out.ratio = r.with_precision(precision);
  out.gap = (constant_K(w) - r).with_precision(precision);
  out.log_n = n == 0 ? BigDecimal(0, 0, precision) : log(BigDecimal(n, 0, precision));
  if (out.gap.sign() > 0) out.log_gap = log(out.gap);
  return out;
}

std::string format_ratio(const BigDecimal& ratio) {
  std::string s = ratio.to_fixed(6);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::vector<Figure4Point> figure4_data(const std::vector<RatioRecord>& records) {
  std::vector<Figure4Point> out;
  out.reserve(records.size());
  for (const RatioRecord& r : records) {
    if (r.gap.sign() <= 0 || !r.log_gap) {
      throw std::domain_error("K - r_n is not positive at n = " + std::to_string(r.n));
    }
    out.push_back({r.n, r.log_n, *r.log_gap});
  }
  return out;
}

void write_figure4_csv(std::ostream& out, const std::vector<Figure4Point>& points) {
  out << "n,log_n,log_gap\n";
  for (const Figure4Point& p : points) {
    out << p.n << ',' << p.log_n.to_significant(12) << ',' << p.log_gap.to_significant(12) << '\n';
  }
}

FitResult fit_tail_intercept(const std::vector<Figure4Point>& points, unsigned n_min) {
  constexpr int kFitPrecision = 40;
  std::vector<const Figure4Point*> tail;
  for (const Figure4Point& p : points) {
    if (p.n >= n_min) tail.push_back(&p);
  }
  if (tail.size() < 2) throw std::invalid_argument("fit needs at least two points with n >= n_min");
  const BigDecimal count(static_cast<long>(tail.size()), 0, kFitPrecision);
  BigDecimal sx(0, 0, kFitPrecision), sy = sx;
  for (const Figure4Point* p : tail) {
    sx = sx + p->log_n.with_precision(kFitPrecision);
    sy = sy + p->log_gap.with_precision(kFitPrecision);
  }
  const BigDecimal mx = sx / count;
  const BigDecimal my = sy / count;
  BigDecimal sxx(0, 0, kFitPrecision), sxy = sxx;
  for (const Figure4Point* p : tail) {
    const BigDecimal dx = p->log_n.with_precision(kFitPrecision) - mx;
    const BigDecimal dy = p->log_gap.with_precision(kFitPrecision) - my;
    sxx = sxx + dx * dx;
    sxy = sxy + dx * dy;
  }
  if (sxx.is_zero()) throw std::invalid_argument("fit needs distinct log n values");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.intercept_unit_slope = my + mx;
  fit.points = tail.size();
  return fit;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

ExactInt totient_prime_power(unsigned long p, unsigned m) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("power must be >= 1");
  return pow_ui(ExactInt(p), m - 1) * (p - 1);
}

CongruenceReport check_congruence(const std::vector<ExactInt>& qs, unsigned long p, unsigned m,
                                  unsigned n_min) {
  CongruenceReport rep;
  rep.prime = p;
  rep.power = m;
  rep.period = totient_prime_power(p, m);
  rep.modulus = pow_ui(ExactInt(p), m);
  if (qs.empty() || !rep.period.fits_uint_p()) throw std::invalid_argument("no q values to compare");
  const unsigned period = static_cast<unsigned>(rep.period.get_ui());
  const unsigned max_n = static_cast<unsigned>(qs.size()) - 1;
  rep.first_n = std::max(n_min, m);
  if (max_n < period || rep.first_n > max_n - period) {
    throw std::invalid_argument("q values too short to compare any pair at period " +
                                std::to_string(period));
  }
  rep.last_n = max_n - period;
  for (unsigned n = rep.first_n; n <= rep.last_n; ++n) {
    const ExactInt diff = qs[n + period] - qs[n];
    if (!mpz_divisible_p(diff.get_mpz_t(), rep.modulus.get_mpz_t())) rep.violations.push_back(n);
  }
  return rep;
}

BigDecimal fubini_growth_ratio(const ExactInt& f_nk, unsigned n, unsigned k, int precision) {
  const int w = precision + kExtra;
  const BigDecimal two_pow(pow_ui(2, k + 1), 0, w);
  const BigDecimal r = to_decimal(f_nk, w) * two_pow * pow(ln2(w), n + 1UL) /
                       to_decimal(factorial(n), w);
  return r.with_precision(precision);
}

BigDecimal q_growth_ratio(const ExactInt& q_n, unsigned n, int precision) {
  const int w = precision + kExtra;
  const BigDecimal l = ln2(w);
  const ExactInt nf = factorial(n);
  const BigDecimal r = to_decimal(q_n, w) * BigDecimal(4, 0, w) * pow(l, 2UL * n + 2) *
                       exp(l * l) / to_decimal(nf * nf, w);
  return r.with_precision(precision);
}

bool stirling1_bound_holds(const ExactInt& s_n_nk, unsigned n, unsigned k) {
  return s_n_nk * pow_ui(2, k) * factorial(k) <= pow_ui(ExactInt(n), 2UL * k);
}

}  // namespace pdc::analysis
