#include <algorithm>
#include <stdexcept>

#include "pdc/engine.hpp"

namespace pdc {

DenseTables::DenseTables(unsigned max_n)
    : max_n_(max_n),
      binomials_(TriangleKind::binomial, max_n),
      stirling1_(TriangleKind::stirling1, max_n),
      stirling2_(TriangleKind::stirling2, max_n),
      fubini_(max_n),
      g_(fubini_),
      h_(max_n) {
  factorials_.resize(max_n + 1);
  factorials_[0] = 1;
  for (unsigned i = 1; i <= max_n; ++i) factorials_[i] = factorials_[i - 1] * i;
}

ExactInt DenseTables::q_nk(unsigned n, unsigned k) const {
  if (n > max_n_) throw std::out_of_range("q_nk: n exceeds table size");
  if (k > n) return 0;
  ExactInt total = 0;
  // The inner sum is empty for c > n - k.
  const unsigned c_max = std::min(k, n - k);
  for (unsigned c = 0; c <= c_max; ++c) {
    const ExactInt split =
        binomial(static_cast<long>(k) - 1, static_cast<long>(k) - static_cast<long>(c));
    if (sgn(split) == 0) continue;
    for (unsigned t = c + k; t <= n; ++t) {
      total += binomials_(n, t) * factorials_[c + k] * stirling2_(t, c + k) * split *
               g_(n - t + c, c);
    }
  }
  return total;
}

ExactInt DenseTables::q(unsigned n) const {
  if (n > max_n_) throw std::out_of_range("q: n exceeds table size");
  ExactInt total = 0;
  for (unsigned c = 0; 2 * c <= n; ++c) {
    for (unsigned t = 2 * c; t <= n; t += 2) {  // h vanishes for odd t
      total += binomials_(n, t) * h_(t, c) * g_(n - t + c, c);
    }
  }
  return total;
}

ExactInt q_nk(unsigned n, unsigned k) {
  if (k > n) return 0;
  return DenseTables(n).q_nk(n, k);
}

std::vector<ExactInt> q_seq(unsigned max_n) {
  const DenseTables tables(max_n);
  std::vector<ExactInt> qs(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) qs[n] = tables.q(n);
  return qs;
}

std::vector<ExactInt> q0_seq(unsigned max_n) {
  const FubiniTable fub(max_n);
  std::vector<ExactInt> out(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) out[n] = fub.ordinary(n) * fub.ordinary(n);
  return out;
}

std::vector<ExactInt> p_seq(const std::vector<ExactInt>& qs) {
  if (qs.empty()) return {};
  const unsigned max_n = static_cast<unsigned>(qs.size()) - 1;
  std::vector<ExactInt> ps(max_n + 1);
  ExactInt fact = 1;
  stream_rows(TriangleKind::stirling1, max_n, [&](unsigned n, const Row& s1) {
    if (n > 0) fact *= n;
    ExactInt sum = 0;
    for (unsigned k = 0; k <= n; ++k) sum += s1[k] * qs[k];
    ps[n] = exact_div(sum, fact);
  });
  return ps;
}

std::vector<SequenceRecord> make_records(const std::vector<ExactInt>& qs,
                                         const std::vector<ExactInt>& ps) {
  if (qs.size() != ps.size()) throw std::invalid_argument("make_records: length mismatch");
  std::vector<SequenceRecord> out;
  out.reserve(qs.size());
  for (std::size_t n = 0; n < qs.size(); ++n) {
    out.push_back({static_cast<unsigned>(n), qs[n], ps[n], digit_count(ps[n])});
  }
  return out;
}

std::vector<SequenceRecord> run_dense(const EngineConfig& config) {
  if (config.mode != EngineMode::dense) throw std::invalid_argument("run_dense: mode must be dense");
  const std::vector<ExactInt> qs = q_seq(config.max_n);
  return make_records(qs, p_seq(qs));
}

std::vector<SequenceRecord> run(const EngineConfig& config) {
  return config.mode == EngineMode::dense ? run_dense(config) : run_streaming(config);
}

}  // namespace pdc
