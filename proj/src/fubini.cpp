#include "pdc/fubini.hpp"

#include <functional>
#include <stdexcept>

namespace pdc {

namespace {

std::vector<ExactInt> factorials(unsigned max_n) {
  std::vector<ExactInt> fact(max_n + 1);
  fact[0] = 1;
  for (unsigned i = 1; i <= max_n; ++i) fact[i] = fact[i - 1] * i;
  return fact;
}

}  // namespace

FubiniTable::FubiniTable(unsigned max_n) {
  const TriangleTable s2(TriangleKind::stirling2, max_n);
  const std::vector<ExactInt> fact = factorials(max_n);
  rows_.resize(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    Row& row = rows_[n];
    row.resize(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      ExactInt sum = 0;
      for (unsigned l = k; l <= n; ++l) sum += fact[l] * s2(n - k, l - k);
      row[k] = std::move(sum);
    }
  }
}

GTable::GTable(const FubiniTable& fubini) {
  rows_.reserve(fubini.max_n() + 1);
  for (unsigned n = 0; n <= fubini.max_n(); ++n) rows_.push_back(g_row(fubini.row(n)));
}

FubiniTable build_fubini(unsigned max_n) { return FubiniTable(max_n); }
GTable build_g(const FubiniTable& fubini) { return GTable(fubini); }

Row next_fubini_row(unsigned n, const Row& prev) {
  if (prev.size() != n) throw std::invalid_argument("next_fubini_row: previous row has wrong length");
  Row row(n + 1);
  row[n] = factorial(n);
  for (unsigned k = n; k-- > 0;) row[k] = 2 * row[k + 1] - (k + 1) * prev[k];
  return row;
}

namespace {

Row reduced(const Row& f_row) {
  Row r(f_row.size());
  ExactInt fact = 1;
  for (std::size_t j = 0; j < f_row.size(); ++j) {
    if (j > 0) fact *= static_cast<unsigned long>(j);
    r[j] = exact_div(f_row[j], fact);
  }
  return r;
}

}  // namespace

Row g_row(const Row& f_row) {
  const Row a = reduced(f_row);
  Row g(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    ExactInt sum = 0;
    for (std::size_t j = 0; j <= c; ++j) sum += a[j] * a[c - j];
    g[c] = std::move(sum);
  }
  return g;
}

Row g_row_reversed(const Row& f_row) {
  const Row a = reduced(f_row);
  Row g(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    ExactInt sum = 0;
    for (std::size_t j = c + 1; j-- > 0;) sum += a[j] * a[c - j];
    g[c] = std::move(sum);
  }
  return g;
}

std::vector<ConvolutionCheck> check_convolution(unsigned max_n, unsigned max_k,
                                                unsigned limit_sum) {
  const FubiniTable fub(max_n + max_k);
  const std::vector<ExactInt> fact = factorials(max_n + max_k);
  std::vector<ConvolutionCheck> out;
  for (unsigned k = 0; k <= max_k; ++k) {
    for (unsigned n = 0; n <= max_n; ++n) {
      if (limit_sum != 0 && n + k > limit_sum) continue;
      // Sum over weak compositions n_0 + ... + n_k = n.
      std::vector<unsigned> parts(k + 1, 0);
      ExactInt total = 0;
      std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned left) {
        if (idx == k) {
          parts[idx] = left;
          ExactInt term = fact[n];
          for (unsigned p : parts) term = exact_div(term, fact[p]);
          for (unsigned p : parts) term *= fub.ordinary(p);
          total += term;
          return;
        }
        for (unsigned v = 0; v <= left; ++v) {
          parts[idx] = v;
          rec(idx + 1, left - v);
        }
      };
      rec(0, n);
      ExactInt rhs = fact[k] * total;
      const ExactInt& lhs = fub(n + k, k);
      out.push_back({n, k, lhs, rhs, lhs == rhs});
    }
  }
  return out;
}

}  // namespace pdc
