#include "pdc/chains.hpp"

#include <stdexcept>
#include <string>

namespace pdc {

namespace {

void require_domain(unsigned t, unsigned c) {
  if (2UL * c > t) {
    throw std::domain_error("h(" + std::to_string(t) + ", " + std::to_string(c) +
                            ") requires 2c <= t");
  }
}

}  // namespace

ExactInt h_direct(unsigned t, unsigned c, const TriangleTable& stirling2) {
  require_domain(t, c);
  ExactInt sum = 0;
  for (unsigned k = c; k + c <= t; ++k) {
    ExactInt term = factorial(c + k) * stirling2(t, c + k) *
                    binomial(static_cast<long>(k) - 1, static_cast<long>(k) - c);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

ExactInt h_direct(unsigned t, unsigned c) {
  return h_direct(t, c, TriangleTable(TriangleKind::stirling2, t));
}

ExactInt h_fast(unsigned t, unsigned c, const TriangleTable& central) {
  require_domain(t, c);
  if (t % 2 != 0) return 0;
  ExactInt v = factorial(2 * c) * central(t / 2, c);
  return c % 2 == 0 ? v : ExactInt(-v);
}

ExactInt even_block_count(unsigned n, unsigned k) {
  if (k > n) return 0;
  Row prev{1};  // S(0, 0) = 1
  for (unsigned m = 1; m <= n; ++m) {
    Row cur(m + 1, 0);
    for (unsigned j = 1; j <= m; ++j) {
      const unsigned long jj = j;
      ExactInt v = jj * (2 * jj - 1) * prev[j - 1];
      if (j < m) v += jj * jj * prev[j];
      cur[j] = std::move(v);
    }
    prev = std::move(cur);
  }
  return prev[k];
}

ChainWeightTable::ChainWeightTable(unsigned max_t) : max_t_(max_t) {
  const TriangleTable central(TriangleKind::centralT, max_t / 2);
  even_rows_.resize(max_t / 2 + 1);
  for (unsigned s = 0; s <= max_t / 2; ++s) {
    Row& row = even_rows_[s];
    row.resize(s + 1);
    for (unsigned c = 0; c <= s; ++c) row[c] = h_fast(2 * s, c, central);
  }
}

const ExactInt& ChainWeightTable::operator()(unsigned t, unsigned c) const {
  static const ExactInt zero = 0;
  require_domain(t, c);
  if (t > max_t_) throw std::domain_error("h table covers t <= " + std::to_string(max_t_));
  if (t % 2 != 0) return zero;
  return even_rows_[t / 2][c];
}

}  // namespace pdc
