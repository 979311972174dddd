#include "pdc/triangles.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace pdc {

ExactInt binomial(long n, long k) {
  if (n < -1 || k < 0) {
    throw std::domain_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                            ") outside the extended domain n >= -1, k >= 0");
  }
  if (n == -1) return k == 0 ? 1 : 0;
  if (k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Row next_row(TriangleKind kind, unsigned n, std::span<const ExactInt> prev) {
  Row row(n + 1);
  if (n == 0) {
    row[0] = 1;
    return row;
  }
  if (prev.size() != n) throw std::invalid_argument("next_row: previous row has wrong length");
  row[n] = 1;
  row[0] = kind == TriangleKind::binomial ? 1 : 0;
  for (unsigned k = 1; k < n; ++k) {
    switch (kind) {
      case TriangleKind::binomial:
        row[k] = prev[k - 1] + prev[k];
        break;
      case TriangleKind::stirling1:
        row[k] = prev[k - 1] + (n - 1) * prev[k];
        break;
      case TriangleKind::stirling2:
        row[k] = prev[k - 1] + k * prev[k];
        break;
      case TriangleKind::centralT:
        row[k] = prev[k - 1] + static_cast<unsigned long>(k) * k * prev[k];
        break;
    }
  }
  return row;
}

namespace {

Row build_row(TriangleKind kind, unsigned n) {
  Row row;
  for (unsigned i = 0; i <= n; ++i) row = next_row(kind, i, row);
  return row;
}

}  // namespace

Row binomial_row(unsigned n) { return build_row(TriangleKind::binomial, n); }
Row stirling1_row(unsigned n) { return build_row(TriangleKind::stirling1, n); }
Row stirling2_row(unsigned n) { return build_row(TriangleKind::stirling2, n); }
Row t_row(unsigned n) { return build_row(TriangleKind::centralT, n); }

TriangleTable::TriangleTable(TriangleKind kind, unsigned max_n) : kind_(kind) {
  rows_.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    rows_.push_back(next_row(kind, n, n == 0 ? std::span<const ExactInt>{} : rows_.back()));
  }
}

const ExactInt& TriangleTable::operator()(unsigned n, unsigned k) const {
  static const ExactInt zero = 0;
  const Row& r = rows_.at(n);
  return k < r.size() ? r[k] : zero;
}

std::size_t stream_rows(TriangleKind kind, unsigned max_n,
                        const std::function<void(unsigned n, const Row& row)>& consumer) {
  std::array<Row, 2> ring;
  std::size_t peak = 0;
  for (unsigned n = 0; n <= max_n; ++n) {
    Row& cur = ring[n % 2];
    const Row& prev = ring[(n + 1) % 2];
    cur = next_row(kind, n, prev);
    std::size_t resident = 0;
    for (const Row& r : ring) resident += r.empty() ? 0 : 1;
    peak = std::max(peak, resident);
    consumer(n, cur);
  }
  return peak;
}

}  // namespace pdc
