#pragma once

// Integer triangles: binomials, unsigned Stirling numbers of both kinds, and
// the central-factorial-style triangle T(n, k).

#include <functional>
#include <span>
#include <vector>

#include "pdc/arith.hpp"

namespace pdc {

enum class TriangleKind { binomial, stirling1, stirling2, centralT };

using Row = std::vector<ExactInt>;

/// binomial(n, k) on the extended domain n >= -1, k >= 0:
/// binomial(-1, 0) = 1, binomial(-1, k) = 0 for k >= 1, and 0 when k > n >= 0.
/// Throws std::domain_error for n < -1 or k < 0.
ExactInt binomial(long n, long k);

Row binomial_row(unsigned n);
Row stirling1_row(unsigned n);
Row stirling2_row(unsigned n);
Row t_row(unsigned n);

/// Row n of `kind` computed from row n - 1 (empty `prev` for n = 0).
Row next_row(TriangleKind kind, unsigned n, std::span<const ExactInt> prev);

/// Dense rows 0..N of one triangle, immutable after construction.
class TriangleTable {
 public:
  TriangleTable(TriangleKind kind, unsigned max_n);

  TriangleKind kind() const { return kind_; }
  unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }
  const Row& row(unsigned n) const { return rows_.at(n); }

  /// Entry (n, k); zero for k > n.
  const ExactInt& operator()(unsigned n, unsigned k) const;

 private:
  TriangleKind kind_;
  std::vector<Row> rows_;
};

/// Delivers rows 0..N of `kind` in order from a two-slot ring. Returns the
/// peak number of rows resident during the stream.
std::size_t stream_rows(TriangleKind kind, unsigned max_n,
                 const std::function<void(unsigned n, const Row& row)>& consumer);

}  // namespace pdc
