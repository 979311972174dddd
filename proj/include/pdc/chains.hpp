#pragma once

// Signed chain weights
//   h_{t,c} = sum_{k=c..t-c} (-1)^k (c+k)! S2(t, c+k) binomial(k-1, k-c),
// by the literal alternating sum and by the central-factorial identity
//   h_{2n,c} = (-1)^c (2c)! T(n, c),  h_{odd,c} = 0.

#include <vector>

#include "pdc/arith.hpp"
#include "pdc/triangles.hpp"

namespace pdc {

/// Literal alternating sum (cubic overall); cross-check only.
/// Throws std::domain_error unless 0 <= 2c <= t.
ExactInt h_direct(unsigned t, unsigned c);

/// Same sum with a caller-provided S2 table covering row t.
ExactInt h_direct(unsigned t, unsigned c, const TriangleTable& stirling2);

/// Production path. `central` must be a centralT table with max_n >= t / 2.
ExactInt h_fast(unsigned t, unsigned c, const TriangleTable& central);

/// Ordered set-partitions of {1..2n} into k blocks of even size, via
/// S(n,k) = k^2 S(n-1,k) + k(2k-1) S(n-1,k-1).
ExactInt even_block_count(unsigned n, unsigned k);

/// h_{t,c} for 0 <= 2c <= t <= max_t; odd rows are implicit zeros and not stored.
class ChainWeightTable {
 public:
  explicit ChainWeightTable(unsigned max_t);

  unsigned max_t() const { return max_t_; }
  /// Throws std::domain_error unless 0 <= 2c <= t <= max_t.
  const ExactInt& operator()(unsigned t, unsigned c) const;

 private:
  unsigned max_t_;
  std::vector<Row> even_rows_;  // even_rows_[s][c] = h_{2s,c}
};

}  // namespace pdc
