#pragma once

// Brute-force ground truth. Everything here enumerates objects straight from
// their definitions and is deliberately naive; the counts are compared with
// the formula path at small n.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pdc/arith.hpp"

namespace pdc::oracle {

inline constexpr unsigned kTableCap = 6;
inline constexpr unsigned kPairCap = 6;
inline constexpr unsigned kQOracleCap = 5;
inline constexpr unsigned kEvenPartitionCap = 10;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const char* what_name, unsigned n, unsigned cap);
};

/// Nonnegative integer matrix; valid when every row and column sum is positive.
struct ContingencyTable {
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<unsigned> entries;  // row-major

  unsigned at(unsigned r, unsigned c) const { return entries[r * cols + c]; }
  bool valid() const;
};

/// Ordered set-partition of {1..n}; block i is a bitmask (bit e-1 <=> element e).
using OrderedPartition = std::vector<std::uint32_t>;

struct WeakOrderPair {
  unsigned n = 0;
  OrderedPartition left;
  OrderedPartition right;
};

enum class Side { left, right };

/// Parts `index` and `index + 1` (1-based) on `side` fit inside one part of the other side.
struct Embedding {
  Side side;
  unsigned index;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Every table with entry sum n and 1 <= rows, cols <= n, each exactly once.
/// Throws CapExceeded when n > cap, std::invalid_argument when n == 0.
void enumerate_tables(unsigned n, const std::function<void(const ContingencyTable&)>& visit,
                      unsigned cap = kTableCap);

/// Neither two vertically adjacent nonzero entries that are each alone in
/// their row, nor two horizontally adjacent ones that are each alone in their
/// column.
bool is_maximal(const ContingencyTable& table);

ExactInt count_tables(unsigned n, unsigned cap = kTableCap);
ExactInt count_maximal(unsigned n, unsigned cap = kTableCap);

struct PatternCounts {
  ExactInt total;    // all 0/1 tables with sum m
  ExactInt maximal;  // those passing is_maximal
};
PatternCounts count_patterns(unsigned m, unsigned cap = kTableCap);

/// All ordered set-partitions of {1..n}: each surjection {1..n} -> {1..b}
/// names its blocks in order.
std::vector<OrderedPartition> ordered_set_partitions(unsigned n);

void enumerate_pairs(unsigned n, const std::function<void(const WeakOrderPair&)>& visit,
                     unsigned cap = kPairCap);

std::vector<Embedding> find_embeddings(const WeakOrderPair& pair);

struct QOracleResult {
  ExactInt q;                // pairs with no consecutive embedding
  std::vector<ExactInt> qk;  // qk[k] = sum over pairs of binomial(#embeddings, k), k = 0..n
  std::uint64_t chain_subsets_checked = 0;
};

/// Also asserts, for every pair and every subset of its embeddings, that the
/// chains formed by the subset cover pairwise disjoint elements (throws
/// std::logic_error otherwise).
QOracleResult count_q_oracle(unsigned n, unsigned cap = kQOracleCap);

/// Ordered set-partitions of {1..t} into c blocks of even size.
ExactInt count_even_partitions_oracle(unsigned t, unsigned c, unsigned cap = kEvenPartitionCap);

}  // namespace pdc::oracle
