#pragma once

// Generalized Fubini numbers f_{n,k} (weak orders on n elements in which k
// given elements are forced into singleton blocks) and the convolution
//   g_{n,c} = sum_j (f_{n,j}/j!) (f_{n,c-j}/(c-j)!).

#include <vector>

#include "pdc/arith.hpp"
#include "pdc/triangles.hpp"

namespace pdc {

class FubiniTable {
 public:
  /// f_{n,k} = sum_{l=k..n} l! S2(n-k, l-k) for 0 <= k <= n <= max_n.
  explicit FubiniTable(unsigned max_n);

  unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }
  const Row& row(unsigned n) const { return rows_.at(n); }
  const ExactInt& operator()(unsigned n, unsigned k) const { return rows_.at(n).at(k); }
  /// Ordinary Fubini number f_n = f_{n,0}.
  const ExactInt& ordinary(unsigned n) const { return rows_.at(n).front(); }

 private:
  std::vector<Row> rows_;
};

class GTable {
 public:
  explicit GTable(const FubiniTable& fubini);

  unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }
  const Row& row(unsigned n) const { return rows_.at(n); }
  const ExactInt& operator()(unsigned n, unsigned c) const { return rows_.at(n).at(c); }

 private:
  std::vector<Row> rows_;
};

FubiniTable build_fubini(unsigned max_n);
GTable build_g(const FubiniTable& fubini);

/// Row n of f from row n - 1 via f_{n,n} = n!, f_{n,k} = 2 f_{n,k+1} - (k+1) f_{n-1,k}.
/// Needs no Stirling numbers, so a streaming pass keeps one row.
Row next_fubini_row(unsigned n, const Row& prev);

/// g_{n,.} from the f_{n,.} row. Each f_{n,j} is divided by j! exactly before
/// the products are formed; a remainder throws ArithmeticError.
Row g_row(const Row& f_row);

/// Same sum evaluated with j running from c down to 0.
Row g_row_reversed(const Row& f_row);

struct ConvolutionCheck {
  unsigned n;
  unsigned k;
  ExactInt lhs;  // f_{n+k,k}
  ExactInt rhs;  // k! * sum over n_0 + ... + n_k = n of multinomial * f_{n_0}...f_{n_k}
  bool pass;
};

/// Checks f_{n+k,k} = k! sum_{n_0+...+n_k=n} n!/(n_0!...n_k!) f_{n_0}...f_{n_k}
/// for all n <= max_n, k <= max_k with n + k <= limit_sum (if nonzero).
std::vector<ConvolutionCheck> check_convolution(unsigned max_n, unsigned max_k,
                                                unsigned limit_sum = 0);

}  // namespace pdc
