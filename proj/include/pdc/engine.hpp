#pragma once

// Assembly of q_{n,k}, q_n, q_{n,0}, p_n and p_{n,0}.
//
//   q_n = sum_{c} sum_{t=2c..n} binomial(n,t) h_{t,c} g_{n-t+c,c}
//   p_n = (1/n!) sum_k s(n,k) q_k
//
// run_dense is the single-threaded reference that holds every table.
// run_streaming reorganizes the double sum by m = n - t + c so each g_{m,.}
// slice is built once, keeps O(N) table entries live, spreads the inner
// accumulation over OpenMP threads, and checkpoints after whole m-rows.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdc/arith.hpp"
#include "pdc/chains.hpp"
#include "pdc/fubini.hpp"
#include "pdc/triangles.hpp"

namespace pdc {

struct SequenceRecord {
  unsigned n = 0;
  ExactInt q;
  ExactInt p;
  std::size_t digit_count = 0;  // decimal digits of p

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

enum class EngineMode { dense, streaming };

struct EngineConfig {
  unsigned max_n = 0;
  EngineMode mode = EngineMode::dense;
  int workers = 1;
  std::optional<std::filesystem::path> checkpoint_path;
  unsigned checkpoint_interval = 10;
  /// Streaming only: stop with Interrupted after this many m-rows have been
  /// processed in this invocation (the checkpoint is written first).
  std::optional<unsigned> halt_after_rows;
};

/// Thrown by run_streaming when halt_after_rows is reached.
class Interrupted : public std::runtime_error {
 public:
  explicit Interrupted(unsigned last_row)
      : std::runtime_error("streaming run halted after row " + std::to_string(last_row)),
        last_row_(last_row) {}
  unsigned last_row() const { return last_row_; }

 private:
  unsigned last_row_;
};

/// Every table the dense algorithm needs, for indices 0..max_n.
class DenseTables {
 public:
  explicit DenseTables(unsigned max_n);

  unsigned max_n() const { return max_n_; }
  const TriangleTable& binomials() const { return binomials_; }
  const TriangleTable& stirling1() const { return stirling1_; }
  const TriangleTable& stirling2() const { return stirling2_; }
  const FubiniTable& fubini() const { return fubini_; }
  const GTable& g() const { return g_; }
  const ChainWeightTable& h() const { return h_; }
  const ExactInt& factorial(unsigned n) const { return factorials_.at(n); }

  /// q_{n,k} by the chain-counting sum; 0 for k > n. Requires n <= max_n.
  ExactInt q_nk(unsigned n, unsigned k) const;
  /// q_n by the rearranged sum over (c, t).
  ExactInt q(unsigned n) const;

 private:
  unsigned max_n_;
  TriangleTable binomials_;
  TriangleTable stirling1_;
  TriangleTable stirling2_;
  FubiniTable fubini_;
  GTable g_;
  ChainWeightTable h_;
  std::vector<ExactInt> factorials_;
};

ExactInt q_nk(unsigned n, unsigned k);

std::vector<ExactInt> q_seq(unsigned max_n);
/// q_{n,0} = f_n^2.
std::vector<ExactInt> q0_seq(unsigned max_n);
/// p_n = exact_div(sum_k s(n,k) q_k, n!); throws ArithmeticError if n! does not divide.
std::vector<ExactInt> p_seq(const std::vector<ExactInt>& qs);

std::vector<SequenceRecord> make_records(const std::vector<ExactInt>& qs,
                                         const std::vector<ExactInt>& ps);

std::vector<SequenceRecord> run_dense(const EngineConfig& config);
std::vector<SequenceRecord> run_streaming(const EngineConfig& config);
/// Dispatches on config.mode.
std::vector<SequenceRecord> run(const EngineConfig& config);

// --- checkpoints -----------------------------------------------------------

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Streaming state at an m-row boundary: rows 0..last_row are folded into q.
struct StreamingState {
  unsigned max_n = 0;
  EngineMode mode = EngineMode::streaming;
  unsigned last_row = 0;
  Row fubini_row;              // f_{last_row, 0..last_row}
  std::vector<ExactInt> q;     // partial sums, size max_n + 1

  friend bool operator==(const StreamingState&, const StreamingState&) = default;
};

inline constexpr const char* kCheckpointMagic = "ccv1";

/// Writes atomically (temporary file + rename).
void write_checkpoint(const StreamingState& state, const std::filesystem::path& path);
/// Throws CheckpointError on a bad magic/version, malformed body or checksum mismatch.
StreamingState read_checkpoint(const std::filesystem::path& path);

}  // namespace pdc
