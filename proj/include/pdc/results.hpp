#pragma once

// Results file: one record per line, TAB separated
//   n <TAB> p_n <TAB> digit_count [<TAB> q_n]
// Lines starting with '#' are comments (the optional timestamp line).
// The JSON variant is {"generated": ..., "records": [{"n", "p", "digit_count", "q"}]}
// with the big integers as decimal strings.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdc/engine.hpp"

namespace pdc {

enum class ResultsFormat { tsv, json };

struct ResultsOptions {
  ResultsFormat format = ResultsFormat::tsv;
  bool emit_q = false;
  std::optional<std::string> timestamp;
};

struct ResultRow {
  unsigned n = 0;
  ExactInt p;
  std::size_t digit_count = 0;
  std::optional<ExactInt> q;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

class ResultsParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_results(std::ostream& out, const std::vector<SequenceRecord>& records,
                   const ResultsOptions& options);

/// Accepts either format (JSON when the first non-blank character is '{').
/// Rejects rows whose digit_count disagrees with p.
std::vector<ResultRow> read_results(std::istream& in);

}  // namespace pdc
