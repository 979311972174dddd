#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "pdc/engine.hpp"

namespace pdc {

namespace {

// g_{m,.} from f_{m,.}; entries are independent once f_{m,j}/j! is known.
Row parallel_g_row(const Row& f_row, int workers) {
  const std::size_t len = f_row.size();
  Row a(len);
  ExactInt fact = 1;
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) fact *= static_cast<unsigned long>(j);
    a[j] = exact_div(f_row[j], fact);
  }
  Row g(len);
  const long count = static_cast<long>(len);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
  for (long c = 0; c < count; ++c) {
    ExactInt sum = 0;
    for (long j = 0; j <= c; ++j) sum += a[j] * a[c - j];
    g[c] = std::move(sum);
  }
  return g;
}

// Folds every (m, c) cell of row m into the q accumulators:
//   q_n += binomial(n, m - c) * h_{n-m+c, c} * g_{m,c},  n = m + c, m + c + 2, ...
// h_{2s,c} = (-1)^c (2c)! T(s, c); column c of T is rebuilt from column c - 1.
void fold_row(unsigned m, unsigned max_n, const Row& g, std::vector<ExactInt>& q, int workers) {
  const unsigned c_max = std::min(m, max_n - m);
  std::vector<ExactInt> col_prev;
  std::vector<ExactInt> col;
  std::vector<ExactInt> binoms;
  ExactInt two_c_fact = 1;
  for (unsigned c = 0; c <= c_max; ++c) {
    if (c > 0) two_c_fact *= static_cast<unsigned long>(2 * c - 1) * (2 * c);
    const unsigned s_max = (max_n - m + c) / 2;
    col.assign(s_max + 1, 0);
    if (c == 0) {
      col[0] = 1;
    } else {
      col[c] = 1;
      const unsigned long c2 = static_cast<unsigned long>(c) * c;
      for (unsigned s = c + 1; s <= s_max; ++s) col[s] = col_prev[s - 1] + c2 * col[s - 1];
    }

    ExactInt coef = two_c_fact * g[c];
    if (c % 2 == 1) coef = -coef;

    const unsigned long k = m - c;
    const unsigned count = (max_n - m - c) / 2 + 1;
    binoms.resize(count);
    mpz_bin_uiui(binoms[0].get_mpz_t(), m + c, k);
    for (unsigned i = 1; i < count; ++i) {
      const unsigned long n = m + c + 2UL * (i - 1);
      binoms[i] = binoms[i - 1] * ((n + 1) * (n + 2));
      mpz_divexact_ui(binoms[i].get_mpz_t(), binoms[i].get_mpz_t(), (n + 1 - k) * (n + 2 - k));
    }

#pragma omp parallel for num_threads(workers) schedule(dynamic, 8)
    for (long i = 0; i < static_cast<long>(count); ++i) {
      q[m + c + 2 * i] += binoms[i] * col[c + i] * coef;
    }
    std::swap(col_prev, col);
  }
}

StreamingState load_resume_state(const EngineConfig& config) {
  StreamingState st = read_checkpoint(*config.checkpoint_path);
  if (st.mode != EngineMode::streaming) {
    throw CheckpointError("checkpoint was not written by a streaming run");
  }
  if (st.max_n != config.max_n) {
    throw CheckpointError("checkpoint is for max_n " + std::to_string(st.max_n) +
                          ", run requested " + std::to_string(config.max_n));
  }
  if (st.q.size() != config.max_n + 1 || st.fubini_row.size() != st.last_row + 1 ||
      st.last_row > config.max_n) {
    throw CheckpointError("checkpoint state is inconsistent with its header");
  }
  return st;
}

}  // namespace

std::vector<SequenceRecord> run_streaming(const EngineConfig& config) {
  if (config.mode != EngineMode::streaming) {
    throw std::invalid_argument("run_streaming: mode must be streaming");
  }
  if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (config.checkpoint_interval < 1) throw std::invalid_argument("checkpoint_interval must be >= 1");

  const unsigned max_n = config.max_n;
  std::vector<ExactInt> q(max_n + 1, 0);
  Row f_prev;
  unsigned start = 0;
  if (config.checkpoint_path && std::filesystem::exists(*config.checkpoint_path)) {
    StreamingState st = load_resume_state(config);
    q = std::move(st.q);
    f_prev = std::move(st.fubini_row);
    start = st.last_row + 1;
  }

  unsigned done = 0;
  for (unsigned m = start; m <= max_n; ++m) {
    Row f_cur = next_fubini_row(m, f_prev);
    const Row g = parallel_g_row(f_cur, config.workers);
    fold_row(m, max_n, g, q, config.workers);
    f_prev = std::move(f_cur);
    ++done;

    const bool halting = config.halt_after_rows && done >= *config.halt_after_rows && m < max_n;
    if (config.checkpoint_path &&
        (done % config.checkpoint_interval == 0 || m == max_n || halting)) {
      write_checkpoint({max_n, EngineMode::streaming, m, f_prev, q}, *config.checkpoint_path);
    }
    if (halting) throw Interrupted(m);
  }
  return make_records(q, p_seq(q));
}

}  // namespace pdc
