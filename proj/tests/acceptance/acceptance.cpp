// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails. Takes the path of the pdc executable as argv[1]
// for the kill-and-resume check.

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "fixtures/appendix.hpp"
#include "pdc/analysis.hpp"
#include "pdc/chains.hpp"
#include "pdc/engine.hpp"
#include "pdc/fubini.hpp"
#include "pdc/oracle.hpp"
#include "pdc/results.hpp"

namespace fs = std::filesystem;
using pdc::BigDecimal;
using pdc::ExactInt;

namespace {

int failures = 0;

void verdict(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

// Runs `body`, turning an escaped exception into a failure with its message.
template <typename F>
void criterion(int id, const std::string& title, F body) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  verdict(id, title, ok, detail.str());
}

std::string head_of(const std::string& s) { return s.substr(0, 12); }
std::string tail_of(const std::string& s) { return s.substr(s.size() - 12); }

// --- 7: kill a checkpointing child mid-run, then resume ------------------------

bool kill_and_resume(const std::string& pdc_exe, unsigned max_n,
                     const std::vector<pdc::SequenceRecord>& expected, std::ostream& detail) {
  const fs::path dir = fs::temp_directory_path() / ("pdc_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path ckpt = dir / "run.ckpt";
  const fs::path out = dir / "out.tsv";
  const std::string n_arg = std::to_string(max_n);

  const pid_t child = fork();
  if (child < 0) {
    detail << "fork failed";
    return false;
  }
  if (child == 0) {
    const int devnull = ::open("/dev/null", O_WRONLY);
    ::dup2(devnull, STDOUT_FILENO);
    ::dup2(devnull, STDERR_FILENO);
    ::execl(pdc_exe.c_str(), "pdc", "compute", "--max-n", n_arg.c_str(), "--mode", "streaming",
            "--workers", "2", "--checkpoint", ckpt.c_str(), "--checkpoint-interval", "1",
            "--out", out.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }

  // Wait until a checkpoint partway through exists, then SIGKILL.
  unsigned killed_after = 0;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::minutes(5);
  while (std::chrono::steady_clock::now() < deadline) {
    if (fs::exists(ckpt)) {
      try {
        killed_after = pdc::read_checkpoint(ckpt).last_row;
      } catch (const pdc::CheckpointError&) {
      }
      if (killed_after >= max_n / 3) break;
    }
    if (::waitpid(child, nullptr, WNOHANG) == child) {
      detail << "child exited before it could be killed";
      fs::remove_all(dir);
      return false;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  ::kill(child, SIGKILL);
  int status = 0;
  ::waitpid(child, &status, 0);
  const bool was_killed = WIFSIGNALED(status) && WTERMSIG(status) == SIGKILL;
  const unsigned resume_from = pdc::read_checkpoint(ckpt).last_row;

  pdc::EngineConfig config{.max_n = max_n, .mode = pdc::EngineMode::streaming, .workers = 3,
                           .checkpoint_path = ckpt};
  const bool same = pdc::run_streaming(config) == expected;
  detail << "killed=" << (was_killed ? "yes" : "no") << " resumed after row " << resume_from
         << " of " << max_n << " with 3 workers, " << (same ? "identical" : "DIFFERENT");
  fs::remove_all(dir);
  return was_killed && resume_from < max_n && same;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-pdc>\n";
    return 2;
  }
  const std::string pdc_exe = argv[1];

  constexpr unsigned kN = 300;
  const std::vector<pdc::SequenceRecord> records = pdc::run_dense({.max_n = kN});

  criterion(1, "p_n and digit counts for n = 1..20", [&](std::ostream& d) {
    unsigned bad = 0;
    for (const auto& row : fixtures::kSmall) {
      const std::string p = pdc::to_string(records[row.n].p);
      if (p != row.p || records[row.n].digit_count != row.p.size()) {
        d << "n=" << row.n << " got " << p << "; ";
        ++bad;
      }
    }
    d << fixtures::kSmall.size() - bad << "/" << fixtures::kSmall.size() << " rows";
    return bad == 0;
  });

  criterion(2, "q_n and q_{n,k} table for n = 0..5, k = 0..4", [&](std::ostream& d) {
    const pdc::DenseTables tables(5);
    unsigned bad = 0;
    for (const auto& row : fixtures::kQTable) {
      bad += tables.q(row.n) != row.q;
      for (unsigned k = 0; k < row.qk.size(); ++k) bad += tables.q_nk(row.n, k) != row.qk[k];
    }
    d << bad << " mismatched cells";
    return bad == 0;
  });

  criterion(3, "brute-force oracles agree with the formulas", [&](std::ostream& d) {
    const pdc::DenseTables tables(5);
    const auto p0 = pdc::p_seq(pdc::q0_seq(5));
    unsigned bad = 0, compared = 0;
    for (unsigned n = 1; n <= 5; ++n) {
      bad += pdc::oracle::count_maximal(n) != records[n].p;
      bad += pdc::oracle::count_tables(n) != p0[n];
      const auto qo = pdc::oracle::count_q_oracle(n);
      bad += qo.q != tables.q(n);
      for (unsigned k = 0; k <= n; ++k) bad += qo.qk[k] != tables.q_nk(n, k);
      compared += 3 + n + 1;
    }
    const pdc::TriangleTable central(pdc::TriangleKind::centralT, 5);
    for (unsigned t = 0; t <= 10; ++t) {
      for (unsigned c = 0; 2 * c <= t; ++c) {
        const ExactInt expect = abs(pdc::h_fast(t, c, central)) / pdc::pow_ui(2, c);
        bad += pdc::oracle::count_even_partitions_oracle(t, c) != expect;
        ++compared;
      }
    }
    d << compared - bad << "/" << compared << " comparisons (n <= 5, t <= 10)";
    return bad == 0;
  });

  criterion(4, "literal and central-factorial chain weights agree for t <= 60", [&](std::ostream& d) {
    const pdc::TriangleTable s2(pdc::TriangleKind::stirling2, 60);
    const pdc::TriangleTable central(pdc::TriangleKind::centralT, 30);
    unsigned bad = 0, compared = 0;
    for (unsigned t = 0; t <= 60; ++t) {
      for (unsigned c = 0; 2 * c <= t; ++c, ++compared) {
        bad += pdc::h_direct(t, c, s2) != pdc::h_fast(t, c, central);
      }
    }
    d << compared - bad << "/" << compared << " pairs";
    return bad == 0;
  });

  criterion(5, "identity suite", [&](std::ostream& d) {
    std::vector<std::string> failed;

    const pdc::TriangleTable s1(pdc::TriangleKind::stirling1, 200);
    const pdc::TriangleTable s2(pdc::TriangleKind::stirling2, 30);
    bool lah = true;
    for (unsigned n = 1; n <= 30; ++n) {
      for (unsigned k = 1; k <= n; ++k) {
        ExactInt sum = 0;
        for (unsigned j = k; j <= n; ++j) sum += s1(n, j) * s2(j, k);
        lah = lah && sum == pdc::binomial(n - 1, k - 1) * pdc::factorial(n) / pdc::factorial(k);
      }
    }
    if (!lah) failed.push_back("Lah");

    const pdc::DenseTables tables(100);
    const auto q0 = pdc::q0_seq(100);
    bool square = true;
    for (unsigned n = 0; n <= 100; ++n) {
      square = square && tables.q_nk(n, 0) == q0[n] && q0[n] == tables.fubini().ordinary(n) * tables.fubini().ordinary(n);
    }
    if (!square) failed.push_back("q_{n,0}=f_n^2");

    bool top = true, incl_excl = true;
    for (unsigned n = 2; n <= 40; ++n) top = top && tables.q_nk(n, n - 1) == 2 * pdc::factorial(n);
    for (unsigned n = 0; n <= 40; ++n) {
      ExactInt alt = 0;
      for (unsigned k = 0; k <= n; ++k) {
        if (k % 2) alt -= tables.q_nk(n, k); else alt += tables.q_nk(n, k);
      }
      incl_excl = incl_excl && alt == records[n].q;
    }
    if (!top) failed.push_back("q_{n,n-1}=2n!");
    if (!incl_excl) failed.push_back("inclusion-exclusion");

    bool divisible = true;
    for (unsigned n = 0; n <= 200; ++n) {
      ExactInt sum = 0;
      for (unsigned k = 0; k <= n; ++k) {
        const ExactInt term = s1(n, k) * records[k].q;
        if ((n - k) % 2) sum -= term; else sum += term;
      }
      divisible = divisible && mpz_divisible_p(sum.get_mpz_t(), pdc::factorial(n).get_mpz_t());
    }
    if (!divisible) failed.push_back("n! | sum s(n,k) q_k");

    bool bound = true;
    for (unsigned n = 0; n <= 60; ++n) {
      for (unsigned k = 0; k <= n; ++k) bound = bound && pdc::analysis::stirling1_bound_holds(s1(n, n - k), n, k);
    }
    if (!bound) failed.push_back("Stirling bound");

    bool conv = true;
    for (const auto& c : pdc::check_convolution(14, 14, 14)) conv = conv && c.pass;
    if (!conv) failed.push_back("convolution");

    if (failed.empty()) {
      d << "7/7 identities";
    } else {
      for (const auto& f : failed) d << f << " ";
    }
    return failed.empty();
  });

  criterion(6, "ratios r_n match the published six-decimal values", [&](std::ostream& d) {
    unsigned bad = 0, compared = 0;
    auto compare = [&](unsigned n, std::string_view want) {
      const std::string got = pdc::analysis::format_ratio(pdc::analysis::compute_ratio(n, records[n].p).ratio);
      ++compared;
      if (got != want) {
        ++bad;
        d << "n=" << n << " got " << got << " want " << want << "; ";
      }
    };
    for (const auto& row : fixtures::kSmall) compare(row.n, row.ratio);
    for (const auto& row : fixtures::kLarge) {
      compare(row.n, row.ratio);
      const std::string p = pdc::to_string(records[row.n].p);
      if (head_of(p) != row.head || tail_of(p) != row.tail || p.size() != row.digits) {
        ++bad;
        d << "n=" << row.n << " digits differ; ";
      }
    }
    d << compared - bad << "/" << compared << " rows";
    return bad == 0;
  });

  criterion(7, "streaming is bit-identical to dense at N = 200; kill and resume", [&](std::ostream& d) {
    constexpr unsigned N = 200;
    const std::vector<pdc::SequenceRecord> dense(records.begin(), records.begin() + N + 1);
    bool ok = true;
    for (int workers : {1, 2, 8}) {
      const bool same = pdc::run_streaming({.max_n = N, .mode = pdc::EngineMode::streaming, .workers = workers}) == dense;
      d << "workers=" << workers << (same ? " same" : " DIFFERENT") << "; ";
      ok = ok && same;
    }
    return kill_and_resume(pdc_exe, N, dense, d) && ok;
  });

  criterion(8, "asymptotic diagnostics at n = 200", [&](std::ostream& d) {
    const BigDecimal k = pdc::analysis::constant_K(40);
    const BigDecimal rq = pdc::analysis::q_growth_ratio(records[200].q, 200);
    const BigDecimal r200 = pdc::analysis::compute_ratio(200, records[200].p, 40).ratio;
    bool decreasing = true;
    BigDecimal prev = pdc::analysis::compute_ratio(100, records[100].p, 40).gap;
    for (unsigned n = 101; n <= 200; ++n) {
      const BigDecimal gap = pdc::analysis::compute_ratio(n, records[n].p, 40).gap;
      decreasing = decreasing && gap < prev;
      prev = gap;
    }
    const bool q_ok = rq >= BigDecimal::parse("0.98") && rq <= BigDecimal::parse("1.02");
    const bool r_ok = r200 >= BigDecimal::parse("0.405") && r200 < k;
    d << "q ratio " << rq.to_significant(6) << ", r_200 " << r200.to_significant(8) << " < K "
      << k.to_significant(8) << ", K - r_n decreasing on [100,200]: " << (decreasing ? "yes" : "no");
    return q_ok && r_ok && decreasing;
  });

  criterion(9, "q_{n+phi(p^m)} == q_n mod p^m for p in {2,3,5,7}, m <= 2, n <= 300", [&](std::ostream& d) {
    std::vector<ExactInt> qs;
    for (const auto& r : records) qs.push_back(r.q);
    std::size_t violations = 0, pairs = 0;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      for (unsigned m = 1; m <= 2; ++m) {
        const auto rep = pdc::analysis::check_congruence(qs, p, m);
        violations += rep.violations.size();
        pairs += rep.last_n - rep.first_n + 1;
        for (unsigned n : rep.violations) d << "p=" << p << " m=" << m << " n=" << n << "; ";
      }
    }
    d << pairs << " pairs, " << violations << " violations";
    return violations == 0;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
