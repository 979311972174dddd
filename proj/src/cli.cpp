#include "pdc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pdc/analysis.hpp"
#include "pdc/chains.hpp"
#include "pdc/engine.hpp"
#include "pdc/oracle.hpp"
#include "pdc/results.hpp"

namespace pdc::cli {

namespace {

// Carries an exit status out of a subcommand handler.
struct ExitWith {
  int code;
  std::string message;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// --- compute ----------------------------------------------------------------

struct ComputeOptions {
  unsigned max_n = 0;
  std::string mode = "dense";
  int workers = 1;
  std::string checkpoint;
  unsigned checkpoint_interval = 10;
  std::string out_path;
  std::string format = "tsv";
  bool emit_q = false;
  bool no_timestamp = false;
};

int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
  if (o.max_n < 1) throw ExitWith{kExitUsage, "--max-n must be >= 1"};
  EngineConfig config;
  config.max_n = o.max_n;
  config.mode = o.mode == "streaming" ? EngineMode::streaming : EngineMode::dense;
  config.workers = o.workers;
  config.checkpoint_interval = o.checkpoint_interval;
  if (!o.checkpoint.empty()) {
    if (config.mode != EngineMode::streaming) {
      throw ExitWith{kExitUsage, "--checkpoint requires --mode streaming"};
    }
    config.checkpoint_path = o.checkpoint;
  }

  std::vector<SequenceRecord> records;
  try {
    records = run(config);
  } catch (const CheckpointError& e) {
    throw ExitWith{kExitMismatch, std::string("refusing to resume: ") + e.what()};
  } catch (const ArithmeticError& e) {
    throw ExitWith{kExitMismatch, e.what()};
  }

  ResultsOptions ro;
  ro.format = o.format == "json" ? ResultsFormat::json : ResultsFormat::tsv;
  ro.emit_q = o.emit_q;
  if (!o.no_timestamp) ro.timestamp = utc_timestamp();

  std::ostream* summary = &out;
  std::ofstream file;
  if (o.out_path.empty()) {
    write_results(out, records, ro);
    summary = &err;
  } else {
    file.open(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw ExitWith{kExitUsage, "cannot open --out " + o.out_path};
    write_results(file, records, ro);
  }
  for (const SequenceRecord& r : records) {
    if ((r.n > 0 && r.n % 100 == 0) || r.n == o.max_n) {
      *summary << "n=" << r.n << " digits=" << r.digit_count << '\n';
    }
  }
  return kExitOk;
}

// --- oracle -----------------------------------------------------------------

struct OracleOptions {
  std::string kind;
  unsigned n = 0;
  bool unsafe_cap = false;
};

bool report(std::ostream& out, const std::string& label, const ExactInt& oracle_value,
            const ExactInt& formula_value) {
  const bool ok = oracle_value == formula_value;
  if (!label.empty()) out << label << ' ';
  out << "oracle=" << oracle_value << " formula=" << formula_value << (ok ? " OK" : " MISMATCH")
      << '\n';
  return ok;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  const unsigned n = o.n;
  if (n < 1) throw ExitWith{kExitUsage, "--n must be >= 1"};
  auto cap = [&](unsigned default_cap) { return o.unsafe_cap ? std::max(n, default_cap) : default_cap; };
  bool ok = true;
  try {
    if (o.kind == "pn") {
      ok = report(out, "", oracle::count_maximal(n, cap(oracle::kTableCap)), p_seq(q_seq(n))[n]);
    } else if (o.kind == "p0") {
      ok = report(out, "", oracle::count_tables(n, cap(oracle::kTableCap)), p_seq(q0_seq(n))[n]);
    } else if (o.kind == "qn") {
      ok = report(out, "", oracle::count_q_oracle(n, cap(oracle::kQOracleCap)).q, q_seq(n)[n]);
    } else if (o.kind == "qnk") {
      const oracle::QOracleResult res = oracle::count_q_oracle(n, cap(oracle::kQOracleCap));
      const DenseTables tables(n);
      ok = report(out, "q_" + std::to_string(n), res.q, tables.q(n));
      for (unsigned k = 0; k <= n; ++k) {
        ok = report(out, "q_" + std::to_string(n) + "," + std::to_string(k), res.qk[k],
                    tables.q_nk(n, k)) && ok;
      }
    } else if (o.kind == "patterns") {
      const unsigned c = cap(oracle::kTableCap);
      if (n > c) throw oracle::CapExceeded("count_patterns", n, c);
      const DenseTables tables(n);
      ExactInt p0 = 0, p = 0, q = 0;
      for (unsigned m = 1; m <= n; ++m) {
        const oracle::PatternCounts pc = oracle::count_patterns(m, c);
        out << "m=" << m << " patterns=" << pc.total << " maximal=" << pc.maximal << '\n';
        const ExactInt ways = binomial(static_cast<long>(n) - 1, static_cast<long>(n - m));
        p0 += ways * pc.total;
        p += ways * pc.maximal;
        q += tables.factorial(m) * tables.stirling2()(n, m) * pc.maximal;
      }
      const std::vector<ExactInt> qs = q_seq(n);
      ok = report(out, "p_" + std::to_string(n) + ",0", p0, p_seq(q0_seq(n))[n]);
      ok = report(out, "p_" + std::to_string(n), p, p_seq(qs)[n]) && ok;
      ok = report(out, "q_" + std::to_string(n), q, qs[n]) && ok;
    } else if (o.kind == "evenparts") {
      const unsigned c = cap(oracle::kEvenPartitionCap);
      if (n > c) throw oracle::CapExceeded("count_even_partitions_oracle", n, c);
      const TriangleTable central(TriangleKind::centralT, n / 2);
      for (unsigned parts = 0; 2 * parts <= n; ++parts) {
        const ExactInt h = h_fast(n, parts, central);
        const ExactInt formula = exact_div(abs(h), pow_ui(2, parts));
        ok = report(out, "t=" + std::to_string(n) + " c=" + std::to_string(parts),
                    oracle::count_even_partitions_oracle(n, parts, c), formula) && ok;
      }
    }
  } catch (const oracle::CapExceeded& e) {
    throw ExitWith{kExitUsage, e.what()};
  }
  return ok ? kExitOk : kExitMismatch;
}

// --- table ------------------------------------------------------------------

int cmd_table(unsigned max_n, std::ostream& out) {
  const DenseTables tables(max_n);
  const unsigned k_max = max_n == 0 ? 0 : max_n - 1;
  out << "n\tq_n";
  for (unsigned k = 0; k <= k_max; ++k) out << "\tq_{n," << k << '}';
  out << '\n';
  for (unsigned n = 0; n <= max_n; ++n) {
    out << n << '\t' << tables.q(n);
    for (unsigned k = 0; k <= k_max; ++k) out << '\t' << tables.q_nk(n, k);
    out << '\n';
  }
  return kExitOk;
}

// --- ratio / congruence -------------------------------------------------------

std::vector<ResultRow> load_results(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitWith{kExitUsage, "cannot open --in " + path};
  std::vector<ResultRow> rows;
  try {
    rows = read_results(in);
  } catch (const ResultsParseError& e) {
    throw ExitWith{kExitUsage, e.what()};
  }
  if (rows.empty()) throw ExitWith{kExitUsage, "results file " + path + " has no records"};
  return rows;
}

struct RatioOptions {
  std::string in;
  int precision = BigDecimal::kDefaultPrecision;
  unsigned fit_from = 100;
  std::string csv;
};

int cmd_ratio(const RatioOptions& o, std::ostream& out) {
  if (o.precision < 1) throw ExitWith{kExitUsage, "--precision must be >= 1"};
  const std::vector<ResultRow> rows = load_results(o.in);
  const int working = std::max(o.precision, 30);
  out << "K = " << analysis::constant_K(working).to_significant(o.precision) << '\n';
  out << "n\tratio\n";
  std::vector<analysis::RatioRecord> tail;
  for (const ResultRow& row : rows) {
    analysis::RatioRecord rec = analysis::compute_ratio(row.n, row.p, working);
    out << row.n << '\t' << analysis::format_ratio(rec.ratio) << '\n';
    // r_0 = 1 and r_1 ~ 0.48 lie above K; the log-gap plot starts at n = 2.
    if (row.n >= 2) tail.push_back(std::move(rec));
  }
  std::vector<analysis::Figure4Point> points;
  try {
    points = analysis::figure4_data(tail);
  } catch (const std::domain_error& e) {
    throw ExitWith{kExitMismatch, e.what()};
  }
  try {
    const analysis::FitResult fit = analysis::fit_tail_intercept(points, o.fit_from);
    out << "fit n>=" << o.fit_from << " points=" << fit.points
        << " slope=" << fit.slope.to_significant(6) << " intercept=" << fit.intercept.to_significant(6)
        << " intercept_at_slope_-1=" << fit.intercept_unit_slope.to_significant(6) << '\n';
  } catch (const std::invalid_argument&) {
    out << "fit n>=" << o.fit_from << ": fewer than two points\n";
  }
  if (o.csv.empty()) {
    analysis::write_figure4_csv(out, points);
  } else {
    std::ofstream csv(o.csv, std::ios::binary | std::ios::trunc);
    if (!csv) throw ExitWith{kExitUsage, "cannot open --csv " + o.csv};
    analysis::write_figure4_csv(csv, points);
  }
  return kExitOk;
}

struct CongruenceOptions {
  std::string in;
  unsigned long prime = 0;
  unsigned power = 1;
  unsigned n_min = 0;
};

int cmd_congruence(const CongruenceOptions& o, std::ostream& out) {
  if (!analysis::is_prime(o.prime)) throw ExitWith{kExitUsage, std::to_string(o.prime) + " is not prime"};
  if (o.power < 1) throw ExitWith{kExitUsage, "--power must be >= 1"};
  const std::vector<ResultRow> rows = load_results(o.in);
  std::vector<ExactInt> qs;
  for (const ResultRow& row : rows) {
    if (row.n != qs.size()) throw ExitWith{kExitUsage, "results must list n = 0, 1, 2, ... in order"};
    if (!row.q) throw ExitWith{kExitUsage, "results lack q_n (recompute with --emit-q)"};
    qs.push_back(*row.q);
  }
  analysis::CongruenceReport rep;
  try {
    rep = analysis::check_congruence(qs, o.prime, o.power, o.n_min);
  } catch (const std::invalid_argument& e) {
    throw ExitWith{kExitUsage, e.what()};
  }
  out << "prime=" << rep.prime << " power=" << rep.power << " modulus=" << rep.modulus
      << " period=" << rep.period << " tested n=" << rep.first_n << ".." << rep.last_n
      << " violations=" << rep.violations.size() << '\n';
  for (unsigned n : rep.violations) {
    out << "violation n=" << n << " q_n mod p^m=" << ExactInt(qs[n] % rep.modulus) << '\n';
  }
  return rep.holds() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parabolic double coset counts: exact computation, oracles and analysis", "pdc"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Compute p_n (and q_n) for n = 0..N");
  c->add_option("--max-n", compute.max_n, "Largest n")->required();
  c->add_option("--mode", compute.mode, "dense | streaming")
      ->check(CLI::IsMember({"dense", "streaming"}));
  c->add_option("--workers", compute.workers, "Worker threads (streaming)")->check(CLI::PositiveNumber);
  c->add_option("--checkpoint", compute.checkpoint, "Checkpoint file (streaming); resumes if present");
  c->add_option("--checkpoint-interval", compute.checkpoint_interval, "Rows between checkpoints")
      ->check(CLI::PositiveNumber);
  c->add_option("--out", compute.out_path, "Results file (default stdout)");
  c->add_option("--format", compute.format, "tsv | json")->check(CLI::IsMember({"tsv", "json"}));
  c->add_flag("--emit-q", compute.emit_q, "Store q_n as a fourth column");
  c->add_flag("--no-timestamp", compute.no_timestamp, "Omit the timestamp line");

  OracleOptions orc;
  auto* o = app.add_subcommand("oracle", "Compare brute-force enumeration with the formulas");
  o->add_option("kind", orc.kind, "pn | p0 | qn | qnk | patterns | evenparts")
      ->required()
      ->check(CLI::IsMember({"pn", "p0", "qn", "qnk", "patterns", "evenparts"}));
  o->add_option("--n", orc.n, "Size")->required();
  o->add_flag("--unsafe-cap", orc.unsafe_cap, "Allow n above the feasibility cap");

  std::string table_kind;
  unsigned table_max_n = 0;
  auto* t = app.add_subcommand("table", "Print q_n and q_{n,k}");
  t->add_option("kind", table_kind, "q")->required()->check(CLI::IsMember({"q"}));
  t->add_option("--max-n", table_max_n, "Largest n")->required();

  RatioOptions ratio;
  auto* r = app.add_subcommand("ratio", "Ratios p_n (ln 2)^{2n} / n!, log-gap data and tail fit");
  r->add_option("--in", ratio.in, "Results file")->required();
  r->add_option("--precision", ratio.precision, "Significant digits");
  r->add_option("--fit-from", ratio.fit_from, "Smallest n used by the fit");
  r->add_option("--csv", ratio.csv, "Write the log-gap CSV here (default stdout)");

  CongruenceOptions cong;
  auto* g = app.add_subcommand("congruence", "Check q_{n+phi(p^m)} == q_n (mod p^m)");
  g->add_option("--in", cong.in, "Results file written with --emit-q")->required();
  g->add_option("--prime", cong.prime, "Prime p")->required();
  g->add_option("--power", cong.power, "Exponent m");
  g->add_option("--n-min", cong.n_min, "Smallest n tested");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out, err);
    if (o->parsed()) return cmd_oracle(orc, out);
    if (t->parsed()) return cmd_table(table_max_n, out);
    if (r->parsed()) return cmd_ratio(ratio, out);
    if (g->parsed()) return cmd_congruence(cong, out);
  } catch (const ExitWith& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace pdc::cli
