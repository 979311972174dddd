#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pdc/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pdc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const char* name) {
  const fs::path p = fs::temp_directory_path() / ("pdc_test_cli_" + std::to_string(::getpid()) + name);
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"compute", "--max-n", "0"}).code == 2);
  CHECK(invoke({"compute", "--max-n", "5", "--mode", "sideways"}).code == 2);
  CHECK(invoke({"compute", "--max-n", "5", "--checkpoint", "x.ckpt"}).code == 2);
  CHECK(invoke({"oracle", "pn", "--n", "7"}).code == 2);
  CHECK(invoke({"congruence", "--in", "nowhere.tsv", "--prime", "4"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("compute writes results to stdout") {
  const auto r = invoke({"compute", "--max-n", "5", "--no-timestamp"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\t1\t1\n1\t1\t1\n2\t3\t1\n3\t19\t2\n4\t167\t3\n5\t1791\t4\n");
  CHECK(r.err.find("n=5 digits=4") != std::string::npos);
}

TEST_CASE("oracle reports OK") {
  const auto r = invoke({"oracle", "pn", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "oracle=167 formula=167 OK\n");
  CHECK(invoke({"oracle", "qnk", "--n", "3"}).code == 0);
  CHECK(invoke({"oracle", "evenparts", "--n", "6"}).code == 0);
}

TEST_CASE("table q") {
  const auto r = invoke({"table", "q", "--max-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "n\tq_n\tq_{n,0}\tq_{n,1}\n0\t1\t1\t0\n1\t1\t1\t0\n2\t5\t9\t4\n");
}

TEST_CASE("ratio and congruence on a computed file") {
  const fs::path res = scratch("res.tsv");
  const fs::path csv = scratch("fig.csv");
  REQUIRE(invoke({"compute", "--max-n", "60", "--emit-q", "--out", res.string()}).code == 0);

  const auto r = invoke({"ratio", "--in", res.string(), "--precision", "30", "--fit-from", "20",
                         "--csv", csv.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("K = 0.409223005047742712327338202956\n", 0) == 0);
  CHECK(r.out.find("\n20\t0.403608\n") != std::string::npos);
  CHECK(r.out.find("fit n>=20 points=41") != std::string::npos);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,log_n,log_gap");

  CHECK(invoke({"congruence", "--in", res.string(), "--prime", "5", "--power", "2"}).code == 0);
  REQUIRE(invoke({"compute", "--max-n", "10", "--out", res.string()}).code == 0);
  CHECK(invoke({"congruence", "--in", res.string(), "--prime", "2"}).code == 2);

  std::ofstream(res, std::ios::trunc) << "# empty\n";
  CHECK(invoke({"ratio", "--in", res.string()}).code == 2);
  fs::remove(res);
  fs::remove(csv);
}

TEST_CASE("streaming checkpoint via the command line") {
  const fs::path ckpt = scratch("run.ckpt");
  const auto first = invoke({"compute", "--max-n", "30", "--mode", "streaming", "--workers", "2",
                             "--checkpoint", ckpt.string(), "--no-timestamp"});
  CHECK(first.code == 0);
  CHECK(fs::exists(ckpt));
  // a finished checkpoint resumes straight to the same output
  const auto again = invoke({"compute", "--max-n", "30", "--mode", "streaming", "--checkpoint",
                             ckpt.string(), "--no-timestamp"});
  CHECK(again.out == first.out);

  std::ofstream(ckpt, std::ios::trunc) << "ccv1\nmax_n 30\n";
  const auto bad = invoke({"compute", "--max-n", "30", "--mode", "streaming", "--checkpoint",
                           ckpt.string()});
  CHECK(bad.code == 1);
  fs::remove(ckpt);
}
