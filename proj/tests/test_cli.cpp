// End-to-end checks of the command-line binary: output shapes, exit
// codes, and byte determinism of the machine formats.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("table formats") {
  const RunResult csv = run_cli("table --dim 4 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.starts_with(",0,1,2,3"));
  CHECK(contains(csv.out, "-0"));
  CHECK(run_cli("table --dim 4 --format csv").out == csv.out);

  const RunResult pretty = run_cli("table --dim 2");
  CHECK(pretty.exit_code == 0);
  CHECK(contains(pretty.out, "\tU\t1\t2\t3"));
  CHECK(contains(pretty.out, "-U"));

  const RunResult json = run_cli("table --dim 3 --format json");
  CHECK(json.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed.size() == 8);
  CHECK(parsed[0][0] == nlohmann::json({{"sign", 1}, {"index", 0}}));
  CHECK(parsed[1][1] == nlohmann::json({{"sign", -1}, {"index", 0}}));
}

TEST_CASE("trips listing") {
  const RunResult r = run_cli("trips --dim 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "(1,7,6)"));
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 7);
}

TEST_CASE("argument errors exit 2") {
  CHECK(run_cli("nosuchcmd").exit_code == 2);
  CHECK(run_cli("table --dim 4 --bogus").exit_code == 2);
  CHECK(run_cli("table").exit_code == 2);
  CHECK(run_cli("dna --kite VIII --position 1").exit_code == 2);
  CHECK(run_cli("dna --kite III --position 7").exit_code == 2);
  CHECK(run_cli("goto --otrip 1,2").exit_code == 2);
}

TEST_CASE("goto listing text") {
  const RunResult r = run_cli("goto --otrip 1,2,3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "GoTo #1: O-trip (1,2,3), sedenions {12,13,14,15}"));
  CHECK(contains(r.out, "(1+13)(2-14)"));
  CHECK(contains(r.out, "kite IV zigzag"));
}

TEST_CASE("osiris grids") {
  const RunResult full = run_cli("osiris");
  CHECK(full.exit_code == 0);
  CHECK(contains(full.out, "o\\S"));
  const RunResult stripped = run_cli("osiris --stripped");
  CHECK(stripped.exit_code == 0);
  CHECK(contains(stripped.out, "III"));
  CHECK(!contains(stripped.out, "("));
}

TEST_CASE("boxkites views") {
  const RunResult table = run_cli("boxkites");
  CHECK(table.exit_code == 0);
  CHECK(contains(table.out, "I\t7,6,4,5\t(3,10)"));
  const RunResult one = run_cli("boxkites --kite III");
  CHECK(one.exit_code == 0);
  CHECK(contains(one.out, "ABC zigzag"));
  CHECK(contains(one.out, "A-F B-E C-D"));
}

TEST_CASE("lanyard census json") {
  const RunResult r = run_cli("lanyards --kite I --max-len 6");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["cycles_by_length"]["4"] == 30);
  CHECK(j["cycles_by_length"]["6"] == 112);
  CHECK(j["tray_rack_4"] == 6);
  CHECK(j["sail_6"] == 4);
}

TEST_CASE("dna positions") {
  const RunResult r = run_cli("dna --kite III --position 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "kite VI"));
  CHECK(contains(r.out, "kite V"));
}

TEST_CASE("seinfeld census json") {
  const RunResult r = run_cli("seinfeld --kite II --samples 3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["hyperplanes"] == 6);
  CHECK(j["case_counts"].size() == 9);
  CHECK(j["case_counts"][4] == 1);
}

TEST_CASE("donut text") {
  const RunResult r = run_cli("donut --otrip 1,2,3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "cartouches: IV VII V VI"));
  CHECK(contains(r.out, "half-diagonal"));
}

TEST_CASE("fano modes") {
  const RunResult flips = run_cli("fano --sign-flips");
  CHECK(flips.exit_code == 0);
  const auto j = nlohmann::json::parse(flips.out);
  CHECK(j["reversal_multiplicity"] ==
        nlohmann::json({8, 0, 0, 56, 56, 0, 0, 8}));

  const RunResult order = run_cli("fano --counting-order");
  CHECK(order.exit_code == 0);
  const auto oj = nlohmann::json::parse(order.out);
  CHECK(oj["min_out_of_order"] == 1);
  CHECK(oj["zero_attainable"] == false);

  const RunResult moreno = run_cli("fano --moreno 1,2,12");
  CHECK(moreno.exit_code == 0);
  const auto mj = nlohmann::json::parse(moreno.out);
  CHECK(mj["flowmorphic"] == false);
  CHECK(mj["missigned"].size() == 2);

  CHECK(run_cli("fano").exit_code == 2);
  CHECK(run_cli("fano --sign-flips --counting-order").exit_code == 2);
}

TEST_CASE("pathion census") {
  const RunResult r = run_cli("pathions --dim 5 --signature 15");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["census"]["edges"] == 36);
  CHECK(j["census"]["trios"] == 12);
  CHECK(j["census"]["struts_insulated"] == true);

  const RunResult low = run_cli("pathions --dim 5 --signature 3");
  const auto lj = nlohmann::json::parse(low.out);
  CHECK(lj["census"]["edges"] == 84);
  CHECK(lj["census"]["trios"] == 28);
  CHECK(lj["census"]["all_pairs_couple"] == true);
}

TEST_CASE("verify suites and exit codes") {
  const RunResult flow = run_cli("verify --suite flowmorph --json");
  CHECK(flow.exit_code == 0);
  const auto j = nlohmann::json::parse(flow.out);
  CHECK(j["ok"] == true);
  CHECK(j["failed"] == 0);

  const RunResult pathion = run_cli("verify --suite pathion");
  CHECK(pathion.exit_code == 1);
  CHECK(contains(pathion.out, "[FAIL] pathion.saturation"));
  CHECK(contains(pathion.out, "[PASS] pathion.struts"));
}

TEST_CASE("dot exports") {
  const std::string path = "cli_test_boxkite.dot";
  const RunResult r =
      run_cli("export --dot boxkite:III --out " + path);
  CHECK(r.exit_code == 0);
  const std::string dot = slurp(path);
  CHECK(dot.starts_with("graph boxkite_III"));
  std::size_t dashed = 0, pos = 0;
  while ((pos = dot.find("style=dashed", pos)) != std::string::npos) {
    ++dashed;
    pos += 1;
  }
  CHECK(dashed == 3);
  std::remove(path.c_str());

  CHECK(run_cli("export --dot fano --out cli_test_fano.dot").exit_code == 0);
  CHECK(slurp("cli_test_fano.dot").starts_with("digraph fano"));
  std::remove("cli_test_fano.dot");

  CHECK(run_cli("export --dot boxkite:III --out /nonexistent/x.dot")
            .exit_code == 1);
  CHECK(run_cli("export --dot nonsense --out cli_test_n.dot").exit_code == 2);
}
