#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd = std::string(SGFIN_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_data.empty()) {
    std::string tmp = std::string("/tmp/sgfin_cli_in_") + std::to_string(getpid()) + ".json";
    std::ofstream out(tmp);
    out << stdin_data;
    out.close();
    cmd = cmd + " < " + tmp;
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("example round-trips into analyze for every fixture") {
  for (std::string name : {"A_n", "Kronecker", "E1", "E2", "S1", "S2", "Lambda"}) {
    std::string args = "example " + name;
    if (name == "Lambda") args += " -r 1 -n 2";
    if (name == "A_n" || name == "S1") args += " -n 2";
    if (name == "S2") args += " -n 3";
    RunResult ex = run(args);
    REQUIRE(ex.exit_code == 0);
    RunResult an = run("analyze - --json", ex.output);
    CHECK(an.exit_code == 0);
    CHECK(an.output.find("\"decisions\"") != std::string::npos);
  }
}

TEST_CASE("analyze output is byte-stable") {
  RunResult ex = run("example E1");
  RunResult a = run("analyze - --json", ex.output);
  RunResult b = run("analyze - --json", ex.output);
  CHECK(a.output == b.output);
  CHECK(!a.output.empty());
}

TEST_CASE("verdict No still exits zero") {
  RunResult ex = run("example Kronecker");
  RunResult de = run("decide - --json", ex.output);
  CHECK(de.exit_code == 0);
  CHECK(de.output.find("\"verdict\": \"No\"") != std::string::npos);
}

TEST_CASE("validation rejection exits 1 with the diagnostic") {
  std::string broken = R"({"vertices": ["1","2"], "arrows": [
    {"id":"a","source":"1","target":"2"},
    {"id":"b","source":"1","target":"2"},
    {"id":"c","source":"1","target":"2"}]})";
  RunResult r = run("validate -", broken);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("OUT_DEGREE") != std::string::npos);
}

TEST_CASE("schema errors exit 2") {
  RunResult r = run("validate -", R"({"vertices": [], "arrows": "x"})");
  CHECK(r.exit_code == 2);
}

TEST_CASE("analyze on an invalid presentation reports and exits 1") {
  std::string broken = R"({"vertices": ["1","2"], "arrows": [
    {"id":"a","source":"1","target":"2"},
    {"id":"b","source":"1","target":"2"},
    {"id":"c","source":"1","target":"2"}]})";
  RunResult r = run("analyze - --json", broken);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"algebra_class\": \"invalid\"") != std::string::npos);
  CHECK(r.output.find("not_applicable") != std::string::npos);
}

TEST_CASE("precondition failures exit 1") {
  RunResult ex = run("example E2");
  RunResult su = run("surface -", ex.output);
  CHECK(su.exit_code == 1);  // E2 is not smooth-proper
  RunResult du = run("dual -", ex.output);
  CHECK(du.exit_code == 1);
}

TEST_CASE("surface and winding subcommands") {
  RunResult ex = run("example E1");
  RunResult su = run("surface - --json", ex.output);
  CHECK(su.exit_code == 0);
  CHECK(su.output.find("\"genus\": 0") != std::string::npos);
  RunResult wi = run("winding - --subset 1", ex.output);
  CHECK(wi.exit_code == 0);
  CHECK(wi.output.find("\"winding\": -1") != std::string::npos);
}

TEST_CASE("decide accepts handle windings") {
  RunResult ex = run("example E1");
  RunResult de = run("decide - --handle-windings 1,1 --json", ex.output);
  CHECK(de.exit_code == 0);
}

TEST_CASE("random example is seeded") {
  RunResult a = run("example random --seed 5 --size 6");
  RunResult b = run("example random --seed 5 --size 6");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}
