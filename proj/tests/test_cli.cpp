#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HOLOQ_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kData = HOLOQ_DATA_DIR;
const std::string kPaper = kData + "/paper-thm1/";

}  // namespace

TEST_CASE("cohomology of the printed module") {
  const auto r = run("cohomology " + kPaper + "group.json " + kPaper + "module.json");
  CHECK(r.code == 0);
  CHECK(r.out == "H² ≅ Z/2\n");
}

TEST_CASE("character table of C2") {
  const auto r = run("chartable " + kData + "/fixtures/c2.json --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"characters\":[{\"indicator\":1,\"values\":[\"1\",\"1\"]},{\"indicator\":1,\"values\":[\"1\",\"-1\"]}]") !=
        std::string::npos);
}

TEST_CASE("screen SL(2,3)") {
  const auto r = run("screen " + kData + "/fixtures/sl23.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("sl23: excluded, condition 4, p = 3") == 0);
}

TEST_CASE("verify commands") {
  const auto full = run("verify-paper");
  CHECK(full.code == 0);
  CHECK(full.out.find("verdict: HT") != std::string::npos);
  const auto examples = run("verify-examples " + kData + "/examples");
  CHECK(examples.code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("chartable /nonexistent.json").code == 2);
  CHECK(run("verify-examples " + kData + "/fixtures").code == 2);
  CHECK(run("cohomology " + kData + "/fixtures/c2.json " + kPaper + "module.json").code == 2);
  // a split extension has torsion
  const std::string kb = kData + "/examples/klein-bottle/";
  CHECK(run("manifold " + kb + "group.json " + kb + "module.json " + kb + "cocycle.json").code == 0);
  CHECK(run("verify-paper " + kData + "/examples").code == 1);
}

TEST_CASE("JSON output is byte-identical across runs") {
  const std::vector<std::string> commands{"chartable " + kData + "/fixtures/s4.json", "screen " + kData + "/fixtures --blocks",
                                 "cohomology " + kPaper + "group.json " + kPaper + "module.json", "verify-paper",
                                 "verify-examples",
                                 "manifold " + kPaper + "group.json " + kPaper + "module.json " + kPaper + "cocycle.json"};
  for (const auto& args : commands) {
    INFO(args);
    const auto a = run(args + " --json");
    const auto b = run(args + " --json");
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("enumeration cap from the environment") {
  const std::string cmd = "HOLOQ_MAX_GROUP_ORDER=10 " + std::string(HOLOQ_CLI) + " chartable " + kData +
                          "/fixtures/g64.json >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
