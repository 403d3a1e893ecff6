#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sepcode/code_io.hpp"
#include "sepcode/verifiers.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace sepcode;

namespace {

const fs::path kData = SEPCODE_TEST_DATA;

struct Result {
  int status;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sepcode");
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sepcode_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string ex(const char* name) { return (kData / name).string(); }

}  // namespace

TEST_CASE("construct") {
  const auto path = scratch("q12.code");
  auto r = run({"construct", "--q", "12", "--out", path.string()});
  REQUIRE(r.status == cli::kOk);
  auto rep = r.report();
  CHECK(rep["command"] == "construct");
  CHECK(rep["result"]["s"] == 3);
  CHECK(rep["result"]["M"] == 162);
  CHECK(rep["result"]["m"] == 4);
  CHECK(rep["result"]["w"] == 0);
  const Code c = read_code_file(path.string());
  CHECK(c.size() == 162);
  CHECK(c.length() == 3);
  CHECK(c.alphabet_size() == 12);

  r = run({"construct", "--q", "4", "--s", "1", "--out", scratch("q4.code").string()});
  REQUIRE(r.status == cli::kOk);
  CHECK(r.report()["result"]["M"] == 18);
  CHECK(read_code_file(scratch("q4.code").string()).size() == 18);

  r = run({"construct", "--q", "4", "--s", "2", "--out", scratch("bad.code").string()});
  CHECK(r.status == cli::kUsage);
  CHECK(r.err.find("q-s must be odd") != std::string::npos);

  r = run({"construct", "--q", "5", "--out", "/nonexistent-dir/x.code"});
  CHECK(r.status == cli::kCannotCreate);
}

TEST_CASE("verify") {
  auto r = run({"verify", ex("example1.code"), "--property", "ssc", "--t", "2"});
  CHECK(r.status == cli::kOk);
  CHECK(r.report()["result"]["holds"] == true);

  r = run({"verify", ex("example2.code"), "--property", "ssc", "--t", "2"});
  CHECK(r.status == cli::kDoesNotHold);
  auto w = r.report()["result"]["witness"];
  CHECK(w["kind"] == "strong_separation");
  CHECK(w["coalition"] == json::array({1, 5}));
  CHECK(w["alternative"] == json::array({2, 3, 4}));

  r = run({"verify", ex("example2.code"), "--property", "ssc", "--oracle"});
  CHECK(r.status == cli::kDoesNotHold);
  CHECK(r.report()["result"]["method"] == "subset-oracle");

  r = run({"verify", ex("example1.code"), "--property", "fpc", "--t", "2"});
  CHECK(r.status == cli::kDoesNotHold);
  w = r.report()["result"]["witness"];
  CHECK(w["coalition"] == json::array({2, 3}));
  CHECK(w["framed"] == 1);

  r = run({"verify", ex("example2.code"), "--property", "sc"});
  CHECK(r.status == cli::kOk);

  r = run({"verify", ex("malformed.code")});
  CHECK(r.status == cli::kParse);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(run({"verify", ex("example1.code"), "--property", "ipp"}).status == cli::kUsage);
  CHECK(run({"verify", ex("example1.code"), "--t", "9"}).status == cli::kUsage);
  CHECK(run({"verify"}).status == cli::kUsage);
  CHECK(run({}).status == cli::kUsage);
}

TEST_CASE("trace") {
  auto r = run({"trace", ex("example1.code"), "--r", "**0", "--t", "2", "--algorithm", "ssc"});
  CHECK(r.status == cli::kOk);
  CHECK(r.report()["result"]["colluders"] == json::array({2, 3}));

  r = run({"trace", ex("example1.code"), "--r", "000", "--t", "2"});
  CHECK(r.status == cli::kOk);
  CHECK(r.report()["result"]["colluders"] == json::array({1}));

  r = run({"trace", ex("example1.code"), "--r", "***", "--t", "2"});
  CHECK(r.status == cli::kOverflow);
  CHECK(r.report()["result"]["outcome"] == "overflow");
  CHECK(r.report()["result"]["message"] == "The set of colluders has size at least t+1");

  r = run({"trace", ex("example1.code"), "--r", "001", "--algorithm", "fpc"});
  CHECK(r.status == cli::kOk);
  CHECK(r.report()["result"]["colluders"] == json::array({4}));

  CHECK(run({"trace", ex("example1.code"), "--r", "0x1"}).status == cli::kUsage);
  CHECK(run({"trace", ex("example1.code"), "--r", "11*"}).status == cli::kUsage);
}

TEST_CASE("simulate") {
  auto r = run({"simulate", ex("example1.code"), "--colluders", "2,3", "--dim", "16", "--then-trace"});
  REQUIRE(r.status == cli::kOk);
  auto rep = r.report();
  CHECK(rep["result"]["R"] == "**0");
  CHECK(rep["result"]["trace"]["colluders"] == json::array({2, 3}));
  CHECK(rep["result"]["trace"]["match"] == true);

  r = run({"simulate", ex("example2.code"), "--colluders", "5", "--dim", "8"});
  REQUIRE(r.status == cli::kOk);
  rep = r.report();
  for (double v : rep["result"]["T"]) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep["result"]["R"] == "111");

  r = run({"simulate", ex("example1.code"), "--colluders", "1"});
  CHECK(r.report()["result"]["R"] == "000");

  CHECK(run({"simulate", ex("example1.code"), "--colluders", "9"}).status == cli::kUsage);
  CHECK(run({"simulate", ex("example1.code"), "--colluders", "1", "--dim", "2"}).status == cli::kUsage);
}

TEST_CASE("compose") {
  const auto q_ary = scratch("q4s1.code"), binary = scratch("q4s1.bin.code");
  REQUIRE(run({"construct", "--q", "4", "--s", "1", "--out", q_ary.string()}).status == cli::kOk);
  const auto r = run({"compose", q_ary.string(), "--out", binary.string()});
  REQUIRE(r.status == cli::kOk);
  CHECK(r.report()["result"]["output"]["n"] == 12);
  const Code c = read_code_file(binary.string());
  CHECK(c.length() == 12);
  CHECK(c.size() == 18);
  CHECK(c.is_binary());
  CHECK(is_ssc(c, 2).holds);
}

TEST_CASE("reports are byte-identical across runs and --json writes a file") {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", ex("example2.code"), "--property", "ssc"},
      {"trace", ex("example1.code"), "--r", "**0"},
      {"simulate", ex("example1.code"), "--colluders", "2,3", "--dim", "9", "--seed", "42", "--then-trace"},
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd), b = run(cmd);
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
  }

  const auto path = scratch("report.json");
  const auto r = run({"--json", path.string(), "trace", ex("example1.code"), "--r", "000"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["result"]["colluders"] == json::array({1}));
}
