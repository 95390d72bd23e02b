#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gamma/cli.hpp"

namespace {

struct Result {
  int exit_code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::vector<const char*> argv{"gamma"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dist reads matrices from stdin blocks") {
  Result r = run_cli({"dist", "--a", "-", "--b", "-"},
                     "100\n010\n001\n\n011\n101\n111\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("classify names the case") {
  Result r = run_cli({"classify", "--a", "-", "--b", "-"},
                     "100\n010\n001\n\n011\n101\n111\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "NonAltI_AllOnes r=2 distance=4\n");
}

TEST_CASE("diameter and enumerate") {
  CHECK(run_cli({"diameter", "--n", "3"}).out == "4\n");
  CHECK(run_cli({"diameter", "--n", "6"}).out == "7\n");
  Result r = run_cli({"enumerate", "--n", "3"});
  CHECK(r.out == "28\nratio 0.437500\n");
}

TEST_CASE("neighbors counts the Coxeter degree") {
  Result r = run_cli({"neighbors", "--a", "-"}, "100\n010\n001\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("3\n", 0) == 0);
}

TEST_CASE("geodesic prints an edge path") {
  Result r = run_cli({"geodesic", "--a", "-", "--b", "-"},
                     "100\n010\n001\n\n011\n101\n111\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("length 4\n", 0) == 0);
}

TEST_CASE("codes workflows") {
  Result list = run_cli({"codes-list", "--length", "4"});
  CHECK(list.exit_code == 0);
  CHECK(list.out == "1001\n0110\n\n1010\n0101\n\n1100\n0011\n");

  Result family = run_cli({"codes-family", "--code", "-"}, "1100\n1111\n");
  CHECK(family.exit_code == 0);
  CHECK(family.out.find("members 2") != std::string::npos);
  CHECK(family.out.find("inverse-closed 1") != std::string::npos);

  Result witness = run_cli({"codes-witness", "--a", "-", "--b", "-"},
                           "1100\n1111\n\n1010\n1111\n");
  CHECK(witness.exit_code == 0);
  CHECK(witness.out.find("verified") != std::string::npos);
}

TEST_CASE("json output is schema-stable and byte-identical across runs") {
  std::vector<std::string> args{"--format", "json", "dist", "--a", "-", "--b", "-"};
  std::string input = "100\n010\n001\n\n011\n101\n111\n";
  Result first = run_cli(args, input);
  Result second = run_cli(args, input);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"schema\": \"gamma.cli/1\"") != std::string::npos);
  CHECK(first.out.find("\"result\": 4") != std::string::npos);

  Result ver = run_cli({"--format", "json", "verify", "--suite", "diameter", "--max-n", "4"});
  CHECK(ver.exit_code == 0);
  CHECK(ver.out.find("\"result\": \"pass\"") != std::string::npos);
  CHECK(ver.out.find("seconds") == std::string::npos);  // timings only in human mode
}

TEST_CASE("exit codes distinguish domain and usage errors") {
  // Singular input matrix: domain error.
  Result singular = run_cli({"dist", "--a", "-", "--b", "-"},
                            "11\n11\n\n10\n01\n");
  CHECK(singular.exit_code == 1);
  CHECK(singular.err.find("singular") != std::string::npos);

  // Non-symmetric input: domain error naming the precondition.
  Result asym = run_cli({"dist", "--a", "-", "--b", "-"}, "01\n00\n\n10\n01\n");
  CHECK(asym.exit_code == 1);
  CHECK(asym.err.find("not symmetric") != std::string::npos);

  // Unknown flag: usage error.
  Result usage = run_cli({"dist", "--bogus"});
  CHECK(usage.exit_code == 2);

  // Missing subcommand: usage error.
  CHECK(run_cli({}).exit_code == 2);

  // Enumeration cap: domain error.
  Result cap = run_cli({"enumerate", "--n", "7"});
  CHECK(cap.exit_code == 1);
  CHECK(cap.err.find("too large") != std::string::npos);
}

TEST_CASE("export-graph writes identical bytes to a file and stdout") {
  Result direct = run_cli({"export-graph", "--n", "2"});
  CHECK(direct.exit_code == 0);

  std::string path = "cli_export_test.tmp";
  Result to_file = run_cli({"export-graph", "--n", "2", "--out", path});
  CHECK(to_file.exit_code == 0);
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand reports per-suite lines") {
  Result r = run_cli({"verify", "--suite", "gamma", "--n", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("suite oracle-n2:") != std::string::npos);
  CHECK(r.out.find("verify: PASS") != std::string::npos);
}
