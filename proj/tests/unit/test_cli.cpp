// End-to-end checks of the command line tool, run as a subprocess. The
// binary path comes in through TMCAP_CLI_PATH.

#ifdef TMCAP_CLI_PATH

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tmcap/spec_io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stdout+stderr captured.
RunResult run_cli(const std::string& arguments) {
  const fs::path out_file = fs::temp_directory_path() / "tmcap_cli_test_output.txt";
  const std::string command = std::string(TMCAP_CLI_PATH) + " " + arguments + " > " +
                              out_file.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

fs::path write_spec(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kCoinSpec = R"({
  "frame": ["H", "T"],
  "mass": [ {"subset": ["H"], "weight": 0.4}, {"subset": ["H", "T"], "weight": 0.6} ],
  "rv": {"H": 1.0, "T": 0.0}
})";

}  // namespace

TEST_CASE("cli choquet prints the lower and upper integrals") {
  const fs::path spec = write_spec("tmcap_cli_coin.json", kCoinSpec);
  const RunResult result = run_cli("choquet --spec " + spec.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("lower 0.4") != std::string::npos);
  CHECK(result.output.find("upper 1") != std::string::npos);
}

TEST_CASE("cli validate fails on the witness table and prints the (c.5) counterexample") {
  const fs::path spec = write_spec("tmcap_cli_witness.json", R"({
    "frame": ["H", "T"],
    "capacity": [ {"subset": ["H"], "value": 0.6},
                  {"subset": ["T"], "value": 0.6},
                  {"subset": ["H","T"], "value": 1.0} ]
  })");
  const RunResult result =
      run_cli("validate --spec " + spec.string() + " --capacity-table --nmax 2");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("FAIL") != std::string::npos);
  CHECK(result.output.find("{H}, {T}") != std::string::npos);
  CHECK(result.output.find("1.2") != std::string::npos);
}

TEST_CASE("cli validate passes on mass-generated capacities") {
  const fs::path spec = write_spec("tmcap_cli_coin.json", kCoinSpec);
  const RunResult result = run_cli("validate --spec " + spec.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("pass") != std::string::npos);
}

TEST_CASE("cli simulate twice with the same seed is byte-identical") {
  const fs::path spec = write_spec("tmcap_cli_coin.json", kCoinSpec);
  const fs::path dir_a = fs::temp_directory_path() / "tmcap_cli_sim_a";
  const fs::path dir_b = fs::temp_directory_path() / "tmcap_cli_sim_b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);

  const std::string flags = "simulate --spec " + spec.string() +
                            " --n 2000 --replications 3 --seed 11 --out ";
  const RunResult first = run_cli(flags + dir_a.string());
  const RunResult second = run_cli(flags + dir_b.string());
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);

  for (const char* name : {"summary.json", "trace_r000.csv", "trace_r001.csv", "trace_r002.csv"}) {
    const std::string a = tmcap::io::read_text_file(dir_a / name);
    const std::string b = tmcap::io::read_text_file(dir_b / name);
    CHECK(a == b);
    CHECK(!a.empty());
  }
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}

TEST_CASE("cli verify-independence flags the diagonal joint") {
  const fs::path diagonal = write_spec("tmcap_cli_diagonal.json", R"({
    "left": { "frame": ["H","T"], "rv": {"H": 1, "T": 0} },
    "joint": [ {"subset": ["H|H"], "weight": 0.5}, {"subset": ["T|T"], "weight": 0.5} ]
  })");
  const RunResult failing = run_cli("verify-independence --spec " + diagonal.string());
  CHECK(failing.exit_code == 1);
  CHECK(failing.output.find("FAIL") != std::string::npos);

  const fs::path product = write_spec("tmcap_cli_product.json", R"({
    "left": { "frame": ["H","T"],
              "mass": [{"subset": ["H"], "weight": 0.4}, {"subset": ["H","T"], "weight": 0.6}],
              "rv": {"H": 1, "T": 0} }
  })");
  const RunResult passing = run_cli("verify-independence --spec " + product.string());
  CHECK(passing.exit_code == 0);
}

TEST_CASE("cli rejects bad flags and broken documents distinctly") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("choquet").exit_code == 2);  // missing required --spec

  const fs::path broken = write_spec("tmcap_cli_broken.json", "{ not json");
  const RunResult parse_error = run_cli("choquet --spec " + broken.string());
  CHECK(parse_error.exit_code == 3);
  CHECK(parse_error.output.find("E_PARSE") != std::string::npos);

  // Structurally valid but rv missing for choquet.
  const fs::path no_rv = write_spec("tmcap_cli_no_rv.json", R"({
    "frame": ["H", "T"],
    "mass": [ {"subset": ["H"], "weight": 0.4}, {"subset": ["H", "T"], "weight": 0.6} ]
  })");
  CHECK(run_cli("choquet --spec " + no_rv.string()).exit_code == 3);

  const fs::path unnormalized = write_spec("tmcap_cli_unnormalized.json", R"({
    "frame": ["H", "T"],
    "mass": [ {"subset": ["H"], "weight": 0.4}, {"subset": ["H", "T"], "weight": 0.5} ]
  })");
  const RunResult norm_error = run_cli("validate --spec " + unnormalized.string());
  CHECK(norm_error.exit_code == 3);
  CHECK(norm_error.output.find("E_NORMALIZATION") != std::string::npos);
}

TEST_CASE("cli represent prints cells and the round-trip verdict") {
  const fs::path spec = write_spec("tmcap_cli_coin.json", kCoinSpec);
  const RunResult result = run_cli("represent --spec " + spec.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("0.4 {H}") != std::string::npos);
  CHECK(result.output.find("0.6 {H,T}") != std::string::npos);
  CHECK(result.output.find("yes") != std::string::npos);
}

#endif  // TMCAP_CLI_PATH
