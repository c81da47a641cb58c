#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/** Runs the tool with the given argument string; captures both streams. */
RunResult run(const std::string& args) {
  const char* bin = std::getenv("VSTAB_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "VSTAB_BIN must point at the built binary");
  const std::string err_path =
      "/tmp/vstab_cli_stderr_" + std::to_string(::getpid()) + ".txt";
  const std::string cmd = std::string(bin) + " " + args + " 2>" + err_path;

  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream ef(err_path);
  std::stringstream ss;
  ss << ef.rdbuf();
  r.err = ss.str();
  std::remove(err_path.c_str());
  return r;
}

std::string write_lines(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name + "_" + std::to_string(::getpid()) + ".jsonl";
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("classify: verdict lines and exit codes") {
  {
    const auto r = run("classify G2 c1:1,0");
    CHECK(r.out ==
          "{\"type\":\"G2\",\"very_stable\":false,\"witnesses\":[{\"alpha_coroot_coords\":"
          "[1,-1],\"point\":\"c1\",\"root_coords\":[3,1]}]}\n");
    CHECK(r.exit_code == 3);
  }
  {
    const auto r = run("classify A3 \"c1:1,0,0;c2:0,0,1\"");
    CHECK(r.out == "{\"type\":\"A3\",\"very_stable\":true,\"witnesses\":[]}\n");
    CHECK(r.exit_code == 0);
  }
  {
    const auto r = run("classify B2 \"\"");
    CHECK(r.out == "{\"type\":\"B2\",\"very_stable\":true,\"witnesses\":[]}\n");
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("mult: factored multiplicities with comparison flags") {
  {
    const auto r = run("mult B3 1,0,0");
    CHECK(r.out ==
          "{\"coweight\":[1,0,0],\"factored\":\"(1-t^6) (1-t)^-1\","
          "\"genus_independent\":true,\"genus_list\":[2],\"matches_dynkin\":true,"
          "\"matches_table1\":true,\"polynomial_coeffs\":[1,1,1,1,1,1],\"type\":\"B3\"}\n");
    CHECK(r.exit_code == 0);
  }
  {
    const auto r = run("mult G2 1,0");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["polynomial_coeffs"] == "not_polynomial");
    CHECK(j["matches_dynkin"] == false);
    CHECK(j["matches_table1"].is_null());
    CHECK(j["factored"] == "(1-t^6)^3 (1-t)^-1 (1-t^3)^-1 (1-t^4)^-1");
    CHECK(r.exit_code == 0);
  }
  {
    const auto r = run("mult A1 0");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["factored"] == "1");
    CHECK(j["polynomial_coeffs"] == nlohmann::json::array({1}));
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("witness, feasible, dynkin, minuscule, table1") {
  {
    const auto r = run("witness C4 1,0,0,0");
    CHECK(r.out ==
          "{\"alpha_coroot_coords\":[1,0,0,0],\"coweight\":[1,0,0,0],\"root_coords\":"
          "[2,2,2,1],\"shifted_coweight\":[0,0,0,0],\"type\":\"C4\"}\n");
    CHECK(r.exit_code == 0);
  }
  {
    const auto r = run("witness B2 2,0");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["alpha_coroot_coords"] == nlohmann::json::array({2, -1}));
    CHECK(j["shifted_coweight"] == nlohmann::json::array({0, 1}));
  }
  {
    const auto r = run("feasible F4 0,0,0,0");
    CHECK(r.out == "{\"coweight\":[0,0,0,0],\"feasible\":true,\"terms\":[],\"type\":\"F4\"}\n");
    CHECK(r.exit_code == 0);
  }
  {
    const auto r = run("feasible D4 1,0,1,1");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["feasible"] == true);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["index"] == 1);
    CHECK(j["terms"][0]["multiplicity"] == 1);
  }
  {
    const auto r = run("dynkin A2 1,1");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["dimension"] == "8");
    CHECK(j["polynomial_coeffs"] == nlohmann::json::array({1, 2, 2, 2, 1}));
  }
  {
    const auto r = run("minuscule G2");
    CHECK(r.out == "{\"minuscule_fundamentals\":[],\"type\":\"G2\"}\n");
  }
  {
    const auto r = run("minuscule A3 0,1,0");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["minuscule"] == true);
    CHECK(j["minuscule_fundamentals"] == nlohmann::json::array({1, 2, 3}));
  }
  {
    const auto r = run("table1 E7");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_match"] == true);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["index"] == 7);
    CHECK(j["rows"][0]["genus_list"] == nlohmann::json::array({2, 3}));
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("output is deterministic across runs") {
  const auto a = run("table1 D5");
  const auto b = run("table1 D5");
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  const auto c = run("classify D4 \"p:0,1,0,0;q:1,0,0,0\"");
  const auto d = run("classify D4 \"p:0,1,0,0;q:1,0,0,0\"");
  CHECK(c.out == d.out);
}

TEST_CASE("global flags: basis, genus, pretty") {
  {
    // Coroot-basis input (1,1) maps through the Cartan matrix to (1,1).
    const auto r = run("--basis coroot dynkin A2 1,1");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coweight"] == nlohmann::json::array({1, 1}));
    CHECK(j["polynomial_coeffs"] == nlohmann::json::array({1, 2, 2, 2, 1}));
  }
  {
    // Coroot-basis input may leave the dominant cone; that is an input error.
    const auto r = run("--basis coroot classify B2 c1:0,1");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.err).contains("error"));
  }
  {
    const auto r = run("--genus 2 --genus 5 mult D4 1,0,0,0");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["genus_list"] == nlohmann::json::array({2, 5}));
    CHECK(j["genus_independent"] == true);
  }
  {
    // Flags are accepted before or after the subcommand.
    const auto r1 = run("--pretty mult A1 1");
    const auto r2 = run("mult A1 1 --pretty");
    CHECK(r1.out == r2.out);
    const auto j = nlohmann::json::parse(r1.out);
    CHECK(j["polynomial_coeffs"] == nlohmann::json::array({1, 1}));
    CHECK(r1.out.find('\n') != std::string::npos);  // actually indented
    CHECK(r1.out.substr(0, 2) == "{\n");
  }
}

TEST_CASE("error reporting goes to stderr as JSON with exit 1") {
  {
    const auto r = run("mult A2 1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    const auto j = nlohmann::json::parse(r.err);
    CHECK(j["error"] == "coweight '1' has 1 coordinates, expected 2");
  }
  {
    const auto r = run("witness A1 1");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.err)["error"] ==
          "minuscule coweights admit no wobbly witness");
  }
  {
    const auto r = run("classify A2 c1:1");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.err)["error"] ==
          "divisor entry 'c1:1' has 1 coordinates, expected 2");
  }
  {
    const auto r = run("classify Q9 \"\"");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.err).contains("error"));
  }
  {
    const auto r = run("table1 G2");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.err).contains("error"));
  }
}

TEST_CASE("batch: scenarios run in order; failures are per-line") {
  {
    const std::string path = write_lines(
        "vstab_batch_ok",
        "{\"command\":\"mult\",\"type\":\"B3\",\"coweight\":\"1,0,0\"}\n"
        "\n"
        "{\"command\":\"classify\",\"type\":\"G2\",\"divisor\":\"c1:1,0\"}\n"
        "{\"command\":\"mult\",\"type\":\"D4\",\"coweight\":\"1,0,0,0\",\"genus\":[2,5]}\n"
        "{\"command\":\"dynkin\",\"type\":\"A2\",\"coweight\":\"1,1\",\"basis\":\"coroot\"}\n");
    const auto r = run("batch " + path);
    CHECK(r.exit_code == 0);
    std::stringstream ss(r.out);
    std::string line;
    std::vector<nlohmann::json> rows;
    while (std::getline(ss, line)) rows.push_back(nlohmann::json::parse(line));
    REQUIRE(rows.size() == 4);  // blank line skipped
    CHECK(rows[0]["type"] == "B3");
    CHECK(rows[0]["polynomial_coeffs"] == nlohmann::json::array({1, 1, 1, 1, 1, 1}));
    CHECK(rows[1]["very_stable"] == false);
    CHECK(rows[2]["genus_list"] == nlohmann::json::array({2, 5}));
    CHECK(rows[3]["coweight"] == nlohmann::json::array({1, 1}));
    std::remove(path.c_str());
  }
  {
    const std::string path = write_lines(
        "vstab_batch_err",
        "{\"command\":\"mult\",\"type\":\"A1\",\"coweight\":\"1\"}\n"
        "{\"command\":\"nope\",\"type\":\"A1\"}\n"
        "{\"command\":\"mult\",\"type\":\"A1\",\"coweight\":\"0\"}\n"
        "not json at all\n");
    const auto r = run("batch " + path);
    CHECK(r.exit_code == 1);
    std::stringstream ss(r.out);
    std::string line;
    std::vector<nlohmann::json> rows;
    while (std::getline(ss, line)) rows.push_back(nlohmann::json::parse(line));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0]["polynomial_coeffs"] == nlohmann::json::array({1, 1}));
    CHECK(rows[1]["error"] == "unknown command 'nope'");
    CHECK(rows[1]["line"] == 2);
    CHECK(rows[2]["polynomial_coeffs"] == nlohmann::json::array({1}));
    CHECK(rows[3].contains("error"));
    CHECK(rows[3]["line"] == 4);
    CHECK(r.err.find("2 of 4 scenario lines failed") != std::string::npos);
    std::remove(path.c_str());
  }
  {
    const auto r = run("batch /nonexistent/path.jsonl");
    CHECK(r.exit_code == 1);
  }
}
