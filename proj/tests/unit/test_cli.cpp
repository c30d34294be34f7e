#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
  std::string out;
  int exit_code;
};

// Runs the CLI with the given arguments; stderr is folded into stdout when asked.
Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(ZS_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string data(const char* name) { return std::string(ZS_TEST_DATA) + "/" + name; }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("zero shear function gives an all-zero field") {
  Run r = run("field eval --shears " + data("zero_shears.json") + " --grid -3:3:13");
  REQUIRE(r.exit_code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 14);
  CHECK(rows[0][0] == "x");
  CHECK(rows[0][1] == "value");
  for (size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) == 0.0);
}

TEST_CASE("closed and oracle Hilbert modes agree through the CLI") {
  const std::string base = "hilbert eval --format json --shears " + data("sample_shears.json") + " --x -2.5,0.3,1.7,4";
  Run closed = run(base + " --mode closed"), oracle = run(base + " --mode oracle");
  REQUIRE(closed.exit_code == 0);
  REQUIRE(oracle.exit_code == 0);
  auto c = nlohmann::json::parse(closed.out)["data"], o = nlohmann::json::parse(oracle.out)["data"];
  REQUIRE(c.size() == 4);
  REQUIRE(o.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(c[i]["x"].get<double>() == o[i]["x"].get<double>());
    CHECK(o[i]["value"].get<double>() == doctest::Approx(c[i]["value"].get<double>()).epsilon(1e-6));
  }
}

TEST_CASE("wp gram is symmetric with positive eigenvalues") {
  Run r = run("wp gram --depth 6");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out)["data"];
  double g01 = j["gram"][0][1], g10 = j["gram"][1][0];
  CHECK(g01 == doctest::Approx(g10).epsilon(1e-6));
  CHECK(j["eigenvalues"][0].get<double>() > 0.0);
  CHECK(j["eigenvalues"][1].get<double>() >= j["eigenvalues"][0].get<double>());
}

TEST_CASE("input errors are reported as JSON with a nonzero exit") {
  Run r = run("hilbert eval --shears " + data("not_farey.json") + " --x 1", true);
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out)["error"];
  CHECK(j["status"] == "not_farey");
  CHECK(j["field"] == "/edges/1");
  CHECK(j["line"] == 3);

  Run missing = run("hilbert eval --shears /nonexistent/file.json --x 1", true);
  CHECK(missing.exit_code == 1);
  CHECK(nlohmann::json::parse(missing.out).contains("error"));

  CHECK(run("hilbert eval --x 1").exit_code == 2);
  CHECK(run("wp gram --depth notanumber").exit_code == 2);
}

TEST_CASE("output file option writes the same bytes as stdout") {
  const std::string path = std::string(ZS_TEST_TMP) + "/cli_fourier.json";
  const std::string args = "fourier --shears " + data("sample_shears.json") + " --n -3..3";
  Run direct = run(args);
  REQUIRE(direct.exit_code == 0);
  REQUIRE(run(args + " -o " + path).exit_code == 0);
  FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string written;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) written.append(buf, n);
  std::fclose(f);
  CHECK(written == direct.out);
  CHECK(nlohmann::json::parse(written)["data"].size() == 7);
}

TEST_CASE("farey vertices") {
  Run r = run("farey vertices --max-order 3");
  REQUIRE(r.exit_code == 0);
  auto rows = csv_rows(r.out);
  CHECK(rows.size() == 9);
}
