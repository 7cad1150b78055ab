// Integration tests for the command-line front end: spawns the real binary
// and checks the exit-code contract (0 pass/vacuous, 1 theorem violation,
// 2 usage or input error) plus output determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string bin_path() {
  if (const char* env = std::getenv("TROP_BIN")) return env;
  return TROP_BIN_DEFAULT;
}

std::string data(const std::string& name) {
  return std::string(TROP_TEST_DATA_DIR) + "/" + name;
}

fs::path work_dir() {
  fs::path dir = fs::temp_directory_path() / "trop_cli_tests";
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = bin_path() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("hypersurface: line file gives three weight-1 rays, exit 0") {
  fs::path out = work_dir() / "line_surface.json";
  CHECK(run("hypersurface " + data("line.json") + " " + out.string()) == 0);
  std::string text = slurp(out);
  CHECK(text.find("\"cell_count\": 3") != std::string::npos);
  CHECK(text.find("\"weight\": \"1\"") != std::string::npos);
}

TEST_CASE("hypersurface: monomial gives an empty cell list, exit 0") {
  fs::path out = work_dir() / "monomial_surface.json";
  CHECK(run("hypersurface " + data("monomial.json") + " " + out.string()) == 0);
  CHECK(slurp(out).find("\"cell_count\": 0") != std::string::npos);
}

TEST_CASE("hypersurface: malformed rational and wrong count exit 2") {
  fs::path out = work_dir() / "never_written.json";
  CHECK(run("hypersurface " + data("bad_rational.json") + " " + out.string()) == 2);
  CHECK(run("hypersurface " + data("line_pair.json") + " " + out.string()) == 2);
  CHECK(run("hypersurface " + data("does_not_exist.json") + " " + out.string()) == 2);
}

TEST_CASE("verify: generic lines pass with one component and one witness") {
  fs::path report = work_dir() / "verify_pair.json";
  CHECK(run("verify " + data("line_pair.json") + " --report " + report.string()) == 0);
  std::string text = slurp(report);
  CHECK(text.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(text.find("\"component_count\": 1") != std::string::npos);
  CHECK(text.find("\"stable_cell_count\": 1") != std::string::npos);

  // deterministic byte output given identical inputs
  fs::path report2 = work_dir() / "verify_pair_2.json";
  CHECK(run("verify " + data("line_pair.json") + " --report " + report2.string()) == 0);
  CHECK(slurp(report) == slurp(report2));
}

TEST_CASE("verify: empty stable intersection reports vacuous, exit 0") {
  fs::path report = work_dir() / "verify_vacuous.json";
  CHECK(run("verify " + data("monomial.json") + " --report " + report.string()) == 0);
  CHECK(slurp(report).find("\"verdict\": \"vacuous\"") != std::string::npos);
}

TEST_CASE("verify: explicit seeds are honored") {
  fs::path report = work_dir() / "verify_seeds.json";
  CHECK(run("verify " + data("line_pair.json") + " --seeds 7,8,9 --report " +
            report.string()) == 0);
  std::string text = slurp(report);
  const bool has_seeds = text.find("7") != std::string::npos &&
                         text.find("\"seeds\"") != std::string::npos;
  CHECK(has_seeds);
  CHECK(text.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("verify: subset experiment dispatch") {
  fs::path report = work_dir() / "subset.json";
  CHECK(run("verify " + data("lines3.json") + " --subset-experiment --report " +
            report.string()) == 0);
  CHECK(slurp(report).find("\"command\": \"subset-experiment\"") != std::string::npos);
  // k = n is rejected
  CHECK(run("verify " + data("line_pair.json") + " --subset-experiment") == 2);
}

TEST_CASE("verify: corpus mode") {
  fs::path report = work_dir() / "corpus.json";
  CHECK(run("verify --corpus 4 --params 2,2,2 --report " + report.string()) == 0);
  std::string text = slurp(report);
  CHECK(text.find("\"command\": \"corpus\"") != std::string::npos);
  CHECK(text.find("\"fail\": 0") != std::string::npos);
  // missing --params
  CHECK(run("verify --corpus 4 --report " + (work_dir() / "x.json").string()) == 2);
}

TEST_CASE("plot: planar instance renders, spatial exits 2") {
  fs::path svg = work_dir() / "line.svg";
  CHECK(run("plot " + data("line.json") + " " + svg.string()) == 0);
  std::string text = slurp(svg);
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("<line") != std::string::npos);

  CHECK(run("plot " + data("spatial.json") + " " + (work_dir() / "s.svg").string()) == 2);

  // deterministic bytes
  fs::path svg2 = work_dir() / "line2.svg";
  CHECK(run("plot " + data("line.json") + " " + svg2.string()) == 0);
  CHECK(slurp(svg) == slurp(svg2));
}

TEST_CASE("mv: prints the mixed volume") {
  fs::path out = work_dir() / "mv.txt";
  const std::string cmd = bin_path() + " mv " + data("line_pair.json") + " > " +
                          out.string() + " 2> /dev/null";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(slurp(out) == "1\n");
  CHECK(run("mv " + data("line.json")) == 2);  // one polynomial in R^2
}

TEST_CASE("yu: satisfied, violated with witness, and k > n") {
  fs::path out = work_dir() / "yu.txt";
  std::string cmd = bin_path() + " yu " + data("line_pair.json") + " > " +
                    out.string() + " 2> /dev/null";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(slurp(out) == "satisfied\n");

  cmd = bin_path() + " yu " + data("collinear_pair.json") + " > " + out.string() +
        " 2> /dev/null";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(slurp(out) == "violated J={1,2}\n");

  CHECK(run("yu " + data("lines3.json")) == 2);
}

TEST_CASE("unknown subcommand and missing arguments exit 2") {
  CHECK(run("frobnicate") == 2);
  CHECK(run("hypersurface") == 2);
  CHECK(run("verify") == 2);
}
