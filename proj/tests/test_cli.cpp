// End-to-end checks of the command-line binary: output schemas, exit
// codes, determinism, and statistical sanity of the draws.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ar1band/banded.hpp"
#include "ar1band/density.hpp"
#include "ar1band/precision.hpp"
#include "ar1band/serialize.hpp"
#include "ar1band/types.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the binary through the shell, capturing stdout. Callers append
// "2>&1" or "2>file" when stderr matters.
RunResult run(const std::string& args) {
  const std::string cmd = std::string(AR1BAND_CLI_PATH) + " " + args;
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "ar1band_cli_XXXXXX")
            .string();
    REQUIRE(mkdtemp(tmpl.data()) != nullptr);
    return std::filesystem::path(tmpl);
  }();
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  const std::filesystem::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

std::vector<double> csv_row_values(const std::string& line) {
  const std::vector<std::string> cells = split_csv(line);
  std::vector<double> v;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    v.push_back(std::stod(cells[i]));
  }
  return v;
}

}  // namespace

TEST_CASE("precision emits the documented json") {
  const RunResult r = run("precision --rho 0.5 --times 1,2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"dim\":3,\"diag\":[1.0,1.25,1.0],\"offdiag\":[-0.5,-0.5]}\n");
}

TEST_CASE("precision json round trips through the library") {
  const RunResult r = run("precision --rho -0.83 --sigma 1.7 --times 0,2,3,9");
  REQUIRE(r.exit_code == 0);
  std::string body = r.out;
  const ar1band::TridiagSym q = ar1band::tridiag_from_json(body);
  CHECK(ar1band::to_json(q) + "\n" == r.out);
}

TEST_CASE("precision csv lists the upper-triangle entries") {
  const RunResult r = run("precision --rho 0.5 --times 1,3 --format csv");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "i,j,value");
  CHECK(lines[1] == "1,1,0.8");
  CHECK(lines[2] == "1,2,-0.2");
  CHECK(lines[3] == "2,2,0.8");
}

TEST_CASE("range sugar and file input match the explicit list") {
  const RunResult plain = run("precision --rho 0.4 --times 1,2,3,4");
  const RunResult range = run("precision --rho 0.4 --times 1:4");
  CHECK(range.out == plain.out);
  const std::string path = write_scratch("times.txt", "1 2\n3,4\n");
  const RunResult file = run("precision --rho 0.4 --times @" + path);
  CHECK(file.out == plain.out);
}

TEST_CASE("out flag writes the same bytes to a file") {
  const std::string path = (scratch_dir() / "precision.json").string();
  const RunResult direct = run("precision --rho 0.25 --times 0:5");
  const RunResult redirected =
      run("precision --rho 0.25 --times 0:5 --out " + path);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.out);
}

TEST_CASE("validation failures exit with code 2") {
  RunResult r = run("precision --rho 1.5 --times 1,2 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("rho must satisfy |rho| < 1") != std::string::npos);
  r = run("precision --rho 0.5 --times 3,2 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("strictly increasing") != std::string::npos);
  r = run("precision --rho 0.5 2>&1");  // missing --times
  CHECK(r.exit_code == 2);
  r = run("frobnicate 2>&1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("io failures exit with code 3") {
  const RunResult r =
      run("precision --rho 0.5 --times @/nonexistent/times.txt 2>&1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("cannot read file") != std::string::npos);
}

TEST_CASE("simulate is byte-identical under a fixed seed") {
  const std::string args =
      "simulate --rho 0.8 --sigma 2 --times 0:19 --seed 97 --draws 5";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const std::vector<std::string> lines = split_lines(a.out);
  REQUIRE(lines.size() == 21);
  CHECK(lines[0] == "time,draw_1,draw_2,draw_3,draw_4,draw_5");
  const RunResult c =
      run("simulate --rho 0.8 --sigma 2 --times 0:19 --seed 98 --draws 5");
  CHECK(c.out != a.out);
}

TEST_CASE("simulate without a seed reports one on stderr") {
  const std::string errfile = (scratch_dir() / "seed.txt").string();
  const RunResult r =
      run("simulate --rho 0.5 --times 1,2 2>" + errfile);
  CHECK(r.exit_code == 0);
  std::ifstream in(errfile);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("seed:") != std::string::npos);
}

TEST_CASE("simulated moments track the stationary law") {
  // times (1,3) with rho = 0.5: variance 4/3, covariance 1/3.
  const RunResult r = run(
      "simulate --rho 0.5 --times 1,3 --mean 5 --seed 4242 --draws 100000");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.out);
  REQUIRE(lines.size() == 3);
  const std::vector<double> row1 = csv_row_values(lines[1]);
  const std::vector<double> row2 = csv_row_values(lines[2]);
  const double n = static_cast<double>(row1.size());
  REQUIRE(n == 100000.0);
  double m1 = 0.0, m2 = 0.0;
  for (double v : row1) m1 += v;
  for (double v : row2) m2 += v;
  m1 /= n;
  m2 /= n;
  double v1 = 0.0, v2 = 0.0, c12 = 0.0;
  for (std::size_t j = 0; j < row1.size(); ++j) {
    v1 += (row1[j] - m1) * (row1[j] - m1);
    v2 += (row2[j] - m2) * (row2[j] - m2);
    c12 += (row1[j] - m1) * (row2[j] - m2);
  }
  v1 /= n - 1;
  v2 /= n - 1;
  c12 /= n - 1;
  const double var = 4.0 / 3.0;
  const double se_mean = std::sqrt(var / n);
  CHECK(std::abs(m1 - 5.0) < 4.0 * se_mean);
  CHECK(std::abs(m2 - 5.0) < 4.0 * se_mean);
  const double se_var = var * std::sqrt(2.0 / (n - 1));
  CHECK(std::abs(v1 - var) < 5.0 * se_var);
  CHECK(std::abs(v2 - var) < 5.0 * se_var);
  const double se_cov = std::sqrt((var * var + 1.0 / 9.0) / n);
  CHECK(std::abs(c12 - 1.0 / 3.0) < 4.0 * se_cov);
}

TEST_CASE("per-time mean file shifts each row") {
  const std::string mean_path =
      write_scratch("mean.csv", "time,mean\n1,-10\n2,10\n");
  const RunResult r = run("simulate --rho 0.5 --times 1,2 --mean @" +
                          mean_path + " --seed 11 --draws 2000");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.out);
  const std::vector<double> row1 = csv_row_values(lines[1]);
  const std::vector<double> row2 = csv_row_values(lines[2]);
  double m1 = 0.0, m2 = 0.0;
  for (double v : row1) m1 += v;
  for (double v : row2) m2 += v;
  m1 /= static_cast<double>(row1.size());
  m2 /= static_cast<double>(row2.size());
  CHECK(std::abs(m1 + 10.0) < 0.15);
  CHECK(std::abs(m2 - 10.0) < 0.15);

  const std::string incomplete =
      write_scratch("mean_missing.csv", "time,mean\n1,0\n");
  const RunResult bad = run("simulate --rho 0.5 --times 1,2 --mean @" +
                            incomplete + " --seed 11 2>&1");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("no entry for time") != std::string::npos);
}

TEST_CASE("logpdf prints the library value") {
  const RunResult r =
      run("logpdf --rho 0.5 --times 1,3 --x 1,-0.5 --mean 0.25");
  REQUIRE(r.exit_code == 0);
  const double got = std::stod(r.out);
  const double want = ar1band::log_density(
      ar1band::Ar1Params(0.5, 1.0), ar1band::TimeGrid({1, 3}),
      ar1band::MeanSpec(0.25), std::vector<double>{1.0, -0.5});
  CHECK(std::abs(got - want) < 1e-12 * std::max(1.0, std::abs(want)));
}

TEST_CASE("logpdf of a single point at zero") {
  // Stationary variance 1/(1 - 0.36) = 1.5625; density of Normal(0, v)
  // at zero is -log(2 pi v)/2, computed here without the library.
  const RunResult r = run("logpdf --rho 0.6 --times 0 --x 0");
  REQUIRE(r.exit_code == 0);
  const double want = -0.5 * std::log(2.0 * std::numbers::pi * 1.5625);
  CHECK(std::abs(std::stod(r.out) - want) < 1e-12);
}

TEST_CASE("logpdf at the mean is the normalizer") {
  // At x = mu only -(m/2) log(2 pi) plus the half log determinant of the
  // precision remains; the determinant comes from an in-process band
  // factorization, a separate path from the binary under test.
  const ar1band::TimeGrid grid({0, 2, 5, 6});
  const ar1band::BandLowerBi l = ar1band::band_cholesky(
      ar1band::build_precision(ar1band::Ar1Params(0.7, 1.3), grid));
  double half_log_det = 0.0;
  for (double d : l.diag()) half_log_det += std::log(d);
  const double want =
      -2.0 * std::log(2.0 * std::numbers::pi) + half_log_det;
  const RunResult r = run(
      "logpdf --rho 0.7 --sigma 1.3 --times 0,2,5,6 --x 4,4,4,4 --mean 4");
  REQUIRE(r.exit_code == 0);
  CHECK(std::abs(std::stod(r.out) - want) < 1e-12);
}

TEST_CASE("logpdf rejects mismatched value counts") {
  const RunResult r = run("logpdf --rho 0.5 --times 1,2,3 --x 1,2 2>&1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("condsim draws columns for each prediction time") {
  const std::string obs = write_scratch("obs.csv", "time,value\n1,1\n3,1\n");
  const RunResult r = run("condsim --rho 0.5 --obs-file " + obs +
                          " --pred-times 2 --seed 5 --draws 3");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "time,draw_1,draw_2,draw_3");
  CHECK(split_csv(lines[1])[0] == "2");
  const RunResult again = run("condsim --rho 0.5 --obs-file " + obs +
                              " --pred-times 2 --seed 5 --draws 3");
  CHECK(again.out == r.out);
}

TEST_CASE("condsim summary concentrates on the conditional mean") {
  const std::string obs = write_scratch("obs2.csv", "time,value\n3,1\n1,1\n");
  const RunResult r =
      run("condsim --rho 0.5 --obs-file " + obs +
          " --pred-times 2 --seed 1234 --draws 200000 --summary");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "time,mean,p2.5,p97.5");
  const std::vector<std::string> cells = split_csv(lines[1]);
  REQUIRE(cells.size() == 4);
  const double mean = std::stod(cells[1]);
  const double lo = std::stod(cells[2]);
  const double hi = std::stod(cells[3]);
  // Conditional law is Normal(0.8, 0.8).
  CHECK(std::abs(mean - 0.8) < 4.0 * std::sqrt(0.8 / 200000.0));
  CHECK(lo < mean);
  CHECK(hi > mean);
  const double sd = std::sqrt(0.8);
  CHECK(std::abs(lo - (0.8 - 1.959963985 * sd)) < 0.03);
  CHECK(std::abs(hi - (0.8 + 1.959963985 * sd)) < 0.03);
}

TEST_CASE("condsim on observations at the mean stays at the mean") {
  const std::string obs = write_scratch("obs4.csv", "time,value\n1,2\n3,2\n");
  const RunResult r =
      run("condsim --rho 0.5 --obs-file " + obs +
          " --pred-times 2 --mean 2 --seed 88 --draws 50000 --summary");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  const double mean = std::stod(split_csv(lines[1])[1]);
  CHECK(std::abs(mean - 2.0) < 4.0 * std::sqrt(0.8 / 50000.0));
}

TEST_CASE("condsim rejects predictions colliding with observations") {
  const std::string obs = write_scratch("obs3.csv", "time,value\n1,1\n3,1\n");
  const RunResult r = run("condsim --rho 0.5 --obs-file " + obs +
                          " --pred-times 1,2 --seed 5 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("duplicate time 1") != std::string::npos);
}

TEST_CASE("condsim propagates observation file problems") {
  RunResult r = run("condsim --rho 0.5 --obs-file /nonexistent.csv "
                    "--pred-times 2 2>&1");
  CHECK(r.exit_code == 3);
  const std::string bad_header =
      write_scratch("bad_obs.csv", "t,v\n1,1\n");
  r = run("condsim --rho 0.5 --obs-file " + bad_header + " --pred-times 2 2>&1");
  CHECK(r.exit_code == 2);
  const std::string dup =
      write_scratch("dup_obs.csv", "time,value\n1,1\n1,2\n");
  r = run("condsim --rho 0.5 --obs-file " + dup + " --pred-times 5 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("duplicate time 1") != std::string::npos);
}

TEST_CASE("bench completes on a single point and reports positive times") {
  const RunResult r = run("bench --sizes 1 --format csv");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "m,build_s,chol_s,logpdf_s,sample_s,sparse_total_s,dense_logpdf_s,"
        "loglog_slope");
  const std::vector<std::string> cells = split_csv(lines[1]);
  REQUIRE(cells.size() >= 7);
  CHECK(cells[0] == "1");
  for (std::size_t i = 1; i <= 6; ++i) {
    CHECK(std::stod(cells[i]) > 0.0);
  }
}
