#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "oht/cli.hpp"
#include "oht/specfun.hpp"

using namespace oht;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "oht");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double cell(const cli::Table& t, int n, int N, const std::string& col) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r] != std::pair{n, N}) continue;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (t.columns[c] == col) return t.error[r][c];
    }
  }
  FAIL("cell not found");
  return 0;
}

}  // namespace

TEST_CASE("formatting") {
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(cli::format_number(-2.8798007578955787) == "-2.8798007578955787");
  CHECK(cli::format_error(1.3e-14) == "1.30e-14");
  CHECK(cli::format_error(0.00153) == "1.53e-03");
}

TEST_CASE("eval: origin closed form") {
  const Run r = run({"eval", "--f", "one", "--omega", "10", "--x", "0", "--method", "origin"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["re"].get<double>() == doctest::Approx(-(kEulerGamma + std::log(10.0))).epsilon(1e-14));
  CHECK(j["im"].get<double>() == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(j["regime"] == "origin");
}

TEST_CASE("eval: check against the oracle") {
  const Run r = run({"eval", "--f", "exp:1", "--omega", "10", "--x", "0.1", "--check"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["regime"] == "near");
  CHECK(j["oracle_abs_error"].get<double>() <= 1e-11);
  CHECK(j.contains("oracle_re"));
  CHECK(j.contains("oracle_im"));
}

TEST_CASE("eval: f = 1 away from the origin") {
  const Run r = run({"eval", "--f", "one", "--omega", "50", "--x", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const Complex exact = expi(50.0) * (Complex(0, kPi) + expint_e1(Complex(0, 50.0)));
  CHECK(std::abs(Complex(j["re"].get<double>(), j["im"].get<double>()) - exact) <= 1e-12);
  CHECK(!j.contains("oracle_re"));
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "--f", "one"}).code == 2);
  CHECK(run({"eval", "--f", "nosuch", "--omega", "1", "--x", "1"}).code == 2);
  CHECK(run({"eval", "--f", "one", "--omega", "-1", "--x", "1"}).code == 2);
  CHECK(run({"eval", "--f", "one", "--omega", "10", "--x", "0.1", "--method", "near", "--a", "0.05"}).code == 1);
  CHECK(run({"table", "--id", "7"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"sweep", "--f", "exp:1", "--omega", ""}).code == 2);
  CHECK(run({"sweep", "--f", "exp:1", "--n", "2,99"}).code == 1);
}

TEST_CASE("table cells") {
  const cli::Table t1 = cli::compute_table(1);
  CHECK(t1.rows.size() == 9);
  CHECK(t1.columns.size() == 4);
  CHECK(cell(t1, 16, 16, "delta=2") <= 1e-11);

  const cli::Table t3 = cli::compute_table(3);
  const double c3 = cell(t3, 4, 4, "delta=1");
  CHECK(c3 <= 5 * 1.53e-3);
  CHECK(c3 >= 1.53e-3 / 5);

  const cli::Table t4 = cli::compute_table(4);
  const double c4 = cell(t4, 4, 8, "omega=5");
  CHECK(c4 <= 5 * 5.50e-6);
  CHECK(c4 >= 5.50e-6 / 5);

  CHECK(cli::cell_threshold(1e-15) == 5e-12);
  CHECK(cli::cell_threshold(1e-9) == 5e-9);
  CHECK(cli::cell_threshold(1e-12) == 1e-11);
  CHECK(!cli::cell_passes(1e-5, 1e-3));
  CHECK(cli::cell_passes(1e-3, 1e-3));
}

TEST_CASE("table CSV layout and determinism") {
  const Run a = run({"table", "--id", "1"});
  const Run b = run({"table", "--id", "1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto rows = parse_csv(a.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == std::vector<std::string>{"n", "N", "delta=1", "delta=2", "delta=3", "delta=4"});
  CHECK(rows[1][0] == "4");
  CHECK(rows[1][1] == "4");
  CHECK(rows.back()[0] == "flagged");
  CHECK(rows.back()[1] == "0");
}

TEST_CASE("sweep: error falls with n") {
  const Run r = run({"sweep", "--f", "exp:1", "--x", "1", "--omega", "10,50,100,500"});
  REQUIRE(r.code == 0);
  CHECK(run({"sweep", "--f", "exp:1", "--x", "1", "--omega", "10,50,100,500"}).out == r.out);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1 + 4 * 9);
  CHECK(rows[0][10] == "abs_error");
  std::map<std::string, std::vector<double>> by_omega;
  for (std::size_t i = 1; i < rows.size(); ++i) by_omega[rows[i][1]].push_back(std::stod(rows[i][10]));
  for (const auto& [w, errs] : by_omega) {
    CAPTURE(w);
    REQUIRE(errs.size() == 9);
    for (std::size_t k = 1; k < errs.size(); ++k) CHECK(errs[k] <= 10 * std::max(errs[k - 1], 1e-15));
    CHECK(errs.back() < errs.front());
  }
}

TEST_CASE("sweep: larger split point lowers the error") {
  const Run r = run({"sweep", "--f", "sqrt_over_1p", "--x", "0.02", "--omega", "10", "--a", "1,2,4", "--n",
                     "2,3,4,5,6,7,8,9,10", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 27);
  std::map<std::pair<int, double>, double> err;
  for (const auto& row : j) err[{row["n"].get<int>(), row["a"].get<double>()}] = row["abs_error"].get<double>();
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(err[{n, 2.0}] <= std::max(err[{n, 1.0}], 1e-12));
    CHECK(err[{n, 4.0}] <= std::max(err[{n, 2.0}], 1e-12));
  }
}

TEST_CASE("bessel-check") {
  const Run r = run({"bessel-check"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1 + 18);
  CHECK(rows[0].back() == "pass");
  CHECK(rows[0][5] == "residual");
  CHECK(rows[0][7] == "exact_residual");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].back() == "yes");
    // nu = 1 rows: the stated identity is off by exactly 1/(wx).
    if (rows[i][0] == "1") CHECK(std::stod(rows[i][5]) == doctest::Approx(1.0 / (std::stod(rows[i][1]) * std::stod(rows[i][2]))).epsilon(1e-6));
  }
}
