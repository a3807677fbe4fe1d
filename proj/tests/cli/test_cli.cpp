#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json_out.hpp"

using finsler::cli::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "finsler_lab");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = finsler::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> csv_rows(const std::string& text, std::vector<std::string>& header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::istringstream h(line);
  for (std::string cell; std::getline(h, cell, ',');) header.push_back(cell);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::istringstream r(line);
    std::vector<double> row;
    for (std::string cell; std::getline(r, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("zoo list prints one line per entry") {
  const Result r = run({"zoo", "list"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(r.out.find("randers") != std::string::npos);
  CHECK(r.out.find("boundary-degenerate") != std::string::npos);
}

TEST_CASE("report on the riemannian entry has vanishing torsions") {
  const Result r = run({"report", "--zoo", "riemannian", "--points", "3"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const Json& reports = j["runs"][0]["reports"];
  REQUIRE(reports.size() == 3);
  for (const Json& rep : reports) {
    CHECK(rep["norm_B"].get<double>() < 1e-10);
    CHECK(rep["norm_J"].get<double>() < 1e-10);
    CHECK(rep["norm_I"].get<double>() < 1e-10);
    CHECK(rep["fundamental"]["g"].size() == 3);
    CHECK(rep["B"][0][0][0].size() == 3);
    CHECK(rep["C"][2][1].size() == 3);
  }
}

TEST_CASE("report on the theorem family and on Randers") {
  const Result fam = run({"report", "--family", "m=2", "a=1,1,1"});
  CHECK(fam.code == 0);
  for (const Json& rep : Json::parse(fam.out)["runs"][0]["reports"]) {
    CHECK(rep["norm_B"].get<double>() <= 1e-7);
    CHECK(rep["norm_J"].get<double>() <= 1e-7);
  }
  const Result rd = run({"report", "--zoo", "randers"});
  CHECK(rd.code == 0);
  for (const Json& rep : Json::parse(rd.out)["runs"][0]["reports"]) CHECK(rep["norm_J"].get<double>() > 1e-3);
}

TEST_CASE("report exits 2 when a residual check fails") {
  CHECK(run({"report", "--zoo", "randers", "--tol-spray", "1e-30"}).code == 2);
}

TEST_CASE("report output is deterministic") {
  const Result a = run({"report", "--zoo", "square", "--points", "4", "--seed", "11"});
  const Result b = run({"report", "--zoo", "square", "--points", "4", "--seed", "11"});
  const Result c = run({"report", "--zoo", "square", "--points", "4", "--seed", "12"});
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("verify on the families") {
  const Result m1 = run({"verify", "--family", "m=1", "a=1,1", "--n", "3"});
  REQUIRE(m1.code == 0);
  const Json j1 = Json::parse(m1.out);
  const Json& cond = j1["verdicts"][0]["conditions"];
  CHECK(cond["NE22"].get<bool>());
  CHECK(cond["NH222"].get<bool>());
  CHECK(cond["NP"].get<bool>());
  CHECK(cond["NJFI_weak"].get<bool>());
  CHECK(j1["verdicts"][0]["residuals"].empty());
  CHECK(j1["verdicts"][0]["n"] == 3);

  const Result m2 = run({"verify", "--family", "m=2", "a=1,1,1", "--n", "2,3,4,5"});
  REQUIRE(m2.code == 0);
  const Json j2 = Json::parse(m2.out);
  CHECK(j2["verdicts"].size() == 4);
  CHECK(j2["case2"]["per_n"][1]["degree"] == 13);
  CHECK(j2["case2"]["kappa"] == "54");
  CHECK_FALSE(j2["case2"]["kappa_matches"].get<bool>());
  CHECK_FALSE(j2["ode"]["constraint_holds"].get<bool>());
  CHECK(run({"verify", "--family", "m=2", "a=2,1/2,-1"}).out.find("\"constraint_holds\": true") != std::string::npos);
}

TEST_CASE("verify on a polynomial phi prints the v_2 split") {
  const Result r = run({"verify", "--poly", "c0=1", "c1=u^2", "--n", "3"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const Json& v = j["verdicts"][0];
  CHECK_FALSE(v["conditions"]["NJFI_weak"].get<bool>());
  CHECK(v["njfi"]["degree"] == 2);
  CHECK(v["njfi"]["splits"].size() == 3);
  CHECK(j["case1"][0]["proportional_to_form"].get<bool>());
  CHECK(run({"verify", "--poly", "c0=1/u", "c1=1/2/u^2"}).code == 0);
}

TEST_CASE("scan rows") {
  std::vector<std::string> header;
  const Result zero = run({"scan", "--zoo", "riemannian", "--points", "20"});
  REQUIRE(zero.code == 0);
  const auto rows0 = csv_rows(zero.out, header);
  CHECK(header == std::vector<std::string>{"x1", "x2", "x3", "y1", "y2", "y3", "b", "s", "normB", "normJ", "normJplus",
                                           "detg"});
  CHECK(rows0.size() == 20);
  for (const auto& row : rows0) CHECK(std::abs(row[8]) < 1e-10);

  header.clear();
  const auto rows1 = csv_rows(run({"scan", "--family", "m=1", "a=1,1", "--points", "30"}).out, header);
  for (const auto& row : rows1) CHECK(row[10] <= 1e-7);

  const Result json = run({"scan", "--family", "m=1", "a=1,1", "--points", "30", "--ctilde", "0.5", "--format", "json"});
  REQUIRE(json.code == 0);
  const Json j = Json::parse(json.out);
  CHECK(j["rows"].size() == 30);
  // Compare with 0.5 F ||I|| from the full report at the same points.
  const Json rep = Json::parse(run({"report", "--family", "m=1", "a=1,1", "--points", "30", "--ctilde", "0.5"}).out);
  const Json& reports = rep["runs"][0]["reports"];
  for (std::size_t i = 0; i < 30; ++i) {
    const double expect = 0.5 * reports[i]["F"].get<double>() * reports[i]["norm_I"].get<double>();
    CHECK(std::abs(j["rows"][i][10].get<double>() - expect) <= 1e-7);
  }
}

TEST_CASE("scan output does not depend on the worker count") {
  ::setenv("FINSLER_LAB_THREADS", "1", 1);
  const Result one = run({"scan", "--zoo", "square", "--points", "40", "--seed", "5"});
  ::setenv("FINSLER_LAB_THREADS", "4", 1);
  const Result four = run({"scan", "--zoo", "square", "--points", "40", "--seed", "5"});
  ::setenv("FINSLER_LAB_THREADS", "zero", 1);
  const Result bad = run({"scan", "--zoo", "square"});
  ::unsetenv("FINSLER_LAB_THREADS");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(bad.code == 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"report"}).code == 1);
  CHECK(run({"report", "--zoo", "nope"}).code == 1);
  CHECK(run({"report", "--zoo", "randers", "--family", "m=1", "a=1,1"}).code == 1);
  CHECK(run({"report", "--family", "m=2", "a=1,1"}).code == 1);
  // a0 = -2 a2 leaves Delta = -3 a2 s^2 / u^3, which vanishes at s = 0.
  CHECK(run({"report", "--family", "m=2", "a=2,1/2,-1"}).code == 1);
  CHECK(run({"report", "--zoo", "randers", "--tol-third", "0"}).code == 1);
  CHECK(run({"report", "--zoo", "randers", "--format", "csv"}).code == 1);
  CHECK(run({"verify", "--zoo", "randers"}).code == 1);
  CHECK(run({"verify", "--poly", "c0=1", "c2=u"}).code == 1);
  CHECK(run({"verify", "--poly", "c0=1", "c1=s"}).code == 1);
  CHECK(run({"scan", "--zoo", "randers", "--n", "2,3"}).code == 1);
  CHECK(run({"scan", "--zoo", "randers", "--n", "9"}).code == 1);
  CHECK(run({"report", "--help"}).code == 0);
}

TEST_CASE("out writes the file") {
  const std::string path = "cli_test_out.csv";
  const Result r = run({"scan", "--zoo", "randers", "--points", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run({"scan", "--zoo", "randers", "--points", "3"}).out);
  std::remove(path.c_str());
}

TEST_CASE("numbers carry 17 significant digits") {
  CHECK(finsler::cli::format_number(0.1) == "0.10000000000000001");
  CHECK(finsler::cli::dump(Json{{"x", 1.0 / 3.0}}).find("0.33333333333333331") != std::string::npos);
  CHECK(finsler::cli::dump(Json{{"x", NAN}}).find("null") != std::string::npos);
}
