#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "imagctl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = imag::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const char* name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("measure closed form") {
  const Run r = run({"measure", "--A", "0", "--alpha", "0.75", "--family", "S",
                     "--method", "closed-form"});
  CHECK(r.code == 0);
  CHECK(r.out == "S closed-form 3.5\n");
}

TEST_CASE("measure all methods on a real state") {
  setenv("IMAG_RESTARTS", "4", 1);
  const Run r = run({"measure", "--A", "1", "--alpha", "0.6", "--family", "T",
                     "--method", "all"});
  unsetenv("IMAG_RESTARTS");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string fam, method;
  double value = 1.0;
  int lines = 0;
  while (in >> fam >> method >> value) {
    CHECK(std::abs(value) <= 1e-7);
    std::string rest;
    std::getline(in, rest);
    CHECK(rest.find("diff") != std::string::npos);
    ++lines;
  }
  CHECK(lines == 3);
}

TEST_CASE("measure a state file") {
  const Run r = run({"measure", "--state", data("plus_i.json"), "--family", "O",
                     "--alpha", "0.5", "--method", "definitional"});
  CHECK(r.code == 0);
  const double v = std::stod(r.out.substr(r.out.rfind(' ')));
  CHECK(v == doctest::Approx(1.0).epsilon(1e-5));

  const Run cf = run({"measure", "--state", data("plus_i.json"), "--family", "O",
                      "--alpha", "0.5", "--method", "closed-form"});
  CHECK(cf.code == 0);
  CHECK(cf.out == "O closed-form 1\n");
}

TEST_CASE("measure input errors") {
  CHECK(run({"measure", "--A", "0", "--x", "0.1"}).code == 2);
  CHECK(run({"measure", "--family", "T"}).code == 2);
  const Run bad = run({"measure", "--state", data("bad_field.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("re[1][1]") != std::string::npos);
  const Run inv = run({"measure", "--state", data("not_psd.json")});
  CHECK(inv.code == 2);
  CHECK(inv.err.find("positive semidefinite") != std::string::npos);
  CHECK(run({"measure", "--A", "0.5", "--alpha", "1.0"}).code == 2);
  CHECK(run({"measure", "--A", "0.5", "--family", "Q"}).code == 2);
  CHECK(run({"measure", "--A", "0.5", "--method", "nope"}).code == 2);
  setenv("IMAG_RESTARTS", "zero", 1);
  CHECK(run({"measure", "--A", "0.5"}).code == 2);
  unsetenv("IMAG_RESTARTS");
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("decay CSV is complete and reproducible") {
  setenv("IMAG_RESTARTS", "3", 1);
  const std::string a = "cli_decay_a.csv", b = "cli_decay_b.csv";
  const std::vector<std::string> args = {"decay", "--channel", "bf", "--family", "T",
                                         "--grid-a", "11", "--grid-p", "11",
                                         "--no-definitional", "--seed", "3", "--out"};
  auto args_a = args, args_b = args;
  args_a.push_back(a);
  args_b.push_back(b);
  CHECK(run(args_a).code == 0);
  CHECK(run(args_b).code == 0);
  unsetenv("IMAG_RESTARTS");
  const std::string ca = slurp(a);
  CHECK(ca == slurp(b));
  std::istringstream in(ca);
  std::string line;
  int rows = 0;
  std::getline(in, line);
  while (std::getline(in, line)) {
    ++rows;
    // Endpoint rows: delta_formula is zero.
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f[4] == "0" || f[4] == "1") CHECK(std::abs(std::stod(f[5])) <= 1e-9);
  }
  CHECK(rows == 121);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("decay errors") {
  CHECK(run({"decay"}).code == 2);
  CHECK(run({"decay", "--channel", "zz"}).code == 2);
  CHECK(run({"decay", "--channel", "bf", "--format", "xml"}).code == 2);
  const Run io = run({"decay", "--channel", "bf:m=0.5", "--grid-a", "1",
                      "--no-definitional", "--out", "/nonexistent-dir/x.csv"});
  CHECK(io.code == 1);
  CHECK(io.err.find("I/O error") != std::string::npos);
}

TEST_CASE("decay with a fixed parameter as JSON") {
  setenv("IMAG_RESTARTS", "2", 1);
  const Run r = run({"decay", "--channel", "pd:n=0.3", "--grid-a", "2", "--family", "S",
                     "--format", "json", "--no-definitional"});
  unsetenv("IMAG_RESTARTS");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"param\": 0.3") != std::string::npos);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--suite", "fig1"}).code == 0);
  const Run p4 = run({"verify", "--suite", "prop4", "--m", "0.3", "--samples", "500"});
  CHECK(p4.code == 0);
  CHECK(p4.out.find("\"failures\": []") != std::string::npos);
  const Run a = run({"verify", "--suite", "prop3", "--suite", "fig1", "--seed", "7"});
  const Run b = run({"verify", "--suite", "prop3", "--suite", "fig1", "--seed", "7"});
  CHECK(a.out == b.out);
  CHECK(run({"verify", "--suite", "fig9"}).code == 2);
  CHECK(run({"verify", "--suite", "fig1", "--format", "csv"}).code == 2);

  setenv("IMAG_RESTARTS", "2", 1);
  const Run st = run({"verify", "--suite", "axioms", "--self-test", "--samples", "10"});
  unsetenv("IMAG_RESTARTS");
  CHECK(st.code == 1);
  CHECK(st.err.find("axioms: FAIL") != std::string::npos);
}
