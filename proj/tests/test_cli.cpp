#include <doctest.h>

#include <cstdio>
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
  args.insert(args.begin(), "sympstairs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sympstairs::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    auto r = run({"eval", "--b", "2", "--a", "8", "--method", "closed"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("17/12 ", 0) == 0);
    r = run({"eval", "--b", "2", "--a", "4"});
    CHECK(r.out.rfind("1 1 nonsqueezing", 0) == 0);
    r = run({"eval", "--b", "2", "--a", "10"});
    CHECK(r.out.rfind("sqrt(5/2)", 0) != 0);  // normalized radicand
    CHECK(r.out.rfind("1/2*sqrt(10) ", 0) == 0);
    r = run({"eval", "--b", "2", "--a", "8", "--method", "ech", "--n", "2000"});
    CHECK(r.code == 0);
    r = run({"eval", "--b", "2", "--a", "8", "--method", "bisect", "--tol", "1/1000"});
    CHECK(r.code == 0);
    CHECK(r.out.front() == '[');
    r = run({"eval", "--b", "2", "--a", "7", "--lambda", "7/5"});
    CHECK(r.out == "Embeds\n");
    r = run({"eval", "--b", "2", "--a", "8", "--lambda", "sqrt(2)"});
    CHECK(r.out == "DoesNotEmbed\n");
    r = run({"eval", "--b", "5/2", "--a", "7", "--method", "db"});
    CHECK(r.code == 0);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({"eval", "--b", "2"}).code == 2);
    CHECK(run({"eval", "--b", "2", "--a", "1/2"}).code == 2);
    CHECK(run({"eval", "--b", "x", "--a", "3"}).code == 2);
    CHECK(run({"eval", "--b", "5/2", "--a", "3"}).code == 2);
    CHECK(run({"eval", "--b", "2", "--a", "3", "--method", "magic"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "nosuch"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("io errors exit with 1") {
    CHECK(run({"table", "--b", "2", "--out", "/nonexistent/dir/x.csv"}).code == 1);
  }

  TEST_CASE("table is deterministic") {
    const auto a = run({"table", "--b", "2", "--a-min", "1", "--a-max", "10", "--samples", "19"});
    const auto b = run({"table", "--b", "2", "--a-min", "1", "--a-max", "10", "--samples", "19"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("a_num,a_den,branch,value_exact,value_float,volume_float,folding_float\n", 0) == 0);
    CHECK(a.out.find("8,1,affine-step,17/12,1.41666666666667,1.4142135623731,") != std::string::npos);
  }

  TEST_CASE("plot writes an svg") {
    const std::string path = "cli_test_plot.svg";
    const auto r = run({"plot", "--b", "2", "--a-min", "1", "--a-max", "10", "--overlay", "closed", "--overlay",
                        "volume", "--overlay", "folding", "--out", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string svg = ss.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("class=\"closed\"") != std::string::npos);
    CHECK(svg.find("class=\"folding\"") != std::string::npos);
    CHECK(svg.find("class=\"breakpoint\"") != std::string::npos);
    std::remove(path.c_str());
    const auto dflt = run({"plot", "--b", "2", "--out", "-"});
    CHECK(dflt.out.find("class=\"volume\"") != std::string::npos);
    CHECK(dflt.out.find("class=\"closed\"") == std::string::npos);
  }

  TEST_CASE("verify, classes, reduce, scan") {
    auto r = run({"verify", "edges", "--b", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c(2b+2k+1).b=3,k=2 11/8 11/8 PASS") != std::string::npos);
    r = run({"classes", "--d", "6", "--e", "3", "--certified"});
    CHECK(r.out.find("6,3:3 2 2 2 2 2 2 2\n") != std::string::npos);
    r = run({"classes", "--max-n", "2"});
    CHECK(r.out == "1,0:1\n1,1:1 1 1\n2,1:1 1 1 1 1\n2,2:2 1 1 1 1 1\n6,3:3 2 2 2 2 2 2 2\n3,3:2 2 2 2 1 1 1\n10,5:4 4 4 4 4 4 1 1 1 1 1\n");
    r = run({"reduce", "2;1,1,1,1,1"});
    CHECK(r.out == "-1 2;1,1,1,1,1\n-1 1;1,1\n= 0;0,0,0,0,-1\n");
    r = run({"reduce", "1;1,1"});
    CHECK(r.code == 0);
    CHECK(run({"reduce", "oops"}).code == 2);
    r = run({"scan", "--b", "2", "--a-min", "1", "--a-max", "3", "--den", "2", "--n", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",0\n") == std::string::npos);
  }

  TEST_CASE("scan at non-integer b finds no inconsistency") {
    const auto r = run({"scan", "--b", "13/2", "--b", "5/2", "--a-min", "1", "--a-max", "30", "--den", "2", "--n", "3000"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",0\n") == std::string::npos);
    CHECK(r.out.find("5/2,10,sqrt(2),") != std::string::npos);
  }
}
