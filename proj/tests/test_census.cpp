#include <sstream>

#include "doctest.h"
#include "hamtorus/census.hpp"
#include "hamtorus/errors.hpp"

using namespace hamtorus;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<const char*> args) {
  args.insert(args.begin(), "hamtorus");
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("small tables") {
    CHECK(exceptional_pairs(18).empty());
    auto rows = exceptional_pairs(29);
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (const auto& r : rows) pairs.emplace_back(r.n, r.m);
    CHECK(pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{
                       {5, 19}, {7, 27}, {7, 29}, {13, 29}, {20, 29}});
    for (const auto& r : rows) {
      CHECK_FALSE(r.hamiltonian);
      CHECK(r.diag >= 2);
      CHECK(r.method == "link");
    }
    CHECK_THROWS_AS(exceptional_pairs(1), InputError);
  }

  TEST_CASE("worker count does not change the table") {
    auto one = exceptional_pairs(45, 1);
    CHECK(exceptional_pairs(45, 3) == one);
    CHECK(exceptional_pairs(45, 8) == one);
  }

  TEST_CASE("distribution") {
    auto tiny = diag_distribution(2);
    CHECK(tiny.pairs == 1);
    CHECK(tiny.count3 == 1);
    CHECK(tiny.p3() == 1.0);
    auto r = diag_distribution(300, 4);
    CHECK(r.count1 + r.count2 + r.count3 == r.pairs);
    CHECK(r.max_deviation() < 0.05);
    auto again = diag_distribution(300, 1);
    CHECK(again.count1 == r.count1);
    CHECK(again.count2 == r.count2);
  }

  TEST_CASE("writers") {
    std::vector<PairRecord> rows = {{5, 19, 2, false, "link"}};
    std::ostringstream csv, json;
    write_csv(csv, rows);
    write_json(json, rows);
    CHECK(csv.str() == "n,m,diag,hamiltonian\n5,19,2,false\n");
    CHECK(json.str() ==
          "{\"n\":5,\"m\":19,\"diag\":2,\"hamiltonian\":false,\"method\":\"link\"}\n");
  }

  TEST_CASE("command line") {
    auto r = cli({"diag", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = cli({"ham", "5", "19"});
    CHECK(r.code == 0);
    CHECK(r.out == "false\n");
    r = cli({"diag", "0", "3"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    CHECK(cli({"diag", "4", "6", "--method", "naive"}).out == "2\n");
    CHECK(cli({"diag", "4", "6", "--method", "bogus"}).code == 1);
    CHECK(cli({"ham", "25", "25", "--method", "brute"}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("witness output") {
    auto r = cli({"ham", "2", "4", "--witness"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string verdict, omega, cell;
    std::getline(lines, verdict);
    std::getline(lines, omega);
    CHECK(verdict == "true");
    CHECK(omega.find_first_not_of("UR") == std::string::npos);
    int count = 0;
    while (std::getline(lines, cell)) ++count;
    CHECK(count == 32);
    CHECK(cli({"ham", "1", "3"}).err.find("outside") != std::string::npos);
  }

  TEST_CASE("verify subcommand") {
    auto r = cli({"verify", "--max", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}
