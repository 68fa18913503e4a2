#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kummer7/cli.hpp"
#include "kummer7/report.hpp"

using namespace kummer7;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kummer7");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream is(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

std::string header(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') return line;
  }
  return {};
}

}  // namespace

TEST_CASE("verify over 5..97") {
  const Run r = run({"verify", "--pmax", "97", "--curve", "0,1,-1", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(header(r.out) == kCsvHeader);
  const auto rows = data_rows(r.out);
  CHECK(rows.size() == 22);
  for (const auto& row : rows) CHECK(row.find(",true,true") != std::string::npos);
  CHECK(r.out.find("# summary checked=22 skipped=1 mismatches=0") != std::string::npos);
  CHECK(r.out.find("# skipped p=7:") != std::string::npos);
}

TEST_CASE("verify --pmax 5") {
  const Run r = run({"verify", "--pmax", "5", "--no-timing"});
  CHECK(r.code == 0);
  const auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == "5,0,0,0,-2,816,816,true,true");
}

TEST_CASE("timing column") {
  const Run r = run({"verify", "--pmax", "11"});
  CHECK(r.code == 0);
  CHECK(header(r.out) == std::string(kCsvHeader) + ",elapsed_ms");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"verify", "--curve", "0,0,1"}).code == 2);
  CHECK(run({"verify", "--curve", "0,1"}).code == 2);
  CHECK(run({"verify", "--pmin", "3", "--pmax", "97"}).code == 2);
  CHECK(run({"verify", "--pmin", "50", "--pmax", "20"}).code == 2);
  CHECK(run({"verify", "--pmax", "4294967311"}).code == 2);
  CHECK(run({"verify", "--method", "quick"}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--override-bp", "11"}).code == 2);
  CHECK(run({"verify", "--threads", "0"}).code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"eta", "1:3,1:3"}).code == 2);
  CHECK(run({"count", "--p", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("override produces exactly one mismatch") {
  const Run r = run({"verify", "--pmax", "97", "--override-bp", "11:1", "--no-timing"});
  CHECK(r.code == 1);
  int mismatched = 0;
  for (const auto& row : data_rows(r.out)) {
    if (row.find(",true,true") == std::string::npos) {
      ++mismatched;
      CHECK(row.rfind("11,", 0) == 0);
    }
  }
  CHECK(mismatched == 1);
  CHECK(r.out.find("mismatches=1") != std::string::npos);
}

TEST_CASE("reports are identical across thread counts") {
  const Run one = run({"verify", "--pmax", "97", "--threads", "1", "--no-timing"});
  const Run four = run({"verify", "--pmax", "97", "--threads", "4", "--no-timing"});
  const Run again = run({"verify", "--pmax", "97", "--threads", "3", "--no-timing"});
  CHECK(one.out == four.out);
  CHECK(one.out == again.out);
  const Run j1 = run({"verify", "--pmax", "61", "--threads", "1", "--no-timing", "--format", "json"});
  const Run j4 = run({"verify", "--pmax", "61", "--threads", "4", "--no-timing", "--format", "json"});
  CHECK(j1.out == j4.out);
}

TEST_CASE("naive method agrees") {
  const Run naive = run({"verify", "--pmax", "31", "--method", "naive", "--no-timing"});
  const Run factored = run({"verify", "--pmax", "31", "--no-timing"});
  CHECK(naive.code == 0);
  CHECK(data_rows(naive.out) == data_rows(factored.out));
}

TEST_CASE("json report") {
  const Run r = run({"verify", "--pmax", "13", "--format", "json", "--no-timing"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["records"].size() == 3);
  CHECK(doc["records"][0]["p"] == 5);
  CHECK(doc["records"][0]["n_counted"] == 816);
  CHECK(doc["records"][0]["match"] == true);
  CHECK_FALSE(doc["records"][0].contains("elapsed_ms"));
  CHECK(doc["summary"]["checked"] == 3);
  CHECK(doc["summary"]["mismatches"] == 0);
  CHECK(doc["summary"]["skipped"][0]["p"] == 7);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "kummer7_cli_test.csv";
  const Run r = run({"verify", "--pmax", "13", "-o", path.string(), "--no-timing"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(data_rows(ss.str()).size() == 3);
  std::filesystem::remove(path);
}

TEST_CASE("other subcommands") {
  Run r = run({"eta", "1:3,7:3", "11"});
  CHECK(r.code == 0);
  CHECK(r.out == "1*q^1 - 3*q^2 + 5*q^4 - 7*q^7 - 3*q^8 + 9*q^9 - 6*q^11 + O(q^12)\n");
  r = run({"eta", "1:1,2:1,7:1,14:1", "8"});
  CHECK(r.out == "1*q^1 - 1*q^2 - 2*q^3 + 1*q^4 + 2*q^6 + 1*q^7 - 1*q^8 + O(q^9)\n");
  r = run({"eta", "1:24", "3"});
  CHECK(r.out == "1*q^1 - 24*q^2 + 252*q^3 + O(q^4)\n");

  r = run({"hodge"});
  CHECK(r.code == 0);
  for (const char* s : {"h11=20", "h12=14", "euler_X=12", "n_plus=11", "n_minus=9", "betti=1,0,20,30,20,0,1"}) {
    CHECK(r.out.find(s) != std::string::npos);
  }

  r = run({"fibers"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1x I7 at t=infinity") != std::string::npos);
  CHECK(r.out.find("3x I1 at roots of t^3 - 8*t^2 + 5*t + 1") != std::string::npos);

  r = run({"identities", "30"});
  CHECK(r.code == 0);
  CHECK(r.out == "phi3: ok\nphi4: ok\n");

  r = run({"count", "--p", "11"});
  CHECK(r.out == "p=11 count=336 a_p=-6\n");
  r = run({"count", "--p", "5", "--target", "curve"});
  CHECK(r.out == "p=5 count=8 c_p=-2\n");
  r = run({"count", "--p", "5", "--target", "kummer"});
  CHECK(r.out.find("n_counted=816") != std::string::npos);
  r = run({"count", "--p", "7", "--target", "kummer"});
  CHECK(r.code == 2);
  CHECK(r.err.find("skipped p=7") != std::string::npos);
}
