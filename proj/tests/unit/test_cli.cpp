#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "zolo/cli.hpp"
#include "zolo/io.hpp"

using namespace zolo;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zolo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve prints L, B, alternation and coefficients") {
  const Run r = run({"solve", "--k", "0", "--m", "1", "--a", "0.333333333333"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("L            5.0000000000") != std::string::npos);
  CHECK(r.out.find("B ") != std::string::npos);
  CHECK(r.out.find("alternation  2 points") != std::string::npos);
  CHECK(r.out.find("laurent") != std::string::npos);
}

TEST_CASE("solve json envelope and byte-identical round trip") {
  const Run r = run({"solve", "--k", "1", "--m", "1", "--a", "0.25", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  const std::vector<std::string> keys = {"tool_version", "command", "params", "payload", "elapsed_ms"};
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it) CHECK(it.key() == keys[i++]);
  CHECK(j["command"] == "solve");
  CHECK(j["params"]["level_tol"] == 1e-12);
  CHECK(j["payload"]["L"]["prec_bits"].get<int>() >= 97);
  CHECK(std::stod(j["payload"]["L"]["value"].get<std::string>()) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(j.dump(2) + "\n" == r.out);
  CHECK(Json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("unweighted solve") {
  const Run r = run({"solve", "--unweighted", "--p", "1", "--n", "2", "--a", "0.5", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(std::stod(j["payload"]["L"]["value"].get<std::string>()) == doctest::Approx(1.0 / 48.0).epsilon(1e-15));
  CHECK_FALSE(j["payload"].contains("laurent"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"solve", "--k", "1"}).code == kExitUsage);
  CHECK(run({"solve", "--k", "1", "--m", "1", "--a", "1.5"}).code == kExitUsage);
  CHECK(run({"solve", "--k", "1", "--m", "1", "--a", "abc"}).code == kExitUsage);
  CHECK(run({"solve", "--unweighted", "--p", "2", "--n", "2", "--a", "0.5"}).code == kExitUsage);
  CHECK(run({"solve", "--k", "1", "--m", "1", "--a", "0.5", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"asympt", "--formula", "eq99"}).code == kExitUsage);
  CHECK(run({"asympt", "--formula", "eq01", "--k", "1"}).code == kExitUsage);
  CHECK(run({"sweep", "--k", "1", "--a", "0.5", "--m-from", "6", "--m-to", "5"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "bogus"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == kExitOk); }

TEST_CASE("non-convergence exits 3") {
  CHECK(run({"solve", "--k", "2", "--m", "6", "--a", "0.5", "--max-iter", "1"}).code == kExitNumerical);
}

TEST_CASE("asympt values") {
  const Run yk = run({"asympt", "--formula", "yk", "--k", "1"});
  CHECK(yk.code == kExitOk);
  CHECK(yk.out.find("-2.30523289432") != std::string::npos);
  const Run q = run({"asympt", "--formula", "model-b-q", "--q", "1", "--m", "2", "--a", "0.25", "--format", "json"});
  REQUIRE(q.code == kExitOk);
  CHECK(Json::parse(q.out)["payload"]["value"].get<double>() == doctest::Approx(4.394449154672).epsilon(1e-12));
  const Run phi = run({"asympt", "--formula", "model-phi", "--k", "1", "--m", "1", "--a", "0.5", "--z-re", "0", "--z-im",
                       "1", "--format", "json"});
  REQUIRE(phi.code == kExitOk);
  CHECK(Json::parse(phi.out)["payload"]["value"].contains("im"));
}

TEST_CASE("sweep CSV header and rows") {
  const Run r = run({"sweep", "--k", "0", "--a", "0.5", "--m-from", "2", "--m-to", "4"});
  REQUIRE(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "m,L,normalized,predicted,ratio,B,B_predicted,B_diff");
  CHECK(ls[1].rfind("2,", 0) == 0);
  // 17 significant digits in every numeric field
  std::istringstream row(ls[3]);
  std::string field;
  std::getline(row, field, ',');
  while (std::getline(row, field, ',')) {
    std::string digits;
    for (char c : field.substr(0, field.find_first_of("eE"))) {
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    }
    digits.erase(0, digits.find_first_not_of('0'));
    CHECK(digits.size() <= 17);
    CHECK(digits.size() >= 15);
  }
}

TEST_CASE("sweep writes to --out") {
  const auto path = std::filesystem::temp_directory_path() / "zolo_sweep_test.csv";
  const Run r = run({"sweep", "--k", "1", "--a", "0.5", "--m-from", "2", "--m-to", "3", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "m,L,normalized,predicted,ratio,B,B_predicted,B_diff");
  std::filesystem::remove(path);
}

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify", "--suite", "diagonal"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("6 checks, all passed") != std::string::npos);
  // Too short a sweep to reach the tolerance.
  const Run bad = run({"verify", "--suite", "convergence", "--m", "18", "--format", "json"});
  CHECK(bad.code == kExitCheckFailed);
  const Json j = Json::parse(bad.out);
  CHECK(j["payload"].size() == 2);
  CHECK_FALSE(j["payload"][0]["passed"].get<bool>());
}

TEST_CASE("APPROX_PREC_BITS override") {
  ::setenv("APPROX_PREC_BITS", "300", 1);
  const Run r = run({"solve", "--k", "1", "--m", "2", "--a", "0.5", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["params"]["prec_bits"] == 300);
  ::setenv("APPROX_PREC_BITS", "40", 1);
  CHECK(run({"solve", "--k", "1", "--m", "2", "--a", "0.5"}).code == kExitUsage);
  ::setenv("APPROX_PREC_BITS", "x", 1);
  CHECK(run({"solve", "--k", "1", "--m", "2", "--a", "0.5"}).code == kExitUsage);
  ::unsetenv("APPROX_PREC_BITS");
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  const Json mpj = to_json(MPValue(0.5, 200));
  CHECK(mpj["prec_bits"] == 200);
  CHECK(mpj["value"] == "5e-1");
}

}
