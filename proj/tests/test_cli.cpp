#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "conjdiam/cli.hpp"

using namespace conjdiam;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"conjdiam"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("delta") {
  const Run r = run({"delta", "--family", "sd", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("delta=3 predicted=3 match=yes\n", 0) == 0);
  const Run r2 = run({"delta", "--family", "m", "--n", "3", "--p", "5", "--max-set-size", "2"});
  CHECK(r2.code == 0);
  CHECK(r2.out.rfind("delta_2=4\n", 0) == 0);
  const Run r3 = run({"delta", "--family", "d", "--n", "6", "--json"});
  CHECK(r3.code == 0);
  const auto j = nlohmann::json::parse(r3.out);
  CHECK(j["delta"]["value"] == 3);
  CHECK(j["match"] == true);
}

TEST_CASE("norm") {
  const Run r = run({"norm", "--family", "q", "--n", "4", "--set", "b ; a", "--element", "a^3"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(run({"norm", "--family", "sd", "--n", "4", "--set", "b", "--element", "a"}).out == "inf\n");
  CHECK(run({"norm", "--family", "m", "--n", "4", "--p", "2", "--set", "a ; b"}).out == "3\n");
}

TEST_CASE("ball, info and classes") {
  const Run b = run({"ball", "--family", "q", "--n", "3", "--set", "a", "--radius", "0"});
  CHECK(b.code == 0);
  CHECK(b.out == "size=1\n1\n");
  const Run i = run({"info", "--family", "m", "--n", "3", "--p", "3", "--json"});
  CHECK(i.code == 0);
  const auto j = nlohmann::json::parse(i.out);
  CHECK(j["order"] == 27);
  CHECK(j["classes"] == 11);
  CHECK(j["predicted_delta"] == 2);
  const Run c = run({"classes", "--family", "d", "--n", "3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("size=3 : b, a b, a^2 b") != std::string::npos);
}

TEST_CASE("verify a single instance") {
  const Run r = run({"verify", "--family", "q", "--n", "3", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "family,n,p,order,delta,predicted,match,millis\nquaternion,3,2,8,2,2,yes,0\n");
  const Run j = run({"verify", "--family", "sd", "--n", "4", "--json", "--suite", "GroupAxioms"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["records"][0]["suites"].size() == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"delta", "--n", "4"}).code == 2);
  CHECK(run({"delta", "--family", "m", "--n", "3", "--p", "2"}).code == 2);
  const Run s = run({"norm", "--family", "sd", "--n", "4", "--set", "c^2"});
  CHECK(s.code == 2);
  CHECK(s.err.find("token 1") != std::string::npos);
  CHECK(run({"norm", "--family", "q", "--n", "3", "--set", "z"}).code == 2);
  CHECK(run({"norm", "--family", "q", "--n", "3"}).code == 2);
}

TEST_CASE("help") {
  const Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}
