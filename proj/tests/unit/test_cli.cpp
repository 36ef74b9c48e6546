#include <sstream>

#include "doctest.h"
#include "gznt/cli.hpp"
#include "../../vendor/json.hpp"

using namespace gznt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> a) {
  std::ostringstream o, e;
  const int c = run_cli(a, o, e);
  return {c, o.str(), e.str()};
}

std::string spec(const char* name) { return std::string(GZNT_SPECS_DIR) + "/" + name + ".json"; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> f;
  std::istringstream in(row);
  for (std::string x; std::getline(in, x, ',');) f.push_back(x);
  return f;
}

}  // namespace

TEST_CASE("gznt on z^2 at tau=-1") {
  auto r = run({"gznt", "--spec", spec("z2"), "--tau", "-1"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "theta,tau,regime,re,im,event");
  CHECK(l[1].find("complex") != std::string::npos);
  const auto f = fields(l[1]);
  REQUIRE(f.size() >= 5);
  CHECK(std::abs(std::stod(f[3])) < 1e-12);
  CHECK(std::abs(std::stod(f[4]) - 1) < 1e-12);
}

TEST_CASE("inf tau and inf output") {
  auto r = run({"gznt", "--spec", spec("z2"), "--tau", "inf"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out)[1].find("inf,infinity,,") != std::string::npos);
}

TEST_CASE("json output agrees with csv") {
  auto c = run({"gznt", "--spec", spec("notonR"), "--tau", "1"});
  auto j = run({"--json", "gznt", "--spec", spec("notonR"), "--tau", "1"});
  REQUIRE(c.code == 0);
  REQUIRE(j.code == 0);
  const auto js = nlohmann::json::parse(j.out);
  const auto row = lines(c.out)[1];
  const auto f = fields(row);
  REQUIRE(f.size() >= 5);
  CHECK(std::stod(f[3]) == js["re"].get<double>());
  CHECK(std::stod(f[4]) == js["im"].get<double>());
  CHECK(std::abs(js["re"].get<double>() - 0.45578) < 1e-4);
}

TEST_CASE("exit codes") {
  CHECK(run({"gznt", "--spec", spec("bad_mass"), "--tau", "0"}).code == 2);
  CHECK(run({"gznt", "--spec", "/nonexistent.json", "--tau", "0"}).code == 2);
  CHECK(run({"gznt", "--spec", spec("z2"), "--tau", "1+2i"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  auto r = run({"rational", "--alpha", "1+1i", "--beta", "1+1i"});
  CHECK(r.code == 2);
  const auto e = nlohmann::json::parse(r.err);
  CHECK(e["error"] == "DegenerateInput");
  CHECK(run({"rational", "--alpha", "1-1i", "--beta", "1+1i"}).code == 2);
  CHECK(run({"classify", "--spec", spec("z2"), "--at", "1"}).code == 2);
}

TEST_CASE("trace is deterministic and well formed") {
  auto a = run({"trace", "--spec", spec("z2"), "--steps", "32"});
  auto b = run({"--seed", "7", "trace", "--spec", spec("z2"), "--steps", "32"});
  REQUIRE(a.code == 0);
  CHECK(a.out == run({"trace", "--spec", spec("z2"), "--steps", "32"}).out);
  const auto la = lines(a.out), lb = lines(b.out);
  CHECK(la.size() >= 33);
  CHECK(la.size() == lb.size());
  CHECK(la.back().find("gpnt") != std::string::npos);
  CHECK(a.out.find("transition:Case2a") != std::string::npos);
}

TEST_CASE("rational output") {
  auto r = run({"rational", "--alpha", "1+1i", "--beta", "-1+1i"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("case,Case1") != std::string::npos);
  CHECK(r.out.find("p_left,-1.4142135623730951") != std::string::npos);
  CHECK(r.out.find("p_right,1.4142135623730951") != std::string::npos);
  CHECK(r.out.find("infinity,false") != std::string::npos);
}

TEST_CASE("classify and eval") {
  auto r = run({"classify", "--spec", spec("z3"), "--at", "0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("class,Case3") != std::string::npos);
  r = run({"--json", "eval", "--spec", spec("z2"), "--at", "1+1i"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["derivatives"][0][0].get<double>() == doctest::Approx(0));
  CHECK(j["derivatives"][0][1].get<double>() == doctest::Approx(2));
}

TEST_CASE("verify-realline") {
  auto r = run({"verify-realline", "--spec", spec("r0")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("form,FormR0") != std::string::npos);
  r = run({"verify-realline", "--spec", spec("z2")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("NotRealLine") != std::string::npos);
}

TEST_CASE("verify-invariants") {
  auto r = run({"verify-invariants", "--spec", spec("minus_z"), "--steps", "32"});
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
