#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pquot::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pclosed") {
  const Result r = run({"pclosed", "--field", "2", "--F", "x", "--G", "y"});
  CHECK(r.code == 0);
  CHECK(json_of(r) == nlohmann::json::parse(R"({"p_closed": true, "H": "1"})"));
  const Result n = run({"pclosed", "--F", "y", "--G", "x"});
  CHECK(n.code == 0);
  CHECK(json_of(n)["p_closed"] == false);
  CHECK(json_of(n)["H"].is_null());
}

TEST_CASE("classify from normal-form coefficients") {
  const Result r = run({"classify", "--field", "2", "--coeffs", "a20=1,b02=1"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["deg_L"] == -1);
  CHECK(j["label"] == "D4^0+3A1");
  CHECK(j["points"].size() == 4);
  CHECK(j["points"][0]["point"] == nlohmann::json::parse(R"(["1","0","0"])"));
  CHECK(j["points"][0]["length"] == 4);
  CHECK(j["points"][0]["chart"] == "U0");
}

TEST_CASE("classify text mode prints the multiset and the point table") {
  const Result r = run({"classify", "--F", "x*y^2", "--G", "x^2+y^3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("configuration: E7^0") != std::string::npos);
  CHECK(r.out.find("(1 : 0 : 0)") != std::string::npos);
  const Result a = run({"classify", "--F", "x^2+x", "--G", "y", "--affine"});
  CHECK(json_of(a)["multiset"] == "2A1");
}

TEST_CASE("chart input") {
  const Result r = run({"degree", "--chart", "U1", "--F", "z", "--G", "w^2+w"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["deg_L"] == -1);
}

TEST_CASE("invariant ring, resolve, tjurina") {
  const auto inv = json_of(run({"invariant-ring", "--F", "y^4", "--G", "x^2"}));
  CHECK(inv["f"] == "Y^5 + X^3");
  CHECK(inv["relation"] == "Z^2 + Y^5 + X^3");
  const auto res = json_of(run({"resolve", "--f", "X^2*Y+X*Y^2"}));
  CHECK(res["dual_graph"]["vertices"] == 4);
  CHECK(res["type"] == "D4^0");
  CHECK(json_of(run({"tjurina", "--f", "X^3+Y^5"}))["tau"] == 16);
}

TEST_CASE("survey output is byte-identical across worker counts") {
  const Result a = run({"survey", "--field", "2", "--workers", "1"});
  const Result b = run({"survey", "--field", "2", "--workers", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json_of(a)["violation_count"] == 0);
  const Result s = run({"survey", "--field", "8", "--samples", "30", "--seed", "5"});
  CHECK(s.code == 0);
  CHECK(json_of(s)["examined"] == 30);
}

TEST_CASE("exit codes") {
  const Result parse = run({"pclosed", "--F", "x+*y", "--G", "y"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("^") != std::string::npos);
  CHECK(parse.err.find("--F") != std::string::npos);
  CHECK(run({"pclosed", "--field", "6", "--F", "x", "--G", "y"}).code == 2);
  CHECK(run({"pclosed", "--unknown"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"classify", "--coeffs", "a20=1,q=1"}).code == 2);
  CHECK(run({"classify", "--coeffs", "a20=1", "--F", "x"}).code == 2);
  CHECK(run({"classify", "--F", "x^2", "--G", "x*y"}).code == 2);
  const Result compute = run({"tjurina", "--f", "X^2"});
  CHECK(compute.code == 1);
  CHECK(compute.err.find("not an isolated singularity") != std::string::npos);
  CHECK(run({"survey", "--field", "32"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("no-extend refuses irrational points") {
  CHECK(run({"classify", "--F", "x^3+x^2+x", "--G", "y", "--no-extend"}).code == 1);
}

}
