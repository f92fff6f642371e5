#include "adombell/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = adombell::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("adomian text output for exp:1", "[cli]") {
  const auto r = run({"adomian", "--n", "2", "--nonlinearity", "exp:1", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "(u2 + 1/2*u1^2)*exp(u0)\n");
}

TEST_CASE("partitions as JSON", "[cli]") {
  const auto r = run({"partitions", "--set", "lambda", "--n", "4", "--k", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":4,\"k\":2,\"vectors\":[[0,2,0],[1,0,1]]}\n");
  const auto rec = run({"partitions", "--set", "theta", "--n", "6", "--k", "2", "--recurrence"});
  CHECK(rec.code == 0);
  CHECK(rec.out == "(0,0,2,0,0,0)\n(0,1,0,1,0,0)\n(1,0,0,0,1,0)\n");
}

TEST_CASE("bell subcommand routes agree", "[cli]") {
  for (std::string method : {"direct", "duan", "conv", "diff"}) {
    CHECK(run({"bell", "--partial", "4,2", "--method", method}).out == "3*u2^2 + 4*u1*u3\n");
    CHECK(run({"bell", "--kind", "ord", "--partial", "4,2", "--method", method}).out == "u2^2 + 2*u1*u3\n");
  }
  CHECK(run({"bell", "--partial", "3,2", "--scaled"}).out == "6*u1*u2\n");
  CHECK(run({"bell", "--complete", "3", "--method", "conv"}).out == run({"bell", "--complete", "3"}).out);
  const auto j = nlohmann::json::parse(run({"bell", "--partial", "3,2", "--format", "json"}).out);
  CHECK(j["n"] == 3);
  CHECK(j["k"] == 2);
  CHECK(adombell::poly_from_json(j["poly"]).to_string() == "3*u1*u2");
}

TEST_CASE("adomian JSON parts", "[cli]") {
  const auto r = run({"adomian", "--n", "2", "--method", "rec2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(adombell::poly_from_json(j["parts"]["1"]).to_string() == "u2");
  CHECK(adombell::poly_from_json(j["parts"]["2"]).to_string() == "1/2*u1^2");
}

TEST_CASE("adomian with a concrete u0", "[cli]") {
  const auto r = run({"adomian", "--n", "2", "--nonlinearity", "power:1-1/alpha", "--u0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1/2*u1^2 - u2*alpha - 1/2*u1^2*alpha + u2*alpha^2)/alpha^2\n");
  CHECK(run({"adomian", "--n", "1", "--nonlinearity", "exp:-beta", "--u0", "1"}).out == "-u1*beta*E\n");
}

TEST_CASE("verify reports pass and fail through the exit code", "[cli]") {
  const auto ok = run({"verify", "--identity", "exp", "--n", "4"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["all_hold"] == true);
  CHECK(j["results"].size() == 5);

  const auto bad = run({"verify", "--identity", "stirling", "--max", "3", "--inject-fault"});
  CHECK(bad.code == 1);
  const auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["all_hold"] == false);
  CHECK(jb["results"][0].contains("lhs"));
  CHECK(jb["results"][0].contains("rhs"));

  CHECK(run({"verify", "--identity", "binomial", "--n", "2", "--m", "5"}).code == 0);
  CHECK(run({"verify", "--identity", "binomial", "--max", "4"}).code == 0);
  CHECK(run({"verify", "--identity", "falling", "--max", "5", "--format", "text"}).code == 0);
  CHECK(run({"verify", "--identity", "complete-bell", "--n", "5"}).code == 0);
}

TEST_CASE("adm and verify-all", "[cli]") {
  const auto r = run({"adm", "--ode", "exp", "--order", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("u4 = -1/4*x^4*alpha^4*beta^3*E^4\n") != std::string::npos);
  CHECK(r.out.find("closed form: match") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"adm", "--ode", "power", "--order", "3", "--format", "json"}).out);
  CHECK(j["matches_closed_form"] == true);
  CHECK(j["components"].size() == 4);
  CHECK(run({"verify-all", "--max", "1"}).code == 0);
  CHECK(run({"verify-all", "--max", "4", "--format", "json"}).code == 0);
  CHECK(run({"verify-all", "--max", "3", "--inject-fault"}).code == 1);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"partitions", "--n", "2", "--k", "3"}).code == 2);
  CHECK(run({"partitions", "--n", "x", "--k", "1"}).code == 2);
  CHECK(run({"bell", "--partial", "4"}).code == 2);
  CHECK(run({"bell"}).code == 2);
  CHECK(run({"bell", "--partial", "3,2", "--complete", "3"}).code == 2);
  CHECK(run({"bell", "--kind", "ord", "--partial", "3,2", "--scaled"}).code == 2);
  CHECK(run({"adomian", "--n", "2", "--nonlinearity", "sin"}).code == 2);
  CHECK(run({"adomian", "--n", "2", "--nonlinearity", "exp:1", "--u0", "1"}).code == 2);
  CHECK(run({"verify", "--identity", "binomial", "--n", "3", "--m", "3"}).code == 2);
  CHECK(run({"verify", "--identity", "exp"}).code == 2);
  CHECK(run({"adm", "--ode", "exp", "--order", "0"}).code == 2);
  const auto e = run({"partitions", "--bogus"});
  CHECK(e.err.find("error") != std::string::npos);
}

TEST_CASE("help exits 0", "[cli]") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-all") != std::string::npos);
  CHECK(run({"bell", "--help"}).code == 0);
}
