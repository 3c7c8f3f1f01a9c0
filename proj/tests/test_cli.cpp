#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "ncstirling/noncentral.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = ncs::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("triangle json") {
  const auto r = run({"triangle", "--n-max", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n_max"] == 2);
  bool found = false;
  for (const auto& e : doc["entries"]) {
    if (e["n"] == 2 && e["k"] == 1) {
      CHECK(e["coeffs"] == nlohmann::json::array({"-1", "-2"}));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("triangle of order zero") {
  const auto r = run({"triangle", "--n-max", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n_max\":0,\"entries\":[{\"n\":0,\"k\":0,\"coeffs\":[\"1\"]}]}\n");
}

TEST_CASE("default triangle order is 64") {
  const auto r = run({"triangle"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["n_max"] == 64);
}

TEST_CASE("both constructions emit identical bytes") {
  const auto rec = run({"triangle", "--n-max", "4", "--construction", "recurrence"});
  const auto exp = run({"triangle", "--n-max", "4", "--construction", "explicit"});
  CHECK(rec.code == 0);
  CHECK(exp.code == 0);
  CHECK(rec.out == exp.out);
}

TEST_CASE("emitted triangle round-trips byte for byte") {
  const auto r = run({"triangle", "--n-max", "12"});
  std::ostringstream again;
  ncs::write_triangle_json(again, ncs::read_triangle_json(r.out));
  CHECK(again.str() == r.out);
}

TEST_CASE("triangle csv") {
  const auto r = run({"triangle", "--n-max", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,k,power,coeff\n", 0) == 0);
}

TEST_CASE("triangle writes to --out and reports I/O failures") {
  const auto path = std::filesystem::temp_directory_path() / "ncstirling_cli_triangle.json";
  const auto r = run({"triangle", "--n-max", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(path) == run({"triangle", "--n-max", "3"}).out);
  std::filesystem::remove(path);

  const auto bad = run({"triangle", "--n-max", "3", "--out", "/nonexistent-dir/x/y.json"});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("cannot open") != std::string::npos);
}

TEST_CASE("verify passes") {
  const auto r = run({"verify", "--n-max", "10"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_hold"] == true);
  CHECK(doc["seed"] == "0");
}

TEST_CASE("smallest verify still emits reports") {
  const auto r = run({"verify", "--n-max", "1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["reports"].size() >= 5);
}

TEST_CASE("verify with the oracle grid") {
  const auto r = run({"verify", "--n-max", "10", "--with-oracle", "--tol", "1e-6"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["oracle"].size() == 9 * 7 * 5 * 4);
  for (const auto& e : doc["oracle"]) CHECK(e["pass"] == true);
}

TEST_CASE("verify csv summary") {
  const auto r = run({"verify", "--n-max", "3", "--format", "csv", "--with-oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("identity,n,alpha,holds\n", 0) == 0);
  CHECK(r.out.find("n,alpha,beta,x0,jet_value,expansion_value,rel_residual,pass\n") != std::string::npos);
  CHECK(r.out.find(",false") == std::string::npos);
}

TEST_CASE("verify seed changes the sampled alphas") {
  const auto a = run({"verify", "--n-max", "3", "--seed", "1"});
  const auto b = run({"verify", "--n-max", "3", "--seed", "2"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out != b.out);
}

TEST_CASE("corrupting one coefficient flips the exit status") {
  const auto r = run({"verify", "--n-max", "10", "--with-oracle", "--corrupt-coefficient", "7,3,2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("FAIL construction_agreement n=7 k=3") != std::string::npos);

  CHECK(run({"verify", "--n-max", "4", "--corrupt-coefficient", "0,0,0"}).code == 1);
  CHECK(run({"verify", "--n-max", "4", "--corrupt-coefficient", "bogus"}).code == 2);
  CHECK(run({"verify", "--n-max", "4", "--corrupt-coefficient", "9,0,0"}).code == 2);
}

TEST_CASE("nonpositive tolerance is rejected") {
  CHECK(run({"verify", "--n-max", "2", "--tol", "0"}).code != 0);
  CHECK(run({"verify", "--n-max", "2", "--tol", "-1"}).code != 0);
}

TEST_CASE("eval") {
  auto r = run({"eval", "--n", "2", "--k", "1", "--alpha", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-3\n");

  CHECK(run({"eval", "--n", "5", "--k", "5", "--alpha", "7/3"}).out == "1\n");
  CHECK(run({"eval", "--n", "3", "--k", "0", "--alpha", "-1"}).out == "0\n");
  CHECK(run({"eval", "--n", "3", "--k", "0", "--alpha", "1"}).out == "-6\n");
  CHECK(run({"eval", "--n", "2", "--k", "1", "--alpha", "4/8"}).out == "-2\n");
  CHECK(run({"eval", "--n", "2", "--k", "0", "--alpha", "1/2"}).out == "3/4\n");
}

TEST_CASE("eval with an expansion point") {
  const auto r = run({"eval", "--n", "2", "--k", "0", "--alpha", "1", "--beta", "0", "--x0", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\nexpansion 0.25\n");
  CHECK(run({"eval", "--n", "2", "--k", "0", "--alpha", "1", "--beta", "0"}).code == 2);
  CHECK(run({"eval", "--n", "2", "--k", "0", "--alpha", "1", "--beta", "0", "--x0", "0.5"}).code == 2);
}

TEST_CASE("eval usage errors") {
  CHECK(run({"eval", "--n", "2", "--k", "3", "--alpha", "1"}).code == 2);
  CHECK(run({"eval", "--n", "2", "--k", "1", "--alpha", "1/0"}).code == 2);
  CHECK(run({"eval", "--n", "2", "--k", "1", "--alpha", "x"}).code == 2);
  CHECK(run({"eval", "--n", "2", "--k", "1"}).code != 0);
  CHECK(run({}).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
}

}  // TEST_SUITE
