#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "frobkern/cli.hpp"
#include "frobkern/module.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Golden {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<Golden> kGolden = {
    {"classify_a1_p5_r2_w9.json", {"classify", "--type", "A1", "--p", "5", "--r", "2", "--weight", "9", "--json"}},
    {"classify_a2_p7_r1_rho.json", {"classify", "--type", "A2", "--p", "7", "--r", "1", "--weight", "1,1", "--json"}},
    {"depth_a1_p5_neg_rho.txt", {"depth", "--type", "A1", "--p", "5", "--weight", "-1"}},
    {"reduce_a1_p5_r3_w74.json", {"reduce", "--type", "A1", "--p", "5", "--r", "3", "--weight", "74", "--json"}},
    {"block_a1_p5_w2_g1.json", {"block", "--type", "A1", "--p", "5", "--weight", "2", "--gamma", "1", "--json"}},
    {"psi_a2_p3_w22.json", {"psi", "--cartan", "2,-1;-1,2", "--p", "3", "--weight", "2,2", "--json"}},
    {"heisenberg_r2.json", {"verify-heisenberg", "--r", "2", "--qs", "3,5,7", "--json"}},
    {"sl2_dr2_p3.json", {"verify-sl2", "--check", "dr2", "--p", "3", "--json"}},
};

}  // namespace

TEST_CASE("canonical runs match the golden files byte for byte") {
  const bool update = std::getenv("FROBKERN_UPDATE_GOLDEN") != nullptr;
  for (auto& g : kGolden) {
    auto r = run(g.args);
    CHECK_MESSAGE(r.code == 0, g.file);
    std::string path = std::string(FROBKERN_GOLDEN_DIR) + "/" + g.file;
    if (update) std::ofstream(path) << r.out;
    CHECK_MESSAGE(r.out == slurp(path), g.file);
  }
}

TEST_CASE("documented outputs") {
  auto j = json::parse(run({"classify", "--type", "A1", "--p", "5", "--r", "2", "--weight", "9", "--json"}).out);
  CHECK(j["depth"] == 2);
  CHECK(j["reduction"]["d"] == 1);
  CHECK(j["reduction"]["mu"] == json::array({1}));
  CHECK(j["variety_dim"] == 1);
  CHECK(j["ar_position"] == "HomogeneousTube");
  CHECK(run({"depth", "--type", "A1", "--p", "5", "--weight", "-1"}).out == "-inf\n");
  j = json::parse(run({"verify-heisenberg", "--r", "2", "--qs", "3,5,7", "--json"}).out);
  CHECK(j["pass"] == true);
  CHECK(std::abs(j["slope"].get<double>() - 5) < 0.15);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"depth", "--type", "A1", "--weight", "3"}).code == 2);
  CHECK(run({"depth", "--type", "A1", "--p", "4", "--weight", "3"}).code == 2);
  CHECK(run({"depth", "--type", "A1", "--p", "5", "--weight", "3,4"}).code == 2);
  CHECK(run({"depth", "--type", "A1", "--cartan", "2", "--p", "5", "--weight", "3"}).code == 2);
  CHECK(run({"block", "--type", "A1", "--p", "5", "--weight", "2"}).code == 2);
  auto r = run({"reduce", "--type", "A1", "--p", "5", "--r", "1", "--weight", "2", "--json"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out).contains("error"));
  r = run({"depth", "--type", "Z9", "--p", "5", "--weight", "1", "--json"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out).contains("error"));
  CHECK_FALSE(run({"depth", "--type", "A1", "--p", "5", "--weight", "1"}).err.size() > 0);
}

TEST_CASE("verification exit codes follow the case results") {
  CHECK(run({"verify-heisenberg", "--r", "1", "--qs", "3,5", "--json"}).code == 0);
  auto r = run({"verify-heisenberg", "--r", "2", "--qs", "3,5,7", "--tol", "0", "--json"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["pass"] == false);
  r = run({"verify-sl2", "--check", "tube", "--p", "3", "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  for (auto& c : j["cases"]) CHECK(c.contains("witness"));
  CHECK(run({"verify-sl2", "--check", "all", "--p", "3"}).code == 0);
}

TEST_CASE("output is deterministic for a fixed seed") {
  std::vector<std::string> args = {"verify-sl2", "--check", "ar", "--p", "5", "--seed", "3", "--json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("dump-module writes the text format") {
  auto r = run({"dump-module", "--kind", "verma", "--p", "3", "--r", "2", "--weight", "5"});
  CHECK(r.code == 0);
  auto m = fk::FpModule::from_text(r.out);
  CHECK(m.dim() == 9);
  std::string path = "dump_module_test.txt";
  r = run({"dump-module", "--kind", "projective", "--p", "5", "--weight", "1", "--out", path, "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["dim"] == 10);
  CHECK(fk::FpModule::from_text(slurp(path)).dim() == 10);
  std::remove(path.c_str());
  CHECK(run({"dump-module", "--kind", "bogus", "--p", "3"}).code == 2);
}
