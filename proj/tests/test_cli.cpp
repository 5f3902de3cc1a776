#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "cladder/decompose_finite.hpp"
#include "cladder/json_io.hpp"

using namespace cladder;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(CLADDER_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string tmp(const std::string& name) { return "/tmp/cladder_cli_" + name; }

}  // namespace

TEST_CASE("cli_generate_cpd_roundtrip") {
  REQUIRE(run("generate clique --m 7 --n 4 --seed 11 --out " + tmp("f.json")) == 0);
  Json f = load_json_file(tmp("f.json"));
  CHECK(f["schema"] == "cladder/filtration/1");
  CHECK(f["manifest"]["seed"] == 11);
  REQUIRE(run("cpd --input " + tmp("f.json") + " --k 1 --out " + tmp("c.json") + " --svg " +
              tmp("c.svg")) == 0);
  Json c = load_json_file(tmp("c.json"));
  CHECK(c["schema"] == "cladder/cpd/1");
  CHECK(c.contains("axis_labels"));
  std::ifstream svg(tmp("c.svg"));
  std::stringstream ss;
  ss << svg.rdbuf();
  CHECK(ss.str().find("<svg") != std::string::npos);
  // determinism: same seed, same payload
  REQUIRE(run("generate clique --m 7 --n 4 --seed 11 --out " + tmp("f2.json")) == 0);
  REQUIRE(run("cpd --input " + tmp("f2.json") + " --k 1 --out " + tmp("c2.json")) == 0);
  Json c2 = load_json_file(tmp("c2.json"));
  for (const char* key : {"lower", "upper", "connecting", "n"}) CHECK(c[key] == c2[key]);
  // layered style renders as well
  CHECK(run("cpd --input " + tmp("f.json") + " --out " + tmp("c3.json") + " --svg " + tmp("c3.svg") +
            " --style layered") == 0);
}

TEST_CASE("cli_prime_flag") {
  REQUIRE(run("generate clique --m 6 --n 3 --seed 29 --prime 3 --out " + tmp("p3.json")) == 0);
  REQUIRE(run("cpd --input " + tmp("p3.json") + " --k 1 --prime 3 --out " + tmp("p3c.json")) == 0);
  Json c = load_json_file(tmp("p3c.json"));
  CHECK(c["field"] == 3);
  CHECK(run("cpd --input " + tmp("p3.json") + " --prime 4 --out " + tmp("p4c.json")) == 2);
}

TEST_CASE("cli_generate_models") {
  CHECK(run("generate dlm --m 6 --d 2 --n 3 --seed 3 --out " + tmp("dlm.json")) == 0);
  CHECK(run("generate thinning --m 9 --d 2 --n 3 --seed 5 --out " + tmp("thin.json")) == 0);
  // a fixed point cloud with an explicit subset
  {
    std::ofstream csv(tmp("pts.csv"));
    csv << "0,0\n2,0\n1,1.7320508\n1,0.5\n";
  }
  CHECK(run("generate thinning --points " + tmp("pts.csv") + " --subset 0,1,2 --n 2 --seed 1 --out " +
            tmp("thin2.json")) == 0);
  // bad parameters: usage error
  CHECK(run("generate clique --m 1 --out " + tmp("bad.json")) == 2);
  CHECK(run("generate nosuch --out " + tmp("bad.json")) == 2);
  // too short a critical value list: math-domain error
  CHECK(run("generate clique --m 4 --n 40 --seed 2 --out " + tmp("bad.json")) == 5);
  // exceeding the point-count capacity: capacity error
  {
    std::ofstream csv(tmp("big.csv"));
    for (int i = 0; i < 70; ++i) csv << i << "," << i % 7 << "\n";
  }
  CHECK(run("generate thinning --points " + tmp("big.csv") + " --subset 0,1,2 --cap 64 --n 2 --out " +
            tmp("bad.json")) == 4);
}

TEST_CASE("cli_decompose") {
  // a known CL(3) interval sum, serialized as a module
  IndecomposableSet cl3 = builtin_indecomposables(3);
  GridRep target = direct_sum({cl3.members[0].rep, cl3.members[0].rep, cl3.members[28].rep});
  save_json_file(gridrep_to_json(target), tmp("m.json"));
  REQUIRE(run("decompose --input " + tmp("m.json") + " --n 3 --out " + tmp("d.json")) == 0);
  Json d = load_json_file(tmp("d.json"));
  REQUIRE(d["members"].size() == 2);
  CHECK(d["members"][0]["label"] == cl3.members[0].label);
  CHECK(d["members"][0]["multiplicity"] == 2);
  CHECK(d["members"][1]["label"] == "N2");
  CHECK(d["members"][1]["interval"] == false);
  // filtration input follows the zigzag route
  REQUIRE(run("generate clique --m 6 --n 3 --seed 17 --out " + tmp("f3.json")) == 0);
  CHECK(run("decompose --input " + tmp("f3.json") + " --n 3 --k 1 --out " + tmp("d2.json")) == 0);
  // n = 4 without the data asset is a usage error
  CHECK(run("decompose --input " + tmp("m.json") + " --n 4 --out " + tmp("d3.json")) == 2);
  // malformed input: schema error
  {
    std::ofstream bad(tmp("mangled.json"));
    bad << "{\"schema\": \"cladder/module/1\"";
  }
  CHECK(run("decompose --input " + tmp("mangled.json") + " --n 3 --out " + tmp("d4.json")) == 3);
}

TEST_CASE("cli_cpd_rejects_non_ladder_modules") {
  GridRep grid(3, 3, 2);
  save_json_file(gridrep_to_json(grid), tmp("grid.json"));
  CHECK(run("cpd --input " + tmp("grid.json") + " --out " + tmp("gridc.json")) == 2);
}

TEST_CASE("cli_bottleneck") {
  REQUIRE(run("generate clique --m 7 --n 4 --seed 19 --out " + tmp("fa.json")) == 0);
  REQUIRE(run("cpd --input " + tmp("fa.json") + " --out " + tmp("ca.json")) == 0);
  REQUIRE(run("bottleneck " + tmp("ca.json") + " " + tmp("ca.json") + " --out " + tmp("bn.json")) == 0);
  Json bn = load_json_file(tmp("bn.json"));
  CHECK(bn["distance"] == 0);
  CHECK(bn["matching"]["components"].contains("overlap"));
}

TEST_CASE("cli_stats") {
  REQUIRE(run("stats --model clique --trials 6 --m 6 --n-max 4 --seed 23 --jobs 2 --out " +
              tmp("s.csv")) == 0);
  std::ifstream csv(tmp("s.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header.find("model,trial,seed,n,k,negative") == 0);
  int rows = 0;
  for (std::string line; std::getline(csv, line);)
    if (!line.empty()) ++rows;
  CHECK(rows >= 1);
  // zero trials still writes a well-formed empty file
  REQUIRE(run("stats --model clique --trials 0 --out " + tmp("s0.csv")) == 0);
  std::ifstream csv0(tmp("s0.csv"));
  std::getline(csv0, header);
  CHECK(header.find("model,trial") == 0);
}
