#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "../../tools/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"netpot"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return netpot::cli::run(static_cast<int>(argv.size()), argv.data());
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "netpot-cli-tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& body) {
  fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

fs::path kb23_json() {
  return write_file("kb23.json",
                    R"({"k0":3,"k1":2,"D0":2,"D1":2,"c0":[1,3],"c1":[1,2]})");
}

fs::path sk4_json() {
  return write_file("sk4.json",
                    R"({"k0":3,"k1":2,"D0":3,"D1":4,"c0":[1,1,2],"c1":[1,1,2,2]})");
}

fs::path sk4_edges() {
  std::ostringstream body;
  body << "# subdivision of the complete graph on v1..v4\n";
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      std::string mid = "e" + std::to_string(i) + std::to_string(j);
      body << "v" << i << " " << mid << " 1\n";
      body << "v" << j << " " << mid << " 1\n";
    }
  return write_file("sk4.edges", body.str());
}

fs::path triangle_edges() {
  return write_file("triangle.edges", "x1 x2 1\nx2 x3 1\nx3 x1 1\n");
}

fs::path out_path(const std::string& name) { return scratch_dir() / name; }

}  // namespace

TEST_CASE("cli validate exit codes") {
  fs::path out = out_path("validate.json");
  CHECK(run_cli({"--out", out.string(), "validate", "--array", kb23_json().string()}) == 0);
  CHECK(read_json(out)["passed"] == true);

  fs::path broken = write_file("broken.json",
                               R"({"k0":3,"k1":2,"D0":3,"D1":4,"c0":[1,1,2],"c1":[1,1,1,2]})");
  CHECK(run_cli({"--out", out.string(), "validate", "--array", broken.string()}) == 1);
  json report = read_json(out);
  CHECK(report["passed"] == false);
  CHECK(report["failures"][0]["condition"] == "ball-sum");

  CHECK(run_cli({"validate", "--array", (scratch_dir() / "missing.json").string()}) == 2);
  CHECK(run_cli({"validate"}) == 2);           // missing required option
  CHECK(run_cli({"no-such-verb"}) == 2);
  CHECK(run_cli({}) == 2);                     // a subcommand is required
}

TEST_CASE("cli derive") {
  fs::path out = out_path("derive.json");
  REQUIRE(run_cli({"--out", out.string(), "derive", "--array", kb23_json().string()}) == 0);
  json report = read_json(out);
  CHECK(report["n"] == "5");
  CHECK(report["k0"] == json::array({"1", "3", "1"}));
  CHECK(report["B1"] == json::array({"1", "3", "5"}));
}

TEST_CASE("cli equil") {
  fs::path out = out_path("equil.json");
  REQUIRE(run_cli({"--out", out.string(), "equil", "--graph", triangle_edges().string(),
                   "--vertex", "x1"}) == 0);
  json report = read_json(out);
  CHECK(report["base_vertex"] == "x1");
  CHECK(report["values"]["x2"] == "1");
  CHECK(report["values"]["x3"] == "1");
  CHECK(report["capacity"] == "2");
  CHECK(report["levels"] == json::array({"0", "1"}));
  CHECK(report["multiplicities"] == json::array({1, 2}));

  REQUIRE(run_cli({"--out", out.string(), "equil", "--array", kb23_json().string()}) == 0);
  json arrays = read_json(out);
  CHECK(arrays["q0"] == json::array({"0", "4/3", "5/3"}));
  CHECK(arrays["q1"] == json::array({"0", "2", "5/2"}));

  CHECK(run_cli({"equil"}) == 2);  // neither --graph nor --array
}

TEST_CASE("cli green") {
  fs::path out = out_path("green.json");
  REQUIRE(run_cli({"--out", out.string(), "green", "--array", kb23_json().string()}) == 0);
  json report = read_json(out);
  CHECK(report["side0"] == json::array({"17/75", "-1/25", "-8/75"}));
  CHECK(report.contains("side1"));

  REQUIRE(run_cli({"--out", out.string(), "green", "--array", kb23_json().string(), "--side",
                   "0"}) == 0);
  CHECK_FALSE(read_json(out).contains("side1"));

  REQUIRE(run_cli({"--out", out.string(), "green", "--graph", triangle_edges().string()}) == 0);
  json matrix = read_json(out);
  CHECK(matrix["order"] == 3);
  CHECK(matrix["entries"][0][0] == "2/9");
  CHECK(matrix["entries"][0][1] == "-1/9");
}

TEST_CASE("cli resist") {
  fs::path out = out_path("resist.json");
  REQUIRE(run_cli({"--out", out.string(), "resist", "--graph", triangle_edges().string(),
                   "--pair", "x1", "x2"}) == 0);
  CHECK(read_json(out)["resistance"] == "2/3");

  REQUIRE(run_cli({"--out", out.string(), "resist", "--array", kb23_json().string(), "--side",
                   "0", "--dist", "1"}) == 0);
  CHECK(read_json(out)["resistance"] == "2/3");

  REQUIRE(run_cli({"--out", out.string(), "--decimal", "4", "resist", "--graph",
                   triangle_edges().string(), "--pair", "x1", "x2"}) == 0);
  json decimal = read_json(out);
  CHECK(decimal["resistance"] == "2/3");
  CHECK(decimal["resistance_decimal"] == "0.6666");

  CHECK(run_cli({"resist", "--graph", triangle_edges().string()}) == 2);  // missing --pair
}

TEST_CASE("cli check-m") {
  CHECK(run_cli({"check-m", "--graph", triangle_edges().string()}) == 0);
  CHECK(run_cli({"check-m", "--array", kb23_json().string()}) == 0);

  fs::path out = out_path("checkm.json");
  CHECK(run_cli({"--out", out.string(), "check-m", "--array", sk4_json().string()}) == 1);
  json report = read_json(out);
  CHECK(report["verdict"] == false);
  CHECK(report.contains("witness"));

  fs::path bad_triangle = write_file("bad_triangle.edges", "x1 x2 1\nx2 x3 1\nx3 x1 5\n");
  CHECK(run_cli({"check-m", "--graph", bad_triangle.string()}) == 1);
}

TEST_CASE("cli classify") {
  fs::path out = out_path("classify.json");
  REQUIRE(run_cli({"--out", out.string(), "classify", "--array", kb23_json().string()}) == 0);
  CHECK(read_json(out)["case"] == "CompleteBipartite");
  REQUIRE(run_cli({"--out", out.string(), "classify", "--array", sk4_json().string()}) == 0);
  CHECK(read_json(out)["case"] == "QSD_D3D4");
}

TEST_CASE("cli recover") {
  fs::path input = write_file("recover.json", R"({
    "q0": ["0", "4/3", "5/3"], "m0": [1, 3, 1],
    "q1": ["0", "2", "5/2"],   "m1": [1, 2, 2]
  })");
  fs::path out = out_path("recovered.json");
  REQUIRE(run_cli({"--out", out.string(), "recover", "--input", input.string()}) == 0);
  json report = read_json(out);
  CHECK(report["k0"] == 3);
  CHECK(report["k1"] == 2);
  CHECK(report["c0"] == json::array({1, 3}));
  CHECK(report["c1"] == json::array({1, 2}));

  fs::path bad = write_file("recover_bad.json", R"({
    "q0": ["0", "4/3", "12/7"], "m0": [1, 3, 1],
    "q1": ["0", "2", "5/2"],    "m1": [1, 2, 2]
  })");
  CHECK(run_cli({"recover", "--input", bad.string()}) == 2);
}

TEST_CASE("cli detect and verify") {
  fs::path out = out_path("detect.json");
  REQUIRE(run_cli({"--out", out.string(), "detect", "--graph", sk4_edges().string()}) == 0);
  json report = read_json(out);
  CHECK(report["distance_biregular"] == true);
  CHECK(report["k0"] == 3);
  CHECK(report["c1"] == json::array({1, 1, 2, 2}));

  fs::path path4 = write_file("path4.edges", "a b 1\nb c 1\nc d 1\n");
  CHECK(run_cli({"--out", out.string(), "detect", "--graph", path4.string()}) == 1);
  CHECK(read_json(out)["distance_biregular"] == false);

  fs::path verify_out = out_path("verify.json");
  REQUIRE(run_cli({"--out", verify_out.string(), "verify", "--graph", sk4_edges().string()}) == 0);
  json verified = read_json(verify_out);
  CHECK(verified["match"] == true);
  CHECK(verified["entries_checked"] == 100);

  CHECK(run_cli({"verify", "--graph", path4.string()}) == 2);  // not distance-biregular
}

TEST_CASE("cli search") {
  fs::path out = out_path("search.jsonl");
  REQUIRE(run_cli({"--out", out.string(), "search", "--max-k", "3", "--max-d", "4", "--max-n",
                   "20"}) == 0);
  std::ifstream in(out);
  REQUIRE(in.good());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json hit = json::parse(line);
    CHECK(hit.contains("array"));
    CHECK(hit.contains("n"));
    CHECK(hit.contains("m_property"));
    CHECK(hit.contains("case"));
    ++lines;
  }
  CHECK(lines > 0);
}

TEST_CASE("cli qsd") {
  fs::path out = out_path("qsd.json");
  CHECK(run_cli({"--out", out.string(), "qsd", "--r", "4", "--k", "3", "--lambda", "1", "--y",
                 "1"}) == 1);
  json report = read_json(out);
  CHECK(report["m_property"] == false);
  CHECK(report["array"]["c1"] == json::array({1, 1, 3, 3}));

  CHECK(run_cli({"qsd", "--r", "5", "--k", "5", "--lambda", "4", "--y", "4"}) == 0);
  CHECK(run_cli({"qsd", "--r", "1", "--k", "3", "--lambda", "1", "--y", "1"}) == 2);
  CHECK(run_cli({"qsd", "--r", "4", "--k", "3"}) == 2);  // missing required options
}
