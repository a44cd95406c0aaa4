#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "support/subprocess.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kCli = FLAGREC_CLI_PATH;

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "flagrec_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kFourWheel =
    R"({"vertices":["u1","u2","u3","u4","z"],"edges":[["u1","u2"],["u2","u3"],["u3","u4"],["u4","u1"],["z","u1"],["z","u2"],["z","u3"],["z","u4"]]})";

const char* kOctahedron =
    R"({"vertices":["a1","a2","b1","b2","c1","c2"],"edges":[["a1","b1"],["a1","b2"],["a1","c1"],["a1","c2"],["a2","b1"],["a2","b2"],["a2","c1"],["a2","c2"],["b1","c1"],["b1","c2"],["b2","c1"],["b2","c2"]]})";

std::string first_line(const std::string& text) {
  auto pos = text.find('\n');
  return pos == std::string::npos ? text : text.substr(0, pos);
}

std::string second_line(const std::string& text) {
  auto pos = text.find('\n');
  REQUIRE(pos != std::string::npos);
  return first_line(text.substr(pos + 1));
}

}  // namespace

TEST_CASE("boundary command") {
  auto graph = write_file("wheel.json", kFourWheel);
  auto result = subprocess::run(kCli + " boundary " + graph.string());
  CHECK(result.exit_code == 0);
  auto parsed = json::parse(result.out);
  CHECK(parsed["boundary"] == json::array({"u1", "u2", "u3", "u4"}));
  CHECK(parsed["dist"][0][2] == 2);

  auto empty = write_file("octahedron.json", kOctahedron);
  CHECK(subprocess::run(kCli + " boundary " + empty.string()).exit_code == 3);

  auto bad = write_file("bad.json", "{not json");
  CHECK(subprocess::run(kCli + " boundary " + bad.string()).exit_code == 2);

  auto bad_label = write_file("bad_label.json",
                              R"({"vertices":["_a","b"],"edges":[["_a","b"]]})");
  CHECK(subprocess::run(kCli + " boundary " + bad_label.string()).exit_code == 2);

  auto dup_edge = write_file("dup.json",
                             R"({"vertices":["a","b"],"edges":[["a","b"],["a","b"]]})");
  CHECK(subprocess::run(kCli + " boundary " + dup_edge.string()).exit_code == 2);
}

TEST_CASE("verify command") {
  auto graph = write_file("wheel_v.json", kFourWheel);
  auto accepted = subprocess::run(kCli + " verify " + graph.string() + " --class helly");
  CHECK(accepted.exit_code == 0);
  CHECK(json::parse(accepted.out)["verdict"] == true);

  auto rejected = subprocess::run(kCli + " verify " + graph.string() + " --class bridged");
  CHECK(rejected.exit_code == 1);
  auto parsed = json::parse(rejected.out);
  CHECK(parsed["verdict"] == false);
  CHECK(parsed["witness"]["kind"] == "induced-cycle");

  CHECK(subprocess::run(kCli + " verify " + graph.string() + " --class nonsense").exit_code == 2);
}

TEST_CASE("reconstruct command") {
  auto graph = write_file("wheel_r.json", kFourWheel);
  auto instance_path = (scratch_dir() / "wheel_instance.json").string();
  CHECK(subprocess::run(kCli + " boundary " + graph.string() + " --out " + instance_path)
            .exit_code == 0);

  auto result = subprocess::run(kCli + " reconstruct " + instance_path + " --class helly");
  CHECK(result.exit_code == 0);
  auto rebuilt = json::parse(first_line(result.out));
  CHECK(rebuilt["vertices"].size() == 5);
  CHECK(rebuilt["edges"].size() == 8);
  auto stats = json::parse(second_line(result.out));
  CHECK(stats["steps"] == 4);
  CHECK(stats["backtracks"] == 0);
  CHECK(stats.contains("elapsed_ms"));

  CHECK(subprocess::run(kCli + " reconstruct " + instance_path + " --class systolic")
            .exit_code == 4);

  auto broken = write_file("broken_instance.json", R"({"boundary":["a","b"],"dist":[[0,2],[1,0]]})");
  CHECK(subprocess::run(kCli + " reconstruct " + broken.string() + " --class helly").exit_code ==
        2);
}

TEST_CASE("generate and roundtrip commands") {
  auto tree = subprocess::run(kCli + " generate --family tree --n 9 --seed 4");
  CHECK(tree.exit_code == 0);
  CHECK(json::parse(tree.out)["vertices"].size() == 9);

  // identical spec, identical bytes
  auto again = subprocess::run(kCli + " generate --family tree --n 9 --seed 4");
  CHECK(tree.out == again.out);

  auto spec = write_file("spec.json", R"({"family":"king-grid","rows":2,"cols":3})");
  auto grid = subprocess::run(kCli + " generate --spec " + spec.string());
  CHECK(grid.exit_code == 0);
  CHECK(json::parse(grid.out)["vertices"].size() == 6);

  CHECK(subprocess::run(kCli + " roundtrip --family tree --n 18 --seed 5 --class helly")
            .exit_code == 0);
  CHECK(subprocess::run(kCli +
                        " roundtrip --family triangular-patch --radius 2 --class systolic2d")
            .exit_code == 0);
}

TEST_CASE("bench command emits csv") {
  auto csv = (scratch_dir() / "bench.csv").string();
  auto run = subprocess::run(kCli + " bench --family king-grid --scale-list 2,3 --class helly" +
                             " --out " + csv);
  CHECK(run.exit_code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "family,scale,n0,n,m,steps,elapsed_ms,elapsed_per_n0m");
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2);
}
