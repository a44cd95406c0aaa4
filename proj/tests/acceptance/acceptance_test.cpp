// Acceptance suite: one test case and one printed pass/fail line per
// criterion. Run through ctest (-R acceptance) or directly.

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagrec/complex.hpp"
#include "flagrec/generate.hpp"
#include "flagrec/json_io.hpp"
#include "flagrec/reconstruct.hpp"
#include "flagrec/verify.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/subprocess.hpp"

using namespace flagrec;
using nlohmann::json;

namespace {

struct Criterion {
  int number;
  const char* title;
  bool ok = true;

  Criterion(int number, const char* title) : number(number), title(title) {}
  ~Criterion() {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, title);
    std::fflush(stdout);
  }
  void expect(bool condition) {
    ok = ok && condition;
    CHECK(condition);
  }
};

std::map<std::string, std::string> identity_on(const std::vector<std::string>& labels) {
  std::map<std::string, std::string> map;
  for (const auto& label : labels) map.emplace(label, label);
  return map;
}

bool exact_roundtrip(const Graph& hidden, SelectorKind kind) {
  auto instance = boundary_instance(hidden);
  auto result = reconstruct(instance, kind);
  return iso_fixing_boundary(result.graph, hidden, identity_on(instance.boundary)).has_value();
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "flagrec_acceptance";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string kCli = FLAGREC_CLI_PATH;

}  // namespace

TEST_CASE("criterion 1: example fixtures through the command line") {
  Criterion criterion(1, "X1/X2 boundary coincide; helly verify splits them; helly rebuild");
  auto start = std::chrono::steady_clock::now();

  auto x1 = scratch("x1.json", graph_to_json(fixtures::four_wheel()));
  auto x2 = scratch("x2.json", graph_to_json(fixtures::x2_complex()));

  auto b1 = subprocess::run(kCli + " boundary " + x1.string());
  auto b2 = subprocess::run(kCli + " boundary " + x2.string());
  criterion.expect(b1.exit_code == 0);
  criterion.expect(b2.exit_code == 0);
  criterion.expect(b1.out == b2.out);
  auto instance = json::parse(b1.out);
  criterion.expect(instance["boundary"] == json::array({"u1", "u2", "u3", "u4"}));
  criterion.expect(instance["dist"][0][2] == 2);  // d(u1,u3)
  criterion.expect(instance["dist"][1][3] == 2);  // d(u2,u4)

  criterion.expect(subprocess::run(kCli + " verify " + x1.string() + " --class helly")
                       .exit_code == 0);
  criterion.expect(subprocess::run(kCli + " verify " + x2.string() + " --class helly")
                       .exit_code == 1);

  auto instance_file = scratch("square_instance.json", b1.out);
  auto rebuilt = subprocess::run(kCli + " reconstruct " + instance_file.string() +
                                 " --class helly");
  criterion.expect(rebuilt.exit_code == 0);
  auto graph_json = json::parse(rebuilt.out.substr(0, rebuilt.out.find('\n')));
  criterion.expect(graph_json["vertices"].size() == 5);
  criterion.expect(graph_json["edges"].size() == 8);
  Graph parsed = graph_from_json(graph_json.dump(), /*require_external_labels=*/false);
  criterion.expect(iso_fixing_boundary(parsed, fixtures::four_wheel(),
                                       identity_on({"u1", "u2", "u3", "u4"}))
                       .has_value());

  criterion.expect(seconds_since(start) < 1.0);
}

TEST_CASE("criterion 2: tree roundtrips from leaf distances") {
  Criterion criterion(2, "200 random trees, boundary = leaves, exact helly rebuild, < 10 s");
  auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(20260811);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(49));
    Graph tree = gen_tree(n, rng.next());
    auto instance = boundary_instance(tree);
    std::vector<std::string> leaves;
    for (const auto& label : tree.labels()) {
      if (tree.degree(tree.index_of(label)) <= 1) leaves.push_back(label);
    }
    bool boundary_is_leaf_set = instance.boundary == leaves;
    criterion.expect(boundary_is_leaf_set);
    auto result = reconstruct(instance, SelectorKind::Helly);
    criterion.expect(
        iso_fixing_boundary(result.graph, tree, identity_on(instance.boundary)).has_value());
    if (!criterion.ok) break;
  }
  criterion.expect(seconds_since(start) < 10.0);
}

TEST_CASE("criterion 3: Helly roundtrips") {
  Criterion criterion(3, "king grids up to 6x6 and 100 filtered Helly graphs rebuild exactly");
  for (int rows = 1; rows <= 6 && criterion.ok; ++rows) {
    for (int cols = rows; cols <= 6 && criterion.ok; ++cols) {
      criterion.expect(exact_roundtrip(gen_king_grid(rows, cols), SelectorKind::Helly));
    }
  }
  int produced = 0;
  for (std::uint64_t seed = 1; produced < 100 && seed <= 1000 && criterion.ok; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);  // 4..12
    auto g = gen_filtered(GraphClass::Helly, n, 200, seed);
    if (!g) continue;
    ++produced;
    criterion.expect(exact_roundtrip(*g, SelectorKind::Helly));
  }
  criterion.expect(produced == 100);
}

TEST_CASE("criterion 4: two-dimensional systolic roundtrips") {
  Criterion criterion(4, "disks r<=8 and 50 masked patches rebuild exactly, no backtracking");
  for (int radius = 1; radius <= 8 && criterion.ok; ++radius) {
    Graph disk = gen_triangular_patch(radius);
    auto instance = boundary_instance(disk);
    auto result = reconstruct(instance, SelectorKind::Systolic2D);
    criterion.expect(result.stats.backtracks == 0);
    criterion.expect(result.stats.sphere_reprocessed == 0);
    // one peel per hidden vertex; the base vertex survives unpeeled
    criterion.expect(result.stats.steps == disk.vertex_count() - 1);
    criterion.expect(
        iso_fixing_boundary(result.graph, disk, identity_on(instance.boundary)).has_value());
  }
  for (std::uint64_t seed = 1; seed <= 50 && criterion.ok; ++seed) {
    Graph region = gen_random_region(8 + static_cast<int>(seed % 17), seed * 101);
    if (region.vertex_count() < 2) continue;
    auto instance = boundary_instance(region);
    auto result = reconstruct(instance, SelectorKind::Systolic2D);
    criterion.expect(result.stats.backtracks == 0);
    criterion.expect(result.stats.sphere_reprocessed == 0);
    criterion.expect(result.stats.steps == region.vertex_count() - 1);
    criterion.expect(
        iso_fixing_boundary(result.graph, region, identity_on(instance.boundary)).has_value());
  }
}

TEST_CASE("criterion 5: bridged backtracking roundtrips within the vertex cap") {
  Criterion criterion(5, "50 chordal graphs and disks r<=3 rebuild exactly under the entry-sum cap");
  for (std::uint64_t seed = 1; seed <= 50 && criterion.ok; ++seed) {
    int n = 2 + static_cast<int>(seed % 11);  // 2..12
    Graph hidden = gen_chordal(n, 1 + static_cast<int>(seed % 2), 3, seed * 7);
    auto instance = boundary_instance(hidden);
    auto result = reconstruct(instance, SelectorKind::SystolicBacktracking);
    criterion.expect(result.graph.vertex_count() <= vertex_budget(instance));
    criterion.expect(
        iso_fixing_boundary(result.graph, hidden, identity_on(instance.boundary)).has_value());
  }
  for (int radius = 1; radius <= 3 && criterion.ok; ++radius) {
    Graph disk = gen_triangular_patch(radius);
    auto instance = boundary_instance(disk);
    auto result = reconstruct(instance, SelectorKind::SystolicBacktracking);
    criterion.expect(result.graph.vertex_count() <= vertex_budget(instance));
    criterion.expect(
        iso_fixing_boundary(result.graph, disk, identity_on(instance.boundary)).has_value());
  }
}

TEST_CASE("criterion 6: structural invariants on class corpora") {
  Criterion criterion(6, "dismantling orders, dominated far spheres, boundary inclusions");
  // BFS orders dismantle bridged graphs
  for (const auto& g : corpus::bridged_graphs()) {
    for (const auto& root : g.labels()) {
      criterion.expect(is_dismantling_order(g, bfs_order(g, root).sequence));
    }
  }
  // LexBFS orders dismantle weakly bridged graphs
  for (const auto& g : corpus::weakly_bridged_graphs()) {
    for (const auto& root : g.labels()) {
      criterion.expect(is_dismantling_order(g, lexbfs_order(g, root).sequence));
    }
  }
  // every farthest vertex of a Helly graph is dominated
  for (const auto& g : corpus::helly_graphs()) {
    if (g.vertex_count() == 1) continue;
    for (const auto& z : g.labels()) {
      auto dist = bfs_distances(g, z);
      int ecc = 0;
      for (const auto& [label, d] : dist) ecc = std::max(ecc, d);
      for (const auto& far : sphere(g, z, ecc)) {
        criterion.expect(dominator_of(g, far).has_value());
      }
    }
  }
  // farthest sphere lies in the boundary on (weakly) systolic graphs
  for (const auto& g : corpus::weakly_bridged_graphs()) {
    if (g.vertex_count() == 1) continue;
    auto boundary = boundary_vertices(g);
    std::set<std::string> boundary_set(boundary.begin(), boundary.end());
    for (const auto& z : g.labels()) {
      auto dist = bfs_distances(g, z);
      int ecc = 0;
      for (const auto& [label, d] : dist) ecc = std::max(ecc, d);
      for (const auto& far : sphere(g, z, ecc)) {
        criterion.expect(boundary_set.count(far) > 0);
      }
    }
  }
  // dominated neighborhoods sit inside the boundary (any complex)
  {
    auto graphs = corpus::random_connected(25, 9, 606);
    auto helly = corpus::helly_graphs();
    graphs.insert(graphs.end(), helly.begin(), helly.end());
    for (const auto& g : graphs) {
      if (g.vertex_count() == 1) continue;
      auto boundary = boundary_vertices(g);
      std::set<std::string> boundary_set(boundary.begin(), boundary.end());
      for (const auto& u : g.labels()) {
        auto dominators = dominators_of(g, u);
        if (dominators.empty()) continue;
        int ui = g.index_of(u);
        criterion.expect(boundary_set.count(u) > 0);
        for (const auto& v : dominators) {
          for (int w : g.neighbors(ui)) {
            if (g.label(w) != v) criterion.expect(boundary_set.count(g.label(w)) > 0);
          }
        }
      }
    }
  }
  // cliques in spheres of bridged graphs have nonempty lower cliques
  for (const auto& g : corpus::bridged_graphs()) {
    auto pairs = all_pairs_distances(g);
    for (int x = 0; x < g.vertex_count() && criterion.ok; ++x) {
      int ecc = *std::max_element(pairs[x].begin(), pairs[x].end());
      for (int k = 1; k <= ecc; ++k) {
        std::vector<int> shell;
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (pairs[x][v] == k) shell.push_back(v);
        }
        std::vector<std::vector<int>> stack;
        for (int v : shell) stack.push_back({v});
        while (!stack.empty()) {
          auto clique = stack.back();
          stack.pop_back();
          std::vector<int> lower;
          for (int y = 0; y < g.vertex_count(); ++y) {
            if (pairs[x][y] != k - 1) continue;
            bool joined = true;
            for (int m : clique) {
              if (!g.adjacent(y, m)) {
                joined = false;
                break;
              }
            }
            if (joined) lower.push_back(y);
          }
          criterion.expect(!lower.empty());
          for (std::size_t i = 0; i < lower.size(); ++i) {
            for (std::size_t j = i + 1; j < lower.size(); ++j) {
              criterion.expect(g.adjacent(lower[i], lower[j]));
            }
          }
          for (int v : shell) {
            if (v <= clique.back()) continue;
            bool joins = true;
            for (int m : clique) {
              if (!g.adjacent(v, m)) {
                joins = false;
                break;
              }
            }
            if (joins) {
              auto bigger = clique;
              bigger.push_back(v);
              stack.push_back(bigger);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("criterion 7: oracle equivalence on 500 random graphs") {
  Criterion criterion(7, "bridged, boundary and clique-Helly all match brute force");
  auto graphs = corpus::random_connected(500, 10, 314159);
  for (const auto& g : graphs) {
    bool bridged_match = is_bridged(g).verdict == oracles::brute_bridged(g);
    bool boundary_match = boundary_vertices(g) == oracles::brute_boundary(g);
    bool helly_match = is_clique_helly(g).verdict == oracles::brute_clique_helly(g);
    criterion.expect(bridged_match);
    criterion.expect(boundary_match);
    criterion.expect(helly_match);
    if (!(bridged_match && boundary_match && helly_match)) break;
  }
}

TEST_CASE("criterion 8: reconstruction cost scales like boundary size times edges") {
  Criterion criterion(8, "elapsed/(n0*m) within 4x across scales (informational)");
  auto measure = [](const Graph& hidden, SelectorKind kind) {
    auto instance = boundary_instance(hidden);
    double total_ms = 0.0;
    int runs = 0;
    auto start = std::chrono::steady_clock::now();
    do {
      auto result = reconstruct(instance, kind);
      total_ms += result.stats.elapsed_ms;
      ++runs;
    } while (runs < 100 && seconds_since(start) < 0.25);
    double per = (total_ms / runs) /
                 (static_cast<double>(instance.boundary.size()) *
                  static_cast<double>(hidden.edge_count()));
    return per;
  };

  std::vector<double> disk_costs;
  for (int radius : {2, 4, 8, 16}) {
    disk_costs.push_back(measure(gen_triangular_patch(radius), SelectorKind::Systolic2D));
  }
  std::vector<double> grid_costs;
  for (int side : {4, 8, 16}) {
    grid_costs.push_back(measure(gen_king_grid(side, side), SelectorKind::Helly));
  }
  auto ratio = [](const std::vector<double>& costs) {
    auto [lo, hi] = std::minmax_element(costs.begin(), costs.end());
    return *hi / *lo;
  };
  double disk_ratio = ratio(disk_costs);
  double grid_ratio = ratio(grid_costs);
  std::printf("  disks r in {2,4,8,16}: elapsed/(n0*m) spread %.2fx; king grids side {4,8,16}:"
              " spread %.2fx (limit 4x, informational)\n",
              disk_ratio, grid_ratio);
  // informational threshold: report, do not gate
  WARN_MESSAGE(disk_ratio <= 4.0, "disk cost spread ", disk_ratio, "x exceeds 4x");
  WARN_MESSAGE(grid_ratio <= 4.0, "grid cost spread ", grid_ratio, "x exceeds 4x");
  criterion.ok = criterion.ok && disk_ratio <= 4.0 && grid_ratio <= 4.0;
  criterion.expect(true);  // timing spreads never gate correctness
}
