#include "support/corpus.hpp"

#include <algorithm>
#include <set>

#include "flagrec/generate.hpp"
#include "flagrec/verify.hpp"
#include "support/fixtures.hpp"

namespace corpus {

using flagrec::GenFamily;
using flagrec::Graph;

std::vector<Graph> helly_graphs() {
  std::vector<Graph> out;
  out.push_back(fixtures::single_vertex());
  out.push_back(fixtures::path3());
  out.push_back(fixtures::triangle());
  out.push_back(fixtures::four_wheel());
  out.push_back(fixtures::king3x3());
  out.push_back(flagrec::gen_king_grid(2, 4));
  out.push_back(flagrec::gen_king_grid(4, 5));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    out.push_back(flagrec::gen_tree(5 + static_cast<int>(seed) * 3, seed));
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    if (auto g = flagrec::gen_filtered(flagrec::GraphClass::Helly, 8, 200, seed)) {
      out.push_back(*g);
    }
  }
  return out;
}

std::vector<Graph> bridged_graphs() {
  std::vector<Graph> out;
  out.push_back(fixtures::single_vertex());
  out.push_back(fixtures::path3());
  out.push_back(fixtures::triangle());
  out.push_back(fixtures::hex_wheel());
  out.push_back(flagrec::gen_triangular_patch(2));
  out.push_back(flagrec::gen_triangular_patch(3));
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    out.push_back(flagrec::gen_chordal(6 + static_cast<int>(seed), 1, 2, seed));
  }
  for (std::uint64_t seed = 21; seed <= 24; ++seed) {
    out.push_back(flagrec::gen_random_region(12, seed));
  }
  return out;
}

std::vector<Graph> weakly_bridged_graphs() {
  auto out = bridged_graphs();
  out.push_back(fixtures::five_wheel());
  return out;
}

std::vector<Graph> systolic_2d_graphs() {
  std::vector<Graph> out;
  out.push_back(fixtures::single_vertex());
  out.push_back(fixtures::path3());
  out.push_back(fixtures::triangle());
  out.push_back(fixtures::hex_wheel());
  for (int radius = 2; radius <= 4; ++radius) {
    out.push_back(flagrec::gen_triangular_patch(radius));
  }
  for (std::uint64_t seed = 31; seed <= 36; ++seed) {
    out.push_back(flagrec::gen_random_region(10 + 3 * static_cast<int>(seed % 5), seed));
  }
  return out;
}

std::vector<Graph> random_connected(int count, int max_n, std::uint64_t seed) {
  flagrec::SplitMix64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    // random spanning tree first, then sprinkle extra edges
    Graph tree = flagrec::gen_tree(n, rng.next());
    auto vertices = tree.labels();
    auto edges = tree.edge_list();
    std::set<std::pair<std::string, std::string>> edge_set(edges.begin(), edges.end());
    int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
    for (int e = 0; e < extra; ++e) {
      int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (a == b) continue;
      auto key = std::minmax(vertices[static_cast<std::size_t>(a)],
                             vertices[static_cast<std::size_t>(b)]);
      edge_set.insert(key);
    }
    out.push_back(Graph::build(
        vertices, std::vector<std::pair<std::string, std::string>>(edge_set.begin(),
                                                                   edge_set.end())));
  }
  return out;
}

}  // namespace corpus
