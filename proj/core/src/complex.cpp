#include "flagrec/complex.hpp"

#include <algorithm>

namespace flagrec {

namespace {

// Enumerates every clique of g exactly once (members ascending) along with its
// set of common neighbors, and hands cliques with a unique extension to `sink`.
template <typename Sink>
void scan_cliques(const Graph& g, std::vector<int>& clique, const std::vector<int>& extensions,
                  Sink&& sink) {
  if (extensions.size() == 1) {
    sink(clique, extensions[0]);
  }
  for (int w : extensions) {
    if (w <= clique.back()) continue;
    std::vector<int> next;
    for (int x : extensions) {
      if (x != w && g.adjacent(x, w)) next.push_back(x);
    }
    clique.push_back(w);
    scan_cliques(g, clique, next, sink);
    clique.pop_back();
  }
}

template <typename Sink>
void for_each_boundary_seed(const Graph& g, Sink&& sink) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> clique{v};
    scan_cliques(g, clique, g.neighbors(v), sink);
  }
}

}  // namespace

std::vector<std::string> boundary_vertices(const Graph& g) {
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "boundary needs a connected graph");
  if (g.vertex_count() == 1) {
    return {g.label(0)};  // a single 0-simplex is its own boundary
  }
  std::vector<char> in_boundary(static_cast<std::size_t>(g.vertex_count()), 0);
  for_each_boundary_seed(g, [&](const std::vector<int>& clique, int) {
    for (int v : clique) in_boundary[static_cast<std::size_t>(v)] = 1;
  });
  std::vector<std::string> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_boundary[static_cast<std::size_t>(v)]) out.push_back(g.label(v));
  }
  return out;
}

std::vector<SimplexWitness> boundary_seed_simplices(const Graph& g) {
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "boundary needs a connected graph");
  std::vector<SimplexWitness> out;
  if (g.vertex_count() == 1) {
    out.push_back({{g.label(0)}, std::nullopt});
    return out;
  }
  for_each_boundary_seed(g, [&](const std::vector<int>& clique, int extension) {
    SimplexWitness witness;
    for (int v : clique) witness.simplex.push_back(g.label(v));
    witness.unique_cofacet_extension = g.label(extension);
    out.push_back(std::move(witness));
  });
  std::sort(out.begin(), out.end(), [](const SimplexWitness& a, const SimplexWitness& b) {
    return a.simplex < b.simplex;
  });
  return out;
}

BoundaryInstance boundary_instance(const Graph& g) {
  auto labels = boundary_vertices(g);
  if (labels.empty()) {
    fail(ErrorCode::EmptyBoundary, "complex has an empty combinatorial boundary");
  }
  BoundaryInstance instance;
  instance.boundary = labels;
  instance.dist = distance_matrix(g, labels);
  return instance;
}

std::vector<std::string> sphere(const Graph& g, std::string_view center, int radius) {
  auto dist = bfs_distances(g, g.index_of(center));
  std::vector<std::string> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[static_cast<std::size_t>(v)] == radius) out.push_back(g.label(v));
  }
  return out;
}

}  // namespace flagrec
