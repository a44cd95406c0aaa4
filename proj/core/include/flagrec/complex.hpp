#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagrec/graph.hpp"

namespace flagrec {

// Everything in this header views a connected graph as the 1-skeleton of its
// clique (flag) complex; simplices are exactly the cliques.

// Boundary vertex labels plus their pairwise distances in the full graph.
struct BoundaryInstance {
  std::vector<std::string> boundary;
  DistanceMatrix dist;
};

// A clique together with the single vertex extending it to a larger clique,
// when that extension is unique; such cliques seed the boundary.
struct SimplexWitness {
  std::vector<std::string> simplex;
  std::optional<std::string> unique_cofacet_extension;
};

// Vertices of the combinatorial boundary: all vertices lying in some clique
// with exactly one common neighbor. A one-vertex complex is its own boundary.
std::vector<std::string> boundary_vertices(const Graph& g);

// The cliques witnessing boundary membership, smallest-first.
std::vector<SimplexWitness> boundary_seed_simplices(const Graph& g);

// Boundary labels in lexicographic order with distances measured in g.
// Throws EmptyBoundary when no vertex qualifies.
BoundaryInstance boundary_instance(const Graph& g);

std::vector<std::string> sphere(const Graph& g, std::string_view center, int radius);

}  // namespace flagrec
