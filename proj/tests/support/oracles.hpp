#pragma once

#include <string>
#include <vector>

#include "flagrec/graph.hpp"

namespace oracles {

// Brute-force references, deliberately written along different lines than the
// library algorithms they cross-check. All assume small graphs (n <= ~14).

// Boundary vertices by enumerating every vertex subset, keeping cliques with
// exactly one common neighbor, and taking the union.
std::vector<std::string> brute_boundary(const flagrec::Graph& g);

// Bridged test straight from the definition: no isometric cycle longer than 3
// (isometric cycles are induced, so subsets suffice).
bool brute_bridged(const flagrec::Graph& g);

// Clique-Helly by enumerating all maximal pairwise-intersecting families of
// maximal cliques and intersecting each.
bool brute_clique_helly(const flagrec::Graph& g);

// Every pairwise-intersecting family of at most `max_size` balls (all centers,
// radii up to the diameter) has a common vertex.
bool ball_helly_up_to(const flagrec::Graph& g, int max_size);

}  // namespace oracles
