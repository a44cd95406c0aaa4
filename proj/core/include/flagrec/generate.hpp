#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagrec/graph.hpp"
#include "flagrec/verify.hpp"

namespace flagrec {

// SplitMix64: tiny, portable, seeded generator so corpora are reproducible
// bit-for-bit across platforms and implementations.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

enum class GenFamily { Tree, KingGrid, TriangularPatch, Chordal, Wheel, FilteredRandom };

const char* gen_family_name(GenFamily family);
std::optional<GenFamily> gen_family_from_name(std::string_view name);

// Family and integer parameters fully determine the output graph.
struct GenSpec {
  GenFamily family = GenFamily::Tree;
  int n = 0;
  int rows = 0;
  int cols = 0;
  int radius = 0;
  int tri_count = 0;  // triangular-patch masked-region size; 0 means disk of `radius`
  int density_num = 1;
  int density_den = 2;
  GraphClass filter_class = GraphClass::Helly;
  int attempts = 100;
  std::uint64_t seed = 0;
};

// Random labeled tree by sequential random attachment. Trees are both Helly
// and bridged.
Graph gen_tree(int n, std::uint64_t seed);

// Strong product of two paths: horizontal, vertical and diagonal adjacencies.
Graph gen_king_grid(int rows, int cols);

// Hexagonal disk of the triangular lattice; radius 1 is the hexagonal wheel.
Graph gen_triangular_patch(int radius);

// One lattice triangle; `up` selects the orientation at cell (q, r).
struct TriCell {
  int q = 0;
  int r = 0;
  bool up = true;
};

// 1-skeleton of the given set of lattice triangles. The mask must span a
// connected, simply connected region (Euler characteristic V - E + F = 1,
// faces counted in the clique complex); otherwise MaskNotSimplyConnected.
Graph gen_triangular_region(const std::vector<TriCell>& mask);

// Seeded random simply connected region grown triangle by triangle.
Graph gen_random_region(int tri_count, std::uint64_t seed);

// Random chordal graph: each new vertex is attached to a clique of the
// current graph, so the insertion order reversed is a perfect elimination
// ordering. Density steers the attachment clique size.
Graph gen_chordal(int n, int density_num, int density_den, std::uint64_t seed);

// Cycle of `rim` vertices plus an apex adjacent to all of them.
Graph gen_wheel(int rim);

// Seeded perturbations of class-appropriate family outputs, kept only when
// the class verifier accepts; empty after `attempts` rejections.
std::optional<Graph> gen_filtered(GraphClass cls, int n, int attempts, std::uint64_t seed);

Graph generate(const GenSpec& spec);

}  // namespace flagrec
