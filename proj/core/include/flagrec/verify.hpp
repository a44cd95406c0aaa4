#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagrec/graph.hpp"

namespace flagrec {

enum class GraphClass {
  WeaklyModular,
  Bridged,
  WeaklyBridged,
  Systolic2D,
  CliqueHelly,
  Dismantlable,
  Helly,
};

const char* graph_class_name(GraphClass cls);
std::optional<GraphClass> graph_class_from_name(std::string_view name);

// Counterexample attached to a negative verdict. `vertices` carries condition
// tuples, induced cycles, K4s and residual vertex sets; `cliques` carries a
// pairwise-intersecting maximal-clique family with empty total intersection.
struct Witness {
  enum class Kind {
    TriangleCondition,
    QuadrangleCondition,
    InducedCycle,
    KFour,
    CliqueFamily,
    Residual,
  };
  Kind kind;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> cliques;
};

const char* witness_kind_name(Witness::Kind kind);

struct ClassReport {
  GraphClass graph_class;
  bool verdict = false;
  std::optional<std::vector<std::string>> certificate;  // dismantling order, survivor first
  std::optional<Witness> witness;
};

struct TriangleConditionWitness {
  std::string v, x, y;
};
struct QuadrangleConditionWitness {
  std::string v, x, y, u;
};

// First violating tuple in label order, or empty when the condition holds.
std::optional<TriangleConditionWitness> check_triangle_condition(const Graph& g);
std::optional<QuadrangleConditionWitness> check_quadrangle_condition(const Graph& g);

// An induced cycle of exactly `length` (4 or 5), canonically rotated so the
// smallest vertex comes first, or empty.
std::optional<std::vector<std::string>> find_induced_cycle(const Graph& g, int length);

std::optional<std::vector<std::string>> find_k4(const Graph& g);

ClassReport is_weakly_modular(const Graph& g);
ClassReport is_bridged(const Graph& g);
ClassReport is_weakly_bridged(const Graph& g);
ClassReport is_systolic_2d(const Graph& g);
ClassReport is_clique_helly(const Graph& g);
ClassReport is_dismantlable(const Graph& g);
ClassReport is_helly(const Graph& g);

ClassReport verify_class(const Graph& g, GraphClass cls);

// True iff each order element past the first is dominated, within the prefix
// subgraph, by an earlier neighbor. Throws OrderNotPermutation.
bool is_dismantling_order(const Graph& g, const std::vector<std::string>& order);

}  // namespace flagrec
