#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flagrec/errors.hpp"

namespace flagrec {

// Labeled undirected simple graph. Vertices are stored sorted by label, so a
// vertex index doubles as its lexicographic rank; every tie-break in the
// library ("smallest label first") reduces to the smallest index.
class Graph {
 public:
  struct BuildOptions {
    bool allow_disconnected = false;
    bool collapse_duplicate_edges = false;
  };

  Graph() = default;

  static Graph build(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);
  static Graph build(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges,
                     const BuildOptions& options);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  bool has_label(std::string_view label) const;
  // Index of `label`; throws UnknownVertex if absent.
  int index_of(std::string_view label) const;

  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool is_connected() const;

  // Edges as label pairs, each pair sorted, list sorted. Stable serialization order.
  std::vector<std::pair<std::string, std::string>> edge_list() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Pairwise hop distances for an ordered list of vertex labels. Distances are
// measured in the graph the matrix was derived from, not in any subgraph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<std::string> order, std::vector<std::vector<int>> entries);

  std::size_t size() const { return order_.size(); }
  const std::vector<std::string>& order() const { return order_; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  int at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  int at(std::string_view a, std::string_view b) const;
  bool has(std::string_view label) const;
  int position_of(std::string_view label) const;  // throws UnknownVertex

  // Symmetric, zero diagonal, positive off-diagonal, triangle inequality.
  bool is_metric(std::string* why = nullptr) const;

  bool operator==(const DistanceMatrix& other) const {
    return order_ == other.order_ && entries_ == other.entries_;
  }

 private:
  std::vector<std::string> order_;
  std::vector<std::vector<int>> entries_;
  std::unordered_map<std::string, int> position_;
};

struct VertexOrder {
  enum class Kind { BFS, LexBFS };
  std::vector<std::string> sequence;
  Kind kind = Kind::BFS;
};

// Hop distances from `source` to every vertex (indexed by vertex index).
std::vector<int> bfs_distances(const Graph& g, int source);
std::map<std::string, int> bfs_distances(const Graph& g, std::string_view source);

std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

DistanceMatrix distance_matrix(const Graph& g, const std::vector<std::string>& subset);

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& subset);

// Smallest-label vertex v != u with N[u] included in N[v], if any.
std::optional<std::string> dominator_of(const Graph& g, std::string_view u);
std::vector<std::string> dominators_of(const Graph& g, std::string_view u);

VertexOrder bfs_order(const Graph& g, std::string_view root);
VertexOrder lexbfs_order(const Graph& g, std::string_view root);

// All maximal cliques, each sorted by label, list in lexicographic order.
std::vector<std::vector<std::string>> maximal_cliques(const Graph& g);

// Vertices adjacent to every member of `clique`, excluding the clique itself.
std::vector<std::string> common_neighbors(const Graph& g, const std::vector<std::string>& clique);

}  // namespace flagrec
