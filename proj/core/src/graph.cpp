#include "flagrec/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace flagrec {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Graph Graph::build(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  return build(vertices, edges, BuildOptions{});
}

Graph Graph::build(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges,
                   const BuildOptions& options) {
  Graph g;
  if (vertices.empty()) {
    fail(ErrorCode::Disconnected, "graph needs at least one vertex");
  }
  g.labels_ = vertices;
  std::sort(g.labels_.begin(), g.labels_.end());
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    if (g.labels_[i].empty()) {
      fail(ErrorCode::BadLabel, "empty vertex label");
    }
    if (i > 0 && g.labels_[i] == g.labels_[i - 1]) {
      fail(ErrorCode::DuplicateLabel, g.labels_[i]);
    }
    g.index_.emplace(g.labels_[i], static_cast<int>(i));
  }
  g.adjacency_.assign(g.labels_.size(), {});

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = g.index_.find(a);
    auto ib = g.index_.find(b);
    if (ia == g.index_.end()) fail(ErrorCode::UnknownEndpoint, a);
    if (ib == g.index_.end()) fail(ErrorCode::UnknownEndpoint, b);
    if (ia->second == ib->second) fail(ErrorCode::SelfLoop, a);
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second) {
      if (options.collapse_duplicate_edges) continue;
      fail(ErrorCode::DuplicateEdge, a + "-" + b);
    }
    g.adjacency_[static_cast<std::size_t>(ia->second)].push_back(ib->second);
    g.adjacency_[static_cast<std::size_t>(ib->second)].push_back(ia->second);
  }
  g.edge_count_ = seen.size();
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  if (!options.allow_disconnected && !g.is_connected()) {
    fail(ErrorCode::Disconnected, "input graph is not connected");
  }
  return g;
}

bool Graph::has_label(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

int Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) fail(ErrorCode::UnknownVertex, std::string(label));
  return it->second;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
  if (labels_.empty()) return false;
  std::vector<char> seen(labels_.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == labels_.size();
}

std::vector<std::pair<std::string, std::string>> Graph::edge_list() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edge_count_);
  for (int v = 0; v < vertex_count(); ++v) {
    for (int w : neighbors(v)) {
      if (v < w) out.emplace_back(label(v), label(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> order,
                               std::vector<std::vector<int>> entries)
    : order_(std::move(order)), entries_(std::move(entries)) {
  if (entries_.size() != order_.size()) {
    fail(ErrorCode::InconsistentMatrix, "matrix row count does not match label count");
  }
  for (const auto& row : entries_) {
    if (row.size() != order_.size()) {
      fail(ErrorCode::InconsistentMatrix, "matrix is not square");
    }
  }
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (!position_.emplace(order_[i], static_cast<int>(i)).second) {
      fail(ErrorCode::DuplicateLabel, order_[i]);
    }
  }
}

int DistanceMatrix::at(std::string_view a, std::string_view b) const {
  return entries_[static_cast<std::size_t>(position_of(a))]
                 [static_cast<std::size_t>(position_of(b))];
}

bool DistanceMatrix::has(std::string_view label) const {
  return position_.find(std::string(label)) != position_.end();
}

int DistanceMatrix::position_of(std::string_view label) const {
  auto it = position_.find(std::string(label));
  if (it == position_.end()) fail(ErrorCode::UnknownVertex, std::string(label));
  return it->second;
}

bool DistanceMatrix::is_metric(std::string* why) const {
  const std::size_t n = order_.size();
  auto report = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 0) return report("nonzero diagonal at " + order_[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries_[i][j] != entries_[j][i]) {
        return report("asymmetric entry " + order_[i] + "," + order_[j]);
      }
      if (entries_[i][j] <= 0) {
        return report("non-positive off-diagonal " + order_[i] + "," + order_[j]);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (entries_[i][j] > entries_[i][k] + entries_[k][j]) {
          return report("triangle inequality fails for " + order_[i] + "," + order_[j] + "," +
                        order_[k]);
        }
      }
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::map<std::string, int> bfs_distances(const Graph& g, std::string_view source) {
  auto dist = bfs_distances(g, g.index_of(source));
  std::map<std::string, int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.emplace(g.label(v), dist[static_cast<std::size_t>(v)]);
  }
  return out;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.push_back(bfs_distances(g, v));
  }
  return out;
}

DistanceMatrix distance_matrix(const Graph& g, const std::vector<std::string>& subset) {
  std::vector<int> indices;
  indices.reserve(subset.size());
  std::set<int> distinct;
  for (const auto& label : subset) {
    int v = g.index_of(label);
    if (!distinct.insert(v).second) fail(ErrorCode::DuplicateLabel, label);
    indices.push_back(v);
  }
  std::vector<std::vector<int>> entries(subset.size(), std::vector<int>(subset.size(), 0));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    auto dist = bfs_distances(g, indices[i]);
    for (std::size_t j = 0; j < indices.size(); ++j) {
      entries[i][j] = dist[static_cast<std::size_t>(indices[j])];
    }
  }
  return DistanceMatrix(subset, std::move(entries));
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& subset) {
  std::set<int> keep;
  for (const auto& label : subset) {
    keep.insert(g.index_of(label));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v : keep) {
    for (int w : g.neighbors(v)) {
      if (v < w && keep.count(w)) edges.emplace_back(g.label(v), g.label(w));
    }
  }
  std::vector<std::string> labels(subset.begin(), subset.end());
  return Graph::build(labels, edges, {.allow_disconnected = true});
}

std::vector<std::string> dominators_of(const Graph& g, std::string_view u) {
  int ui = g.index_of(u);
  std::vector<std::string> out;
  for (int v : g.neighbors(ui)) {
    bool covers = true;
    for (int w : g.neighbors(ui)) {
      if (w != v && !g.adjacent(w, v)) {
        covers = false;
        break;
      }
    }
    if (covers) out.push_back(g.label(v));
  }
  return out;  // neighbor lists are label-sorted already
}

std::optional<std::string> dominator_of(const Graph& g, std::string_view u) {
  auto all = dominators_of(g, u);
  if (all.empty()) return std::nullopt;
  return all.front();
}

VertexOrder bfs_order(const Graph& g, std::string_view root) {
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "BFS order needs a connected graph");
  auto dist = bfs_distances(g, g.index_of(root));
  std::vector<int> vertices(static_cast<std::size_t>(g.vertex_count()));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::stable_sort(vertices.begin(), vertices.end(), [&](int a, int b) {
    return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
  });
  VertexOrder order;
  order.kind = VertexOrder::Kind::BFS;
  order.sequence.reserve(vertices.size());
  for (int v : vertices) order.sequence.push_back(g.label(v));
  return order;
}

VertexOrder lexbfs_order(const Graph& g, std::string_view root) {
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "LexBFS order needs a connected graph");
  const int n = g.vertex_count();
  int start = g.index_of(root);
  // visit positions of already-numbered neighbors, ascending; earlier
  // positions weigh more, longer records beat prefixes.
  std::vector<std::vector<int>> record(static_cast<std::size_t>(n));
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  VertexOrder order;
  order.kind = VertexOrder::Kind::LexBFS;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    if (step == 0) {
      best = start;
    } else {
      for (int v = 0; v < n; ++v) {
        if (numbered[static_cast<std::size_t>(v)]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        const auto& a = record[static_cast<std::size_t>(v)];
        const auto& b = record[static_cast<std::size_t>(best)];
        auto mismatch = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
        bool better;
        if (mismatch.first != a.end() && mismatch.second != b.end()) {
          better = *mismatch.first < *mismatch.second;
        } else {
          better = a.size() > b.size();  // proper prefix loses; equal keeps smaller label
        }
        if (better) best = v;
      }
    }
    numbered[static_cast<std::size_t>(best)] = 1;
    order.sequence.push_back(g.label(best));
    for (int w : g.neighbors(best)) {
      if (!numbered[static_cast<std::size_t>(w)]) {
        record[static_cast<std::size_t>(w)].push_back(step);
      }
    }
  }
  return order;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& current, std::vector<int> candidates,
                   std::vector<int> excluded, std::vector<std::vector<int>>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(current);
    return;
  }
  int pivot = -1;
  std::size_t best_cover = 0;
  for (const auto& pool : {candidates, excluded}) {
    for (int v : pool) {
      std::size_t cover = sorted_intersection(candidates, g.neighbors(v)).size();
      if (pivot < 0 || cover > best_cover) {
        pivot = v;
        best_cover = cover;
      }
    }
  }
  std::vector<int> branch;
  for (int v : candidates) {
    if (pivot < 0 || !g.adjacent(pivot, v)) branch.push_back(v);
  }
  for (int v : branch) {
    current.push_back(v);
    bron_kerbosch(g, current, sorted_intersection(candidates, g.neighbors(v)),
                  sorted_intersection(excluded, g.neighbors(v)), out);
    current.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
  }
}

}  // namespace

std::vector<std::vector<std::string>> maximal_cliques(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> found;
  std::vector<int> current;
  bron_kerbosch(g, current, all, {}, found);
  std::vector<std::vector<std::string>> out;
  out.reserve(found.size());
  for (auto& clique : found) {
    std::sort(clique.begin(), clique.end());
    std::vector<std::string> labels;
    labels.reserve(clique.size());
    for (int v : clique) labels.push_back(g.label(v));
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> common_neighbors(const Graph& g, const std::vector<std::string>& clique) {
  if (clique.empty()) fail(ErrorCode::NotAClique, "empty vertex set");
  std::vector<int> members;
  members.reserve(clique.size());
  for (const auto& label : clique) members.push_back(g.index_of(label));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j] || !g.adjacent(members[i], members[j])) {
        fail(ErrorCode::NotAClique, clique[i] + "," + clique[j]);
      }
    }
  }
  std::vector<int> shared = g.neighbors(members[0]);
  for (std::size_t i = 1; i < members.size(); ++i) {
    shared = sorted_intersection(shared, g.neighbors(members[i]));
  }
  std::vector<std::string> out;
  for (int v : shared) {
    if (std::find(members.begin(), members.end(), v) == members.end()) {
      out.push_back(g.label(v));
    }
  }
  return out;
}

}  // namespace flagrec
