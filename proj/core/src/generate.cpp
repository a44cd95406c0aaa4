#include "flagrec/generate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace flagrec {

const char* gen_family_name(GenFamily family) {
  switch (family) {
    case GenFamily::Tree: return "tree";
    case GenFamily::KingGrid: return "king-grid";
    case GenFamily::TriangularPatch: return "triangular-patch";
    case GenFamily::Chordal: return "chordal";
    case GenFamily::Wheel: return "wheel";
    case GenFamily::FilteredRandom: return "filtered";
  }
  return "unknown";
}

std::optional<GenFamily> gen_family_from_name(std::string_view name) {
  for (GenFamily family : {GenFamily::Tree, GenFamily::KingGrid, GenFamily::TriangularPatch,
                           GenFamily::Chordal, GenFamily::Wheel, GenFamily::FilteredRandom}) {
    if (name == gen_family_name(family)) return family;
  }
  return std::nullopt;
}

namespace {

std::string padded(int value, int width) {
  std::string digits = std::to_string(value);
  while (static_cast<int>(digits.size()) < width) digits.insert(digits.begin(), '0');
  return digits;
}

int width_for(int max_value) {
  return static_cast<int>(std::to_string(std::max(max_value, 0)).size());
}

}  // namespace

Graph gen_tree(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::ParseError, "tree needs n >= 1");
  SplitMix64 rng(seed);
  int width = width_for(n - 1);
  std::vector<std::string> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices.push_back("v" + padded(i, width));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
    edges.emplace_back(vertices[static_cast<std::size_t>(parent)],
                       vertices[static_cast<std::size_t>(i)]);
  }
  return Graph::build(vertices, edges);
}

Graph gen_king_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) fail(ErrorCode::ParseError, "king grid needs rows, cols >= 1");
  int rw = width_for(rows - 1);
  int cw = width_for(cols - 1);
  auto name = [&](int r, int c) { return "r" + padded(r, rw) + "c" + padded(c, cw); };
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      vertices.push_back(name(r, c));
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          int nr = r + dr, nc = c + dc;
          if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
          if (std::make_pair(nr, nc) < std::make_pair(r, c)) continue;  // emit each edge once
          edges.emplace_back(name(r, c), name(nr, nc));
        }
      }
    }
  }
  return Graph::build(vertices, edges);
}

namespace {

// Shared triangular-lattice plumbing. Lattice points (x, y) are adjacent to
// (x+-1, y), (x, y+-1), (x+1, y-1), (x-1, y+1).
const std::pair<int, int> kLatticeSteps[6] = {{1, 0},  {-1, 0}, {0, 1},
                                              {0, -1}, {1, -1}, {-1, 1}};

Graph lattice_graph(const std::set<std::pair<int, int>>& points,
                    const std::set<std::pair<std::pair<int, int>, std::pair<int, int>>>& links) {
  int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;
  for (const auto& [x, y] : points) {
    if (first || x < min_x) min_x = x;
    if (first || y < min_y) min_y = y;
    if (first || x > max_x) max_x = x;
    if (first || y > max_y) max_y = y;
    first = false;
  }
  int xw = width_for(max_x - min_x);
  int yw = width_for(max_y - min_y);
  auto name = [&](const std::pair<int, int>& p) {
    return "t" + padded(p.first - min_x, xw) + "x" + padded(p.second - min_y, yw);
  };
  std::vector<std::string> vertices;
  vertices.reserve(points.size());
  for (const auto& p : points) vertices.push_back(name(p));
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(links.size());
  for (const auto& [a, b] : links) edges.emplace_back(name(a), name(b));
  return Graph::build(vertices, edges);
}

struct RegionShape {
  std::set<std::pair<int, int>> points;
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> links;

  void add_edge(std::pair<int, int> a, std::pair<int, int> b) {
    points.insert(a);
    points.insert(b);
    if (b < a) std::swap(a, b);
    links.insert({a, b});
  }

  void add_cell(const TriCell& cell) {
    std::pair<int, int> a{cell.q, cell.r};
    std::pair<int, int> b{cell.q + 1, cell.r};
    std::pair<int, int> c{cell.q, cell.r + 1};
    if (!cell.up) {
      a = {cell.q + 1, cell.r};
      b = {cell.q, cell.r + 1};
      c = {cell.q + 1, cell.r + 1};
    }
    add_edge(a, b);
    add_edge(a, c);
    add_edge(b, c);
  }

  bool connected() const {
    if (points.empty()) return false;
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adj;
    for (const auto& [a, b] : links) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::set<std::pair<int, int>> seen{*points.begin()};
    std::vector<std::pair<int, int>> stack{*points.begin()};
    while (!stack.empty()) {
      auto p = stack.back();
      stack.pop_back();
      for (const auto& q : adj[p]) {
        if (seen.insert(q).second) stack.push_back(q);
      }
    }
    return seen.size() == points.size();
  }

  // Triangles of the 1-skeleton (clique-complex faces), not just mask cells:
  // three pairwise linked lattice points always span a lattice face.
  long long face_count() const {
    long long faces = 0;
    for (const auto& [a, b] : links) {
      for (const auto& step : kLatticeSteps) {
        std::pair<int, int> c{a.first + step.first, a.second + step.second};
        if (!(a < c) || !(b < c)) continue;  // count each triangle at its max corner
        auto key1 = std::make_pair(std::min(a, c), std::max(a, c));
        auto key2 = std::make_pair(std::min(b, c), std::max(b, c));
        if (links.count(key1) && links.count(key2)) ++faces;
      }
    }
    return faces;
  }

  long long euler_characteristic() const {
    return static_cast<long long>(points.size()) - static_cast<long long>(links.size()) +
           face_count();
  }
};

}  // namespace

Graph gen_triangular_patch(int radius) {
  if (radius < 0) fail(ErrorCode::ParseError, "patch needs radius >= 0");
  if (radius == 0) return Graph::build({"t0x0"}, {});
  std::set<std::pair<int, int>> points;
  for (int x = -radius; x <= radius; ++x) {
    for (int y = std::max(-radius, -x - radius); y <= std::min(radius, -x + radius); ++y) {
      points.insert({x, y});
    }
  }
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> links;
  for (const auto& p : points) {
    for (const auto& step : kLatticeSteps) {
      std::pair<int, int> q{p.first + step.first, p.second + step.second};
      if (points.count(q) && p < q) links.insert({p, q});
    }
  }
  return lattice_graph(points, links);
}

Graph gen_triangular_region(const std::vector<TriCell>& mask) {
  if (mask.empty()) fail(ErrorCode::MaskNotSimplyConnected, "mask has no triangles");
  RegionShape shape;
  for (const auto& cell : mask) shape.add_cell(cell);
  if (!shape.connected()) {
    fail(ErrorCode::MaskNotSimplyConnected, "mask region is disconnected");
  }
  if (shape.euler_characteristic() != 1) {
    fail(ErrorCode::MaskNotSimplyConnected, "mask region has a hole");
  }
  return lattice_graph(shape.points, shape.links);
}

namespace {

std::vector<TriCell> cell_neighbors(const TriCell& cell) {
  if (cell.up) {
    return {{cell.q, cell.r, false}, {cell.q - 1, cell.r, false}, {cell.q, cell.r - 1, false}};
  }
  return {{cell.q, cell.r, true}, {cell.q + 1, cell.r, true}, {cell.q, cell.r + 1, true}};
}

}  // namespace

Graph gen_random_region(int tri_count, std::uint64_t seed) {
  if (tri_count < 1) fail(ErrorCode::ParseError, "region needs at least one triangle");
  SplitMix64 rng(seed);
  auto key = [](const TriCell& c) { return std::make_tuple(c.q, c.r, c.up); };
  std::vector<TriCell> chosen{{0, 0, true}};
  std::set<std::tuple<int, int, bool>> taken{key(chosen[0])};
  RegionShape shape;
  shape.add_cell(chosen[0]);
  int rejections = 0;
  while (static_cast<int>(chosen.size()) < tri_count && rejections < 40 * tri_count) {
    std::vector<TriCell> frontier;
    std::set<std::tuple<int, int, bool>> seen;
    for (const auto& cell : chosen) {
      for (const auto& next : cell_neighbors(cell)) {
        if (!taken.count(key(next)) && seen.insert(key(next)).second) {
          frontier.push_back(next);
        }
      }
    }
    if (frontier.empty()) break;
    const TriCell& pick = frontier[rng.below(frontier.size())];
    RegionShape trial = shape;
    trial.add_cell(pick);
    if (trial.euler_characteristic() != 1) {
      ++rejections;
      continue;
    }
    shape = std::move(trial);
    chosen.push_back(pick);
    taken.insert(key(pick));
  }
  return lattice_graph(shape.points, shape.links);
}

Graph gen_chordal(int n, int density_num, int density_den, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::ParseError, "chordal graph needs n >= 1");
  if (density_den < 1 || density_num < 0) {
    fail(ErrorCode::ParseError, "density must be a non-negative fraction");
  }
  SplitMix64 rng(seed);
  int width = width_for(n - 1);
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + padded(i, width));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<std::pair<std::string, std::string>> edges;
  auto linked = [&](int a, int b) {
    const auto& nbrs = adj[static_cast<std::size_t>(a)];
    return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
  };
  for (int i = 1; i < n; ++i) {
    int anchor = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
    std::vector<int> clique{anchor};
    for (int candidate : adj[static_cast<std::size_t>(anchor)]) {
      if (candidate >= i) continue;
      bool fits = true;
      for (int member : clique) {
        if (member != anchor && member != candidate && !linked(member, candidate)) {
          fits = false;
          break;
        }
      }
      if (fits && rng.below(static_cast<std::uint64_t>(density_den)) <
                      static_cast<std::uint64_t>(density_num)) {
        clique.push_back(candidate);
      }
    }
    for (int member : clique) {
      adj[static_cast<std::size_t>(i)].push_back(member);
      adj[static_cast<std::size_t>(member)].push_back(i);
      edges.emplace_back(vertices[static_cast<std::size_t>(member)],
                         vertices[static_cast<std::size_t>(i)]);
    }
  }
  return Graph::build(vertices, edges);
}

Graph gen_wheel(int rim) {
  if (rim < 3) fail(ErrorCode::ParseError, "wheel needs a rim of at least 3");
  int width = width_for(rim);
  std::vector<std::string> vertices{"z"};
  std::vector<std::pair<std::string, std::string>> edges;
  auto name = [&](int i) { return "r" + padded((i % rim) + 1, width); };
  for (int i = 0; i < rim; ++i) {
    vertices.push_back(name(i));
    edges.emplace_back(name(i), name(i + 1));
    edges.emplace_back("z", name(i));
  }
  return Graph::build(vertices, edges);
}

namespace {

Graph filtered_base(GraphClass cls, int n, SplitMix64& rng) {
  if (n <= 2) return gen_tree(n, rng.next());
  switch (cls) {
    case GraphClass::Bridged:
    case GraphClass::WeaklyBridged:
    case GraphClass::WeaklyModular:
      return gen_chordal(n, 2, 3, rng.next());
    case GraphClass::Systolic2D: {
      // Grow a lattice region until the skeleton has exactly n vertices.
      std::uint64_t region_seed = rng.next();
      for (int tries = 0; tries < 32; ++tries) {
        Graph g = gen_random_region(2 * n, region_seed + static_cast<std::uint64_t>(tries));
        if (g.vertex_count() == n) return g;
        // Re-grow cell by cell, stopping at the right vertex count.
        for (int cells = 1; cells <= 4 * n; ++cells) {
          Graph candidate =
              gen_random_region(cells, region_seed + static_cast<std::uint64_t>(tries));
          if (candidate.vertex_count() == n) return candidate;
          if (candidate.vertex_count() > n) break;
        }
      }
      return gen_tree(n, rng.next());  // rare fallback; the verifier still gates it
    }
    case GraphClass::Helly:
    case GraphClass::CliqueHelly:
    case GraphClass::Dismantlable: {
      std::uint64_t choice = rng.below(3);
      if (choice == 0) {
        for (int rows = static_cast<int>(rng.below(3)) + 2; rows >= 2; --rows) {
          if (n % rows == 0 && n / rows >= 2) return gen_king_grid(rows, n / rows);
        }
      }
      if (choice <= 1) return gen_chordal(n, 1, 2, rng.next());
      return gen_tree(n, rng.next());
    }
  }
  return gen_tree(n, rng.next());
}

Graph perturb_edges(const Graph& base, int flips, SplitMix64& rng) {
  auto vertices = base.labels();
  auto edges = base.edge_list();
  std::set<std::pair<std::string, std::string>> edge_set(edges.begin(), edges.end());
  const int n = base.vertex_count();
  for (int f = 0; f < flips; ++f) {
    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (a == b) continue;
    auto key = std::minmax(vertices[static_cast<std::size_t>(a)],
                           vertices[static_cast<std::size_t>(b)]);
    if (edge_set.count(key)) {
      edge_set.erase(key);
    } else {
      edge_set.insert(key);
    }
  }
  std::vector<std::pair<std::string, std::string>> out(edge_set.begin(), edge_set.end());
  try {
    return Graph::build(vertices, out);
  } catch (const Error&) {
    return base;  // flip disconnected the graph; fall back to the unperturbed base
  }
}

}  // namespace

std::optional<Graph> gen_filtered(GraphClass cls, int n, int attempts, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::ParseError, "filtered generation needs n >= 1");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Graph base = filtered_base(cls, n, rng);
    int flips = static_cast<int>(rng.below(3));
    Graph candidate = flips > 0 ? perturb_edges(base, flips, rng) : base;
    if (verify_class(candidate, cls).verdict) return candidate;
  }
  return std::nullopt;
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case GenFamily::Tree:
      return gen_tree(spec.n, spec.seed);
    case GenFamily::KingGrid:
      return gen_king_grid(spec.rows, spec.cols);
    case GenFamily::TriangularPatch:
      if (spec.tri_count > 0) return gen_random_region(spec.tri_count, spec.seed);
      return gen_triangular_patch(spec.radius);
    case GenFamily::Chordal:
      return gen_chordal(spec.n, spec.density_num, spec.density_den, spec.seed);
    case GenFamily::Wheel:
      return gen_wheel(spec.n);
    case GenFamily::FilteredRandom: {
      auto g = gen_filtered(spec.filter_class, spec.n, spec.attempts, spec.seed);
      if (!g) {
        fail(ErrorCode::NotReconstructible,
             "no graph of the requested class found within the attempt budget");
      }
      return *g;
    }
  }
  fail(ErrorCode::ParseError, "unknown generator family");
}

}  // namespace flagrec
