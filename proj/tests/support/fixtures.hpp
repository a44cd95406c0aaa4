#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagrec/generate.hpp"
#include "flagrec/graph.hpp"

namespace fixtures {

using flagrec::Graph;

using Edges = std::vector<std::pair<std::string, std::string>>;

inline Graph single_vertex() { return Graph::build({"a"}, {}); }

inline Graph path3() { return Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

inline Graph triangle() {
  return Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline Graph square() {
  return Graph::build({"u1", "u2", "u3", "u4"},
                      {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u1"}});
}

inline Graph cycle(int length) {
  std::vector<std::string> vertices;
  Edges edges;
  for (int i = 0; i < length; ++i) vertices.push_back("c" + std::to_string(i + 1));
  for (int i = 0; i < length; ++i) {
    edges.emplace_back(vertices[static_cast<std::size_t>(i)],
                       vertices[static_cast<std::size_t>((i + 1) % length)]);
  }
  return Graph::build(vertices, edges);
}

// The 4-wheel: square u1..u4 plus apex z adjacent to all of it.
inline Graph four_wheel() {
  return Graph::build({"u1", "u2", "u3", "u4", "z"},
                      {{"u1", "u2"},
                       {"u2", "u3"},
                       {"u3", "u4"},
                       {"u4", "u1"},
                       {"z", "u1"},
                       {"z", "u2"},
                       {"z", "u3"},
                       {"z", "u4"}});
}

// Same square, but the apex replaced by adjacent vertices x (over u1) and
// y (over u3), both adjacent to u2 and u4. Same boundary instance as the
// 4-wheel, different complex.
inline Graph x2_complex() {
  return Graph::build({"u1", "u2", "u3", "u4", "x", "y"},
                      {{"u1", "u2"},
                       {"u2", "u3"},
                       {"u3", "u4"},
                       {"u4", "u1"},
                       {"x", "y"},
                       {"x", "u1"},
                       {"x", "u2"},
                       {"x", "u4"},
                       {"y", "u2"},
                       {"y", "u3"},
                       {"y", "u4"}});
}

inline Graph hex_wheel() { return flagrec::gen_wheel(6); }

inline Graph five_wheel() { return flagrec::gen_wheel(5); }

inline Graph king3x3() { return flagrec::gen_king_grid(3, 3); }

inline Graph complete(int n) {
  std::vector<std::string> vertices;
  Edges edges;
  for (int i = 0; i < n; ++i) vertices.push_back("k" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(vertices[static_cast<std::size_t>(i)],
                         vertices[static_cast<std::size_t>(j)]);
    }
  }
  return Graph::build(vertices, edges);
}

// K(2,2,2): every maximal simplex is a triangle lying in two tetra... none —
// every facet of every maximal clique extends twice, so the boundary is empty.
inline Graph octahedron() {
  std::vector<std::string> vertices{"a1", "a2", "b1", "b2", "c1", "c2"};
  Edges edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i][0] == vertices[j][0]) continue;
      edges.emplace_back(vertices[i], vertices[j]);
    }
  }
  return Graph::build(vertices, edges);
}

}  // namespace fixtures
