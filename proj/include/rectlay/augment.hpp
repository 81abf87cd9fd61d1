#pragma once

#include <vector>

#include "rectlay/graph.hpp"

namespace rectlay {

struct AugmentedGraph {
  Graph graph;
  RotationEmbedding embedding;
  std::vector<int> added_vertices;  // sorted
  Graph origin;
  int outer_vertex = -1;  // the vertex inserted into the outer face
};

struct BiconnectResult {
  RotationEmbedding embedding;
  std::vector<int> added;
};

// Inserts a new vertex into the face whose walk is `walk`, adjacent to the
// walk vertices at the given indices (in walk order). Returns its id.
int insert_in_face(RotationEmbedding& e, const std::vector<int>& walk, const std::vector<int>& corners);

BiconnectResult biconnect(const RotationEmbedding& e);
// Requires a biconnected embedding without filled triangles.
AugmentedGraph triangulate_faces(const RotationEmbedding& e);
// Requires filled_triangles(e) to be empty and at least 4 vertices.
AugmentedGraph augment_to_4ct(const RotationEmbedding& e);

}  // namespace rectlay
