#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace rectlay {

using Edge = std::pair<int, int>;
using Triple = std::array<int, 3>;

// Simple undirected graph on vertices 0..n-1. Adjacency lists stay sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  int add_vertex();
  // Throws PreconditionViolation on loops, duplicates or bad ids.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Each edge once, as (min, max), sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

struct Dart {
  int from = -1;
  int to = -1;
  auto operator<=>(const Dart&) const = default;
};

// Cyclic neighbour order per vertex plus a dart lying on the outer face.
// The face to the left of dart (u,v) continues with (v, w) where w precedes
// u in rotation[v].
struct RotationEmbedding {
  std::vector<std::vector<int>> rotation;
  Dart outer;

  int vertex_count() const { return static_cast<int>(rotation.size()); }
  int edge_count() const;
  int position(int v, int u) const;
  Dart next_in_face(Dart d) const;
  // Vertex sequence of the face containing d, starting at d.from.
  std::vector<int> face_of(Dart d) const;
  std::vector<int> outer_face() const { return face_of(outer); }
};

struct FaceWalk {
  std::vector<int> vertices;  // dart i runs vertices[i] -> vertices[i+1 mod len]
  std::size_t walk_length() const { return vertices.size(); }
  Dart dart(std::size_t i) const {
    return {vertices[i], vertices[(i + 1) % vertices.size()]};
  }
};

Graph graph_of(const RotationEmbedding& e);

bool is_connected(const Graph& g);
// Connectivity of g with the flagged vertices deleted. An empty remainder
// counts as connected.
bool is_connected_without(const Graph& g, const std::vector<char>& removed);
// Component label per vertex; removed vertices get -1.
std::vector<int> components(const Graph& g, const std::vector<char>& removed, int* count);

// Throws Nonplanar. Requires g connected.
RotationEmbedding planar_embed(const Graph& g);
bool is_planar(const Graph& g);

std::vector<FaceWalk> trace_faces(const RotationEmbedding& e);
bool euler_holds(const RotationEmbedding& e);

// Face with the longest walk, ties broken by the smallest sorted vertex list.
Dart select_outer_dart(const RotationEmbedding& e);

std::vector<Triple> triangles(const Graph& g);
std::vector<Triple> separating_triangles(const Graph& g);
bool is_separating_triangle(const Graph& g, const Triple& t);

bool is_k_connected(const Graph& g, int k);

struct BlockInfo {
  std::vector<int> edge_block;        // indexed like g.edges()
  std::vector<char> is_articulation;  // per vertex
  int block_count = 0;
};
BlockInfo biconnected_blocks(const Graph& g);
int block_of(const Graph& g, const BlockInfo& info, int u, int v);

// Requires every face to be a triangle. Dual vertex i is trace_faces(e)[i].
Graph dual_graph(const Graph& g, const RotationEmbedding& e);

// Enumerates every cut of at most three edges; test scale only.
bool is_cyclically_4_edge_connected(const Graph& g);

}  // namespace rectlay
