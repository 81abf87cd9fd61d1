#include "rectlay/augment.hpp"

#include <algorithm>

#include "rectlay/errors.hpp"

namespace rectlay {

int insert_in_face(RotationEmbedding& e, const std::vector<int>& walk, const std::vector<int>& corners) {
  const int w = static_cast<int>(e.rotation.size());
  e.rotation.emplace_back();
  const std::size_t len = walk.size();
  for (int k : corners) {
    const int a = walk[k];
    const int succ = walk[(k + 1) % len];
    auto& r = e.rotation[a];
    auto it = std::find(r.begin(), r.end(), succ);
    if (it == r.end()) throw PreconditionViolation("walk does not follow the rotation system");
    r.insert(it + 1, w);
    e.rotation[w].push_back(a);
  }
  return w;
}

BiconnectResult biconnect(const RotationEmbedding& e) {
  BiconnectResult res{e, {}};
  RotationEmbedding& cur = res.embedding;
  while (true) {
    Graph g = graph_of(cur);
    BlockInfo info = biconnected_blocks(g);
    int v = -1;
    for (int x = 0; x < g.vertex_count() && v < 0; ++x)
      if (info.is_articulation[x]) v = x;
    if (v < 0) break;
    const auto& r = cur.rotation[v];
    const int d = static_cast<int>(r.size());
    bool done = false;
    for (int i = 0; i < d && !done; ++i) {
      // Corner at v between darts (u,v) and (v,w).
      const int u = r[(i + 1) % d];
      const int w = r[i];
      if (block_of(g, info, v, u) == block_of(g, info, v, w)) continue;
      const int x = cur.next_in_face({v, w}).to;
      std::vector<int> walk{u, v, w, x};
      int z = insert_in_face(cur, walk, {0, 2});
      res.added.push_back(z);
      done = true;
    }
    if (!done) throw Error("articulation vertex without a block change in its rotation");
  }
  return res;
}

namespace {

// Index of the first vertex (scanning from the smallest id) with a chord.
int first_chord_endpoint(const Graph& g, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  int start = static_cast<int>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  for (int s = 0; s < len; ++s) {
    const int k = (start + s) % len;
    const int x = cycle[k];
    const int prev = cycle[(k + len - 1) % len];
    const int next = cycle[(k + 1) % len];
    for (int y : cycle)
      if (y != x && y != prev && y != next && g.has_edge(x, y)) return k;
  }
  return -1;
}

}  // namespace

AugmentedGraph triangulate_faces(const RotationEmbedding& e) {
  AugmentedGraph a;
  a.origin = graph_of(e);
  a.embedding = e;
  RotationEmbedding& cur = a.embedding;
  Graph g = a.origin;
  const auto faces = trace_faces(e);
  for (const auto& f : faces) {
    if (f.walk_length() < 4) continue;
    bool is_outer = false;
    for (std::size_t i = 0; i < f.walk_length(); ++i)
      if (f.dart(i) == e.outer) is_outer = true;
    std::vector<int> cycle = f.vertices;
    const int len = static_cast<int>(cycle.size());
    {
      auto sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionViolation("triangulate_faces needs a biconnected embedding");
    }
    while (true) {
      const int k = first_chord_endpoint(g, cycle);
      if (k < 0) break;
      const int x = cycle[k];
      const int u = cycle[(k + len - 1) % len];
      const int v = cycle[(k + 1) % len];
      const int nu = insert_in_face(cur, cycle, {(k + len - 1) % len, k, (k + 1) % len});
      g.add_vertex();
      g.add_edge(nu, u);
      g.add_edge(nu, x);
      g.add_edge(nu, v);
      a.added_vertices.push_back(nu);
      cycle[k] = nu;
    }
    std::vector<int> all(len);
    for (int i = 0; i < len; ++i) all[i] = i;
    const int nf = insert_in_face(cur, cycle, all);
    g.add_vertex();
    for (int c : cycle) g.add_edge(nf, c);
    a.added_vertices.push_back(nf);
    if (is_outer) a.outer_vertex = nf;
  }
  a.graph = std::move(g);
  std::sort(a.added_vertices.begin(), a.added_vertices.end());
  return a;
}

AugmentedGraph augment_to_4ct(const RotationEmbedding& e) {
  if (e.vertex_count() < 4) throw PreconditionViolation("augmentation needs at least 4 vertices");
  BiconnectResult b = biconnect(e);
  AugmentedGraph a = triangulate_faces(b.embedding);
  a.origin = graph_of(e);
  a.added_vertices.insert(a.added_vertices.end(), b.added.begin(), b.added.end());
  std::sort(a.added_vertices.begin(), a.added_vertices.end());
  if (a.outer_vertex < 0) throw Error("outer face was already a triangle");
  return a;
}

}  // namespace rectlay
