#include "rectlay/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rectlay/errors.hpp"

namespace rectlay {

Graph::Graph(int n) : adj_(n) {
  if (n < 0) throw PreconditionViolation("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionViolation("edge endpoint out of range");
  if (u == v) throw PreconditionViolation("loop edge");
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) throw PreconditionViolation("duplicate edge");
  a.insert(it, v);
  auto& b = adj_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) throw PreconditionViolation("edge not present");
  auto& a = adj_[u];
  a.erase(std::lower_bound(a.begin(), a.end(), v));
  auto& b = adj_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int RotationEmbedding::edge_count() const {
  std::size_t s = 0;
  for (const auto& r : rotation) s += r.size();
  return static_cast<int>(s / 2);
}

int RotationEmbedding::position(int v, int u) const {
  const auto& r = rotation[v];
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] == u) return static_cast<int>(i);
  return -1;
}

Dart RotationEmbedding::next_in_face(Dart d) const {
  const auto& r = rotation[d.to];
  const int p = position(d.to, d.from);
  if (p < 0) throw PreconditionViolation("dart not in rotation system");
  const int k = static_cast<int>(r.size());
  return {d.to, r[(p + k - 1) % k]};
}

std::vector<int> RotationEmbedding::face_of(Dart d) const {
  std::vector<int> out;
  if (d.from < 0) {
    if (vertex_count() == 1) out.push_back(0);
    return out;
  }
  Dart cur = d;
  do {
    out.push_back(cur.from);
    cur = next_in_face(cur);
  } while (cur != d);
  return out;
}

Graph graph_of(const RotationEmbedding& e) {
  Graph g(e.vertex_count());
  for (int u = 0; u < e.vertex_count(); ++u)
    for (int v : e.rotation[u])
      if (u < v) g.add_edge(u, v);
  return g;
}

std::vector<int> components(const Graph& g, const std::vector<char>& removed, int* count) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0 || (!removed.empty() && removed[s])) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (comp[v] >= 0 || (!removed.empty() && removed[v])) continue;
        comp[v] = c;
        stack.push_back(v);
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected_without(const Graph& g, const std::vector<char>& removed) {
  int c = 0;
  components(g, removed, &c);
  return c <= 1;
}

bool is_connected(const Graph& g) { return is_connected_without(g, {}); }

std::vector<FaceWalk> trace_faces(const RotationEmbedding& e) {
  std::vector<FaceWalk> faces;
  const int n = e.vertex_count();
  if (e.edge_count() == 0) {
    faces.emplace_back();
    return faces;
  }
  std::vector<std::vector<char>> seen(n);
  for (int v = 0; v < n; ++v) seen[v].assign(e.rotation[v].size(), 0);
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < e.rotation[v].size(); ++i) {
      if (seen[v][i]) continue;
      FaceWalk f;
      Dart start{v, e.rotation[v][i]};
      Dart cur = start;
      do {
        seen[cur.from][e.position(cur.from, cur.to)] = 1;
        f.vertices.push_back(cur.from);
        cur = e.next_in_face(cur);
      } while (cur != start);
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

bool euler_holds(const RotationEmbedding& e) {
  const int n = e.vertex_count();
  const int m = e.edge_count();
  const int f = static_cast<int>(trace_faces(e).size());
  return n - m + f == 2;
}

Dart select_outer_dart(const RotationEmbedding& e) {
  auto faces = trace_faces(e);
  if (faces.empty() || faces[0].vertices.size() < 2) return {};
  std::size_t best = 0;
  std::vector<int> best_key;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::vector<int> key = faces[i].vertices;
    std::sort(key.begin(), key.end());
    const auto len = faces[i].walk_length();
    const auto blen = faces[best].walk_length();
    if (i == 0 || len > blen || (len == blen && key < best_key)) {
      best = i;
      best_key = std::move(key);
    }
  }
  return faces[best].dart(0);
}

std::vector<Triple> triangles(const Graph& g) {
  const int n = g.vertex_count();
  auto rank_less = [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
  };
  // Orient each edge towards the higher-ranked endpoint; out-degree stays
  // bounded on planar graphs.
  std::vector<std::vector<int>> out(n);
  for (auto [u, v] : g.edges()) {
    if (rank_less(u, v))
      out[u].push_back(v);
    else
      out[v].push_back(u);
  }
  std::vector<char> mark(n, 0);
  std::vector<Triple> tris;
  for (int u = 0; u < n; ++u) {
    for (int v : out[u]) mark[v] = 1;
    for (int v : out[u])
      for (int w : out[v])
        if (mark[w]) {
          Triple t{u, v, w};
          std::sort(t.begin(), t.end());
          tris.push_back(t);
        }
    for (int v : out[u]) mark[v] = 0;
  }
  std::sort(tris.begin(), tris.end());
  return tris;
}

bool is_separating_triangle(const Graph& g, const Triple& t) {
  if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2])) return false;
  std::vector<char> removed(g.vertex_count(), 0);
  for (int v : t) removed[v] = 1;
  return !is_connected_without(g, removed);
}

std::vector<Triple> separating_triangles(const Graph& g) {
  std::vector<Triple> out;
  for (const auto& t : triangles(g))
    if (is_separating_triangle(g, t)) out.push_back(t);
  return out;
}

bool is_k_connected(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (!is_connected(g)) return false;
  if (k <= 1) return true;
  std::vector<char> removed(n, 0);
  // Every cut set of size < k that leaves at least one vertex.
  for (int size = 1; size <= k - 1 && size < n; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int i : idx) removed[i] = 1;
      if (!is_connected_without(g, removed)) return false;
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

int block_of(const Graph& g, const BlockInfo& info, int u, int v) {
  if (u > v) std::swap(u, v);
  auto es = g.edges();
  auto it = std::lower_bound(es.begin(), es.end(), Edge{u, v});
  if (it == es.end() || *it != Edge{u, v}) return -1;
  return info.edge_block[it - es.begin()];
}

Graph dual_graph(const Graph& g, const RotationEmbedding& e) {
  auto faces = trace_faces(e);
  if (g.vertex_count() < 4) throw NotTriangulation("dual of a triangulation needs at least 4 vertices");
  std::map<Dart, int> face_of;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].walk_length() != 3) throw NotTriangulation("face of length " + std::to_string(faces[i].walk_length()));
    for (std::size_t j = 0; j < 3; ++j) face_of[faces[i].dart(j)] = static_cast<int>(i);
  }
  Graph d(static_cast<int>(faces.size()));
  for (auto [u, v] : g.edges()) {
    int a = face_of.at({u, v});
    int b = face_of.at({v, u});
    d.add_edge(a, b);
  }
  return d;
}

bool is_cyclically_4_edge_connected(const Graph& g) {
  const auto es = g.edges();
  const int m = static_cast<int>(es.size());
  const int n = g.vertex_count();
  std::vector<char> cut(m, 0);
  auto splits_into_cyclic_parts = [&]() {
    Graph h(n);
    for (int i = 0; i < m; ++i)
      if (!cut[i]) h.add_edge(es[i].first, es[i].second);
    int c = 0;
    auto comp = components(h, {}, &c);
    if (c < 2) return false;
    std::vector<int> nv(c, 0), ne(c, 0);
    for (int v = 0; v < n; ++v) ++nv[comp[v]];
    for (int i = 0; i < m; ++i)
      if (!cut[i]) ++ne[comp[es[i].first]];
    for (int k = 0; k < c; ++k)
      if (ne[k] < nv[k]) return false;  // acyclic component
    return true;
  };
  for (int a = 0; a < m; ++a) {
    cut[a] = 1;
    if (splits_into_cyclic_parts()) return false;
    for (int b = a + 1; b < m; ++b) {
      cut[b] = 1;
      if (splits_into_cyclic_parts()) return false;
      for (int c = b + 1; c < m; ++c) {
        cut[c] = 1;
        if (splits_into_cyclic_parts()) return false;
        cut[c] = 0;
      }
      cut[b] = 0;
    }
    cut[a] = 0;
  }
  return true;
}

}  // namespace rectlay
