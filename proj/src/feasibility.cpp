#include "rectlay/feasibility.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace rectlay {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::None: return "none";
    case WitnessKind::Nonplanar: return "nonplanar";
    case WitnessKind::SeparatingTriangle: return "separating-triangle";
    case WitnessKind::Triangulation: return "triangulation";
  }
  return "unknown";
}

std::vector<Triple> filled_triangles(const RotationEmbedding& e) {
  const int n = e.vertex_count();
  std::vector<Triple> out;
  if (e.edge_count() < 3) return out;
  const Graph g = graph_of(e);
  const auto faces = trace_faces(e);

  // Dart (v, rotation[v][i]) lives at offset[v] + i.
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(e.rotation[v].size());
  std::vector<int> dart_face(offset[n], -1);
  auto dart_id = [&](int u, int v) { return offset[u] + e.position(u, v); };
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t i = 0; i < faces[f].walk_length(); ++i) {
      Dart d = faces[f].dart(i);
      dart_face[dart_id(d.from, d.to)] = static_cast<int>(f);
    }
  const int outer = dart_face[dart_id(e.outer.from, e.outer.to)];

  std::vector<char> reached(faces.size());
  std::vector<int> stack;
  for (const auto& t : triangles(g)) {
    auto in_t = [&](int a, int b) {
      bool ia = a == t[0] || a == t[1] || a == t[2];
      bool ib = b == t[0] || b == t[1] || b == t[2];
      return ia && ib;
    };
    std::fill(reached.begin(), reached.end(), 0);
    reached[outer] = 1;
    stack.assign(1, outer);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < faces[f].walk_length(); ++i) {
        Dart d = faces[f].dart(i);
        if (in_t(d.from, d.to)) continue;
        int h = dart_face[dart_id(d.to, d.from)];
        if (!reached[h]) {
          reached[h] = 1;
          stack.push_back(h);
        }
      }
    }
    bool filled = false;
    for (int v = 0; v < n && !filled; ++v) {
      if (v == t[0] || v == t[1] || v == t[2]) continue;
      for (int w : e.rotation[v])
        if (!reached[dart_face[dart_id(v, w)]]) {
          filled = true;
          break;
        }
    }
    if (filled) out.push_back(t);
  }
  return out;
}

namespace {

struct Block {
  std::vector<int> verts;  // sorted global ids
  Graph local;
  RotationEmbedding emb;  // local ids
};

int local_id(const Block& b, int v) {
  return static_cast<int>(std::lower_bound(b.verts.begin(), b.verts.end(), v) - b.verts.begin());
}

std::vector<Block> split_blocks(const Graph& g) {
  const BlockInfo info = biconnected_blocks(g);
  const auto es = g.edges();
  std::vector<std::vector<Edge>> by_block(info.block_count);
  for (std::size_t i = 0; i < es.size(); ++i) by_block[info.edge_block[i]].push_back(es[i]);
  std::vector<Block> out(info.block_count);
  for (int k = 0; k < info.block_count; ++k) {
    Block& b = out[k];
    for (auto [u, v] : by_block[k]) {
      b.verts.push_back(u);
      b.verts.push_back(v);
    }
    std::sort(b.verts.begin(), b.verts.end());
    b.verts.erase(std::unique(b.verts.begin(), b.verts.end()), b.verts.end());
    b.local = Graph(static_cast<int>(b.verts.size()));
    for (auto [u, v] : by_block[k]) b.local.add_edge(local_id(b, u), local_id(b, v));
  }
  return out;
}

// Embedding of a biconnected graph in which every triangle bounds a face.
// Every triangle edge is subdivided and every triangle gets a hub joined to
// its corners and subdivision vertices. Each region a hub cuts out touches a
// single original vertex, so in a planar embedding of the extended graph no
// part of a biconnected graph fits inside a triangle.
std::optional<RotationEmbedding> facial_triangle_embedding(const Graph& b) {
  const int n = b.vertex_count();
  if (n <= 3) return planar_embed(b);
  const auto tris = triangles(b);
  constexpr std::pair<int, int> kSides[] = {{0, 1}, {1, 2}, {0, 2}};
  std::map<Edge, int> sub;
  for (const auto& t : tris)
    for (auto [i, j] : kSides) sub.emplace(Edge{t[i], t[j]}, -1);
  Graph h(n);
  std::vector<int> far;  // subdivision vertex -> sum of its two ends, hub -> -1
  for (auto [u, v] : b.edges()) {
    auto it = sub.find({u, v});
    if (it == sub.end()) {
      h.add_edge(u, v);
      continue;
    }
    it->second = h.add_vertex();
    far.push_back(u + v);
    h.add_edge(u, it->second);
    h.add_edge(it->second, v);
  }
  for (const auto& t : tris) {
    const int hub = h.add_vertex();
    far.push_back(-1);
    for (int c : t) h.add_edge(hub, c);
    for (auto [i, j] : kSides) h.add_edge(hub, sub.at({t[i], t[j]}));
  }
  if (!is_planar(h)) return std::nullopt;
  const RotationEmbedding he = planar_embed(h);
  RotationEmbedding e;
  e.rotation.resize(n);
  for (int v = 0; v < n; ++v)
    for (int w : he.rotation[v]) {
      if (w < n)
        e.rotation[v].push_back(w);
      else if (far[w - n] >= 0)
        e.rotation[v].push_back(far[w - n] - v);
    }
  e.outer = select_outer_dart(e);
  return e;
}

struct Analysis {
  FeasibilityVerdict verdict;
  std::vector<Block> blocks;
};

Triple global_triple(const Block& b, Triple t) {
  for (int& x : t) x = b.verts[x];
  std::sort(t.begin(), t.end());
  return t;
}

Analysis analyse(const Graph& g) {
  if (!is_connected(g)) throw PreconditionViolation("is_layoutable needs a connected graph");
  Analysis a;
  FeasibilityVerdict& v = a.verdict;
  try {
    planar_embed(g);
  } catch (const Nonplanar& np) {
    v.layoutable = false;
    v.witness = WitnessKind::Nonplanar;
    v.kuratowski = np.witness();
    return a;
  }
  const int n = g.vertex_count();
  if (n <= 3) return a;
  auto reject = [&](Triple t) {
    v.layoutable = false;
    v.witness = WitnessKind::SeparatingTriangle;
    v.triangle = t;
  };
  if (g.edge_count() > 3 * n - 7) {
    // a triangulation; name a separating triangle when there is one
    auto sep = separating_triangles(g);
    if (!sep.empty()) {
      reject(sep.front());
    } else {
      v.layoutable = false;
      v.witness = WitnessKind::Triangulation;
    }
    return a;
  }
  a.blocks = split_blocks(g);
  const bool single = a.blocks.size() == 1;
  // Other blocks at a cut vertex need an angle of this block that is not a
  // triangle; every triangle takes exactly one angle.
  for (const Block& b : a.blocks) {
    if (single || b.local.vertex_count() <= 3) continue;
    for (int x = 0; x < b.local.vertex_count(); ++x) {
      if (g.degree(b.verts[x]) == b.local.degree(x)) continue;
      const auto& nb = b.local.neighbors(x);
      int inner = 0;
      Triple first{-1, -1, -1};
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (b.local.has_edge(nb[i], nb[j])) {
            if (inner++ == 0) first = {x, nb[i], nb[j]};
          }
      if (inner >= b.local.degree(x)) {
        reject(global_triple(b, first));
        return a;
      }
    }
  }
  for (Block& b : a.blocks) {
    auto e = facial_triangle_embedding(b.local);
    if (e) {
      b.emb = std::move(*e);
      continue;
    }
    auto sep = separating_triangles(b.local);
    if (sep.empty()) throw Error("block without a facial embedding has no separating triangle");
    reject(global_triple(b, sep.front()));
    a.blocks.clear();
    return a;
  }
  return a;
}

}  // namespace

FeasibilityVerdict is_layoutable(const Graph& g) { return analyse(g).verdict; }

RotationEmbedding embed_without_filled_triangles(const Graph& g) {
  Analysis a = analyse(g);
  if (!a.verdict.layoutable) throw NotLayoutable(a.verdict);
  const int n = g.vertex_count();
  if (n <= 3) return planar_embed(g);
  RotationEmbedding e;
  e.rotation.resize(n);
  // Blocks meeting at a vertex are chained in turn, each opened at an angle
  // whose face is not a triangle.
  for (const Block& b : a.blocks) {
    const auto faces = trace_faces(b.emb);
    std::map<Dart, std::size_t> face_len;
    for (const auto& f : faces)
      for (std::size_t i = 0; i < f.walk_length(); ++i) face_len[f.dart(i)] = f.walk_length();
    for (int x = 0; x < b.local.vertex_count(); ++x) {
      const auto& r = b.emb.rotation[x];
      const int d = static_cast<int>(r.size());
      int open = 0;
      for (int j = 0; j < d; ++j)
        if (face_len[{x, r[j]}] >= 4) {
          open = j;
          break;
        }
      auto& out = e.rotation[b.verts[x]];
      for (int k = 1; k <= d; ++k) out.push_back(b.verts[r[(open + k) % d]]);
    }
  }
  e.outer = select_outer_dart(e);
  if (!euler_holds(e)) throw Error("block assembly broke planarity");
  if (!filled_triangles(e).empty()) throw Error("embedding still has a filled triangle");
  return e;
}

}  // namespace rectlay
