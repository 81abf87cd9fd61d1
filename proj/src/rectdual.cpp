#include "rectlay/rectdual.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "rectlay/errors.hpp"

namespace rectlay {

FramedGraph frame_for_dual(const AugmentedGraph& a, int v) {
  const int n = a.graph.vertex_count();
  if (!std::binary_search(a.added_vertices.begin(), a.added_vertices.end(), v))
    throw FramingFailure("vertex " + std::to_string(v) + " was not added by augmentation");
  const auto& ring = a.embedding.rotation[v];
  const int len = static_cast<int>(ring.size());
  if (len < 4) throw FramingFailure("outer cycle shorter than 4");

  FramedGraph f;
  std::vector<int> to_framed(n, -1);
  for (int u = 0; u < n; ++u)
    if (u != v) {
      to_framed[u] = static_cast<int>(f.original.size());
      f.original.push_back(u);
    }
  const int base = static_cast<int>(f.original.size());
  const int frame[4] = {base, base + 1, base + 2, base + 3};
  f.west = frame[0];
  f.north = frame[1];
  f.east = frame[2];
  f.south = frame[3];
  for (int i = 0; i < 4; ++i) f.original.push_back(-1);

  // Outer cycle starting at its smallest id, in rotation order around v.
  const int start = static_cast<int>(std::min_element(ring.begin(), ring.end()) - ring.begin());
  std::vector<int> cyc(len);
  for (int i = 0; i < len; ++i) cyc[i] = ring[(start + i) % len];
  const int br[5] = {0, len / 4, len / 2, 3 * len / 4, len};
  std::vector<int> arc_of(len);
  std::vector<char> is_break(len, 0);
  for (int k = 0; k < 4; ++k) {
    is_break[br[k]] = 1;
    for (int i = br[k]; i < br[k + 1]; ++i) arc_of[i] = k;
  }

  auto& rot = f.embedding.rotation;
  rot.assign(base + 4, {});
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    for (int w : a.embedding.rotation[u])
      if (w != v) rot[to_framed[u]].push_back(to_framed[w]);
  }
  for (int i = 0; i < len; ++i) {
    const int c = cyc[i];
    auto& r = rot[to_framed[c]];
    r.clear();
    for (int w : a.embedding.rotation[c]) {
      if (w != v) {
        r.push_back(to_framed[w]);
        continue;
      }
      const int k = arc_of[i];
      if (is_break[i]) {
        // Shared by arc k-1 (ending here) and arc k (starting here).
        r.push_back(frame[k]);
        r.push_back(frame[(k + 3) % 4]);
      } else {
        r.push_back(frame[k]);
      }
    }
  }
  for (int k = 0; k < 4; ++k) {
    auto& r = rot[frame[k]];
    for (int i = br[k]; i <= br[k + 1]; ++i) r.push_back(to_framed[cyc[i % len]]);
    r.push_back(frame[(k + 1) % 4]);
    r.push_back(frame[(k + 3) % 4]);
  }
  f.embedding.outer = {f.west, f.north};
  f.graph = graph_of(f.embedding);
  if (!euler_holds(f.embedding)) throw FramingFailure("framed rotation system is not planar");
  return f;
}

namespace {

int index_of(const std::vector<int>& r, int x) {
  auto it = std::find(r.begin(), r.end(), x);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

}  // namespace

EdgeLabeling compute_rel(const FramedGraph& f) {
  const Graph& g = f.graph;
  const auto& rot = f.embedding.rotation;
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0), on_contour(n, 0);
  std::vector<int> removed_nbrs(n, 0);
  std::vector<int> contour{f.west, f.north, f.east, f.south};
  for (int c : contour) on_contour[c] = 1;
  std::vector<int> order_pos(n, 0);
  std::vector<std::vector<int>> interval(n);
  int next_pos = n;

  auto remove_at = [&](int i) {
    const int v = contour[i];
    const int a = contour[i - 1];
    const int b = contour[i + 1];
    const auto& r = rot[v];
    const int d = static_cast<int>(r.size());
    const int pa = index_of(r, a), pb = index_of(r, b);
    if (pa < 0 || pb < 0) throw LabelingFailure("contour neighbours are not adjacent");
    std::vector<int> arcs[2];
    bool clean[2] = {true, true};
    for (int dir = 0; dir < 2; ++dir) {
      const int step = dir == 0 ? 1 : d - 1;
      for (int p = (pa + step) % d; p != pb; p = (p + step) % d) {
        arcs[dir].push_back(r[p]);
        if (removed[r[p]] || on_contour[r[p]]) clean[dir] = false;
      }
    }
    int pick = -1;
    if (clean[0] && clean[1])
      pick = arcs[0].size() >= arcs[1].size() ? 0 : 1;
    else if (clean[0])
      pick = 0;
    else if (clean[1])
      pick = 1;
    if (pick < 0) throw LabelingFailure("no free lower side at vertex " + std::to_string(v));
    auto& iv = interval[v];
    iv.push_back(a);
    iv.insert(iv.end(), arcs[pick].begin(), arcs[pick].end());
    iv.push_back(b);
    removed[v] = 1;
    on_contour[v] = 0;
    order_pos[v] = next_pos--;
    for (int w : g.neighbors(v)) ++removed_nbrs[w];
    contour.erase(contour.begin() + i);
    contour.insert(contour.begin() + i, arcs[pick].begin(), arcs[pick].end());
    for (int w : arcs[pick]) on_contour[w] = 1;
  };

  remove_at(1);  // north
  remove_at(index_of(contour, f.east));
  while (contour.size() > 2) {
    int chosen = -1;
    for (int i = 1; i + 1 < static_cast<int>(contour.size()) && chosen < 0; ++i) {
      const int c = contour[i];
      if (removed_nbrs[c] < 2) continue;
      bool chord = false;
      for (int y : g.neighbors(c))
        if (!removed[y] && on_contour[y] && y != contour[i - 1] && y != contour[i + 1]) {
          chord = true;
          break;
        }
      if (!chord) chosen = i;
    }
    if (chosen < 0) throw LabelingFailure("canonical ordering got stuck (separating triangle?)");
    remove_at(chosen);
  }
  if (contour[0] != f.west || contour[1] != f.south || next_pos != 2)
    throw LabelingFailure("canonical ordering did not reach the base edge");
  order_pos[f.west] = 1;
  order_pos[f.south] = 2;

  EdgeLabeling l;
  l.framed = f;
  for (int v = 0; v < n; ++v) {
    const auto& iv = interval[v];
    if (iv.empty()) continue;
    const int q = static_cast<int>(iv.size()) - 1;
    int m = 0;
    for (int i = 1; i <= q; ++i)
      if (order_pos[iv[i]] < order_pos[iv[m]]) m = i;
    const int j = m == q ? q - 1 : m;
    for (int i = 0; i <= q; ++i) {
      const int c = iv[i];
      if (f.is_frame(c) && f.is_frame(v)) continue;
      l.edges.push_back({c, v, i <= j ? Axis::Horizontal : Axis::Vertical});
    }
  }
  std::sort(l.edges.begin(), l.edges.end(), [](const LabeledEdge& x, const LabeledEdge& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  if (auto err = audit_labeling(l)) throw LabelingFailure(*err);
  return l;
}

namespace {

// 0: edge to a vertex above, 1: right, 2: below, 3: left.
using DirMap = std::map<std::pair<int, int>, int>;

DirMap directions(const EdgeLabeling& l) {
  DirMap dir;
  for (const auto& e : l.edges) {
    const bool h = e.axis == Axis::Horizontal;
    dir[{e.from, e.to}] = h ? 1 : 0;
    dir[{e.to, e.from}] = h ? 3 : 2;
  }
  return dir;
}

bool single_source_sink_dag(const EdgeLabeling& l, Axis axis, int source, int sink, const std::vector<char>& member) {
  const int n = l.framed.graph.vertex_count();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const auto& e : l.edges)
    if (e.axis == axis) {
      out[e.from].push_back(e.to);
      ++indeg[e.to];
      ++outdeg[e.from];
    }
  int members = 0;
  for (int v = 0; v < n; ++v) {
    if (!member[v]) {
      if (indeg[v] || outdeg[v]) return false;
      continue;
    }
    ++members;
    if ((indeg[v] == 0) != (v == source)) return false;
    if ((outdeg[v] == 0) != (v == sink)) return false;
  }
  std::vector<int> q{source};
  int seen = 0;
  while (!q.empty()) {
    int u = q.back();
    q.pop_back();
    ++seen;
    for (int w : out[u])
      if (--indeg[w] == 0) q.push_back(w);
  }
  return seen == members;
}

}  // namespace

std::optional<std::string> audit_labeling(const EdgeLabeling& l) {
  const FramedGraph& f = l.framed;
  const int n = f.graph.vertex_count();
  std::size_t expected = f.graph.edge_count() - 4;
  if (l.edges.size() != expected) return "labeling covers " + std::to_string(l.edges.size()) + " of " + std::to_string(expected) + " edges";
  DirMap dir = directions(l);
  if (dir.size() != 2 * expected) return "an edge is labeled twice";
  for (const auto& e : l.edges)
    if (!f.graph.has_edge(e.from, e.to)) return "labeled pair is not an edge";

  int orientation = 0;  // +1: above, right, below, left; -1: mirrored
  for (int v = 0; v < n; ++v) {
    if (f.is_frame(v)) continue;
    const auto& r = f.embedding.rotation[v];
    std::vector<int> seq;
    for (int w : r) {
      auto it = dir.find({v, w});
      if (it == dir.end()) return "unlabeled edge at vertex " + std::to_string(v);
      seq.push_back(it->second);
    }
    // Collapse into cyclic blocks.
    std::vector<int> blocks;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (i == 0 || seq[i] != seq[i - 1]) blocks.push_back(seq[i]);
    if (blocks.size() > 1 && blocks.front() == blocks.back()) blocks.pop_back();
    if (blocks.size() != 4) return "vertex " + std::to_string(v) + " does not have four label blocks";
    int o = 0;
    if ((blocks[1] - blocks[0] + 4) % 4 == 1) o = 1;
    if ((blocks[1] - blocks[0] + 4) % 4 == 3) o = -1;
    for (int i = 0; i < 4 && o != 0; ++i)
      if ((blocks[(i + 1) % 4] - blocks[i] + 4) % 4 != (o == 1 ? 1 : 3)) o = 0;
    if (o == 0) return "vertex " + std::to_string(v) + " has label blocks out of order";
    if (orientation == 0) orientation = o;
    if (o != orientation) return "vertex " + std::to_string(v) + " is mirrored relative to the others";
  }
  for (const auto& e : l.edges) {
    if (e.from == f.north || e.to == f.south) return "edge leaves the north or enters the south frame vertex";
    if (e.from == f.east || e.to == f.west) return "edge leaves the east or enters the west frame vertex";
    if ((e.to == f.north || e.from == f.south) && e.axis != Axis::Vertical) return "north/south edge is not vertical";
    if ((e.to == f.east || e.from == f.west) && e.axis != Axis::Horizontal) return "east/west edge is not horizontal";
  }
  std::vector<char> vmember(n, 1), hmember(n, 1);
  vmember[f.west] = vmember[f.east] = 0;
  hmember[f.north] = hmember[f.south] = 0;
  if (!single_source_sink_dag(l, Axis::Vertical, f.south, f.north, vmember)) return "vertical labels are not a single-source single-sink DAG";
  if (!single_source_sink_dag(l, Axis::Horizontal, f.west, f.east, hmember)) return "horizontal labels are not a single-source single-sink DAG";
  return std::nullopt;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// Coordinates per segment class. Returns longest-path values, or distinct
// topological ranks when `ranks` is set.
std::vector<Coord> layer(UnionFind& uf, int nodes, const std::vector<std::pair<int, int>>& arcs, bool ranks) {
  std::vector<std::vector<int>> out(nodes);
  std::vector<int> indeg(nodes, 0);
  std::vector<char> live(nodes, 0);
  for (auto [a, b] : arcs) {
    int x = uf.find(a), y = uf.find(b);
    if (x == y) throw LabelingFailure("segment constraint loops onto itself");
    out[x].push_back(y);
    ++indeg[y];
    live[x] = live[y] = 1;
  }
  std::vector<Coord> dist(nodes, 0);
  using Item = std::pair<Coord, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (int i = 0; i < nodes; ++i)
    if (live[i] && indeg[i] == 0) ready.push({0, i});
  std::vector<Coord> rank(nodes, 0);
  Coord next_rank = 0;
  int done = 0;
  while (!ready.empty()) {
    auto [dv, u] = ready.top();
    ready.pop();
    rank[u] = next_rank++;
    ++done;
    for (int w : out[u]) {
      dist[w] = std::max(dist[w], dist[u] + 1);
      if (--indeg[w] == 0) ready.push({dist[w], w});
    }
  }
  int live_count = 0;
  for (int i = 0; i < nodes; ++i) live_count += live[i];
  if (done != live_count) throw LabelingFailure("segment constraints contain a cycle");
  std::vector<Coord> val(nodes);
  for (int i = 0; i < nodes; ++i) val[i] = ranks ? rank[uf.find(i)] : dist[uf.find(i)];
  return val;
}

bool has_four_corner_point(const Layout& l) {
  std::map<std::pair<Coord, Coord>, int> count;
  for (const auto& r : l.rects) {
    if (++count[{r.x, r.y}] >= 4) return true;
    if (++count[{r.right(), r.y}] >= 4) return true;
    if (++count[{r.x, r.top()}] >= 4) return true;
    if (++count[{r.right(), r.top()}] >= 4) return true;
  }
  return false;
}

Layout coordinates(const EdgeLabeling& l, bool ranks) {
  const FramedGraph& f = l.framed;
  const int n = f.graph.vertex_count();
  // Node 2v is the left (bottom) side of v, node 2v+1 its right (top) side.
  UnionFind ux(2 * n), uy(2 * n);
  std::vector<std::pair<int, int>> ax, ay;
  for (int v = 0; v < n; ++v) {
    if (f.is_frame(v)) continue;
    ax.push_back({2 * v, 2 * v + 1});
    ay.push_back({2 * v, 2 * v + 1});
  }
  for (const auto& e : l.edges) {
    const int u = e.from, v = e.to;
    const bool inner = !f.is_frame(u) && !f.is_frame(v);
    if (e.axis == Axis::Horizontal) {
      ux.unite(2 * u + 1, 2 * v);
      if (inner) {
        ay.push_back({2 * u, 2 * v + 1});
        ay.push_back({2 * v, 2 * u + 1});
      }
    } else {
      uy.unite(2 * u + 1, 2 * v);
      if (inner) {
        ax.push_back({2 * u, 2 * v + 1});
        ax.push_back({2 * v, 2 * u + 1});
      }
    }
  }
  auto X = layer(ux, 2 * n, ax, ranks);
  auto Y = layer(uy, 2 * n, ay, ranks);
  const Coord x0 = X[2 * f.west + 1];
  const Coord y0 = Y[2 * f.south + 1];
  Layout out;
  for (int v = 0; v < n; ++v) {
    if (f.is_frame(v)) continue;
    Rect r;
    r.id = f.original[v];
    r.x = X[2 * v] - x0;
    r.y = Y[2 * v] - y0;
    r.w = X[2 * v + 1] - X[2 * v];
    r.h = Y[2 * v + 1] - Y[2 * v];
    out.rects.push_back(r);
  }
  return out;
}

}  // namespace

Layout rel_to_dissection(const EdgeLabeling& l) {
  Layout d = coordinates(l, false);
  if (has_four_corner_point(d)) d = coordinates(l, true);
  return d;
}

Layout rectangular_dual(const AugmentedGraph& a, int v) {
  return rel_to_dissection(compute_rel(frame_for_dual(a, v)));
}

std::optional<std::string> audit_dissection(const Layout& d, const Graph& g) {
  for (const auto& r : d.rects)
    if (r.w < 1 || r.h < 1) return std::string("degenerate rectangle");
  if (!interior_overlaps(d).empty()) return std::string("rectangles overlap");
  Coord sum = 0;
  for (const auto& r : d.rects) sum += r.w * r.h;
  if (sum != area(d)) return std::string("rectangles do not tile the bounding box");
  if (has_four_corner_point(d)) return std::string("four rectangles meet at a point");
  if (!(contact_graph(d, g.vertex_count()) == g)) return std::string("adjacency graph differs");
  return std::nullopt;
}

}  // namespace rectlay
