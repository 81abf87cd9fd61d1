#include "rectlay/pipeline.hpp"

#include <algorithm>
#include <tuple>

#include "rectlay/errors.hpp"
#include "rectlay/rectdual.hpp"

namespace rectlay {
namespace {

Layout small_layout(const Graph& g) {
  Layout l;
  const int n = g.vertex_count();
  if (n == 1) {
    l.rects.push_back({0, 0, 0, 1, 1});
  } else if (n == 2) {
    l.rects.push_back({0, 0, 0, 1, 1});
    l.rects.push_back({1, 1, 0, 1, 1});
  } else if (g.edge_count() == 2) {
    int mid = 0;
    while (g.degree(mid) != 2) ++mid;
    const int a = g.neighbors(mid)[0], c = g.neighbors(mid)[1];
    l.rects.push_back({a, 0, 0, 1, 1});
    l.rects.push_back({mid, 1, 0, 1, 1});
    l.rects.push_back({c, 2, 0, 1, 1});
  } else {
    l.rects.push_back({0, 0, 0, 2, 1});
    l.rects.push_back({1, 0, 1, 1, 1});
    l.rects.push_back({2, 1, 1, 1, 1});
  }
  std::sort(l.rects.begin(), l.rects.end(), [](const Rect& a, const Rect& b) { return a.id < b.id; });
  return l;
}

}  // namespace

Layout gapify(const Layout& d, const std::vector<int>& added) {
  Layout l = d;
  for (auto& r : l.rects)
    if (std::binary_search(added.begin(), added.end(), r.id)) r.id = kGap;
  return l;
}

Layout layout_graph(const Graph& g, PipelineTrace* trace) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  if (!is_connected(g)) throw PreconditionViolation("layout_graph needs a connected graph");
  if (n <= 3) return small_layout(g);
  auto verdict = is_layoutable(g);
  if (!verdict.layoutable) throw NotLayoutable(verdict);

  RotationEmbedding e = embed_without_filled_triangles(g);
  AugmentedGraph a = augment_to_4ct(e);
  Layout d = rectangular_dual(a, a.outer_vertex);
  std::vector<int> added = a.added_vertices;
  Layout l = gapify(d, added);
  l.mode = LayoutMode::Strong;
  std::sort(l.rects.begin(), l.rects.end(), [](const Rect& x, const Rect& y) {
    if (x.gap() != y.gap()) return !x.gap();
    return std::tie(x.id, x.x, x.y) < std::tie(y.id, y.x, y.y);
  });
  auto rep = validate_layout(l, g, LayoutMode::Strong);
  if (!rep.ok) throw Error("pipeline produced an invalid layout: " + rep.summary());
  if (trace) {
    trace->framed_vertex_count = a.graph.vertex_count() - 1 + 4;
    trace->augmented = std::move(a);
    trace->dissection = std::move(d);
  }
  return l;
}

}  // namespace rectlay
