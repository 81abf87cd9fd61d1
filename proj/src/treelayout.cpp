#include "rectlay/treelayout.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "rectlay/errors.hpp"

namespace rectlay {
namespace {

void finish(RootedTree& t) {
  const int n = t.size();
  std::vector<int> order{t.root};
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : t.children[order[i]]) order.push_back(c);
  if (static_cast<int>(order.size()) != n) throw InvalidParameters("parent map is not a tree");
  t.desc.assign(n, 1);
  for (int i = n - 1; i > 0; --i) t.desc[t.parent[order[i]]] += t.desc[order[i]];
}

}  // namespace

RootedTree RootedTree::from_parents(const std::vector<int>& parent) {
  RootedTree t;
  const int n = static_cast<int>(parent.size());
  if (n == 0) throw InvalidParameters("empty tree");
  t.parent = parent;
  t.children.assign(n, {});
  t.root = -1;
  for (int v = 0; v < n; ++v) {
    if (parent[v] < 0) {
      if (t.root >= 0) throw InvalidParameters("more than one root");
      t.root = v;
    } else if (parent[v] >= n) {
      throw InvalidParameters("parent id out of range");
    } else {
      t.children[parent[v]].push_back(v);
    }
  }
  if (t.root < 0) throw InvalidParameters("no root");
  finish(t);
  return t;
}

RootedTree RootedTree::from_graph(const Graph& g, int root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw InvalidParameters("root out of range");
  if (g.edge_count() != n - 1 || !is_connected(g)) throw InvalidParameters("graph is not a tree");
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  std::vector<char> seen(n, 0);
  std::deque<int> q{root};
  seen[root] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        t.parent[v] = u;
        t.children[u].push_back(v);
        q.push_back(v);
      }
  }
  finish(t);
  return t;
}

int RootedTree::depth() const {
  std::vector<int> d(size(), 0);
  std::vector<int> stack{root};
  d[root] = 1;
  int best = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    best = std::max(best, d[u]);
    for (int c : children[u]) {
      d[c] = d[u] + 1;
      stack.push_back(c);
    }
  }
  return best;
}

Graph RootedTree::graph() const {
  Graph g(size());
  for (int v = 0; v < size(); ++v)
    if (parent[v] >= 0) g.add_edge(v, parent[v]);
  return g;
}

HeavyPathPartition heavy_path_partition(const RootedTree& t) {
  HeavyPathPartition p;
  p.path_of.assign(t.size(), -1);
  auto heavy_child = [&](int u) {
    for (int c : t.children[u])
      if (2 * t.desc[c] > t.desc[u]) return c;
    return -1;
  };
  std::vector<int> tops{t.root};
  for (int v = 0; v < t.size(); ++v)
    if (v != t.root && 2 * t.desc[v] <= t.desc[t.parent[v]]) tops.push_back(v);
  std::sort(tops.begin(), tops.end());
  for (int top : tops) {
    std::vector<int> path;
    for (int u = top; u >= 0; u = heavy_child(u)) {
      p.path_of[u] = static_cast<int>(p.paths.size());
      path.push_back(u);
    }
    p.paths.push_back(std::move(path));
  }
  return p;
}

HeavyPathPartition singleton_partition(const RootedTree& t) {
  HeavyPathPartition p;
  for (int v = 0; v < t.size(); ++v) {
    p.path_of.push_back(v);
    p.paths.push_back({v});
  }
  return p;
}

CompressedTree compress(const RootedTree& t, const HeavyPathPartition& p) {
  const int n = t.size();
  if (static_cast<int>(p.path_of.size()) != n) throw PartitionMismatch("path_of has the wrong size");
  std::vector<int> count(n, 0);
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    const auto& path = p.paths[i];
    if (path.empty()) throw PartitionMismatch("empty path");
    for (std::size_t j = 0; j < path.size(); ++j) {
      const int v = path[j];
      if (v < 0 || v >= n) throw PartitionMismatch("vertex out of range");
      if (++count[v] > 1) throw PartitionMismatch("vertex on two paths");
      if (p.path_of[v] != static_cast<int>(i)) throw PartitionMismatch("path_of disagrees with paths");
      if (j > 0 && t.parent[v] != path[j - 1]) throw PartitionMismatch("path is not a downward chain");
    }
  }
  for (int v = 0; v < n; ++v)
    if (count[v] != 1) throw PartitionMismatch("vertex on no path");
  CompressedTree ct;
  const int np = static_cast<int>(p.paths.size());
  ct.parent.assign(np, -1);
  ct.level.assign(np, 0);
  std::vector<int> order{p.path_of[t.root]};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int u : p.paths[order[i]])
      for (int c : t.children[u])
        if (p.path_of[c] != order[i]) {
          const int q = p.path_of[c];
          if (p.paths[q].front() != c) throw PartitionMismatch("path does not start below its parent path");
          ct.parent[q] = order[i];
          ct.level[q] = ct.level[order[i]] + 1;
          order.push_back(q);
        }
  for (int l : ct.level) ct.depth = std::max(ct.depth, l + 1);
  return ct;
}

Layout layout_tree_B(const RootedTree& t, const HeavyPathPartition& p, TreeStyle style) {
  const CompressedTree ct = compress(t, p);
  const bool sep = style == TreeStyle::Separated;
  const int np = static_cast<int>(p.paths.size());
  std::vector<int> rows(ct.depth, 1);
  if (sep)
    for (int q = 0; q < np; ++q)
      if (ct.level[q] > 0 && p.paths[q].size() > 1) rows[ct.level[q]] = 2;
  std::vector<Coord> top(ct.depth, 0);
  Coord h = 0;
  for (int r : rows) h += r;
  for (int l = 0; l < ct.depth; ++l) top[l] = l == 0 ? h : top[l - 1] - rows[l - 1];

  Layout out;
  out.mode = sep ? LayoutMode::Strong : LayoutMode::Weak;
  out.rects.resize(t.size());
  std::vector<Coord> px(np, 0);
  std::vector<int> order{p.path_of[t.root]};
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const int q = order[oi];
    const auto& path = p.paths[q];
    const int lvl = ct.level[q];
    Coord cur = px[q];
    for (std::size_t i = 0; i < path.size(); ++i) {
      const int u = path[i];
      const bool last = i + 1 == path.size();
      const Coord s = t.desc[u] - (last ? 0 : t.desc[path[i + 1]]);
      Rect r;
      r.id = u;
      r.x = cur;
      r.w = sep ? 2 * s - (last ? 1 : 0) : s;
      r.y = top[lvl] - rows[lvl];
      r.h = rows[lvl] == 2 && i == 0 ? 2 : 1;
      out.rects[u] = r;
      Coord child_x = sep ? cur + 1 : cur;
      for (int c : t.children[u]) {
        if (!last && c == path[i + 1]) continue;
        const int cq = p.path_of[c];
        px[cq] = child_x;
        child_x += sep ? 2 * t.desc[c] : t.desc[c];
        order.push_back(cq);
      }
      cur += sep ? 2 * s : s;
    }
  }
  return out;
}

Layout layout_tree_A(const RootedTree& t, TreeStyle style) {
  return layout_tree_B(t, singleton_partition(t), style);
}

RootedTree complete_tree(int k, int c) {
  if (k < 2 || c < 0) throw InvalidParameters("complete tree needs k >= 2 and c >= 0");
  long long n = 1, level = 1;
  for (int i = 0; i < c; ++i) {
    level *= k;
    n += level;
    if (n > 50'000'000) throw InvalidParameters("complete tree too large");
  }
  std::vector<int> parent(n, -1);
  for (long long v = 1; v < n; ++v) parent[v] = static_cast<int>((v - 1) / k);
  return RootedTree::from_parents(parent);
}

namespace {

struct Shape {
  Layout l;
  Coord w = 0, h = 0;
};

Shape build_complete(int k, int c, int m, int l, long long r, int j) {
  Shape s;
  if (j == 0) {
    s.l.rects.push_back({static_cast<int>(r), 0, 0, 1, 1});
    s.w = s.h = 1;
    return s;
  }
  const int period = 2 * m + 2 * l;
  const bool rotate = ((c - j) % period) < 2 * m;
  Coord cursor = 0, sub_h = 0;
  for (int i = 0; i < k; ++i) {
    Shape sub = build_complete(k, c, m, l, static_cast<long long>(k) * r + 1 + i, j - 1);
    Coord w = sub.w, h = sub.h;
    if (rotate) {
      // Quarter turn counter-clockwise: the right column becomes the top row.
      for (auto& q : sub.l.rects) q = {q.id, sub.h - q.y - q.h, q.x, q.h, q.w};
      std::swap(w, h);
    }
    for (auto& q : sub.l.rects) {
      q.x += cursor;
      s.l.rects.push_back(q);
    }
    cursor += w + 1;
    sub_h = h;
  }
  s.w = cursor;
  s.h = sub_h + 1;
  s.l.rects.push_back({static_cast<int>(r), 0, sub_h, s.w, 1});
  return s;
}

}  // namespace

CompleteTreeLayout layout_complete_tree(int k, int c, int m, int l) {
  if (k < 2 || c < 0 || m < 0 || l < 0 || m + l == 0)
    throw InvalidParameters("need k >= 2, c >= 0, m, l >= 0 and m + l > 0");
  long long n = 1, level = 1;
  for (int i = 0; i < c; ++i) {
    level *= k;
    n += level;
    if (n > 50'000'000) throw InvalidParameters("complete tree too large");
  }
  Shape s = build_complete(k, c, m, l, 0, c);
  std::sort(s.l.rects.begin(), s.l.rects.end(), [](const Rect& a, const Rect& b) { return a.id < b.id; });
  CompleteTreeLayout out;
  out.layout = std::move(s.l);
  out.layout.mode = LayoutMode::Strong;
  out.width = s.w;
  out.height = s.h;
  out.alpha_target = 1.0 - static_cast<double>(m) / (2.0 * m + 2.0 * l);
  out.alpha_achieved = n > 1 ? std::log(static_cast<double>(s.w)) / std::log(static_cast<double>(n)) : 0.0;
  return out;
}

}  // namespace rectlay
