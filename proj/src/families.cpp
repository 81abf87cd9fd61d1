#include "rectlay/families.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "rectlay/errors.hpp"

namespace rectlay {
namespace {

int add_tagged(Graph& g, std::vector<std::string>& tags, std::string tag) {
  tags.push_back(std::move(tag));
  return g.add_vertex();
}

struct LadderIds {
  int left = -1, right = -1;
  std::vector<int> rungs;
};

// Rungs are joined by direct edges.
LadderIds add_ladder(Graph& g, std::vector<std::string>& tags, int n, const std::string& name) {
  LadderIds ids;
  ids.left = add_tagged(g, tags, name + ".L");
  ids.right = add_tagged(g, tags, name + ".R");
  for (int i = 1; i <= n; ++i) {
    int x = add_tagged(g, tags, name + ".x" + std::to_string(i));
    g.add_edge(ids.left, x);
    g.add_edge(x, ids.right);
    if (!ids.rungs.empty()) g.add_edge(ids.rungs.back(), x);
    ids.rungs.push_back(x);
  }
  return ids;
}

// top/bottom < 0 leaves the accordion open.
void add_accordion(Graph& g, std::vector<std::string>& tags, int n, const std::string& name, int top,
                   int bottom) {
  const int x = add_tagged(g, tags, name + ".x");
  const int y = add_tagged(g, tags, name + ".y");
  for (int p = 0; p < 3; ++p)
    for (int k = 0; k < n; ++k) {
      int v = add_tagged(g, tags, name + ".p" + std::to_string(p + 1) + "." + std::to_string(k + 1));
      if (k > 0) g.add_edge(v - 1, v);
      if (p <= 1) g.add_edge(x, v);
      if (p >= 1) g.add_edge(y, v);
      if (p == 0 && top >= 0) g.add_edge(top, v);
      if (p == 2 && bottom >= 0) g.add_edge(bottom, v);
    }
}

}  // namespace

Graph gen_ladder(int n, int subdivision) {
  if (n < 1 || subdivision < 0) throw InvalidParameters("ladder needs n >= 1 and subdivision >= 0");
  Graph g(n + 2);
  for (int i = 0; i < n; ++i) {
    g.add_edge(0, 2 + i);
    g.add_edge(2 + i, 1);
  }
  for (int i = 0; i + 1 < n; ++i) {
    int prev = 2 + i;
    for (int s = 0; s < subdivision; ++s) {
      int v = g.add_vertex();
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, 3 + i);
  }
  return g;
}

Graph gen_ij_ladder(int i, int j) {
  if (i < 2 || j < 1) throw InvalidParameters("(i,j)-ladder needs i >= 2 and j >= 1");
  Graph g = gen_ladder(i);
  const int a = 1 + i / 2, b = 2 + i / 2;  // x_{i/2}, x_{i/2+1}
  // the inner rungs sit between the two struts, which no longer touch
  g.remove_edge(a, b);
  for (int k = 0; k < j; ++k) {
    int y = g.add_vertex();
    g.add_edge(a, y);
    g.add_edge(y, b);
    if (k > 0) g.add_edge(y - 1, y);
  }
  return g;
}

Graph gen_accordion(int n, bool enclosed) {
  if (n < 1) throw InvalidParameters("accordion needs n >= 1");
  Graph g;
  std::vector<std::string> tags;
  add_accordion(g, tags, n, "A", -1, -1);
  if (enclosed) {
    const int t = g.add_vertex(), b = g.add_vertex();
    for (int k = 0; k < n; ++k) {
      g.add_edge(t, 2 + k);
      g.add_edge(b, 2 + 2 * n + k);
    }
  }
  return g;
}

NMTSInstance NMTSInstance::make(std::vector<long long> x, std::vector<long long> y, std::vector<long long> b) {
  if (b.empty() || x.size() != b.size() || y.size() != b.size())
    throw InvalidParameters("X, Y and B need the same positive length");
  for (const auto* s : {&x, &y, &b})
    for (long long v : *s)
      if (v <= 0) throw InvalidParameters("sizes must be positive");
  const long long lhs = std::accumulate(x.begin(), x.end(), 0LL) + std::accumulate(y.begin(), y.end(), 0LL);
  const long long rhs = std::accumulate(b.begin(), b.end(), 0LL);
  if (lhs != rhs)
    throw UnbalancedInstance("sum of X and Y is " + std::to_string(lhs) + " but targets sum to " +
                             std::to_string(rhs));
  NMTSInstance inst;
  inst.x = std::move(x);
  inst.y = std::move(y);
  inst.b = std::move(b);
  return inst;
}

long long NMTSInstance::b_star() const { return *std::max_element(b.begin(), b.end()); }

GadgetGraph gen_np_gadget(const NMTSInstance& in) {
  NMTSInstance inst = NMTSInstance::make(in.x, in.y, in.b);
  GadgetGraph out;
  for (int i = 0; i < inst.m(); ++i)
    if (inst.delta(i) < 3) out.scale = 3;
  if (out.scale != 1)
    for (auto* s : {&inst.x, &inst.y, &inst.b})
      for (auto& v : *s) v *= out.scale;
  const int m = inst.m();
  const long long bs = inst.b_star();
  if (2 * bs + 2 > 100000) throw InvalidParameters("gadget too large");

  Graph& g = out.graph;
  auto& tags = out.tags;
  const int X = add_tagged(g, tags, "X");
  const int Y = add_tagged(g, tags, "Y");
  const int t = add_tagged(g, tags, "t");
  const int b = add_tagged(g, tags, "b");
  const int gs = add_tagged(g, tags, "g*");
  std::vector<int> gi;
  for (int i = 0; i <= m; ++i) gi.push_back(add_tagged(g, tags, "g" + std::to_string(i)));
  for (int hub : {X, Y}) {
    for (int v : {t, b, gs}) g.add_edge(hub, v);
    for (int v : gi) g.add_edge(hub, v);
  }
  g.add_edge(t, gi[0]);
  g.add_edge(b, gs);
  for (int i = 0; i < m; ++i) {
    const std::string k = std::to_string(i + 1);
    LadderIds r = add_ladder(g, tags, static_cast<int>(inst.x[i]), "R" + k);
    g.add_edge(X, r.left);
    g.add_edge(X, r.right);
    LadderIds s = add_ladder(g, tags, static_cast<int>(inst.y[i]), "S" + k);
    g.add_edge(Y, s.left);
    g.add_edge(Y, s.right);
    add_accordion(g, tags, static_cast<int>(inst.delta(i)), "A" + k, gi[i], gi[i + 1]);
    out.delta.push_back(inst.delta(i));
  }
  add_accordion(g, tags, static_cast<int>(2 * bs + 2), "A*", gi[m], gs);
  out.width = 2 * bs + 6;
  out.height = 6LL * m + 9;
  out.instance = std::move(inst);
  return out;
}

RootedTree gen_complete_binary(int i) {
  if (i < 0 || i > 24) throw InvalidParameters("complete binary tree needs 0 <= i <= 24");
  return complete_tree(2, i);
}

RootedTree gen_star_tree(int n) {
  if (n < 2 || (n & (n - 1)) != 0) throw InvalidParameters("star tree needs n a power of two, n >= 2");
  int k = 0;
  while ((1 << k) < n) ++k;
  RootedTree tk = gen_complete_binary(k);
  std::vector<int> parent = tk.parent;
  const int centre = static_cast<int>(parent.size());
  parent.push_back(tk.root);
  for (int i = 0; i < n; ++i) parent.push_back(centre);
  return RootedTree::from_parents(parent);
}

long long trivial_lower_bound(const Graph& g) {
  long long quarter = 0, half = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const long long d = g.degree(v);
    quarter += (d + 3) / 4;
    // ceil((d-2)/2); a negative value only occurs for an isolated vertex
    half += d >= 2 ? (d - 1) / 2 : (d == 1 ? 0 : -1);
  }
  return std::max<long long>({g.vertex_count(), quarter, half});
}

std::vector<int> extremal_path(const Layout& l, const std::vector<int>& ids, bool vertical) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < l.rects.size(); ++i)
    if (!l.rects[i].gap() && std::binary_search(ids.begin(), ids.end(), l.rects[i].id)) idx.push_back(i);
  if (idx.empty()) return {};
  Layout sub;
  for (auto i : idx) sub.rects.push_back(l.rects[i]);
  const BBox box = bounding_box(sub);
  const std::size_t k = sub.rects.size();
  std::vector<std::vector<std::size_t>> adj(k);
  for (const auto& c : contacts(sub)) {
    adj[c.a].push_back(c.b);
    adj[c.b].push_back(c.a);
  }
  auto at_start = [&](const Rect& r) { return vertical ? r.y == box.y0 : r.x == box.x0; };
  auto at_end = [&](const Rect& r) { return vertical ? r.top() == box.y1 : r.right() == box.x1; };
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sub.rects[a].id < sub.rects[b].id; });
  std::vector<long> from(k, -1);
  std::vector<char> seen(k, 0);
  std::deque<std::size_t> q;
  for (auto i : order)
    if (at_start(sub.rects[i])) {
      seen[i] = 1;
      q.push_back(i);
    }
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    if (at_end(sub.rects[u])) {
      std::vector<int> path;
      for (long v = static_cast<long>(u); v >= 0; v = from[v]) path.push_back(sub.rects[v].id);
      std::reverse(path.begin(), path.end());
      return path;
    }
    std::sort(adj[u].begin(), adj[u].end(), [&](auto a, auto b) { return sub.rects[a].id < sub.rects[b].id; });
    for (auto v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        from[v] = static_cast<long>(u);
        q.push_back(v);
      }
  }
  return {};
}

}  // namespace rectlay
