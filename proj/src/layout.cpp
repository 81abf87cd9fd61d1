#include "rectlay/layout.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "rectlay/errors.hpp"

namespace rectlay {

std::string to_string(LayoutMode m) { return m == LayoutMode::Strong ? "strong" : "weak"; }

BBox bounding_box(const Layout& l) {
  BBox b;
  if (l.rects.empty()) return b;
  b.x0 = b.y0 = INT64_MAX;
  b.x1 = b.y1 = INT64_MIN;
  for (const auto& r : l.rects) {
    b.x0 = std::min(b.x0, r.x);
    b.y0 = std::min(b.y0, r.y);
    b.x1 = std::max(b.x1, r.right());
    b.y1 = std::max(b.y1, r.top());
  }
  return b;
}

std::pair<Coord, Coord> bbox(const Layout& l) {
  BBox b = bounding_box(l);
  return {b.width(), b.height()};
}

Coord area(const Layout& l) {
  auto [w, h] = bbox(l);
  return w * h;
}

namespace {

struct Side {
  Coord line, lo, hi;
  int kind;  // 0: rectangle lies below/left of the line, 1: above/right
  std::size_t idx;
};

void sweep_line(std::vector<Side>& sides, bool horizontal, std::vector<Contact>& out) {
  std::sort(sides.begin(), sides.end(), [](const Side& a, const Side& b) {
    return std::tie(a.line, a.lo, a.kind, a.idx) < std::tie(b.line, b.lo, b.kind, b.idx);
  });
  std::size_t i = 0;
  std::vector<const Side*> active[2];
  while (i < sides.size()) {
    std::size_t j = i;
    while (j < sides.size() && sides[j].line == sides[i].line) ++j;
    active[0].clear();
    active[1].clear();
    for (std::size_t k = i; k < j; ++k) {
      const Side& s = sides[k];
      for (auto& act : active)
        std::erase_if(act, [&](const Side* t) { return t->hi <= s.lo; });
      for (const Side* t : active[1 - s.kind]) {
        Contact c;
        c.a = s.kind == 0 ? s.idx : t->idx;
        c.b = s.kind == 0 ? t->idx : s.idx;
        c.horizontal = horizontal;
        c.line = s.line;
        c.lo = s.lo;
        c.hi = std::min(s.hi, t->hi);
        out.push_back(c);
      }
      active[s.kind].push_back(&s);
    }
    i = j;
  }
}

}  // namespace

std::vector<Contact> contacts(const Layout& l) {
  std::vector<Contact> out;
  std::vector<Side> hs, vs;
  for (std::size_t i = 0; i < l.rects.size(); ++i) {
    const Rect& r = l.rects[i];
    if (r.w <= 0 || r.h <= 0) continue;
    hs.push_back({r.top(), r.x, r.right(), 0, i});
    hs.push_back({r.y, r.x, r.right(), 1, i});
    vs.push_back({r.right(), r.y, r.top(), 0, i});
    vs.push_back({r.x, r.y, r.top(), 1, i});
  }
  sweep_line(hs, true, out);
  sweep_line(vs, false, out);
  std::sort(out.begin(), out.end(), [](const Contact& a, const Contact& b) {
    return std::tie(a.a, a.b, a.horizontal) < std::tie(b.a, b.b, b.horizontal);
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> corner_touches(const Layout& l) {
  // Key: corner point; value: (corner kind, rect). Kinds: 0 BL, 1 BR, 2 TL, 3 TR.
  std::map<std::pair<Coord, Coord>, std::vector<std::pair<int, std::size_t>>> at;
  for (std::size_t i = 0; i < l.rects.size(); ++i) {
    const Rect& r = l.rects[i];
    at[{r.x, r.y}].push_back({0, i});
    at[{r.right(), r.y}].push_back({1, i});
    at[{r.x, r.top()}].push_back({2, i});
    at[{r.right(), r.top()}].push_back({3, i});
  }
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [p, list] : at)
    for (const auto& [ka, a] : list)
      for (const auto& [kb, b] : list)
        if (a < b && ka + kb == 3) out.insert({a, b});
  return {out.begin(), out.end()};
}

std::vector<std::pair<std::size_t, std::size_t>> interior_overlaps(const Layout& l) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < l.rects.size(); ++i)
    if (l.rects[i].w > 0 && l.rects[i].h > 0) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(l.rects[a].x, a) < std::tie(l.rects[b].x, b);
  });
  using Ends = std::pair<Coord, std::size_t>;
  std::priority_queue<Ends, std::vector<Ends>, std::greater<>> ending;
  std::set<std::pair<Coord, std::size_t>> active;  // (y, idx)
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i : order) {
    const Rect& r = l.rects[i];
    while (!ending.empty() && ending.top().first <= r.x) {
      std::size_t j = ending.top().second;
      ending.pop();
      active.erase({l.rects[j].y, j});
    }
    auto it = active.lower_bound({r.top(), 0});
    while (it != active.begin()) {
      --it;
      const Rect& q = l.rects[it->second];
      if (q.top() > r.y)
        out.insert({std::min(i, it->second), std::max(i, it->second)});
      else
        break;
    }
    active.insert({r.y, i});
    ending.push({r.right(), i});
  }
  return {out.begin(), out.end()};
}

Graph contact_graph(const Layout& l, int vertex_count) {
  int n = vertex_count;
  if (n < 0) {
    n = 0;
    for (const auto& r : l.rects) n = std::max(n, r.id + 1);
  }
  Graph g(n);
  for (const auto& c : contacts(l)) {
    int u = l.rects[c.a].id, v = l.rects[c.b].id;
    if (u < 0 || v < 0 || u == v || u >= n || v >= n) continue;
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (ok ? "ok" : "invalid");
  if (!missing.empty()) os << "; missing " << missing.size();
  if (!extra.empty()) os << "; extra " << extra.size();
  if (!overlaps.empty()) os << "; overlaps " << overlaps.size();
  for (const auto& p : problems) os << "; " << p;
  return os.str();
}

ValidationReport validate_layout(const Layout& l, const Graph& g, LayoutMode mode) {
  ValidationReport rep;
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  for (const auto& r : l.rects) {
    if (r.w < 1 || r.h < 1) rep.problems.push_back("degenerate rectangle");
    if (r.gap()) continue;
    if (r.id >= n) {
      rep.problems.push_back("rectangle id " + std::to_string(r.id) + " out of range");
      continue;
    }
    if (++seen[r.id] > 1) rep.problems.push_back("vertex " + std::to_string(r.id) + " drawn twice");
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) rep.problems.push_back("vertex " + std::to_string(v) + " not drawn");
  rep.overlaps = interior_overlaps(l);
  Graph c = contact_graph(l, n);
  for (auto e : g.edges())
    if (!c.has_edge(e.first, e.second)) rep.missing.push_back(e);
  if (mode == LayoutMode::Strong)
    for (auto e : c.edges())
      if (!g.has_edge(e.first, e.second)) rep.extra.push_back(e);
  rep.ok = rep.problems.empty() && rep.overlaps.empty() && rep.missing.empty() && rep.extra.empty();
  return rep;
}

Layout scaled(const Layout& l, Coord f) {
  Layout out = l;
  for (auto& r : out.rects) {
    r.x *= f;
    r.y *= f;
    r.w *= f;
    r.h *= f;
  }
  return out;
}

Layout translated(const Layout& l, Coord dx, Coord dy) {
  Layout out = l;
  for (auto& r : out.rects) {
    r.x += dx;
    r.y += dy;
  }
  return out;
}

Layout normalized(const Layout& l) {
  BBox b = bounding_box(l);
  return translated(l, -b.x0, -b.y0);
}

Layout without_vertex(const Layout& l, int id) {
  Layout out;
  out.mode = l.mode;
  for (Rect r : l.rects) {
    if (r.id == id) continue;
    if (r.id > id) --r.id;
    out.rects.push_back(r);
  }
  return out;
}

Graph without_vertex(const Graph& g, int v) {
  Graph h(g.vertex_count() - 1);
  auto map = [v](int u) { return u > v ? u - 1 : u; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) h.add_edge(map(a), map(b));
  return h;
}

}  // namespace rectlay
