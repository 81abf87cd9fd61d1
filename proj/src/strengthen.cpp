#include <algorithm>
#include <limits>
#include <optional>
#include <tuple>

#include "rectlay/errors.hpp"
#include "rectlay/pipeline.hpp"

namespace rectlay {
namespace {

constexpr Coord kCoordLimit = Coord{1} << 60;

void transpose(Layout& l) {
  for (auto& r : l.rects) {
    std::swap(r.x, r.y);
    std::swap(r.w, r.h);
  }
}

void mirror_x(Layout& l) {
  for (auto& r : l.rects) r.x = -r.x - r.w;
}

void check_range(const Layout& l) {
  for (const auto& r : l.rects)
    if (std::max({std::abs(r.x), std::abs(r.y), r.right(), r.top()}) > kCoordLimit)
      throw BudgetExceeded("coordinates outgrew 64-bit range during repair");
}

bool is_violation(const Layout& l, const Contact& c, const Graph& g) {
  const int u = l.rects[c.a].id, v = l.rects[c.b].id;
  return u >= 0 && v >= 0 && !g.has_edge(u, v);
}

std::optional<Contact> first_violation(const Layout& l, const Graph& g) {
  std::optional<Contact> best;
  auto key = [&](const Contact& c) {
    int u = l.rects[c.a].id, v = l.rects[c.b].id;
    return std::make_tuple(std::min(u, v), std::max(u, v), c.a, c.b);
  };
  for (const auto& c : contacts(l))
    if (is_violation(l, c, g) && (!best || key(c) < key(*best))) best = c;
  return best;
}

// Smallest positive contact length or rectangle side.
Coord smallest_feature(const Layout& l) {
  Coord s = std::numeric_limits<Coord>::max();
  for (const auto& r : l.rects) s = std::min({s, r.w, r.h});
  for (const auto& c : contacts(l)) s = std::min(s, c.length());
  return s;
}

// Separates rectangles `upper` (bottom side on line y0) and `lower`, with
// the layout already transformed so the contact is horizontal.
void separate(Layout& l, std::size_t upper, std::size_t lower, Coord eps) {
  Rect& a = l.rects[upper];
  Rect& b = l.rects[lower];
  if (a.x >= b.x && a.right() <= b.right()) {
    a.y += eps;
    a.h -= eps;
    return;
  }
  if (b.x >= a.x && b.right() <= a.right()) {
    b.h -= eps;
    return;
  }
  const bool mirrored = a.right() < b.right();
  if (mirrored) mirror_x(l);
  const Rect bl = l.rects[lower];
  const Coord y0 = bl.top();
  const Coord start = bl.right();
  Coord stop = bounding_box(l).x1;
  for (const auto& r : l.rects)
    if (r.y < y0 && r.top() > y0 && r.x >= start) stop = std::min(stop, r.x);
  for (std::size_t i = 0; i < l.rects.size(); ++i) {
    Rect& r = l.rects[i];
    if (i == upper || (r.y == y0 && r.x >= start && r.x < stop)) {
      r.y += eps;
      r.h -= eps;
    } else if (r.top() == y0 && r.x >= start && r.x < stop) {
      r.h += eps;
    }
  }
  if (mirrored) mirror_x(l);
}

void fix(Layout& l, const Contact& c, Coord eps) {
  if (c.horizontal) {
    separate(l, c.b, c.a, eps);
    return;
  }
  transpose(l);
  separate(l, c.b, c.a, eps);
  transpose(l);
}

Layout strengthen_scaled(Layout l, const Graph& g) {
  while (true) {
    auto v = first_violation(l, g);
    if (!v) break;
    Coord feat = smallest_feature(l);
    Coord eps;
    if (feat >= 2) {
      eps = feat / 2;
    } else {
      l = scaled(l, 2);
      check_range(l);
      eps = 1;
      v = first_violation(l, g);
    }
    fix(l, *v, eps);
  }
  l.mode = LayoutMode::Strong;
  return l;
}

}  // namespace

Layout strengthen(const Layout& weak, const Graph& g) {
  auto rep = validate_layout(weak, g, LayoutMode::Weak);
  if (!rep.ok) throw NotWeakLayout("input is not a weak layout: " + rep.summary());
  Layout l = strengthen_scaled(scaled(weak, 2), g);
  auto out = validate_layout(l, g, LayoutMode::Strong);
  if (!out.ok) throw Error("repair left violations: " + out.summary());
  return l;
}

namespace {

// Widens the layout by one unit along the vertical line through p.x. Rects
// touching the line from the left above p (from the right below p) grow
// across the new column; with `join` the roles swap, which turns the corner
// at p into a unit contact.
void split_column(Layout& l, Coord px, Coord py, bool join) {
  for (auto& r : l.rects) {
    if (r.right() <= px) {
      const bool touches = r.right() == px;
      const bool grow = join ? r.top() <= py : r.y >= py;
      if (touches && grow) r.w += 1;
    } else if (r.x >= px) {
      const bool touches = r.x == px;
      const bool grow = join ? r.y >= py : r.top() <= py;
      if (touches && grow)
        r.w += 1;
      else
        r.x += 1;
    } else {
      r.w += 1;
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> first_corner(const Layout& l) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  auto key = [&](std::pair<std::size_t, std::size_t> p) {
    int u = l.rects[p.first].id, v = l.rects[p.second].id;
    return std::make_tuple(std::min(u, v), std::max(u, v), p.first, p.second);
  };
  for (auto p : corner_touches(l)) {
    if (l.rects[p.first].gap() || l.rects[p.second].gap()) continue;
    if (!best || key(p) < key(*best)) best = p;
  }
  return best;
}

Layout remove_corners(const Layout& in, const Graph& target) {
  Layout l = scaled(in, 2);
  const std::size_t cap = 16 * (l.rects.size() + 4);
  std::size_t steps = 0;
  while (true) {
    while (auto p = first_corner(l)) {
      if (++steps > cap) throw BudgetExceeded("corner removal did not settle");
      Rect lo = l.rects[p->first], hi = l.rects[p->second];
      if (lo.y > hi.y) std::swap(lo, hi);
      const bool mirrored = lo.x == hi.right();
      if (mirrored) mirror_x(l);
      Rect a = l.rects[p->first], b = l.rects[p->second];
      if (a.y > b.y) std::swap(a, b);
      split_column(l, a.right(), a.top(), target.has_edge(a.id, b.id));
      if (mirrored) mirror_x(l);
      check_range(l);
    }
    if (!first_violation(l, target)) break;
    if (++steps > cap) throw BudgetExceeded("corner removal did not settle");
    l = strengthen_scaled(scaled(l, 2), target);
    check_range(l);
  }
  l.mode = LayoutMode::Strong;
  return l;
}

}  // namespace

Layout remove_corner_contacts(const Layout& l) {
  int n = 0;
  for (const auto& r : l.rects) n = std::max(n, r.id + 1);
  return remove_corners(l, contact_graph(l, n));
}

Layout remove_corner_contacts(const Layout& l, const Graph& g) {
  auto rep = validate_layout(l, g, LayoutMode::Weak);
  if (!rep.overlaps.empty() || !rep.problems.empty())
    throw PreconditionViolation("corner removal needs a valid layout: " + rep.summary());
  Layout out = remove_corners(l, g);
  auto chk = validate_layout(out, g, LayoutMode::Strong);
  if (!chk.ok) throw NotWeakLayout("corner removal could not realize the graph: " + chk.summary());
  return out;
}

}  // namespace rectlay
