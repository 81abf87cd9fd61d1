#include "rectlay/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <tuple>

#include "rectlay/errors.hpp"

namespace rectlay {
namespace {

bool overlap(const Rect& a, const Rect& b) {
  return a.x < b.right() && b.x < a.right() && a.y < b.top() && b.y < a.top();
}

bool touch(const Rect& a, const Rect& b) {
  const bool side = (a.right() == b.x || b.right() == a.x) && std::min(a.top(), b.top()) > std::max(a.y, b.y);
  const bool cap = (a.top() == b.y || b.top() == a.y) && std::min(a.right(), b.right()) > std::max(a.x, b.x);
  return side || cap;
}

// BFS order from vertex 0, then from each unreached vertex.
std::vector<int> search_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      order.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
    }
  }
  return order;
}

class BoxSearch {
 public:
  BoxSearch(const Graph& g, Coord w, Coord h, bool reduce, std::uint64_t budget, std::uint64_t& nodes)
      : g_(g), w_(w), h_(h), reduce_(reduce), budget_(budget), nodes_(nodes), order_(search_order(g)) {
    placed_.resize(g.vertex_count());
  }

  // Calls `visit` on each complete placement; stops when it returns false.
  void run(const std::function<bool(const Layout&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    place(0);
  }

 private:
  void place(std::size_t depth) {
    if (stop_) return;
    if (depth == order_.size()) {
      Layout l;
      l.rects = placed_;
      if (!(*visit_)(l)) stop_ = true;
      return;
    }
    const int v = order_[depth];
    for (Coord rw = 1; rw <= w_; ++rw)
      for (Coord rh = 1; rh <= h_; ++rh)
        for (Coord y = 0; y + rh <= h_; ++y)
          for (Coord x = 0; x + rw <= w_; ++x) {
            if (stop_) return;
            if (++nodes_ > budget_) throw BudgetExceeded("oracle node budget exhausted");
            Rect r{v, x, y, rw, rh};
            if (depth == 0 && reduce_ && (2 * x + rw > w_ || 2 * y + rh > h_)) continue;
            if (!fits(r, depth)) continue;
            placed_[v] = r;
            place(depth + 1);
          }
  }

  bool fits(const Rect& r, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Rect& o = placed_[order_[i]];
      if (overlap(r, o)) return false;
      if (touch(r, o) != g_.has_edge(r.id, o.id)) return false;
    }
    return true;
  }

  const Graph& g_;
  Coord w_, h_;
  bool reduce_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<int> order_;
  std::vector<Rect> placed_;
  const std::function<bool(const Layout&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

std::vector<Layout> layouts_in_box(const Graph& g, Coord w, Coord h, bool reduce, std::size_t limit,
                                   std::uint64_t node_budget) {
  std::vector<Layout> out;
  std::uint64_t nodes = 0;
  BoxSearch s(g, w, h, reduce, node_budget, nodes);
  s.run([&](const Layout& l) {
    out.push_back(l);
    return out.size() < limit;
  });
  return out;
}

OracleResult brute_force_min_area(const Graph& g, Coord max_w, Coord max_h, std::uint64_t node_budget) {
  if (max_w < 1 || max_h < 1) throw InvalidParameters("oracle box must be at least 1x1");
  OracleResult res;
  res.max_w = max_w;
  res.max_h = max_h;
  const int n = g.vertex_count();
  if (n == 0) {
    res.min_area = 0;
    res.exhausted = true;
    return res;
  }
  // Boxes with wide >= tall; the transpose covers the other orientation.
  std::vector<std::tuple<Coord, Coord, Coord, Coord>> boxes;  // area, long side, wide, tall
  for (Coord a = 1; a <= std::max(max_w, max_h); ++a)
    for (Coord b = 1; b <= a; ++b) {
      const bool fits = (a <= max_w && b <= max_h) || (b <= max_w && a <= max_h);
      if (fits && a * b >= n) boxes.emplace_back(a * b, a, a, b);
    }
  std::sort(boxes.begin(), boxes.end());
  for (const auto& [ar, longest, wide, tall] : boxes) {
    std::optional<Layout> found;
    BoxSearch s(g, wide, tall, true, node_budget, res.nodes);
    s.run([&](const Layout& l) {
      found = l;
      return false;
    });
    if (!found) continue;
    if (!(wide <= max_w && tall <= max_h))
      for (auto& r : found->rects) {
        std::swap(r.x, r.y);
        std::swap(r.w, r.h);
      }
    res.min_area = ar;
    res.witness = normalized(*found);
    std::sort(res.witness.rects.begin(), res.witness.rects.end(),
              [](const Rect& a, const Rect& b) { return a.id < b.id; });
    res.exhausted = true;
    return res;
  }
  res.exhausted = true;
  return res;
}

}  // namespace rectlay
