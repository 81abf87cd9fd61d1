#include <doctest.h>

#include "rectlay/layout.hpp"

using namespace rectlay;

namespace {

Layout rects(std::vector<Rect> r) {
  Layout l;
  l.rects = std::move(r);
  return l;
}

}  // namespace

TEST_CASE("area and bounding box") {
  CHECK(area(rects({{0, 0, 0, 1, 1}})) == 1);
  CHECK(area(rects({{0, 0, 0, 1, 1}, {1, 0, 1, 1, 1}})) == 2);
  auto [w, h] = bbox(rects({{0, 2, 3, 4, 1}, {1, 0, 0, 1, 5}}));
  CHECK(w == 6);
  CHECK(h == 5);
  CHECK(area(Layout{}) == 0);
}

TEST_CASE("side by side squares touch, diagonal ones do not") {
  Layout side = rects({{0, 0, 0, 1, 1}, {1, 1, 0, 1, 1}});
  CHECK(contact_graph(side) == Graph(2, {{0, 1}}));
  auto cs = contacts(side);
  REQUIRE(cs.size() == 1);
  CHECK_FALSE(cs[0].horizontal);
  CHECK(cs[0].line == 1);
  CHECK(cs[0].length() == 1);

  Layout diag = rects({{0, 0, 0, 1, 1}, {1, 1, 1, 1, 1}});
  CHECK(contact_graph(diag).edge_count() == 0);
  CHECK(corner_touches(diag).size() == 1);
}

TEST_CASE("gaps are ignored by the contact graph") {
  Layout l = rects({{0, 0, 0, 1, 1}, {kGap, 1, 0, 1, 1}, {1, 2, 0, 1, 1}});
  CHECK(contact_graph(l).edge_count() == 0);
  CHECK(contacts(l).size() == 2);
}

TEST_CASE("ladder column layout extracts to the 3-rung ladder") {
  // L left column, R right column, rungs stacked in the middle
  Layout l = rects({{0, 0, 0, 1, 3}, {1, 2, 0, 1, 3}, {2, 1, 0, 1, 1}, {3, 1, 1, 1, 1}, {4, 1, 2, 1, 1}});
  Graph g(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(contact_graph(l) == g);
  CHECK(validate_layout(l, g, LayoutMode::Strong).ok);
}

TEST_CASE("validation reports missing, extra and overlapping") {
  Graph g(3, {{0, 1}, {1, 2}});
  Layout good = rects({{0, 0, 0, 1, 1}, {1, 1, 0, 1, 1}, {2, 2, 0, 1, 1}});
  CHECK(validate_layout(good, g, LayoutMode::Strong).ok);
  CHECK(validate_layout(good, g, LayoutMode::Weak).ok);

  Graph path2(3, {{0, 1}});
  auto extra = validate_layout(good, path2, LayoutMode::Strong);
  CHECK_FALSE(extra.ok);
  CHECK(extra.extra == std::vector<Edge>{{1, 2}});
  CHECK(validate_layout(good, path2, LayoutMode::Weak).ok);

  Layout missing = rects({{0, 0, 0, 1, 1}, {1, 1, 0, 1, 1}, {2, 3, 0, 1, 1}});
  auto m = validate_layout(missing, g, LayoutMode::Weak);
  CHECK_FALSE(m.ok);
  CHECK(m.missing == std::vector<Edge>{{1, 2}});

  Layout overlap = rects({{0, 0, 0, 2, 1}, {1, 1, 0, 1, 1}, {2, 2, 0, 1, 1}});
  CHECK_FALSE(validate_layout(overlap, g, LayoutMode::Weak).overlaps.empty());

  Layout dup = rects({{0, 0, 0, 1, 1}, {0, 1, 0, 1, 1}, {2, 2, 0, 1, 1}});
  CHECK_FALSE(validate_layout(dup, g, LayoutMode::Weak).problems.empty());
}

TEST_CASE("deleting a rectangle loses its contacts") {
  Graph g(3, {{0, 1}, {1, 2}});
  Layout l = rects({{0, 0, 0, 1, 1}, {1, 1, 0, 1, 1}, {2, 2, 0, 1, 1}});
  Layout cut = l;
  cut.rects.erase(cut.rects.begin() + 1);
  CHECK_FALSE(validate_layout(cut, g, LayoutMode::Weak).ok);
  // the renumbering helpers agree with each other
  CHECK(validate_layout(without_vertex(l, 1), without_vertex(g, 1), LayoutMode::Strong).ok);
}

TEST_CASE("scaling and translation") {
  Layout l = rects({{0, 1, 2, 3, 4}});
  CHECK(scaled(l, 2).rects[0] == Rect{0, 2, 4, 6, 8});
  CHECK(translated(l, -1, 1).rects[0] == Rect{0, 0, 3, 3, 4});
  CHECK(normalized(l).rects[0] == Rect{0, 0, 0, 3, 4});
}
