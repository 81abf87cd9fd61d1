#include <doctest.h>

#include <cmath>

#include "rectlay/errors.hpp"
#include "rectlay/treelayout.hpp"
#include "support/generators.hpp"

using namespace rectlay;

namespace {

RootedTree star(int leaves) {
  std::vector<int> parent(leaves + 1, 0);
  parent[0] = -1;
  return RootedTree::from_parents(parent);
}

RootedTree path(int n) {
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v - 1;
  return RootedTree::from_parents(parent);
}

int floor_log2(int n) {
  int k = 0;
  while ((2 << k) <= n) ++k;
  return k;
}

}  // namespace

TEST_CASE("descendant counts include the vertex") {
  RootedTree t = RootedTree::from_parents({-1, 0, 0, 1, 1, 1});
  CHECK(t.desc == std::vector<int>{6, 4, 1, 1, 1, 1});
  CHECK(t.depth() == 3);
  CHECK_THROWS_AS(RootedTree::from_parents({-1, -1}), InvalidParameters);
  CHECK_THROWS_AS(RootedTree::from_parents({1, 0}), InvalidParameters);
  Graph g(3, {{0, 1}, {1, 2}});
  RootedTree r = RootedTree::from_graph(g, 1);
  CHECK(r.root == 1);
  CHECK(r.children[1] == std::vector<int>{0, 2});
}

TEST_CASE("Algorithm A areas") {
  CHECK(area(layout_tree_A(star(8))) == 18);
  CHECK(area(layout_tree_A(path(5))) == 25);
  Layout one = layout_tree_A(path(1));
  CHECK(one.rects == std::vector<Rect>{{0, 0, 0, 1, 1}});
}

TEST_CASE("heavy paths of a path, a star and a complete binary tree") {
  HeavyPathPartition p = heavy_path_partition(path(6));
  REQUIRE(p.paths.size() == 2);
  CHECK(p.paths[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(p.paths[1] == std::vector<int>{5});

  HeavyPathPartition s = heavy_path_partition(star(5));
  CHECK(s.paths.size() == 6);

  RootedTree b = complete_tree(2, 4);
  HeavyPathPartition bp = heavy_path_partition(b);
  CHECK(static_cast<int>(bp.paths.size()) == b.size());
  CHECK(compress(b, bp).depth == b.depth());
}

TEST_CASE("Algorithm B areas") {
  RootedTree p = path(7);
  CHECK(area(layout_tree_B(p, heavy_path_partition(p))) == 7 * 2);
  RootedTree s = star(8);
  CHECK(area(layout_tree_B(s, heavy_path_partition(s))) == 9 * 2);
  RootedTree b = complete_tree(2, 3);
  CHECK(area(layout_tree_B(b, heavy_path_partition(b))) == 15 * 4);
}

TEST_CASE("bad partitions are rejected") {
  RootedTree t = path(4);
  HeavyPathPartition p = heavy_path_partition(t);
  HeavyPathPartition gapped = p;
  gapped.paths[0] = {0, 2};
  CHECK_THROWS_AS(layout_tree_B(t, gapped), PartitionMismatch);
  HeavyPathPartition missing = singleton_partition(t);
  missing.paths.pop_back();
  missing.path_of.back() = 0;
  CHECK_THROWS_AS(compress(t, missing), PartitionMismatch);
  HeavyPathPartition twice = singleton_partition(t);
  twice.paths[1] = {0};
  CHECK_THROWS_AS(compress(t, twice), PartitionMismatch);
}

TEST_CASE("random trees: exact areas, weak compact, strong separated") {
  std::mt19937_64 rng(testing::seed_from_env(51));
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + static_cast<int>(rng() % 300);
    RootedTree t = testing::random_tree(n, rng, i % 3 == 0 ? 3 : 0);
    const Graph g = t.graph();
    HeavyPathPartition hp = heavy_path_partition(t);
    const int dc = compress(t, hp).depth;
    CHECK(dc <= floor_log2(n) + 1);

    Layout a = layout_tree_A(t);
    CHECK(area(a) == static_cast<Coord>(n) * t.depth());
    CHECK(validate_layout(a, g, LayoutMode::Weak).ok);
    Layout b = layout_tree_B(t, hp);
    CHECK(area(b) == static_cast<Coord>(n) * dc);
    CHECK(validate_layout(b, g, LayoutMode::Weak).ok);

    Layout as = layout_tree_A(t, TreeStyle::Separated);
    CHECK(validate_layout(as, g, LayoutMode::Strong).ok);
    CHECK(area(as) <= 4 * area(a));
    Layout bs = layout_tree_B(t, hp, TreeStyle::Separated);
    CHECK(validate_layout(bs, g, LayoutMode::Strong).ok);
    CHECK(area(bs) <= 4 * area(b));
    CHECK(area(bs) <= static_cast<Coord>(2 * n - 1) * (2 * dc - 1));
  }
}

TEST_CASE("complete ternary anchors") {
  auto one = layout_complete_tree(3, 1, 1, 0);
  CHECK(one.height == 2);
  CHECK(one.width == 6);
  auto two = layout_complete_tree(3, 2, 1, 0);
  CHECK(two.height == 7);
  CHECK(two.width == 9);
  auto three = layout_complete_tree(3, 3, 1, 0);
  CHECK(three.height == 10);
  CHECK(three.width == 24);
  // pure type 2 stacks rows
  auto flat = layout_complete_tree(3, 2, 0, 1);
  CHECK(flat.height == 3);
  CHECK(flat.width == 3 * 6 + 3);
}

TEST_CASE("complete tree layouts are strong") {
  for (int k : {2, 3, 4})
    for (int c = 0; c <= 5; ++c)
      for (auto [m, l] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}}) {
        auto r = layout_complete_tree(k, c, m, l);
        RootedTree t = complete_tree(k, c);
        CHECK(validate_layout(r.layout, t.graph(), LayoutMode::Strong).ok);
        auto [w, h] = bbox(r.layout);
        CHECK(w == r.width);
        CHECK(h == r.height);
      }
  CHECK_THROWS_AS(layout_complete_tree(1, 3, 1, 0), InvalidParameters);
  CHECK_THROWS_AS(layout_complete_tree(3, 3, 0, 0), InvalidParameters);
  CHECK_THROWS_AS(layout_complete_tree(3, -1, 1, 0), InvalidParameters);
}

TEST_CASE("alpha bookkeeping") {
  auto r = layout_complete_tree(3, 6, 1, 1);
  CHECK(r.alpha_target == doctest::Approx(0.75));
  const double n = (std::pow(3.0, 7) - 1) / 2;
  CHECK(r.alpha_achieved == doctest::Approx(std::log(static_cast<double>(r.width)) / std::log(n)));
}
