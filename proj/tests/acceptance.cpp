// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <string>

#include "rectlay/errors.hpp"
#include "rectlay/families.hpp"
#include "rectlay/feasibility.hpp"
#include "rectlay/oracle.hpp"
#include "rectlay/pipeline.hpp"
#include "rectlay/rectdual.hpp"
#include "rectlay/treelayout.hpp"
#include "support/generators.hpp"

using namespace rectlay;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Plain BFS, kept apart from the library's own separating-triangle code.
bool removal_disconnects(const Graph& g, const Triple& t) {
  const int n = g.vertex_count();
  if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2])) return false;
  std::vector<char> seen(n, 0);
  for (int x : t) seen[x] = 1;
  int start = -1, left = 0;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) {
      ++left;
      if (start < 0) start = v;
    }
  if (left == 0) return false;
  std::deque<int> q{start};
  seen[start] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push_back(w);
      }
  }
  return reached < left;
}

bool witness_verifies(const Graph& g, const FeasibilityVerdict& v) {
  switch (v.witness) {
    case WitnessKind::Nonplanar: return testing::is_kuratowski_subdivision(g, v.kuratowski);
    case WitnessKind::Triangulation: return g.edge_count() == 3 * g.vertex_count() - 6;
    case WitnessKind::SeparatingTriangle: return removal_disconnects(g, v.triangle);
    case WitnessKind::None: return false;
  }
  return false;
}

// Shared across criteria 1, 2, 7 and 10.
struct PipelineRun {
  Graph g;
  Layout layout;
  int framed = 0;
};
std::vector<PipelineRun> g_runs;

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  int graphs = 0, positive = 0, negative = 0, oracle_checked = 0, bad = 0;
  auto handle = [&](const Graph& g, bool consult_oracle) {
    ++graphs;
    const FeasibilityVerdict v = is_layoutable(g);
    const int n = g.vertex_count();
    if (consult_oracle && v.witness != WitnessKind::Nonplanar && n >= 4 && g.edge_count() <= 3 * n - 7) {
      ++oracle_checked;
      if (v.layoutable != testing::has_embedding_without_filled_triangles(g)) ++bad;
    }
    if (v.layoutable) {
      ++positive;
      PipelineTrace trace;
      try {
        Layout l = layout_graph(g, &trace);
        if (!(contact_graph(l, n) == g) || !validate_layout(l, g, LayoutMode::Strong).ok) ++bad;
        g_runs.push_back({g, std::move(l), trace.framed_vertex_count});
      } catch (const Error&) {
        ++bad;
      }
    } else {
      ++negative;
      if (!witness_verifies(g, v)) ++bad;
    }
  };
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : testing::connected_graphs(n)) handle(g, true);
  std::mt19937_64 rng(testing::seed_from_env(1001));
  for (int i = 0; i < 500; ++i) handle(testing::random_layoutable_graph(4 + static_cast<int>(rng() % 97), rng), false);
  o.pass = bad == 0;
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(positive) + " laid out, " +
             std::to_string(negative) + " rejected with verified witness, " + std::to_string(oracle_checked) +
             " verdicts matched against brute-force embeddings, " + std::to_string(bad) + " failures, " +
             fmt("%.1fs", seconds_since(t0));
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0;
  int bad = 0, direct = 0;
  for (const auto& r : g_runs) {
    const int n = r.g.vertex_count();
    auto [w, h] = bbox(r.layout);
    // n <= 3 is laid out directly with no frame; hold it to the largest N allowed
    int big_n = r.framed;
    if (big_n == 0) {
      ++direct;
      big_n = 5 * n + 5;
    }
    if (big_n > 5 * n + 5 || w > big_n - 1 || h > big_n - 1) ++bad;
    worst = std::max(worst, static_cast<double>(area(r.layout)) / (static_cast<double>(n) * n));
  }
  o.pass = bad == 0 && !g_runs.empty();
  o.detail = std::to_string(g_runs.size()) + " layouts inside (N-1)x(N-1) with N <= 5n+5 (" + std::to_string(direct) +
             " direct layouts for n <= 3 checked against N = 5n+5), " + std::to_string(bad) +
             " failures, max area/n^2 = " + fmt("%.3f", worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  const Graph ladder = gen_ladder(3);
  auto lr = brute_force_min_area(ladder, 6, 6);
  auto er = brute_force_min_area(Graph(2, {{0, 1}}), 6, 6);
  auto vr = brute_force_min_area(Graph(1), 6, 6);
  const bool anchors = lr.min_area == 9 && er.min_area == 2 && vr.min_area == 1 && lr.exhausted;
  // every optimal witness: all layouts in every box of area 9 that fits 6x6
  std::size_t witnesses = 0;
  bool dims = true;
  for (Coord w = 1; w <= 6; ++w)
    if (9 % w == 0 && 9 / w <= 6)
      for (const Layout& l : layouts_in_box(ladder, w, 9 / w, false)) {
        ++witnesses;
        auto [bw, bh] = bbox(l);
        dims = dims && bw >= 3 && bh >= 3;
      }
  const double secs = seconds_since(t0);
  o.pass = anchors && dims && witnesses > 0 && secs <= 60;
  o.detail = "ladder(3) = " + (lr.min_area ? std::to_string(*lr.min_area) : std::string("none")) +
             ", edge = " + (er.min_area ? std::to_string(*er.min_area) : std::string("none")) +
             ", vertex = " + (vr.min_area ? std::to_string(*vr.min_area) : std::string("none")) + ", " +
             std::to_string(witnesses) + " optimal ladder witnesses all at least 3x3, " + fmt("%.1fs", secs);
  return o;
}

int floor_log2(int n) {
  int k = 0;
  while ((2 << k) <= n) ++k;
  return k;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(testing::seed_from_env(1004));
  int bad = 0, validated = 0;
  long long biggest = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10000);
    RootedTree t = testing::random_tree(n, rng, i % 4 == 0 ? 2 : 0);
    HeavyPathPartition hp = heavy_path_partition(t);
    const int dc = compress(t, hp).depth;
    Layout a = layout_tree_A(t);
    Layout b = layout_tree_B(t, hp);
    const Coord nn = n;
    if (area(a) != nn * t.depth()) ++bad;
    if (area(b) != nn * dc) ++bad;
    if (area(b) > nn * (floor_log2(n) + 1)) ++bad;
    if (i % 10 == 0) {
      ++validated;
      const Graph g = t.graph();
      if (!validate_layout(a, g, LayoutMode::Weak).ok || !validate_layout(b, g, LayoutMode::Weak).ok) ++bad;
    }
    biggest = std::max<long long>(biggest, n);
  }
  o.pass = bad == 0;
  o.detail = "1000 trees up to n = " + std::to_string(biggest) + ", " + std::to_string(validated) +
             " also validated, " + std::to_string(bad) + " mismatches, " + fmt("%.1fs", seconds_since(t0));
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto dims = [](int c) {
    auto r = layout_complete_tree(3, c, 1, 0);
    return std::pair{r.height, r.width};
  };
  const bool anchors = dims(1) == std::pair<Coord, Coord>{2, 6} && dims(2) == std::pair<Coord, Coord>{7, 9} &&
                       dims(3) == std::pair<Coord, Coord>{10, 24};
  double worst_vertex = 0, worst_leaf = 0;
  for (int c = 0; c <= 10; ++c) {
    auto r = layout_complete_tree(3, c, 1, 0);
    const double a = static_cast<double>(r.width) * static_cast<double>(r.height);
    const double vertices = (std::pow(3.0, c + 1) - 1) / 2, leaves = std::pow(3.0, c);
    worst_vertex = std::max(worst_vertex, a / vertices);
    worst_leaf = std::max(worst_leaf, a / leaves);
  }
  double worst_alpha = 0;
  for (auto [m, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}})
    for (int c = 6; c <= 12; ++c) {
      auto r = layout_complete_tree(3, c, m, l);
      worst_alpha = std::max(worst_alpha, std::abs(r.alpha_achieved - r.alpha_target) / r.alpha_target);
    }
  o.pass = anchors && worst_vertex <= 8 && worst_alpha <= 0.25;
  o.detail = std::string("anchors ") + (anchors ? "exact" : "WRONG") + ", max area per vertex (c <= 10) = " +
             fmt("%.3f", worst_vertex) + " (per leaf " + fmt("%.3f", worst_leaf) +
             "), worst relative alpha error (c = 6..12) = " + fmt("%.3f", worst_alpha);
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(testing::seed_from_env(1006));
  int nested = 0, shear = 0, bad = 0, layouts = 0;
  while (layouts < 200) {
    Graph g = testing::random_layoutable_graph(4 + static_cast<int>(rng() % 40), rng);
    Layout l = layout_graph(g);
    Graph h = g;
    for (auto [u, v] : g.edges())
      if (rng() % 3 == 0) h.remove_edge(u, v);
    if (h == g) continue;
    ++layouts;
    for (const auto& c : contacts(l)) {
      const Rect& a = l.rects[c.a];
      const Rect& b = l.rects[c.b];
      if (a.gap() || b.gap() || h.has_edge(a.id, b.id)) continue;
      const Coord a0 = c.horizontal ? a.x : a.y, a1 = c.horizontal ? a.right() : a.top();
      const Coord b0 = c.horizontal ? b.x : b.y, b1 = c.horizontal ? b.right() : b.top();
      if ((a0 >= b0 && a1 <= b1) || (b0 >= a0 && b1 <= a1))
        ++nested;
      else
        ++shear;
    }
    try {
      Layout s = strengthen(l, h);
      if (!validate_layout(s, h, LayoutMode::Strong).ok) ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  o.pass = bad == 0 && nested > 0 && shear > 0;
  o.detail = "200 weak layouts, planted violations: " + std::to_string(nested) + " nested, " +
             std::to_string(shear) + " shear; " + std::to_string(bad) + " failed strong validation";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int checked = 0, bad = 0;
  auto check = [&](const Layout& l, const Graph& g) {
    ++checked;
    if (area(l) < trivial_lower_bound(g)) ++bad;
  };
  for (const auto& r : g_runs) check(r.layout, r.g);
  std::mt19937_64 rng(testing::seed_from_env(1007));
  for (int i = 0; i < 200; ++i) {
    RootedTree t = testing::random_tree(1 + static_cast<int>(rng() % 500), rng);
    const Graph g = t.graph();
    HeavyPathPartition hp = heavy_path_partition(t);
    check(layout_tree_A(t, TreeStyle::Separated), g);
    check(layout_tree_B(t, hp, TreeStyle::Separated), g);
    check(layout_tree_B(t, hp), g);
  }
  for (int c = 0; c <= 6; ++c) check(layout_complete_tree(3, c, 1, 1).layout, complete_tree(3, c).graph());
  for (const Graph& g : {gen_ij_ladder(6, 6), gen_accordion(4, true), gen_np_gadget(NMTSInstance::make({2}, {3}, {5})).graph})
    check(layout_graph(g), g);
  o.pass = bad == 0;
  o.detail = std::to_string(checked) + " layouts (pipeline, tree, complete-tree, families), " + std::to_string(bad) +
             " below the bound";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(testing::seed_from_env(1008));
  int augmented = 0, bad = 0, largest = 0;
  while (augmented < 50) {
    Graph g = testing::random_layoutable_graph(4 + static_cast<int>(rng() % 6), rng);
    AugmentedGraph a = augment_to_4ct(embed_without_filled_triangles(g));
    const int n = a.graph.vertex_count();
    if (n > 30) continue;
    ++augmented;
    largest = std::max(largest, n);
    const Graph d = dual_graph(a.graph, a.embedding);
    bool cubic = true;
    for (int v = 0; v < d.vertex_count(); ++v) cubic = cubic && d.degree(v) == 3;
    const bool ok = a.graph.edge_count() == 3 * n - 6 && is_k_connected(a.graph, 4) && is_planar(d) && cubic &&
                    is_cyclically_4_edge_connected(d);
    if (!ok) ++bad;
  }
  const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 50, 233, 1249, 7595};
  std::string counts;
  for (int n = 4; n <= 12; ++n) {
    const auto ts = testing::triangulations(n);
    counts += (n > 4 ? "," : "") + std::to_string(ts.size());
    if (ts.size() != expected[n - 4]) ++bad;
    for (const auto& e : ts) {
      const Graph g = graph_of(e);
      if (is_k_connected(g, 4) != separating_triangles(g).empty()) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = "50 augmented triangulations (n <= " + std::to_string(largest) +
             "): duals planar, cubic, cyclically 4-edge connected; triangulations n = 4..12 (" + counts +
             "): 4-connected iff no separating triangle; " + std::to_string(bad) + " failures, " +
             fmt("%.1fs", seconds_since(t0));
  return o;
}

Outcome criterion9() {
  Outcome o;
  GadgetGraph gg = gen_np_gadget(NMTSInstance::make({2}, {3}, {5}));
  const bool layoutable = is_layoutable(gg.graph).layoutable;
  o.pass = gg.delta == std::vector<long long>{5} && gg.width == 16 && gg.height == 15 &&
           gg.graph.vertex_count() == 71 && layoutable;
  o.detail = "delta_1 = " + std::to_string(gg.delta.empty() ? -1 : gg.delta[0]) + ", W = " + std::to_string(gg.width) +
             ", H = " + std::to_string(gg.height) + ", " + std::to_string(gg.graph.vertex_count()) + " vertices, " +
             (layoutable ? "layoutable" : "NOT layoutable");
  return o;
}

Outcome criterion10() {
  Outcome o;
  int layouts = 0, deletions = 0, bad = 0;
  for (const auto& r : g_runs) {
    if (r.g.vertex_count() < 8) continue;
    if (++layouts > 100) break;
    for (int v = 0; v < r.g.vertex_count(); ++v) {
      ++deletions;
      if (!validate_layout(without_vertex(r.layout, v), without_vertex(r.g, v), LayoutMode::Strong).ok) ++bad;
    }
  }
  layouts = std::min(layouts, 100);
  o.pass = bad == 0 && layouts == 100;
  o.detail = std::to_string(layouts) + " layouts, " + std::to_string(deletions) + " single-rectangle deletions, " +
             std::to_string(bad) + " failures";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"end-to-end soundness", criterion1},   {"area ceiling", criterion2},
      {"oracle anchors", criterion3},         {"tree area formulas", criterion4},
      {"complete-tree layouts", criterion5},  {"weak-to-strong repair", criterion6},
      {"trivial lower bound", criterion7},    {"triangulation predicates", criterion8},
      {"gadget metadata", criterion9},        {"vertex monotonicity", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s: %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
