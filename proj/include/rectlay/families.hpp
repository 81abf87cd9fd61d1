#pragma once

#include <string>
#include <vector>

#include "rectlay/graph.hpp"
#include "rectlay/layout.hpp"
#include "rectlay/treelayout.hpp"

namespace rectlay {

// Struts L = 0 and R = 1, rungs x_1..x_n = 2..n+1. Consecutive rungs are
// joined by a path with `subdivision` inner vertices (ids after the rungs).
Graph gen_ladder(int n, int subdivision = 0);

// External ladder as gen_ladder(i); the internal rungs y_1..y_j get ids
// i+2..i+j+1 and hang between x_{i/2} and x_{i/2+1}. Requires i >= 2.
Graph gen_ij_ladder(int i, int j);

// x = 0, y = 1, path p (0..2) vertex k at 2 + p*n + k; T = 3n+2, B = 3n+3.
Graph gen_accordion(int n, bool enclosed);

struct NMTSInstance {
  std::vector<long long> x, y, b;

  // Throws InvalidParameters on bad sizes, UnbalancedInstance when
  // sum(x) + sum(y) != sum(b).
  static NMTSInstance make(std::vector<long long> x, std::vector<long long> y, std::vector<long long> b);

  int m() const { return static_cast<int>(b.size()); }
  long long b_star() const;
  long long delta(int i) const { return 2 * b_star() - b[i]; }
};

struct GadgetGraph {
  Graph graph;
  std::vector<std::string> tags;  // component tag per vertex
  NMTSInstance instance;          // after scaling
  int scale = 1;
  std::vector<long long> delta;
  long long width = 0;   // 2B* + 6
  long long height = 0;  // 6m + 9
};

// Scales the instance by 3 first when some delta is below 3.
GadgetGraph gen_np_gadget(const NMTSInstance& inst);

// Complete binary tree with 2^i leaves.
RootedTree gen_complete_binary(int i);
// T_k (k = log2 n) whose root is linked to the centre of an n-leaf star.
// Rooted at the root of T_k. Throws InvalidParameters unless n is a power
// of two with n >= 2.
RootedTree gen_star_tree(int n);

long long trivial_lower_bound(const Graph& g);

// Shortest chain of touching rectangles among `ids` running from the
// bottom to the top (vertical) or left to right side of their bounding
// box. Empty when `ids` has no such chain.
std::vector<int> extremal_path(const Layout& l, const std::vector<int>& ids, bool vertical);

}  // namespace rectlay
