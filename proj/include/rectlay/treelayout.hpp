#pragma once

#include <vector>

#include "rectlay/graph.hpp"
#include "rectlay/layout.hpp"

namespace rectlay {

struct RootedTree {
  int root = 0;
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // left-to-right order
  std::vector<int> desc;                   // subtree size, the vertex included

  // Children keep increasing id order. Throws InvalidParameters.
  static RootedTree from_parents(const std::vector<int>& parent);
  // Requires g to be a tree.
  static RootedTree from_graph(const Graph& g, int root);

  int size() const { return static_cast<int>(parent.size()); }
  // Number of vertices on the longest root-to-leaf path.
  int depth() const;
  Graph graph() const;
};

struct HeavyPathPartition {
  std::vector<std::vector<int>> paths;  // each listed top-down
  std::vector<int> path_of;
};

HeavyPathPartition heavy_path_partition(const RootedTree& t);
// Every vertex on its own path.
HeavyPathPartition singleton_partition(const RootedTree& t);

struct CompressedTree {
  std::vector<int> parent;  // per path; -1 for the root's path
  std::vector<int> level;   // root path at level 0
  int depth = 0;
};

// Throws PartitionMismatch.
CompressedTree compress(const RootedTree& t, const HeavyPathPartition& p);

enum class TreeStyle {
  Compact,    // unit rows, widths from descendant counts; siblings abut (weak)
  Separated,  // x doubled, sibling gaps and an extra row where needed (strong)
};

Layout layout_tree_A(const RootedTree& t, TreeStyle style = TreeStyle::Compact);
// Throws PartitionMismatch.
Layout layout_tree_B(const RootedTree& t, const HeavyPathPartition& p, TreeStyle style = TreeStyle::Compact);

// Complete k-ary tree of height c; vertex v has children k*v+1 .. k*v+k.
RootedTree complete_tree(int k, int c);

struct CompleteTreeLayout {
  Layout layout;
  Coord width = 0, height = 0;
  double alpha_target = 0;    // 1 - m/(2m+2l)
  double alpha_achieved = 0;  // log(width) / log(vertex count)
};

// Step building height j from height j-1 sits at position c-j from the
// top; it is rotating (type 1) when (c-j) mod (2m+2l) < 2m. (m, l) = (1, 0)
// is pure type 1, (0, 1) pure type 2. Throws InvalidParameters.
CompleteTreeLayout layout_complete_tree(int k, int c, int m, int l);

}  // namespace rectlay
