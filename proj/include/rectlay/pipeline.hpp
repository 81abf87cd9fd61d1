#pragma once

#include <vector>

#include "rectlay/augment.hpp"
#include "rectlay/feasibility.hpp"
#include "rectlay/graph.hpp"
#include "rectlay/layout.hpp"

namespace rectlay {

// Intermediate results of one layout_graph run.
struct PipelineTrace {
  AugmentedGraph augmented;
  int framed_vertex_count = 0;
  Layout dissection;  // ids are vertices of the augmented graph
};

// Strong layout of a connected graph. Throws NotLayoutable.
Layout layout_graph(const Graph& g, PipelineTrace* trace = nullptr);

// Marks the rectangles of added vertices as gaps.
Layout gapify(const Layout& d, const std::vector<int>& added);

// Scales by 2, then separates every contact that is not an edge of g,
// smallest id pair first. Throws NotWeakLayout.
Layout strengthen(const Layout& weak, const Graph& g);

// Scales by 2 and removes every corner-only touch between vertex
// rectangles while keeping the contact graph.
Layout remove_corner_contacts(const Layout& l);
// As above, but corner touches between adjacent vertices of g become
// length-1 contacts and the result is a strong layout of g.
Layout remove_corner_contacts(const Layout& l, const Graph& g);

}  // namespace rectlay
