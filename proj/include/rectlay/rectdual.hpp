#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rectlay/augment.hpp"
#include "rectlay/graph.hpp"
#include "rectlay/layout.hpp"

namespace rectlay {

// G' - v with four frame vertices around it. Interior vertices keep the
// order of their ids in G'; the frame comes last.
struct FramedGraph {
  Graph graph;
  RotationEmbedding embedding;
  int north = -1, east = -1, south = -1, west = -1;
  std::vector<int> original;  // framed id -> id in G', or -1 for frame vertices
  int interior_count() const { return graph.vertex_count() - 4; }
  bool is_frame(int v) const { return v == north || v == east || v == south || v == west; }
};

enum class Axis { Horizontal, Vertical };

// `from` lies left of `to` (Horizontal) or below it (Vertical).
struct LabeledEdge {
  int from = -1, to = -1;
  Axis axis = Axis::Horizontal;
};

struct EdgeLabeling {
  FramedGraph framed;
  std::vector<LabeledEdge> edges;  // every edge except the four frame edges
};

// Throws FramingFailure.
FramedGraph frame_for_dual(const AugmentedGraph& a, int v);
// Throws LabelingFailure.
EdgeLabeling compute_rel(const FramedGraph& f);
// Empty when the labeling satisfies every local and global rule; otherwise
// the first broken rule.
std::optional<std::string> audit_labeling(const EdgeLabeling& l);
// Interior rectangles only, ids as in G', moved to the origin.
Layout rel_to_dissection(const EdgeLabeling& l);
Layout rectangular_dual(const AugmentedGraph& a, int v);

// Empty when the layout tiles its bounding box with no point shared by four
// rectangles and its adjacency graph equals g (ids index g).
std::optional<std::string> audit_dissection(const Layout& d, const Graph& g);

}  // namespace rectlay
