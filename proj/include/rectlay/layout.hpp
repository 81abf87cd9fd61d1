#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rectlay/graph.hpp"

namespace rectlay {

using Coord = std::int64_t;

inline constexpr int kGap = -1;

struct Rect {
  int id = kGap;  // vertex id, or kGap
  Coord x = 0, y = 0, w = 1, h = 1;

  bool gap() const { return id < 0; }
  Coord right() const { return x + w; }
  Coord top() const { return y + h; }
  bool operator==(const Rect&) const = default;
};

enum class LayoutMode { Strong, Weak };

std::string to_string(LayoutMode m);

struct Layout {
  std::vector<Rect> rects;
  LayoutMode mode = LayoutMode::Strong;
  bool operator==(const Layout&) const = default;
};

struct BBox {
  Coord x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  Coord width() const { return x1 - x0; }
  Coord height() const { return y1 - y0; }
};

BBox bounding_box(const Layout& l);
std::pair<Coord, Coord> bbox(const Layout& l);
Coord area(const Layout& l);

// Two rectangle boundaries sharing a segment of positive length. Indices
// point into Layout::rects. `horizontal` means the shared segment is
// horizontal; then `a` is the lower rectangle, otherwise `a` is the left one.
struct Contact {
  std::size_t a = 0, b = 0;
  bool horizontal = false;
  Coord line = 0;        // y (horizontal) or x (vertical) of the shared segment
  Coord lo = 0, hi = 0;  // extent of the shared segment
  Coord length() const { return hi - lo; }
};

// Every positive-length boundary overlap, gaps included, sorted by (a, b).
std::vector<Contact> contacts(const Layout& l);
// Pairs whose only common boundary point is a corner.
std::vector<std::pair<std::size_t, std::size_t>> corner_touches(const Layout& l);
// Pairs whose interiors intersect.
std::vector<std::pair<std::size_t, std::size_t>> interior_overlaps(const Layout& l);

// Contact graph of the non-gap rectangles. Vertex count defaults to the
// largest id plus one.
Graph contact_graph(const Layout& l, int vertex_count = -1);

struct ValidationReport {
  bool ok = true;
  std::vector<Edge> missing;  // edges of g without a contact
  std::vector<Edge> extra;    // contacts that are not edges (strong mode)
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
  std::vector<std::string> problems;  // malformed rectangles or vertex mapping
  std::string summary() const;
};

ValidationReport validate_layout(const Layout& l, const Graph& g, LayoutMode mode);

Layout scaled(const Layout& l, Coord factor);
Layout translated(const Layout& l, Coord dx, Coord dy);
// Moves the bounding box corner to the origin.
Layout normalized(const Layout& l);
// Drops rectangle `id` and renumbers the remaining ids above it down by one.
Layout without_vertex(const Layout& l, int id);
Graph without_vertex(const Graph& g, int v);

}  // namespace rectlay
