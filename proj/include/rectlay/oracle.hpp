#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rectlay/graph.hpp"
#include "rectlay/layout.hpp"

namespace rectlay {

struct OracleResult {
  std::optional<Coord> min_area;  // empty: no strong layout fits the box
  Layout witness;
  Coord max_w = 0, max_h = 0;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

// Exact minimum bounding-box area of a strong layout of g with width at
// most max_w and height at most max_h. Boxes are tried by area, then by
// longer side. Throws BudgetExceeded once `node_budget` placements have
// been tried.
OracleResult brute_force_min_area(const Graph& g, Coord max_w, Coord max_h,
                                  std::uint64_t node_budget = kDefaultOracleBudget);

// Every strong layout of g inside the w x h box, in search order. With
// `reduce` the first vertex is kept in the lower-left quadrant, which
// leaves one layout per reflection class at least.
std::vector<Layout> layouts_in_box(const Graph& g, Coord w, Coord h, bool reduce, std::size_t limit = 100000,
                                   std::uint64_t node_budget = kDefaultOracleBudget);

}  // namespace rectlay
