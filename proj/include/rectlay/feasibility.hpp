#pragma once

#include <string>
#include <vector>

#include "rectlay/errors.hpp"
#include "rectlay/graph.hpp"

namespace rectlay {

enum class WitnessKind { None, Nonplanar, SeparatingTriangle, Triangulation };

std::string to_string(WitnessKind k);

struct FeasibilityVerdict {
  bool layoutable = true;
  WitnessKind witness = WitnessKind::None;
  std::vector<Edge> kuratowski;  // Nonplanar
  Triple triangle{-1, -1, -1};   // SeparatingTriangle
};

class NotLayoutable : public Error {
 public:
  explicit NotLayoutable(FeasibilityVerdict v)
      : Error("graph has no rectangular layout (" + to_string(v.witness) + ")"), verdict_(std::move(v)) {}
  const FeasibilityVerdict& verdict() const { return verdict_; }

 private:
  FeasibilityVerdict verdict_;
};

// 3-cycles with at least one vertex on the side away from the outer face.
std::vector<Triple> filled_triangles(const RotationEmbedding& e);

// Requires g connected.
FeasibilityVerdict is_layoutable(const Graph& g);

// Throws NotLayoutable.
RotationEmbedding embed_without_filled_triangles(const Graph& g);

}  // namespace rectlay
