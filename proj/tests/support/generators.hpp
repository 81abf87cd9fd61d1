#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rectlay/graph.hpp"
#include "rectlay/treelayout.hpp"

namespace rectlay::testing {

// RECTLAY_SEED when set, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 20240607);

// Canonical adjacency code under vertex relabeling; equal codes mean
// isomorphic graphs. Small n only.
std::vector<std::uint8_t> canonical_code(const Graph& g);

// All connected graphs on n vertices up to isomorphism, n <= 7.
std::vector<Graph> connected_graphs(int n);

// All triangulations of the sphere on n vertices up to isomorphism,
// 4 <= n <= 12, found by edge flips from a start triangulation.
std::vector<RotationEmbedding> triangulations(int n);

// Random maximal planar embedding on n >= 3 vertices.
RotationEmbedding random_triangulation(int n, std::mt19937_64& rng);

// Random connected planar graph without separating triangles and with
// m <= 3n - 7 (n >= 4), so every result is layoutable.
Graph random_layoutable_graph(int n, std::mt19937_64& rng);

// Random parent pointers; `spread` bounds how far back a parent may be,
// 0 meaning anywhere. Labels are shuffled, root included.
RootedTree random_tree(int n, std::mt19937_64& rng, int spread = 0);

// The witness edges lie in g and form a subdivision of K5 or K3,3.
bool is_kuratowski_subdivision(const Graph& g, const std::vector<Edge>& witness);

// Decides layoutability from the definition: tries every rotation system and
// asks for a planar one where each triangle bounds a face and some face has
// length four or more, so that a non-triangular outer face leaves nothing
// inside any triangle. Feasible for n <= 7.
bool has_embedding_without_filled_triangles(const Graph& g);

}  // namespace rectlay::testing
