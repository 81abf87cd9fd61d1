// Boost.Graph backs the planarity test, the Kuratowski witness and the
// block decomposition.
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>
#include <algorithm>
#include <iterator>

#include "rectlay/errors.hpp"
#include "rectlay/graph.hpp"

namespace rectlay {
namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

BGraph to_boost(const Graph& g) {
  BGraph b(g.vertex_count());
  int idx = 0;
  for (auto [u, v] : g.edges()) {
    auto [e, ok] = boost::add_edge(u, v, b);
    (void)ok;
    boost::put(boost::edge_index, b, e, idx++);
  }
  return b;
}

// The Boost witness can carry surplus edges. Dropping every edge whose
// removal keeps the set nonplanar leaves a K5 or K3,3 subdivision.
std::vector<Edge> minimal_nonplanar(int n, std::vector<Edge> w) {
  for (std::size_t i = 0; i < w.size();) {
    std::vector<Edge> rest = w;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!boost::boyer_myrvold_planarity_test(to_boost(Graph(n, rest))))
      w = std::move(rest);
    else
      ++i;
  }
  return w;
}

}  // namespace

RotationEmbedding planar_embed(const Graph& g) {
  if (!is_connected(g)) throw PreconditionViolation("planar_embed needs a connected graph");
  const int n = g.vertex_count();
  BGraph b = to_boost(g);
  std::vector<std::vector<BEdge>> emb(n);
  std::vector<BEdge> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = b,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, b)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (!planar) {
    std::vector<Edge> w;
    for (const auto& e : kuratowski) {
      int u = static_cast<int>(boost::source(e, b));
      int v = static_cast<int>(boost::target(e, b));
      w.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    throw Nonplanar(minimal_nonplanar(n, std::move(w)));
  }
  RotationEmbedding r;
  r.rotation.resize(n);
  for (int v = 0; v < n; ++v)
    for (const auto& e : emb[v]) {
      int s = static_cast<int>(boost::source(e, b));
      int t = static_cast<int>(boost::target(e, b));
      r.rotation[v].push_back(s == v ? t : s);
    }
  r.outer = select_outer_dart(r);
  return r;
}

bool is_planar(const Graph& g) {
  BGraph b = to_boost(g);
  return boost::boyer_myrvold_planarity_test(b);
}

BlockInfo biconnected_blocks(const Graph& g) {
  BGraph b = to_boost(g);
  BlockInfo info;
  info.edge_block.assign(g.edge_count(), -1);
  info.is_articulation.assign(g.vertex_count(), 0);
  if (g.edge_count() == 0) return info;
  std::vector<int> comp(g.edge_count());
  auto cmap = boost::make_iterator_property_map(comp.begin(), boost::get(boost::edge_index, b));
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> arts;
  auto res = boost::biconnected_components(b, cmap, std::back_inserter(arts));
  info.block_count = static_cast<int>(res.first);
  for (auto v : arts) info.is_articulation[v] = 1;
  // Edge indices follow g.edges() order by construction.
  info.edge_block = comp;
  return info;
}

}  // namespace rectlay
