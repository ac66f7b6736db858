#pragma once

#include <cstddef>
#include <vector>

#include "ghoststrata/graph.hpp"

namespace ghoststrata {

inline constexpr std::size_t kMaxEnumeratedEdges = 8;

struct GraphFamily {
  bool allow_loops = false;
  bool allow_bridges = false;
  std::size_t min_vertices = 2;
  std::size_t min_edges = 1;
};

/// All connected multigraphs in `family` with min_edges <= #E <= max_edges,
/// one canonical representative per isomorphism class, ordered by
/// (#E, #V, canonical code). Throws BoundExceeded above kMaxEnumeratedEdges.
std::vector<Multigraph> enumerate_graphs(std::size_t max_edges, const GraphFamily& family);

/// Loopless, bridgeless, at least two vertices: the graphs that can carry a
/// ghost automorphism outside the quasireflection subgroup.
std::vector<Multigraph> enumerate_base_graphs(std::size_t max_edges);

}  // namespace ghoststrata
