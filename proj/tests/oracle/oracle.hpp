#pragma once

// Exhaustive recomputations used to check the library. Nothing here calls
// into the library except the conversion helpers at the bottom.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ghoststrata/decorated.hpp"
#include "ghoststrata/graph.hpp"

namespace oracle {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (tail, head)
};

/// Values on the forward darts, one per edge.
using Vec = std::vector<int>;

bool connected(const Graph& g);
bool is_loop(const Graph& g, int e);
/// e is a bridge iff deleting it disconnects the graph.
std::vector<bool> bridges(const Graph& g);
bool tree_like(const Graph& g);

struct Contracted {
  Graph graph;
  std::vector<int> edge_map;  // new edge -> old edge
};
/// Merges the endpoints of every masked edge; surviving edges keep order and
/// orientation.
Contracted contract(const Graph& g, const std::vector<bool>& mask);

/// Every delta(f), f ranging over all ell^n vertex functions.
std::set<Vec> image_delta(const Graph& g, int ell);
bool in_image_delta(const Graph& g, const Vec& b, int ell);

/// {a even on gamma0 edges : aM in im delta}, by trying all ell^#E0 functions.
/// Values are listed on the surviving edges in their original order.
struct Group {
  Contracted gamma0;
  std::set<Vec> elements;
};
Group ghost_group(const Graph& g, const Vec& m, int ell);

/// Closure under addition of the single-edge-supported elements of `group`.
std::set<Vec> qr_closure(const std::set<Vec>& group, int ell);

/// Least sum of reps over non-loop, non-bridge edges of gamma0, among
/// elements nonzero somewhere there; the numerator over ell. Empty when no
/// such element exists.
std::optional<int> stratum_age_numerator(const Graph& g, const Vec& m, int ell);

/// One element a = delta(f) / M per potential f with f(0) = 0. Faithful
/// M and prime ell only; used where exhaustive search over even functions is
/// too slow.
std::vector<Vec> ghost_group_by_potentials(const Graph& g, const Vec& m, int ell);

/// Composite ell: order of {a in prod Z/r(e) : aM in im delta} and of the
/// subgroup generated by its single-edge-supported elements.
std::pair<std::uint64_t, std::uint64_t> composite_orders(const Graph& g, const Vec& m, int ell);

/// Lexicographically least sorted edge list over all vertex permutations.
/// With `m`, labels follow the edges and negate when an edge is flipped.
std::vector<int> iso_key(const Graph& g, const Vec* m = nullptr, int ell = 0);

/// Connected multigraphs with min_edges..max_edges edges up to isomorphism,
/// from all multisets of vertex pairs.
std::vector<Graph> all_graphs(int max_edges, bool loops, bool bridges_allowed, int min_vertices,
                              int min_edges = 0);

/// Every labelled loopless bridgeless connected graph on n vertices with E edges.
std::vector<Graph> labelled_base_graphs(int n, int edges);

struct ClassRecord {
  int age_numerator;
  bool maximal;
  int edges;
  int vertices;
};

struct PipelineOptions {
  int ell = 5;
  int k = 1;
  int max_edges = 4;
  /// Iterate labelled graphs instead of isomorphism representatives.
  bool labelled = true;
  /// Check maximality by computing the stratum age of every proper
  /// contraction; otherwise restrict the group to supports avoiding the
  /// contracted edges.
  bool contract_each = true;
};

/// Junior decorated classes keyed by iso_key, whose multidegree admits a
/// genus labelling for k. Exhaustive groups, no orbit pruning.
std::map<std::vector<int>, ClassRecord> classify(const PipelineOptions& options);

Graph from_library(const ghoststrata::Multigraph& g);
ghoststrata::Multigraph to_library(const Graph& g);
Vec edge_values(const ghoststrata::DecoratedGraph& d);
std::vector<int> iso_key(const ghoststrata::DecoratedGraph& d);

}  // namespace oracle
