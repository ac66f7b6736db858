#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ghoststrata {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using DartId = std::uint32_t;

/// Sorted list of edge ids.
using EdgeSet = std::vector<EdgeId>;

// Edge e owns darts 2e (tail -> head as constructed) and 2e+1 (reversed).
constexpr DartId forward_dart(EdgeId e) { return 2 * e; }
constexpr DartId conj(DartId d) { return d ^ 1u; }
constexpr EdgeId edge_of(DartId d) { return d >> 1; }

struct EdgeEnds {
  VertexId tail;
  VertexId head;
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Connected multigraph with loops and parallel edges, stored as darts.
///
/// Vertices are 0..vertex_count()-1. Construction rejects disconnected input
/// and out-of-range endpoints; the value is immutable afterwards.
class Multigraph {
 public:
  Multigraph(std::size_t vertex_count, std::vector<EdgeEnds> edges);

  /// n vertices 0 and 1 joined by `n` parallel edges oriented 0 -> 1.
  static Multigraph vine(std::size_t n);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return 2 * edges_.size(); }

  const std::vector<EdgeEnds>& edges() const { return edges_; }
  const EdgeEnds& ends(EdgeId e) const { return edges_.at(e); }

  VertexId tail(DartId d) const {
    const auto& e = edges_[edge_of(d)];
    return (d & 1u) ? e.head : e.tail;
  }
  VertexId head(DartId d) const { return tail(conj(d)); }
  bool is_loop(EdgeId e) const { return edges_[e].tail == edges_[e].head; }

  /// Darts whose tail is `v`, in increasing id order.
  std::span<const DartId> darts_from(VertexId v) const;

  /// Number of half-edges at `v`; a loop counts twice.
  std::size_t degree(VertexId v) const { return darts_from(v).size(); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<EdgeEnds> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<DartId> out_darts_;
};

struct Contraction {
  Multigraph graph;
  std::vector<VertexId> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_map;      // new edge -> old edge (forward darts correspond)
};

/// Contracts the edges in `f`. Surviving edges keep their relative order and
/// orientation; edges that become loops are kept. New vertices are numbered by
/// the smallest old vertex they contain.
Contraction contract_edges(const Multigraph& g, std::span<const EdgeId> f);

/// Contracts every edge not listed in `keep`.
Contraction contract_complement(const Multigraph& g, std::span<const EdgeId> keep);

/// Bridges of `g`; never contains loops.
EdgeSet separating_edges(const Multigraph& g);

/// Kruskal in increasing edge id; |result| = #V - 1.
EdgeSet spanning_tree(const Multigraph& g);

/// A closed path given as consecutive darts.
using Circuit = std::vector<DartId>;

/// One circuit per edge outside `tree`, in increasing edge id. The circuit
/// starts with the forward dart of that edge and returns through the tree.
/// Throws std::invalid_argument if `tree` is not a spanning tree.
std::vector<Circuit> fundamental_circuits(const Multigraph& g, const EdgeSet& tree);

std::size_t betti1(const Multigraph& g);

/// Connected and every circuit is a loop.
bool is_tree_like(const Multigraph& g);

/// Drops loops and contracts bridges.
Contraction strip_loops_and_bridges(const Multigraph& g);

EdgeSet complement(const Multigraph& g, std::span<const EdgeId> edges);

}  // namespace ghoststrata
