#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ghoststrata/graph.hpp"

namespace ghoststrata {

inline constexpr std::size_t kDefaultCanonicalVertexBound = 8;

struct CanonicalForm {
  std::string code;
  /// order[i] is the vertex placed at position i by the minimizing ordering.
  std::vector<VertexId> order;
};

/// Isomorphism-invariant code of a dart-labelled multigraph.
///
/// `dart_labels` is empty (unlabelled) or has one entry per dart. The labels of
/// a dart and its conjugate encode how a label transforms under reversal, so
/// two labelled graphs get equal codes iff some vertex bijection plus edge
/// bijection (possibly reversing edges) carries darts to darts with equal
/// labels. The code is the lexicographic minimum of a column encoding over all
/// vertex orderings, searched by branch and bound. Throws BoundExceeded when
/// the graph has more than `max_vertices` vertices.
CanonicalForm canonical_form(const Multigraph& g, std::span<const std::int64_t> dart_labels = {},
                             std::size_t max_vertices = kDefaultCanonicalVertexBound);

std::string canonical_code(const Multigraph& g, std::span<const std::int64_t> dart_labels = {},
                           std::size_t max_vertices = kDefaultCanonicalVertexBound);

/// Expands per-edge labels (read on the forward dart) into dart labels using
/// `reverse` for the conjugate dart.
std::vector<std::int64_t> dart_labels_from_edges(
    const Multigraph& g, std::span<const std::int64_t> edge_labels,
    const std::function<std::int64_t(std::int64_t)>& reverse);

/// Relabels `g` so that vertex order[i] becomes vertex i. Edges are sorted by
/// (lower endpoint, upper endpoint, label) and oriented from lower to upper
/// position. `edge_map[new] = old`; `reversed[new]` is set when the new forward
/// dart is the old backward dart.
struct Relabelling {
  Multigraph graph;
  std::vector<EdgeId> edge_map;
  std::vector<bool> reversed;
};
Relabelling relabel(const Multigraph& g, const std::vector<VertexId>& order,
                    std::span<const std::int64_t> dart_labels = {});

/// Automorphisms of `g` as permutations of darts (result[k][d] = image of d).
/// Includes permutations of parallel edges and loop reversals. Identity first.
std::vector<std::vector<DartId>> dart_automorphisms(
    const Multigraph& g, std::size_t max_vertices = kDefaultCanonicalVertexBound);

}  // namespace ghoststrata
