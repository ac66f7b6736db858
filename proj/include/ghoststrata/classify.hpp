#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghoststrata/arith.hpp"
#include "ghoststrata/decorated.hpp"

namespace ghoststrata {

inline constexpr std::uint64_t kDefaultDecorationBound = 2'000'000;

/// Canonical code of a decorated graph: reversing a dart negates M.
std::string decorated_code(const DecoratedGraph& d);

/// The member of d's isomorphism class built from its canonical ordering,
/// together with the edge correspondence (new edge -> old edge, reversed).
struct CanonicalDecorated {
  DecoratedGraph graph;
  std::vector<EdgeId> edge_map;
  std::vector<bool> reversed;
  std::string code;
};
CanonicalDecorated canonical_decorated(const DecoratedGraph& d);

struct DecorationOrbit {
  DecoratedGraph graph;  // lexicographically least M in the orbit
  std::size_t orbit_size;
};

/// Every nowhere-zero M on `g` up to automorphisms of `g` (acting on darts,
/// so reversal negates M). Throws BoundExceeded when (ell - 1)^#E exceeds
/// `bound`, std::invalid_argument when g has loops or bridges.
std::vector<DecorationOrbit> enumerate_decorations(const Multigraph& g, std::uint32_t ell,
                                                   std::uint64_t bound = kDefaultDecorationBound);

/// The configuration of a vertex v1 adjacent to exactly two vertices v2 and
/// v3, joined to v2 by a single edge e. T is a spanning tree through an edge
/// e' from v1 to v3 avoiding e; gamma1 contracts e', gamma2 contracts the
/// rest of T. The two contractions cover the input with complementary ranks.
struct ConfigReduction {
  VertexId v1, v2, v3;
  EdgeId e, e_prime;
  EdgeSet tree;
  DecoratedContraction gamma1;
  DecoratedContraction gamma2;
};
std::optional<ConfigReduction> reduce_step(const DecoratedGraph& d);

struct StratumClass {
  DecoratedGraph graph;  // canonical representative
  std::string code;
  /// Sorted multiplicities with all edges oriented towards one vertex, for
  /// two-vertex graphs; the lesser of the two choices of that vertex.
  std::optional<std::vector<std::uint32_t>> vine;
  Rational age;
  std::size_t codimension;
  std::vector<std::uint32_t> admissible_k;
  EvenFunction witness;  // on `graph`, of minimal age
  std::size_t orbit_size;
  /// No proper contraction is junior.
  bool maximal;
  /// Total genus of genus_labeling for the requested k.
  std::uint64_t min_total_genus;
};

struct ClassifyOptions {
  /// Default ell - 1.
  std::optional<std::size_t> max_edges;
  /// Also report junior classes that contract onto another junior class.
  bool include_dominated = false;
  /// Permit ell = 11.
  bool allow_large_ell = false;
  unsigned threads = 1;
};

/// Junior classes of decorated graphs (loopless, bridgeless, faithful) whose
/// multidegree admits a genus labelling for k, sorted by (#E, #V, code).
/// Throws std::invalid_argument for an unsupported ell.
std::vector<StratumClass> classify_junior(std::uint32_t ell, std::int64_t k,
                                          const ClassifyOptions& options = {});

/// Whether contracting some edge subset of d0 gives a graph isomorphic to d1.
bool contracts_to(const DecoratedGraph& d0, const DecoratedGraph& d1);

std::optional<std::vector<std::uint32_t>> vine_notation(const DecoratedGraph& d);

/// classify_junior(ell, k) equals the image of classify_junior(ell, 1) under
/// M -> kM, compared by canonical code.
bool prop_k_symmetry(std::uint32_t ell, std::int64_t k, const ClassifyOptions& options = {});

}  // namespace ghoststrata
