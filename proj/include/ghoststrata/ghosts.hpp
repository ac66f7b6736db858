#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghoststrata/arith.hpp"
#include "ghoststrata/cochain.hpp"
#include "ghoststrata/decorated.hpp"

namespace ghoststrata {

inline constexpr std::uint64_t kDefaultExpansionBound = 10'000'000;

/// True iff the odd cochain e -> a(e) M(e) lies in im(delta). `d` must be
/// faithful; throws std::invalid_argument otherwise.
bool lifts(const EvenFunction& a, const DecoratedGraph& d);

/// A subgroup of the even functions on a faithful decorated graph, given by
/// linearly independent generators over Z/ell (ell prime).
class GhostGroup {
 public:
  GhostGroup(DecoratedGraph graph, std::vector<EvenFunction> generators);

  const DecoratedGraph& graph() const { return graph_; }
  const std::vector<EvenFunction>& generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  boost::multiprecision::cpp_int order() const;
  bool is_trivial() const { return generators_.empty(); }

  /// Every element, in lexicographic order of generator coefficients.
  /// Throws BoundExceeded when the order exceeds `bound`.
  std::vector<EvenFunction> expand(std::uint64_t bound = kDefaultExpansionBound) const;
  bool contains(const EvenFunction& a) const;
  /// Coefficients of `a` in the generators, if `a` is in the group.
  std::optional<std::vector<std::uint32_t>> coordinates(const EvenFunction& a) const;

 private:
  DecoratedGraph graph_;
  std::vector<EvenFunction> generators_;
};

/// Ghost automorphisms of gamma0(d): all even a with aM in im(delta).
/// Generated by cut(e; T) / M for the tree edges e. Requires ell prime.
GhostGroup ghost_group(const DecoratedGraph& d);

/// The subgroup of ghost_group(d) generated by functions supported on one
/// separating edge of gamma0(d).
GhostGroup qr_subgroup(const DecoratedGraph& d);

/// Order of {a in prod_e Z/r(e) : aM in im(delta)} on gamma0(d) for any ell,
/// with r(e) the stabilizer order. Each such a is delta(f) / M for exactly one
/// potential f with f(0) = 0, so this counts the potentials. Throws
/// BoundExceeded when ell^(#V(gamma0) - 1) exceeds `bound`.
boost::multiprecision::cpp_int ghost_order(const DecoratedGraph& d,
                                           std::uint64_t bound = kDefaultExpansionBound);

/// Order of the subgroup generated by ghosts supported on a single edge of
/// gamma0(d): r(e) per separating edge.
boost::multiprecision::cpp_int qr_order(const DecoratedGraph& d);

/// Sum over edges of rep(a(e)) / ell.
Rational age(const EvenFunction& a);

/// gamma0(d) with loops and separating edges contracted; maps refer to `d`.
DecoratedContraction quotient_graph(const DecoratedGraph& d);

struct AgeOptions {
  /// Minimize over the quotient graph (dropping the quasireflection part).
  bool quotient_qr = true;
  std::uint64_t bound = kDefaultExpansionBound;
};

struct StratumAge {
  /// Minimum age of a nonzero element; empty when the group is trivial.
  std::optional<Rational> age;
  /// A minimizing element on `graph` (first in search order).
  std::optional<EvenFunction> witness;
  /// The graph the minimum was taken on, with maps into the input.
  DecoratedContraction graph;
};

/// Minimum age over the nonzero ghost automorphisms. Requires ell prime.
/// Throws BoundExceeded when the group order exceeds `options.bound`.
StratumAge stratum_age(const DecoratedGraph& d, const AgeOptions& options = {});

bool is_junior(const DecoratedGraph& d);

/// Every element of ghost_group(d) with age strictly below `limit`, on
/// gamma0(d), in search order. The zero element is excluded.
std::vector<EvenFunction> elements_below(const DecoratedGraph& d, Rational limit,
                                         std::uint64_t bound = kDefaultExpansionBound);

/// Junior and no proper contraction is junior: some element has age below 1
/// and every such element of the quotient group is nonzero on every edge.
bool is_closure_maximal_junior(const DecoratedGraph& d);

/// Whether the ghost group is generated by quasireflections: gamma0 is
/// tree-like for prime ell, every gamma_p is tree-like for composite ell.
bool generated_by_qr(const DecoratedGraph& d);

struct AlphaBeta {
  std::vector<std::int64_t> alpha;  // index k - 1
  std::vector<std::int64_t> beta;
};

/// Vertex and separating-edge increments along the chain of contractions
/// gamma_nu(d, p, e_p) -> ... -> gamma_nu(d, p, 1) -> point.
AlphaBeta alpha_beta(const DecoratedGraph& d, std::uint32_t p);

struct VineWitness {
  std::vector<bool> side;  // per vertex of the input graph
  EdgeSet crossing;        // input edges joining the two sides
  std::size_t n() const { return crossing.size(); }
};

/// A two-part vertex partition of gamma0(d) whose contraction is an n-vine
/// with n >= 2; empty iff gamma0(d) is tree-like.
std::optional<VineWitness> vine_witness(const DecoratedGraph& d);

struct SupportReport {
  bool supported;
  EvenFunction inverse;
  Rational age;
  Rational inverse_age;
  std::size_t edge_count;
};

SupportReport supported_check(const EvenFunction& a, const DecoratedGraph& d);

/// Whether #V - 1 equals the sum of #V(part) - 1 over the contractions
/// keeping each part. Throws std::invalid_argument if the parts miss an edge.
bool cover_rank_condition(const DecoratedGraph& d, const std::vector<EdgeSet>& parts);

struct CoverDecomposition {
  std::vector<DecoratedContraction> parts;
  std::vector<GhostGroup> groups;
  /// Generators of each part's group, pulled back to the edges of the input.
  std::vector<std::vector<EvenFunction>> embedded;

  /// The unique components of `a`, one per part, summing to `a`. Throws
  /// std::invalid_argument if `a` is not a ghost automorphism of the input.
  std::vector<EvenFunction> decompose(const EvenFunction& a) const;
};

/// Splits the ghost group of a faithful `d` along the contractions keeping
/// each edge subset. Empty unless the group is the direct sum of the parts'
/// groups. Parts may overlap but must cover every edge.
std::optional<CoverDecomposition> cover_decompose(const DecoratedGraph& d,
                                                  const std::vector<EdgeSet>& parts);

}  // namespace ghoststrata
