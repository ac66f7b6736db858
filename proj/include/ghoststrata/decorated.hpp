#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghoststrata/cochain.hpp"
#include "ghoststrata/graph.hpp"

namespace ghoststrata {

/// A dual graph with level ell, multiplicity index M and optional genus labels.
///
/// M need not be faithful: edges with M(e) = 0 are allowed and are removed by
/// gamma0().
class DecoratedGraph {
 public:
  DecoratedGraph(Multigraph base, std::uint32_t ell, OneCochain m,
                 std::optional<std::vector<std::uint32_t>> genus = std::nullopt);
  /// M given on forward darts.
  static DecoratedGraph from_edge_values(Multigraph base, std::uint32_t ell,
                                         std::span<const std::int64_t> m,
                                         std::optional<std::vector<std::uint32_t>> genus = std::nullopt);

  const Multigraph& base() const { return base_; }
  std::uint32_t ell() const { return ell_; }
  const OneCochain& m() const { return m_; }
  const std::optional<std::vector<std::uint32_t>>& genus() const { return genus_; }

  bool is_faithful() const;
  /// Same graph and genus, M replaced by factor * M.
  DecoratedGraph scaled(std::uint32_t factor) const;
  DecoratedGraph with_genus(std::optional<std::vector<std::uint32_t>> genus) const;

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;

 private:
  Multigraph base_;
  std::uint32_t ell_;
  OneCochain m_;
  std::optional<std::vector<std::uint32_t>> genus_;
};

struct DecoratedContraction {
  DecoratedGraph graph;
  std::vector<VertexId> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_map;      // new edge -> old edge
};

/// Contracts the edges in `f`, restricting M. Genus labels, if present, are
/// merged so that total genus is preserved.
DecoratedContraction contract(const DecoratedGraph& d, std::span<const EdgeId> f);
DecoratedContraction contract_complement(const DecoratedGraph& d, std::span<const EdgeId> keep);

/// Contracts exactly the edges with M(e) = 0.
DecoratedContraction gamma0(const DecoratedGraph& d);

/// Contracts the edges whose M(e) is divisible by p^k (zero is divisible by
/// everything). Requires p | ell and 1 <= k <= v_p(ell).
Contraction gamma_nu(const DecoratedGraph& d, std::uint32_t p, std::uint32_t k);
Contraction gamma_p(const DecoratedGraph& d, std::uint32_t p);

/// ell / gcd(M(e), ell): the order of the local stabilizer at the node.
std::uint32_t stabilizer_order(const DecoratedGraph& d, EdgeId e);

/// The boundary of M.
ZeroCochain multidegree(const DecoratedGraph& d);

/// Genus labels g_v with boundary(M)(v) = k (2 g_v - 2 + deg v) mod ell for all
/// v. Each g_v is the least residue solving the congruence, raised by ell when
/// it would leave a genus-0 vertex of degree below 3. Empty when some vertex
/// has no solution.
std::optional<std::vector<std::uint32_t>> genus_labeling(const DecoratedGraph& d, std::int64_t k);

/// Residues k in [0, ell) for which genus_labeling succeeds.
std::vector<std::uint32_t> admissible_k(const DecoratedGraph& d);

/// Sum of genus labels plus b1; throws std::invalid_argument without labels.
std::uint64_t total_genus(const DecoratedGraph& d);

/// ell^(2g): the number of ell-th roots of a line bundle on a genus-g curve.
boost::multiprecision::cpp_int root_count(std::uint64_t g, std::uint32_t ell);

/// Codimension of the stratum: the number of nodes.
std::size_t codimension(const DecoratedGraph& d);

}  // namespace ghoststrata
