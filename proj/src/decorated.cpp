#include "ghoststrata/decorated.hpp"

#include <numeric>
#include <stdexcept>

#include "ghoststrata/arith.hpp"

namespace ghoststrata {

DecoratedGraph::DecoratedGraph(Multigraph base, std::uint32_t ell, OneCochain m,
                               std::optional<std::vector<std::uint32_t>> genus)
    : base_(std::move(base)), ell_(ell), m_(std::move(m)), genus_(std::move(genus)) {
  if (ell_ < 2) throw std::invalid_argument("level must be at least 2");
  if (m_.modulus() != ell_) throw std::invalid_argument("multiplicity index has the wrong modulus");
  if (m_.dart_count() != base_.dart_count())
    throw std::invalid_argument("multiplicity index does not match the graph");
  if (genus_ && genus_->size() != base_.vertex_count())
    throw std::invalid_argument("genus labels do not match the graph");
}

DecoratedGraph DecoratedGraph::from_edge_values(Multigraph base, std::uint32_t ell,
                                                std::span<const std::int64_t> m,
                                                std::optional<std::vector<std::uint32_t>> genus) {
  auto cochain = OneCochain::from_edges(base, ell, m);
  return {std::move(base), ell, std::move(cochain), std::move(genus)};
}

bool DecoratedGraph::is_faithful() const {
  for (EdgeId e = 0; e < base_.edge_count(); ++e)
    if (m_.on_edge(e) == 0) return false;
  return true;
}

DecoratedGraph DecoratedGraph::scaled(std::uint32_t factor) const {
  return {base_, ell_, m_ * factor, genus_};
}

DecoratedGraph DecoratedGraph::with_genus(std::optional<std::vector<std::uint32_t>> genus) const {
  return {base_, ell_, m_, std::move(genus)};
}

DecoratedContraction contract(const DecoratedGraph& d, std::span<const EdgeId> f) {
  auto c = contract_edges(d.base(), f);
  std::vector<std::int64_t> m;
  m.reserve(c.edge_map.size());
  for (EdgeId old : c.edge_map) m.push_back(d.m().on_edge(old));

  std::optional<std::vector<std::uint32_t>> genus;
  if (d.genus()) {
    // Each merged vertex gains the first Betti number of what collapsed into it.
    const auto n = c.graph.vertex_count();
    std::vector<std::int64_t> sum(n, 0), edges(n, 0), verts(n, 0);
    for (VertexId v = 0; v < d.base().vertex_count(); ++v) {
      sum[c.vertex_map[v]] += (*d.genus())[v];
      ++verts[c.vertex_map[v]];
    }
    for (EdgeId e : f) ++edges[c.vertex_map[d.base().ends(e).tail]];
    genus.emplace(n);
    for (VertexId v = 0; v < n; ++v)
      (*genus)[v] = static_cast<std::uint32_t>(sum[v] + edges[v] - verts[v] + 1);
  }
  auto graph = DecoratedGraph::from_edge_values(c.graph, d.ell(), m, std::move(genus));
  return {std::move(graph), std::move(c.vertex_map), std::move(c.edge_map)};
}

DecoratedContraction contract_complement(const DecoratedGraph& d, std::span<const EdgeId> keep) {
  const auto f = complement(d.base(), keep);
  return contract(d, f);
}

DecoratedContraction gamma0(const DecoratedGraph& d) {
  EdgeSet zero;
  for (EdgeId e = 0; e < d.base().edge_count(); ++e)
    if (d.m().on_edge(e) == 0) zero.push_back(e);
  return contract(d, zero);
}

Contraction gamma_nu(const DecoratedGraph& d, std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p) || d.ell() % p != 0)
    throw std::invalid_argument("p must be a prime dividing the level");
  const auto e_p = valuation(d.ell(), p);
  if (k < 1 || k > e_p) throw std::invalid_argument("exponent out of range");
  const auto pk = ipow(p, k);
  EdgeSet f;
  for (EdgeId e = 0; e < d.base().edge_count(); ++e)
    if (d.m().on_edge(e) % pk == 0) f.push_back(e);
  return contract_edges(d.base(), f);
}

Contraction gamma_p(const DecoratedGraph& d, std::uint32_t p) {
  if (!is_prime(p) || d.ell() % p != 0)
    throw std::invalid_argument("p must be a prime dividing the level");
  return gamma_nu(d, p, valuation(d.ell(), p));
}

std::uint32_t stabilizer_order(const DecoratedGraph& d, EdgeId e) {
  if (e >= d.base().edge_count()) throw std::invalid_argument("unknown edge");
  return d.ell() / std::gcd(d.m().on_edge(e), d.ell());
}

ZeroCochain multidegree(const DecoratedGraph& d) { return boundary(d.base(), d.m()); }

std::optional<std::vector<std::uint32_t>> genus_labeling(const DecoratedGraph& d, std::int64_t k) {
  const auto ell = d.ell();
  const auto kr = reduce_mod(k, ell);
  const auto deg = multidegree(d);
  std::vector<std::uint32_t> out(d.base().vertex_count());
  for (VertexId v = 0; v < out.size(); ++v) {
    const auto n_v = static_cast<std::int64_t>(d.base().degree(v));
    std::optional<std::uint32_t> found;
    for (std::uint32_t g = 0; g < ell && !found; ++g)
      if (reduce_mod(std::int64_t{kr} * (2 * std::int64_t{g} - 2 + n_v), ell) == deg[v]) found = g;
    if (!found) return std::nullopt;
    out[v] = *found;
    if (out[v] == 0 && n_v < 3) out[v] += ell;
  }
  return out;
}

std::vector<std::uint32_t> admissible_k(const DecoratedGraph& d) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < d.ell(); ++k)
    if (genus_labeling(d, k)) out.push_back(k);
  return out;
}

std::uint64_t total_genus(const DecoratedGraph& d) {
  if (!d.genus()) throw std::invalid_argument("graph has no genus labels");
  std::uint64_t sum = 0;
  for (auto g : *d.genus()) sum += g;
  return sum + betti1(d.base());
}

boost::multiprecision::cpp_int root_count(std::uint64_t g, std::uint32_t ell) {
  return boost::multiprecision::pow(boost::multiprecision::cpp_int(ell),
                                    static_cast<unsigned>(2 * g));
}

std::size_t codimension(const DecoratedGraph& d) { return d.base().edge_count(); }

}  // namespace ghoststrata
