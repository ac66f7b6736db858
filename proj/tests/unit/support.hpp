#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "ghoststrata/decorated.hpp"
#include "ghoststrata/graph.hpp"

namespace testing {

using namespace ghoststrata;

inline Multigraph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  std::vector<EdgeEnds> es;
  for (auto [t, h] : edges) es.push_back({t, h});
  return Multigraph(n, std::move(es));
}

inline DecoratedGraph decorate(Multigraph g, std::uint32_t ell, std::vector<std::int64_t> m) {
  return DecoratedGraph::from_edge_values(std::move(g), ell, m);
}

/// n-vine with every edge oriented 0 -> 1 carrying m.
inline DecoratedGraph vine(std::uint32_t ell, std::vector<std::int64_t> m) {
  const std::size_t n = m.size();
  return decorate(Multigraph::vine(n), ell, std::move(m));
}

/// An isomorphic copy: vertices permuted, edges shuffled, some reversed (M negated).
inline DecoratedGraph scramble(const DecoratedGraph& d, std::mt19937_64& rng) {
  const auto& g = d.base();
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<EdgeEnds> es;
  std::vector<std::int64_t> m;
  for (EdgeId e : order) {
    auto [t, h] = g.ends(e);
    std::int64_t v = d.m().on_edge(e);
    if (rng() & 1) {
      std::swap(t, h);
      v = -v;
    }
    es.push_back({perm[t], perm[h]});
    m.push_back(v);
  }
  return DecoratedGraph::from_edge_values(Multigraph(g.vertex_count(), std::move(es)), d.ell(), m);
}

/// Random connected multigraph: a random tree plus extra random edges.
inline Multigraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t extra, bool loops) {
  std::vector<EdgeEnds> es;
  for (VertexId v = 1; v < n; ++v)
    es.push_back({static_cast<VertexId>(rng() % v), v});
  for (std::size_t i = 0; i < extra; ++i) {
    VertexId a = rng() % n, b = rng() % n;
    if (a == b && !loops) continue;
    es.push_back({a, b});
  }
  std::shuffle(es.begin(), es.end(), rng);
  return Multigraph(n, std::move(es));
}

}  // namespace testing
