#include "ghoststrata/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ghoststrata/canonical.hpp"
#include "ghoststrata/enumerate.hpp"
#include "ghoststrata/errors.hpp"
#include "ghoststrata/ghosts.hpp"

namespace ghoststrata {

namespace {

std::vector<std::int64_t> dart_labels(const DecoratedGraph& d) {
  const auto& v = d.m().values();
  return {v.begin(), v.end()};
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::string decorated_code(const DecoratedGraph& d) {
  const auto labels = dart_labels(d);
  return canonical_code(d.base(), labels);
}

CanonicalDecorated canonical_decorated(const DecoratedGraph& d) {
  const auto labels = dart_labels(d);
  auto form = canonical_form(d.base(), labels);
  auto rel = relabel(d.base(), form.order, labels);
  std::vector<std::int64_t> m;
  for (EdgeId e = 0; e < rel.edge_map.size(); ++e) {
    const DartId fwd = forward_dart(rel.edge_map[e]);
    m.push_back(d.m()[rel.reversed[e] ? conj(fwd) : fwd]);
  }
  std::optional<std::vector<std::uint32_t>> genus;
  if (d.genus()) {
    genus.emplace();
    for (VertexId v : form.order) genus->push_back((*d.genus())[v]);
  }
  auto graph = DecoratedGraph::from_edge_values(std::move(rel.graph), d.ell(), m, std::move(genus));
  return {std::move(graph), std::move(rel.edge_map), std::move(rel.reversed), std::move(form.code)};
}

std::vector<DecorationOrbit> enumerate_decorations(const Multigraph& g, std::uint32_t ell,
                                                   std::uint64_t bound) {
  if (ell < 2) throw std::invalid_argument("level must be at least 2");
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) throw std::invalid_argument("graph has a loop");
  if (!separating_edges(g).empty()) throw std::invalid_argument("graph has a separating edge");

  const auto edges = g.edge_count();
  const std::uint64_t base = ell - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < edges; ++i) {
    total *= base;
    if (total > bound)
      throw BoundExceeded("decorations: (ell - 1)^#E exceeds bound " + std::to_string(bound));
  }

  // Inverse dart permutations: the image of M under pi is M o pi^-1.
  std::vector<std::vector<DartId>> inverses;
  for (const auto& pi : dart_automorphisms(g)) {
    std::vector<DartId> inv(pi.size());
    for (DartId d = 0; d < pi.size(); ++d) inv[pi[d]] = d;
    inverses.push_back(std::move(inv));
  }

  // Index = base-(ell-1) digits of M(e) - 1, edge 0 most significant, so that
  // increasing index is lexicographic order on M.
  std::vector<std::uint32_t> m(edges), dart_m(2 * edges), image(edges);
  auto decode = [&](std::uint64_t idx) {
    for (std::size_t e = edges; e-- > 0;) {
      m[e] = static_cast<std::uint32_t>(idx % base) + 1;
      idx /= base;
    }
  };
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::uint64_t idx = 0;
    for (auto x : v) idx = idx * base + (x - 1);
    return idx;
  };

  std::vector<bool> seen(total, false);
  std::vector<DecorationOrbit> out;
  std::vector<std::uint64_t> orbit;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (seen[idx]) continue;
    decode(idx);
    for (EdgeId e = 0; e < edges; ++e) {
      dart_m[forward_dart(e)] = m[e];
      dart_m[conj(forward_dart(e))] = ell - m[e];
    }
    orbit.clear();
    for (const auto& inv : inverses) {
      for (EdgeId e = 0; e < edges; ++e) image[e] = dart_m[inv[forward_dart(e)]];
      const auto j = encode(image);
      if (!seen[j]) {
        seen[j] = true;
        orbit.push_back(j);
      }
    }
    const std::vector<std::int64_t> values(m.begin(), m.end());
    out.push_back({DecoratedGraph::from_edge_values(g, ell, values), orbit.size()});
  }
  return out;
}

std::optional<ConfigReduction> reduce_step(const DecoratedGraph& d) {
  const auto& g = d.base();
  for (VertexId v1 = 0; v1 < g.vertex_count(); ++v1) {
    std::vector<std::pair<VertexId, EdgeId>> nbrs;
    for (DartId dart : g.darts_from(v1))
      if (g.head(dart) != v1) nbrs.emplace_back(g.head(dart), edge_of(dart));
    std::sort(nbrs.begin(), nbrs.end());
    std::vector<VertexId> distinct;
    for (const auto& [w, e] : nbrs)
      if (distinct.empty() || distinct.back() != w) distinct.push_back(w);
    if (distinct.size() != 2) continue;

    auto count = [&](VertexId w) {
      return std::count_if(nbrs.begin(), nbrs.end(), [&](const auto& p) { return p.first == w; });
    };
    for (int swap = 0; swap < 2; ++swap) {
      const VertexId v2 = distinct[swap], v3 = distinct[1 - swap];
      if (count(v2) != 1) continue;
      const EdgeId e = std::find_if(nbrs.begin(), nbrs.end(), [&](const auto& p) { return p.first == v2; })->second;
      const EdgeId e_prime =
          std::find_if(nbrs.begin(), nbrs.end(), [&](const auto& p) { return p.first == v3; })->second;

      // Kruskal with e' first and e last.
      std::vector<EdgeId> order{e_prime};
      for (EdgeId x = 0; x < g.edge_count(); ++x)
        if (x != e && x != e_prime) order.push_back(x);
      order.push_back(e);
      DisjointSets sets(g.vertex_count());
      EdgeSet tree;
      for (EdgeId x : order)
        if (sets.unite(g.ends(x).tail, g.ends(x).head)) tree.push_back(x);
      if (std::find(tree.begin(), tree.end(), e) != tree.end()) continue;
      std::sort(tree.begin(), tree.end());

      EdgeSet rest;
      for (EdgeId x : tree)
        if (x != e_prime) rest.push_back(x);
      auto gamma1 = contract(d, std::vector<EdgeId>{e_prime});
      auto gamma2 = contract(d, rest);
      return ConfigReduction{v1, v2, v3, e, e_prime, std::move(tree), std::move(gamma1), std::move(gamma2)};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::uint32_t>> vine_notation(const DecoratedGraph& d) {
  const auto& g = d.base();
  if (g.vertex_count() != 2) return std::nullopt;
  std::vector<std::uint32_t> toward, away;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) return std::nullopt;
    const DartId into_one = g.ends(e).head == 1 ? forward_dart(e) : conj(forward_dart(e));
    toward.push_back(d.m()[into_one]);
    away.push_back(d.m()[conj(into_one)]);
  }
  std::sort(toward.begin(), toward.end());
  std::sort(away.begin(), away.end());
  return std::min(toward, away);
}

namespace {

std::optional<StratumClass> evaluate(const DecoratedGraph& d, std::int64_t k, std::size_t orbit_size,
                                     bool include_dominated) {
  const auto junior = elements_below(d, 1);
  if (junior.empty()) return std::nullopt;
  const auto edges = d.base().edge_count();
  const bool maximal = std::all_of(junior.begin(), junior.end(),
                                   [&](const EvenFunction& a) { return a.support().size() == edges; });
  if (!maximal && !include_dominated) return std::nullopt;
  auto labels = genus_labeling(d, k);
  if (!labels) return std::nullopt;

  const EvenFunction* witness = &junior.front();
  for (const auto& a : junior)
    if (age(a) < age(*witness)) witness = &a;

  auto canon = canonical_decorated(d);
  std::vector<std::int64_t> w;
  for (EdgeId e : canon.edge_map) w.push_back(witness->on_edge(e));
  auto canon_witness = EvenFunction::from_edges(canon.graph.base(), d.ell(), w);

  const auto genus = total_genus(d.with_genus(std::move(labels)));
  auto vine = vine_notation(canon.graph);
  return StratumClass{std::move(canon.graph),
                      std::move(canon.code),
                      std::move(vine),
                      age(*witness),
                      codimension(d),
                      admissible_k(d),
                      std::move(canon_witness),
                      orbit_size,
                      maximal,
                      genus};
}

}  // namespace

std::vector<StratumClass> classify_junior(std::uint32_t ell, std::int64_t k, const ClassifyOptions& options) {
  const bool supported = ell == 2 || ell == 3 || ell == 5 || ell == 7 || (ell == 11 && options.allow_large_ell);
  if (!supported)
    throw std::invalid_argument("unsupported level " + std::to_string(ell) +
                                (ell == 11 ? " (requires the large-level flag)" : ""));
  const auto max_edges = options.max_edges.value_or(ell - 1);

  struct Item {
    DecoratedGraph graph;
    std::size_t orbit_size;
  };
  std::vector<Item> items;
  for (const auto& g : enumerate_base_graphs(max_edges))
    for (auto& orbit : enumerate_decorations(g, ell)) items.push_back({std::move(orbit.graph), orbit.orbit_size});

  std::vector<std::optional<StratumClass>> results(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
      results[i] = evaluate(items[i].graph, k, items[i].orbit_size, options.include_dominated);
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::vector<StratumClass> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  std::sort(out.begin(), out.end(), [](const StratumClass& a, const StratumClass& b) {
    const auto& ga = a.graph.base();
    const auto& gb = b.graph.base();
    return std::tuple(ga.edge_count(), ga.vertex_count(), a.code) <
           std::tuple(gb.edge_count(), gb.vertex_count(), b.code);
  });
  return out;
}

bool contracts_to(const DecoratedGraph& d0, const DecoratedGraph& d1) {
  if (d0.ell() != d1.ell()) return false;
  const auto e0 = d0.base().edge_count(), e1 = d1.base().edge_count();
  if (e1 > e0 || d1.base().vertex_count() > d0.base().vertex_count()) return false;
  const auto target = decorated_code(d1);
  const auto r = e0 - e1;
  std::vector<bool> pick(e0, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    EdgeSet f;
    for (EdgeId e = 0; e < e0; ++e)
      if (pick[e]) f.push_back(e);
    const auto c = contract(d0, f);
    if (c.graph.base().vertex_count() == d1.base().vertex_count() && decorated_code(c.graph) == target)
      return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

bool prop_k_symmetry(std::uint32_t ell, std::int64_t k, const ClassifyOptions& options) {
  const auto kr = reduce_mod(k, ell);
  if (kr == 0) throw std::invalid_argument("k must be a unit");
  std::set<std::string> image, direct;
  for (const auto& c : classify_junior(ell, 1, options)) image.insert(decorated_code(c.graph.scaled(kr)));
  for (const auto& c : classify_junior(ell, kr, options)) direct.insert(c.code);
  return image == direct;
}

}  // namespace ghoststrata
