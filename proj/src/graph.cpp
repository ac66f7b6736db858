#include "ghoststrata/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ghoststrata {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

bool connected(std::size_t n, const std::vector<EdgeEnds>& edges) {
  if (n == 0) return false;
  UnionFind uf(n);
  std::size_t components = n;
  for (const auto& e : edges)
    if (uf.unite(e.tail, e.head)) --components;
  return components == 1;
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<EdgeEnds> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.tail >= vertex_count_ || e.head >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
  if (!connected(vertex_count_, edges_)) throw std::invalid_argument("graph is not connected");

  out_offsets_.assign(vertex_count_ + 1, 0);
  for (DartId d = 0; d < dart_count(); ++d) ++out_offsets_[tail(d) + 1];
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  out_darts_.resize(dart_count());
  auto fill = out_offsets_;
  for (DartId d = 0; d < dart_count(); ++d) out_darts_[fill[tail(d)]++] = d;
}

Multigraph Multigraph::vine(std::size_t n) {
  return Multigraph(2, std::vector<EdgeEnds>(n, EdgeEnds{0, 1}));
}

std::span<const DartId> Multigraph::darts_from(VertexId v) const {
  return {out_darts_.data() + out_offsets_.at(v), out_darts_.data() + out_offsets_.at(v + 1)};
}

Contraction contract_edges(const Multigraph& g, std::span<const EdgeId> f) {
  std::vector<bool> contracted(g.edge_count(), false);
  UnionFind uf(g.vertex_count());
  for (EdgeId e : f) {
    if (e >= g.edge_count()) throw std::invalid_argument("unknown edge id " + std::to_string(e));
    contracted[e] = true;
    uf.unite(g.ends(e).tail, g.ends(e).head);
  }

  // Union-find roots are class minima, so numbering roots in increasing order
  // numbers classes by their smallest member.
  std::vector<VertexId> vertex_map(g.vertex_count());
  std::vector<VertexId> root_index(g.vertex_count(), 0);
  VertexId next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) == v) root_index[v] = next++;
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertex_map[v] = root_index[uf.find(v)];

  std::vector<EdgeEnds> edges;
  std::vector<EdgeId> edge_map;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (contracted[e]) continue;
    edges.push_back({vertex_map[g.ends(e).tail], vertex_map[g.ends(e).head]});
    edge_map.push_back(e);
  }
  return {Multigraph(next, std::move(edges)), std::move(vertex_map), std::move(edge_map)};
}

EdgeSet complement(const Multigraph& g, std::span<const EdgeId> edges) {
  std::vector<bool> in(g.edge_count(), false);
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw std::invalid_argument("unknown edge id " + std::to_string(e));
    in[e] = true;
  }
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!in[e]) out.push_back(e);
  return out;
}

Contraction contract_complement(const Multigraph& g, std::span<const EdgeId> keep) {
  const auto drop = complement(g, keep);
  return contract_edges(g, drop);
}

EdgeSet separating_edges(const Multigraph& g) {
  const auto n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> bridge(g.edge_count(), false);
  int time = 0;

  // Skip only the dart we arrived by, so a parallel edge still counts as a back edge.
  std::function<void(VertexId, DartId, bool)> dfs = [&](VertexId v, DartId in, bool root) {
    disc[v] = low[v] = time++;
    for (DartId d : g.darts_from(v)) {
      if (!root && d == conj(in)) continue;
      const VertexId w = g.head(d);
      if (disc[w] < 0) {
        dfs(w, d, false);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridge[edge_of(d)] = true;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(0, 0, true);

  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (bridge[e]) out.push_back(e);
  return out;
}

EdgeSet spanning_tree(const Multigraph& g) {
  UnionFind uf(g.vertex_count());
  EdgeSet tree;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (uf.unite(g.ends(e).tail, g.ends(e).head)) tree.push_back(e);
  return tree;
}

namespace {

void check_spanning_tree(const Multigraph& g, const EdgeSet& tree) {
  if (tree.size() + 1 != g.vertex_count())
    throw std::invalid_argument("edge set has the wrong size for a spanning tree");
  UnionFind uf(g.vertex_count());
  for (EdgeId e : tree) {
    if (e >= g.edge_count()) throw std::invalid_argument("unknown edge id " + std::to_string(e));
    if (!uf.unite(g.ends(e).tail, g.ends(e).head))
      throw std::invalid_argument("edge set contains a cycle");
  }
}

}  // namespace

std::vector<Circuit> fundamental_circuits(const Multigraph& g, const EdgeSet& tree) {
  check_spanning_tree(g, tree);
  std::vector<bool> in_tree(g.edge_count(), false);
  for (EdgeId e : tree) in_tree[e] = true;

  // Root the tree at 0; parent_dart[v] points from the parent to v.
  const auto n = g.vertex_count();
  std::vector<DartId> parent_dart(n, 0);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : g.darts_from(v)) {
      const VertexId w = g.head(d);
      if (!in_tree[edge_of(d)] || seen[w]) continue;
      seen[w] = true;
      parent_dart[w] = d;
      depth[w] = depth[v] + 1;
      stack.push_back(w);
    }
  }

  std::vector<Circuit> circuits;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    const DartId d = forward_dart(e);
    Circuit c{d};
    // Walk from head(d) back to tail(d): climb both ends to their common ancestor.
    VertexId a = g.head(d);
    VertexId b = g.tail(d);
    std::vector<DartId> up_from_head, down_to_tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        up_from_head.push_back(conj(parent_dart[a]));
        a = g.tail(parent_dart[a]);
      } else {
        down_to_tail.push_back(parent_dart[b]);
        b = g.tail(parent_dart[b]);
      }
    }
    c.insert(c.end(), up_from_head.begin(), up_from_head.end());
    c.insert(c.end(), down_to_tail.rbegin(), down_to_tail.rend());
    circuits.push_back(std::move(c));
  }
  return circuits;
}

std::size_t betti1(const Multigraph& g) { return g.edge_count() + 1 - g.vertex_count(); }

bool is_tree_like(const Multigraph& g) {
  return separating_edges(g).size() + 1 == g.vertex_count();
}

Contraction strip_loops_and_bridges(const Multigraph& g) {
  EdgeSet drop = separating_edges(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) drop.push_back(e);
  std::sort(drop.begin(), drop.end());
  return contract_edges(g, drop);
}

}  // namespace ghoststrata
