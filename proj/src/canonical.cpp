#include "ghoststrata/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ghoststrata/errors.hpp"

namespace ghoststrata {

namespace {

using Column = std::vector<std::int64_t>;

/// Precomputed adjacency: sorted labels of darts u -> v (u != v) and of loops at v.
class LabelledAdjacency {
 public:
  LabelledAdjacency(const Multigraph& g, std::span<const std::int64_t> labels)
      : n_(g.vertex_count()), between_(n_ * n_), loops_(n_) {
    auto label = [&](DartId d) -> std::int64_t { return labels.empty() ? 0 : labels[d]; };
    for (DartId d = 0; d < g.dart_count(); ++d) {
      const auto u = g.tail(d), v = g.head(d);
      if (u != v) {
        between_[u * n_ + v].push_back(label(d));
      } else if ((d & 1u) == 0) {
        loops_[u].push_back(std::min(label(d), label(conj(d))));
      }
    }
    for (auto& l : between_) std::sort(l.begin(), l.end());
    for (auto& l : loops_) std::sort(l.begin(), l.end());
    degree_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) degree_[v] = static_cast<std::int64_t>(g.degree(v));
  }

  // Higher multiplicity sorts first so the search follows adjacency.
  Column column(VertexId v, std::span<const VertexId> placed) const {
    Column c{degree_[v], -static_cast<std::int64_t>(loops_[v].size())};
    c.insert(c.end(), loops_[v].begin(), loops_[v].end());
    for (VertexId u : placed) {
      const auto& l = between_[u * n_ + v];
      c.push_back(-static_cast<std::int64_t>(l.size()));
      c.insert(c.end(), l.begin(), l.end());
    }
    return c;
  }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::int64_t>> between_;
  std::vector<std::vector<std::int64_t>> loops_;
  std::vector<std::int64_t> degree_;
};

class MinimalOrdering {
 public:
  explicit MinimalOrdering(const LabelledAdjacency& adj) : adj_(adj), used_(adj.size(), false) {}

  CanonicalForm run() {
    search(0, true);
    CanonicalForm out;
    out.order = best_order_;
    for (const auto& col : best_) {
      append(out.code, static_cast<std::int64_t>(col.size()));
      for (auto x : col) append(out.code, x);
    }
    return out;
  }

 private:
  static void append(std::string& s, std::int64_t x) {
    auto u = static_cast<std::uint64_t>(x) ^ (std::uint64_t{1} << 63);
    for (int shift = 56; shift >= 0; shift -= 8) s.push_back(static_cast<char>((u >> shift) & 0xff));
  }

  void search(std::size_t depth, bool tight) {
    const auto n = adj_.size();
    if (depth == n) {
      if (!have_best_ || !tight) {
        best_ = current_;
        best_order_ = order_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    std::vector<std::pair<VertexId, Column>> candidates;
    for (VertexId v = 0; v < n; ++v)
      if (!used_[v]) candidates.emplace_back(v, adj_.column(v, order_));
    const Column& least =
        std::min_element(candidates.begin(), candidates.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; })
            ->second;

    bool child_tight = tight;
    if (have_best_ && tight) {
      if (least > best_[depth]) return;
      child_tight = (least == best_[depth]);
    }
    const Column chosen = least;
    for (auto& [v, col] : candidates) {
      if (col != chosen) continue;
      used_[v] = true;
      order_.push_back(v);
      current_.push_back(std::move(col));
      const auto before = version_;
      search(depth + 1, child_tight);
      current_.pop_back();
      order_.pop_back();
      used_[v] = false;
      // A new best found below shares this prefix.
      if (version_ != before) child_tight = true;
    }
  }

  const LabelledAdjacency& adj_;
  std::vector<bool> used_;
  std::vector<VertexId> order_;
  std::vector<Column> current_;
  std::vector<Column> best_;
  std::vector<VertexId> best_order_;
  bool have_best_ = false;
  std::size_t version_ = 0;
};

void check_labels(const Multigraph& g, std::span<const std::int64_t> labels) {
  if (!labels.empty() && labels.size() != g.dart_count())
    throw std::invalid_argument("dart label count does not match the graph");
}

}  // namespace

CanonicalForm canonical_form(const Multigraph& g, std::span<const std::int64_t> dart_labels,
                             std::size_t max_vertices) {
  check_labels(g, dart_labels);
  if (g.vertex_count() > max_vertices)
    throw BoundExceeded("canonical form: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds bound " + std::to_string(max_vertices));
  const LabelledAdjacency adj(g, dart_labels);
  return MinimalOrdering(adj).run();
}

std::string canonical_code(const Multigraph& g, std::span<const std::int64_t> dart_labels,
                           std::size_t max_vertices) {
  return canonical_form(g, dart_labels, max_vertices).code;
}

std::vector<std::int64_t> dart_labels_from_edges(
    const Multigraph& g, std::span<const std::int64_t> edge_labels,
    const std::function<std::int64_t(std::int64_t)>& reverse) {
  if (edge_labels.size() != g.edge_count())
    throw std::invalid_argument("edge label count does not match the graph");
  std::vector<std::int64_t> out(g.dart_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out[forward_dart(e)] = edge_labels[e];
    out[conj(forward_dart(e))] = reverse(edge_labels[e]);
  }
  return out;
}

Relabelling relabel(const Multigraph& g, const std::vector<VertexId>& order,
                    std::span<const std::int64_t> dart_labels) {
  check_labels(g, dart_labels);
  if (order.size() != g.vertex_count()) throw std::invalid_argument("ordering has the wrong size");
  std::vector<VertexId> pos(g.vertex_count());
  for (VertexId i = 0; i < order.size(); ++i) pos.at(order[i]) = i;
  auto label = [&](DartId d) -> std::int64_t { return dart_labels.empty() ? 0 : dart_labels[d]; };

  struct Item {
    VertexId a, b;
    std::int64_t label;
    EdgeId old;
    bool reversed;
  };
  std::vector<Item> items;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = forward_dart(e);
    const VertexId a = pos[g.tail(d)], b = pos[g.head(d)];
    bool rev = a > b || (a == b && label(conj(d)) < label(d));
    const DartId lead = rev ? conj(d) : d;
    items.push_back({std::min(a, b), std::max(a, b), label(lead), e, rev});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return std::tie(x.a, x.b, x.label) < std::tie(y.a, y.b, y.label);
  });

  std::vector<EdgeEnds> edges;
  std::vector<EdgeId> edge_map;
  std::vector<bool> reversed;
  for (const auto& it : items) {
    edges.push_back({it.a, it.b});
    edge_map.push_back(it.old);
    reversed.push_back(it.reversed);
  }
  return {Multigraph(g.vertex_count(), std::move(edges)), std::move(edge_map), std::move(reversed)};
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Multigraph& g) : g_(g), n_(g.vertex_count()) {
    mult_.assign(n_ * n_, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [t, h] = g.ends(e);
      ++mult_[t * n_ + h];
      if (t != h) ++mult_[h * n_ + t];
    }
    // Bundles: for u <= v, darts of edges joining u and v that start at u.
    bundle_.assign(n_ * n_, {});
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const DartId d = forward_dart(e);
      const DartId lead = g.tail(d) <= g.head(d) ? d : conj(d);
      bundle_[g.tail(lead) * n_ + g.head(lead)].push_back(lead);
    }
  }

  std::vector<std::vector<DartId>> run() {
    std::vector<VertexId> image(n_, 0);
    std::vector<bool> taken(n_, false);
    assign(0, image, taken);
    return std::move(result_);
  }

 private:
  void assign(VertexId v, std::vector<VertexId>& image, std::vector<bool>& taken) {
    if (v == n_) {
      expand_edges(image);
      return;
    }
    for (VertexId w = 0; w < n_; ++w) {
      if (taken[w] || g_.degree(v) != g_.degree(w)) continue;
      bool ok = mult_[v * n_ + v] == mult_[w * n_ + w];
      for (VertexId u = 0; ok && u < v; ++u) ok = mult_[u * n_ + v] == mult_[image[u] * n_ + w];
      if (!ok) continue;
      taken[w] = true;
      image[v] = w;
      assign(v + 1, image, taken);
      taken[w] = false;
    }
  }

  // Every bijection between matching bundles, and both orientations of each loop.
  void expand_edges(const std::vector<VertexId>& image) {
    std::vector<std::pair<const std::vector<DartId>*, std::vector<DartId>>> pairs;
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = u; v < n_; ++v) {
        const auto& src = bundle_[u * n_ + v];
        if (src.empty()) continue;
        const VertexId a = image[u], b = image[v];
        std::vector<DartId> dst = bundle_[std::min(a, b) * n_ + std::max(a, b)];
        if (a > b)
          for (auto& d : dst) d = conj(d);
        pairs.emplace_back(&src, std::move(dst));
      }
    }
    std::vector<DartId> perm(g_.dart_count(), 0);
    product(pairs, 0, perm);
  }

  void product(const std::vector<std::pair<const std::vector<DartId>*, std::vector<DartId>>>& pairs,
               std::size_t i, std::vector<DartId>& perm) {
    if (i == pairs.size()) {
      result_.push_back(perm);
      return;
    }
    const auto& src = *pairs[i].first;
    std::vector<DartId> dst = pairs[i].second;
    std::sort(dst.begin(), dst.end());
    const bool loops = g_.tail(src.front()) == g_.head(src.front());
    do {
      if (!loops) {
        for (std::size_t j = 0; j < src.size(); ++j) {
          perm[src[j]] = dst[j];
          perm[conj(src[j])] = conj(dst[j]);
        }
        product(pairs, i + 1, perm);
        continue;
      }
      for (std::uint32_t flips = 0; flips < (1u << src.size()); ++flips) {
        for (std::size_t j = 0; j < src.size(); ++j) {
          const DartId t = (flips >> j & 1u) ? conj(dst[j]) : dst[j];
          perm[src[j]] = t;
          perm[conj(src[j])] = conj(t);
        }
        product(pairs, i + 1, perm);
      }
    } while (std::next_permutation(dst.begin(), dst.end()));
  }

  const Multigraph& g_;
  std::size_t n_;
  std::vector<std::size_t> mult_;
  std::vector<std::vector<DartId>> bundle_;
  std::vector<std::vector<DartId>> result_;
};

}  // namespace

std::vector<std::vector<DartId>> dart_automorphisms(const Multigraph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw BoundExceeded("automorphisms: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds bound " + std::to_string(max_vertices));
  auto autos = AutomorphismSearch(g).run();
  std::vector<DartId> identity(g.dart_count());
  std::iota(identity.begin(), identity.end(), 0u);
  auto it = std::find(autos.begin(), autos.end(), identity);
  if (it != autos.end()) std::iter_swap(autos.begin(), it);
  return autos;
}

}  // namespace ghoststrata
