#include "ghoststrata/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghoststrata {

namespace {

void check_graph(const Multigraph& g, std::size_t darts) {
  if (darts != g.dart_count()) throw std::invalid_argument("cochain does not match the graph");
}

void check_modulus(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw std::invalid_argument("moduli differ");
}

}  // namespace

ZeroCochain::ZeroCochain(std::uint32_t modulus, std::vector<std::int64_t> values)
    : modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  values_.reserve(values.size());
  for (auto x : values) values_.push_back(reduce_mod(x, modulus));
}

ZeroCochain ZeroCochain::zero(const Multigraph& g, std::uint32_t modulus) {
  return {modulus, std::vector<std::int64_t>(g.vertex_count(), 0)};
}

bool ZeroCochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](auto x) { return x == 0; });
}

template <Parity P>
DartFunction<P> DartFunction<P>::from_darts(const Multigraph& g, std::uint32_t modulus,
                                            std::span<const std::int64_t> values) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  check_graph(g, values.size());
  std::vector<std::uint32_t> v(values.size());
  for (std::size_t d = 0; d < values.size(); ++d) v[d] = reduce_mod(values[d], modulus);
  for (DartId d = 0; d < v.size(); d += 2) {
    const auto expected =
        P == Parity::odd ? reduce_mod(-static_cast<std::int64_t>(v[d]), modulus) : v[d];
    if (v[conj(d)] != expected)
      throw std::invalid_argument(P == Parity::odd ? "values are not antisymmetric"
                                                   : "values are not even");
  }
  return {modulus, std::move(v)};
}

template <Parity P>
DartFunction<P> DartFunction<P>::from_edges(const Multigraph& g, std::uint32_t modulus,
                                            std::span<const std::int64_t> values) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  if (values.size() != g.edge_count()) throw std::invalid_argument("cochain does not match the graph");
  std::vector<std::uint32_t> v(g.dart_count());
  for (EdgeId e = 0; e < values.size(); ++e) {
    v[forward_dart(e)] = reduce_mod(values[e], modulus);
    v[conj(forward_dart(e))] = P == Parity::odd ? reduce_mod(-values[e], modulus) : v[forward_dart(e)];
  }
  return {modulus, std::move(v)};
}

template <Parity P>
DartFunction<P> DartFunction<P>::zero(const Multigraph& g, std::uint32_t modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  return {modulus, std::vector<std::uint32_t>(g.dart_count(), 0)};
}

template <Parity P>
std::vector<std::uint32_t> DartFunction<P>::edge_values() const {
  std::vector<std::uint32_t> out(edge_count());
  for (EdgeId e = 0; e < out.size(); ++e) out[e] = values_[forward_dart(e)];
  return out;
}

template <Parity P>
bool DartFunction<P>::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](auto x) { return x == 0; });
}

template <Parity P>
EdgeSet DartFunction<P>::support() const {
  EdgeSet out;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (values_[forward_dart(e)] != 0) out.push_back(e);
  return out;
}

template <Parity P>
DartFunction<P> DartFunction<P>::operator-() const {
  auto out = *this;
  for (auto& x : out.values_) x = reduce_mod(-static_cast<std::int64_t>(x), modulus_);
  return out;
}

template <Parity P>
DartFunction<P>& DartFunction<P>::operator+=(const DartFunction& o) {
  check_modulus(modulus_, o.modulus_);
  if (o.values_.size() != values_.size()) throw std::invalid_argument("cochain sizes differ");
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] = reduce_mod(std::int64_t{values_[i]} + o.values_[i], modulus_);
  return *this;
}

template <Parity P>
DartFunction<P>& DartFunction<P>::operator*=(std::uint32_t scalar) {
  for (auto& x : values_) x = reduce_mod(std::int64_t{x} * scalar, modulus_);
  return *this;
}

template class DartFunction<Parity::odd>;
template class DartFunction<Parity::even>;

OneCochain multiply(const EvenFunction& a, const OneCochain& m) {
  check_modulus(a.modulus(), m.modulus());
  if (a.dart_count() != m.dart_count()) throw std::invalid_argument("cochain sizes differ");
  std::vector<std::uint32_t> v(a.dart_count());
  for (DartId d = 0; d < v.size(); ++d) v[d] = reduce_mod(std::int64_t{a[d]} * m[d], a.modulus());
  return {a.modulus(), std::move(v)};
}

OneCochain delta(const Multigraph& g, const ZeroCochain& a) {
  if (a.size() != g.vertex_count()) throw std::invalid_argument("cochain does not match the graph");
  std::vector<std::int64_t> v(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    v[e] = std::int64_t{a[g.ends(e).head]} - std::int64_t{a[g.ends(e).tail]};
  return OneCochain::from_edges(g, a.modulus(), v);
}

ZeroCochain boundary(const Multigraph& g, const OneCochain& b) {
  check_graph(g, b.dart_count());
  std::vector<std::int64_t> v(g.vertex_count(), 0);
  for (DartId d = 0; d < g.dart_count(); ++d) v[g.head(d)] += b[d];
  return {b.modulus(), std::move(v)};
}

Residue pairing(const ZeroCochain& a1, const ZeroCochain& a2) {
  check_modulus(a1.modulus(), a2.modulus());
  if (a1.size() != a2.size()) throw std::invalid_argument("cochain sizes differ");
  std::int64_t s = 0;
  for (std::size_t v = 0; v < a1.size(); ++v) s = (s + std::int64_t{a1[v]} * a2[v]) % a1.modulus();
  return {s, a1.modulus()};
}

Residue pairing(const OneCochain& b1, const OneCochain& b2) {
  check_modulus(b1.modulus(), b2.modulus());
  if (b1.dart_count() != b2.dart_count()) throw std::invalid_argument("cochain sizes differ");
  std::int64_t s = 0;
  for (EdgeId e = 0; e < b1.edge_count(); ++e)
    s = (s + std::int64_t{b1.on_edge(e)} * b2.on_edge(e)) % b1.modulus();
  return {s, b1.modulus()};
}

std::vector<OneCochain> cut_basis(const Multigraph& g, const EdgeSet& tree, std::uint32_t modulus) {
  // Validates the tree as a side effect.
  (void)fundamental_circuits(g, tree);
  std::vector<bool> in_tree(g.edge_count(), false);
  for (EdgeId e : tree) in_tree[e] = true;

  std::vector<OneCochain> basis;
  for (EdgeId cut_edge : tree) {
    // W = side of T - cut_edge containing the head of cut_edge.
    std::vector<bool> in_w(g.vertex_count(), false);
    std::vector<VertexId> stack{g.ends(cut_edge).head};
    in_w[stack.front()] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : g.darts_from(v)) {
        const EdgeId e = edge_of(d);
        if (!in_tree[e] || e == cut_edge || in_w[g.head(d)]) continue;
        in_w[g.head(d)] = true;
        stack.push_back(g.head(d));
      }
    }
    std::vector<std::int64_t> v(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const bool h = in_w[g.ends(e).head], t = in_w[g.ends(e).tail];
      v[e] = (h && !t) ? 1 : (!h && t) ? -1 : 0;
    }
    basis.push_back(OneCochain::from_edges(g, modulus, v));
  }
  return basis;
}

bool in_image_delta(const Multigraph& g, const OneCochain& b) {
  check_graph(g, b.dart_count());
  for (const auto& c : fundamental_circuits(g, spanning_tree(g))) {
    std::int64_t s = 0;
    for (DartId d : c) s += b[d];
    if (s % b.modulus() != 0) return false;
  }
  return true;
}

ZeroCochain solve_delta(const Multigraph& g, const OneCochain& b) {
  check_graph(g, b.dart_count());
  std::vector<std::int64_t> a(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : g.darts_from(v)) {
      const VertexId w = g.head(d);
      if (seen[w]) continue;
      seen[w] = true;
      a[w] = reduce_mod(a[v] + b[d], b.modulus());
      stack.push_back(w);
    }
  }
  ZeroCochain out(b.modulus(), std::move(a));
  if (delta(g, out) != b) throw std::invalid_argument("cochain is not in the image of delta");
  return out;
}

OneCochain solve_boundary(const Multigraph& g, const ZeroCochain& d) {
  if (d.size() != g.vertex_count()) throw std::invalid_argument("cochain does not match the graph");
  std::int64_t total = 0;
  for (auto x : d.values()) total += x;
  if (total % d.modulus() != 0)
    throw std::invalid_argument("values do not sum to zero; no cochain has this boundary");

  // BFS order from vertex 0 over the spanning tree, then fix parent darts leaf to root.
  const auto tree = spanning_tree(g);
  std::vector<bool> in_tree(g.edge_count(), false);
  for (EdgeId e : tree) in_tree[e] = true;
  std::vector<DartId> parent_dart(g.vertex_count(), 0);
  std::vector<VertexId> order{0};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (DartId dart : g.darts_from(order[i])) {
      const VertexId w = g.head(dart);
      if (!in_tree[edge_of(dart)] || seen[w]) continue;
      seen[w] = true;
      parent_dart[w] = dart;
      order.push_back(w);
    }
  }

  std::vector<std::int64_t> dart_values(g.dart_count(), 0);
  std::vector<std::int64_t> incoming(g.vertex_count(), 0);
  for (std::size_t i = order.size(); i-- > 1;) {
    const VertexId v = order[i];
    const DartId p = parent_dart[v];
    const auto value = reduce_mod(std::int64_t{d[v]} - incoming[v], d.modulus());
    dart_values[p] = value;
    dart_values[conj(p)] = -static_cast<std::int64_t>(value);
    incoming[g.tail(p)] -= value;
  }
  return OneCochain::from_darts(g, d.modulus(), dart_values);
}

}  // namespace ghoststrata
