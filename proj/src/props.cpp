#include "ghoststrata/props.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "ghoststrata/arith.hpp"
#include "ghoststrata/canonical.hpp"
#include "ghoststrata/classify.hpp"
#include "ghoststrata/cochain.hpp"
#include "ghoststrata/decorated.hpp"
#include "ghoststrata/ghosts.hpp"
#include "ghoststrata/graph.hpp"
#include "ghoststrata/graph_io.hpp"
#include "ghoststrata/linalg.hpp"

namespace ghoststrata {
namespace {

using Rng = std::mt19937_64;

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvOffset) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Fails the current case with `what` unless `ok`.
struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct Property {
  std::string scope;
  std::string name;
  std::size_t cases;
  /// Appends a description of the generated case to the string.
  std::function<void(Rng&, std::string&)> run;
};

std::uint64_t below(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[below(rng, xs.size())];
}

/// A random spanning tree plus `extra` random edges.
Multigraph random_graph(Rng& rng, std::size_t n, std::size_t extra, bool loops) {
  std::vector<EdgeEnds> es;
  for (VertexId v = 1; v < n; ++v) es.push_back({static_cast<VertexId>(below(rng, v)), v});
  for (std::size_t i = 0; i < extra; ++i) {
    auto a = static_cast<VertexId>(below(rng, n));
    auto b = static_cast<VertexId>(below(rng, n));
    if (a == b && !loops) continue;
    es.push_back({a, b});
  }
  std::shuffle(es.begin(), es.end(), rng);
  return Multigraph(n, std::move(es));
}

Multigraph small_graph(Rng& rng, std::size_t max_vertices, std::size_t max_extra) {
  return random_graph(rng, 1 + below(rng, max_vertices), below(rng, max_extra + 1), true);
}

std::vector<std::int64_t> random_values(Rng& rng, std::size_t n, std::uint32_t modulus) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = static_cast<std::int64_t>(below(rng, modulus));
  return v;
}

std::string describe(const Multigraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ':';
  for (const auto& e : g.edges()) os << e.tail << '-' << e.head << ',';
  return os.str();
}

template <class T>
std::string describe(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '[';
  for (const auto& x : xs) os << x << ',';
  os << ']';
  return os.str();
}

std::string describe(const DecoratedGraph& d) { return serialize_decorated(d); }

/// Whether g stays connected after deleting edge `skip`.
bool connected_without(const Multigraph& g, EdgeId skip) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::size_t parts = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == skip) continue;
    auto a = find(g.ends(e).tail), b = find(g.ends(e).head);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

DecoratedGraph random_faithful(Rng& rng, std::uint32_t ell, std::size_t max_vertices,
                               std::size_t max_extra) {
  auto g = small_graph(rng, max_vertices, max_extra);
  std::vector<std::int64_t> m(g.edge_count());
  for (auto& x : m) x = 1 + static_cast<std::int64_t>(below(rng, ell - 1));
  return DecoratedGraph::from_edge_values(std::move(g), ell, m);
}

const std::vector<std::uint32_t> kPrimes{2, 3, 5, 7};

std::vector<Property> graph_core_properties() {
  std::vector<Property> ps;
  ps.push_back({"graph_core", "single-edge contraction keeps b1 and separation", 300,
                [](Rng& rng, std::string& desc) {
                  auto g = random_graph(rng, 2 + below(rng, 6), below(rng, 6), true);
                  auto e = static_cast<EdgeId>(below(rng, g.edge_count()));
                  desc += describe(g) + "/" + std::to_string(e);
                  auto c = contract_edges(g, std::vector<EdgeId>{e});
                  expect(betti1(c.graph) + (g.is_loop(e) ? 1 : 0) == betti1(g), "b1 changed");
                  auto before = separating_edges(g), after = separating_edges(c.graph);
                  for (EdgeId ne = 0; ne < c.graph.edge_count(); ++ne) {
                    bool was = std::binary_search(before.begin(), before.end(), c.edge_map[ne]);
                    bool is = std::binary_search(after.begin(), after.end(), ne);
                    expect(was == is, "separation of edge " + std::to_string(ne) + " changed");
                  }
                }});
  ps.push_back({"graph_core", "separating edges are exactly those whose removal disconnects", 300,
                [](Rng& rng, std::string& desc) {
                  auto g = small_graph(rng, 7, 5);
                  desc += describe(g);
                  auto sep = separating_edges(g);
                  for (EdgeId e = 0; e < g.edge_count(); ++e) {
                    bool bridge = !g.is_loop(e) && !connected_without(g, e);
                    expect(std::binary_search(sep.begin(), sep.end(), e) == bridge,
                           "edge " + std::to_string(e));
                  }
                }});
  ps.push_back({"graph_core", "spanning trees and tree-likeness", 300, [](Rng& rng, std::string& desc) {
                  auto g = small_graph(rng, 7, 5);
                  desc += describe(g);
                  auto t = spanning_tree(g);
                  auto sep = separating_edges(g);
                  expect(t.size() + 1 == g.vertex_count(), "tree size");
                  expect(contract_edges(g, t).graph.vertex_count() == 1, "tree does not span");
                  expect(std::includes(t.begin(), t.end(), sep.begin(), sep.end()), "bridge outside tree");
                  expect(fundamental_circuits(g, t).size() == betti1(g), "circuit count");
                  expect(is_tree_like(g) == (sep.size() + 1 == g.vertex_count()), "tree-like count");
                }});
  ps.push_back({"graph_core", "canonical code is invariant under relabelling", 200,
                [](Rng& rng, std::string& desc) {
                  auto g = small_graph(rng, 6, 4);
                  auto labels = random_values(rng, g.edge_count(), 5);
                  std::vector<VertexId> perm(g.vertex_count());
                  std::iota(perm.begin(), perm.end(), 0u);
                  std::shuffle(perm.begin(), perm.end(), rng);
                  std::vector<EdgeId> order(g.edge_count());
                  std::iota(order.begin(), order.end(), 0u);
                  std::shuffle(order.begin(), order.end(), rng);
                  std::vector<EdgeEnds> es;
                  std::vector<std::int64_t> moved;
                  for (EdgeId e : order) {
                    auto [t, h] = g.ends(e);
                    auto x = labels[e];
                    if (below(rng, 2)) {
                      std::swap(t, h);
                      x = (5 - x) % 5;
                    }
                    es.push_back({perm[t], perm[h]});
                    moved.push_back(x);
                  }
                  Multigraph h(g.vertex_count(), std::move(es));
                  desc += describe(g) + describe(labels) + describe(h);
                  auto neg = [](std::int64_t x) { return (5 - x) % 5; };
                  expect(canonical_code(g) == canonical_code(h), "unlabelled code");
                  expect(canonical_code(g, dart_labels_from_edges(g, labels, neg)) ==
                             canonical_code(h, dart_labels_from_edges(h, moved, neg)),
                         "labelled code");
                }});
  return ps;
}

std::vector<Property> cochain_properties() {
  std::vector<Property> ps;
  ps.push_back({"cochain", "delta and boundary are adjoint", 1000, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = 2 + static_cast<std::uint32_t>(below(rng, 12));
                  auto g = small_graph(rng, 7, 5);
                  ZeroCochain a(ell, random_values(rng, g.vertex_count(), ell));
                  auto b = OneCochain::from_edges(g, ell, random_values(rng, g.edge_count(), ell));
                  desc += std::to_string(ell) + describe(g) + describe(a.values()) + describe(b.values());
                  expect(pairing(delta(g, a), b) == pairing(a, boundary(g, b)), "pairings differ");
                }});
  ps.push_back({"cochain", "im delta has ell^(#V-1) elements", 300, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, kPrimes);
                  auto g = small_graph(rng, 7, 5);
                  desc += std::to_string(ell) + describe(g);
                  std::vector<Row> rows;
                  for (const auto& c : cut_basis(g, spanning_tree(g), ell)) rows.push_back(c.edge_values());
                  expect(rows.empty() ? g.vertex_count() == 1
                                      : rank_mod_p(rows, ell) + 1 == g.vertex_count(),
                         "cut rank");
                  ZeroCochain a(ell, random_values(rng, g.vertex_count(), ell));
                  auto b = delta(g, a);
                  expect(in_image_delta(g, b), "delta outside im delta");
                  auto back = solve_delta(g, b);
                  for (VertexId v = 0; v < g.vertex_count(); ++v)
                    expect(back[v] == reduce_mod(static_cast<std::int64_t>(a[v]) - a[0], ell), "solve_delta");
                }});
  ps.push_back({"cochain", "im delta of a contraction is the restriction of im delta", 200,
                [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, kPrimes);
                  auto g = small_graph(rng, 6, 4);
                  EdgeSet f;
                  for (EdgeId e = 0; e < g.edge_count(); ++e)
                    if (below(rng, 3) == 0) f.push_back(e);
                  auto c = contract_edges(g, f);
                  // Half the time a genuine coboundary, otherwise random values.
                  auto vals = below(rng, 2)
                                  ? random_values(rng, c.graph.edge_count(), ell)
                                  : [&] {
                                      auto db = delta(c.graph, ZeroCochain(ell, random_values(rng, c.graph.vertex_count(), ell)));
                                      auto ev = db.edge_values();
                                      return std::vector<std::int64_t>(ev.begin(), ev.end());
                                    }();
                  std::vector<std::int64_t> pulled(g.edge_count(), 0);
                  for (EdgeId e = 0; e < c.graph.edge_count(); ++e) pulled[c.edge_map[e]] = vals[e];
                  desc += std::to_string(ell) + describe(g) + describe(f) + describe(vals);
                  expect(in_image_delta(c.graph, OneCochain::from_edges(c.graph, ell, vals)) ==
                             in_image_delta(g, OneCochain::from_edges(g, ell, pulled)),
                         "membership differs");
                }});
  ps.push_back({"cochain", "solve_boundary inverts boundary", 300, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = 2 + static_cast<std::uint32_t>(below(rng, 12));
                  auto g = small_graph(rng, 7, 5);
                  auto d = random_values(rng, g.vertex_count(), ell);
                  std::int64_t sum = std::accumulate(d.begin(), d.end(), std::int64_t{0});
                  d[0] -= sum;
                  ZeroCochain target(ell, d);
                  desc += std::to_string(ell) + describe(g) + describe(target.values());
                  expect(boundary(g, solve_boundary(g, target)) == target, "boundary differs");
                }});
  return ps;
}

std::vector<Property> decorated_properties() {
  std::vector<Property> ps;
  ps.push_back({"decorated", "serialization round-trips", 300, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = 2 + static_cast<std::uint32_t>(below(rng, 12));
                  auto g = small_graph(rng, 6, 4);
                  auto m = random_values(rng, g.edge_count(), ell);
                  std::optional<std::vector<std::uint32_t>> genus;
                  if (below(rng, 2)) {
                    genus.emplace(g.vertex_count());
                    for (auto& x : *genus) x = static_cast<std::uint32_t>(below(rng, 4));
                  }
                  auto d = DecoratedGraph::from_edge_values(std::move(g), ell, m, genus);
                  auto text = serialize_decorated(d);
                  desc += text;
                  auto back = parse_decorated(text);
                  expect(serialize_decorated(back) == text, "not byte-identical");
                  expect(decorated_code(back) == decorated_code(d), "not isomorphic");
                }});
  ps.push_back({"decorated", "genus labelling solves the multidegree congruence", 300,
                [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = 2 + static_cast<std::uint32_t>(below(rng, 12));
                  auto g = small_graph(rng, 6, 4);
                  auto d = DecoratedGraph::from_edge_values(g, ell, random_values(rng, g.edge_count(), ell));
                  const auto k = static_cast<std::int64_t>(below(rng, ell));
                  desc += describe(d) + std::to_string(k);
                  auto md = multidegree(d);
                  std::int64_t sum = 0;
                  for (auto x : md.values()) sum += x;
                  expect(sum % ell == 0, "multidegree does not sum to zero");
                  auto labels = genus_labeling(d, k);
                  auto adm = admissible_k(d);
                  expect(labels.has_value() ==
                             std::binary_search(adm.begin(), adm.end(), static_cast<std::uint32_t>(k)),
                         "admissible_k disagrees");
                  if (!labels) return;
                  for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    auto gv = static_cast<std::int64_t>((*labels)[v]);
                    auto deg = static_cast<std::int64_t>(g.degree(v));
                    expect(md[v] == reduce_mod(k * (2 * gv - 2 + deg), ell), "congruence at vertex");
                    expect(gv > 0 || deg >= 3, "unstable vertex");
                  }
                }});
  ps.push_back({"decorated", "contraction preserves total genus", 300, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = 2 + static_cast<std::uint32_t>(below(rng, 12));
                  auto g = small_graph(rng, 6, 4);
                  std::vector<std::uint32_t> genus(g.vertex_count());
                  for (auto& x : genus) x = static_cast<std::uint32_t>(below(rng, 4));
                  auto d = DecoratedGraph::from_edge_values(g, ell, random_values(rng, g.edge_count(), ell), genus);
                  EdgeSet f;
                  for (EdgeId e = 0; e < g.edge_count(); ++e)
                    if (below(rng, 2)) f.push_back(e);
                  desc += describe(d) + describe(f);
                  auto c = contract(d, f);
                  expect(total_genus(c.graph) == total_genus(d), "total genus changed");
                  expect(codimension(c.graph) + f.size() == codimension(d), "codimension");
                }});
  ps.push_back({"decorated", "gamma0 keeps exactly the nonzero edges", 300, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = 2 + static_cast<std::uint32_t>(below(rng, 12));
                  auto g = small_graph(rng, 6, 4);
                  auto d = DecoratedGraph::from_edge_values(g, ell, random_values(rng, g.edge_count(), ell));
                  desc += describe(d);
                  auto g0 = gamma0(d);
                  std::size_t nonzero = 0;
                  for (EdgeId e = 0; e < g.edge_count(); ++e) nonzero += d.m().on_edge(e) != 0;
                  expect(g0.graph.base().edge_count() == nonzero, "edge count");
                  expect(g0.graph.is_faithful(), "not faithful");
                  for (EdgeId e = 0; e < nonzero; ++e)
                    expect(g0.graph.m().on_edge(e) == d.m().on_edge(g0.edge_map[e]), "M not restricted");
                }});
  return ps;
}

std::vector<Property> ghosts_properties() {
  std::vector<Property> ps;
  ps.push_back({"ghosts", "ghost groups have order ell^(#V(gamma0)-1)", 200, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, kPrimes);
                  auto d = random_faithful(rng, ell, 6, 4);
                  desc += describe(d);
                  auto group = ghost_group(d);
                  expect(group.rank() + 1 == d.base().vertex_count(), "rank");
                  for (const auto& a : group.generators()) expect(lifts(a, d), "generator does not lift");
                  auto qr = qr_subgroup(d);
                  for (const auto& a : qr.generators()) {
                    expect(group.contains(a), "quasireflection outside the group");
                    expect(a.support().size() == 1, "quasireflection support");
                  }
                  expect((qr.rank() == group.rank()) == is_tree_like(d.base()), "tree-like criterion");
                  expect(generated_by_qr(d) == is_tree_like(d.base()), "generated_by_qr");
                }});
  ps.push_back({"ghosts", "age of an element plus its inverse is its support size", 100,
                [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, kPrimes);
                  auto d = random_faithful(rng, ell, 4, 3);
                  desc += describe(d);
                  for (const auto& a : ghost_group(d).expand()) {
                    auto r = supported_check(a, d);
                    expect(r.age + r.inverse_age == Rational(static_cast<std::int64_t>(a.support().size())),
                           "age sum");
                    if (r.supported)
                      expect(r.edge_count == d.base().edge_count() && a.support().size() == r.edge_count,
                             "supported element misses an edge");
                  }
                }});
  ps.push_back({"ghosts", "stratum age is attained by a lifting witness", 200, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, kPrimes);
                  auto d = random_faithful(rng, ell, 5, 4);
                  desc += describe(d);
                  auto s = stratum_age(d);
                  expect(s.age.has_value() == !is_tree_like(d.base()), "trivial quotient group");
                  if (!s.age) return;
                  expect(s.witness.has_value(), "no witness");
                  expect(lifts(*s.witness, s.graph.graph), "witness does not lift");
                  expect(age(*s.witness) == *s.age, "witness age");
                  expect(*s.age > Rational(0), "zero age");
                  auto raw = stratum_age(d, AgeOptions{false});
                  expect(raw.age.has_value() && *raw.age <= *s.age, "raw minimum above quotient minimum");
                  expect(elements_below(d, *raw.age).empty(), "element below the raw minimum");
                }});
  ps.push_back({"ghosts", "group orders by counting agree with the generators", 300,
                [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, std::vector<std::uint32_t>{2, 3, 4, 5, 6, 7, 8, 9, 12});
                  auto g = small_graph(rng, 5, 3);
                  auto d = DecoratedGraph::from_edge_values(g, ell, random_values(rng, g.edge_count(), ell));
                  desc += describe(d);
                  const auto order = ghost_order(d), qr = qr_order(d);
                  expect(order % qr == 0, "qr order does not divide the group order");
                  expect((order == qr) == generated_by_qr(d), "generated_by_qr disagrees with the orders");
                  if (is_prime(ell)) {
                    expect(order == ghost_group(d).order(), "prime group order");
                    expect(qr == qr_subgroup(d).order(), "prime qr order");
                  }
                }});
  ps.push_back({"ghosts", "vine witness exists iff gamma0 is not tree-like", 200,
                [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, kPrimes);
                  auto d = random_faithful(rng, ell, 6, 4);
                  desc += describe(d);
                  auto w = vine_witness(d);
                  expect(w.has_value() == !is_tree_like(d.base()), "existence");
                  if (!w) return;
                  expect(w->n() >= 2, "fewer than two crossing edges");
                  auto c = contract_complement(d.base(), w->crossing);
                  expect(c.graph.vertex_count() == 2, "not a vine");
                }});
  return ps;
}

std::vector<Property> classify_properties() {
  std::vector<Property> ps;
  ps.push_back({"classify", "every class carries a sound witness", 6, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, std::vector<std::uint32_t>{3, 5});
                  const auto k = static_cast<std::int64_t>(below(rng, ell));
                  desc += std::to_string(ell) + "/" + std::to_string(k);
                  ClassifyOptions opts;
                  opts.include_dominated = true;
                  for (const auto& c : classify_junior(ell, k, opts)) {
                    expect(lifts(c.witness, c.graph), "witness does not lift: " + c.code);
                    expect(age(c.witness) == c.age && c.age < Rational(1), "witness age: " + c.code);
                    expect(c.graph.base().edge_count() < ell, "too many edges: " + c.code);
                    expect(std::binary_search(c.admissible_k.begin(), c.admissible_k.end(),
                                              static_cast<std::uint32_t>(k)),
                           "k not admissible: " + c.code);
                    expect(c.maximal == is_closure_maximal_junior(c.graph), "maximal flag: " + c.code);
                  }
                }});
  ps.push_back({"classify", "multiplying M by a unit permutes the classes", 6, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, std::vector<std::uint32_t>{3, 5});
                  const auto k = 1 + static_cast<std::int64_t>(below(rng, ell - 1));
                  desc += std::to_string(ell) + "/" + std::to_string(k);
                  expect(prop_k_symmetry(ell, k), "images differ");
                }});
  ps.push_back({"classify", "output does not depend on the thread count", 4, [](Rng& rng, std::string& desc) {
                  const std::uint32_t ell = pick(rng, std::vector<std::uint32_t>{3, 5});
                  const auto k = static_cast<std::int64_t>(below(rng, ell));
                  ClassifyOptions many;
                  many.threads = 2 + static_cast<unsigned>(below(rng, 3));
                  desc += std::to_string(ell) + "/" + std::to_string(k) + "/" + std::to_string(many.threads);
                  auto a = classify_junior(ell, k);
                  auto b = classify_junior(ell, k, many);
                  expect(a.size() == b.size(), "sizes differ");
                  for (std::size_t i = 0; i < a.size(); ++i) expect(a[i].code == b[i].code, "order differs");
                }});
  return ps;
}

std::vector<Property> all_properties() {
  std::vector<Property> ps;
  for (auto* make : {graph_core_properties, cochain_properties, decorated_properties, ghosts_properties,
                     classify_properties}) {
    auto more = make();
    ps.insert(ps.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return ps;
}

PropertyResult run_one(const Property& p, std::uint64_t seed) {
  PropertyResult r{p.scope, p.name, 0, 0, kFnvOffset, std::nullopt};
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fnv1a(p.name)), static_cast<std::uint32_t>(fnv1a(p.name) >> 32)};
  Rng rng(seq);
  for (std::size_t i = 0; i < p.cases; ++i) {
    std::string desc;
    std::optional<std::string> failure;
    try {
      p.run(rng, desc);
    } catch (const Failure& f) {
      failure = f.what;
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    r.digest = fnv1a(desc + '\n', r.digest);
    ++r.cases;
    if (failure) {
      ++r.failures;
      if (!r.first_failure) r.first_failure = *failure + " on " + desc;
    }
  }
  return r;
}

}  // namespace

bool PropsReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.failures == 0; });
}

const std::vector<std::string>& property_scopes() {
  static const std::vector<std::string> scopes{"graph_core", "cochain", "decorated", "ghosts", "classify"};
  return scopes;
}

PropsReport run_properties(std::uint64_t seed, const std::optional<std::string>& scope) {
  const auto& scopes = property_scopes();
  if (scope && std::find(scopes.begin(), scopes.end(), *scope) == scopes.end())
    throw std::invalid_argument("unknown scope '" + *scope + "'");
  PropsReport report;
  for (const auto& p : all_properties())
    if (!scope || p.scope == *scope) report.results.push_back(run_one(p, seed));
  return report;
}

}  // namespace ghoststrata
