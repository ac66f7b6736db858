#include "ghoststrata/ghosts.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ghoststrata/errors.hpp"
#include "ghoststrata/linalg.hpp"

namespace ghoststrata {

namespace {

void require_prime(const DecoratedGraph& d) {
  if (!is_prime(d.ell())) throw std::domain_error("level must be prime");
}

void require_faithful(const DecoratedGraph& d) {
  if (!d.is_faithful()) throw std::invalid_argument("decorated graph is not faithful; apply gamma0 first");
}

Row as_row(const EvenFunction& a) {
  const auto v = a.edge_values();
  return {v.begin(), v.end()};
}

EvenFunction from_row(const Multigraph& g, std::uint32_t ell, const std::vector<std::uint32_t>& row) {
  const std::vector<std::int64_t> v(row.begin(), row.end());
  return EvenFunction::from_edges(g, ell, v);
}

void check_order(std::size_t rank, std::uint32_t ell, std::uint64_t bound) {
  const boost::multiprecision::cpp_int order =
      boost::multiprecision::pow(boost::multiprecision::cpp_int(ell), static_cast<unsigned>(rank));
  if (order > bound)
    throw BoundExceeded("ghost group of order " + order.str() + " exceeds bound " + std::to_string(bound));
}

// Enumerates ghost automorphisms a = delta(f) / M through vertex potentials f
// with f(0) = 0, assigning vertices in BFS order so that each edge's age
// contribution is known as soon as its later endpoint is placed.
class PotentialSearch {
 public:
  explicit PotentialSearch(const DecoratedGraph& h)
      : h_(h), ell_(h.ell()), n_(h.base().vertex_count()), f_(n_, 0), links_(n_) {
    const auto& g = h.base();
    std::vector<std::size_t> pos(n_, n_);
    order_.push_back(0);
    pos[0] = 0;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (DartId d : g.darts_from(order_[i]))
        if (pos[g.head(d)] == n_) {
          pos[g.head(d)] = order_.size();
          order_.push_back(g.head(d));
        }
    minv_.resize(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.is_loop(e)) continue;
      minv_[e] = inverse_mod(h.m().on_edge(e), ell_);
      const auto [t, hd] = g.ends(e);
      links_[std::max(pos[t], pos[hd])].push_back(e);
    }
  }

  std::optional<std::pair<std::int64_t, EvenFunction>> minimum() {
    limit_ = std::numeric_limits<std::int64_t>::max();
    keep_all_ = false;
    best_.reset();
    assign(1, 0);
    if (!best_) return std::nullopt;
    return std::make_pair(limit_, *best_);
  }

  std::vector<EvenFunction> below(std::int64_t limit) {
    limit_ = limit;
    keep_all_ = true;
    found_.clear();
    if (limit > 0) assign(1, 0);
    return std::move(found_);
  }

 private:
  std::uint32_t value(EdgeId e) const {
    const auto [t, hd] = h_.base().ends(e);
    const auto diff = reduce_mod(std::int64_t{f_[hd]} - f_[t], ell_);
    return static_cast<std::uint32_t>(std::uint64_t{diff} * minv_[e] % ell_);
  }

  EvenFunction element() const {
    std::vector<std::int64_t> v(h_.base().edge_count(), 0);
    for (EdgeId e = 0; e < v.size(); ++e)
      if (!h_.base().is_loop(e)) v[e] = value(e);
    return EvenFunction::from_edges(h_.base(), ell_, v);
  }

  void assign(std::size_t i, std::int64_t partial) {
    if (i == n_) {
      if (std::all_of(f_.begin(), f_.end(), [](auto x) { return x == 0; })) return;
      if (keep_all_) {
        found_.push_back(element());
      } else {
        limit_ = partial;
        best_ = element();
      }
      return;
    }
    const VertexId v = order_[i];
    for (std::uint32_t x = 0; x < ell_; ++x) {
      f_[v] = x;
      std::int64_t sum = partial;
      for (EdgeId e : links_[i]) sum += value(e);
      if (sum < limit_) assign(i + 1, sum);
    }
    f_[v] = 0;
  }

  const DecoratedGraph& h_;
  std::uint32_t ell_;
  std::size_t n_;
  std::vector<std::uint32_t> f_;
  std::vector<VertexId> order_;
  std::vector<std::vector<EdgeId>> links_;
  std::vector<std::uint32_t> minv_;
  std::int64_t limit_ = 0;
  bool keep_all_ = false;
  std::optional<EvenFunction> best_;
  std::vector<EvenFunction> found_;
};

}  // namespace

bool lifts(const EvenFunction& a, const DecoratedGraph& d) {
  require_faithful(d);
  if (a.modulus() != d.ell() || a.dart_count() != d.base().dart_count())
    throw std::invalid_argument("automorphism does not match the graph");
  return in_image_delta(d.base(), multiply(a, d.m()));
}

GhostGroup::GhostGroup(DecoratedGraph graph, std::vector<EvenFunction> generators)
    : graph_(std::move(graph)), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.modulus() != graph_.ell() || g.dart_count() != graph_.base().dart_count())
      throw std::invalid_argument("generator does not match the graph");
}

boost::multiprecision::cpp_int GhostGroup::order() const {
  return boost::multiprecision::pow(boost::multiprecision::cpp_int(graph_.ell()),
                                    static_cast<unsigned>(rank()));
}

std::vector<EvenFunction> GhostGroup::expand(std::uint64_t bound) const {
  const auto ell = graph_.ell();
  check_order(rank(), ell, bound);
  std::vector<std::uint32_t> coeff(rank(), 0);
  std::vector<EvenFunction> out;
  while (true) {
    auto a = EvenFunction::zero(graph_.base(), ell);
    for (std::size_t i = 0; i < coeff.size(); ++i) a += generators_[i] * coeff[i];
    out.push_back(std::move(a));
    std::size_t i = coeff.size();
    while (i > 0 && coeff[i - 1] == ell - 1) coeff[--i] = 0;
    if (i == 0) break;
    ++coeff[i - 1];
  }
  return out;
}

std::optional<std::vector<std::uint32_t>> GhostGroup::coordinates(const EvenFunction& a) const {
  if (a.modulus() != graph_.ell() || a.dart_count() != graph_.base().dart_count())
    throw std::invalid_argument("automorphism does not match the graph");
  std::vector<Row> rows;
  for (const auto& g : generators_) rows.push_back(as_row(g));
  return solve_in_span(rows, as_row(a), graph_.ell());
}

bool GhostGroup::contains(const EvenFunction& a) const { return coordinates(a).has_value(); }

GhostGroup ghost_group(const DecoratedGraph& d) {
  require_prime(d);
  auto g0 = gamma0(d).graph;
  const auto& g = g0.base();
  std::vector<EvenFunction> gens;
  for (const auto& cut : cut_basis(g, spanning_tree(g), g0.ell())) {
    std::vector<std::int64_t> v(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (cut.on_edge(e) != 0)
        v[e] = std::int64_t{cut.on_edge(e)} * inverse_mod(g0.m().on_edge(e), g0.ell());
    gens.push_back(EvenFunction::from_edges(g, g0.ell(), v));
  }
  return {std::move(g0), std::move(gens)};
}

GhostGroup qr_subgroup(const DecoratedGraph& d) {
  require_prime(d);
  auto g0 = gamma0(d).graph;
  std::vector<EvenFunction> gens;
  for (EdgeId e : separating_edges(g0.base())) {
    std::vector<std::int64_t> v(g0.base().edge_count(), 0);
    v[e] = 1;
    gens.push_back(EvenFunction::from_edges(g0.base(), g0.ell(), v));
  }
  return {std::move(g0), std::move(gens)};
}

boost::multiprecision::cpp_int ghost_order(const DecoratedGraph& d, std::uint64_t bound) {
  const auto g0 = gamma0(d).graph;
  const auto& g = g0.base();
  const std::uint32_t ell = d.ell();
  check_order(g.vertex_count() - 1, ell, bound);
  // a(e) is determined mod r(e) by delta f(e) = a(e) M(e), which is solvable
  // iff gcd(M(e), ell) divides delta f(e).
  std::vector<std::uint32_t> gcds(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) gcds[e] = std::gcd(g0.m().on_edge(e), ell);
  boost::multiprecision::cpp_int total = 0;
  std::vector<std::uint32_t> f(g.vertex_count(), 0);
  for (;;) {
    bool ok = true;
    for (EdgeId e = 0; e < g.edge_count() && ok; ++e) {
      const auto [t, h] = g.ends(e);
      ok = reduce_mod(static_cast<std::int64_t>(f[h]) - f[t], ell) % gcds[e] == 0;
    }
    if (ok) ++total;
    std::size_t i = 1;
    for (; i < f.size() && ++f[i] == ell; ++i) f[i] = 0;
    if (i >= f.size()) break;
  }
  return total;
}

boost::multiprecision::cpp_int qr_order(const DecoratedGraph& d) {
  const auto g0 = gamma0(d).graph;
  boost::multiprecision::cpp_int order = 1;
  for (EdgeId e : separating_edges(g0.base())) order *= stabilizer_order(g0, e);
  return order;
}

Rational age(const EvenFunction& a) {
  std::int64_t sum = 0;
  for (auto x : a.edge_values()) sum += x;
  return {sum, static_cast<std::int64_t>(a.modulus())};
}

DecoratedContraction quotient_graph(const DecoratedGraph& d) {
  const auto g0 = gamma0(d);
  const auto& g = g0.graph.base();
  EdgeSet f;
  for (EdgeId e = 0; e < d.base().edge_count(); ++e)
    if (d.m().on_edge(e) == 0) f.push_back(e);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) f.push_back(g0.edge_map[e]);
  for (EdgeId e : separating_edges(g)) f.push_back(g0.edge_map[e]);
  std::sort(f.begin(), f.end());
  return contract(d, f);
}

StratumAge stratum_age(const DecoratedGraph& d, const AgeOptions& options) {
  require_prime(d);
  auto graph = options.quotient_qr ? quotient_graph(d) : gamma0(d);
  check_order(graph.graph.base().vertex_count() - 1, d.ell(), options.bound);
  StratumAge out{std::nullopt, std::nullopt, std::move(graph)};
  if (auto best = PotentialSearch(out.graph.graph).minimum()) {
    out.age = Rational(best->first, d.ell());
    out.witness = std::move(best->second);
  }
  return out;
}

bool is_junior(const DecoratedGraph& d) {
  const auto s = stratum_age(d);
  return s.age && *s.age < 1;
}

std::vector<EvenFunction> elements_below(const DecoratedGraph& d, Rational limit, std::uint64_t bound) {
  require_prime(d);
  const auto g0 = gamma0(d).graph;
  check_order(g0.base().vertex_count() - 1, d.ell(), bound);
  // age < limit  <=>  sum of reps < limit * ell  <=>  sum < ceil(limit * ell).
  const Rational x = limit * static_cast<std::int64_t>(d.ell());
  if (x <= 0) return {};
  const auto ceil = (x.numerator() + x.denominator() - 1) / x.denominator();
  return PotentialSearch(g0).below(ceil);
}

bool is_closure_maximal_junior(const DecoratedGraph& d) {
  const auto q = quotient_graph(d).graph;
  const auto junior = elements_below(q, 1);
  if (junior.empty()) return false;
  return std::all_of(junior.begin(), junior.end(),
                     [&](const EvenFunction& a) { return a.support().size() == q.base().edge_count(); });
}

bool generated_by_qr(const DecoratedGraph& d) {
  if (is_prime(d.ell())) return is_tree_like(gamma0(d).graph.base());
  for (const auto& [p, e] : factorize(d.ell()))
    if (!is_tree_like(gamma_p(d, p).graph)) return false;
  return true;
}

AlphaBeta alpha_beta(const DecoratedGraph& d, std::uint32_t p) {
  if (!is_prime(p) || d.ell() % p != 0)
    throw std::invalid_argument("p must be a prime dividing the level");
  const auto e_p = valuation(d.ell(), p);
  // chain[j] describes gamma_nu(d, p, j); chain[0] is the point.
  std::vector<std::int64_t> verts(e_p + 1, 1), seps(e_p + 1, 0);
  for (std::uint32_t j = 1; j <= e_p; ++j) {
    const auto g = gamma_nu(d, p, j).graph;
    verts[j] = static_cast<std::int64_t>(g.vertex_count());
    seps[j] = static_cast<std::int64_t>(separating_edges(g).size());
  }
  AlphaBeta out;
  for (std::uint32_t k = 1; k <= e_p; ++k) {
    out.alpha.push_back(verts[e_p - k + 1] - verts[e_p - k]);
    out.beta.push_back(seps[e_p - k + 1] - seps[e_p - k]);
  }
  return out;
}

std::optional<VineWitness> vine_witness(const DecoratedGraph& d) {
  const auto g0 = gamma0(d);
  const auto& g = g0.graph.base();
  const auto bridges = separating_edges(g);
  std::optional<EdgeId> start;
  for (EdgeId e = 0; e < g.edge_count() && !start; ++e)
    if (!g.is_loop(e) && !std::binary_search(bridges.begin(), bridges.end(), e)) start = e;
  if (!start) return std::nullopt;

  // A spanning tree through `start`; removing `start` splits it in two.
  const auto rest = contract_edges(g, std::vector<EdgeId>{*start});
  std::vector<bool> in_tree(g.edge_count(), false);
  for (EdgeId e : spanning_tree(rest.graph)) in_tree[rest.edge_map[e]] = true;

  std::vector<bool> side(g.vertex_count(), false);
  std::vector<VertexId> stack{g.ends(*start).head};
  side[stack.front()] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (DartId dart : g.darts_from(v))
      if (in_tree[edge_of(dart)] && !side[g.head(dart)]) {
        side[g.head(dart)] = true;
        stack.push_back(g.head(dart));
      }
  }

  VineWitness out;
  out.side.resize(d.base().vertex_count());
  for (VertexId v = 0; v < d.base().vertex_count(); ++v) out.side[v] = side[g0.vertex_map[v]];
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (side[g.ends(e).tail] != side[g.ends(e).head]) out.crossing.push_back(g0.edge_map[e]);
  std::sort(out.crossing.begin(), out.crossing.end());
  return out;
}

SupportReport supported_check(const EvenFunction& a, const DecoratedGraph& d) {
  if (a.modulus() != d.ell() || a.dart_count() != d.base().dart_count())
    throw std::invalid_argument("automorphism does not match the graph");
  auto inv = -a;
  const auto a_age = age(a);
  const auto inv_age = age(inv);
  return {a.support().size() == a.edge_count(), std::move(inv), a_age, inv_age, a.edge_count()};
}

namespace {

std::vector<DecoratedContraction> part_contractions(const DecoratedGraph& d,
                                                    const std::vector<EdgeSet>& parts) {
  std::vector<bool> covered(d.base().edge_count(), false);
  std::vector<DecoratedContraction> out;
  for (const auto& part : parts) {
    for (EdgeId e : part) {
      if (e >= covered.size()) throw std::invalid_argument("unknown edge id " + std::to_string(e));
      covered[e] = true;
    }
    out.push_back(contract_complement(d, part));
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw std::invalid_argument("parts do not cover every edge");
  return out;
}

}  // namespace

bool cover_rank_condition(const DecoratedGraph& d, const std::vector<EdgeSet>& parts) {
  std::size_t sum = 0;
  for (const auto& c : part_contractions(d, parts)) sum += c.graph.base().vertex_count() - 1;
  return sum == d.base().vertex_count() - 1;
}

std::optional<CoverDecomposition> cover_decompose(const DecoratedGraph& d,
                                                  const std::vector<EdgeSet>& parts) {
  require_prime(d);
  require_faithful(d);
  CoverDecomposition out;
  out.parts = part_contractions(d, parts);
  std::vector<Row> stacked;
  for (const auto& part : out.parts) {
    out.groups.push_back(ghost_group(part.graph));
    auto& embedded = out.embedded.emplace_back();
    for (const auto& gen : out.groups.back().generators()) {
      std::vector<std::uint32_t> row(d.base().edge_count(), 0);
      for (EdgeId e = 0; e < part.edge_map.size(); ++e) row[part.edge_map[e]] = gen.on_edge(e);
      embedded.push_back(from_row(d.base(), d.ell(), row));
      stacked.push_back(row);
    }
  }
  const auto target = d.base().vertex_count() - 1;
  if (stacked.size() != target || rank_mod_p(stacked, d.ell()) != target) return std::nullopt;
  return out;
}

std::vector<EvenFunction> CoverDecomposition::decompose(const EvenFunction& a) const {
  std::vector<Row> stacked;
  for (const auto& part : embedded)
    for (const auto& gen : part) stacked.push_back(as_row(gen));
  if (parts.empty()) throw std::invalid_argument("empty cover");
  const auto ell = a.modulus();
  auto coeff = solve_in_span(stacked, as_row(a), ell);
  if (!coeff) throw std::invalid_argument("not a ghost automorphism of the covered graph");
  std::vector<EvenFunction> out;
  std::size_t i = 0;
  for (const auto& part : embedded) {
    auto sum = a * 0;
    for (const auto& gen : part) sum += gen * (*coeff)[i++];
    out.push_back(std::move(sum));
  }
  return out;
}

}  // namespace ghoststrata
