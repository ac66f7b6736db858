#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ghoststrata/classify.hpp"
#include "ghoststrata/enumerate.hpp"
#include "ghoststrata/errors.hpp"
#include "ghoststrata/ghosts.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ghoststrata;
using testing::decorate;
using testing::make_graph;
using testing::vine;

namespace {

using Notation = std::vector<std::uint32_t>;

std::set<Notation> vines_of(const std::vector<StratumClass>& classes) {
  std::set<Notation> out;
  for (const auto& c : classes)
    if (c.vine) out.insert(*c.vine);
  return out;
}

std::set<std::vector<int>> keys_of(const std::vector<StratumClass>& classes) {
  std::set<std::vector<int>> out;
  for (const auto& c : classes) out.insert(oracle::iso_key(c.graph));
  return out;
}

}  // namespace

TEST_CASE("enumerate_decorations on the 2-vine") {
  auto three = enumerate_decorations(Multigraph::vine(2), 3);
  REQUIRE(three.size() == 2);
  CHECK(vine_notation(three[0].graph) == Notation{1, 1});
  CHECK(vine_notation(three[1].graph) == Notation{1, 2});
  CHECK(three[0].orbit_size == 2);
  CHECK(three[1].orbit_size == 2);

  std::set<Notation> five;
  for (const auto& o : enumerate_decorations(Multigraph::vine(2), 5)) five.insert(*vine_notation(o.graph));
  CHECK(five == std::set<Notation>{{1, 1}, {2, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});

  for (const auto& g : enumerate_base_graphs(4)) CHECK(enumerate_decorations(g, 2).size() == 1);
}

TEST_CASE("enumerate_decorations rejects loops, bridges and large counts") {
  CHECK_THROWS_AS(enumerate_decorations(make_graph(1, {{0, 0}}), 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_decorations(make_graph(2, {{0, 1}}), 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_decorations(Multigraph::vine(6), 11, 1000), BoundExceeded);
}

TEST_CASE("decoration orbits agree with brute-force isomorphism") {
  for (std::uint32_t ell : {2u, 3u, 5u, 7u}) {
    for (const auto& g : enumerate_base_graphs(ell == 7 ? 3 : 4)) {
      auto og = oracle::from_library(g);
      std::map<std::vector<int>, std::size_t> brute;
      oracle::Vec m(g.edge_count(), 1);
      while (true) {
        ++brute[oracle::iso_key(og, &m, static_cast<int>(ell))];
        std::size_t i = m.size();
        while (i > 0 && m[i - 1] == static_cast<int>(ell) - 1) m[--i] = 1;
        if (i == 0) break;
        ++m[i - 1];
      }
      auto orbits = enumerate_decorations(g, ell);
      REQUIRE(orbits.size() == brute.size());
      for (const auto& o : orbits) {
        auto it = brute.find(oracle::iso_key(o.graph));
        REQUIRE(it != brute.end());
        CHECK(o.orbit_size == it->second);
      }
    }
  }
}

TEST_CASE("canonical_decorated") {
  std::mt19937_64 rng(51);
  for (const auto& g : enumerate_base_graphs(4))
    for (const auto& o : enumerate_decorations(g, 5)) {
      auto c = canonical_decorated(o.graph);
      CHECK(c.code == decorated_code(o.graph));
      CHECK(decorated_code(c.graph) == c.code);
      CHECK(canonical_decorated(c.graph).graph == c.graph);
      auto other = testing::scramble(o.graph, rng);
      CHECK(canonical_decorated(other).graph == c.graph);
      CHECK(oracle::iso_key(c.graph) == oracle::iso_key(o.graph));
    }
}

TEST_CASE("reduce_step") {
  // Vertex 1 joined once to 0 and twice to 2; 0 and 2 doubly joined.
  auto config = decorate(make_graph(3, {{1, 0}, {1, 2}, {1, 2}, {0, 2}, {0, 2}}), 5, {1, 1, 3, 1, 3});
  auto r = reduce_step(config);
  REQUIRE(r.has_value());
  const auto& g = config.base();
  auto joins = [&](EdgeId e, VertexId a, VertexId b) {
    return g.ends(e) == EdgeEnds{a, b} || g.ends(e) == EdgeEnds{b, a};
  };
  CHECK(joins(r->e, r->v1, r->v2));
  CHECK(joins(r->e_prime, r->v1, r->v3));
  std::size_t to_v2 = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) to_v2 += joins(e, r->v1, r->v2);
  CHECK(to_v2 == 1);
  CHECK(std::find(r->tree.begin(), r->tree.end(), r->e) == r->tree.end());
  CHECK(r->gamma1.graph.base().vertex_count() == 2);
  CHECK(r->gamma2.graph.base().vertex_count() == 2);
  std::vector<EdgeSet> parts{r->gamma1.edge_map, r->gamma2.edge_map};
  CHECK(cover_rank_condition(config, parts));

  for (std::size_t n = 2; n <= 5; ++n) CHECK_FALSE(reduce_step(vine(7, std::vector<std::int64_t>(n, 1))).has_value());
  auto c7 = decorate(make_graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}}), 7, {1, 1, 3, 3, 2, 2});
  CHECK_FALSE(reduce_step(c7).has_value());
}

TEST_CASE("classify_junior at small levels") {
  CHECK(classify_junior(2, 0).empty());
  CHECK(classify_junior(2, 1).empty());

  auto three = classify_junior(3, 1);
  REQUIRE(three.size() == 1);
  CHECK(three[0].vine == Notation{1, 1});
  CHECK(three[0].age == Rational(2, 3));
  CHECK(three[0].codimension == 2);
  CHECK(three[0].witness.edge_values() == std::vector<std::uint32_t>{1, 1});
  CHECK(three[0].maximal);
  CHECK(classify_junior(3, 0).empty());

  CHECK_THROWS_AS(classify_junior(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(classify_junior(11, 1), std::invalid_argument);
  CHECK_THROWS_AS(classify_junior(13, 1), std::invalid_argument);
}

TEST_CASE("classify_junior at level 5") {
  auto one = classify_junior(5, 1);
  auto listed = std::set<Notation>{{1, 1}, {2, 2}, {1, 2}, {1, 3}, {1, 1, 1}, {1, 1, 3}, {1, 1, 1, 1}};
  auto got = vines_of(one);
  CHECK(got.size() == one.size());
  CHECK(std::includes(got.begin(), got.end(), listed.begin(), listed.end()));
  // The remaining classes are twice a listed one: M and 2M have equal ghost groups.
  CHECK(got == std::set<Notation>{{1, 1}, {2, 2}, {1, 2}, {1, 3}, {1, 1, 1}, {2, 2, 2}, {1, 1, 3},
                                  {1, 2, 2}, {1, 1, 1, 1}, {2, 2, 2, 2}});
  CHECK(vines_of(classify_junior(5, 0)) == std::set<Notation>{{1, 1, 3}, {1, 2, 2}});
  for (const auto& c : classify_junior(5, 0))
    if (c.vine == Notation{1, 1, 3}) CHECK(c.age == Rational(4, 5));
}

TEST_CASE("classification agrees with the exhaustive labelled pipeline") {
  for (int ell : {2, 3, 5}) {
    for (int k = 0; k < ell; ++k) {
      oracle::PipelineOptions o;
      o.ell = ell;
      o.k = k;
      o.max_edges = ell - 1;
      auto brute = oracle::classify(o);
      std::set<std::vector<int>> all, maximal;
      for (const auto& [key, rec] : brute) {
        all.insert(key);
        if (rec.maximal) maximal.insert(key);
      }
      ClassifyOptions with_dominated;
      with_dominated.include_dominated = true;
      auto lib_all = classify_junior(static_cast<std::uint32_t>(ell), k, with_dominated);
      CHECK(keys_of(classify_junior(static_cast<std::uint32_t>(ell), k)) == maximal);
      CHECK(keys_of(lib_all) == all);
      for (const auto& c : lib_all) {
        auto it = brute.find(oracle::iso_key(c.graph));
        REQUIRE(it != brute.end());
        CHECK(c.age == Rational(it->second.age_numerator, ell));
        CHECK(c.maximal == it->second.maximal);
      }
    }
  }
}

TEST_CASE("every class carries a valid witness") {
  ClassifyOptions opts;
  opts.include_dominated = true;
  for (std::uint32_t ell : {3u, 5u}) {
    for (const auto& c : classify_junior(ell, 1, opts)) {
      CHECK(lifts(c.witness, c.graph));
      CHECK(age(c.witness) == c.age);
      CHECK(c.age < 1);
      CHECK(c.age == *stratum_age(c.graph).age);
      CHECK(c.graph.base().edge_count() < ell);
      CHECK(c.codimension == c.graph.base().edge_count());
      CHECK(c.code == decorated_code(c.graph));
      CHECK(c.maximal == is_closure_maximal_junior(c.graph));
      CHECK(std::find(c.admissible_k.begin(), c.admissible_k.end(), 1u) != c.admissible_k.end());
    }
  }
}

TEST_CASE("maximality flags are consistent with contraction") {
  ClassifyOptions opts;
  opts.include_dominated = true;
  auto classes = classify_junior(5, 1, opts);
  for (const auto& a : classes) {
    bool dominated = false;
    for (const auto& b : classes)
      if (a.code != b.code && contracts_to(a.graph, b.graph)) dominated = true;
    CHECK(a.maximal == !dominated);
  }
}

TEST_CASE("graphs with the reducible configuration are dominated") {
  ClassifyOptions opts;
  opts.include_dominated = true;
  auto classes = classify_junior(5, 1, opts);
  std::size_t seen = 0;
  for (const auto& a : classes) {
    if (!reduce_step(a.graph)) continue;
    ++seen;
    CHECK_FALSE(a.maximal);
    bool below = false;
    for (const auto& b : classes)
      if (b.graph.base().vertex_count() < a.graph.base().vertex_count() && contracts_to(a.graph, b.graph))
        below = true;
    CHECK(below);
  }
  CHECK(seen > 0);
}

TEST_CASE("contracts_to") {
  auto d = vine(5, {1, 1, 3});
  CHECK(contracts_to(d, d));
  CHECK_FALSE(contracts_to(vine(5, {1, 1, 1}), vine(5, {1, 1})));
  CHECK_FALSE(contracts_to(vine(5, {1, 1}), vine(5, {1, 1, 1})));
  auto tri = decorate(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}), 5, {1, 1, 1});
  auto two = decorate(make_graph(2, {{0, 1}, {1, 0}}), 5, {1, 1});
  CHECK(contracts_to(tri, two));
}

TEST_CASE("vine_notation") {
  CHECK(vine_notation(vine(5, {4, 4})) == Notation{1, 1});
  CHECK(vine_notation(vine(5, {3, 1})) == Notation{1, 3});
  CHECK(vine_notation(vine(5, {4, 2})) == Notation{1, 3});
  CHECK_FALSE(vine_notation(decorate(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}), 5, {1, 1, 1})).has_value());
}

TEST_CASE("multiplying M by a unit permutes the classifications") {
  CHECK(prop_k_symmetry(5, 2));
  CHECK(prop_k_symmetry(3, 2));
  CHECK(prop_k_symmetry(5, 1));
  CHECK_THROWS_AS(prop_k_symmetry(5, 0), std::invalid_argument);
}

TEST_CASE("classification does not depend on the thread count") {
  ClassifyOptions one, four;
  four.threads = 4;
  auto a = classify_junior(5, 1, one);
  auto b = classify_junior(5, 1, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].code == b[i].code);
    CHECK(a[i].witness == b[i].witness);
  }
}
