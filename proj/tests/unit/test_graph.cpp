#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ghoststrata/canonical.hpp"
#include "ghoststrata/enumerate.hpp"
#include "ghoststrata/errors.hpp"
#include "ghoststrata/graph.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ghoststrata;
using testing::make_graph;

namespace {

const auto negate5 = [](std::int64_t x) { return (5 - x) % 5; };

bool separating_in(const Multigraph& g, EdgeId e) {
  auto s = separating_edges(g);
  return std::binary_search(s.begin(), s.end(), e);
}

std::vector<Multigraph> small_corpus() {
  std::vector<Multigraph> out;
  for (const auto& g : oracle::all_graphs(4, true, true, 1)) out.push_back(oracle::to_library(g));
  return out;
}

}  // namespace

TEST_CASE("multigraph construction") {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.dart_count() == 6);
  CHECK(g.is_loop(2));
  CHECK(g.head(forward_dart(0)) == 1);
  CHECK(g.tail(conj(forward_dart(0))) == 1);
  CHECK(g.degree(2) == 3);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("contract_edges") {
  SUBCASE("triangle, one edge") {
    auto c = contract_edges(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}), std::vector<EdgeId>{0});
    CHECK(c.graph.vertex_count() == 2);
    CHECK(c.graph.edge_count() == 2);
    CHECK(separating_edges(c.graph).empty());
    CHECK(c.edge_map == std::vector<EdgeId>{1, 2});
  }
  SUBCASE("one of two parallel edges leaves a loop") {
    auto c = contract_edges(Multigraph::vine(2), std::vector<EdgeId>{1});
    CHECK(c.graph.vertex_count() == 1);
    REQUIRE(c.graph.edge_count() == 1);
    CHECK(c.graph.is_loop(0));
  }
  SUBCASE("empty set is the identity") {
    auto g = make_graph(3, {{0, 1}, {1, 2}, {1, 1}});
    auto c = contract_edges(g, {});
    CHECK(c.graph == g);
    CHECK(c.vertex_map == std::vector<VertexId>{0, 1, 2});
    CHECK(c.edge_map == std::vector<EdgeId>{0, 1, 2});
  }
  SUBCASE("unknown edge") {
    CHECK_THROWS_AS(contract_edges(Multigraph::vine(2), std::vector<EdgeId>{5}), std::invalid_argument);
  }
}

TEST_CASE("separating_edges") {
  CHECK(separating_edges(make_graph(3, {{0, 1}, {1, 2}})) == EdgeSet{0, 1});
  for (std::size_t n = 2; n <= 5; ++n) CHECK(separating_edges(Multigraph::vine(n)).empty());
  auto barbell = make_graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}});
  CHECK(separating_edges(barbell) == EdgeSet{2});
  CHECK(separating_edges(make_graph(1, {{0, 0}})).empty());
}

TEST_CASE("separating_edges agrees with edge removal") {
  for (const auto& g : small_corpus()) {
    auto br = oracle::bridges(oracle::from_library(g));
    for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(separating_in(g, e) == br[e]);
  }
}

TEST_CASE("spanning_tree") {
  auto path = make_graph(3, {{0, 1}, {1, 2}, {2, 2}});
  CHECK(spanning_tree(path) == EdgeSet{0, 1});
  CHECK(spanning_tree(Multigraph::vine(2)) == EdgeSet{0});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto g = testing::random_graph(rng, 1 + rng() % 7, rng() % 6, true);
    auto t = spanning_tree(g);
    CHECK(t.size() == g.vertex_count() - 1);
    auto c = contract_edges(g, t);
    CHECK(c.graph.vertex_count() == 1);
    auto sep = separating_edges(g);
    CHECK(std::includes(t.begin(), t.end(), sep.begin(), sep.end()));
  }
}

TEST_CASE("fundamental_circuits") {
  auto v2 = Multigraph::vine(2);
  auto c = fundamental_circuits(v2, EdgeSet{0});
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Circuit{forward_dart(1), conj(forward_dart(0))});

  auto loop = make_graph(1, {{0, 0}});
  auto lc = fundamental_circuits(loop, EdgeSet{});
  REQUIRE(lc.size() == 1);
  CHECK(lc[0] == Circuit{forward_dart(0)});

  auto tri = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  for (EdgeSet t : {EdgeSet{0, 1}, EdgeSet{0, 2}, EdgeSet{1, 2}}) {
    auto tc = fundamental_circuits(tri, t);
    REQUIRE(tc.size() == 1);
    CHECK(tc[0].size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(tri.head(tc[0][i]) == tri.tail(tc[0][(i + 1) % 3]));
  }
  CHECK_THROWS_AS(fundamental_circuits(tri, EdgeSet{0}), std::invalid_argument);
}

TEST_CASE("betti1 and tree-likeness") {
  CHECK(betti1(make_graph(3, {{0, 1}, {1, 2}})) == 0);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(betti1(Multigraph::vine(n)) == n - 1);
  CHECK(betti1(Multigraph::vine(3)) == 2);

  CHECK(is_tree_like(make_graph(1, {{0, 0}})));
  CHECK_FALSE(is_tree_like(Multigraph::vine(2)));
  CHECK(is_tree_like(make_graph(3, {{0, 1}, {1, 2}, {2, 2}})));
  for (const auto& g : small_corpus()) {
    CHECK(is_tree_like(g) == oracle::tree_like(oracle::from_library(g)));
    CHECK(is_tree_like(g) == (separating_edges(g).size() + 1 == g.vertex_count()));
  }
}

TEST_CASE("contraction and the first Betti number") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto g = testing::random_graph(rng, 2 + rng() % 6, rng() % 6, true);
    EdgeId e = rng() % g.edge_count();
    auto c = contract_edges(g, std::vector<EdgeId>{e});
    if (!g.is_loop(e)) CHECK(betti1(c.graph) == betti1(g));
    else CHECK(betti1(c.graph) + 1 == betti1(g));
    for (EdgeId ne = 0; ne < c.graph.edge_count(); ++ne) {
      const EdgeId old = c.edge_map[ne];
      CHECK(separating_in(c.graph, ne) == separating_in(g, old));
      bool parallel = g.ends(old) == g.ends(e) ||
                      g.ends(old) == EdgeEnds{g.ends(e).head, g.ends(e).tail};
      if (!g.is_loop(e) && parallel) CHECK(c.graph.is_loop(ne));
    }
  }
}

TEST_CASE("strip_loops_and_bridges") {
  auto g = make_graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 3}});
  auto s = strip_loops_and_bridges(g);
  CHECK(s.graph.vertex_count() == 2);
  CHECK(s.graph.edge_count() == 2);
  CHECK(s.edge_map == std::vector<EdgeId>{0, 1});
}

TEST_CASE("canonical_code") {
  auto v2 = Multigraph::vine(2);
  std::vector<std::int64_t> a{1, 2}, b{2, 1}, c{1, 1}, d{1, 4};
  auto code = [&](const std::vector<std::int64_t>& m) {
    return canonical_code(v2, dart_labels_from_edges(v2, m, negate5));
  };
  CHECK(code(a) == code(b));
  CHECK(code(c) != code(d));
  CHECK(code(c) == code(c));
  CHECK(canonical_code(v2) == canonical_code(Multigraph::vine(2)));
  CHECK(canonical_code(Multigraph::vine(2)) != canonical_code(Multigraph::vine(3)));
  std::vector<EdgeEnds> nine;
  for (VertexId v = 1; v < 9; ++v) nine.push_back({0, v});
  CHECK_THROWS_AS(canonical_code(Multigraph(9, nine)), BoundExceeded);
}

TEST_CASE("canonical_code is invariant under relabelling") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    auto g = testing::random_graph(rng, 1 + rng() % 6, rng() % 5, true);
    std::vector<std::int64_t> m(g.edge_count());
    for (auto& x : m) x = static_cast<std::int64_t>(rng() % 5);
    auto dg = testing::decorate(g, 5, m);
    auto other = testing::scramble(dg, rng);
    CHECK(canonical_code(dg.base()) == canonical_code(other.base()));
    auto lab = [](const DecoratedGraph& x) {
      const auto& v = x.m().values();
      return std::vector<std::int64_t>(v.begin(), v.end());
    };
    CHECK(canonical_code(dg.base(), lab(dg)) == canonical_code(other.base(), lab(other)));
  }
}

TEST_CASE("canonical_code separates exactly the isomorphism classes") {
  auto corpus = oracle::all_graphs(4, true, true, 1);
  std::set<std::string> codes;
  for (const auto& g : corpus) codes.insert(canonical_code(oracle::to_library(g)));
  CHECK(codes.size() == corpus.size());
}

TEST_CASE("dart_automorphisms") {
  auto autos = dart_automorphisms(Multigraph::vine(2));
  CHECK(autos.size() == 4);
  CHECK(autos.front() == std::vector<DartId>{0, 1, 2, 3});
  CHECK(dart_automorphisms(make_graph(1, {{0, 0}})).size() == 2);
}

TEST_CASE("enumerate_base_graphs") {
  auto two = enumerate_base_graphs(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == Multigraph::vine(2));

  auto three = enumerate_base_graphs(3);
  REQUIRE(three.size() == 3);
  CHECK(canonical_code(three[0]) == canonical_code(Multigraph::vine(2)));
  CHECK(canonical_code(three[1]) == canonical_code(Multigraph::vine(3)));
  CHECK(three[2].vertex_count() == 3);

  CHECK(enumerate_base_graphs(4).size() == 7);
  CHECK_THROWS_AS(enumerate_base_graphs(kMaxEnumeratedEdges + 1), BoundExceeded);
}

TEST_CASE("graph enumeration matches the brute-force generator") {
  for (int max_edges = 1; max_edges <= 5; ++max_edges) {
    std::set<std::vector<int>> expected, got;
    for (const auto& g : oracle::all_graphs(max_edges, false, false, 2, 1)) expected.insert(oracle::iso_key(g));
    for (const auto& g : enumerate_base_graphs(max_edges)) {
      got.insert(oracle::iso_key(oracle::from_library(g)));
      for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) >= 2);
    }
    CHECK(got == expected);
  }
  GraphFamily all{true, true, 1, 0};
  std::set<std::vector<int>> expected, got;
  for (const auto& g : oracle::all_graphs(4, true, true, 1)) expected.insert(oracle::iso_key(g));
  for (const auto& g : enumerate_graphs(4, all)) got.insert(oracle::iso_key(oracle::from_library(g)));
  CHECK(got == expected);
}
