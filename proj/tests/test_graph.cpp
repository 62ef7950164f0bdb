#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sqcm/errors.hpp"
#include "sqcm/graph.hpp"
#include "sqcm/graph_io.hpp"
#include "test_util.hpp"

using namespace sqcm;
using namespace sqcm::testutil;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

}  // namespace

TEST_CASE("neighborhood") {
  const Graph g = stars_graph();
  CHECK(neighborhood(g, 0) == VertexSet{1, 2, 3, 4});  // N(x) = {y,z,w,u}
  const Graph c5 = cycle(5);
  CHECK(neighborhood(c5, 0) == VertexSet{1, 4});
  // isolated vertex
  const Graph lonely = deletion(g, VertexSet{0, 1, 2, 4});  // leaves w-v plus nothing for u
  const Graph iso = deletion(g, closed_neighborhood(g, VertexSet{0}));
  for (int v : iso.vertices()) CHECK(neighborhood(iso, v).empty());
  CHECK_THROWS_AS((void)neighborhood(c5, 9), input_error);
  (void)lonely;
}

TEST_CASE("closed neighborhood") {
  const Graph g = stars_graph();
  // W = {u,z} -> {x,y,z,u}
  CHECK(closed_neighborhood(g, VertexSet{4, 2}) == VertexSet{0, 1, 2, 4});
  CHECK(closed_neighborhood(g, VertexSet{}) == VertexSet{});
  CHECK(closed_neighborhood(g, g.vertices()) == g.vertices());
  CHECK_THROWS_AS((void)closed_neighborhood(cycle(3), VertexSet{5}), input_error);
}

TEST_CASE("induced subgraph and deletion") {
  const Graph g = stars_graph();
  const Graph center = induced_subgraph(g, VertexSet{0, 1, 2, 3});  // x,y,z,w
  CHECK(center.edge_count() == 4);
  CHECK(has_triangle(center));
  const Graph star = induced_subgraph(g, VertexSet{0, 1, 3, 4});  // x,y,w,u
  CHECK(star.edge_count() == 3);
  CHECK(star.degree(0) == 3);
  CHECK_FALSE(has_triangle(star));
  CHECK(same_graph(induced_subgraph(g, VertexSet{}), deletion(g, g.vertices())));

  // P3 minus N[x] leaves the single isolated vertex w
  const Graph p3 = graph_from_spec("p3");
  const Graph rest = deletion(p3, closed_neighborhood(p3, VertexSet{0}));  // N[x]={x,y,z}
  CHECK(rest.vertex_count() == 1);
  CHECK(rest.vertices().contains(3));
  CHECK(rest.edge_count() == 0);
  CHECK(same_graph(deletion(p3, VertexSet{}), p3));

  // stars graph minus N[x] leaves the single isolated vertex v
  const Graph rest2 = deletion(g, closed_neighborhood(g, VertexSet{0}));
  CHECK(rest2.vertex_count() == 1);
  CHECK(rest2.vertices().contains(5));

  // composition law, exhaustively over subsets of the fixture
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    const VertexSet u = VertexSet::from_bits(bits);
    CHECK(same_graph(induced_subgraph(g, u), deletion(g, g.vertices() - u)));
  }
}

TEST_CASE("maximal independent sets: fixture") {
  const Graph g = stars_graph();
  const auto mis = maximal_independent_sets(g);
  // {x,v}, {y,u,v}, {y,u,w}, {z,u,v}, {z,u,w}
  const std::vector<VertexSet> expected{
      {0, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}};
  auto sorted = expected;
  std::sort(sorted.begin(), sorted.end(), seq_less);
  CHECK(mis == sorted);
  CHECK(mis == mis_oracle(g));

  Graph edgeless(std::vector<std::string>{"a", "b"});
  CHECK(maximal_independent_sets(edgeless) == std::vector<VertexSet>{VertexSet{0, 1}});

  const auto c5 = maximal_independent_sets(cycle(5));
  CHECK(c5.size() == 5);
  for (const VertexSet& s : c5) CHECK(s.count() == 2);
  CHECK(c5 == mis_oracle(cycle(5)));

  CHECK(maximal_independent_sets(Graph{}) == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("maximal independent sets vs oracle, all graphs up to 7 vertices") {
  for (int n = 0; n <= 7; ++n)
    for_each_labeled_graph(n, [](const Graph& g) {
      REQUIRE(maximal_independent_sets(g) == mis_oracle(g));
    });
}

TEST_CASE("independence number") {
  CHECK(independence_number(cycle(5)) == 2);
  Graph edgeless = Graph::with_default_names(4);
  CHECK(independence_number(edgeless) == 4);
  for (int n = 1; n <= 3; ++n) {
    const Graph k = complete_bipartite(n, n);
    int best = 0;
    for (const VertexSet& s : mis_oracle(k)) best = std::max(best, s.count());
    CHECK(independence_number(k) == n);
    CHECK(best == n);
  }
  CHECK(independence_number(Graph{}) == 0);
}

TEST_CASE("unmixed graphs") {
  CHECK(is_unmixed(cycle(7)));
  CHECK_FALSE(is_unmixed(cycle(8)));
  CHECK(is_unmixed(single_edge()));
  for (int t = 3; t <= 12; ++t)
    CHECK(is_unmixed(cycle(t)) == (t == 3 || t == 4 || t == 5 || t == 7));
}

TEST_CASE("structural predicates") {
  const StructuralPredicates w = structural_predicates(whisker(triangle_graph()));
  CHECK(w.is_whiskered);
  CHECK(w.has_triangle);
  CHECK(w.is_connected);
  CHECK_FALSE(w.is_tree);

  const StructuralPredicates c5 = structural_predicates(cycle(5));
  CHECK_FALSE(c5.is_whiskered);
  CHECK_FALSE(c5.has_triangle);
  CHECK_FALSE(c5.is_bipartite);
  CHECK_FALSE(c5.is_chordal);
  CHECK(c5.is_connected);

  const StructuralPredicates p3 = structural_predicates(graph_from_spec("p3"));
  CHECK(p3.is_tree);
  CHECK(p3.is_chordal);
  CHECK(p3.is_bipartite);
  CHECK(p3.is_whiskered);  // P3 = whisker of a single edge

  CHECK(is_whiskered(single_edge()));
  CHECK_FALSE(is_whiskered(Graph::with_default_names(3)));
  CHECK(is_chordal(cycle(3)));
  CHECK_FALSE(is_chordal(cycle(4)));
  CHECK(is_bipartite(cycle(6)));
  CHECK(is_tree(Graph::with_default_names(1)));
  CHECK(is_cycle_graph(cycle(4)));
  CHECK_FALSE(is_cycle_graph(graph_from_spec("p3")));
}

TEST_CASE("leaf path witness") {
  const Graph p3 = graph_from_spec("p3");
  const auto w = leaf_path3_witness(p3);
  REQUIRE(w.has_value());
  CHECK(p3.name(w->z) == "z");
  CHECK(p3.name(w->x) == "x");
  CHECK(p3.name(w->y) == "y");
  CHECK(p3.name(w->w) == "w");

  CHECK_FALSE(leaf_path3_witness(cycle(5)).has_value());
  CHECK(leaf_path3_witness(whisker(single_edge())).has_value());
  CHECK_FALSE(leaf_path3_witness(complete_bipartite(1, 3)).has_value());
}

TEST_CASE("constructors") {
  CHECK(canonical_graph6(double_star(1, 1)) == canonical_graph6(path_graph(3)));
  CHECK(cycle(5).vertex_count() == 5);
  CHECK(cycle(5).edge_count() == 5);
  const Graph wt = whisker(triangle_graph());
  CHECK(wt.vertex_count() == 6);
  CHECK(wt.edge_count() == 6);
  const Graph ds = double_star(2, 3);
  CHECK(ds.vertex_count() == 7);
  CHECK(ds.degree(0) == 4);  // x0: y0, x1..x3
  CHECK(ds.degree(1) == 3);  // y0: x0, y1..y2
  CHECK_THROWS_AS((void)cycle(2), input_error);
  CHECK_THROWS_AS((void)double_star(0, 1), input_error);
  CHECK_THROWS_AS((void)complete_bipartite(0, 3), input_error);
  CHECK_THROWS_AS((void)path_graph(0), input_error);
}

TEST_CASE("graph type invariants") {
  Graph g = Graph::with_default_names(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), input_error);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(Graph(std::vector<std::string>(65, "v")), input_error);
}

TEST_CASE("every maximal independent set of a deletion extends by its center") {
  // For all graphs on <= 6 vertices, every vertex b, every A maximal
  // independent in G - N[b]: A + b is maximal independent in G.
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [](const Graph& g) {
      for (int b : g.vertices()) {
        const Graph rest = deletion(g, closed_neighborhood(g, VertexSet::single(b)));
        for (const VertexSet& a : maximal_independent_sets(rest))
          REQUIRE(is_maximal_independent_set(g, a.with(b)));
      }
    });
}
