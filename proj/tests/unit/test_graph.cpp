#include <gtest/gtest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "xbmat/graph.hpp"

using namespace xbmat;

namespace {
std::vector<Edge> edges_of(const Multigraph& g) { return {g.edges().begin(), g.edges().end()}; }
}  // namespace

TEST(Graph, EdgesAreNormalizedAndSorted) {
  const Multigraph g(3, {{3, 1}, {2, 1}, {2, 1}});
  const std::vector<Edge> want = {{1, 2}, {1, 2}, {1, 3}};
  EXPECT_EQ(edges_of(g), want);
  EXPECT_EQ(g.multiplicity(2, 1), 2);
  EXPECT_EQ(g.multiplicity(2, 3), 0);
  EXPECT_EQ(g.degrees(), (std::vector<int>{3, 2, 1}));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Multigraph(0), std::invalid_argument);
  EXPECT_THROW(Multigraph(2, {{1, 3}}), std::invalid_argument);
  EXPECT_THROW(Multigraph(2, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(RootedGraph(path(3), 1, 4), std::invalid_argument);
  EXPECT_THROW(path(0), std::invalid_argument);
  EXPECT_THROW(cycle(1), std::invalid_argument);
}

TEST(Graph, Builders) {
  EXPECT_EQ(path(1).edge_count(), 0);
  EXPECT_EQ(path(4), Multigraph(4, {{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(cycle(3), complete(3));
  EXPECT_EQ(cycle(2), Multigraph(2, {{1, 2}, {1, 2}}));
  EXPECT_EQ(complete(4).edge_count(), 6);
  EXPECT_EQ(star(4), Multigraph(4, {{1, 2}, {1, 3}, {1, 4}}));
}

TEST(Graph, GlueSum) {
  const Multigraph g = glue_sum(complete(3), path(2));
  EXPECT_EQ(g, Multigraph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}));
  EXPECT_EQ(glue_sum(path(3), path(2)), path(4));
  EXPECT_EQ(glue_sum(path(1), complete(3)), complete(3));
}

TEST(Graph, RootedGlue) {
  // (S_3, 1, 1) + (P_2, 1, 2): a third leaf on the star center
  const RootedGraph g = rooted_glue(RootedGraph(star(3), 1, 1), RootedGraph(path(2), 1, 2));
  EXPECT_EQ(g.graph, star(4));
  EXPECT_EQ(g.head, 1);
  EXPECT_EQ(g.tail, 4);
  const RootedGraph std_glue = rooted_glue(RootedGraph::standard(complete(3)), RootedGraph::standard(path(2)));
  EXPECT_EQ(std_glue, RootedGraph::standard(glue_sum(complete(3), path(2))));
}

TEST(Graph, Circle) {
  EXPECT_EQ(circle(path(2)), Multigraph(1, {{1, 1}}));
  EXPECT_EQ(circle(path(3)), cycle(2));
  EXPECT_EQ(circle(path(4)), complete(3));
  EXPECT_EQ(circle(complete(3)), Multigraph(2, {{1, 1}, {1, 2}, {1, 2}}));
  EXPECT_THROW(circle(path(1)), std::invalid_argument);
}

TEST(Graph, Reverse) {
  EXPECT_EQ(reverse(path(5)), path(5));
  EXPECT_EQ(reverse(complete(4)), complete(4));
  const Multigraph g = glue_sum(path(2), complete(3));
  EXPECT_NE(reverse(g), g);
  EXPECT_EQ(reverse(g), glue_sum(complete(3), path(2)));
  for (const auto& [name, h] : testkit::corpus()) EXPECT_EQ(reverse(reverse(h)), h) << name;
}

TEST(Graph, DisjointUnion) {
  const Multigraph g = disjoint_union(path(2), complete(3));
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(components(g, (EdgeMask{1} << g.edge_count()) - 1).size(), 2u);
}

TEST(Graph, Components) {
  const Multigraph g = path(4);
  const auto comps = components(g, 0b101);  // edges 1-2 and 3-4
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].vertices, (std::vector<int>{1, 2}));
  EXPECT_EQ(comps[1].vertices, (std::vector<int>{3, 4}));
  EXPECT_EQ(comps[0].edge_count, 1);
  EXPECT_EQ(components(g, 0).size(), 4u);
  const Multigraph doubled(2, {{1, 2}, {1, 2}});
  EXPECT_EQ(components(doubled, 0b10).size(), 1u);
  EXPECT_EQ(components(doubled, 0b11).front().edge_count, 2);
}

TEST(Graph, EdgeListRoundTrip) {
  for (const auto& [name, g] : testkit::corpus()) {
    EXPECT_EQ(Multigraph::from_edge_list(g.to_edge_list()), g) << name;
  }
  EXPECT_EQ(Multigraph(3, {{1, 1}, {1, 2}}).to_edge_list(), "n 3\n1 1\n1 2\n");
}

TEST(Graph, EdgeListParsing) {
  const Multigraph g = Multigraph::from_edge_list("# comment\nn 3\n\n2 1 # trailing\n3 3\n");
  EXPECT_EQ(g, Multigraph(3, {{1, 2}, {3, 3}}));
  EXPECT_EQ(Multigraph::from_edge_list("n 1\n"), path(1));
  auto message = [](const std::string& text) {
    try {
      Multigraph::from_edge_list(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("n 2\n1 3\n"), "edge list line 2: vertex out of range 1..2");
  EXPECT_EQ(message("1 2\n"), "edge list line 1: expected header 'n <N>' with N >= 1");
  EXPECT_EQ(message("n 2\n1\n"), "edge list line 2: expected two vertices");
  EXPECT_EQ(message("n 2\n1 2 3\n"), "edge list line 2: unexpected trailing text");
  EXPECT_EQ(message("n 2\nx 2\n"), "edge list line 2: bad vertex 'x'");
  EXPECT_EQ(message(""), "edge list is missing the 'n <N>' header");
}

TEST(Graph, Isomorphism) {
  EXPECT_TRUE(isomorphic(star(4), Multigraph(4, {{4, 1}, {4, 2}, {4, 3}})));
  EXPECT_FALSE(isomorphic(star(4), path(4)));
  EXPECT_TRUE(isomorphic(glue_sum(path(2), complete(3)), glue_sum(complete(3), path(2))));
  EXPECT_FALSE(isomorphic(cycle(2), path(2)));
  EXPECT_THROW(canonical_form(path(9)), std::out_of_range);
}

TEST(Corpus, ConnectedClassCounts) {
  const std::size_t want[] = {0, 1, 1, 2, 6, 21};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(testkit::connected_simple_graphs(n).size(), want[n]) << n;
  EXPECT_EQ(testkit::corpus().size(), 35u);
}

TEST(Corpus, RandomMultigraphHasDoubledEdge) {
  const Multigraph g = testkit::random_multigraph();
  EXPECT_EQ(g.vertex_count(), 5);
  bool doubled = false;
  for (const auto& e : g.edges()) doubled = doubled || g.multiplicity(e.u, e.v) >= 2;
  EXPECT_TRUE(doubled);
  EXPECT_EQ(components(g, (EdgeMask{1} << g.edge_count()) - 1).size(), 1u);
  EXPECT_EQ(testkit::random_multigraph(), g);
}
