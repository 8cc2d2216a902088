#include <doctest.h>

#include "netdeg/graphs.hpp"
#include "netdeg/types.hpp"

using namespace netdeg;

TEST_CASE("graph canonicalizes edges to sorted (min,max) pairs") {
  Graph g(3, {{3, 2}, {2, 1}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(g.adjacent(2, 1));
  CHECK(g.adjacent(3, 2));
  CHECK_FALSE(g.adjacent(1, 3));
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionFailed);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), PreconditionFailed);
  CHECK_THROWS_AS(Graph(3, {{0, 2}}), PreconditionFailed);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), PreconditionFailed);
  CHECK_THROWS_AS(Graph(-1, {}), PreconditionFailed);
}

TEST_CASE("graph degrees and neighbors on a path") {
  Graph p4(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(p4.degrees() == std::vector<int>{1, 2, 2, 1});
  CHECK(p4.degree(2) == 2);
  CHECK(p4.neighbors(2) == std::vector<int>{1, 3});
  CHECK(p4.neighbors(1) == std::vector<int>{2});
  auto ds = p4.degree_sequence();
  CHECK(ds.kind == Kind::graph);
  CHECK(ds.values == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("digraph net degrees of the transitive tournament") {
  Digraph t(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(t.net_degrees() == std::vector<int>{-2, 0, 2});
  CHECK(t.out_degree(1) == 2);
  CHECK(t.in_degree(3) == 2);
  CHECK(t.out_neighbors(1) == std::vector<int>{2, 3});
  CHECK(t.in_neighbors(3) == std::vector<int>{1, 2});
  CHECK(t.has_arc(1, 2));
  CHECK_FALSE(t.has_arc(2, 1));
  CHECK(t.adjacent(2, 1));
}

TEST_CASE("digraph rejects loops, duplicates and antiparallel pairs") {
  CHECK_THROWS_AS(Digraph(2, {{1, 1}}), PreconditionFailed);
  CHECK_THROWS_AS(Digraph(2, {{1, 2}, {1, 2}}), PreconditionFailed);
  CHECK_THROWS_AS(Digraph(2, {{1, 2}, {2, 1}}), PreconditionFailed);
  CHECK_THROWS_AS(Digraph(2, {{1, 3}}), PreconditionFailed);
}

TEST_CASE("digraph arcs are stored sorted") {
  Digraph d(3, {{3, 1}, {2, 3}});
  CHECK(d.arcs() == std::vector<std::pair<int, int>>{{2, 3}, {3, 1}});
  CHECK(d.underlying().edges() ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
}

TEST_CASE("bigraph normalizes reversed edges together with their signs") {
  Bigraph b(3, {{2, 1}}, {{1, -1}});
  CHECK(b.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(b.signs() == std::vector<std::pair<int, int>>{{-1, 1}});
  CHECK(b.sign(1, 2) == -1);
  CHECK(b.sign(2, 1) == 1);
}

TEST_CASE("bigraph validates signs and edges") {
  CHECK_THROWS_AS(Bigraph(2, {{1, 2}}, {{2, 1}}), PreconditionFailed);
  CHECK_THROWS_AS(Bigraph(2, {{1, 2}}, {{0, 1}}), PreconditionFailed);
  CHECK_THROWS_AS(Bigraph(2, {{1, 2}}, {}), PreconditionFailed);
  CHECK_THROWS_AS(Bigraph(2, {{1, 2}, {2, 1}}, {{1, 1}, {1, 1}}),
                  PreconditionFailed);
  CHECK_THROWS_AS(Bigraph(2, {{1, 1}}, {{1, 1}}), PreconditionFailed);
  Bigraph b(2, {{1, 2}}, {{1, -1}});
  CHECK_THROWS_AS(b.sign(1, 1), PreconditionFailed);
  CHECK_THROWS_AS(Bigraph(3, {{1, 3}}, {{1, 1}}).sign(1, 2),
                  PreconditionFailed);
}

TEST_CASE("bigraph degree bookkeeping") {
  // 1 -(+,+)- 2, 1 -(-,+)- 3
  Bigraph b(3, {{1, 2}, {1, 3}}, {{1, 1}, {-1, 1}});
  CHECK(b.net_degrees() == std::vector<int>{0, 1, 1});
  CHECK(b.plus_degrees() == std::vector<int>{1, 1, 1});
  CHECK(b.minus_degrees() == std::vector<int>{1, 0, 0});
  CHECK(b.degree(1) == 2);
  CHECK(b.neighbors(1) == std::vector<int>{2, 3});
  CHECK(b.underlying().edges() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
}

TEST_CASE("encoding a digraph as a bidirected graph keeps net degrees") {
  Digraph d(3, {{1, 2}, {3, 2}});
  Bigraph b = encode_digraph(d);
  CHECK(b.net_degrees() == d.net_degrees());
  CHECK(b.sign(1, 2) == -1);  // tail
  CHECK(b.sign(2, 1) == 1);   // head
  CHECK(b.sign(3, 2) == -1);
  CHECK(b.underlying() == d.underlying());
}

TEST_CASE("canonical strings") {
  CHECK(canonical_string(Graph(4, {{1, 2}, {1, 3}, {1, 4}})) ==
        "g4:1-2,1-3,1-4");
  CHECK(canonical_string(Graph(3, {})) == "g3:");
  CHECK(canonical_string(Digraph(3, {{1, 2}, {1, 3}, {2, 3}})) ==
        "d3:1>2,1>3,2>3");
  CHECK(canonical_string(Bigraph(3, {{1, 2}, {2, 3}}, {{1, 1}, {-1, -1}})) ==
        "b3:1+2+,2-3-");
}

TEST_CASE("kind names round trip") {
  for (Kind k : {Kind::graph, Kind::digraph, Kind::bigraph})
    CHECK(kind_from_name(kind_name(k)) == k);
  CHECK_THROWS_AS(kind_from_name("trigraph"), ParseError);
}

TEST_CASE("extended sequence keeps the half sum exact") {
  CHECK(extend(DegreeSequence{Kind::graph, {1, 1}}).half_sum == Rational(1));
  CHECK(extend(DegreeSequence{Kind::graph, {1, 1, 1}}).half_sum ==
        Rational(3, 2));
  CHECK(extend(DegreeSequence{Kind::digraph, {-2, 0, 2}}).half_sum ==
        Rational(0));
}

TEST_CASE("degree sequences compare by kind then values") {
  DegreeSequence a{Kind::graph, {1, 1}};
  DegreeSequence b{Kind::graph, {1, 2}};
  DegreeSequence c{Kind::digraph, {1, 1}};
  CHECK(a == a);
  CHECK(a != b);
  CHECK(a < b);
  CHECK(a != c);
}

TEST_CASE("default op sets per kind") {
  OpSet g = OpSet::all(Kind::graph);
  CHECK(g.two_switch);
  CHECK_FALSE(g.delta);
  CHECK_FALSE(g.gamma);

  OpSet d = OpSet::all(Kind::digraph);
  CHECK(d.delta);
  CHECK(d.lambda);
  CHECK_FALSE(d.two_switch);
  CHECK_FALSE(d.bidir_two_switch);

  OpSet b = OpSet::all(Kind::bigraph);
  CHECK(b.gamma);
  CHECK(b.bidir_two_switch);
  CHECK(b.lambda);
  CHECK(b.delta);
  CHECK_FALSE(b.two_switch);
}
