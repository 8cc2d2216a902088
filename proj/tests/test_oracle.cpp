#include <doctest.h>

#include <netdeg/graphs.hpp>
#include <netdeg/oracle.hpp>
#include <netdeg/types.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"

using namespace netdeg;
using namespace netdeg::oracle;

TEST_CASE("enumeration sizes") {
  CHECK(enum_graphs(1).size() == 1);
  CHECK(enum_graphs(2).size() == 2);
  CHECK(enum_graphs(3).size() == 8);
  CHECK(enum_graphs(4).size() == 64);
  CHECK(enum_digraphs(2).size() == 3);
  CHECK(enum_digraphs(3).size() == 27);
  CHECK(enum_bigraphs(2).size() == 5);
  CHECK(enum_bigraphs(3).size() == 125);
}

TEST_CASE("enumeration is duplicate-free and kind-correct") {
  std::set<std::string> seen;
  for (const Graph& g : enum_graphs(4)) seen.insert(canonical_string(g));
  CHECK(seen.size() == 64);

  seen.clear();
  for (const Bigraph& b : enum_bigraphs(3)) seen.insert(canonical_string(b));
  CHECK(seen.size() == 125);
}

TEST_CASE("threaded enumeration preserves the streaming order") {
  std::vector<Graph> streamed;
  for_each_graph(4, [&](const Graph& g) { streamed.push_back(g); });

  for (int threads : {1, 2, 4}) {
    CAPTURE(threads);
    std::vector<Graph> batch = enum_graphs(4, kMaxGraphNodes, threads);
    REQUIRE(batch.size() == streamed.size());
    for (size_t i = 0; i < batch.size(); ++i)
      CHECK(canonical_string(batch[i]) == canonical_string(streamed[i]));
  }

  std::vector<Digraph> seq = enum_digraphs(3);
  std::vector<Digraph> par = enum_digraphs(3, kMaxDigraphNodes, 4);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i)
    CHECK(canonical_string(seq[i]) == canonical_string(par[i]));

  std::vector<Bigraph> bseq = enum_bigraphs(3);
  std::vector<Bigraph> bpar = enum_bigraphs(3, kMaxBigraphNodes, 3);
  REQUIRE(bseq.size() == bpar.size());
  for (size_t i = 0; i < bseq.size(); ++i)
    CHECK(canonical_string(bseq[i]) == canonical_string(bpar[i]));
}

TEST_CASE("distinct sequence counts") {
  CHECK(distinct_sequences(4, Kind::graph).size() == 54);
  CHECK(distinct_sequences(3, Kind::digraph).size() == 19);
  CHECK(distinct_sequences(3, Kind::bigraph).size() == 63);

  std::vector<DegreeSequence> all = distinct_sequences(4, Kind::graph);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (const DegreeSequence& d : all) {
    CHECK(d.kind == Kind::graph);
    CHECK(d.size() == 4);
  }
}

TEST_CASE("fibers") {
  Fiber triangle = fiber({Kind::graph, {2, 2, 2}});
  CHECK(triangle.size() == 1);
  REQUIRE(triangle.members.size() == 1);
  CHECK(triangle.members[0] == "g3:1-2,1-3,2-3");

  Fiber cycles = fiber({Kind::digraph, {0, 0, 0}});
  CHECK(cycles.size() == 3);  // empty digraph plus the two 3-cycles
  CHECK(std::is_sorted(cycles.members.begin(), cycles.members.end()));

  Fiber none = fiber({Kind::graph, {1, 1, 1}});
  CHECK(none.size() == 0);

  std::vector<Graph> gs = fiber_graphs({1, 1, 1, 1});
  CHECK(gs.size() == 3);  // perfect matchings of 4 nodes
  for (const Graph& g : gs) CHECK(g.degrees() == std::vector<int>{1, 1, 1, 1});

  std::vector<Digraph> ds = fiber_digraphs({0, 0, 0});
  REQUIRE(ds.size() == 3);
  std::vector<std::string> names;
  for (const Digraph& d : ds) names.push_back(canonical_string(d));
  CHECK(names == cycles.members);

  std::vector<Bigraph> bs = fiber_bigraphs({1, 1});
  REQUIRE(bs.size() == 1);
  CHECK(canonical_string(bs[0]) == "b2:1+2+");
}

TEST_CASE("fiber agrees with a one-pass bucketing") {
  auto buckets = test::graph_fibers(4);
  for (const auto& [d, members] : buckets) {
    Fiber f = fiber(d);
    REQUIRE(f.size() == static_cast<int>(members.size()));
    std::vector<std::string> names;
    for (const Graph& g : members) names.push_back(canonical_string(g));
    std::sort(names.begin(), names.end());
    CHECK(f.members == names);
  }
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enum_graphs(7), BoundExceeded);
  CHECK_THROWS_AS(enum_digraphs(6), BoundExceeded);
  CHECK_THROWS_AS(enum_bigraphs(5), BoundExceeded);
  CHECK_THROWS_AS(for_each_graph(3, [](const Graph&) {}, 2), BoundExceeded);
  CHECK_THROWS_AS(fiber({Kind::digraph, {0, 0, 0, 0, 0, 0}}), BoundExceeded);

  // An explicit bound unlocks sizes past the default.
  long long wide = 0;
  for_each_graph(7, [&](const Graph&) { ++wide; }, 7);
  CHECK(wide == 2097152);  // 2^21
}

TEST_CASE("operation graph connectivity reports") {
  OpGraphReport triangle =
      op_graph_connected({Kind::graph, {2, 2, 2}}, OpSet::all(Kind::graph));
  CHECK(triangle.size == 1);
  CHECK(triangle.connected);
  CHECK(triangle.diameter == 0);

  OpGraphReport cycles =
      op_graph_connected({Kind::digraph, {0, 0, 0}}, OpSet::all(Kind::digraph));
  CHECK(cycles.size == 3);
  CHECK(cycles.connected);
  // The two orientations of the 3-cycle interchange via the empty digraph.
  CHECK(cycles.diameter == 2);

  OpGraphReport empty =
      op_graph_connected({Kind::graph, {1, 1, 1}}, OpSet::all(Kind::graph));
  CHECK(empty.size == 0);
  CHECK_FALSE(empty.connected);
  CHECK(empty.diameter == -1);

  // Sign swaps alone never change the underlying graph, so restricting
  // to them disconnects any fiber spanning several underlying graphs.
  OpSet gamma_only;
  gamma_only.gamma = true;
  OpGraphReport stranded =
      op_graph_connected({Kind::bigraph, {0, 0, 0}}, gamma_only);
  CHECK(stranded.size > 1);
  CHECK_FALSE(stranded.connected);
  CHECK(stranded.diameter == -1);
}
