#include <doctest.h>

#include <cstdio>

#include "netdeg/io.hpp"

using namespace netdeg;

TEST_CASE("graph text round trip") {
  Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
  std::string text = io::write_text(g);
  CHECK(text == "graph 4\n1 2\n2 3\n3 4\n");
  CHECK(io::parse_graph(text) == g);
}

TEST_CASE("digraph text round trip") {
  Digraph d(3, {{2, 1}, {2, 3}});
  std::string text = io::write_text(d);
  CHECK(text == "digraph 3\n2 1\n2 3\n");
  CHECK(io::parse_digraph(text) == d);
}

TEST_CASE("bigraph text round trip") {
  Bigraph b(3, {{1, 2}, {1, 3}}, {{1, -1}, {-1, 1}});
  std::string text = io::write_text(b);
  CHECK(text == "bigraph 3\n1 2 + -\n1 3 - +\n");
  CHECK(io::parse_bigraph(text) == b);
}

TEST_CASE("parser ignores comments and blank lines") {
  Graph g = io::parse_graph(
      "# a triangle\n"
      "graph 3   # three nodes\n"
      "\n"
      "1 2\n"
      "2 3  # middle\n"
      "1 3\n");
  CHECK(g == Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
}

TEST_CASE("bigraph signs accept both spellings") {
  Bigraph b = io::parse_bigraph("bigraph 2\n1 2 +1 -1\n");
  CHECK(b.sign(1, 2) == 1);
  CHECK(b.sign(2, 1) == -1);
}

TEST_CASE("parse_any dispatches on the header or a leading brace") {
  CHECK(std::holds_alternative<Graph>(io::parse_any("graph 2\n1 2\n")));
  CHECK(std::holds_alternative<Digraph>(io::parse_any("digraph 2\n1 2\n")));
  CHECK(std::holds_alternative<Bigraph>(
      io::parse_any("bigraph 2\n1 2 + +\n")));
  CHECK(std::holds_alternative<Graph>(
      io::parse_any(R"(  {"kind":"graph","n":2,"edges":[[1,2]]})")));
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(io::parse_graph(""), ParseError);
  CHECK_THROWS_AS(io::parse_graph("# only comments\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("trigraph 3\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph 3 extra\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph -2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph 3\n1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph 3\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(io::parse_bigraph("bigraph 2\n1 2 + \n"), ParseError);
  CHECK_THROWS_AS(io::parse_bigraph("bigraph 2\n1 2 ? -\n"), ParseError);
  // constructor violations surface as parse errors
  CHECK_THROWS_AS(io::parse_graph("graph 2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("graph 2\n1 3\n"), ParseError);
  CHECK_THROWS_AS(io::parse_digraph("digraph 2\n1 2\n2 1\n"), ParseError);
}

TEST_CASE("typed parsers reject the wrong kind") {
  CHECK_THROWS_AS(io::parse_graph("digraph 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_digraph("graph 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_bigraph("graph 2\n1 2\n"), ParseError);
}

TEST_CASE("json round trips") {
  Graph g(3, {{1, 3}, {2, 3}});
  Digraph d(3, {{3, 1}});
  Bigraph b(3, {{1, 2}, {2, 3}}, {{1, 1}, {-1, 1}});

  CHECK(std::get<Graph>(io::any_from_json(io::to_json(g))) == g);
  CHECK(std::get<Digraph>(io::any_from_json(io::to_json(d))) == d);
  CHECK(std::get<Bigraph>(io::any_from_json(io::to_json(b))) == b);

  auto jg = io::to_json(g);
  CHECK(jg["kind"] == "graph");
  CHECK(jg["n"] == 3);
  CHECK(jg["edges"].size() == 2);

  // via the generic text entry point as well
  CHECK(std::get<Bigraph>(io::parse_any(io::to_json(b).dump())) == b);
}

TEST_CASE("json parse errors") {
  CHECK_THROWS_AS(io::parse_any("{not json"), ParseError);
  CHECK_THROWS_AS(io::any_from_json(nlohmann::json{{"kind", "graph"}}),
                  ParseError);
  CHECK_THROWS_AS(
      io::any_from_json(nlohmann::json{
          {"kind", "graph"}, {"n", 2}, {"edges", {{1, 2, 3}}}}),
      ParseError);
  CHECK_THROWS_AS(
      io::any_from_json(nlohmann::json{
          {"kind", "graph"}, {"n", 2}, {"edges", {{1, 1}}}}),
      ParseError);
}

TEST_CASE("sequence parsing and formatting") {
  CHECK(io::parse_sequence("2,-2,3,1") == std::vector<int>{2, -2, 3, 1});
  CHECK(io::parse_sequence("0") == std::vector<int>{0});
  CHECK(io::parse_sequence(" 1 , -1 ") == std::vector<int>{1, -1});
  CHECK(io::format_sequence({2, -2, 3, 1}) == "2,-2,3,1");
  CHECK_THROWS_AS(io::parse_sequence(""), ParseError);
  CHECK_THROWS_AS(io::parse_sequence("1,,2"), ParseError);
  CHECK_THROWS_AS(io::parse_sequence("1,x"), ParseError);
  CHECK_THROWS_AS(io::parse_sequence("1,2 3"), ParseError);
}

TEST_CASE("file round trip") {
  std::string path = "netdeg_io_test.tmp";
  io::write_file(path, "graph 2\n1 2\n");
  CHECK(io::read_file(path) == "graph 2\n1 2\n");
  CHECK(io::parse_graph(io::read_file(path)) == Graph(2, {{1, 2}}));
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_file("netdeg_io_missing.tmp"), Error);
}

TEST_CASE("kind_of reports the active alternative") {
  CHECK(io::kind_of(io::AnyGraph{Graph(1, {})}) == Kind::graph);
  CHECK(io::kind_of(io::AnyGraph{Digraph(1, {})}) == Kind::digraph);
  CHECK(io::kind_of(io::AnyGraph{Bigraph(1, {}, {})}) == Kind::bigraph);
}
