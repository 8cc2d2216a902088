#ifndef NETDEG_IO_HPP
#define NETDEG_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "netdeg/graphs.hpp"
#include "netdeg/types.hpp"

namespace netdeg::io {

using AnyGraph = std::variant<Graph, Digraph, Bigraph>;

// Text format, 1-based node ids, '#' starts a comment:
//   graph <n>      then one "u v" line per edge
//   digraph <n>    then one "u v" line per arc u->v
//   bigraph <n>    then one "u v su sv" line per edge, su = sign at u
// JSON input is accepted by the same readers and detected by a leading '{'.
AnyGraph parse_any(const std::string& text);
Graph parse_graph(const std::string& text);
Digraph parse_digraph(const std::string& text);
Bigraph parse_bigraph(const std::string& text);

std::string write_text(const Graph& g);
std::string write_text(const Digraph& d);
std::string write_text(const Bigraph& b);
std::string write_text(const AnyGraph& g);

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Digraph& d);
nlohmann::json to_json(const Bigraph& b);
nlohmann::json to_json(const AnyGraph& g);
AnyGraph any_from_json(const nlohmann::json& j);

// Comma-separated integers: "2,-2,3,1".
std::vector<int> parse_sequence(const std::string& text);
std::string format_sequence(const std::vector<int>& d);

Kind kind_of(const AnyGraph& g);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace netdeg::io

#endif
