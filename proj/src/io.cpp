#include "netdeg/io.hpp"

#include <fstream>
#include <sstream>

namespace netdeg::io {

namespace {

// Strips comments and blank lines, returns the remaining lines.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) lines.push_back(line);
  }
  return lines;
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1") return +1;
  if (s == "-" || s == "-1") return -1;
  throw ParseError("bad sign: " + s);
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

AnyGraph parse_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  std::istringstream head(lines[0]);
  std::string kind_word;
  int n = -1;
  if (!(head >> kind_word >> n))
    throw ParseError("expected '<kind> <n>' header, got: " + lines[0]);
  std::string extra;
  if (head >> extra) throw ParseError("trailing tokens in header: " + lines[0]);
  if (n < 0) throw ParseError("negative node count");
  Kind kind = kind_from_name(kind_word);

  std::vector<std::pair<int, int>> pairs;
  std::vector<std::pair<int, int>> signs;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    int u, v;
    if (!(row >> u >> v)) throw ParseError("bad edge line: " + lines[i]);
    if (kind == Kind::bigraph) {
      std::string su, sv;
      if (!(row >> su >> sv))
        throw ParseError("bigraph edge needs two signs: " + lines[i]);
      signs.emplace_back(parse_sign(su), parse_sign(sv));
    }
    if (row >> extra) throw ParseError("trailing tokens: " + lines[i]);
    pairs.emplace_back(u, v);
  }

  try {
    switch (kind) {
      case Kind::graph: return Graph(n, std::move(pairs));
      case Kind::digraph: return Digraph(n, std::move(pairs));
      case Kind::bigraph:
        return Bigraph(n, std::move(pairs), std::move(signs));
    }
  } catch (const PreconditionFailed& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown kind");
}

AnyGraph parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return any_from_json(j);
}

}  // namespace

AnyGraph parse_any(const std::string& text) {
  return looks_like_json(text) ? parse_json(text) : parse_text(text);
}

Graph parse_graph(const std::string& text) {
  auto any = parse_any(text);
  if (auto* g = std::get_if<Graph>(&any)) return *g;
  throw ParseError("expected a graph, got a " + kind_name(kind_of(any)));
}

Digraph parse_digraph(const std::string& text) {
  auto any = parse_any(text);
  if (auto* d = std::get_if<Digraph>(&any)) return *d;
  throw ParseError("expected a digraph, got a " + kind_name(kind_of(any)));
}

Bigraph parse_bigraph(const std::string& text) {
  auto any = parse_any(text);
  if (auto* b = std::get_if<Bigraph>(&any)) return *b;
  throw ParseError("expected a bigraph, got a " + kind_name(kind_of(any)));
}

std::string write_text(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.node_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string write_text(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.node_count() << "\n";
  for (auto [u, v] : d.arcs()) out << u << " " << v << "\n";
  return out.str();
}

std::string write_text(const Bigraph& b) {
  std::ostringstream out;
  out << "bigraph " << b.node_count() << "\n";
  for (size_t k = 0; k < b.edges().size(); ++k) {
    auto [u, v] = b.edges()[k];
    auto [su, sv] = b.signs()[k];
    out << u << " " << v << " " << (su > 0 ? "+" : "-") << " "
        << (sv > 0 ? "+" : "-") << "\n";
  }
  return out.str();
}

std::string write_text(const AnyGraph& g) {
  return std::visit([](const auto& x) { return write_text(x); }, g);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"kind", "graph"}, {"n", g.node_count()}, {"edges", edges}};
}

nlohmann::json to_json(const Digraph& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return {{"kind", "digraph"}, {"n", d.node_count()}, {"arcs", arcs}};
}

nlohmann::json to_json(const Bigraph& b) {
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json signs = nlohmann::json::array();
  for (size_t k = 0; k < b.edges().size(); ++k) {
    edges.push_back({b.edges()[k].first, b.edges()[k].second});
    signs.push_back({b.signs()[k].first, b.signs()[k].second});
  }
  return {{"kind", "bigraph"},
          {"n", b.node_count()},
          {"edges", edges},
          {"signs", signs}};
}

nlohmann::json to_json(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}

AnyGraph any_from_json(const nlohmann::json& j) {
  try {
    Kind kind = kind_from_name(j.at("kind").get<std::string>());
    int n = j.at("n").get<int>();
    auto read_pairs = [&](const char* key) {
      std::vector<std::pair<int, int>> out;
      for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != 2)
          throw ParseError(std::string(key) + " entries must be [a, b]");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      return out;
    };
    switch (kind) {
      case Kind::graph: return Graph(n, read_pairs("edges"));
      case Kind::digraph: return Digraph(n, read_pairs("arcs"));
      case Kind::bigraph: {
        auto edges = read_pairs("edges");
        auto signs = read_pairs("signs");
        return Bigraph(n, std::move(edges), std::move(signs));
      }
    }
    throw ParseError("unknown kind");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  } catch (const PreconditionFailed& e) {
    throw ParseError(e.what());
  }
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  bool any = false;
  while (std::getline(in, item, ',')) {
    any = true;
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      while (used < item.size() &&
             std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size()) throw ParseError("bad integer: " + item);
      out.push_back(value);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer: " + item);
    }
  }
  if (!any) throw ParseError("empty sequence");
  return out;
}

std::string format_sequence(const std::vector<int>& d) {
  std::ostringstream out;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) out << ",";
    out << d[i];
  }
  return out.str();
}

Kind kind_of(const AnyGraph& g) {
  if (std::holds_alternative<Graph>(g)) return Kind::graph;
  if (std::holds_alternative<Digraph>(g)) return Kind::digraph;
  return Kind::bigraph;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ostringstream err;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace netdeg::io
