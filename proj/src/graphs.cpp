#include "netdeg/graphs.hpp"

#include <algorithm>
#include <sstream>

namespace netdeg {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::graph: return "graph";
    case Kind::digraph: return "digraph";
    case Kind::bigraph: return "bigraph";
  }
  throw Error("unknown kind");
}

Kind kind_from_name(const std::string& name) {
  if (name == "graph") return Kind::graph;
  if (name == "digraph") return Kind::digraph;
  if (name == "bigraph") return Kind::bigraph;
  throw ParseError("unknown kind: " + name);
}

namespace {

std::string join_set(const std::vector<int>& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ",";
    out << s[i];
  }
  out << "}";
  return out.str();
}

void check_node(int v, int n) {
  if (v < 1 || v > n)
    throw PreconditionFailed("node id " + std::to_string(v) +
                             " outside 1.." + std::to_string(n));
}

}  // namespace

std::string RealizabilityWitness::describe() const {
  switch (reason) {
    case Reason::odd_sum:
      return "odd sum";
    case Reason::nonzero_sum:
      return "nonzero sum";
    case Reason::subset_pair:
      return "S=" + join_set(set_s) + ", T=" + join_set(set_t);
    case Reason::subset:
      return "I=" + join_set(set_i);
    case Reason::entry_range:
      return "|d_" + std::to_string(index) + "| > n-1";
  }
  throw Error("unknown witness reason");
}

std::string TightnessWitness::describe() const {
  switch (kind) {
    case Kind::graph:
      return "S=" + join_set(set_s) + ", T=" + join_set(set_t);
    case Kind::digraph:
      return "I=" + join_set(set_i);
    case Kind::bigraph:
      return "|d_" + std::to_string(index) + "| = n-1";
  }
  throw Error("unknown witness kind");
}

ExtendedSequence extend(const DegreeSequence& d) {
  ExtendedSequence ext;
  ext.values = d.values;
  Count sum = 0;
  for (int v : d.values) sum += v;
  ext.half_sum = Rational(sum, 2);
  return ext;
}

OpSet OpSet::all(Kind kind) {
  OpSet s;
  switch (kind) {
    case Kind::graph:
      s.two_switch = true;
      break;
    case Kind::digraph:
      s.delta = true;
      s.lambda = true;
      break;
    case Kind::bigraph:
      s.gamma = true;
      s.bidir_two_switch = true;
      s.lambda = true;
      s.delta = true;
      break;
  }
  return s;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw PreconditionFailed("negative node count");
  for (auto& [u, v] : edges) {
    check_node(u, n);
    check_node(v, n);
    if (u == v) throw PreconditionFailed("loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw PreconditionFailed("duplicate edge " +
                               std::to_string(edges[i].first) + "-" +
                               std::to_string(edges[i].second));
  edges_ = std::move(edges);
  adj_.assign(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : edges_) {
    adj_[(u - 1) * static_cast<size_t>(n_) + (v - 1)] = 1;
    adj_[(v - 1) * static_cast<size_t>(n_) + (u - 1)] = 1;
  }
}

bool Graph::adjacent(int u, int v) const {
  check_node(u, n_);
  check_node(v, n_);
  return adj_[(u - 1) * static_cast<size_t>(n_) + (v - 1)] != 0;
}

int Graph::degree(int v) const {
  check_node(v, n_);
  int deg = 0;
  for (int u = 1; u <= n_; ++u)
    if (adj_[(v - 1) * static_cast<size_t>(n_) + (u - 1)]) ++deg;
  return deg;
}

std::vector<int> Graph::neighbors(int v) const {
  check_node(v, n_);
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (adj_[(v - 1) * static_cast<size_t>(n_) + (u - 1)]) out.push_back(u);
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_, 0);
  for (auto [u, v] : edges_) {
    ++d[u - 1];
    ++d[v - 1];
  }
  return d;
}

DegreeSequence Graph::degree_sequence() const {
  return DegreeSequence{Kind::graph, degrees()};
}

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
  if (n < 0) throw PreconditionFailed("negative node count");
  for (auto [u, v] : arcs) {
    check_node(u, n);
    check_node(v, n);
    if (u == v) throw PreconditionFailed("loop at node " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  for (size_t i = 1; i < arcs.size(); ++i)
    if (arcs[i] == arcs[i - 1])
      throw PreconditionFailed("duplicate arc " +
                               std::to_string(arcs[i].first) + "->" +
                               std::to_string(arcs[i].second));
  arc_.assign(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : arcs) {
    if (arc_[(v - 1) * static_cast<size_t>(n) + (u - 1)])
      throw PreconditionFailed("antiparallel arcs between " +
                               std::to_string(u) + " and " +
                               std::to_string(v));
    arc_[(u - 1) * static_cast<size_t>(n) + (v - 1)] = 1;
  }
  arcs_ = std::move(arcs);
}

bool Digraph::has_arc(int u, int v) const {
  check_node(u, n_);
  check_node(v, n_);
  return arc_[(u - 1) * static_cast<size_t>(n_) + (v - 1)] != 0;
}

bool Digraph::adjacent(int u, int v) const {
  return has_arc(u, v) || has_arc(v, u);
}

int Digraph::out_degree(int v) const {
  check_node(v, n_);
  int deg = 0;
  for (int u = 1; u <= n_; ++u)
    if (arc_[(v - 1) * static_cast<size_t>(n_) + (u - 1)]) ++deg;
  return deg;
}

int Digraph::in_degree(int v) const {
  check_node(v, n_);
  int deg = 0;
  for (int u = 1; u <= n_; ++u)
    if (arc_[(u - 1) * static_cast<size_t>(n_) + (v - 1)]) ++deg;
  return deg;
}

std::vector<int> Digraph::out_neighbors(int v) const {
  check_node(v, n_);
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (arc_[(v - 1) * static_cast<size_t>(n_) + (u - 1)]) out.push_back(u);
  return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
  check_node(v, n_);
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (arc_[(u - 1) * static_cast<size_t>(n_) + (v - 1)]) out.push_back(u);
  return out;
}

std::vector<int> Digraph::net_degrees() const {
  std::vector<int> d(n_, 0);
  for (auto [u, v] : arcs_) {
    --d[u - 1];
    ++d[v - 1];
  }
  return d;
}

DegreeSequence Digraph::degree_sequence() const {
  return DegreeSequence{Kind::digraph, net_degrees()};
}

Graph Digraph::underlying() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(arcs_.size());
  for (auto [u, v] : arcs_) edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(n_, std::move(edges));
}

Bigraph::Bigraph(int n, std::vector<std::pair<int, int>> edges,
                 std::vector<std::pair<int, int>> signs)
    : n_(n) {
  if (n < 0) throw PreconditionFailed("negative node count");
  if (edges.size() != signs.size())
    throw PreconditionFailed("edge and sign lists differ in length");
  std::vector<size_t> order(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    auto& [u, v] = edges[i];
    check_node(u, n);
    check_node(v, n);
    if (u == v) throw PreconditionFailed("loop at node " + std::to_string(u));
    if (u > v) {
      std::swap(u, v);
      std::swap(signs[i].first, signs[i].second);
    }
    if (std::abs(signs[i].first) != 1 || std::abs(signs[i].second) != 1)
      throw PreconditionFailed("sign must be +1 or -1");
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return edges[a] < edges[b]; });
  edges_.reserve(edges.size());
  signs_.reserve(edges.size());
  for (size_t i : order) {
    edges_.push_back(edges[i]);
    signs_.push_back(signs[i]);
  }
  for (size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      throw PreconditionFailed("duplicate edge " +
                               std::to_string(edges_[i].first) + "-" +
                               std::to_string(edges_[i].second));
  edge_index_.assign(static_cast<size_t>(n) * n, 0);
  for (size_t k = 0; k < edges_.size(); ++k) {
    auto [u, v] = edges_[k];
    edge_index_[(u - 1) * static_cast<size_t>(n_) + (v - 1)] =
        static_cast<int>(k) + 1;
    edge_index_[(v - 1) * static_cast<size_t>(n_) + (u - 1)] =
        static_cast<int>(k) + 1;
  }
}

bool Bigraph::adjacent(int u, int v) const {
  check_node(u, n_);
  check_node(v, n_);
  return edge_index_[(u - 1) * static_cast<size_t>(n_) + (v - 1)] != 0;
}

std::vector<int> Bigraph::neighbors(int v) const {
  check_node(v, n_);
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (edge_index_[(v - 1) * static_cast<size_t>(n_) + (u - 1)])
      out.push_back(u);
  return out;
}

int Bigraph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

int Bigraph::sign(int node, int other) const {
  check_node(node, n_);
  check_node(other, n_);
  int k = edge_index_[(node - 1) * static_cast<size_t>(n_) + (other - 1)];
  if (k == 0)
    throw PreconditionFailed("no edge " + std::to_string(node) + "-" +
                             std::to_string(other));
  auto [u, v] = edges_[k - 1];
  return node == u ? signs_[k - 1].first : signs_[k - 1].second;
}

std::vector<int> Bigraph::net_degrees() const {
  std::vector<int> d(n_, 0);
  for (size_t k = 0; k < edges_.size(); ++k) {
    d[edges_[k].first - 1] += signs_[k].first;
    d[edges_[k].second - 1] += signs_[k].second;
  }
  return d;
}

DegreeSequence Bigraph::degree_sequence() const {
  return DegreeSequence{Kind::bigraph, net_degrees()};
}

std::vector<int> Bigraph::plus_degrees() const {
  std::vector<int> d(n_, 0);
  for (size_t k = 0; k < edges_.size(); ++k) {
    if (signs_[k].first > 0) ++d[edges_[k].first - 1];
    if (signs_[k].second > 0) ++d[edges_[k].second - 1];
  }
  return d;
}

std::vector<int> Bigraph::minus_degrees() const {
  std::vector<int> d(n_, 0);
  for (size_t k = 0; k < edges_.size(); ++k) {
    if (signs_[k].first < 0) ++d[edges_[k].first - 1];
    if (signs_[k].second < 0) ++d[edges_[k].second - 1];
  }
  return d;
}

Graph Bigraph::underlying() const { return Graph(n_, edges_); }

DegreeSequence degree_sequence(const Graph& g) { return g.degree_sequence(); }

DegreeSequence net_degree_digraph(const Digraph& d) {
  return d.degree_sequence();
}

DegreeSequence net_degree_bigraph(const Bigraph& b) {
  return b.degree_sequence();
}

Graph underlying_graph(const Bigraph& b) { return b.underlying(); }

Bigraph encode_digraph(const Digraph& d) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> signs;
  edges.reserve(d.arcs().size());
  signs.reserve(d.arcs().size());
  for (auto [u, v] : d.arcs()) {
    edges.emplace_back(u, v);
    signs.emplace_back(-1, +1);
  }
  return Bigraph(d.node_count(), std::move(edges), std::move(signs));
}

std::string canonical_string(const Graph& g) {
  std::ostringstream out;
  out << "g" << g.node_count() << ":";
  for (size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out << ",";
    out << g.edges()[i].first << "-" << g.edges()[i].second;
  }
  return out.str();
}

std::string canonical_string(const Digraph& d) {
  std::ostringstream out;
  out << "d" << d.node_count() << ":";
  for (size_t i = 0; i < d.arcs().size(); ++i) {
    if (i) out << ",";
    out << d.arcs()[i].first << ">" << d.arcs()[i].second;
  }
  return out.str();
}

std::string canonical_string(const Bigraph& b) {
  std::ostringstream out;
  out << "b" << b.node_count() << ":";
  for (size_t i = 0; i < b.edges().size(); ++i) {
    if (i) out << ",";
    out << b.edges()[i].first << (b.signs()[i].first > 0 ? "+" : "-")
        << b.edges()[i].second << (b.signs()[i].second > 0 ? "+" : "-");
  }
  return out.str();
}

}  // namespace netdeg
