#ifndef NETDEG_GRAPHS_HPP
#define NETDEG_GRAPHS_HPP

#include <string>
#include <utility>
#include <vector>

#include "netdeg/types.hpp"

namespace netdeg {

// Simple undirected graph on nodes 1..n. Immutable after construction;
// edges are stored as (min,max) pairs in sorted order.
class Graph {
public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int node_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;  // ascending
  std::vector<int> degrees() const;
  DegreeSequence degree_sequence() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
};

// Simple directed graph: at most one arc per node pair, no loops,
// no antiparallel pairs. Arc (u,v) points from u to v.
class Digraph {
public:
  Digraph(int n, std::vector<std::pair<int, int>> arcs);

  int node_count() const { return n_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  bool has_arc(int u, int v) const;
  bool adjacent(int u, int v) const;  // arc either way
  int out_degree(int v) const;
  int in_degree(int v) const;
  std::vector<int> out_neighbors(int v) const;  // ascending
  std::vector<int> in_neighbors(int v) const;   // ascending

  // Net degree of v: in-degree minus out-degree.
  std::vector<int> net_degrees() const;
  DegreeSequence degree_sequence() const;

  Graph underlying() const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

private:
  int n_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<char> arc_;
};

// Bidirected graph: a simple graph plus a sign in {-1,+1} for each
// edge end. Edge k joins edges()[k] = (u,v) with u < v and carries
// signs()[k] = (sign at u, sign at v).
class Bigraph {
public:
  Bigraph(int n, std::vector<std::pair<int, int>> edges,
          std::vector<std::pair<int, int>> signs);

  int node_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::pair<int, int>>& signs() const { return signs_; }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;  // ascending
  int degree(int v) const;

  // Sign at `node` of the edge {node, other}; the edge must exist.
  int sign(int node, int other) const;

  // Net degree of v: number of +1 ends at v minus number of -1 ends.
  std::vector<int> net_degrees() const;
  DegreeSequence degree_sequence() const;
  std::vector<int> plus_degrees() const;
  std::vector<int> minus_degrees() const;

  Graph underlying() const;

  bool operator==(const Bigraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && signs_ == other.signs_;
  }

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> signs_;
  std::vector<int> edge_index_;  // n*n, index+1 of edge, 0 = absent
};

DegreeSequence degree_sequence(const Graph& g);
DegreeSequence net_degree_digraph(const Digraph& d);
DegreeSequence net_degree_bigraph(const Bigraph& b);
Graph underlying_graph(const Bigraph& b);

// Encode a digraph as a bidirected graph: arc (u,v) becomes an edge
// signed -1 at u and +1 at v. Net degrees are preserved.
Bigraph encode_digraph(const Digraph& d);

// Canonical one-line serializations, usable as map keys.
std::string canonical_string(const Graph& g);
std::string canonical_string(const Digraph& d);
std::string canonical_string(const Bigraph& b);

}  // namespace netdeg

#endif
