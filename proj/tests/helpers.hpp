#ifndef NETDEG_TESTS_HELPERS_HPP
#define NETDEG_TESTS_HELPERS_HPP

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "netdeg/graphs.hpp"
#include "netdeg/oracle.hpp"

namespace netdeg::test {

// Bucket a whole enumeration by degree sequence in one pass. Calling
// oracle::fiber per sequence would rescan the full state space each time.
inline std::map<DegreeSequence, std::vector<Graph>> graph_fibers(
    int n, int max_n = oracle::kMaxGraphNodes) {
  std::map<DegreeSequence, std::vector<Graph>> out;
  oracle::for_each_graph(
      n, [&](const Graph& g) { out[g.degree_sequence()].push_back(g); },
      max_n);
  return out;
}

inline std::map<DegreeSequence, std::vector<Digraph>> digraph_fibers(
    int n, int max_n = oracle::kMaxDigraphNodes) {
  std::map<DegreeSequence, std::vector<Digraph>> out;
  oracle::for_each_digraph(
      n, [&](const Digraph& d) { out[d.degree_sequence()].push_back(d); },
      max_n);
  return out;
}

inline std::map<DegreeSequence, std::vector<Bigraph>> bigraph_fibers(
    int n, int max_n = oracle::kMaxBigraphNodes) {
  std::map<DegreeSequence, std::vector<Bigraph>> out;
  oracle::for_each_bigraph(
      n, [&](const Bigraph& b) { out[b.degree_sequence()].push_back(b); },
      max_n);
  return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double edge_prob = 0.5) {
  std::bernoulli_distribution edge(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Bigraph random_bigraph(std::mt19937& rng, int n,
                              double edge_prob = 0.5) {
  std::bernoulli_distribution edge(edge_prob);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> signs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (edge(rng)) {
        edges.emplace_back(u, v);
        signs.emplace_back(coin(rng) ? 1 : -1, coin(rng) ? 1 : -1);
      }
  return Bigraph(n, std::move(edges), std::move(signs));
}

}  // namespace netdeg::test

#endif
