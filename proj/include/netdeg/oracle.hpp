#ifndef NETDEG_ORACLE_HPP
#define NETDEG_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "netdeg/graphs.hpp"
#include "netdeg/types.hpp"

namespace netdeg::oracle {

// Brute-force ground truth by exhaustive enumeration. Bounds keep the
// state spaces tractable: 2^C(n,2) graphs, 3^C(n,2) digraphs,
// 5^C(n,2) bigraphs. Every bound can be raised explicitly (the CLI
// maps NETDEG_MAX_N onto these parameters).

inline constexpr int kMaxGraphNodes = 6;
inline constexpr int kMaxDigraphNodes = 5;
inline constexpr int kMaxBigraphNodes = 4;

void for_each_graph(int n, const std::function<void(const Graph&)>& visit,
                    int max_n = kMaxGraphNodes);
void for_each_digraph(int n, const std::function<void(const Digraph&)>& visit,
                      int max_n = kMaxDigraphNodes);
void for_each_bigraph(int n, const std::function<void(const Bigraph&)>& visit,
                      int max_n = kMaxBigraphNodes);

// Materialized enumerations. threads > 1 partitions the state space by
// the state of the first node pair; the result order is identical to
// the streaming order regardless of thread count.
std::vector<Graph> enum_graphs(int n, int max_n = kMaxGraphNodes,
                               int threads = 1);
std::vector<Digraph> enum_digraphs(int n, int max_n = kMaxDigraphNodes,
                                   int threads = 1);
std::vector<Bigraph> enum_bigraphs(int n, int max_n = kMaxBigraphNodes,
                                   int threads = 1);

// All distinct degree / net-degree sequences over the enumeration,
// sorted. max_n = 0 uses the kind's default bound.
std::vector<DegreeSequence> distinct_sequences(int n, Kind kind,
                                               int max_n = 0);

// All realizations of d, canonically serialized, sorted, duplicate-free.
struct Fiber {
  DegreeSequence d;
  std::vector<std::string> members;

  int size() const { return static_cast<int>(members.size()); }
};

Fiber fiber(const DegreeSequence& d, int max_n = 0);

// Realizations as values, for callers that need the graphs themselves.
std::vector<Graph> fiber_graphs(const std::vector<int>& d,
                                int max_n = kMaxGraphNodes);
std::vector<Digraph> fiber_digraphs(const std::vector<int>& d,
                                    int max_n = kMaxDigraphNodes);
std::vector<Bigraph> fiber_bigraphs(const std::vector<int>& d,
                                    int max_n = kMaxBigraphNodes);

// Connectivity of the graph whose vertices are the realizations of d
// and whose edges are single applicable operations from `ops`.
// diameter = -1 when disconnected or the fiber is empty.
struct OpGraphReport {
  int size = 0;
  bool connected = false;
  int diameter = -1;
};

OpGraphReport op_graph_connected(const DegreeSequence& d, const OpSet& ops,
                                 int max_n = 0);

}  // namespace netdeg::oracle

#endif
