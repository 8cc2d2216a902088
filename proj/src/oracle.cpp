#include "netdeg/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <thread>

#include "netdeg/ops.hpp"

namespace netdeg::oracle {

namespace {

std::vector<std::pair<int, int>> node_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  return out;
}

void check_bound(int n, int max_n, const char* what) {
  if (n < 0) throw PreconditionFailed("negative node count");
  if (n > max_n)
    throw BoundExceeded(std::string(what) + " enumeration capped at n=" +
                        std::to_string(max_n) + ", got n=" +
                        std::to_string(n));
}

// Visits every assignment of m base-s digits whose leading digit lies in
// [lo, hi), in lexicographic order with digit 0 most significant. The
// leading digit is the partition key for multi-threaded enumeration, so
// concatenating the ranges [0,k1),[k1,k2),... reproduces the full order.
void for_each_digits(int m, int s, int lo, int hi,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (m == 0) {
    if (lo == 0) emit({});
    return;
  }
  std::vector<int> digits(m, 0);
  for (int first = lo; first < hi; ++first) {
    std::fill(digits.begin(), digits.end(), 0);
    digits[0] = first;
    while (true) {
      emit(digits);
      int i = m - 1;
      while (i >= 1 && digits[i] == s - 1) digits[i--] = 0;
      if (i == 0) break;
      ++digits[i];
    }
  }
}

Graph graph_from_digits(int n, const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<int>& digits) {
  std::vector<std::pair<int, int>> edges;
  for (size_t k = 0; k < pairs.size(); ++k)
    if (digits[k]) edges.push_back(pairs[k]);
  return Graph(n, std::move(edges));
}

// Pair states: 0 absent, 1 arc u->v, 2 arc v->u (u < v).
Digraph digraph_from_digits(int n,
                            const std::vector<std::pair<int, int>>& pairs,
                            const std::vector<int>& digits) {
  std::vector<std::pair<int, int>> arcs;
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto [u, v] = pairs[k];
    if (digits[k] == 1) arcs.emplace_back(u, v);
    if (digits[k] == 2) arcs.emplace_back(v, u);
  }
  return Digraph(n, std::move(arcs));
}

// Pair states: 0 absent, then (sign at u, sign at v) in the order
// (+,+), (+,-), (-,+), (-,-).
Bigraph bigraph_from_digits(int n,
                            const std::vector<std::pair<int, int>>& pairs,
                            const std::vector<int>& digits) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> signs;
  for (size_t k = 0; k < pairs.size(); ++k) {
    if (!digits[k]) continue;
    edges.push_back(pairs[k]);
    int su = digits[k] <= 2 ? +1 : -1;
    int sv = digits[k] % 2 == 1 ? +1 : -1;
    signs.emplace_back(su, sv);
  }
  return Bigraph(n, std::move(edges), std::move(signs));
}

// Shared driver for the three materialized enumerations.
template <typename T, typename Build>
std::vector<T> enum_states(int n, int states_per_pair, int threads,
                           const Build& build) {
  auto pairs = node_pairs(n);
  int m = static_cast<int>(pairs.size());
  int t = std::max(1, std::min(threads, states_per_pair));
  if (m == 0 || t == 1) {
    std::vector<T> out;
    for_each_digits(m, states_per_pair, 0, states_per_pair,
                    [&](const std::vector<int>& digits) {
                      out.push_back(build(n, pairs, digits));
                    });
    return out;
  }
  std::vector<std::vector<T>> buckets(t);
  std::vector<std::thread> workers;
  for (int b = 0; b < t; ++b) {
    int lo = b * states_per_pair / t;
    int hi = (b + 1) * states_per_pair / t;
    workers.emplace_back([&, b, lo, hi] {
      for_each_digits(m, states_per_pair, lo, hi,
                      [&](const std::vector<int>& digits) {
                        buckets[b].push_back(build(n, pairs, digits));
                      });
    });
  }
  for (auto& w : workers) w.join();
  std::vector<T> out;
  for (auto& bucket : buckets)
    for (auto& g : bucket) out.push_back(std::move(g));
  return out;
}

int default_bound(Kind kind) {
  switch (kind) {
    case Kind::graph: return kMaxGraphNodes;
    case Kind::digraph: return kMaxDigraphNodes;
    case Kind::bigraph: return kMaxBigraphNodes;
  }
  throw Error("unknown kind");
}

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& visit,
                    int max_n) {
  check_bound(n, max_n, "graph");
  auto pairs = node_pairs(n);
  for_each_digits(static_cast<int>(pairs.size()), 2, 0, 2,
                  [&](const std::vector<int>& digits) {
                    visit(graph_from_digits(n, pairs, digits));
                  });
}

void for_each_digraph(int n, const std::function<void(const Digraph&)>& visit,
                      int max_n) {
  check_bound(n, max_n, "digraph");
  auto pairs = node_pairs(n);
  for_each_digits(static_cast<int>(pairs.size()), 3, 0, 3,
                  [&](const std::vector<int>& digits) {
                    visit(digraph_from_digits(n, pairs, digits));
                  });
}

void for_each_bigraph(int n, const std::function<void(const Bigraph&)>& visit,
                      int max_n) {
  check_bound(n, max_n, "bigraph");
  auto pairs = node_pairs(n);
  for_each_digits(static_cast<int>(pairs.size()), 5, 0, 5,
                  [&](const std::vector<int>& digits) {
                    visit(bigraph_from_digits(n, pairs, digits));
                  });
}

std::vector<Graph> enum_graphs(int n, int max_n, int threads) {
  check_bound(n, max_n, "graph");
  return enum_states<Graph>(n, 2, threads, graph_from_digits);
}

std::vector<Digraph> enum_digraphs(int n, int max_n, int threads) {
  check_bound(n, max_n, "digraph");
  return enum_states<Digraph>(n, 3, threads, digraph_from_digits);
}

std::vector<Bigraph> enum_bigraphs(int n, int max_n, int threads) {
  check_bound(n, max_n, "bigraph");
  return enum_states<Bigraph>(n, 5, threads, bigraph_from_digits);
}

std::vector<DegreeSequence> distinct_sequences(int n, Kind kind, int max_n) {
  if (max_n == 0) max_n = default_bound(kind);
  std::set<DegreeSequence> seen;
  switch (kind) {
    case Kind::graph:
      for_each_graph(
          n, [&](const Graph& g) { seen.insert(g.degree_sequence()); },
          max_n);
      break;
    case Kind::digraph:
      for_each_digraph(
          n, [&](const Digraph& d) { seen.insert(d.degree_sequence()); },
          max_n);
      break;
    case Kind::bigraph:
      for_each_bigraph(
          n, [&](const Bigraph& b) { seen.insert(b.degree_sequence()); },
          max_n);
      break;
  }
  return std::vector<DegreeSequence>(seen.begin(), seen.end());
}

Fiber fiber(const DegreeSequence& d, int max_n) {
  if (max_n == 0) max_n = default_bound(d.kind);
  int n = d.size();
  Fiber out{d, {}};
  switch (d.kind) {
    case Kind::graph:
      for_each_graph(
          n,
          [&](const Graph& g) {
            if (g.degrees() == d.values)
              out.members.push_back(canonical_string(g));
          },
          max_n);
      break;
    case Kind::digraph:
      for_each_digraph(
          n,
          [&](const Digraph& dg) {
            if (dg.net_degrees() == d.values)
              out.members.push_back(canonical_string(dg));
          },
          max_n);
      break;
    case Kind::bigraph:
      for_each_bigraph(
          n,
          [&](const Bigraph& b) {
            if (b.net_degrees() == d.values)
              out.members.push_back(canonical_string(b));
          },
          max_n);
      break;
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<Graph> fiber_graphs(const std::vector<int>& d, int max_n) {
  std::vector<Graph> out;
  for_each_graph(
      static_cast<int>(d.size()),
      [&](const Graph& g) {
        if (g.degrees() == d) out.push_back(g);
      },
      max_n);
  return out;
}

std::vector<Digraph> fiber_digraphs(const std::vector<int>& d, int max_n) {
  std::vector<Digraph> out;
  for_each_digraph(
      static_cast<int>(d.size()),
      [&](const Digraph& dg) {
        if (dg.net_degrees() == d) out.push_back(dg);
      },
      max_n);
  return out;
}

std::vector<Bigraph> fiber_bigraphs(const std::vector<int>& d, int max_n) {
  std::vector<Bigraph> out;
  for_each_bigraph(
      static_cast<int>(d.size()),
      [&](const Bigraph& b) {
        if (b.net_degrees() == d) out.push_back(b);
      },
      max_n);
  return out;
}

namespace {

// BFS-based connectivity and diameter of an explicit adjacency list.
OpGraphReport analyze_adjacency(const std::vector<std::vector<int>>& adj) {
  OpGraphReport report;
  report.size = static_cast<int>(adj.size());
  if (adj.empty()) return report;
  int diameter = 0;
  for (int src = 0; src < report.size; ++src) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    int reached = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          diameter = std::max(diameter, dist[w]);
          ++reached;
          queue.push(w);
        }
    }
    if (reached < report.size) return report;
  }
  report.connected = true;
  report.diameter = diameter;
  return report;
}

template <typename T, typename Moves>
OpGraphReport op_graph_over(std::vector<T> members, const Moves& moves) {
  std::sort(members.begin(), members.end(),
            [](const T& a, const T& b) {
              return canonical_string(a) < canonical_string(b);
            });
  std::map<std::string, int> index;
  for (size_t i = 0; i < members.size(); ++i)
    index[canonical_string(members[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(members.size());
  for (size_t i = 0; i < members.size(); ++i)
    for (const T& next : moves(members[i])) {
      auto it = index.find(canonical_string(next));
      if (it == index.end())
        throw Error("operation left the fiber; applier is inconsistent");
      if (it->second != static_cast<int>(i)) adj[i].push_back(it->second);
    }
  return analyze_adjacency(adj);
}

}  // namespace

OpGraphReport op_graph_connected(const DegreeSequence& d, const OpSet& ops,
                                 int max_n) {
  if (max_n == 0) max_n = default_bound(d.kind);
  switch (d.kind) {
    case Kind::graph:
      return op_graph_over(fiber_graphs(d.values, max_n),
                           [&](const Graph& g) {
                             std::vector<Graph> next;
                             if (!ops.two_switch) return next;
                             for (auto& [rec, result] : ops::applicable_ops(g))
                               next.push_back(result);
                             return next;
                           });
    case Kind::digraph:
      return op_graph_over(
          fiber_digraphs(d.values, max_n), [&](const Digraph& dg) {
            std::vector<Digraph> next;
            for (auto& [rec, result] : ops::applicable_ops(dg)) {
              bool is_delta = std::holds_alternative<ops::DeltaDigraph>(rec);
              if (is_delta ? ops.delta : ops.lambda) next.push_back(result);
            }
            return next;
          });
    case Kind::bigraph:
      return op_graph_over(fiber_bigraphs(d.values, max_n),
                           [&](const Bigraph& b) {
                             std::vector<Bigraph> next;
                             for (auto& [rec, result] :
                                  ops::applicable_ops(b, ops))
                               next.push_back(result);
                             return next;
                           });
  }
  throw Error("unknown kind");
}

}  // namespace netdeg::oracle
