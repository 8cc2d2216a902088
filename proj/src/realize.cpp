#include "netdeg/realize.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "netdeg/characterize.hpp"

namespace netdeg::realize {

Graph realize_graph(const std::vector<int>& d) {
  auto feas = characterize::is_graphical(d);
  if (!feas.feasible)
    throw NotRealizable("not graphical: " + feas.witness->describe(),
                        *feas.witness);
  int n = static_cast<int>(d.size());
  std::vector<int> residual = d;
  std::vector<char> active(n, 1);
  std::vector<std::pair<int, int>> edges;
  for (int round = 0; round < n; ++round) {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (active[i] && (v < 0 || residual[i] > residual[v])) v = i;
    if (v < 0 || residual[v] == 0) break;
    // connect v to the residual[v] other active nodes of highest residual
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
      if (active[i] && i != v) others.push_back(i);
    std::stable_sort(others.begin(), others.end(), [&](int a, int b) {
      return residual[a] > residual[b];
    });
    if (residual[v] > static_cast<int>(others.size()))
      throw Error("degree left over after greedy placement");
    for (int k = 0; k < residual[v]; ++k) {
      int u = others[k];
      edges.emplace_back(std::min(u, v) + 1, std::max(u, v) + 1);
      --residual[u];
      if (residual[u] < 0) throw Error("greedy placement went negative");
    }
    residual[v] = 0;
    active[v] = 0;
  }
  return Graph(n, std::move(edges));
}

namespace {

// Max flow via breadth-first augmenting paths on a capacity matrix.
// Small, integral, deterministic.
struct FlowNet {
  int size;
  std::vector<std::vector<int>> cap;

  explicit FlowNet(int size) : size(size), cap(size, std::vector<int>(size)) {}

  long long augment(int s, int t) {
    long long total = 0;
    while (true) {
      std::vector<int> parent(size, -1);
      parent[s] = s;
      std::queue<int> queue;
      queue.push(s);
      while (!queue.empty() && parent[t] < 0) {
        int v = queue.front();
        queue.pop();
        for (int w = 0; w < size; ++w)
          if (parent[w] < 0 && cap[v][w] > 0) {
            parent[w] = v;
            queue.push(w);
          }
      }
      if (parent[t] < 0) return total;
      int push = std::numeric_limits<int>::max();
      for (int v = t; v != s; v = parent[v])
        push = std::min(push, cap[parent[v]][v]);
      for (int v = t; v != s; v = parent[v]) {
        cap[parent[v]][v] -= push;
        cap[v][parent[v]] += push;
      }
      total += push;
    }
  }
};

}  // namespace

Digraph realize_digraph(const std::vector<int>& d) {
  auto feas = characterize::is_digraphical(d);
  if (!feas.feasible)
    throw NotRealizable("not digraphical: " + feas.witness->describe(),
                        *feas.witness);
  int n = static_cast<int>(d.size());
  // An arc u->v is a unit of flow from u to v (lowers d at u, raises it
  // at v). Nodes with d < 0 are supplies, d > 0 are demands, and every
  // ordered pair carries capacity 1.
  FlowNet net(n + 2);
  int source = n, sink = n + 1;
  long long need = 0;
  for (int i = 0; i < n; ++i) {
    if (d[i] < 0) net.cap[source][i] = -d[i];
    if (d[i] > 0) {
      net.cap[i][sink] = d[i];
      need += d[i];
    }
    for (int j = 0; j < n; ++j)
      if (i != j) net.cap[i][j] = 1;
  }
  if (net.augment(source, sink) != need)
    throw Error("flow fell short of a digraphical demand");
  // Residual 0 on (i,j) means one net unit i->j; residual 2 means one
  // net unit j->i. Antiparallel unit pairs cancel in the residuals.
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (net.cap[i][j] == 0) arcs.emplace_back(i + 1, j + 1);
      if (net.cap[i][j] == 2) arcs.emplace_back(j + 1, i + 1);
    }
  return Digraph(n, std::move(arcs));
}

Bigraph realize_bigraph(const std::vector<int>& d) {
  auto feas = characterize::is_bigraphical(d);
  if (!feas.feasible)
    throw NotRealizable("not bigraphical: " + feas.witness->describe(),
                        *feas.witness);
  int n = static_cast<int>(d.size());
  // Nodes whose entry parity differs from n-1 must lose one incidence;
  // drop a perfect matching pairing them up in index order.
  std::vector<int> off_parity;
  for (int i = 1; i <= n; ++i)
    if (((d[i - 1] - (n - 1)) % 2 + 2) % 2 == 1) off_parity.push_back(i);
  if (off_parity.size() % 2 != 0)
    throw Error("parity mismatch left an unmatched node");
  std::vector<std::pair<int, int>> skip;
  for (size_t k = 0; k + 1 < off_parity.size(); k += 2)
    skip.emplace_back(off_parity[k], off_parity[k + 1]);

  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!std::binary_search(skip.begin(), skip.end(), std::make_pair(u, v)))
        edges.emplace_back(u, v);

  // At each node: |d_i| incidences signed like d_i, then cancelling +,-
  // pairs, both walked in increasing neighbor order.
  std::vector<int> forced_left(n + 1);
  std::vector<int> alt_state(n + 1, 0);
  for (int i = 1; i <= n; ++i) forced_left[i] = std::abs(d[i - 1]);
  auto next_sign = [&](int node) {
    if (forced_left[node] > 0) {
      --forced_left[node];
      return d[node - 1] >= 0 ? +1 : -1;
    }
    alt_state[node] ^= 1;
    return alt_state[node] ? +1 : -1;
  };
  std::vector<std::pair<int, int>> signs(edges.size());
  std::vector<std::vector<std::pair<int, size_t>>> incident(n + 1);
  for (size_t k = 0; k < edges.size(); ++k) {
    incident[edges[k].first].emplace_back(edges[k].second, k);
    incident[edges[k].second].emplace_back(edges[k].first, k);
  }
  for (int node = 1; node <= n; ++node) {
    std::sort(incident[node].begin(), incident[node].end());
    for (auto [other, k] : incident[node]) {
      (void)other;
      int s = next_sign(node);
      if (edges[k].first == node)
        signs[k].first = s;
      else
        signs[k].second = s;
    }
  }
  return Bigraph(n, std::move(edges), std::move(signs));
}

Digraph canonical_tournament(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> seen(n + 1, 0);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p])
      throw PreconditionFailed("not a permutation of 1..n");
    seen[p] = 1;
  }
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (perm[i - 1] < perm[j - 1])
        arcs.emplace_back(i, j);
      else
        arcs.emplace_back(j, i);
    }
  return Digraph(n, std::move(arcs));
}

}  // namespace netdeg::realize
