#include "netdeg/classify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "netdeg/characterize.hpp"
#include "netdeg/realize.hpp"

namespace netdeg::classify {

namespace {

std::string node_set_str(const std::vector<int>& nodes) {
  std::string out = "{";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(nodes[i]);
  }
  return out + "}";
}

}  // namespace

bool is_threshold(const Graph& g) {
  int n = g.node_count();
  std::vector<char> active(n + 1, 1);
  int remaining = n;
  while (remaining > 0) {
    int pick = 0;
    for (int v = 1; v <= n && !pick; ++v) {
      if (!active[v]) continue;
      int deg = 0;
      for (int u : g.neighbors(v))
        if (active[u]) ++deg;
      if (deg == 0 || deg == remaining - 1) pick = v;
    }
    if (!pick) return false;
    active[pick] = 0;
    --remaining;
  }
  return true;
}

std::optional<std::vector<int>> vertex_certificate_undirected(const Graph& g) {
  if (!is_threshold(g)) return std::nullopt;
  int n = g.node_count();
  std::vector<int> deg = g.degrees();
  // in a threshold graph the degree sums separate edges from non-edges,
  // so weights linear in the degrees work
  int threshold = 0;
  bool any_edge = false;
  for (const auto& [u, v] : g.edges()) {
    int sum = deg[u - 1] + deg[v - 1];
    if (!any_edge || sum < threshold + 1) threshold = sum - 1;
    any_edge = true;
  }
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = any_edge ? 2 * deg[i] - threshold : -1;
  return c;
}

bool is_unique_undirected(const std::vector<int>& d) {
  auto feasibility = characterize::is_graphical(d);
  if (!feasibility.feasible)
    throw NotRealizable("not graphical: " + feasibility.witness->describe(),
                        *feasibility.witness);
  return is_threshold(realize::realize_graph(d));
}

namespace {

bool valid_weak_split(const Graph& g, const std::vector<int>& clique,
                      const std::vector<int>& independent,
                      const std::vector<int>& outside) {
  if (clique.empty() && independent.empty()) return false;
  for (size_t i = 0; i < clique.size(); ++i)
    for (size_t j = i + 1; j < clique.size(); ++j)
      if (!g.adjacent(clique[i], clique[j])) return false;
  for (size_t i = 0; i < independent.size(); ++i)
    for (size_t j = i + 1; j < independent.size(); ++j)
      if (g.adjacent(independent[i], independent[j])) return false;
  for (int o : outside) {
    for (int c : clique)
      if (!g.adjacent(o, c)) return false;
    for (int i : independent)
      if (g.adjacent(o, i)) return false;
  }
  return true;
}

WeaklySplitPartition make_undirected_partition(std::vector<int> clique,
                                               std::vector<int> independent,
                                               std::vector<int> outside) {
  std::sort(clique.begin(), clique.end());
  std::sort(independent.begin(), independent.end());
  std::sort(outside.begin(), outside.end());
  WeaklySplitPartition p;
  p.clique = std::move(clique);
  p.independent = std::move(independent);
  p.outside = std::move(outside);
  return p;
}

}  // namespace

std::optional<WeaklySplitPartition> is_weakly_split_graph(const Graph& g) {
  int n = g.node_count();
  std::vector<int> deg = g.degrees();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a - 1] > deg[b - 1]; });
  // candidate partitions: a clique of the highest degrees, an independent
  // part of the lowest, the rest outside
  for (int s = 0; s <= n; ++s)
    for (int t = 0; s + t <= n; ++t) {
      if (s + t == 0) continue;
      std::vector<int> clique(order.begin(), order.begin() + s);
      std::vector<int> independent(order.end() - t, order.end());
      std::vector<int> outside(order.begin() + s, order.end() - t);
      if (valid_weak_split(g, clique, independent, outside))
        return make_undirected_partition(clique, independent, outside);
    }
  // exhaustive sweep for small n, in case ties hide a sorted witness
  if (n <= 12) {
    std::vector<int> part(n, 0);  // 0 clique, 1 independent, 2 outside
    while (true) {
      std::vector<int> clique, independent, outside;
      for (int i = 0; i < n; ++i)
        (part[i] == 0 ? clique : part[i] == 1 ? independent : outside)
            .push_back(i + 1);
      if (valid_weak_split(g, clique, independent, outside))
        return make_undirected_partition(clique, independent, outside);
      int pos = n - 1;
      while (pos >= 0 && part[pos] == 2) part[pos--] = 0;
      if (pos < 0) break;
      ++part[pos];
    }
  }
  return std::nullopt;
}

namespace {

bool valid_source_target_split(const Digraph& d,
                               const std::vector<char>& in_targets) {
  int n = d.node_count();
  int target_count = 0;
  for (int v = 1; v <= n; ++v)
    if (in_targets[v]) ++target_count;
  if (target_count == 0 || target_count == n) return false;
  for (int u = 1; u <= n; ++u) {
    if (in_targets[u]) continue;
    for (int v = 1; v <= n; ++v)
      if (in_targets[v] && !d.has_arc(u, v)) return false;
  }
  return true;
}

WeaklySplitPartition make_directed_partition(const std::vector<char>& in_targets,
                                             int n) {
  WeaklySplitPartition p;
  for (int v = 1; v <= n; ++v)
    (in_targets[v] ? p.targets : p.sources).push_back(v);
  return p;
}

}  // namespace

std::optional<WeaklySplitPartition> is_weakly_split_digraph(const Digraph& d) {
  int n = d.node_count();
  std::vector<int> net = d.net_degrees();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return net[a - 1] > net[b - 1]; });
  // targets receive an arc from every source, so try the nodes of
  // highest net degree first
  for (int k = 1; k < n; ++k) {
    std::vector<char> in_targets(n + 1, 0);
    for (int i = 0; i < k; ++i) in_targets[order[i]] = 1;
    if (valid_source_target_split(d, in_targets))
      return make_directed_partition(in_targets, n);
  }
  if (n <= 16) {
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<char> in_targets(n + 1, 0);
      for (int v = 1; v <= n; ++v)
        if (mask & (1u << (v - 1))) in_targets[v] = 1;
      if (valid_source_target_split(d, in_targets))
        return make_directed_partition(in_targets, n);
    }
  }
  return std::nullopt;
}

bool is_unique_digraph(const Digraph& d) {
  int n = d.node_count();
  if (n <= 2) return true;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        // an independent triple admits a triangle insertion
        if (!d.adjacent(a, b) && !d.adjacent(b, c) && !d.adjacent(a, c))
          return false;
        // a directed triangle admits removal
        bool fwd = d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a);
        bool bwd = d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a);
        if (fwd || bwd) return false;
      }
  for (int u = 1; u <= n; ++u)
    for (int w = 1; w <= n; ++w) {
      if (u == w || !d.has_arc(u, w)) continue;
      for (int v = 1; v <= n; ++v) {
        if (v == u || v == w) continue;
        // an arc with a detached third node admits an expansion
        if (!d.adjacent(u, v) && !d.adjacent(v, w)) return false;
      }
    }
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      for (int w = 1; w <= n; ++w) {
        if (u == v || v == w || u == w) continue;
        // an induced directed 2-path admits a contraction
        if (d.has_arc(u, v) && d.has_arc(v, w) && !d.adjacent(u, w))
          return false;
      }
  return true;
}

bool is_unique_digraph_sequence(const std::vector<int>& d) {
  if (!characterize::is_digraphical(d).feasible) return false;
  return is_unique_digraph(realize::realize_digraph(d));
}

OrderedPartition rank_partition(const Digraph& d) {
  int n = d.node_count();
  std::vector<char> active(n + 1, 1);
  int remaining = n;
  OrderedPartition layers;
  while (remaining > 0) {
    std::vector<int> maximal;
    for (int v = 1; v <= n; ++v) {
      if (!active[v]) continue;
      bool has_out = false;
      for (int u : d.out_neighbors(v))
        if (active[u]) {
          has_out = true;
          break;
        }
      if (!has_out) maximal.push_back(v);
    }
    if (maximal.empty())
      throw NotWidth2Poset("no maximal node among the remaining " +
                           std::to_string(remaining));
    if (maximal.size() > 2)
      throw NotWidth2Poset("maximal layer " + node_set_str(maximal) +
                           " is wider than 2");
    for (int m : maximal) active[m] = 0;
    remaining -= static_cast<int>(maximal.size());
    for (int v = 1; v <= n; ++v) {
      if (!active[v]) continue;
      for (int m : maximal)
        if (!d.has_arc(v, m))
          throw NotWidth2Poset("node " + std::to_string(v) +
                               " has no arc to the maximal node " +
                               std::to_string(m));
    }
    layers.push_back(std::move(maximal));
  }
  return layers;
}

int incomparable_pairs(const Digraph& d) {
  int n = d.node_count();
  int count = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!d.adjacent(u, v)) ++count;
  return count;
}

bool is_unique_bigraph(const Bigraph& b) {
  int n = b.node_count();
  int missing = n * (n - 1) / 2 - static_cast<int>(b.edges().size());
  if (missing > 1) return false;
  for (int v = 1; v <= n; ++v) {
    auto nbrs = b.neighbors(v);
    for (size_t i = 1; i < nbrs.size(); ++i)
      if (b.sign(v, nbrs[i]) != b.sign(v, nbrs[0])) return false;
  }
  return true;
}

bool is_unique_bigraph_sequence(const std::vector<int>& d) {
  auto feasibility = characterize::is_bigraphical(d);
  if (!feasibility.feasible)
    throw NotRealizable("not bigraphical: " + feasibility.witness->describe(),
                        *feasibility.witness);
  int n = static_cast<int>(d.size());
  int low = 0;
  for (int value : d) {
    int mag = std::abs(value);
    if (mag > n - 1 || mag < n - 2) return false;
    if (mag == n - 2) ++low;
  }
  return low <= 2;
}

}  // namespace netdeg::classify
