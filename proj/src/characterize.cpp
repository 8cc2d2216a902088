#include "netdeg/characterize.hpp"

#include <algorithm>
#include <numeric>

namespace netdeg::characterize {

namespace {

// 1-based positions ordered by descending value, ties by position.
std::vector<int> descending_positions(const std::vector<int>& d) {
  std::vector<int> idx(d.size());
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return d[a - 1] > d[b - 1]; });
  return idx;
}

std::vector<int> ascending_positions(const std::vector<int>& d) {
  std::vector<int> idx(d.size());
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return d[a - 1] < d[b - 1]; });
  return idx;
}

std::vector<int> take(const std::vector<int>& order, int count) {
  return std::vector<int>(order.begin(), order.begin() + count);
}

long long sum_of(const std::vector<int>& d) {
  return std::accumulate(d.begin(), d.end(), 0LL);
}

// Prefix sums over an index order: out[k] = sum of the first k values.
std::vector<long long> prefix_sums(const std::vector<int>& d,
                                   const std::vector<int>& order) {
  std::vector<long long> out(d.size() + 1, 0);
  for (size_t k = 0; k < order.size(); ++k)
    out[k + 1] = out[k] + d[order[k] - 1];
  return out;
}

}  // namespace

Feasibility is_graphical(const std::vector<int>& d) {
  int n = static_cast<int>(d.size());
  if (sum_of(d) % 2 != 0) {
    RealizabilityWitness w;
    w.kind = Kind::graph;
    w.reason = RealizabilityWitness::Reason::odd_sum;
    return {false, w};
  }
  auto desc = descending_positions(d);
  auto asc = ascending_positions(d);
  auto top = prefix_sums(d, desc);
  auto bottom = prefix_sums(d, asc);
  for (int s = 0; s <= n; ++s)
    for (int t = 0; s + t <= n; ++t)
      if (top[s] - bottom[t] > static_cast<long long>(s) * (n - t - 1)) {
        RealizabilityWitness w;
        w.kind = Kind::graph;
        w.reason = RealizabilityWitness::Reason::subset_pair;
        w.set_s = take(desc, s);
        w.set_t = take(asc, t);
        return {false, w};
      }
  return {true, std::nullopt};
}

Feasibility is_digraphical(const std::vector<int>& d) {
  int n = static_cast<int>(d.size());
  if (sum_of(d) != 0) {
    RealizabilityWitness w;
    w.kind = Kind::digraph;
    w.reason = RealizabilityWitness::Reason::nonzero_sum;
    return {false, w};
  }
  auto desc = descending_positions(d);
  auto top = prefix_sums(d, desc);
  for (int k = 1; k <= n - 1; ++k)
    if (top[k] > static_cast<long long>(k) * (n - k)) {
      RealizabilityWitness w;
      w.kind = Kind::digraph;
      w.reason = RealizabilityWitness::Reason::subset;
      w.set_i = take(desc, k);
      return {false, w};
    }
  return {true, std::nullopt};
}

Feasibility is_bigraphical(const std::vector<int>& d) {
  int n = static_cast<int>(d.size());
  if (sum_of(d) % 2 != 0) {
    RealizabilityWitness w;
    w.kind = Kind::bigraph;
    w.reason = RealizabilityWitness::Reason::odd_sum;
    return {false, w};
  }
  for (int i = 0; i < n; ++i)
    if (std::abs(d[i]) > n - 1) {
      RealizabilityWitness w;
      w.kind = Kind::bigraph;
      w.reason = RealizabilityWitness::Reason::entry_range;
      w.index = i + 1;
      return {false, w};
    }
  return {true, std::nullopt};
}

std::optional<TightnessWitness> is_tight_undirected(const std::vector<int>& d) {
  auto feas = is_graphical(d);
  if (!feas.feasible)
    throw NotRealizable("not graphical: " + feas.witness->describe(),
                        *feas.witness);
  int n = static_cast<int>(d.size());
  auto desc = descending_positions(d);
  auto asc = ascending_positions(d);
  auto top = prefix_sums(d, desc);
  auto bottom = prefix_sums(d, asc);
  for (int s = 0; s <= n; ++s)
    for (int t = (s == 0 ? 1 : 0); s + t <= n; ++t)
      if (top[s] - bottom[t] == static_cast<long long>(s) * (n - t - 1)) {
        TightnessWitness w;
        w.kind = Kind::graph;
        w.set_s = take(desc, s);
        w.set_t = take(asc, t);
        return w;
      }
  return std::nullopt;
}

std::optional<TightnessWitness> is_tight_directed(const std::vector<int>& d) {
  auto feas = is_digraphical(d);
  if (!feas.feasible)
    throw NotRealizable("not digraphical: " + feas.witness->describe(),
                        *feas.witness);
  int n = static_cast<int>(d.size());
  auto desc = descending_positions(d);
  auto top = prefix_sums(d, desc);
  for (int k = 1; k <= n - 1; ++k)
    if (top[k] == static_cast<long long>(k) * (n - k)) {
      TightnessWitness w;
      w.kind = Kind::digraph;
      w.set_i = take(desc, k);
      return w;
    }
  return std::nullopt;
}

std::optional<TightnessWitness> is_tight_bidirected(const std::vector<int>& d) {
  auto feas = is_bigraphical(d);
  if (!feas.feasible)
    throw NotRealizable("not bigraphical: " + feas.witness->describe(),
                        *feas.witness);
  int n = static_cast<int>(d.size());
  for (int i = 0; i < n; ++i)
    if (std::abs(d[i]) == n - 1) {
      TightnessWitness w;
      w.kind = Kind::bigraph;
      w.index = i + 1;
      return w;
    }
  return std::nullopt;
}

}  // namespace netdeg::characterize
