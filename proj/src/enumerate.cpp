#include "netdeg/enumerate.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace netdeg::enumerate {

QuadraticIntegerValue QuadraticIntegerValue::operator+(
    const QuadraticIntegerValue& o) const {
  return {a + o.a, b + o.b};
}

QuadraticIntegerValue QuadraticIntegerValue::operator-(
    const QuadraticIntegerValue& o) const {
  return {a - o.a, b - o.b};
}

QuadraticIntegerValue QuadraticIntegerValue::operator*(
    const QuadraticIntegerValue& o) const {
  return {a * o.a + 3 * b * o.b, a * o.b + b * o.a};
}

namespace {

Count factorial(int n) {
  Count out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Count as_integer(const Rational& r, const char* label) {
  if (boost::multiprecision::denominator(r) != 1)
    throw Error(std::string(label) + " did not reduce to an integer");
  return Count(boost::multiprecision::numerator(r));
}

// Union-find over 1..n tracking, per component, the two-coloring parity
// and whether the component already carries its one allowed cycle.
// No path compression, so every union undoes in O(1).
struct ParityDsu {
  std::vector<int> parent, size, parity;
  std::vector<char> cyclic;

  explicit ParityDsu(int n)
      : parent(n + 1), size(n + 1, 1), parity(n + 1, 0), cyclic(n + 1, 0) {
    for (int v = 0; v <= n; ++v) parent[v] = v;
  }

  std::pair<int, int> find(int v) const {
    int p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return {v, p};
  }
};

struct RowPair {
  std::vector<Count> h;  // weighted quasi-forest counts by edge count
  std::vector<Count> f;  // forest counts by edge count
};

RowPair compute_rows(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  int m = static_cast<int>(edges.size());
  std::vector<unsigned long long> h(n + 1, 0), f(n + 1, 0);
  ParityDsu dsu(n);
  int cycles = 0;
  auto dfs = [&](auto&& self, int k, int taken) -> void {
    if (k == m) {
      h[taken] += cycles == 0 ? 1ull : 1ull << (cycles - 1);
      if (cycles == 0) f[taken] += 1;
      return;
    }
    self(self, k + 1, taken);  // edge k left out
    auto [u, v] = edges[k];
    auto [ru, pu] = dsu.find(u);
    auto [rv, pv] = dsu.find(v);
    if (ru == rv) {
      // closing a cycle: it must be odd and the first in its component
      if (pu != pv || dsu.cyclic[ru]) return;
      dsu.cyclic[ru] = 1;
      ++cycles;
      self(self, k + 1, taken + 1);
      --cycles;
      dsu.cyclic[ru] = 0;
      return;
    }
    if (dsu.cyclic[ru] && dsu.cyclic[rv]) return;  // two cycles would merge
    if (dsu.size[ru] < dsu.size[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    char root_cyclic = dsu.cyclic[ru];
    dsu.parent[rv] = ru;
    dsu.parity[rv] = pu ^ pv ^ 1;
    dsu.size[ru] += dsu.size[rv];
    dsu.cyclic[ru] |= dsu.cyclic[rv];
    self(self, k + 1, taken + 1);
    dsu.cyclic[ru] = root_cyclic;
    dsu.size[ru] -= dsu.size[rv];
    dsu.parity[rv] = 0;
    dsu.parent[rv] = rv;
  };
  dfs(dfs, 0, 0);
  RowPair rows;
  rows.h.assign(h.begin(), h.end());
  rows.f.assign(f.begin(), f.begin() + std::max(1, n));  // forests: < n edges
  return rows;
}

const RowPair& cached_rows(int n, int max_n, const char* what) {
  if (n < 0) throw PreconditionFailed("node count must be nonnegative");
  if (n > max_n)
    throw BoundExceeded(std::string(what) + " capped at n=" +
                        std::to_string(max_n) + ", got n=" +
                        std::to_string(n));
  static std::map<int, RowPair> cache;
  static std::mutex lock;
  std::scoped_lock guard(lock);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rows(n)).first;
  return it->second;
}

}  // namespace

Count quasi_forest_weight(int n, int i, int max_n) {
  const RowPair& rows = cached_rows(n, max_n, "quasi-forest counting");
  if (i < 0 || i >= static_cast<int>(rows.h.size())) return 0;
  return rows.h[i];
}

Count forest_count(int n, int i, int max_n) {
  const RowPair& rows = cached_rows(n, max_n, "forest counting");
  if (i < 0 || i >= static_cast<int>(rows.f.size())) return 0;
  return rows.f[i];
}

Count ehrhart_permutohedron(int n, const Count& m, int max_n) {
  const RowPair& rows = cached_rows(n, max_n, "permutohedron counting");
  Count total = 0;
  Count power = 1;
  for (const Count& coefficient : rows.f) {
    total += coefficient * power;
    power *= m;
  }
  return total;
}

Count count_undirected(int n, int max_n) {
  const RowPair& rows = cached_rows(n, max_n, "sequence counting");
  Count total = 0;
  for (const Count& value : rows.h) total += value;
  return total;
}

Count count_tight_undirected(int n, int max_n) {
  const RowPair& rows = cached_rows(n, max_n, "sequence counting");
  Count total = 0;
  for (int i = 0; i <= n; ++i)
    if ((n - i) % 2 != 0) total += rows.h[i];
  return 2 * total;
}

Count count_interior_undirected(int n, int max_n) {
  const RowPair& rows = cached_rows(n, max_n, "sequence counting");
  Count total = 0;
  for (int i = 0; i <= n; ++i) {
    if ((n - i) % 2 == 0)
      total += rows.h[i];
    else
      total -= rows.h[i];
  }
  return total;
}

Count count_directed(int n, int max_n) {
  return ehrhart_permutohedron(n, 2, max_n);
}

Count count_tight_directed(int n, int max_n) {
  Count outer = ehrhart_permutohedron(n, 2, max_n);
  Count inner = ehrhart_permutohedron(n, -2, max_n);
  return n % 2 == 0 ? Count(outer + inner) : Count(outer - inner);
}

Count count_unique_digraph_closed_form(int n) {
  if (n < 0) throw PreconditionFailed("node count must be nonnegative");
  QuadraticIntegerValue base{Rational(1, 2), Rational(1, 2)};
  QuadraticIntegerValue power{1, 0};
  for (int i = 0; i <= n; ++i) power = power * base;
  Rational value = 2 * power.b * Rational(factorial(n));
  return as_integer(value, "closed form");
}

Count count_unique_digraph_series(int n) {
  if (n < 0) throw PreconditionFailed("node count must be nonnegative");
  Rational prev = 1, current = 1;  // u(0), u(1)
  for (int i = 2; i <= n; ++i) {
    Rational next = current + prev / 2;
    prev = current;
    current = next;
  }
  Rational value = Rational(factorial(n)) * (n == 0 ? prev : current);
  return as_integer(value, "series value");
}

Count count_unique_digraph(int n) {
  if (n < 0) throw PreconditionFailed("node count must be nonnegative");
  Count prev = 1, current = 1;  // U(0), U(1)
  for (int i = 2; i <= n; ++i) {
    Count next = i * current + Count(i) * (i - 1) / 2 * prev;
    prev = current;
    current = next;
  }
  Count recurrence = n == 0 ? prev : current;
  Count closed = count_unique_digraph_closed_form(n);
  Count series = count_unique_digraph_series(n);
  if (recurrence != closed || recurrence != series)
    throw Error("unique-count routes disagree at n=" + std::to_string(n));
  return recurrence;
}

Count count_bidirected(int n) {
  if (n < 1) throw PreconditionFailed("node count must be positive");
  Count base = 2 * Count(n) - 1;
  return (boost::multiprecision::pow(base, static_cast<unsigned>(n)) + 1) / 2;
}

Count count_unique_bigraph(int n) {
  if (n < 3)
    throw DomainRestricted(
        "the unique-sequence formula over-counts below n=3; use the "
        "brute-force oracle instead");
  Count pairs = Count(n) * (n - 1) / 2;
  return boost::multiprecision::pow(Count(2), static_cast<unsigned>(n)) *
         (pairs + 1);
}

}  // namespace netdeg::enumerate
