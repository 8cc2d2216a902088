// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit code is
// the number of failed criteria. Every expectation is pinned exactly;
// the brute-force oracle supplies ground truth.
#include <netdeg/characterize.hpp>
#include <netdeg/classify.hpp>
#include <netdeg/enumerate.hpp>
#include <netdeg/graphs.hpp>
#include <netdeg/ops.hpp>
#include <netdeg/oracle.hpp>
#include <netdeg/realize.hpp>
#include <netdeg/types.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace netdeg;
using ops::OpRecord;
using ops::OpScript;

namespace {

int failures = 0;

void criterion(int id, const char* label,
               const std::function<std::string()>& run) {
  std::string detail;
  try {
    detail = run();
  } catch (const std::exception& e) {
    detail = std::string("unexpected exception: ") + e.what();
  }
  bool ok = detail.empty();
  if (!ok) ++failures;
  std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", id, label,
              ok ? "" : " | ", detail.c_str());
  std::fflush(stdout);
}

std::string fail(const std::string& detail) { return detail; }

template <class F>
void each_vector(int n, int lo, int hi, const F& f) {
  std::vector<int> d(n, lo);
  while (true) {
    f(d);
    int i = 0;
    while (i < n && d[i] == hi) d[i++] = lo;
    if (i == n) break;
    ++d[i];
  }
}

std::string show(const std::vector<int>& d) {
  std::ostringstream out;
  for (size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
  return out.str();
}

// Independent re-check that a refusal witness names a real violation.
bool witness_violates(const std::vector<int>& d,
                      const RealizabilityWitness& w) {
  int n = static_cast<int>(d.size());
  auto in_range = [&](const std::vector<int>& idx) {
    std::set<int> seen;
    for (int i : idx)
      if (i < 1 || i > n || !seen.insert(i).second) return false;
    return true;
  };
  auto sum_at = [&](const std::vector<int>& idx) {
    long long s = 0;
    for (int i : idx) s += d[i - 1];
    return s;
  };
  long long total = 0;
  for (int x : d) total += x;

  using R = RealizabilityWitness::Reason;
  switch (w.reason) {
    case R::odd_sum:
      return total % 2 != 0;
    case R::nonzero_sum:
      return total != 0;
    case R::subset_pair: {
      if (!in_range(w.set_s) || !in_range(w.set_t)) return false;
      for (int i : w.set_s)
        for (int j : w.set_t)
          if (i == j) return false;
      long long s = static_cast<long long>(w.set_s.size());
      long long t = static_cast<long long>(w.set_t.size());
      return sum_at(w.set_s) - sum_at(w.set_t) > s * (n - t - 1);
    }
    case R::subset: {
      if (!in_range(w.set_i)) return false;
      long long k = static_cast<long long>(w.set_i.size());
      return sum_at(w.set_i) > k * (n - k);
    }
    case R::entry_range:
      return w.index >= 1 && w.index <= n &&
             std::abs(static_cast<long long>(d[w.index - 1])) > n - 1;
  }
  return false;
}

std::string check_unique_digraph_counts() {
  std::vector<Count> expect = {1, 1, 3, 12, 66, 450, 3690};
  for (int n = 0; n <= 6; ++n)
    if (enumerate::count_unique_digraph(n) != expect[n])
      return fail("pinned value mismatch at n=" + std::to_string(n));
  for (int n = 0; n <= 25; ++n) {
    Count recurrence = enumerate::count_unique_digraph(n);
    if (recurrence != enumerate::count_unique_digraph_closed_form(n) ||
        recurrence != enumerate::count_unique_digraph_series(n))
      return fail("route disagreement at n=" + std::to_string(n));
  }
  return "";
}

std::string check_digraph_singleton_fibers() {
  for (int n : {3, 4}) {
    auto fibers = test::digraph_fibers(n);
    long long singletons = 0;
    for (const auto& [d, members] : fibers) {
      if (members.size() == 1) ++singletons;
      bool flagged = classify::is_unique_digraph_sequence(d.values);
      if (flagged != (members.size() == 1))
        return fail("uniqueness flag disagrees with fiber size for " +
                    show(d.values));
    }
    if (Count(singletons) != enumerate::count_unique_digraph(n))
      return fail("singleton fiber count at n=" + std::to_string(n) + " is " +
                  std::to_string(singletons));
  }
  return "";
}

std::string check_bidirected_totals() {
  std::vector<long long> expect = {5, 63, 1201};
  for (int n : {2, 3, 4}) {
    size_t observed = oracle::distinct_sequences(n, Kind::bigraph).size();
    if (observed != static_cast<size_t>(expect[n - 2]))
      return fail("oracle total at n=" + std::to_string(n) + " is " +
                  std::to_string(observed));
    if (enumerate::count_bidirected(n) != Count(expect[n - 2]))
      return fail("formula total at n=" + std::to_string(n) + " is off");
  }
  return "";
}

std::string check_directed_totals() {
  if (enumerate::count_directed(3) != 19) return fail("pinned total n=3");
  if (enumerate::count_tight_directed(3) != 12) return fail("pinned tight n=3");
  for (int n = 1; n <= 4; ++n) {
    auto all = oracle::distinct_sequences(n, Kind::digraph);
    if (Count(all.size()) != enumerate::count_directed(n))
      return fail("total vs oracle at n=" + std::to_string(n));
    long long tight = 0;
    for (const DegreeSequence& d : all)
      if (characterize::is_tight_directed(d.values)) ++tight;
    if (Count(tight) != enumerate::count_tight_directed(n))
      return fail("tight vs oracle at n=" + std::to_string(n) + ": oracle " +
                  std::to_string(tight));
  }
  return "";
}

std::string check_undirected_totals() {
  for (int n = 1; n <= 5; ++n) {
    auto all = oracle::distinct_sequences(n, Kind::graph);
    if (Count(all.size()) != enumerate::count_undirected(n))
      return fail("total vs oracle at n=" + std::to_string(n));
    long long tight = 0;
    for (const DegreeSequence& d : all)
      if (characterize::is_tight_undirected(d.values)) ++tight;
    if (n == 1) {
      // Documented degeneracy: the alternating-sum formula reports 2 at
      // n=1 although only one sequence exists (and it is tight).
      if (enumerate::count_tight_undirected(1) != 2)
        return fail("n=1 tight formula changed");
      if (tight != 1) return fail("n=1 oracle tight count is not 1");
      continue;
    }
    if (Count(tight) != enumerate::count_tight_undirected(n))
      return fail("tight vs oracle at n=" + std::to_string(n) + ": oracle " +
                  std::to_string(tight));
    Count interior = Count(static_cast<long long>(all.size()) - tight);
    if (interior != enumerate::count_interior_undirected(n))
      return fail("interior vs oracle at n=" + std::to_string(n));
  }
  return "";
}

std::string check_realizers() {
  for (int n = 1; n <= 5; ++n) {
    std::string bad;
    each_vector(n, -4, 4, [&](const std::vector<int>& d) {
      if (!bad.empty()) return;
      Feasibility g = characterize::is_graphical(d);
      if (g.feasible) {
        if (realize::realize_graph(d).degrees() != d)
          bad = "graph realizer misses " + show(d);
      } else if (!g.witness || !witness_violates(d, *g.witness)) {
        bad = "graph witness invalid for " + show(d);
      }

      Feasibility dg = characterize::is_digraphical(d);
      if (dg.feasible) {
        if (realize::realize_digraph(d).net_degrees() != d)
          bad = "digraph realizer misses " + show(d);
      } else if (!dg.witness || !witness_violates(d, *dg.witness)) {
        bad = "digraph witness invalid for " + show(d);
      }

      Feasibility bg = characterize::is_bigraphical(d);
      if (bg.feasible) {
        if (realize::realize_bigraph(d).net_degrees() != d)
          bad = "bigraph realizer misses " + show(d);
      } else if (!bg.witness || !witness_violates(d, *bg.witness)) {
        bad = "bigraph witness invalid for " + show(d);
      }
    });
    if (!bad.empty()) return fail(bad);
  }
  return "";
}

std::string check_transforms() {
  // undirected: every same-sequence pair, scripts replayed step by step
  for (int n = 2; n <= 5; ++n) {
    for (const auto& [d, members] : test::graph_fibers(n)) {
      for (const Graph& a : members)
        for (const Graph& b : members) {
          OpScript s = ops::transform_graph(a, b);
          Graph cur = a;
          for (const OpRecord& r : s.records) {
            cur = ops::apply(cur, r);
            if (cur.degrees() != d.values)
              return fail("degree drift in a graph script at n=" +
                          std::to_string(n));
          }
          if (canonical_string(cur) != canonical_string(b))
            return fail("graph script misses its target at n=" +
                        std::to_string(n));
        }
    }
  }

  // directed: every same-sequence pair up to n=4
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [d, members] : test::digraph_fibers(n)) {
      for (const Digraph& a : members)
        for (const Digraph& b : members) {
          OpScript s = ops::transform_digraph(a, b);
          Digraph cur = a;
          for (const OpRecord& r : s.records) {
            cur = ops::apply(cur, r);
            if (cur.net_degrees() != d.values)
              return fail("net-degree drift in a digraph script");
          }
          if (canonical_string(cur) != canonical_string(b))
            return fail("digraph script misses its target at n=" +
                        std::to_string(n));
        }
    }
  }

  // bidirected: exhaustive at n=3, then 500 random pairs at n=4 and 5
  long long bigraph_pairs = 0;
  auto run_bigraph_pair = [&](const Bigraph& a, const Bigraph& b) {
    OpScript s = ops::transform_bigraph(a, b);
    std::vector<int> want = a.net_degrees();
    Bigraph cur = a;
    for (const OpRecord& r : s.records) {
      if (std::holds_alternative<ops::Sigma>(r)) return std::string(
          "bigraph script contains a context-dependent record");
      cur = ops::apply(cur, r);
      if (cur.net_degrees() != want)
        return std::string("net-degree drift in a bigraph script");
    }
    if (canonical_string(cur) != canonical_string(b))
      return std::string("bigraph script misses its target");
    ++bigraph_pairs;
    return std::string();
  };

  for (const auto& [d, members] : test::bigraph_fibers(3))
    for (const Bigraph& a : members)
      for (const Bigraph& b : members) {
        std::string bad = run_bigraph_pair(a, b);
        if (!bad.empty()) return fail(bad + " (exhaustive n=3)");
      }
  if (bigraph_pairs != 365)
    return fail("exhaustive n=3 pair count is " +
                std::to_string(bigraph_pairs));

  std::mt19937 rng(20260818);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + trial % 2;
    Bigraph a = test::random_bigraph(rng, n);
    Bigraph b = a;
    if (trial % 2 == 0) {
      // wander through the fiber by random applicable operations
      for (int step = 0; step < 6; ++step) {
        auto moves = ops::applicable_ops(b, OpSet::all(Kind::bigraph));
        if (moves.empty()) break;
        b = moves[rng() % moves.size()].second;
      }
    } else {
      b = realize::realize_bigraph(a.net_degrees());
    }
    std::string bad = run_bigraph_pair(a, b);
    if (!bad.empty())
      return fail(bad + " (random trial " + std::to_string(trial) + ")");
  }
  return "";
}

std::string check_fiber_connectivity() {
  for (int n = 1; n <= 5; ++n)
    for (const DegreeSequence& d : oracle::distinct_sequences(n, Kind::graph)) {
      auto report = oracle::op_graph_connected(d, OpSet::all(Kind::graph));
      if (!report.connected)
        return fail("disconnected graph fiber " + show(d.values));
    }
  for (int n = 1; n <= 4; ++n)
    for (const DegreeSequence& d :
         oracle::distinct_sequences(n, Kind::digraph)) {
      auto report = oracle::op_graph_connected(d, OpSet::all(Kind::digraph));
      if (!report.connected)
        return fail("disconnected digraph fiber " + show(d.values));
    }
  for (int n = 1; n <= 3; ++n)
    for (const DegreeSequence& d :
         oracle::distinct_sequences(n, Kind::bigraph)) {
      auto report = oracle::op_graph_connected(d, OpSet::all(Kind::bigraph));
      if (!report.connected)
        return fail("disconnected bigraph fiber " + show(d.values));
    }
  return "";
}

std::string check_unique_bigraph_counts() {
  std::map<int, long long> expect = {{3, 32}, {4, 112}};
  for (auto [n, value] : expect) {
    long long singletons = 0;
    for (const auto& [d, members] : test::bigraph_fibers(n)) {
      if (members.size() == 1) ++singletons;
      bool flagged = classify::is_unique_bigraph_sequence(d.values);
      if (flagged != (members.size() == 1))
        return fail("uniqueness flag disagrees with fiber size for " +
                    show(d.values));
    }
    if (singletons != value)
      return fail("singleton count at n=" + std::to_string(n) + " is " +
                  std::to_string(singletons));
    if (enumerate::count_unique_bigraph(n) != Count(value))
      return fail("formula at n=" + std::to_string(n) + " is off");
  }

  // Documented restriction: at n=2 every one of the 5 sequences is
  // unique, but the closed form would report 2^2 * (C(2,2)+1) = 8, so
  // the call must refuse.
  long long n2 = 0;
  for (const auto& [d, members] : test::bigraph_fibers(2))
    if (members.size() == 1) ++n2;
  if (n2 != 5) return fail("n=2 singleton count is " + std::to_string(n2));
  try {
    enumerate::count_unique_bigraph(2);
    return fail("n=2 formula call was not refused");
  } catch (const DomainRestricted&) {
  }
  return "";
}

std::string check_rank_partitions() {
  std::vector<long long> expect = {1, 3, 12, 66, 450};
  for (int n = 1; n <= 5; ++n) {
    long long successes = 0, unique = 0;
    std::set<std::string> distinct;
    std::string bad;
    oracle::for_each_digraph(n, [&](const Digraph& d) {
      if (!bad.empty()) return;
      bool flagged = classify::is_unique_digraph(d);
      if (flagged) ++unique;
      classify::OrderedPartition parts;
      try {
        parts = classify::rank_partition(d);
      } catch (const NotWidth2Poset&) {
        if (flagged) bad = "a unique digraph has no rank partition";
        return;
      }
      if (!flagged) {
        bad = "a non-unique digraph got a rank partition";
        return;
      }
      ++successes;
      std::ostringstream key;
      for (const auto& layer : parts) {
        if (layer.empty() || layer.size() > 2) {
          bad = "a layer is empty or wider than 2";
          return;
        }
        key << "|";
        for (int v : layer) key << v << ",";
      }
      distinct.insert(key.str());
      int want_parts = n - classify::incomparable_pairs(d);
      if (static_cast<int>(parts.size()) != want_parts)
        bad = "part count does not equal n minus incomparable pairs";
    });
    if (!bad.empty()) return fail(bad + " at n=" + std::to_string(n));
    if (successes != expect[n - 1])
      return fail("success count at n=" + std::to_string(n) + " is " +
                  std::to_string(successes));
    if (unique != successes)
      return fail("uniqueness and partition counts differ at n=" +
                  std::to_string(n));
    if (static_cast<long long>(distinct.size()) != successes)
      return fail("rank partitions are not injective at n=" +
                  std::to_string(n));
  }
  return "";
}

std::string check_inequality_forms() {
  for (int n = 1; n <= 5; ++n) {
    std::string bad;
    std::vector<int> states(n);
    each_vector(n, -4, 4, [&](const std::vector<int>& d) {
      if (!bad.empty()) return;
      long long total = 0;
      for (int x : d) total += x;

      // undirected: every disjoint pair (S, T) of index sets
      bool expect_graph = total % 2 == 0;
      if (expect_graph) {
        std::fill(states.begin(), states.end(), 0);
        while (expect_graph) {
          long long s = 0, t = 0, sum_s = 0, sum_t = 0;
          for (int i = 0; i < n; ++i) {
            if (states[i] == 1) ++s, sum_s += d[i];
            if (states[i] == 2) ++t, sum_t += d[i];
          }
          if (sum_s - sum_t > s * (n - t - 1)) expect_graph = false;
          int i = 0;
          while (i < n && states[i] == 2) states[i++] = 0;
          if (i == n) break;
          ++states[i];
        }
      }
      if (expect_graph != characterize::is_graphical(d).feasible)
        bad = "undirected forms disagree on " + show(d);

      // directed: every index subset
      bool expect_digraph = total == 0;
      for (int mask = 0; expect_digraph && mask < (1 << n); ++mask) {
        long long k = 0, sum = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) ++k, sum += d[i];
        if (sum > k * (n - k)) expect_digraph = false;
      }
      if (expect_digraph != characterize::is_digraphical(d).feasible)
        bad = "directed forms disagree on " + show(d);

      // bidirected: per-entry magnitude bound
      bool expect_bigraph = total % 2 == 0;
      for (int x : d)
        if (std::abs(x) > n - 1) expect_bigraph = false;
      if (expect_bigraph != characterize::is_bigraphical(d).feasible)
        bad = "bidirected forms disagree on " + show(d);
    });
    if (!bad.empty()) return fail(bad);
  }
  return "";
}

}  // namespace

int main() {
  criterion(1, "unique digraph count routes agree and match pinned values",
            check_unique_digraph_counts);
  criterion(2, "digraph fibers of size one match the unique count",
            check_digraph_singleton_fibers);
  criterion(3, "bidirected sequence totals match the oracle",
            check_bidirected_totals);
  criterion(4, "directed totals and tight counts match the oracle",
            check_directed_totals);
  criterion(5, "undirected totals and tight counts match the oracle",
            check_undirected_totals);
  criterion(6, "realizers round-trip and refusals carry checkable witnesses",
            check_realizers);
  criterion(7, "transform scripts reach their targets through valid steps",
            check_transforms);
  criterion(8, "operation graphs on fibers are connected",
            check_fiber_connectivity);
  criterion(9, "unique bigraph counts match the oracle where the formula applies",
            check_unique_bigraph_counts);
  criterion(10, "rank partitions exist exactly for unique digraphs",
            check_rank_partitions);
  criterion(11, "polynomial recognizers equal their exponential forms",
            check_inequality_forms);
  return failures == 0 ? 0 : 1;
}
