#ifndef NETDEG_CLASSIFY_HPP
#define NETDEG_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "netdeg/graphs.hpp"
#include "netdeg/types.hpp"

namespace netdeg::classify {

// Ordered list of disjoint nonempty blocks covering 1..n.
using OrderedPartition = std::vector<std::vector<int>>;

// Witness partition for weak splitness. Undirected recognizers fill
// (clique, independent, outside); the directed one fills (sources,
// targets). The unused fields stay empty.
struct WeaklySplitPartition {
  std::vector<int> clique;
  std::vector<int> independent;
  std::vector<int> outside;
  std::vector<int> sources;
  std::vector<int> targets;
};

// --- undirected -----------------------------------------------------

// Threshold test: repeatedly strip a node that is isolated or adjacent
// to everything else (smallest id first). True iff the graph empties.
bool is_threshold(const Graph& g);

// Weights c with (uv an edge iff c_u + c_v > 0), present iff threshold.
std::optional<std::vector<int>> vertex_certificate_undirected(const Graph& g);

// A graphical sequence has exactly one realization iff its canonical
// realization is threshold. Precondition: d graphical.
bool is_unique_undirected(const std::vector<int>& d);

// Partition with `clique` a clique, `independent` an independent set,
// not both empty, and every `outside` node adjacent to all of the
// clique and none of the independent part.
std::optional<WeaklySplitPartition> is_weakly_split_graph(const Graph& g);

// --- directed --------------------------------------------------------

// Partition (sources, targets) with every source->target arc present
// and targets neither empty nor all of [n].
std::optional<WeaklySplitPartition> is_weakly_split_digraph(const Digraph& d);

// A digraph is the only realization of its net-degree sequence iff
// n <= 2 or no single degree-preserving operation applies to it:
// no independent triple, no arc plus a third node non-adjacent to both
// ends, no directed triangle, no induced directed 2-path.
bool is_unique_digraph(const Digraph& d);

// Sequence-level test: realizable with a unique canonical realization.
bool is_unique_digraph_sequence(const std::vector<int>& d);

// Layers obtained by repeatedly removing the set of maximal elements
// (no outgoing arcs), top layer first. Succeeds exactly when every
// layer has size <= 2 and each removed element covers all remaining
// nodes; otherwise throws NotWidth2Poset.
OrderedPartition rank_partition(const Digraph& d);

// Unordered node pairs joined by no arc.
int incomparable_pairs(const Digraph& d);

// --- bidirected ------------------------------------------------------

// Unique realizations are the bigraphs with at most one missing pair
// in which every node is all-positive or all-negative.
bool is_unique_bigraph(const Bigraph& b);

// Sequence-level: n-2 <= |d_i| <= n-1 everywhere with at most two
// entries of magnitude n-2. Precondition: d bigraphical.
bool is_unique_bigraph_sequence(const std::vector<int>& d);

}  // namespace netdeg::classify

#endif
