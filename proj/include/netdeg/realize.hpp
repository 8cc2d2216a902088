#ifndef NETDEG_REALIZE_HPP
#define NETDEG_REALIZE_HPP

#include <vector>

#include "netdeg/graphs.hpp"
#include "netdeg/types.hpp"

namespace netdeg::realize {

// Build one canonical realization of the sequence, deterministically.
// Throws NotRealizable (carrying a witness) if none exists.

// Greedy: repeatedly take the node with the largest remaining degree
// (ties by smallest id) and connect it to the nodes with the next
// largest remaining degrees (same tie rule).
Graph realize_graph(const std::vector<int>& d);

// Max-flow construction: each node offers max(0,-d_i) units of arc tails
// and demands max(0,d_i) units of arc heads; a unit per ordered pair.
// Antiparallel arc pairs are cancelled afterwards.
Digraph realize_digraph(const std::vector<int>& d);

// Start from the complete graph, then delete a perfect matching on the
// nodes whose entry parity disagrees with n-1 (paired in index order).
// Each node signs its first |d_i| incidences (neighbors ascending) with
// the sign of d_i and alternates +,-,+,... on the rest.
Bigraph realize_bigraph(const std::vector<int>& d);

// Transitive tournament whose net-degree sequence is the perm-indexed
// rearrangement of (-n+1, -n+3, ..., n-1): arc (i,j) iff perm[i] < perm[j]
// (1-based). The identity permutation yields arcs (i,j) for all i < j.
Digraph canonical_tournament(const std::vector<int>& perm);

}  // namespace netdeg::realize

#endif
