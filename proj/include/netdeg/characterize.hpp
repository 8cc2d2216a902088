#ifndef NETDEG_CHARACTERIZE_HPP
#define NETDEG_CHARACTERIZE_HPP

#include <optional>
#include <vector>

#include "netdeg/types.hpp"

namespace netdeg::characterize {

// d is the degree sequence of some simple graph iff the sum is even and
// for every s, t >= 0 with s + t <= n,
//   (sum of the s largest) - (sum of the t smallest) <= s * (n - t - 1).
// On failure the witness carries the lexicographically smallest failing
// (s, t) as index sets taken in sorted order (ties by position).
Feasibility is_graphical(const std::vector<int>& d);

// d is the net-degree sequence of some digraph iff the entries sum to 0
// and for every k in 1..n-1 the k largest entries sum to at most k(n-k).
Feasibility is_digraphical(const std::vector<int>& d);

// d is the net-degree sequence of some bidirected graph iff the sum is
// even and |d_i| <= n-1 for all i.
Feasibility is_bigraphical(const std::vector<int>& d);

// Whether a realizable sequence meets its defining inequalities with
// equality somewhere nontrivial. Returns the first witness in scan order,
// or nullopt for sequences strictly inside every inequality.
// Precondition: d realizable for the respective kind.
std::optional<TightnessWitness> is_tight_undirected(const std::vector<int>& d);
std::optional<TightnessWitness> is_tight_directed(const std::vector<int>& d);
std::optional<TightnessWitness> is_tight_bidirected(const std::vector<int>& d);

}  // namespace netdeg::characterize

#endif
