#ifndef NETDEG_ENUMERATE_HPP
#define NETDEG_ENUMERATE_HPP

#include "netdeg/types.hpp"

namespace netdeg::enumerate {

// Exact counts of distinct degree / net-degree sequences of labelled
// graphs on n nodes. Arbitrary precision throughout; no floating point.

// Exact value a + b*sqrt(3) with rational components.
struct QuadraticIntegerValue {
  Rational a;
  Rational b;

  QuadraticIntegerValue operator+(const QuadraticIntegerValue& o) const;
  QuadraticIntegerValue operator-(const QuadraticIntegerValue& o) const;
  QuadraticIntegerValue operator*(const QuadraticIntegerValue& o) const;
  bool operator==(const QuadraticIntegerValue& o) const = default;
};

// Weighted count of the i-edge subgraphs of K_n in which every
// component has at most one cycle and every cycle is odd; a subgraph
// with c >= 1 cycles weighs 2^(c-1), acyclic ones weigh 1.
// Subset enumeration over C(n,2) edges, hence the cap.
Count quasi_forest_weight(int n, int i, int max_n = 8);

// Forests of K_n with i edges.
Count forest_count(int n, int i, int max_n = 8);

// Sum over i of forest_count(n, i) * m^i: the lattice-point count of
// the m-fold dilation of the permutohedron on n coordinates.
// Negative m is allowed (reciprocity gives interior counts).
Count ehrhart_permutohedron(int n, const Count& m, int max_n = 8);

Count count_undirected(int n, int max_n = 8);
Count count_tight_undirected(int n, int max_n = 8);
// Alternating sum h(n,n') - h(n,n'-1) + ... (sequences strictly inside
// every defining inequality). Complements count_tight_undirected.
Count count_interior_undirected(int n, int max_n = 8);

Count count_directed(int n, int max_n = 8);
Count count_tight_directed(int n, int max_n = 8);

// Sequences with exactly one realization, directed case:
// U(n) = n*U(n-1) + C(n,2)*U(n-2), U(0) = U(1) = 1. Every call also
// evaluates the closed form and the series recurrence below and
// insists all three agree.
Count count_unique_digraph(int n);
// n! * 2 * (sqrt(3)-coordinate of ((1+sqrt(3))/2)^(n+1)), evaluated in
// QuadraticIntegerValue arithmetic; the irrational component of the
// final value must vanish.
Count count_unique_digraph_closed_form(int n);
// n! * u(n) where u(n) = u(n-1) + u(n-2)/2, u(0) = u(1) = 1.
Count count_unique_digraph_series(int n);

// ((2n-1)^n + 1) / 2.
Count count_bidirected(int n);

// 2^n * (C(n,2) + 1). Valid for n >= 3 only; below that the formula
// double-counts sign patterns on zero entries, so the call is refused.
Count count_unique_bigraph(int n);

}  // namespace netdeg::enumerate

#endif
