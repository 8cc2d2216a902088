#ifndef NETDEG_OPS_HPP
#define NETDEG_OPS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "netdeg/graphs.hpp"
#include "netdeg/types.hpp"

namespace netdeg::ops {

// Degree-preserving operation records. Every record names concrete nodes,
// so a script replays deterministically on the graph it was built for.
// Applying a record whose precondition fails throws PreconditionFailed;
// there are no silent no-ops.

// Undirected: remove edges uv, wx; add uw, vx.
struct TwoSwitch {
  int u, v, w, x;

  bool operator==(const TwoSwitch&) const = default;
};

// Directed triangle u1->u2->u3->u1, added or removed.
// add: the three nodes are pairwise non-adjacent.
// remove: exactly those three arcs exist among the nodes.
struct DeltaDigraph {
  bool add;
  int u1, u2, u3;

  bool operator==(const DeltaDigraph&) const = default;
};

// expand: replace arc (u,w) by arcs (u,v),(v,w); v adjacent to neither.
// contract: the reverse.
struct LambdaDigraph {
  bool expand;
  int u, v, w;

  bool operator==(const LambdaDigraph&) const = default;
};

// Swap the signs at v of two of its edge ends; the two signs must differ.
struct Gamma {
  int v;
  std::pair<int, int> e1;
  std::pair<int, int> e2;

  bool operator==(const Gamma&) const = default;
};

// Slide edge {v,u} to {v,w}: v keeps its sign, the new end at w gets
// `sign_at_w`. Changes net degrees at u and w; a building block only.
struct Sigma {
  int v, u, w;
  int sign_at_w;  // +1 or -1

  bool operator==(const Sigma&) const = default;
};

// Bidirected analogue of TwoSwitch: remove edges uv, wx; add uw, vx.
// u keeps its sign from uv, w and x keep theirs from wx, v keeps its
// sign from uv (moved onto vx).
struct BidirTwoSwitch {
  int u, v, w, x;

  bool operator==(const BidirTwoSwitch&) const = default;
};

// expand: replace edge (u,w) by (u,v),(v,w); far ends keep their signs,
// v gets +1 towards u and -1 towards w.
// contract: edges uv, vw present, uw absent, and the two signs at v
// differ; replaces them by uw with the far-end signs kept. Inverting a
// contract re-expands with the canonical signs at v, so edges and net
// degrees round-trip exactly while the sign split at v is normalized.
struct LambdaBigraph {
  bool expand;
  int u, v, w;

  bool operator==(const LambdaBigraph&) const = default;
};

// Bidirected triangle on u1,u2,u3 signed like the directed cycle
// u1->u2->u3->u1 (each edge -1 at its tail, +1 at its head).
// remove: exactly that sign pattern must be present.
struct DeltaBigraph {
  bool add;
  int u1, u2, u3;

  bool operator==(const DeltaBigraph&) const = default;
};

using OpRecord = std::variant<TwoSwitch, DeltaDigraph, LambdaDigraph, Gamma,
                              Sigma, BidirTwoSwitch, LambdaBigraph,
                              DeltaBigraph>;

struct OpScript {
  std::vector<OpRecord> records;

  int size() const { return static_cast<int>(records.size()); }
  bool empty() const { return records.empty(); }
  void append(const OpScript& other);
};

Graph apply_two_switch(const Graph& g, int u, int v, int w, int x);
Digraph apply_delta_digraph(const Digraph& d, int u1, int u2, int u3,
                            bool add);
Digraph apply_lambda_digraph(const Digraph& d, int u, int v, int w,
                             bool expand);
Bigraph apply_gamma(const Bigraph& b, int v, std::pair<int, int> e1,
                    std::pair<int, int> e2);
Bigraph apply_sigma(const Bigraph& b, int v, int u, int w, int sign_at_w);
Bigraph apply_bidirected_two_switch(const Bigraph& b, int u, int v, int w,
                                    int x);
Bigraph apply_lambda_bigraph(const Bigraph& b, int u, int v, int w,
                             bool expand);
Bigraph apply_delta_bigraph(const Bigraph& b, int u1, int u2, int u3,
                            bool add);

Graph apply(const Graph& g, const OpRecord& r);
Digraph apply(const Digraph& d, const OpRecord& r);
Bigraph apply(const Bigraph& b, const OpRecord& r);

Graph replay(const Graph& g, const OpScript& s);
Digraph replay(const Digraph& d, const OpScript& s);
Bigraph replay(const Bigraph& b, const OpScript& s);

// Inverse of a single record. Sigma cannot be inverted without knowing
// the sign it displaced, so the context-free form rejects it.
OpRecord invert(const OpRecord& r);
OpScript invert(const OpScript& s);

// Context-aware inversion: replays from `start` to recover displaced
// Sigma signs. For scripts without Sigma it agrees with invert(s).
OpScript invert(const OpScript& s, const Bigraph& start);

// Script serialization. Text is one op per line, e.g.
//   TWOSWITCH 1 2 3 4
//   BTWOSWITCH 1 2 3 4
//   GAMMA v=3 e1=3-5 e2=3-7
//   SIGMA v=2 old=4 new=6 sign=+
//   LAMBDA+ u=1 v=2 w=3
//   DELTA- 1 2 3 dir=123
// LAMBDA and DELTA lines are shared between directed and bidirected
// scripts, so parsing needs the kind the script applies to.
std::string write_script_text(const OpScript& s);
OpScript parse_script_text(const std::string& text, Kind kind);
nlohmann::json script_to_json(const OpScript& s);
OpScript script_from_json(const nlohmann::json& j, Kind kind);

// All single operations applicable to a state, with the resulting state,
// in a fixed deterministic order.
std::vector<std::pair<OpRecord, Graph>> applicable_ops(const Graph& g);
std::vector<std::pair<OpRecord, Digraph>> applicable_ops(const Digraph& d);
std::vector<std::pair<OpRecord, Bigraph>> applicable_ops(const Bigraph& b,
                                                         const OpSet& ops);

// Gamma-only script turning b into target. The two bigraphs must share
// their underlying graph and their net-degree sequence.
OpScript gamma_transform(const Bigraph& b, const Bigraph& target);

// Edge-disjoint split of the complement of g into simple cycles and
// simple paths, where the path endpoints pair up the nodes of odd
// complement degree. Cycles are node lists (closed implicitly); paths
// are node lists of length >= 2.
struct ComplementDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> paths;
};

ComplementDecomposition decompose_complement(const Graph& g);

// Script that adds the cycle c1..cm (signed like a directed cycle) to b.
// Precondition: m >= 3, nodes distinct, all cycle edges absent.
OpScript add_bidirected_cycle(const Bigraph& b, const std::vector<int>& cycle);

// Script that replaces the edge {p.front(), p.back()} by the path
// p1-p2-...-pk. Endpoint signs survive on the new end edges; interior
// nodes are signed +1 towards the front, -1 towards the back.
// Precondition: k >= 2, nodes distinct, the shortcut edge is present,
// all other path edges absent. k = 2 yields the empty script.
OpScript add_bidirected_path(const Bigraph& b, const std::vector<int>& path);

// Scripts turning one realization into another with the same net-degree
// sequence. Throws PreconditionFailed if the sequences differ.
OpScript transform_graph(const Graph& a, const Graph& b);
// Shortest script via breadth-first search over the fiber; the search
// space is exponential, so n is capped (override with care).
OpScript transform_digraph(const Digraph& a, const Digraph& b,
                           int max_nodes = 6);
OpScript transform_bigraph(const Bigraph& a, const Bigraph& b);

}  // namespace netdeg::ops

#endif
