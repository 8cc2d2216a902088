#include "netdeg/ops.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace netdeg::ops {

namespace {

std::string node_str(int v) { return std::to_string(v); }

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionFailed(message);
}

void require_distinct(std::initializer_list<int> nodes) {
  std::vector<int> v(nodes);
  std::sort(v.begin(), v.end());
  require(std::adjacent_find(v.begin(), v.end()) == v.end(),
          "operation nodes must be distinct");
}

std::pair<int, int> ordered(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

// Mutable edge/sign view of a bigraph, for building the op results.
struct BigraphEdits {
  int n;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> signs;

  explicit BigraphEdits(const Bigraph& b)
      : n(b.node_count()), edges(b.edges()), signs(b.signs()) {}

  void remove(int u, int v) {
    auto key = ordered(u, v);
    auto it = std::find(edges.begin(), edges.end(), key);
    require(it != edges.end(), "edge " + node_str(key.first) + "-" +
                                   node_str(key.second) + " must be present");
    signs.erase(signs.begin() + (it - edges.begin()));
    edges.erase(it);
  }

  // su, sv are the signs at u and at v respectively.
  void add(int u, int v, int su, int sv) {
    if (u > v) {
      std::swap(u, v);
      std::swap(su, sv);
    }
    edges.emplace_back(u, v);
    signs.emplace_back(su, sv);
  }

  void set_sign(int node, int other, int s) {
    auto key = ordered(node, other);
    auto it = std::find(edges.begin(), edges.end(), key);
    require(it != edges.end(), "edge " + node_str(key.first) + "-" +
                                   node_str(key.second) + " must be present");
    auto& pair = signs[it - edges.begin()];
    (node == key.first ? pair.first : pair.second) = s;
  }

  Bigraph build() const { return Bigraph(n, edges, signs); }
};

std::string edge_str(int u, int v) {
  auto [a, b] = ordered(u, v);
  return node_str(a) + "-" + node_str(b);
}

}  // namespace

void OpScript::append(const OpScript& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

Graph apply_two_switch(const Graph& g, int u, int v, int w, int x) {
  require_distinct({u, v, w, x});
  require(g.adjacent(u, v), "edge " + edge_str(u, v) + " must be present");
  require(g.adjacent(w, x), "edge " + edge_str(w, x) + " must be present");
  require(!g.adjacent(u, w), "edge " + edge_str(u, w) + " must be absent");
  require(!g.adjacent(v, x), "edge " + edge_str(v, x) + " must be absent");
  std::vector<std::pair<int, int>> edges = g.edges();
  auto drop = [&](int a, int b) {
    edges.erase(std::find(edges.begin(), edges.end(), ordered(a, b)));
  };
  drop(u, v);
  drop(w, x);
  edges.push_back(ordered(u, w));
  edges.push_back(ordered(v, x));
  return Graph(g.node_count(), std::move(edges));
}

Digraph apply_delta_digraph(const Digraph& d, int u1, int u2, int u3,
                            bool add) {
  require_distinct({u1, u2, u3});
  std::vector<std::pair<int, int>> arcs = d.arcs();
  if (add) {
    require(!d.adjacent(u1, u2) && !d.adjacent(u2, u3) && !d.adjacent(u3, u1),
            "triangle nodes must be pairwise non-adjacent");
    arcs.emplace_back(u1, u2);
    arcs.emplace_back(u2, u3);
    arcs.emplace_back(u3, u1);
  } else {
    require(d.has_arc(u1, u2) && d.has_arc(u2, u3) && d.has_arc(u3, u1),
            "directed triangle " + node_str(u1) + ">" + node_str(u2) + ">" +
                node_str(u3) + ">" + node_str(u1) + " must be present");
    for (auto arc : {std::pair{u1, u2}, {u2, u3}, {u3, u1}})
      arcs.erase(std::find(arcs.begin(), arcs.end(), arc));
  }
  return Digraph(d.node_count(), std::move(arcs));
}

Digraph apply_lambda_digraph(const Digraph& d, int u, int v, int w,
                             bool expand) {
  require_distinct({u, v, w});
  std::vector<std::pair<int, int>> arcs = d.arcs();
  if (expand) {
    require(d.has_arc(u, w), "arc " + node_str(u) + ">" + node_str(w) +
                                 " must be present");
    require(!d.adjacent(u, v) && !d.adjacent(v, w),
            "expansion node " + node_str(v) + " must be adjacent to neither");
    arcs.erase(std::find(arcs.begin(), arcs.end(), std::pair{u, w}));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, w);
  } else {
    require(d.has_arc(u, v) && d.has_arc(v, w),
            "arcs " + node_str(u) + ">" + node_str(v) + ">" + node_str(w) +
                " must be present");
    require(!d.adjacent(u, w), "nodes " + node_str(u) + "," + node_str(w) +
                                   " must be non-adjacent");
    arcs.erase(std::find(arcs.begin(), arcs.end(), std::pair{u, v}));
    arcs.erase(std::find(arcs.begin(), arcs.end(), std::pair{v, w}));
    arcs.emplace_back(u, w);
  }
  return Digraph(d.node_count(), std::move(arcs));
}

Bigraph apply_gamma(const Bigraph& b, int v, std::pair<int, int> e1,
                    std::pair<int, int> e2) {
  e1 = ordered(e1.first, e1.second);
  e2 = ordered(e2.first, e2.second);
  require(e1 != e2, "gamma needs two different edges");
  require(e1.first == v || e1.second == v,
          "edge " + edge_str(e1.first, e1.second) + " must touch node " +
              node_str(v));
  require(e2.first == v || e2.second == v,
          "edge " + edge_str(e2.first, e2.second) + " must touch node " +
              node_str(v));
  int o1 = e1.first == v ? e1.second : e1.first;
  int o2 = e2.first == v ? e2.second : e2.first;
  require(b.adjacent(v, o1), "edge " + edge_str(v, o1) + " must be present");
  require(b.adjacent(v, o2), "edge " + edge_str(v, o2) + " must be present");
  int s1 = b.sign(v, o1);
  int s2 = b.sign(v, o2);
  require(s1 != s2, "signs at " + node_str(v) + " must differ");
  BigraphEdits edits(b);
  edits.set_sign(v, o1, s2);
  edits.set_sign(v, o2, s1);
  return edits.build();
}

Bigraph apply_sigma(const Bigraph& b, int v, int u, int w, int sign_at_w) {
  require_distinct({v, u, w});
  require(sign_at_w == 1 || sign_at_w == -1, "sign must be +1 or -1");
  require(b.adjacent(v, u), "edge " + edge_str(v, u) + " must be present");
  require(!b.adjacent(v, w), "edge " + edge_str(v, w) + " must be absent");
  int pivot_sign = b.sign(v, u);
  BigraphEdits edits(b);
  edits.remove(v, u);
  edits.add(v, w, pivot_sign, sign_at_w);
  return edits.build();
}

Bigraph apply_bidirected_two_switch(const Bigraph& b, int u, int v, int w,
                                    int x) {
  require_distinct({u, v, w, x});
  require(b.adjacent(u, v), "edge " + edge_str(u, v) + " must be present");
  require(b.adjacent(w, x), "edge " + edge_str(w, x) + " must be present");
  require(!b.adjacent(u, w), "edge " + edge_str(u, w) + " must be absent");
  require(!b.adjacent(v, x), "edge " + edge_str(v, x) + " must be absent");
  int at_u = b.sign(u, v);
  int at_v = b.sign(v, u);
  int at_w = b.sign(w, x);
  int at_x = b.sign(x, w);
  BigraphEdits edits(b);
  edits.remove(u, v);
  edits.remove(w, x);
  edits.add(u, w, at_u, at_w);
  edits.add(v, x, at_v, at_x);
  return edits.build();
}

Bigraph apply_lambda_bigraph(const Bigraph& b, int u, int v, int w,
                             bool expand) {
  require_distinct({u, v, w});
  BigraphEdits edits(b);
  if (expand) {
    require(b.adjacent(u, w), "edge " + edge_str(u, w) + " must be present");
    require(!b.adjacent(u, v) && !b.adjacent(v, w),
            "expansion node " + node_str(v) + " must be adjacent to neither");
    int at_u = b.sign(u, w);
    int at_w = b.sign(w, u);
    edits.remove(u, w);
    edits.add(u, v, at_u, +1);
    edits.add(v, w, -1, at_w);
  } else {
    require(b.adjacent(u, v) && b.adjacent(v, w),
            "edges " + edge_str(u, v) + ", " + edge_str(v, w) +
                " must be present");
    require(!b.adjacent(u, w), "edge " + edge_str(u, w) + " must be absent");
    require(b.sign(v, u) != b.sign(v, w),
            "signs at " + node_str(v) + " must differ");
    int at_u = b.sign(u, v);
    int at_w = b.sign(w, v);
    edits.remove(u, v);
    edits.remove(v, w);
    edits.add(u, w, at_u, at_w);
  }
  return edits.build();
}

Bigraph apply_delta_bigraph(const Bigraph& b, int u1, int u2, int u3,
                            bool add) {
  require_distinct({u1, u2, u3});
  BigraphEdits edits(b);
  if (add) {
    require(!b.adjacent(u1, u2) && !b.adjacent(u2, u3) && !b.adjacent(u3, u1),
            "triangle nodes must be pairwise non-adjacent");
    // signed like the directed cycle u1 -> u2 -> u3 -> u1
    edits.add(u1, u2, -1, +1);
    edits.add(u2, u3, -1, +1);
    edits.add(u3, u1, -1, +1);
  } else {
    require(b.adjacent(u1, u2) && b.adjacent(u2, u3) && b.adjacent(u3, u1),
            "triangle edges must be present");
    require(b.sign(u1, u2) == -1 && b.sign(u2, u1) == +1 &&
                b.sign(u2, u3) == -1 && b.sign(u3, u2) == +1 &&
                b.sign(u3, u1) == -1 && b.sign(u1, u3) == +1,
            "triangle must be signed like the cycle " + node_str(u1) + ">" +
                node_str(u2) + ">" + node_str(u3) + ">" + node_str(u1));
    edits.remove(u1, u2);
    edits.remove(u2, u3);
    edits.remove(u3, u1);
  }
  return edits.build();
}

namespace {

template <typename G>
std::vector<int> sequence_of(const G& g);

template <>
std::vector<int> sequence_of(const Graph& g) {
  return g.degrees();
}
template <>
std::vector<int> sequence_of(const Digraph& g) {
  return g.net_degrees();
}
template <>
std::vector<int> sequence_of(const Bigraph& g) {
  return g.net_degrees();
}

// Applies r and verifies the degree sequence is unchanged (Sigma exempt).
template <typename G, typename F>
G checked_apply(const G& g, const OpRecord& r, const F& raw_apply) {
  G result = raw_apply();
  if (!std::holds_alternative<Sigma>(r) &&
      sequence_of(result) != sequence_of(g))
    throw Error("operation changed the degree sequence; applier is broken");
  return result;
}

[[noreturn]] void wrong_kind(const char* kind) {
  throw PreconditionFailed(std::string("record does not apply to a ") + kind);
}

}  // namespace

Graph apply(const Graph& g, const OpRecord& r) {
  if (const auto* ts = std::get_if<TwoSwitch>(&r))
    return checked_apply(g, r, [&] {
      return apply_two_switch(g, ts->u, ts->v, ts->w, ts->x);
    });
  wrong_kind("graph");
}

Digraph apply(const Digraph& d, const OpRecord& r) {
  if (const auto* dd = std::get_if<DeltaDigraph>(&r))
    return checked_apply(d, r, [&] {
      return apply_delta_digraph(d, dd->u1, dd->u2, dd->u3, dd->add);
    });
  if (const auto* ld = std::get_if<LambdaDigraph>(&r))
    return checked_apply(d, r, [&] {
      return apply_lambda_digraph(d, ld->u, ld->v, ld->w, ld->expand);
    });
  wrong_kind("digraph");
}

Bigraph apply(const Bigraph& b, const OpRecord& r) {
  if (const auto* g = std::get_if<Gamma>(&r))
    return checked_apply(b, r,
                         [&] { return apply_gamma(b, g->v, g->e1, g->e2); });
  if (const auto* s = std::get_if<Sigma>(&r))
    return apply_sigma(b, s->v, s->u, s->w, s->sign_at_w);
  if (const auto* ts = std::get_if<BidirTwoSwitch>(&r))
    return checked_apply(b, r, [&] {
      return apply_bidirected_two_switch(b, ts->u, ts->v, ts->w, ts->x);
    });
  if (const auto* lb = std::get_if<LambdaBigraph>(&r))
    return checked_apply(b, r, [&] {
      return apply_lambda_bigraph(b, lb->u, lb->v, lb->w, lb->expand);
    });
  if (const auto* db = std::get_if<DeltaBigraph>(&r))
    return checked_apply(b, r, [&] {
      return apply_delta_bigraph(b, db->u1, db->u2, db->u3, db->add);
    });
  wrong_kind("bigraph");
}

Graph replay(const Graph& g, const OpScript& s) {
  Graph state = g;
  for (const auto& r : s.records) state = (apply)(state, r);
  return state;
}

Digraph replay(const Digraph& d, const OpScript& s) {
  Digraph state = d;
  for (const auto& r : s.records) state = (apply)(state, r);
  return state;
}

Bigraph replay(const Bigraph& b, const OpScript& s) {
  Bigraph state = b;
  for (const auto& r : s.records) state = (apply)(state, r);
  return state;
}

OpRecord invert(const OpRecord& r) {
  if (const auto* ts = std::get_if<TwoSwitch>(&r))
    return TwoSwitch{ts->u, ts->w, ts->v, ts->x};
  if (const auto* dd = std::get_if<DeltaDigraph>(&r))
    return DeltaDigraph{!dd->add, dd->u1, dd->u2, dd->u3};
  if (const auto* ld = std::get_if<LambdaDigraph>(&r))
    return LambdaDigraph{!ld->expand, ld->u, ld->v, ld->w};
  if (const auto* g = std::get_if<Gamma>(&r)) return *g;
  if (std::holds_alternative<Sigma>(r))
    throw PreconditionFailed(
        "sigma records need the start state to invert; use "
        "invert(script, start)");
  if (const auto* bts = std::get_if<BidirTwoSwitch>(&r))
    return BidirTwoSwitch{bts->u, bts->w, bts->v, bts->x};
  if (const auto* lb = std::get_if<LambdaBigraph>(&r))
    return LambdaBigraph{!lb->expand, lb->u, lb->v, lb->w};
  if (const auto* db = std::get_if<DeltaBigraph>(&r))
    return DeltaBigraph{!db->add, db->u1, db->u2, db->u3};
  throw Error("unknown record type");
}

OpScript invert(const OpScript& s) {
  OpScript out;
  out.records.reserve(s.records.size());
  for (auto it = s.records.rbegin(); it != s.records.rend(); ++it)
    out.records.push_back(invert(*it));
  return out;
}

OpScript invert(const OpScript& s, const Bigraph& start) {
  std::vector<OpRecord> inverted;
  inverted.reserve(s.records.size());
  Bigraph state = start;
  for (const auto& r : s.records) {
    if (const auto* sg = std::get_if<Sigma>(&r))
      // the displaced far-end sign is only visible in the pre-state
      inverted.push_back(Sigma{sg->v, sg->w, sg->u, state.sign(sg->u, sg->v)});
    else
      inverted.push_back(invert(r));
    state = (apply)(state, r);
  }
  OpScript out;
  out.records.assign(inverted.rbegin(), inverted.rend());
  return out;
}

namespace {

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

// DELTA node order doubles as the cyclic orientation; ids >= 10 are
// dash-separated to keep the encoding unambiguous.
std::string dir_code(int u1, int u2, int u3) {
  if (u1 < 10 && u2 < 10 && u3 < 10)
    return node_str(u1) + node_str(u2) + node_str(u3);
  return node_str(u1) + "-" + node_str(u2) + "-" + node_str(u3);
}

std::vector<int> parse_dir_code(const std::string& code) {
  std::vector<int> out;
  if (code.find('-') != std::string::npos) {
    std::istringstream in(code);
    std::string part;
    while (std::getline(in, part, '-')) {
      try {
        out.push_back(std::stoi(part));
      } catch (const std::logic_error&) {
        throw ParseError("bad dir code: " + code);
      }
    }
  } else {
    for (char c : code) {
      if (c < '0' || c > '9') throw ParseError("bad dir code: " + code);
      out.push_back(c - '0');
    }
  }
  if (out.size() != 3) throw ParseError("dir code needs three nodes: " + code);
  return out;
}

std::string write_record_text(const OpRecord& r) {
  std::ostringstream out;
  if (const auto* ts = std::get_if<TwoSwitch>(&r))
    out << "TWOSWITCH " << ts->u << " " << ts->v << " " << ts->w << " "
        << ts->x;
  else if (const auto* dd = std::get_if<DeltaDigraph>(&r))
    out << "DELTA" << (dd->add ? "+" : "-") << " " << dd->u1 << " " << dd->u2
        << " " << dd->u3 << " dir=" << dir_code(dd->u1, dd->u2, dd->u3);
  else if (const auto* ld = std::get_if<LambdaDigraph>(&r))
    out << "LAMBDA" << (ld->expand ? "+" : "-") << " u=" << ld->u
        << " v=" << ld->v << " w=" << ld->w;
  else if (const auto* g = std::get_if<Gamma>(&r))
    out << "GAMMA v=" << g->v << " e1=" << g->e1.first << "-" << g->e1.second
        << " e2=" << g->e2.first << "-" << g->e2.second;
  else if (const auto* sg = std::get_if<Sigma>(&r))
    out << "SIGMA v=" << sg->v << " old=" << sg->u << " new=" << sg->w
        << " sign=" << sign_char(sg->sign_at_w);
  else if (const auto* bts = std::get_if<BidirTwoSwitch>(&r))
    out << "BTWOSWITCH " << bts->u << " " << bts->v << " " << bts->w << " "
        << bts->x;
  else if (const auto* lb = std::get_if<LambdaBigraph>(&r))
    out << "LAMBDA" << (lb->expand ? "+" : "-") << " u=" << lb->u
        << " v=" << lb->v << " w=" << lb->w;
  else if (const auto* db = std::get_if<DeltaBigraph>(&r))
    out << "DELTA" << (db->add ? "+" : "-") << " " << db->u1 << " " << db->u2
        << " " << db->u3 << " dir=" << dir_code(db->u1, db->u2, db->u3);
  else
    throw Error("unknown record type");
  return out.str();
}

// "key=value" → value, enforcing the key.
std::string expect_field(std::istringstream& in, const std::string& key) {
  std::string token;
  if (!(in >> token) || token.rfind(key + "=", 0) != 0)
    throw ParseError("expected " + key + "=... field");
  return token.substr(key.size() + 1);
}

int parse_int(const std::string& s) {
  try {
    size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("bad integer: " + s);
    return value;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer: " + s);
  }
}

std::pair<int, int> parse_edge_code(const std::string& s) {
  auto dash = s.find('-', 1);  // skip a possible leading minus
  if (dash == std::string::npos)
    throw ParseError("expected an a-b edge: " + s);
  return {parse_int(s.substr(0, dash)), parse_int(s.substr(dash + 1))};
}

OpRecord parse_record_text(const std::string& line, Kind kind) {
  std::istringstream in(line);
  std::string head;
  in >> head;
  auto finish = [&](OpRecord r) {
    std::string extra;
    if (in >> extra) throw ParseError("trailing tokens: " + line);
    return r;
  };
  if (head == "TWOSWITCH" || head == "BTWOSWITCH") {
    int u, v, w, x;
    if (!(in >> u >> v >> w >> x))
      throw ParseError("bad switch line: " + line);
    if (head == "TWOSWITCH") {
      if (kind != Kind::graph)
        throw ParseError("TWOSWITCH in a " + kind_name(kind) + " script");
      return finish(TwoSwitch{u, v, w, x});
    }
    if (kind != Kind::bigraph)
      throw ParseError("BTWOSWITCH in a " + kind_name(kind) + " script");
    return finish(BidirTwoSwitch{u, v, w, x});
  }
  if (head == "GAMMA") {
    if (kind != Kind::bigraph)
      throw ParseError("GAMMA in a " + kind_name(kind) + " script");
    int v = parse_int(expect_field(in, "v"));
    auto e1 = parse_edge_code(expect_field(in, "e1"));
    auto e2 = parse_edge_code(expect_field(in, "e2"));
    return finish(Gamma{v, e1, e2});
  }
  if (head == "SIGMA") {
    if (kind != Kind::bigraph)
      throw ParseError("SIGMA in a " + kind_name(kind) + " script");
    int v = parse_int(expect_field(in, "v"));
    int u = parse_int(expect_field(in, "old"));
    int w = parse_int(expect_field(in, "new"));
    std::string sign = expect_field(in, "sign");
    if (sign != "+" && sign != "-") throw ParseError("bad sign: " + sign);
    return finish(Sigma{v, u, w, sign == "+" ? +1 : -1});
  }
  if (head == "LAMBDA+" || head == "LAMBDA-") {
    bool expand = head == "LAMBDA+";
    int u = parse_int(expect_field(in, "u"));
    int v = parse_int(expect_field(in, "v"));
    int w = parse_int(expect_field(in, "w"));
    if (kind == Kind::digraph) return finish(LambdaDigraph{expand, u, v, w});
    if (kind == Kind::bigraph) return finish(LambdaBigraph{expand, u, v, w});
    throw ParseError("LAMBDA in a graph script");
  }
  if (head == "DELTA+" || head == "DELTA-") {
    bool add = head == "DELTA+";
    int u1, u2, u3;
    if (!(in >> u1 >> u2 >> u3)) throw ParseError("bad delta line: " + line);
    auto dir = parse_dir_code(expect_field(in, "dir"));
    if (dir != std::vector<int>{u1, u2, u3})
      throw ParseError("dir code disagrees with the node list: " + line);
    if (kind == Kind::digraph) return finish(DeltaDigraph{add, u1, u2, u3});
    if (kind == Kind::bigraph) return finish(DeltaBigraph{add, u1, u2, u3});
    throw ParseError("DELTA in a graph script");
  }
  throw ParseError("unknown op: " + head);
}

}  // namespace

std::string write_script_text(const OpScript& s) {
  std::ostringstream out;
  for (const auto& r : s.records) out << write_record_text(r) << "\n";
  return out.str();
}

OpScript parse_script_text(const std::string& text, Kind kind) {
  OpScript script;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (!(probe >> word)) continue;
    script.records.push_back(parse_record_text(line, kind));
  }
  return script;
}

nlohmann::json script_to_json(const OpScript& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : s.records) {
    if (const auto* ts = std::get_if<TwoSwitch>(&r))
      out.push_back({{"op", "twoswitch"},
                     {"u", ts->u},
                     {"v", ts->v},
                     {"w", ts->w},
                     {"x", ts->x}});
    else if (const auto* dd = std::get_if<DeltaDigraph>(&r))
      out.push_back({{"op", "delta"},
                     {"mode", dd->add ? "add" : "remove"},
                     {"nodes", {dd->u1, dd->u2, dd->u3}}});
    else if (const auto* ld = std::get_if<LambdaDigraph>(&r))
      out.push_back({{"op", "lambda"},
                     {"mode", ld->expand ? "expand" : "contract"},
                     {"u", ld->u},
                     {"v", ld->v},
                     {"w", ld->w}});
    else if (const auto* g = std::get_if<Gamma>(&r))
      out.push_back({{"op", "gamma"},
                     {"v", g->v},
                     {"e1", {g->e1.first, g->e1.second}},
                     {"e2", {g->e2.first, g->e2.second}}});
    else if (const auto* sg = std::get_if<Sigma>(&r))
      out.push_back({{"op", "sigma"},
                     {"v", sg->v},
                     {"old", sg->u},
                     {"new", sg->w},
                     {"sign", sg->sign_at_w}});
    else if (const auto* bts = std::get_if<BidirTwoSwitch>(&r))
      out.push_back({{"op", "btwoswitch"},
                     {"u", bts->u},
                     {"v", bts->v},
                     {"w", bts->w},
                     {"x", bts->x}});
    else if (const auto* lb = std::get_if<LambdaBigraph>(&r))
      out.push_back({{"op", "lambda"},
                     {"mode", lb->expand ? "expand" : "contract"},
                     {"u", lb->u},
                     {"v", lb->v},
                     {"w", lb->w}});
    else if (const auto* db = std::get_if<DeltaBigraph>(&r))
      out.push_back({{"op", "delta"},
                     {"mode", db->add ? "add" : "remove"},
                     {"nodes", {db->u1, db->u2, db->u3}}});
    else
      throw Error("unknown record type");
  }
  return out;
}

OpScript script_from_json(const nlohmann::json& j, Kind kind) {
  if (!j.is_array()) throw ParseError("script JSON must be an array");
  OpScript script;
  try {
    for (const auto& e : j) {
      std::string op = e.at("op").get<std::string>();
      if (op == "twoswitch") {
        if (kind != Kind::graph)
          throw ParseError("twoswitch in a " + kind_name(kind) + " script");
        script.records.push_back(TwoSwitch{e.at("u").get<int>(),
                                           e.at("v").get<int>(),
                                           e.at("w").get<int>(),
                                           e.at("x").get<int>()});
      } else if (op == "btwoswitch") {
        if (kind != Kind::bigraph)
          throw ParseError("btwoswitch in a " + kind_name(kind) + " script");
        script.records.push_back(BidirTwoSwitch{e.at("u").get<int>(),
                                                e.at("v").get<int>(),
                                                e.at("w").get<int>(),
                                                e.at("x").get<int>()});
      } else if (op == "gamma") {
        if (kind != Kind::bigraph)
          throw ParseError("gamma in a " + kind_name(kind) + " script");
        auto& e1 = e.at("e1");
        auto& e2 = e.at("e2");
        script.records.push_back(
            Gamma{e.at("v").get<int>(),
                  {e1.at(0).get<int>(), e1.at(1).get<int>()},
                  {e2.at(0).get<int>(), e2.at(1).get<int>()}});
      } else if (op == "sigma") {
        if (kind != Kind::bigraph)
          throw ParseError("sigma in a " + kind_name(kind) + " script");
        int sign = e.at("sign").get<int>();
        if (sign != 1 && sign != -1)
          throw ParseError("sigma sign must be 1 or -1");
        script.records.push_back(Sigma{e.at("v").get<int>(),
                                       e.at("old").get<int>(),
                                       e.at("new").get<int>(), sign});
      } else if (op == "lambda") {
        std::string mode = e.at("mode").get<std::string>();
        if (mode != "expand" && mode != "contract")
          throw ParseError("bad lambda mode: " + mode);
        bool expand = mode == "expand";
        int u = e.at("u").get<int>();
        int v = e.at("v").get<int>();
        int w = e.at("w").get<int>();
        if (kind == Kind::digraph)
          script.records.push_back(LambdaDigraph{expand, u, v, w});
        else if (kind == Kind::bigraph)
          script.records.push_back(LambdaBigraph{expand, u, v, w});
        else
          throw ParseError("lambda in a graph script");
      } else if (op == "delta") {
        std::string mode = e.at("mode").get<std::string>();
        if (mode != "add" && mode != "remove")
          throw ParseError("bad delta mode: " + mode);
        bool add = mode == "add";
        auto& nodes = e.at("nodes");
        if (!nodes.is_array() || nodes.size() != 3)
          throw ParseError("delta nodes must be a triple");
        int u1 = nodes.at(0).get<int>();
        int u2 = nodes.at(1).get<int>();
        int u3 = nodes.at(2).get<int>();
        if (kind == Kind::digraph)
          script.records.push_back(DeltaDigraph{add, u1, u2, u3});
        else if (kind == Kind::bigraph)
          script.records.push_back(DeltaBigraph{add, u1, u2, u3});
        else
          throw ParseError("delta in a graph script");
      } else {
        throw ParseError("unknown op: " + op);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad script JSON: ") + e.what());
  }
  return script;
}

std::vector<std::pair<OpRecord, Graph>> applicable_ops(const Graph& g) {
  std::vector<std::pair<OpRecord, Graph>> out;
  int n = g.node_count();
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      for (int w = 1; w <= n; ++w)
        for (int x = 1; x <= n; ++x) {
          if (u == v || u == w || u == x || v == w || v == x || w == x)
            continue;
          if (!g.adjacent(u, v) || !g.adjacent(w, x) || g.adjacent(u, w) ||
              g.adjacent(v, x))
            continue;
          TwoSwitch rec{u, v, w, x};
          out.emplace_back(rec, apply_two_switch(g, u, v, w, x));
        }
  return out;
}

std::vector<std::pair<OpRecord, Digraph>> applicable_ops(const Digraph& d) {
  std::vector<std::pair<OpRecord, Digraph>> out;
  int n = d.node_count();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (d.adjacent(a, b) || d.adjacent(b, c) || d.adjacent(c, a)) continue;
        out.emplace_back(DeltaDigraph{true, a, b, c},
                         apply_delta_digraph(d, a, b, c, true));
        out.emplace_back(DeltaDigraph{true, a, c, b},
                         apply_delta_digraph(d, a, c, b, true));
      }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        // a directed triangle on {a,b,c} in either orientation, recorded
        // with the smallest node first
        if (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a))
          out.emplace_back(DeltaDigraph{false, a, b, c},
                           apply_delta_digraph(d, a, b, c, false));
        else if (d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a))
          out.emplace_back(DeltaDigraph{false, a, c, b},
                           apply_delta_digraph(d, a, c, b, false));
      }
  for (int u = 1; u <= n; ++u)
    for (int w = 1; w <= n; ++w) {
      if (u == w || !d.has_arc(u, w)) continue;
      for (int v = 1; v <= n; ++v) {
        if (v == u || v == w || d.adjacent(u, v) || d.adjacent(v, w)) continue;
        out.emplace_back(LambdaDigraph{true, u, v, w},
                         apply_lambda_digraph(d, u, v, w, true));
      }
    }
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      for (int w = 1; w <= n; ++w) {
        if (u == v || v == w || u == w) continue;
        if (!d.has_arc(u, v) || !d.has_arc(v, w) || d.adjacent(u, w)) continue;
        out.emplace_back(LambdaDigraph{false, u, v, w},
                         apply_lambda_digraph(d, u, v, w, false));
      }
  return out;
}

std::vector<std::pair<OpRecord, Bigraph>> applicable_ops(const Bigraph& b,
                                                         const OpSet& ops) {
  std::vector<std::pair<OpRecord, Bigraph>> out;
  int n = b.node_count();
  if (ops.gamma)
    for (int v = 1; v <= n; ++v) {
      auto nbrs = b.neighbors(v);
      for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
          if (b.sign(v, nbrs[i]) == b.sign(v, nbrs[j])) continue;
          Gamma rec{v, ordered(v, nbrs[i]), ordered(v, nbrs[j])};
          out.emplace_back(rec, apply_gamma(b, rec.v, rec.e1, rec.e2));
        }
    }
  if (ops.bidir_two_switch)
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w)
          for (int x = 1; x <= n; ++x) {
            if (u == v || u == w || u == x || v == w || v == x || w == x)
              continue;
            if (!b.adjacent(u, v) || !b.adjacent(w, x) || b.adjacent(u, w) ||
                b.adjacent(v, x))
              continue;
            out.emplace_back(BidirTwoSwitch{u, v, w, x},
                             apply_bidirected_two_switch(b, u, v, w, x));
          }
  if (ops.lambda) {
    for (int u = 1; u <= n; ++u)
      for (int w = 1; w <= n; ++w) {
        if (u == w || !b.adjacent(u, w)) continue;
        for (int v = 1; v <= n; ++v) {
          if (v == u || v == w || b.adjacent(u, v) || b.adjacent(v, w))
            continue;
          out.emplace_back(LambdaBigraph{true, u, v, w},
                           apply_lambda_bigraph(b, u, v, w, true));
        }
      }
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w) {
          if (u == v || v == w || u == w) continue;
          if (!b.adjacent(u, v) || !b.adjacent(v, w) || b.adjacent(u, w))
            continue;
          if (b.sign(v, u) == b.sign(v, w)) continue;
          out.emplace_back(LambdaBigraph{false, u, v, w},
                           apply_lambda_bigraph(b, u, v, w, false));
        }
  }
  if (ops.delta) {
    for (int a = 1; a <= n; ++a)
      for (int c = a + 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e) {
          if (b.adjacent(a, c) || b.adjacent(c, e) || b.adjacent(e, a))
            continue;
          out.emplace_back(DeltaBigraph{true, a, c, e},
                           apply_delta_bigraph(b, a, c, e, true));
          out.emplace_back(DeltaBigraph{true, a, e, c},
                           apply_delta_bigraph(b, a, e, c, true));
        }
    auto directed_cycle = [&](int a, int c, int e) {
      return b.sign(a, c) == -1 && b.sign(c, a) == +1 && b.sign(c, e) == -1 &&
             b.sign(e, c) == +1 && b.sign(e, a) == -1 && b.sign(a, e) == +1;
    };
    for (int a = 1; a <= n; ++a)
      for (int c = a + 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e) {
          if (!b.adjacent(a, c) || !b.adjacent(c, e) || !b.adjacent(e, a))
            continue;
          if (directed_cycle(a, c, e))
            out.emplace_back(DeltaBigraph{false, a, c, e},
                             apply_delta_bigraph(b, a, c, e, false));
          else if (directed_cycle(a, e, c))
            out.emplace_back(DeltaBigraph{false, a, e, c},
                             apply_delta_bigraph(b, a, e, c, false));
        }
  }
  return out;
}

OpScript gamma_transform(const Bigraph& b, const Bigraph& target) {
  require(b.node_count() == target.node_count() &&
              b.edges() == target.edges(),
          "underlying graphs must coincide");
  require(b.net_degrees() == target.net_degrees(),
          "net-degree sequences must coincide");
  OpScript script;
  for (int v = 1; v <= b.node_count(); ++v) {
    std::vector<int> plus_to_minus, minus_to_plus;  // neighbors, sorted
    for (int other : b.neighbors(v)) {
      int have = b.sign(v, other);
      int want = target.sign(v, other);
      if (have == +1 && want == -1) plus_to_minus.push_back(other);
      if (have == -1 && want == +1) minus_to_plus.push_back(other);
    }
    if (plus_to_minus.size() != minus_to_plus.size())
      throw Error("per-node sign imbalance despite equal net degrees");
    for (size_t i = 0; i < plus_to_minus.size(); ++i)
      script.records.push_back(Gamma{v, ordered(v, plus_to_minus[i]),
                                     ordered(v, minus_to_plus[i])});
  }
  return script;
}

ComplementDecomposition decompose_complement(const Graph& g) {
  int n = g.node_count();
  // remaining edges of the complement
  std::vector<std::vector<char>> left(n + 1, std::vector<char>(n + 1, 0));
  std::vector<int> deg(n + 1, 0);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!g.adjacent(u, v)) {
        left[u][v] = left[v][u] = 1;
        ++deg[u];
        ++deg[v];
      }
  auto walk_from = [&](int start) {
    std::vector<int> trail{start};
    int at = start;
    while (deg[at] > 0) {
      int next = -1;
      for (int cand = 1; cand <= n; ++cand)
        if (left[at][cand]) {
          next = cand;
          break;
        }
      left[at][next] = left[next][at] = 0;
      --deg[at];
      --deg[next];
      trail.push_back(next);
      at = next;
    }
    return trail;
  };
  ComplementDecomposition out;
  // a trail may revisit nodes; peel off simple cycles so every reported
  // piece is simple
  auto split_trail = [&](const std::vector<int>& trail) {
    std::vector<int> stack;
    std::vector<int> depth(n + 1, -1);
    for (int node : trail) {
      if (depth[node] >= 0) {
        std::vector<int> cycle(stack.begin() + depth[node], stack.end());
        out.cycles.push_back(cycle);
        for (size_t k = depth[node] + 1; k < stack.size(); ++k)
          depth[stack[k]] = -1;
        stack.resize(depth[node] + 1);
      } else {
        depth[node] = static_cast<int>(stack.size());
        stack.push_back(node);
      }
    }
    for (int node : stack) depth[node] = -1;
    return stack;  // the simple remainder of the trail
  };
  // paths first: each maximal trail from an odd node ends at another odd
  // node, and the two become a matched endpoint pair
  while (true) {
    int start = 0;
    for (int v = 1; v <= n && !start; ++v)
      if (deg[v] % 2 == 1) start = v;
    if (!start) break;
    auto rest = split_trail(walk_from(start));
    if (rest.size() < 2) throw Error("odd-degree trail collapsed to a point");
    out.paths.push_back(rest);
  }
  // the remainder has all degrees even: closed trails only
  while (true) {
    int start = 0;
    for (int v = 1; v <= n && !start; ++v)
      if (deg[v] > 0) start = v;
    if (!start) break;
    auto rest = split_trail(walk_from(start));
    // a closed trail collapses to its start node once all cycles are out
    if (rest.size() != 1) throw Error("closed trail left a path behind");
  }
  return out;
}

namespace {

// Shared by the cycle and path builders: run the expand recursion on a
// live state, then align signs to the target with gammas.
struct LiveBigraph {
  Bigraph state;
  OpScript script;

  void run(const OpRecord& r) {
    state = (apply)(state, r);
    script.records.push_back(r);
  }
};

void build_cycle(LiveBigraph& live, std::vector<int> c);

// Replaces the present edge (p.front(), p.back()) by the path p.
void build_path(LiveBigraph& live, std::vector<int> p) {
  int k = static_cast<int>(p.size());
  if (k == 2) return;
  for (int i = 0; i + 2 < k; ++i)
    if (!live.state.adjacent(p[i], p[i + 2])) {
      std::vector<int> shorter = p;
      shorter.erase(shorter.begin() + i + 1);
      build_path(live, shorter);
      live.run(LambdaBigraph{true, p[i], p[i + 1], p[i + 2]});
      return;
    }
  // all shortcuts (p_i, p_{i+2}) present: expand them pairwise, then
  // recurse on the even-indexed nodes to restore them
  std::vector<int> reduced;
  for (int j = 1; 2 * j <= k - 1; ++j)
    live.run(LambdaBigraph{true, p[2 * j - 2], p[2 * j - 1], p[2 * j]});
  for (int i = 0; i < k; i += 2) reduced.push_back(p[i]);
  if (k % 2 == 0) reduced.push_back(p[k - 1]);
  if (reduced.size() >= 2) build_path(live, reduced);
}

void build_cycle(LiveBigraph& live, std::vector<int> c) {
  int m = static_cast<int>(c.size());
  if (m == 3) {
    live.run(DeltaBigraph{true, c[0], c[1], c[2]});
    return;
  }
  for (int i = 0; i + 1 < m; ++i) {
    int a = c[i], mid = c[i + 1], z = c[(i + 2) % m];
    if (!live.state.adjacent(a, z)) {
      std::vector<int> shorter = c;
      shorter.erase(shorter.begin() + i + 1);
      build_cycle(live, shorter);
      live.run(LambdaBigraph{true, a, mid, z});
      return;
    }
  }
  if (m == 4) {
    live.run(LambdaBigraph{true, c[0], c[1], c[2]});
    live.run(DeltaBigraph{true, c[0], c[2], c[3]});
    return;
  }
  // m >= 5, all short chords present: expand every other chord, then
  // close up the even-indexed half cycle
  for (int j = 1; 2 * j <= m; ++j)
    live.run(LambdaBigraph{true, c[2 * j - 2], c[2 * j - 1], c[2 * j % m]});
  std::vector<int> reduced;
  for (int i = 0; i < m; i += 2) reduced.push_back(c[i]);
  build_cycle(live, reduced);
}

// b with the cycle added on top, signed like a directed cycle.
Bigraph with_cycle(const Bigraph& b, const std::vector<int>& c) {
  BigraphEdits edits(b);
  int m = static_cast<int>(c.size());
  for (int i = 0; i < m; ++i) edits.add(c[i], c[(i + 1) % m], -1, +1);
  return edits.build();
}

// b with the edge (p.front(), p.back()) replaced by the path p; the
// endpoint signs carry over, interior nodes cancel.
Bigraph with_path(const Bigraph& b, const std::vector<int>& p) {
  int k = static_cast<int>(p.size());
  int s_front = b.sign(p.front(), p.back());
  int s_back = b.sign(p.back(), p.front());
  BigraphEdits edits(b);
  edits.remove(p.front(), p.back());
  for (int i = 0; i + 1 < k; ++i) {
    int at_left = i == 0 ? s_front : -1;
    int at_right = i + 1 == k - 1 ? s_back : +1;
    edits.add(p[i], p[i + 1], at_left, at_right);
  }
  return edits.build();
}

}  // namespace

OpScript add_bidirected_cycle(const Bigraph& b, const std::vector<int>& cycle) {
  int m = static_cast<int>(cycle.size());
  require(m >= 3, "cycle needs at least three nodes");
  {
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "cycle nodes must be distinct");
  }
  for (int i = 0; i < m; ++i)
    require(!b.adjacent(cycle[i], cycle[(i + 1) % m]),
            "cycle edge " + edge_str(cycle[i], cycle[(i + 1) % m]) +
                " must be absent");
  LiveBigraph live{b, {}};
  build_cycle(live, cycle);
  Bigraph target = with_cycle(b, cycle);
  OpScript fix = gamma_transform(live.state, target);
  live.script.append(fix);
  return live.script;
}

OpScript add_bidirected_path(const Bigraph& b, const std::vector<int>& path) {
  int k = static_cast<int>(path.size());
  require(k >= 2, "path needs at least two nodes");
  {
    std::vector<int> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "path nodes must be distinct");
  }
  require(b.adjacent(path.front(), path.back()),
          "shortcut edge " + edge_str(path.front(), path.back()) +
              " must be present");
  if (k == 2) return {};  // the path edge is the shortcut itself
  for (int i = 0; i + 1 < k; ++i)
    require(!b.adjacent(path[i], path[i + 1]),
            "path edge " + edge_str(path[i], path[i + 1]) +
                " must be absent");
  LiveBigraph live{b, {}};
  build_path(live, path);
  Bigraph target = with_path(b, path);
  OpScript fix = gamma_transform(live.state, target);
  live.script.append(fix);
  return live.script;
}

namespace {

// Degree within the still-active node set.
int active_degree(const Graph& g, int v, const std::vector<char>& active) {
  int deg = 0;
  for (int u : g.neighbors(v))
    if (active[u]) ++deg;
  return deg;
}

// 2-switch script carrying g to the greedy realization of its degree
// sequence: fix the highest-degree node's neighborhood to the greedy
// choice, retire the node, repeat.
OpScript canonicalize_graph(const Graph& start) {
  int n = start.node_count();
  Graph g = start;
  OpScript script;
  std::vector<char> active(n + 1, 1);
  for (int round = 0; round < n; ++round) {
    std::vector<int> rd(n + 1, 0);
    for (int i = 1; i <= n; ++i)
      if (active[i]) rd[i] = active_degree(g, i, active);
    int v = 0;
    for (int i = 1; i <= n; ++i)
      if (active[i] && (v == 0 || rd[i] > rd[v])) v = i;
    if (v == 0 || rd[v] == 0) break;
    // the greedy neighborhood: the rd[v] other active nodes of highest
    // residual degree, ties to smaller index
    std::vector<int> others;
    for (int i = 1; i <= n; ++i)
      if (active[i] && i != v) others.push_back(i);
    std::stable_sort(others.begin(), others.end(),
                     [&](int a, int c) { return rd[a] > rd[c]; });
    std::set<int> want(others.begin(), others.begin() + rd[v]);
    while (true) {
      std::vector<int> have;
      for (int u : g.neighbors(v))
        if (active[u]) have.push_back(u);
      std::set<int> have_set(have.begin(), have.end());
      int w = 0, x = 0;
      for (int cand : others) {
        if (!w && want.count(cand) && !have_set.count(cand)) w = cand;
        if (!x && !want.count(cand) && have_set.count(cand)) x = cand;
      }
      if (!w && !x) break;
      if (!w || !x) throw Error("neighborhood drift during canonicalization");
      // move the v-x edge to v-w; y is a neighbor of w available to x
      int y = 0;
      for (int cand = 1; cand <= n; ++cand) {
        if (!active[cand] || cand == v || cand == x || cand == w) continue;
        if (g.adjacent(w, cand) && !g.adjacent(x, cand)) {
          y = cand;
          break;
        }
      }
      if (!y) throw Error("no pivot despite a degree-sorted target");
      TwoSwitch rec{v, x, w, y};
      g = (apply)(g, OpRecord{rec});
      script.records.push_back(rec);
      // the loop re-derives have/want overlap; each switch fixes one slot
    }
    active[v] = 0;
  }
  return script;
}

}  // namespace

OpScript transform_graph(const Graph& a, const Graph& b) {
  require(a.node_count() == b.node_count() && a.degrees() == b.degrees(),
          "degree sequences must coincide");
  OpScript to_canon_a = canonicalize_graph(a);
  OpScript to_canon_b = canonicalize_graph(b);
  Graph canon_a = replay(a, to_canon_a);
  Graph canon_b = replay(b, to_canon_b);
  if (!(canon_a == canon_b))
    throw Error("canonical forms disagree for equal degree sequences");
  OpScript script = to_canon_a;
  script.append(invert(to_canon_b));
  return script;
}

namespace {

struct SearchSide {
  // canonical string -> (state, parent canonical string + record that
  // led here from the parent); roots have no parent
  std::map<std::string, std::pair<Digraph, std::optional<std::pair<std::string, OpRecord>>>>
      visited;
  std::vector<std::string> frontier;
};

// Path from the side's root to the given state, as applied records.
std::vector<OpRecord> records_to(const SearchSide& side, std::string key) {
  std::vector<OpRecord> backwards;
  while (true) {
    const auto& entry = side.visited.at(key);
    if (!entry.second) break;
    backwards.push_back(entry.second->second);
    key = entry.second->first;
  }
  std::reverse(backwards.begin(), backwards.end());
  return backwards;
}

}  // namespace

OpScript transform_digraph(const Digraph& a, const Digraph& b, int max_nodes) {
  require(a.node_count() == b.node_count() &&
              a.net_degrees() == b.net_degrees(),
          "net-degree sequences must coincide");
  if (a.node_count() > max_nodes)
    throw BoundExceeded("transform search capped at n=" +
                        std::to_string(max_nodes) + ", got n=" +
                        std::to_string(a.node_count()));
  std::string key_a = canonical_string(a);
  std::string key_b = canonical_string(b);
  if (key_a == key_b) return {};
  SearchSide from_a, from_b;
  from_a.visited.emplace(key_a, std::make_pair(a, std::nullopt));
  from_a.frontier.push_back(key_a);
  from_b.visited.emplace(key_b, std::make_pair(b, std::nullopt));
  from_b.frontier.push_back(key_b);
  int depth_a = 0, depth_b = 0;
  // meet node with the smallest combined distance, ties to the smaller key
  size_t best_total = std::numeric_limits<size_t>::max();
  std::string best_mid;
  auto offer = [&](const std::string& key) {
    size_t total =
        records_to(from_a, key).size() + records_to(from_b, key).size();
    if (total < best_total || (total == best_total && key < best_mid)) {
      best_total = total;
      best_mid = key;
    }
  };
  // expand the smaller frontier one full layer at a time; stop once no
  // undiscovered path can beat the best meeting point seen so far
  while (static_cast<size_t>(depth_a + depth_b) < best_total &&
         (!from_a.frontier.empty() || !from_b.frontier.empty())) {
    bool expand_a = !from_a.frontier.empty() &&
                    (from_b.frontier.empty() ||
                     from_a.frontier.size() <= from_b.frontier.size());
    SearchSide& side = expand_a ? from_a : from_b;
    SearchSide& other = expand_a ? from_b : from_a;
    std::vector<std::string> next_frontier;
    std::sort(side.frontier.begin(), side.frontier.end());
    for (const auto& key : side.frontier) {
      Digraph state = side.visited.at(key).first;
      for (auto& [rec, next] : applicable_ops(state)) {
        std::string next_key = canonical_string(next);
        if (side.visited.count(next_key)) continue;
        side.visited.emplace(next_key,
                             std::make_pair(next, std::make_pair(key, rec)));
        next_frontier.push_back(next_key);
        if (other.visited.count(next_key)) offer(next_key);
      }
    }
    side.frontier = std::move(next_frontier);
    (expand_a ? depth_a : depth_b) += 1;
  }
  if (best_total == std::numeric_limits<size_t>::max())
    throw Error("fiber search exhausted without contact");
  OpScript script;
  script.records = records_to(from_a, best_mid);
  OpScript back;
  back.records = records_to(from_b, best_mid);
  script.append(invert(back));
  return script;
}

OpScript transform_bigraph(const Bigraph& a, const Bigraph& b) {
  require(a.node_count() == b.node_count() &&
              a.net_degrees() == b.net_degrees(),
          "net-degree sequences must coincide");
  if (canonical_string(a) == canonical_string(b)) return {};

  // Densify x until its underlying graph misses only a perfect matching
  // on the odd-parity nodes; returns the script and the dense state.
  auto densify = [](const Bigraph& x) {
    auto dec = decompose_complement(x.underlying());
    std::vector<std::vector<int>> cycles = dec.cycles;
    std::vector<std::vector<int>> paths = dec.paths;
    // a path's endpoint pair must not be an edge of another path: roll
    // such a path plus that edge into a cycle and split the other path
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < paths.size() && !changed; ++i) {
        if (paths[i].size() < 3) continue;
        int a0 = paths[i].front(), b0 = paths[i].back();
        for (size_t j = 0; j < paths.size() && !changed; ++j) {
          if (j == i) continue;
          for (size_t e = 0; e + 1 < paths[j].size(); ++e) {
            int p = paths[j][e], q = paths[j][e + 1];
            if ((p == a0 && q == b0) || (p == b0 && q == a0)) {
              cycles.push_back(paths[i]);
              std::vector<int> left(paths[j].begin(),
                                    paths[j].begin() + e + 1);
              std::vector<int> right(paths[j].begin() + e + 1,
                                     paths[j].end());
              if (left.size() < 2 || right.size() < 2)
                throw Error("endpoint pair met a path end");
              paths.erase(paths.begin() + j);
              paths.erase(paths.begin() + (i < j ? i : i - 1));
              paths.push_back(left);
              paths.push_back(right);
              changed = true;
              break;
            }
          }
        }
      }
    }
    LiveBigraph live{x, {}};
    for (const auto& c : cycles) {
      OpScript piece = add_bidirected_cycle(live.state, c);
      live.state = replay(live.state, piece);
      live.script.append(piece);
    }
    for (const auto& p : paths) {
      if (p.size() < 3) continue;  // a lone edge is the matching edge
      OpScript piece = add_bidirected_path(live.state, p);
      live.state = replay(live.state, piece);
      live.script.append(piece);
    }
    return std::make_pair(live.script, live.state);
  };

  auto [script_a, dense_a] = densify(a);
  auto [script_b, dense_b] = densify(b);

  // align the underlying graphs, lifting each 2-switch to a bidirected one
  OpScript align = transform_graph(dense_a.underlying(), dense_b.underlying());
  Bigraph state = dense_a;
  OpScript script = script_a;
  for (const auto& r : align.records) {
    const auto& ts = std::get<TwoSwitch>(r);
    BidirTwoSwitch lifted{ts.u, ts.v, ts.w, ts.x};
    state = (apply)(state, OpRecord{lifted});
    script.records.push_back(lifted);
  }

  OpScript fix = gamma_transform(state, dense_b);
  state = replay(state, fix);
  script.append(fix);
  if (!(state == dense_b)) throw Error("gamma alignment missed the target");

  script.append(invert(script_b));
  return script;
}

}  // namespace netdeg::ops
