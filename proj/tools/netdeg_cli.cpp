// netdeg: command line front end for the net-degree sequence library.
// Exit codes: 0 = yes / success, 1 = definite no (not realizable, not
// connected, no script), 2 = usage error or an exceeded brute-force
// bound. NETDEG_MAX_N raises the enumeration bounds.
#include <CLI11.hpp>
#include <json.hpp>

#include <netdeg/characterize.hpp>
#include <netdeg/classify.hpp>
#include <netdeg/enumerate.hpp>
#include <netdeg/graphs.hpp>
#include <netdeg/io.hpp>
#include <netdeg/ops.hpp>
#include <netdeg/oracle.hpp>
#include <netdeg/realize.hpp>
#include <netdeg/types.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace netdeg;
using nlohmann::json;

namespace {

bool json_mode = false;
int thread_count = 1;

int env_bound(int fallback) {
  const char* raw = std::getenv("NETDEG_MAX_N");
  if (!raw || !*raw) return fallback;
  size_t used = 0;
  int value = std::stoi(raw, &used);
  if (used != std::string(raw).size() || value < 1)
    throw ParseError("NETDEG_MAX_N must be a positive integer");
  return value;
}

int usage_error(const std::string& cls, const std::string& message) {
  if (json_mode)
    std::cerr << json{{"error", message}, {"class", cls}}.dump() << "\n";
  else
    std::cerr << "error: " << message << "\n";
  return 2;
}

std::string count_str(const Count& c) {
  std::ostringstream out;
  out << c;
  return out.str();
}

Feasibility feasibility(Kind kind, const std::vector<int>& d) {
  switch (kind) {
    case Kind::graph: return characterize::is_graphical(d);
    case Kind::digraph: return characterize::is_digraphical(d);
    case Kind::bigraph: return characterize::is_bigraphical(d);
  }
  throw ParseError("unknown kind");
}

std::optional<TightnessWitness> tightness(Kind kind,
                                          const std::vector<int>& d) {
  switch (kind) {
    case Kind::graph: return characterize::is_tight_undirected(d);
    case Kind::digraph: return characterize::is_tight_directed(d);
    case Kind::bigraph: return characterize::is_tight_bidirected(d);
  }
  throw ParseError("unknown kind");
}

int run_check(const std::string& kind_name, const std::string& seq_text) {
  Kind kind = kind_from_name(kind_name);
  std::vector<int> d = io::parse_sequence(seq_text);
  Feasibility feas = feasibility(kind, d);
  if (json_mode) {
    json out = {{"kind", kind_name},
                {"sequence", d},
                {"realizable", feas.feasible}};
    out["witness"] =
        feas.witness ? json(feas.witness->describe()) : json(nullptr);
    std::cout << out.dump() << "\n";
  } else if (feas.feasible) {
    std::cout << "realizable\n";
  } else {
    std::cout << "not realizable: " << feas.witness->describe() << "\n";
  }
  return feas.feasible ? 0 : 1;
}

int run_realize(const std::string& kind_name, const std::string& seq_text,
                const std::string& out_path) {
  Kind kind = kind_from_name(kind_name);
  std::vector<int> d = io::parse_sequence(seq_text);
  io::AnyGraph result = Graph(1, {});
  try {
    switch (kind) {
      case Kind::graph: result = realize::realize_graph(d); break;
      case Kind::digraph: result = realize::realize_digraph(d); break;
      case Kind::bigraph: result = realize::realize_bigraph(d); break;
    }
  } catch (const NotRealizable& e) {
    if (json_mode)
      std::cout << json{{"kind", kind_name},
                        {"sequence", d},
                        {"realizable", false},
                        {"witness", e.what()}}
                       .dump()
                << "\n";
    else
      std::cout << e.what() << "\n";
    return 1;
  }
  std::string text = io::write_text(result);
  if (!out_path.empty()) io::write_file(out_path, text);
  if (json_mode)
    std::cout << io::to_json(result).dump() << "\n";
  else if (out_path.empty())
    std::cout << text;
  return 0;
}

int run_classify(const std::string& kind_name, const std::string& seq_text) {
  Kind kind = kind_from_name(kind_name);
  std::vector<int> d = io::parse_sequence(seq_text);
  Feasibility feas = feasibility(kind, d);

  json out = {{"kind", kind_name},
              {"sequence", d},
              {"realizable", feas.feasible}};
  if (!feas.feasible) {
    out["witness"] = feas.witness->describe();
    if (json_mode) {
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "realizable: no (" << feas.witness->describe() << ")\n";
    }
    return 1;
  }

  std::optional<TightnessWitness> tight = tightness(kind, d);
  bool unique = false;
  switch (kind) {
    case Kind::graph: unique = classify::is_unique_undirected(d); break;
    case Kind::digraph:
      unique = classify::is_unique_digraph_sequence(d);
      break;
    case Kind::bigraph:
      unique = classify::is_unique_bigraph_sequence(d);
      break;
  }
  out["tight"] = tight.has_value();
  out["tight_witness"] = tight ? json(tight->describe()) : json(nullptr);
  out["unique"] = unique;
  if (json_mode) {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "realizable: yes\n";
    if (tight)
      std::cout << "tight: yes (" << tight->describe() << ")\n";
    else
      std::cout << "tight: no\n";
    std::cout << "unique: " << (unique ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_transform(const std::string& a_path, const std::string& b_path,
                  const std::string& out_path, bool replay_check) {
  io::AnyGraph a = io::parse_any(io::read_file(a_path));
  io::AnyGraph b = io::parse_any(io::read_file(b_path));
  Kind kind = io::kind_of(a);
  if (kind != io::kind_of(b))
    throw ParseError("the two inputs have different kinds");

  auto net = [](const io::AnyGraph& g) {
    if (const Graph* p = std::get_if<Graph>(&g)) return p->degrees();
    if (const Digraph* p = std::get_if<Digraph>(&g)) return p->net_degrees();
    return std::get<Bigraph>(g).net_degrees();
  };
  std::vector<int> want = net(a);
  if (want != net(b)) {
    std::string message = "no script exists: the sequences differ (" +
                          io::format_sequence(want) + " vs " +
                          io::format_sequence(net(b)) + ")";
    if (json_mode)
      std::cout << json{{"script", nullptr}, {"reason", message}}.dump()
                << "\n";
    else
      std::cout << message << "\n";
    return 1;
  }

  ops::OpScript script;
  switch (kind) {
    case Kind::graph:
      script = ops::transform_graph(std::get<Graph>(a), std::get<Graph>(b));
      break;
    case Kind::digraph:
      script = ops::transform_digraph(std::get<Digraph>(a),
                                      std::get<Digraph>(b), env_bound(6));
      break;
    case Kind::bigraph:
      script =
          ops::transform_bigraph(std::get<Bigraph>(a), std::get<Bigraph>(b));
      break;
  }

  if (replay_check) {
    io::AnyGraph state = a;
    for (const ops::OpRecord& r : script.records) {
      std::visit([&](auto& g) { state = ops::apply(g, r); }, state);
      if (net(state) != want) throw Error("replay drifted off the sequence");
    }
    if (io::write_text(state) != io::write_text(b))
      throw Error("replay did not reach the target");
    std::cerr << "replay: ok (" << script.size() << " steps)\n";
  }

  std::string text = ops::write_script_text(script);
  if (!out_path.empty()) io::write_file(out_path, text);
  if (json_mode)
    std::cout << json{{"kind", kind_name(kind)},
                      {"steps", script.size()},
                      {"ops", ops::script_to_json(script)}}
                     .dump()
              << "\n";
  else if (out_path.empty())
    std::cout << text;
  return 0;
}

int run_count(const std::string& kind_name_arg, int n,
              const std::string& what) {
  Kind kind = kind_from_name(kind_name_arg);
  int cap = env_bound(8);
  Count value;
  if (kind == Kind::graph && what == "all")
    value = enumerate::count_undirected(n, cap);
  else if (kind == Kind::graph && what == "tight")
    value = enumerate::count_tight_undirected(n, cap);
  else if (kind == Kind::digraph && what == "all")
    value = enumerate::count_directed(n, cap);
  else if (kind == Kind::digraph && what == "tight")
    value = enumerate::count_tight_directed(n, cap);
  else if (kind == Kind::digraph && what == "unique")
    value = enumerate::count_unique_digraph(n);
  else if (kind == Kind::bigraph && what == "all")
    value = enumerate::count_bidirected(n);
  else if (kind == Kind::bigraph && what == "unique")
    value = enumerate::count_unique_bigraph(n);
  else
    return usage_error("unsupported",
                       "no closed-form count for " + kind_name_arg + " --what " +
                           what + "; try: netdeg oracle count " +
                           kind_name_arg + " " + std::to_string(n) +
                           " --what " + what);
  if (json_mode)
    std::cout << json{{"kind", kind_name_arg},
                      {"n", n},
                      {"what", what},
                      {"count", count_str(value)}}
                     .dump()
              << "\n";
  else
    std::cout << count_str(value) << "\n";
  return 0;
}

// One pass over the enumeration, bucketing realizations by sequence.
std::map<std::vector<int>, long long> oracle_buckets(Kind kind, int n) {
  std::map<std::vector<int>, long long> buckets;
  switch (kind) {
    case Kind::graph:
      for (const Graph& g :
           oracle::enum_graphs(n, env_bound(oracle::kMaxGraphNodes),
                               thread_count))
        ++buckets[g.degrees()];
      break;
    case Kind::digraph:
      for (const Digraph& d :
           oracle::enum_digraphs(n, env_bound(oracle::kMaxDigraphNodes),
                                 thread_count))
        ++buckets[d.net_degrees()];
      break;
    case Kind::bigraph:
      for (const Bigraph& b :
           oracle::enum_bigraphs(n, env_bound(oracle::kMaxBigraphNodes),
                                 thread_count))
        ++buckets[b.net_degrees()];
      break;
  }
  return buckets;
}

int run_oracle_count(const std::string& kind_name_arg, int n,
                     const std::string& what) {
  Kind kind = kind_from_name(kind_name_arg);
  auto buckets = oracle_buckets(kind, n);
  long long value = 0;
  if (what == "all") {
    value = static_cast<long long>(buckets.size());
  } else if (what == "tight") {
    for (const auto& [d, size] : buckets)
      if (tightness(kind, d)) ++value;
  } else if (what == "unique") {
    for (const auto& [d, size] : buckets)
      if (size == 1) ++value;
  } else {
    return usage_error("usage", "unknown --what: " + what);
  }
  if (json_mode)
    std::cout << json{{"kind", kind_name_arg},
                      {"n", n},
                      {"what", what},
                      {"count", value}}
                     .dump()
              << "\n";
  else
    std::cout << value << "\n";
  return 0;
}

int run_oracle_fiber(const std::string& kind_name_arg,
                     const std::string& seq_text) {
  Kind kind = kind_from_name(kind_name_arg);
  std::vector<int> d = io::parse_sequence(seq_text);
  oracle::Fiber f = oracle::fiber({kind, d}, env_bound(0));
  if (json_mode) {
    std::cout << json{{"kind", kind_name_arg},
                      {"sequence", d},
                      {"size", f.size()},
                      {"members", f.members}}
                     .dump()
              << "\n";
  } else {
    std::cout << f.size() << " realization(s)\n";
    for (const std::string& m : f.members) std::cout << m << "\n";
  }
  return f.size() > 0 ? 0 : 1;
}

int run_oracle_connectivity(const std::string& kind_name_arg,
                            const std::string& seq_text) {
  Kind kind = kind_from_name(kind_name_arg);
  std::vector<int> d = io::parse_sequence(seq_text);
  oracle::OpGraphReport report =
      oracle::op_graph_connected({kind, d}, OpSet::all(kind), env_bound(0));
  if (json_mode)
    std::cout << json{{"kind", kind_name_arg},
                      {"sequence", d},
                      {"size", report.size},
                      {"connected", report.connected},
                      {"diameter", report.diameter}}
                     .dump()
              << "\n";
  else
    std::cout << "realizations: " << report.size
              << "\nconnected: " << (report.connected ? "yes" : "no")
              << "\ndiameter: " << report.diameter << "\n";
  return report.connected ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"net-degree sequence toolkit for graphs, digraphs and bigraphs"};
  app.require_subcommand(1);
  app.add_flag("--json", json_mode, "machine-readable output");
  app.add_option("--threads", thread_count, "worker threads for enumeration")
      ->check(CLI::Range(1, 64));

  std::string kind_arg, seq_arg, a_path, b_path, out_path;
  std::string what = "all";
  int n_arg = 0;
  bool replay_check = false;
  int result = 0;

  CLI::App* check = app.add_subcommand("check", "decide realizability");
  check->add_option("kind", kind_arg, "graph, digraph or bigraph")->required();
  check->add_option("sequence", seq_arg, "comma-separated integers")
      ->required();
  check->callback([&] { result = run_check(kind_arg, seq_arg); });

  CLI::App* realize_cmd =
      app.add_subcommand("realize", "construct one realization");
  realize_cmd->add_option("kind", kind_arg)->required();
  realize_cmd->add_option("sequence", seq_arg)->required();
  realize_cmd->add_option("--out", out_path, "write the realization here");
  realize_cmd->callback(
      [&] { result = run_realize(kind_arg, seq_arg, out_path); });

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "report realizability, tightness and uniqueness");
  classify_cmd->add_option("kind", kind_arg)->required();
  classify_cmd->add_option("sequence", seq_arg)->required();
  classify_cmd->callback([&] { result = run_classify(kind_arg, seq_arg); });

  CLI::App* transform = app.add_subcommand(
      "transform", "script of degree-preserving operations from a to b");
  transform->add_option("a", a_path, "first realization file")->required();
  transform->add_option("b", b_path, "second realization file")->required();
  transform->add_option("--out", out_path, "write the script here");
  transform->add_flag("--replay", replay_check,
                      "replay the script and verify every step");
  transform->callback(
      [&] { result = run_transform(a_path, b_path, out_path, replay_check); });

  CLI::App* count = app.add_subcommand("count", "closed-form sequence counts");
  count->add_option("kind", kind_arg)->required();
  count->add_option("n", n_arg, "node count")->required();
  count->add_option("--what", what, "all, tight or unique");
  count->callback([&] { result = run_count(kind_arg, n_arg, what); });

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force enumeration ground truth");
  oracle_cmd->require_subcommand(1);

  CLI::App* ocount = oracle_cmd->add_subcommand("count", "count by listing");
  ocount->add_option("kind", kind_arg)->required();
  ocount->add_option("n", n_arg)->required();
  ocount->add_option("--what", what, "all, tight or unique");
  ocount->callback([&] { result = run_oracle_count(kind_arg, n_arg, what); });

  CLI::App* ofiber =
      oracle_cmd->add_subcommand("fiber", "list every realization");
  ofiber->add_option("kind", kind_arg)->required();
  ofiber->add_option("sequence", seq_arg)->required();
  ofiber->callback([&] { result = run_oracle_fiber(kind_arg, seq_arg); });

  CLI::App* oconn = oracle_cmd->add_subcommand(
      "connectivity", "connectivity of the operation graph on a fiber");
  oconn->add_option("kind", kind_arg)->required();
  oconn->add_option("sequence", seq_arg)->required();
  oconn->callback(
      [&] { result = run_oracle_connectivity(kind_arg, seq_arg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    return usage_error("parse", e.what());
  } catch (const BoundExceeded& e) {
    return usage_error("bound", e.what());
  } catch (const DomainRestricted& e) {
    return usage_error("domain", e.what());
  } catch (const NotRealizable& e) {
    if (json_mode)
      std::cout << json{{"realizable", false}, {"witness", e.what()}}.dump()
                << "\n";
    else
      std::cout << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    return usage_error("error", e.what());
  } catch (const std::exception& e) {
    return usage_error("error", e.what());
  }
  return result;
}
