#ifndef NETDEG_TYPES_HPP
#define NETDEG_TYPES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace netdeg {

// Arbitrary-precision integer and rational used by all counting code.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Kind { graph, digraph, bigraph };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

// Base of the error hierarchy. Every library failure is one of the
// subclasses below; anything else escaping the library is a bug.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation or query was called on a value that violates its stated
// input contract (bad node id, missing edge, wrong kind, ...).
class PreconditionFailed : public Error {
public:
  explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

class BoundExceeded : public Error {
public:
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

class NotWidth2Poset : public Error {
public:
  explicit NotWidth2Poset(const std::string& what) : Error(what) {}
};

// A query was asked outside the domain where its formula is valid.
class DomainRestricted : public Error {
public:
  explicit DomainRestricted(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Evidence that a sequence is not realizable. Exactly one of the payload
// fields is meaningful, selected by `reason`:
//   odd_sum / nonzero_sum  -> no payload
//   subset_pair            -> set_s, set_t (undirected)
//   subset                 -> set_i (directed)
//   entry_range            -> index (bidirected, |d_index| > n-1)
// All node indices are 1-based positions in the input sequence.
struct RealizabilityWitness {
  enum class Reason { odd_sum, nonzero_sum, subset_pair, subset, entry_range };
  Kind kind = Kind::graph;
  Reason reason = Reason::odd_sum;
  std::vector<int> set_s;
  std::vector<int> set_t;
  std::vector<int> set_i;
  int index = 0;

  std::string describe() const;
};

struct Feasibility {
  bool feasible = false;
  std::optional<RealizabilityWitness> witness;  // present iff not feasible
};

// Where a realizable sequence meets its defining inequalities with equality.
//   undirected -> (set_s, set_t), not both empty
//   directed   -> set_i
//   bidirected -> index with |d_index| = n-1
struct TightnessWitness {
  Kind kind = Kind::graph;
  std::vector<int> set_s;
  std::vector<int> set_t;
  std::vector<int> set_i;
  int index = 0;

  std::string describe() const;
};

class NotRealizable : public Error {
public:
  NotRealizable(const std::string& what, RealizabilityWitness w)
      : Error(what), witness(std::move(w)) {}
  RealizabilityWitness witness;
};

// A degree sequence tagged with the kind of graph it describes.
// values[i] is the degree of node i+1; equality is positional.
struct DegreeSequence {
  Kind kind = Kind::graph;
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  bool operator==(const DegreeSequence&) const = default;
  auto operator<=>(const DegreeSequence&) const = default;
};

// A sequence together with half its entry sum, kept exact.
struct ExtendedSequence {
  std::vector<int> values;
  Rational half_sum;
};

ExtendedSequence extend(const DegreeSequence& d);

// Selects which degree-preserving operations count as single moves when
// exploring a fiber. Defaults cover everything meaningful for the kind.
struct OpSet {
  bool two_switch = false;        // undirected
  bool delta = false;             // directed or bidirected triangle ops
  bool lambda = false;            // directed or bidirected subdivision ops
  bool gamma = false;             // bidirected local sign swaps
  bool bidir_two_switch = false;  // bidirected edge exchange

  static OpSet all(Kind kind);
};

}  // namespace netdeg

#endif
