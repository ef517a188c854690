// Rauzy graphs of a finite word, elementary and small circuits, and the
// injection from power factors into small circuits.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "powfact/classes.hpp"
#include "powfact/word.hpp"

namespace powfact {

// Raised when a computation contradicts one of the verified statements
// (a circuit without the structural shape, a missing injection image, a
// collision). Such a failure is a falsification, not a usage error.
struct FalsificationError : std::logic_error {
  using std::logic_error::logic_error;
};

// The level-l Rauzy graph: vertices are the length-l factors, edges the
// length-(l+1) factors, each edge running from its length-l prefix to its
// length-l suffix. Vertex and edge lists are sorted.
struct RauzyGraph {
  std::size_t level = 0;
  std::vector<Word> vertices;
  std::vector<Word> edges;
};

// Requires 1 <= l <= |w|. At l = |w| the edge set is empty.
RauzyGraph build_rauzy(const Word& w, std::size_t l);

inline Word edge_source(const Word& e) { return e.prefix(e.size() - 1); }
inline Word edge_target(const Word& e) { return e.suffix(e.size() - 1); }

// An elementary circuit: pairwise-distinct vertices and edges forming one
// closed walk. Stored in cycle order starting from the least vertex, so
// circuits equal up to the starting point compare equal.
struct Circuit {
  std::vector<Word> vertices;
  std::vector<Word> edges;
  std::size_t size() const { return vertices.size(); }

  bool operator==(const Circuit&) const = default;
};

// All elementary circuits of g with at most max_size vertices. Self-loops
// are circuits of size 1.
std::vector<Circuit> elementary_circuits(const RauzyGraph& g,
                                         std::size_t max_size);

// Canonical identity of a small circuit: the least rotation q of the
// primitive word describing it, plus the graph level. Its vertex set is
// {p^{level/|p|} : p in [q]} and its edge set {p^{(level+1)/|p|} : p in [q]};
// the circuit size is |q| <= level.
struct SmallCircuit {
  Word q;
  std::size_t level = 0;
  std::size_t size() const { return q.size(); }

  bool operator==(const SmallCircuit&) const = default;
  bool operator<(const SmallCircuit& o) const {
    if (level != o.level) return level < o.level;
    return ShortlexLess{}(q, o.q);
  }
};

// Small circuits found graph-theoretically: elementary circuits of size
// <= l over every level l. Each found circuit is checked against the
// structural shape above; a mismatch would falsify the theory this tool
// verifies, so it aborts with FalsificationError.
std::vector<SmallCircuit> small_circuits_graph(const Word& w);

// The same set enumerated from the structural characterization alone:
// (q, l) is emitted iff every conjugate p of q has p^{(l+1)/|p|} among the
// factors of w. Independent of the graph search; the two must agree.
std::vector<SmallCircuit> small_circuits_structural(const Word& w);

// The small-circuit count against its bound |w| - |Alph(w)|.
struct CircuitBoundReport {
  std::size_t count = 0;
  std::size_t bound = 0;
  bool ok() const { return count <= bound; }
};

CircuitBoundReport small_circuit_bound_check(const Word& w);

// One row of the injection from power factors into small circuits: the t-th
// member (shortlex, 1-based) of the class with canonical word v maps to
// C(v, t + |v| - 1).
struct InjectionEntry {
  Word power;
  SmallCircuit circuit;
};

// The full injection, sorted by power (shortlex). Throws FalsificationError
// if an image circuit is missing from small_circuits_graph(w) or two powers
// collide; either would falsify the injection argument.
std::vector<InjectionEntry> injection_map(const Word& w);

// Graphviz rendering of one Rauzy graph. With highlight_small_circuits the
// vertices and edges lying on small circuits of this level are colored.
std::string to_dot(const RauzyGraph& g, bool highlight_small_circuits = false);

}  // namespace powfact
