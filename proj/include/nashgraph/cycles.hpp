#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "nashgraph/graph.hpp"

namespace nashgraph {

// Closed vertex sequence, first vertex repeated at the end and rotated to
// start at the smallest vertex id. A k-cycle has k sequence entries.
struct Cycle {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size(); }
  std::size_t distinct_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool operator==(const Cycle&) const = default;
};

// Components ordered by smallest vertex, vertices sorted inside each.
std::vector<std::vector<VertexId>> tarjan_scc(const Digraph& g);
std::vector<std::vector<VertexId>> tarjan_scc(const BipartiteDigraph& g);

// Johnson's elementary circuit enumeration. The visitor returns false to stop
// early. Every elementary cycle is reported once, in canonical rotation.
void johnson_cycles(const Digraph& g, const std::function<bool(const Cycle&)>& visit);
std::vector<Cycle> johnson_cycles(const Digraph& g);
std::vector<Cycle> johnson_cycles(const BipartiteDigraph& g);

struct CycleBasisEntry {
  std::vector<std::size_t> left_set;   // left vertex indices, sorted
  std::vector<std::size_t> right_set;  // right vertex indices, sorted
  Cycle representative;                // flattened ids
  bool artificial = false;             // representative uses an artificial arc

  std::size_t distinct_count() const { return left_set.size() + right_set.size(); }
  bool operator==(const CycleBasisEntry&) const = default;
};

// One entry per distinct vertex set carried by an elementary cycle. Built
// bottom-up: elementary paths are extended two vertices at a time and keyed by
// (vertex set, endpoint), so each class is admitted together with an explicit
// witness cycle. `max_length` caps the cycle length (sequence entries) and
// defaults to 2 * min(left, right) + 1. Sorted by (size, vertex ids).
std::vector<CycleBasisEntry> cycle_basis(const BipartiteDigraph& g, std::optional<std::size_t> max_length = {});

// Checks that a cycle is closed, elementary, alternating and uses graph arcs.
bool is_valid_cycle(const BipartiteDigraph& g, const Cycle& c);

enum class TreeMode { Gr, Gi };

// Upper bounds on the pure strategies a tree may cover on each side.
struct TreeCaps {
  std::size_t rows;
  std::size_t cols;
};

// Indices refer to the basis the trees were enumerated from. In Gr mode
// `main` is the long cycle and `leaves` are 3-cycles; in Gi mode the members
// main + leaves pairwise share a vertex.
struct SupportTree {
  std::size_t main;
  std::vector<std::size_t> leaves;
};

// Row and column strategies covered by a tree (union of vertex labels).
SupportPair tree_support(const BipartiteDigraph& g, const std::vector<CycleBasisEntry>& basis, const SupportTree& tree);

// Gr mode: every entry alone, plus for each entry and each side, every
// non-empty set of 3-cycle leaves that hang off that side and add distinct new
// vertices on the other side. Gi mode: every entry alone, plus every maximal
// family of pairwise vertex-sharing entries. Trees whose support exceeds the
// caps are skipped. The visitor returns false to stop early.
void enumerate_support_trees(const BipartiteDigraph& g, const std::vector<CycleBasisEntry>& basis, TreeMode mode,
                             TreeCaps caps, const std::function<bool(const SupportTree&)>& visit);

}  // namespace nashgraph
