#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "nashgraph/game.hpp"

namespace nashgraph {

using VertexId = std::size_t;

// Plain digraph on vertices 0..size()-1.
struct Digraph {
  std::vector<std::vector<VertexId>> out;

  explicit Digraph(std::size_t vertices = 0) : out(vertices) {}
  std::size_t size() const { return out.size(); }
  void add_arc(VertexId from, VertexId to) { out[from].push_back(to); }
};

enum class ArcKind : std::uint8_t { None, Real, Artificial };

// Bipartite digraph whose vertices are sets of pure strategies: left vertices
// hold row-player strategies, right vertices column-player strategies.
// Flattened vertex ids put the left side first: left i -> i, right j ->
// left_size() + j. Lower ids come first in the vertex order.
class BipartiteDigraph {
 public:
  BipartiteDigraph(std::vector<IndexSet> left, std::vector<IndexSet> right);

  std::size_t left_size() const { return left_.size(); }
  std::size_t right_size() const { return right_.size(); }
  std::size_t vertex_count() const { return left_.size() + right_.size(); }

  const std::vector<IndexSet>& left() const { return left_; }
  const std::vector<IndexSet>& right() const { return right_; }

  bool is_left(VertexId v) const { return v < left_.size(); }
  // Strategy set held by a flattened vertex.
  const IndexSet& label(VertexId v) const { return is_left(v) ? left_[v] : right_[v - left_.size()]; }

  void set_left_to_right(std::size_t i, std::size_t j, ArcKind kind) { lr_[i * right_.size() + j] = kind; }
  void set_right_to_left(std::size_t j, std::size_t i, ArcKind kind) { rl_[j * left_.size() + i] = kind; }
  ArcKind left_to_right(std::size_t i, std::size_t j) const { return lr_[i * right_.size() + j]; }
  ArcKind right_to_left(std::size_t j, std::size_t i) const { return rl_[j * left_.size() + i]; }

  ArcKind arc(VertexId from, VertexId to) const;
  bool has_arc(VertexId from, VertexId to) const { return arc(from, to) != ArcKind::None; }

  std::size_t arc_count() const;
  std::size_t artificial_arc_count() const;

  // Adjacency lists on flattened ids, neighbours in increasing order.
  Digraph flatten() const;

  // Every left vertex has arcs to and from every right vertex.
  static BipartiteDigraph complete(std::size_t left, std::size_t right);

 private:
  std::vector<IndexSet> left_;
  std::vector<IndexSet> right_;
  std::vector<ArcKind> lr_;
  std::vector<ArcKind> rl_;
};

// One line per arc: "L:{1,2} -> R:{3}" with a trailing " artificial" when
// the arc is artificial. Indices are one-based and pass through the maps
// (row_map for left labels, col_map for right labels) when given.
void write_graph(std::ostream& out, const BipartiteDigraph& g, const std::vector<Index>& row_map = {},
                 const std::vector<Index>& col_map = {});

// Subsets of {0..universe-1} with 1..max_size elements ordered by (size,
// lexicographic).
std::vector<IndexSet> subsets_by_size(std::size_t universe, std::size_t max_size);

IndexSet map_indices(const IndexSet& set, const std::vector<Index>& map);

}  // namespace nashgraph
