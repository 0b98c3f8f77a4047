#include "nashgraph/graph.hpp"

#include <algorithm>
#include <ostream>

namespace nashgraph {

BipartiteDigraph::BipartiteDigraph(std::vector<IndexSet> left, std::vector<IndexSet> right)
    : left_(std::move(left)),
      right_(std::move(right)),
      lr_(left_.size() * right_.size(), ArcKind::None),
      rl_(left_.size() * right_.size(), ArcKind::None) {}

ArcKind BipartiteDigraph::arc(VertexId from, VertexId to) const {
  const std::size_t l = left_.size();
  if (is_left(from) == is_left(to)) return ArcKind::None;
  return is_left(from) ? left_to_right(from, to - l) : right_to_left(from - l, to);
}

std::size_t BipartiteDigraph::arc_count() const {
  std::size_t count = 0;
  for (ArcKind k : lr_) count += k != ArcKind::None;
  for (ArcKind k : rl_) count += k != ArcKind::None;
  return count;
}

std::size_t BipartiteDigraph::artificial_arc_count() const {
  std::size_t count = 0;
  for (ArcKind k : lr_) count += k == ArcKind::Artificial;
  for (ArcKind k : rl_) count += k == ArcKind::Artificial;
  return count;
}

Digraph BipartiteDigraph::flatten() const {
  const std::size_t l = left_.size();
  const std::size_t r = right_.size();
  Digraph d(l + r);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (left_to_right(i, j) != ArcKind::None) d.add_arc(i, l + j);
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < l; ++i) {
      if (right_to_left(j, i) != ArcKind::None) d.add_arc(l + j, i);
    }
  }
  return d;
}

BipartiteDigraph BipartiteDigraph::complete(std::size_t left, std::size_t right) {
  std::vector<IndexSet> lv;
  std::vector<IndexSet> rv;
  for (Index i = 0; i < left; ++i) lv.push_back({i});
  for (Index j = 0; j < right; ++j) rv.push_back({j});
  BipartiteDigraph g(std::move(lv), std::move(rv));
  for (std::size_t i = 0; i < left; ++i) {
    for (std::size_t j = 0; j < right; ++j) {
      g.set_left_to_right(i, j, ArcKind::Real);
      g.set_right_to_left(j, i, ArcKind::Real);
    }
  }
  return g;
}

IndexSet map_indices(const IndexSet& set, const std::vector<Index>& map) {
  if (map.empty()) return set;
  IndexSet out;
  out.reserve(set.size());
  for (Index i : set) out.push_back(map[i]);
  return out;
}

void write_graph(std::ostream& out, const BipartiteDigraph& g, const std::vector<Index>& row_map,
                 const std::vector<Index>& col_map) {
  auto left = [&](std::size_t i) { return "L:" + format_index_set(map_indices(g.left()[i], row_map)); };
  auto right = [&](std::size_t j) { return "R:" + format_index_set(map_indices(g.right()[j], col_map)); };
  for (std::size_t i = 0; i < g.left_size(); ++i) {
    for (std::size_t j = 0; j < g.right_size(); ++j) {
      ArcKind k = g.left_to_right(i, j);
      if (k == ArcKind::None) continue;
      out << left(i) << " -> " << right(j) << (k == ArcKind::Artificial ? " artificial" : "") << '\n';
    }
  }
  for (std::size_t j = 0; j < g.right_size(); ++j) {
    for (std::size_t i = 0; i < g.left_size(); ++i) {
      ArcKind k = g.right_to_left(j, i);
      if (k == ArcKind::None) continue;
      out << right(j) << " -> " << left(i) << (k == ArcKind::Artificial ? " artificial" : "") << '\n';
    }
  }
}

std::vector<IndexSet> subsets_by_size(std::size_t universe, std::size_t max_size) {
  std::vector<IndexSet> out;
  for (std::size_t size = 1; size <= std::min(max_size, universe); ++size) {
    IndexSet pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      out.push_back(pick);
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == universe - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return out;
}

}  // namespace nashgraph
