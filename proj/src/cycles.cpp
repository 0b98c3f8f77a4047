#include "nashgraph/cycles.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace nashgraph {

namespace {

// Dynamic bitset used for vertex sets and clique search.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  Bits without(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  std::size_t and_count(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  bool operator==(const Bits&) const = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ w) * 1099511628211ULL;
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

struct PathKey {
  Bits set;
  VertexId end;
  bool operator==(const PathKey&) const = default;
};

struct PathKeyHash {
  std::size_t operator()(const PathKey& k) const { return k.set.hash() * 31 + k.end; }
};

class Johnson {
 public:
  Johnson(const Digraph& g, const std::function<bool(const Cycle&)>& visit)
      : g_(g), visit_(visit), blocked_(g.size(), false), blockers_(g.size()), in_component_(g.size(), false) {}

  void run() {
    const std::size_t n = g_.size();
    for (start_ = 0; start_ < n && !stop_; ++start_) {
      Digraph sub(n);
      for (VertexId v = start_; v < n; ++v) {
        for (VertexId w : g_.out[v]) {
          if (w >= start_) sub.add_arc(v, w);
        }
      }
      std::fill(in_component_.begin(), in_component_.end(), false);
      for (const auto& comp : tarjan_scc(sub)) {
        if (std::find(comp.begin(), comp.end(), start_) == comp.end()) continue;
        for (VertexId v : comp) in_component_[v] = true;
      }
      for (VertexId v = start_; v < n; ++v) {
        blocked_[v] = false;
        blockers_[v].clear();
      }
      circuit(start_);
    }
  }

 private:
  bool circuit(VertexId v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[v] = true;
    for (VertexId w : g_.out[v]) {
      if (stop_) break;
      if (w < start_ || !in_component_[w]) continue;
      if (w == start_) {
        Cycle c{stack_};
        c.vertices.push_back(start_);
        if (!visit_(c)) stop_ = true;
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (VertexId w : g_.out[v]) {
        if (w < start_ || !in_component_[w]) continue;
        auto& b = blockers_[w];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
    }
    stack_.pop_back();
    return found;
  }

  void unblock(VertexId u) {
    blocked_[u] = false;
    std::vector<VertexId> waiting;
    waiting.swap(blockers_[u]);
    for (VertexId w : waiting) {
      if (blocked_[w]) unblock(w);
    }
  }

  const Digraph& g_;
  const std::function<bool(const Cycle&)>& visit_;
  std::vector<bool> blocked_;
  std::vector<std::vector<VertexId>> blockers_;
  std::vector<bool> in_component_;
  std::vector<VertexId> stack_;
  VertexId start_ = 0;
  bool stop_ = false;
};

}  // namespace

std::vector<std::vector<VertexId>> tarjan_scc(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> components;
  std::size_t counter = 0;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < g.out[f.v].size()) {
        VertexId w = g.out[f.v][f.next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      VertexId v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::vector<std::vector<VertexId>> tarjan_scc(const BipartiteDigraph& g) { return tarjan_scc(g.flatten()); }

void johnson_cycles(const Digraph& g, const std::function<bool(const Cycle&)>& visit) {
  Johnson(g, visit).run();
}

std::vector<Cycle> johnson_cycles(const Digraph& g) {
  std::vector<Cycle> out;
  johnson_cycles(g, [&](const Cycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<Cycle> johnson_cycles(const BipartiteDigraph& g) { return johnson_cycles(g.flatten()); }

bool is_valid_cycle(const BipartiteDigraph& g, const Cycle& c) {
  const auto& v = c.vertices;
  if (v.size() < 3 || v.front() != v.back()) return false;
  std::vector<VertexId> inner(v.begin(), v.end() - 1);
  std::sort(inner.begin(), inner.end());
  if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] >= g.vertex_count() || !g.has_arc(v[i], v[i + 1])) return false;
  }
  return true;
}

std::vector<CycleBasisEntry> cycle_basis(const BipartiteDigraph& g, std::optional<std::size_t> max_length) {
  const std::size_t l = g.left_size();
  const std::size_t nv = g.vertex_count();
  const std::size_t length_cap = max_length.value_or(2 * std::min(l, g.right_size()) + 1);
  std::vector<CycleBasisEntry> basis;
  if (length_cap < 3) return basis;
  const std::size_t max_distinct = length_cap - 1;
  const Digraph adj = g.flatten();

  struct State {
    PathKey key;
    std::size_t parent;  // index in the previous level
    bool artificial;
  };
  struct Closure {
    std::size_t state;
    bool artificial;
  };

  // Every cycle contains a left vertex, and left ids precede right ids, so
  // the smallest vertex of a cycle is always on the left.
  for (VertexId start = 0; start < l; ++start) {
    std::vector<std::vector<State>> levels;
    Bits seed(nv);
    seed.set(start);
    levels.push_back({State{{seed, start}, 0, false}});

    for (std::size_t depth = 1; depth < max_distinct && !levels.back().empty(); ++depth) {
      const auto& current = levels.back();
      std::vector<State> next;
      std::unordered_map<PathKey, std::size_t, PathKeyHash> seen;
      for (std::size_t si = 0; si < current.size(); ++si) {
        const State& st = current[si];
        for (VertexId w : adj.out[st.key.end]) {
          if (w <= start || st.key.set.test(w)) continue;
          const bool artificial = st.artificial || g.arc(st.key.end, w) == ArcKind::Artificial;
          PathKey key{st.key.set, w};
          key.set.set(w);
          auto [it, inserted] = seen.try_emplace(key, next.size());
          if (inserted) {
            next.push_back({std::move(key), si, artificial});
          } else if (next[it->second].artificial && !artificial) {
            next[it->second].parent = si;
            next[it->second].artificial = false;
          }
        }
      }
      levels.push_back(std::move(next));

      // Paths with an even vertex count end on the right side.
      if ((depth + 1) % 2 != 0) continue;
      const auto& closing = levels.back();
      std::unordered_map<Bits, Closure, BitsHash> found;
      std::vector<const Bits*> order;
      for (std::size_t si = 0; si < closing.size(); ++si) {
        const State& st = closing[si];
        ArcKind back = g.arc(st.key.end, start);
        if (back == ArcKind::None) continue;
        const bool artificial = st.artificial || back == ArcKind::Artificial;
        auto [it, inserted] = found.try_emplace(st.key.set, Closure{si, artificial});
        if (inserted) {
          order.push_back(&it->first);
        } else if (it->second.artificial && !artificial) {
          it->second = Closure{si, false};
        }
      }
      for (const Bits* set : order) {
        const Closure& cl = found.at(*set);
        CycleBasisEntry entry;
        set->for_each([&](std::size_t v) {
          if (v < l) {
            entry.left_set.push_back(v);
          } else {
            entry.right_set.push_back(v - l);
          }
        });
        std::vector<VertexId> path;
        std::size_t idx = cl.state;
        for (std::size_t d = levels.size(); d-- > 0;) {
          const State& st = levels[d][idx];
          path.push_back(st.key.end);
          idx = st.parent;
        }
        std::reverse(path.begin(), path.end());
        path.push_back(start);
        entry.representative.vertices = std::move(path);
        entry.artificial = cl.artificial;
        basis.push_back(std::move(entry));
      }
    }
  }

  auto ids = [l](const CycleBasisEntry& e) {
    std::vector<VertexId> v(e.left_set.begin(), e.left_set.end());
    for (auto r : e.right_set) v.push_back(l + r);
    return v;
  };
  std::sort(basis.begin(), basis.end(), [&](const CycleBasisEntry& a, const CycleBasisEntry& b) {
    if (a.distinct_count() != b.distinct_count()) return a.distinct_count() < b.distinct_count();
    return ids(a) < ids(b);
  });
  return basis;
}

SupportPair tree_support(const BipartiteDigraph& g, const std::vector<CycleBasisEntry>& basis, const SupportTree& tree) {
  IndexSet rows;
  IndexSet cols;
  auto absorb = [&](const CycleBasisEntry& e) {
    for (auto i : e.left_set) rows.insert(rows.end(), g.left()[i].begin(), g.left()[i].end());
    for (auto j : e.right_set) cols.insert(cols.end(), g.right()[j].begin(), g.right()[j].end());
  };
  absorb(basis[tree.main]);
  for (auto leaf : tree.leaves) absorb(basis[leaf]);
  for (IndexSet* s : {&rows, &cols}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  return {std::move(rows), std::move(cols)};
}

namespace {

bool within(const SupportPair& sp, TreeCaps caps) { return sp.rows.size() <= caps.rows && sp.cols.size() <= caps.cols; }

bool enumerate_gr(const BipartiteDigraph& g, const std::vector<CycleBasisEntry>& basis, TreeCaps caps,
                  const std::function<bool(const SupportTree&)>& visit) {
  const std::size_t l = g.left_size();
  const std::size_t r = g.right_size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> three(l * r, none);
  for (std::size_t e = 0; e < basis.size(); ++e) {
    if (basis[e].distinct_count() == 2) three[basis[e].left_set[0] * r + basis[e].right_set[0]] = e;
  }

  for (std::size_t e = 0; e < basis.size(); ++e) {
    const CycleBasisEntry& main = basis[e];
    SupportTree alone{e, {}};
    if (within(tree_support(g, basis, alone), caps) && !visit(alone)) return false;

    for (bool hang_on_left : {true, false}) {
      const auto& shared = hang_on_left ? main.left_set : main.right_set;
      const auto& used = hang_on_left ? main.right_set : main.left_set;
      const std::size_t other_size = hang_on_left ? r : l;
      std::vector<std::size_t> leaf_for_extra;
      for (std::size_t v = 0; v < other_size; ++v) {
        if (std::binary_search(used.begin(), used.end(), v)) continue;
        for (std::size_t u : shared) {
          std::size_t idx = hang_on_left ? three[u * r + v] : three[v * r + u];
          if (idx != none) {
            leaf_for_extra.push_back(idx);
            break;
          }
        }
      }
      for (const IndexSet& pick : subsets_by_size(leaf_for_extra.size(), leaf_for_extra.size())) {
        SupportTree tree{e, {}};
        for (Index i : pick) tree.leaves.push_back(leaf_for_extra[i]);
        if (within(tree_support(g, basis, tree), caps) && !visit(tree)) return false;
      }
    }
  }
  return true;
}

class MaximalFamilies {
 public:
  MaximalFamilies(std::vector<Bits> neighbours, const std::function<bool(const std::vector<std::size_t>&)>& emit)
      : neighbours_(std::move(neighbours)), emit_(emit) {}

  bool run(std::size_t count) {
    Bits p(count);
    for (std::size_t i = 0; i < count; ++i) p.set(i);
    return expand(p, Bits(count));
  }

 private:
  // Bron-Kerbosch with Tomita pivoting.
  bool expand(Bits p, Bits x) {
    if (p.none()) {
      if (x.none() && current_.size() >= 2) {
        std::vector<std::size_t> family = current_;
        std::sort(family.begin(), family.end());
        return emit_(family);
      }
      return true;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      std::size_t c = p.and_count(neighbours_[u]);
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    std::vector<std::size_t> branch;
    p.without(neighbours_[pivot]).for_each([&](std::size_t v) { branch.push_back(v); });
    for (std::size_t v : branch) {
      current_.push_back(v);
      bool go = expand(p & neighbours_[v], x & neighbours_[v]);
      current_.pop_back();
      if (!go) return false;
      p.reset(v);
      x.set(v);
    }
    return true;
  }

  std::vector<Bits> neighbours_;
  const std::function<bool(const std::vector<std::size_t>&)>& emit_;
  std::vector<std::size_t> current_;
};

bool share_vertex(const CycleBasisEntry& a, const CycleBasisEntry& b) {
  auto meets = [](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i] == y[j]) return true;
      x[i] < y[j] ? ++i : ++j;
    }
    return false;
  };
  return meets(a.left_set, b.left_set) || meets(a.right_set, b.right_set);
}

bool enumerate_gi(const BipartiteDigraph& g, const std::vector<CycleBasisEntry>& basis, TreeCaps caps,
                  const std::function<bool(const SupportTree&)>& visit) {
  std::vector<std::size_t> fitting;
  for (std::size_t e = 0; e < basis.size(); ++e) {
    SupportTree alone{e, {}};
    if (!within(tree_support(g, basis, alone), caps)) continue;
    fitting.push_back(e);
    if (!visit(alone)) return false;
  }

  std::vector<Bits> neighbours(fitting.size(), Bits(fitting.size()));
  for (std::size_t i = 0; i < fitting.size(); ++i) {
    for (std::size_t j = i + 1; j < fitting.size(); ++j) {
      if (share_vertex(basis[fitting[i]], basis[fitting[j]])) {
        neighbours[i].set(j);
        neighbours[j].set(i);
      }
    }
  }
  std::function<bool(const std::vector<std::size_t>&)> emit = [&](const std::vector<std::size_t>& family) {
    SupportTree tree{fitting[family.front()], {}};
    for (std::size_t i = 1; i < family.size(); ++i) tree.leaves.push_back(fitting[family[i]]);
    if (!within(tree_support(g, basis, tree), caps)) return true;
    return visit(tree);
  };
  return MaximalFamilies(std::move(neighbours), emit).run(fitting.size());
}

}  // namespace

void enumerate_support_trees(const BipartiteDigraph& g, const std::vector<CycleBasisEntry>& basis, TreeMode mode,
                             TreeCaps caps, const std::function<bool(const SupportTree&)>& visit) {
  if (mode == TreeMode::Gr) {
    enumerate_gr(g, basis, caps, visit);
  } else {
    enumerate_gi(g, basis, caps, visit);
  }
}

}  // namespace nashgraph
