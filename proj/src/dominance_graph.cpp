#include "nashgraph/dominance_graph.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "nashgraph/programs.hpp"

namespace nashgraph {

DomainRow compute_domain(const Game& g, Player who, Index own, std::size_t cap) {
  DomainRow row;
  if (lp1_dominance(g, who, own).dominated) return row;
  const std::size_t opp = g.strategy_count(opponent(who));
  for (const IndexSet& s : subsets_by_size(opp, cap)) {
    DomainCheck check = lp2_domain_check(g, who, own, s, complement(s, opp));
    if (check.member) row.push_back({s, std::move(*check.witness)});
  }
  return row;
}

DomainTable compute_domain_table(const Game& g, Player who, std::size_t cap) {
  DomainTable table{who, cap, {}};
  for (Index x = 0; x < g.strategy_count(who); ++x) table.rows.push_back(compute_domain(g, who, x, cap));
  return table;
}

IndexSet RelevancyRow::strategies() const {
  IndexSet out;
  for (const auto& m : members) out.push_back(m.strategy);
  return out;
}

bool RelevancyRow::contains(Index y) const {
  return std::any_of(members.begin(), members.end(), [y](const RelevancyMember& m) { return m.strategy == y; });
}

RelevancyRow compute_relevancy(const Game& g, Player who, Index own, std::size_t budget) {
  const std::size_t opp = g.strategy_count(opponent(who));
  if (budget == 0) budget = 2 * opp;

  RelevancyRow row;
  DominanceResult lp1 = lp1_dominance(g, who, own);
  if (lp1.dominated) return row;

  std::vector<std::optional<RelevancyMember>> found(opp);
  for (Index y : lp1.witness->support()) found[y] = RelevancyMember{y, Backing::Lp1Witness, lp1.witness};
  for (Index y = 0; y < opp; ++y) {
    if (!found[y] && mod_lp1_relevancy(g, who, own, y)) found[y] = RelevancyMember{y, Backing::ModLp1, std::nullopt};
  }

  // A single-positive probe with nothing forced to zero decides membership.
  std::vector<bool> excluded(opp, false);
  std::size_t probes = 0;
  for (Index y = 0; y < opp && probes < budget; ++y) {
    if (found[y]) continue;
    ++probes;
    DomainCheck check = lp2_domain_check(g, who, own, {y}, {});
    if (!check.member) {
      excluded[y] = true;
      continue;
    }
    for (Index z : check.witness->support()) {
      if (!found[z]) found[z] = RelevancyMember{z, Backing::Lp2Witness, check.witness};
    }
  }

  for (Index y = 0; y < opp; ++y) {
    if (found[y]) {
      row.members.push_back(std::move(*found[y]));
    } else if (!excluded[y]) {
      row.resolution = Resolution::Assumed;
      row.members.push_back({y, Backing::Assumption, std::nullopt});
    }
  }
  return row;
}

RelevancyTable compute_relevancy_table(const Game& g, std::size_t budget) {
  RelevancyTable table;
  for (Index x = 0; x < g.m(); ++x) table.rows.push_back(compute_relevancy(g, Player::One, x, budget));
  for (Index y = 0; y < g.n(); ++y) table.cols.push_back(compute_relevancy(g, Player::Two, y, budget));
  return table;
}

BipartiteDigraph build_gr(const RelevancyTable& relevancy) {
  std::vector<IndexSet> left;
  std::vector<IndexSet> right;
  for (Index x = 0; x < relevancy.rows.size(); ++x) left.push_back({x});
  for (Index y = 0; y < relevancy.cols.size(); ++y) right.push_back({y});
  BipartiteDigraph graph(std::move(left), std::move(right));
  for (Index x = 0; x < relevancy.rows.size(); ++x) {
    for (const auto& member : relevancy.rows[x].members) graph.set_left_to_right(x, member.strategy, ArcKind::Real);
  }
  for (Index y = 0; y < relevancy.cols.size(); ++y) {
    for (const auto& member : relevancy.cols[y].members) graph.set_right_to_left(y, member.strategy, ArcKind::Real);
  }
  return graph;
}

BipartiteDigraph build_gr(const Game& g, std::size_t budget) { return build_gr(compute_relevancy_table(g, budget)); }

namespace {

// Outgoing arcs for one side. `sources` are the vertex labels on this side,
// `targets` those on the other side; domains[x] lists supports on the other
// side for pure strategy x.
template <typename SetArc>
void connect_side(const std::vector<IndexSet>& sources, const std::vector<IndexSet>& targets, const DomainTable& domains,
                  bool artificial, SetArc&& set_arc) {
  std::map<IndexSet, std::size_t> target_index;
  for (std::size_t t = 0; t < targets.size(); ++t) target_index.emplace(targets[t], t);
  const std::size_t target_cap = targets.empty() ? 0 : targets.back().size();

  // member[x][t]: target t is in x's domain; reach[x]: union of those supports.
  std::vector<std::vector<bool>> member(domains.rows.size(), std::vector<bool>(targets.size(), false));
  std::vector<IndexSet> reach(domains.rows.size());
  for (std::size_t x = 0; x < domains.rows.size(); ++x) {
    for (const auto& entry : domains.rows[x]) {
      if (entry.support.size() > target_cap) continue;
      member[x][target_index.at(entry.support)] = true;
      IndexSet merged;
      std::set_union(reach[x].begin(), reach[x].end(), entry.support.begin(), entry.support.end(),
                     std::back_inserter(merged));
      reach[x] = std::move(merged);
    }
  }

  for (std::size_t s = 0; s < sources.size(); ++s) {
    const IndexSet& strategies = sources[s];
    bool any = false;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      bool all = std::all_of(strategies.begin(), strategies.end(), [&](Index x) { return member[x][t]; });
      if (all) {
        set_arc(s, t, ArcKind::Real);
        any = true;
      }
    }
    if (any || !artificial) continue;

    // Largest targets drawn from the strategies relevant to every member.
    IndexSet common = reach[strategies.front()];
    for (std::size_t i = 1; i < strategies.size(); ++i) {
      IndexSet next;
      const IndexSet& r = reach[strategies[i]];
      std::set_intersection(common.begin(), common.end(), r.begin(), r.end(), std::back_inserter(next));
      common = std::move(next);
    }
    if (!common.empty()) {
      const std::size_t size = std::min(common.size(), target_cap);
      for (std::size_t t = 0; t < targets.size(); ++t) {
        const IndexSet& label = targets[t];
        if (label.size() == size && std::includes(common.begin(), common.end(), label.begin(), label.end())) {
          set_arc(s, t, ArcKind::Artificial);
        }
      }
      continue;
    }

    for (std::size_t t = 0; t < targets.size(); ++t) {
      bool some = std::any_of(strategies.begin(), strategies.end(), [&](Index x) { return member[x][t]; });
      if (some) {
        set_arc(s, t, ArcKind::Artificial);
        any = true;
      }
    }
    if (any) continue;

    if (strategies.size() == 1 && domains.rows[strategies.front()].empty()) {
      for (std::size_t t = 0; t < targets.size(); ++t) set_arc(s, t, ArcKind::Artificial);
    }
  }
}

BipartiteDigraph build_subset_graph(const Game& g, std::size_t k, std::size_t l, const DomainTable& row_domains,
                                    const DomainTable& col_domains, bool artificial) {
  BipartiteDigraph graph(subsets_by_size(g.m(), k), subsets_by_size(g.n(), l));
  connect_side(graph.left(), graph.right(), row_domains, artificial,
               [&](std::size_t s, std::size_t t, ArcKind kind) { graph.set_left_to_right(s, t, kind); });
  connect_side(graph.right(), graph.left(), col_domains, artificial,
               [&](std::size_t t, std::size_t s, ArcKind kind) { graph.set_right_to_left(t, s, kind); });
  return graph;
}

}  // namespace

BipartiteDigraph build_gd(const Game& g, std::size_t k, std::size_t l, const DomainTable& row_domains,
                          const DomainTable& col_domains) {
  return build_subset_graph(g, k, l, row_domains, col_domains, false);
}

BipartiteDigraph build_gd(const Game& g, std::size_t k, std::size_t l) {
  return build_gd(g, k, l, compute_domain_table(g, Player::One, l), compute_domain_table(g, Player::Two, k));
}

BipartiteDigraph build_gi(const Game& g, std::size_t k, std::size_t l, const DomainTable& row_domains,
                          const DomainTable& col_domains) {
  return build_subset_graph(g, k, l, row_domains, col_domains, true);
}

BipartiteDigraph build_gi(const Game& g, std::size_t k, std::size_t l) {
  return build_gi(g, k, l, compute_domain_table(g, Player::One, l), compute_domain_table(g, Player::Two, k));
}

}  // namespace nashgraph
