#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nashgraph/game.hpp"
#include "nashgraph/graph.hpp"

namespace nashgraph {

// D(x) restricted to opponent supports of size <= cap.
struct DomainEntry {
  IndexSet support;
  MixedStrategy witness;  // opponent mixture with exactly this support
};
using DomainRow = std::vector<DomainEntry>;

struct DomainTable {
  Player who;
  std::size_t cap;
  std::vector<DomainRow> rows;  // one per pure strategy of `who`
};

// Supports enumerated in (size, lexicographic) order; each is accepted by the
// LP2 check with the complement forced to zero. Dominated strategies get an
// empty row without further probing.
DomainRow compute_domain(const Game& g, Player who, Index own, std::size_t cap);
DomainTable compute_domain_table(const Game& g, Player who, std::size_t cap);

enum class Resolution { Certified, Assumed };

enum class Backing {
  Lp1Witness,    // in the support of the dominance-test witness
  ModLp1,        // forcing it to zero makes the strategy dominated
  Lp2Witness,    // in the support of a best-response mixture found by LP2
  Assumption,    // unresolved within the probe budget, assumed relevant
};

struct RelevancyMember {
  Index strategy;
  Backing backing;
  std::optional<MixedStrategy> witness;  // for Lp1Witness / Lp2Witness
};

struct RelevancyRow {
  std::vector<RelevancyMember> members;  // sorted by strategy
  Resolution resolution = Resolution::Certified;

  IndexSet strategies() const;
  bool contains(Index y) const;
};

struct RelevancyTable {
  std::vector<RelevancyRow> rows;  // row player's strategies
  std::vector<RelevancyRow> cols;  // column player's strategies
};

// budget == 0 selects the default of twice the opponent strategy count.
RelevancyRow compute_relevancy(const Game& g, Player who, Index own, std::size_t budget = 0);
RelevancyTable compute_relevancy_table(const Game& g, std::size_t budget = 0);

// Singleton vertices, arc x -> y iff y in R(x) and y -> x iff x in R(y).
BipartiteDigraph build_gr(const RelevancyTable& relevancy);
BipartiteDigraph build_gr(const Game& g, std::size_t budget = 0);

// Vertices: row subsets of size <= k, column subsets of size <= l, each side
// in (size, lexicographic) order. Arc s -> t iff t in D_l(x) for every x in s
// (and mirrored). `row_domains` must have cap >= l, `col_domains` cap >= k.
BipartiteDigraph build_gd(const Game& g, std::size_t k, std::size_t l, const DomainTable& row_domains,
                          const DomainTable& col_domains);
BipartiteDigraph build_gd(const Game& g, std::size_t k, std::size_t l);

// As build_gd, but vertices left without Case-1 arcs receive artificial arcs
// (common-relevancy targets, then any domain member, then everything for an
// isolated pure strategy).
BipartiteDigraph build_gi(const Game& g, std::size_t k, std::size_t l, const DomainTable& row_domains,
                          const DomainTable& col_domains);
BipartiteDigraph build_gi(const Game& g, std::size_t k, std::size_t l);

}  // namespace nashgraph
