// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "igm/suff_stats.hpp"
#include "igm/types.hpp"

namespace igm {

/// Dense view of a precedence-cost matrix over a finite item support.
/// cost(l, i) is the price paid for placing item i somewhere before item l;
/// an ordering's total cost is the lower-triangle sum
///   sum over ordered pairs (i placed before l) of cost(l, i).
class CostMatrix {
 public:
  CostMatrix(std::vector<ItemId> items, Eigen::MatrixXd costs);

  /// Builds R = q 1^T - Q restricted to the given support (ascending ids);
  /// diagonal entries are zero.
  static CostMatrix from_sparse(const SparseVec& q, const SparseMat& Q,
                                const std::vector<ItemId>& support);
  static CostMatrix from_stats(const SuffStats& stats, const RankSelector& selector);

  int size() const { return static_cast<int>(items_.size()); }
  const std::vector<ItemId>& items() const { return items_; }
  double cost(int later, int earlier) const { return costs_(later, earlier); }
  const Eigen::MatrixXd& matrix() const { return costs_; }

  /// Columnwise cost of a full ordering given as item indices.
  double ordering_cost(std::span<const int> order) const;
  /// Cost of a central ordering whose prefix covers every support item.
  double ordering_cost(const CentralOrdering& sigma) const;

 private:
  std::vector<ItemId> items_;
  Eigen::MatrixXd costs_;
};

enum class Searcher { kBBound, kGreedy, kSortRows };

struct BBoundOptions {
  std::int64_t node_budget = 1'000'000;  // expansions before giving up
  bool find_ties = true;
  std::int64_t max_tied_orderings = 10'000;
};

struct SearchResult {
  CentralOrdering ordering;  // prefix over the support items
  double cost = 0.0;
  bool optimal = false;           // certified global minimum
  bool ties_exhaustive = false;   // all co-optimal orderings were enumerated
  std::int64_t nodes_expanded = 0;
};

/// Exact best-first branch-and-bound over the n! orderings of the support.
/// Nodes carry the path cost C and the admissible bound
///   A = sum over unplaced pairs {a,b} of min(cost(a,b), cost(b,a)),
/// and are dequeued by T = C + A (ties: deeper path first, then
/// lexicographic path). When several orderings attain the optimum the
/// result's tie groups mark the undetermined prefix ranges.
SearchResult bbound_r(const CostMatrix& m, const BBoundOptions& options = {});

/// Depth-first descent that always expands the child with the smallest C + A.
SearchResult greedy_search(const CostMatrix& m);

/// Sorts items by ascending column sums (diagonal excluded, ties by item id);
/// optionally refined by local_search.
SearchResult sort_rows(const CostMatrix& m, bool refine = false);

/// Applies the best improving adjacent transposition until none improves.
SearchResult local_search(const CentralOrdering& start, const CostMatrix& m);

SearchResult run_searcher(Searcher searcher, const CostMatrix& m,
                          const BBoundOptions& options = {});

}  // namespace igm
