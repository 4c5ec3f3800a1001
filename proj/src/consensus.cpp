// Apache License, Version 2.0, refer to LICENSE.txt
#include "igm/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace igm {

CostMatrix::CostMatrix(std::vector<ItemId> items, Eigen::MatrixXd costs)
    : items_(std::move(items)), costs_(std::move(costs)) {
  if (items_.empty()) throw std::invalid_argument("CostMatrix: empty support");
  if (costs_.rows() != static_cast<Eigen::Index>(items_.size()) ||
      costs_.cols() != costs_.rows())
    throw std::invalid_argument("CostMatrix: shape does not match the support");
  costs_.diagonal().setZero();  // self pairs never enter the lower triangle
}

CostMatrix CostMatrix::from_sparse(const SparseVec& q, const SparseMat& Q,
                                   const std::vector<ItemId>& support) {
  const auto n = static_cast<Eigen::Index>(support.size());
  std::unordered_map<ItemId, Eigen::Index> index;
  index.reserve(support.size());
  for (Eigen::Index i = 0; i < n; ++i) index[support[static_cast<std::size_t>(i)]] = i;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [item, v] : q) {
    auto it = index.find(item);
    if (it == index.end()) throw std::invalid_argument("CostMatrix: q key outside support");
    m.row(it->second).setConstant(v);
  }
  for (const auto& [key, v] : Q) {
    auto it = index.find(pair_item(key));
    auto jt = index.find(pair_before(key));
    if (it == index.end() || jt == index.end())
      throw std::invalid_argument("CostMatrix: Q key outside support");
    m(it->second, jt->second) -= v;
  }
  m.diagonal().setZero();
  return CostMatrix(support, std::move(m));
}

CostMatrix CostMatrix::from_stats(const SuffStats& stats, const RankSelector& selector) {
  const std::vector<ItemId> support = stats.observed_items();
  switch (selector.kind()) {
    case RankSelector::Kind::kSingle: {
      const RankStats& rs = stats.rank(selector.rank());
      return from_sparse(rs.q, rs.Q, support);
    }
    case RankSelector::Kind::kAggregate:
      return from_sparse(stats.aggregate_q(), stats.aggregate_Q(), support);
    case RankSelector::Kind::kThetaWeighted: {
      const ThetaVector& theta = selector.theta();
      if (!theta.covers(stats.t_max()))
        throw std::invalid_argument("CostMatrix: theta does not cover t_max");
      SparseVec q;
      SparseMat Q;
      for (int j = 1; j <= stats.t_max(); ++j) {
        double w = theta.at(j);
        for (const auto& [item, v] : stats.rank(j).q) q[item] += w * v;
        for (const auto& [key, v] : stats.rank(j).Q) Q[key] += w * v;
      }
      return from_sparse(q, Q, support);
    }
  }
  throw std::logic_error("CostMatrix: unknown selector");
}

double CostMatrix::ordering_cost(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != size())
    throw std::invalid_argument("ordering_cost: order length mismatch");
  double total = 0.0;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      total += costs_(order[b], order[a]);
  return total;
}

double CostMatrix::ordering_cost(const CentralOrdering& sigma) const {
  std::vector<std::pair<std::int64_t, int>> ranked;
  ranked.reserve(items_.size());
  for (int i = 0; i < size(); ++i) {
    ItemId id = items_[static_cast<std::size_t>(i)];
    if (!sigma.in_prefix(id))
      throw std::invalid_argument("ordering_cost: sigma omits a support item");
    ranked.emplace_back(sigma.rank_of(id), i);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<int> order;
  order.reserve(ranked.size());
  for (auto& [rank, idx] : ranked) order.push_back(idx);
  return ordering_cost(order);
}

namespace {

struct Node {
  double cost;    // C: columnwise cost of the path
  double bound;   // A: admissible lower bound on the cost-to-go
  int parent;
  int depth;
  int item;       // support index placed at this step (-1 at the root)
};

class BBoundEngine {
 public:
  explicit BBoundEngine(const CostMatrix& m) : m_(m), n_(m.size()) {}

  std::vector<int> path_of(int id) const {
    std::vector<int> path(static_cast<std::size_t>(nodes_[static_cast<std::size_t>(id)].depth));
    for (int cur = id; cur != -1 && nodes_[static_cast<std::size_t>(cur)].item >= 0;
         cur = nodes_[static_cast<std::size_t>(cur)].parent)
      path[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(cur)].depth - 1)] =
          nodes_[static_cast<std::size_t>(cur)].item;
    return path;
  }

  // priority T, then deeper paths, then lexicographically smaller paths
  bool before(int a, int b) const {
    const Node& na = nodes_[static_cast<std::size_t>(a)];
    const Node& nb = nodes_[static_cast<std::size_t>(b)];
    double ta = na.cost + na.bound, tb = nb.cost + nb.bound;
    if (ta != tb) return ta < tb;
    if (na.depth != nb.depth) return na.depth > nb.depth;
    return path_of(a) < path_of(b);
  }

  int make_root() {
    double a0 = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) a0 += std::min(m_.cost(i, j), m_.cost(j, i));
    nodes_.push_back(Node{0.0, a0, -1, 0, -1});
    return 0;
  }

  // appends all children of `id`, returning their node ids
  std::vector<int> expand(int id) {
    const Node node = nodes_[static_cast<std::size_t>(id)];
    std::vector<char> placed(static_cast<std::size_t>(n_), 0);
    for (int cur = id; cur != -1; cur = nodes_[static_cast<std::size_t>(cur)].parent) {
      int item = nodes_[static_cast<std::size_t>(cur)].item;
      if (item >= 0) placed[static_cast<std::size_t>(item)] = 1;
    }
    std::vector<int> free_items;
    free_items.reserve(static_cast<std::size_t>(n_ - node.depth));
    for (int i = 0; i < n_; ++i)
      if (!placed[static_cast<std::size_t>(i)]) free_items.push_back(i);

    std::vector<int> children;
    children.reserve(free_items.size());
    for (int k : free_items) {
      double col = 0.0, pairs = 0.0;
      for (int l : free_items) {
        if (l == k) continue;
        col += m_.cost(l, k);
        pairs += std::min(m_.cost(k, l), m_.cost(l, k));
      }
      children.push_back(static_cast<int>(nodes_.size()));
      nodes_.push_back(Node{node.cost + col, node.bound - pairs, id, node.depth + 1, k});
    }
    return children;
  }

  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int n() const { return n_; }

 private:
  const CostMatrix& m_;
  int n_;
  std::vector<Node> nodes_;
};

SearchResult make_result(const CostMatrix& m, const std::vector<int>& order,
                         double cost) {
  std::vector<ItemId> prefix;
  prefix.reserve(order.size());
  for (int idx : order) prefix.push_back(m.items()[static_cast<std::size_t>(idx)]);
  SearchResult result;
  result.ordering = CentralOrdering(std::move(prefix));
  result.cost = cost;
  return result;
}

// Minimal consecutive blocks on which every co-optimal ordering uses the same
// item set; blocks of length >= 2 are the undetermined groups.
std::vector<std::pair<int, int>> tie_blocks(const std::vector<std::vector<int>>& optima,
                                            int n) {
  std::vector<std::pair<int, int>> groups;
  std::set<int> seen;
  int block_start = 0;
  for (int p = 0; p < n; ++p) {
    for (const auto& order : optima) seen.insert(order[static_cast<std::size_t>(p)]);
    if (static_cast<int>(seen.size()) == p + 1) {
      if (p + 1 - block_start >= 2) groups.emplace_back(block_start, p + 1);
      block_start = p + 1;
    }
  }
  return groups;
}

}  // namespace

SearchResult bbound_r(const CostMatrix& m, const BBoundOptions& options) {
  const int n = m.size();
  BBoundEngine engine(m);
  auto cmp = [&engine](int a, int b) { return engine.before(b, a); };  // min-heap
  std::priority_queue<int, std::vector<int>, decltype(cmp)> queue(cmp);
  queue.push(engine.make_root());

  std::int64_t expanded = 0;
  bool have_best = false;
  std::vector<int> best_order;
  double best_cost = 0.0;

  // phase 1: best-first search until the first full-length node is dequeued
  int optimum_id = -1;
  while (!queue.empty()) {
    int id = queue.top();
    queue.pop();
    if (engine.node(id).depth == n) {
      optimum_id = id;
      break;
    }
    if (expanded >= options.node_budget) {
      // budget exhausted: finish the best open node greedily, keep the incumbent
      int cur = id;
      while (engine.node(cur).depth < n) {
        std::vector<int> children = engine.expand(cur);
        int pick = children.front();
        for (int c : children)
          if (engine.before(c, pick)) pick = c;
        cur = pick;
      }
      double cost = engine.node(cur).cost;
      if (!have_best || cost < best_cost) {
        best_order = engine.path_of(cur);
        best_cost = cost;
      }
      SearchResult result = make_result(m, best_order, best_cost);
      result.optimal = false;
      result.ties_exhaustive = false;
      result.nodes_expanded = expanded;
      return result;
    }
    ++expanded;
    for (int c : engine.expand(id)) queue.push(c);
  }
  if (optimum_id < 0) throw std::logic_error("bbound_r: queue drained before a leaf");

  const double optimum = engine.node(optimum_id).cost;
  const double tie_eps = 1e-9 * (1.0 + std::abs(optimum));

  SearchResult result = make_result(m, engine.path_of(optimum_id), optimum);
  result.optimal = true;
  result.ties_exhaustive = true;

  if (options.find_ties) {
    // phase 2: drain every node whose priority still reaches the optimum
    std::vector<std::vector<int>> optima;
    optima.push_back(engine.path_of(optimum_id));
    bool exhaustive = true;
    while (!queue.empty()) {
      int id = queue.top();
      const Node& nd = engine.node(id);
      if (nd.cost + nd.bound > optimum + tie_eps) break;
      queue.pop();
      if (nd.depth == n) {
        if (nd.cost <= optimum + tie_eps) {
          optima.push_back(engine.path_of(id));
          if (static_cast<std::int64_t>(optima.size()) > options.max_tied_orderings) {
            exhaustive = false;
            break;
          }
        }
        continue;
      }
      if (expanded >= options.node_budget) {
        exhaustive = false;
        break;
      }
      ++expanded;
      for (int c : engine.expand(id)) {
        const Node& cn = engine.node(c);
        if (cn.cost + cn.bound <= optimum + tie_eps) queue.push(c);
      }
    }
    result.ties_exhaustive = exhaustive;
    if (exhaustive && optima.size() > 1)
      result.ordering.set_tie_groups(tie_blocks(optima, n));
  }
  result.nodes_expanded = expanded;
  return result;
}

SearchResult greedy_search(const CostMatrix& m) {
  BBoundEngine engine(m);
  int cur = engine.make_root();
  std::int64_t expanded = 0;
  while (engine.node(cur).depth < engine.n()) {
    std::vector<int> children = engine.expand(cur);
    ++expanded;
    int pick = children.front();
    for (int c : children)
      if (engine.before(c, pick)) pick = c;
    cur = pick;
  }
  SearchResult result = make_result(m, engine.path_of(cur), engine.node(cur).cost);
  result.nodes_expanded = expanded;
  return result;
}

SearchResult sort_rows(const CostMatrix& m, bool refine) {
  const int n = m.size();
  Eigen::VectorXd col_sums = m.matrix().colwise().sum();  // diagonal is zero
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (col_sums(a) != col_sums(b)) return col_sums(a) < col_sums(b);
    return m.items()[static_cast<std::size_t>(a)] < m.items()[static_cast<std::size_t>(b)];
  });
  SearchResult result = make_result(m, order, m.ordering_cost(order));
  if (refine) return local_search(result.ordering, m);
  return result;
}

SearchResult local_search(const CentralOrdering& start, const CostMatrix& m) {
  const int n = m.size();
  std::vector<std::pair<std::int64_t, int>> ranked;
  for (int i = 0; i < n; ++i) {
    ItemId id = m.items()[static_cast<std::size_t>(i)];
    if (!start.in_prefix(id))
      throw std::invalid_argument("local_search: start omits a support item");
    ranked.emplace_back(start.rank_of(id), i);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<int> order;
  order.reserve(ranked.size());
  for (auto& [rank, idx] : ranked) order.push_back(idx);

  double cost = m.ordering_cost(order);
  for (;;) {
    double best_delta = 0.0;
    int best_pos = -1;
    for (int p = 0; p + 1 < n; ++p) {
      int u = order[static_cast<std::size_t>(p)], v = order[static_cast<std::size_t>(p + 1)];
      double delta = m.cost(u, v) - m.cost(v, u);
      if (delta < best_delta - 1e-12) {
        best_delta = delta;
        best_pos = p;
      }
    }
    if (best_pos < 0) break;
    std::swap(order[static_cast<std::size_t>(best_pos)], order[static_cast<std::size_t>(best_pos + 1)]);
    cost += best_delta;
  }
  return make_result(m, order, m.ordering_cost(order));
}

SearchResult run_searcher(Searcher searcher, const CostMatrix& m,
                          const BBoundOptions& options) {
  switch (searcher) {
    case Searcher::kBBound:
      return bbound_r(m, options);
    case Searcher::kGreedy:
      return greedy_search(m);
    case Searcher::kSortRows:
      return sort_rows(m, /*refine=*/true);
  }
  throw std::logic_error("run_searcher: unknown searcher");
}

}  // namespace igm
