#ifndef WIENER_DP_CONVEX_HPP
#define WIENER_DP_CONVEX_HPP

// Exact minimum-Wiener spanning tree for points in strictly convex position.
//
// Points are relabeled p_0..p_{n-1} in clockwise order. For an interval
// [i, j] of that order, a tree on P[i, j] that hangs off the rest of the
// final tree through one of its endpoints costs
//
//   W(T_ij) + (n - (j - i + 1)) * delta_root(T_ij),
//
// which equals the sum, over the edges of T_ij, of their full edge
// contributions in the n-point tree. Two tables hold the minimum of that
// cost: `right` for trees rooted at p_j, `left` for trees rooted at p_i.
//
// A right-rooted tree is split at the neighbour p_k of p_j with the smallest
// index: P[i, k] and P[k, l] hang from p_k, P[l+1, j] stays with p_j, and the
// edge (p_k, p_j) separates l - i + 1 points from the rest:
//
//   right[i][j] = min_{i <= k <= l < j} right[i][k] + left[k][l] + right[l+1][j]
//                                        + (l-i+1)(n-l+i-1) |p_k p_j|
//
// A left-rooted tree is split at the neighbour p_k of p_i with the largest
// index: P[i, l] stays with p_i, P[l+1, k] and P[k, j] hang from p_k:
//
//   left[i][j] = min_{i <= l < k <= j} left[i][l] + right[l+1][k] + left[k][j]
//                                       + (j-l)(n-j+l) |p_i p_k|
//
// Every term reads a strictly shorter interval, so the tables are filled by
// increasing interval length. The optimum is left[0][n-1].

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "wiener/error.hpp"
#include "wiener/geometry.hpp"
#include "wiener/tree.hpp"

namespace wiener {

struct SplitChoice {
  std::size_t k = SIZE_MAX;
  std::size_t l = SIZE_MAX;

  bool empty() const { return k == SIZE_MAX; }
};

// n x n row-major tables indexed by clockwise positions. Cells with i > j are
// unused and hold NaN / an empty choice.
struct DPTables {
  std::size_t n = 0;
  std::vector<double> m_right;
  std::vector<double> m_left;
  std::vector<SplitChoice> choice_right;
  std::vector<SplitChoice> choice_left;

  explicit DPTables(std::size_t size = 0)
      : n(size),
        m_right(size * size, std::numeric_limits<double>::quiet_NaN()),
        m_left(size * size, std::numeric_limits<double>::quiet_NaN()),
        choice_right(size * size),
        choice_left(size * size) {}

  double right(std::size_t i, std::size_t j) const { return m_right[i * n + j]; }
  double left(std::size_t i, std::size_t j) const { return m_left[i * n + j]; }
  double& right(std::size_t i, std::size_t j) { return m_right[i * n + j]; }
  double& left(std::size_t i, std::size_t j) { return m_left[i * n + j]; }
  const SplitChoice& right_choice(std::size_t i, std::size_t j) const { return choice_right[i * n + j]; }
  const SplitChoice& left_choice(std::size_t i, std::size_t j) const { return choice_left[i * n + j]; }

  double optimum() const { return n == 0 ? 0.0 : left(0, n - 1); }
};

struct ConvexSolution {
  double wiener = 0.0;
  SpanningTree tree;
  std::vector<std::size_t> order;  // clockwise position -> point index
};

struct DPOptions {
  // Worker threads per interval-length stage; cells of one stage are
  // independent, so results do not depend on this value.
  unsigned threads = 1;
};

namespace detail {

inline std::vector<std::size_t> checked_convex_order(const PointSet& ps) {
  if (ps.size() < 2) {
    throw InvalidInput("convex solver needs at least 2 points, got " + std::to_string(ps.size()));
  }
  if (ps.size() == 2) {
    if (ps[0] == ps[1]) throw InvalidInput("point 1 coincides with point 0");
    return {0, 1};
  }
  return convex_clockwise_order(ps);
}

inline void fill_cell(DPTables& t, const std::vector<double>& dist, std::size_t i, std::size_t j) {
  const std::size_t n = t.n;
  const auto d = [&](std::size_t a, std::size_t b) { return dist[a * n + b]; };
  const auto weight = [n](std::size_t inside) {
    return static_cast<double>(inside) * static_cast<double>(n - inside);
  };

  double best = std::numeric_limits<double>::infinity();
  SplitChoice arg;
  for (std::size_t k = i; k < j; ++k) {
    const double head = t.right(i, k);
    for (std::size_t l = k; l < j; ++l) {
      const double v = head + t.left(k, l) + t.right(l + 1, j) + weight(l - i + 1) * d(k, j);
      if (v < best) {
        best = v;
        arg = {k, l};
      }
    }
  }
  t.right(i, j) = best;
  t.choice_right[i * n + j] = arg;

  best = std::numeric_limits<double>::infinity();
  arg = {};
  for (std::size_t k = i + 1; k <= j; ++k) {
    const double tail = t.left(k, j);
    for (std::size_t l = i; l < k; ++l) {
      const double v = t.left(i, l) + t.right(l + 1, k) + tail + weight(j - l) * d(i, k);
      if (v < best) {
        best = v;
        arg = {k, l};
      }
    }
  }
  t.left(i, j) = best;
  t.choice_left[i * n + j] = arg;
}

}  // namespace detail

// Fills both tables for the points taken in the given clockwise order.
inline DPTables dp_tables_ordered(const PointSet& ps, const std::vector<std::size_t>& order,
                                  const DPOptions& opts = {}) {
  const std::size_t n = order.size();
  DPTables t(n);
  std::vector<double> dist(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) dist[a * n + b] = distance(ps[order[a]], ps[order[b]]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    t.right(i, i) = 0.0;
    t.left(i, i) = 0.0;
  }

  const unsigned threads = opts.threads == 0 ? 1 : opts.threads;
  for (std::size_t len = 2; len <= n; ++len) {
    const std::size_t cells = n - len + 1;
    if (threads == 1 || cells < 2 * threads) {
      for (std::size_t i = 0; i < cells; ++i) detail::fill_cell(t, dist, i, i + len - 1);
      continue;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < cells; i += threads) detail::fill_cell(t, dist, i, i + len - 1);
      });
    }
  }
  return t;
}

inline DPTables dp_tables(const PointSet& ps, const DPOptions& opts = {}) {
  return dp_tables_ordered(ps, detail::checked_convex_order(ps), opts);
}

// Walks the choice tables from left[0][n-1] and maps positions back to point
// indices through `order`.
inline SpanningTree reconstruct_tree(const DPTables& tables, const std::vector<std::size_t>& order) {
  const std::size_t n = tables.n;
  if (order.size() != n) throw InvalidInput("order length does not match table size");
  SpanningTree tree{n, {}};
  if (n == 0) throw InvalidInput("empty tables");
  tree.edges.reserve(n - 1);

  struct Cell {
    bool rooted_right;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Cell> stack{{false, 0, n - 1}};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    if (c.i == c.j) continue;
    if (c.i > c.j || c.j >= n) throw InternalError("choice table references an invalid interval");
    const SplitChoice& ch = c.rooted_right ? tables.right_choice(c.i, c.j) : tables.left_choice(c.i, c.j);
    if (ch.empty()) throw InternalError("unfilled choice cell");
    const auto [k, l] = ch;
    if (c.rooted_right) {
      if (!(c.i <= k && k <= l && l < c.j)) throw InternalError("right choice out of range");
      tree.edges.push_back({order[k], order[c.j]});
      stack.push_back({true, c.i, k});
      stack.push_back({false, k, l});
      stack.push_back({true, l + 1, c.j});
    } else {
      if (!(c.i <= l && l < k && k <= c.j)) throw InternalError("left choice out of range");
      tree.edges.push_back({order[c.i], order[k]});
      stack.push_back({false, c.i, l});
      stack.push_back({true, l + 1, k});
      stack.push_back({false, k, c.j});
    }
    if (tree.edges.size() > n - 1) throw InternalError("choice tables produce too many edges");
  }
  if (!validate(tree)) throw InternalError("reconstructed edge list is not a spanning tree");
  return tree;
}

// Minimum-Wiener spanning tree of a strictly convex point set in O(n^4).
inline ConvexSolution solve_convex(const PointSet& ps, const DPOptions& opts = {}) {
  auto order = detail::checked_convex_order(ps);
  const std::size_t n = order.size();

  if (n == 2) {
    SpanningTree t{2, {{0, 1}}};
    return {distance(ps[0], ps[1]), std::move(t), std::move(order)};
  }
  if (n == 3) {
    // Every spanning tree is a path through one middle vertex.
    ConvexSolution best;
    best.wiener = std::numeric_limits<double>::infinity();
    for (std::size_t pos = 0; pos < 3; ++pos) {
      const std::size_t mid = order[pos];
      const std::size_t a = order[(pos + 1) % 3];
      const std::size_t b = order[(pos + 2) % 3];
      const double da = distance(ps[mid], ps[a]);
      const double db = distance(ps[mid], ps[b]);
      const double w = 2.0 * (da + db);
      if (w < best.wiener) {
        best.wiener = w;
        best.tree = SpanningTree{3, {{std::min(mid, a), std::max(mid, a)}, {std::min(mid, b), std::max(mid, b)}}};
      }
    }
    best.order = std::move(order);
    return best;
  }

  const DPTables tables = dp_tables_ordered(ps, order, opts);
  ConvexSolution sol;
  sol.wiener = tables.optimum();
  sol.tree = reconstruct_tree(tables, order);
  sol.order = std::move(order);
  return sol;
}

}  // namespace wiener

#endif  // WIENER_DP_CONVEX_HPP
