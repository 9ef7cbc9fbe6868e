#ifndef WIENER_TREE_HPP
#define WIENER_TREE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wiener/error.hpp"
#include "wiener/geometry.hpp"

namespace wiener {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool same_as(const Edge& o) const { return (u == o.u && v == o.v) || (u == o.v && v == o.u); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct SpanningTree {
  std::size_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

// |a - b| <= rel * max(1, |a|, |b|)
inline bool approx_equal(double a, double b, double rel = kRelTol) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

struct Neighbor {
  std::size_t node;
  std::size_t edge;
};

using Adjacency = std::vector<std::vector<Neighbor>>;

inline Adjacency adjacency(const SpanningTree& t, std::size_t skip_a = SIZE_MAX,
                           std::size_t skip_b = SIZE_MAX) {
  Adjacency adj(t.n);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (e == skip_a || e == skip_b) continue;
    adj[t.edges[e].u].push_back({t.edges[e].v, e});
    adj[t.edges[e].v].push_back({t.edges[e].u, e});
  }
  return adj;
}

// Tree distances from `source` to every node, by iterative DFS.
inline std::vector<double> distances_from(const Adjacency& adj, const PointSet& ps,
                                          std::size_t source) {
  std::vector<double> dist(adj.size(), 0.0);
  std::vector<std::size_t> parent(adj.size(), SIZE_MAX);
  std::vector<std::size_t> stack{source};
  parent[source] = source;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& nb : adj[x]) {
      if (parent[nb.node] != SIZE_MAX) continue;
      parent[nb.node] = x;
      dist[nb.node] = dist[x] + distance(ps[x], ps[nb.node]);
      stack.push_back(nb.node);
    }
  }
  return dist;
}

// Component id per node after the adjacency's edges; SIZE_MAX never appears.
inline std::vector<std::size_t> components(const Adjacency& adj) {
  std::vector<std::size_t> comp(adj.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] != SIZE_MAX) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& nb : adj[x]) {
        if (comp[nb.node] == SIZE_MAX) {
          comp[nb.node] = next;
          stack.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

// Edge count, index range, connectivity and acyclicity.
inline bool validate(const SpanningTree& t) {
  if (t.n == 0 || t.edges.size() != t.n - 1) return false;
  detail::DisjointSets sets(t.n);
  for (const auto& e : t.edges) {
    if (e.u >= t.n || e.v >= t.n || e.u == e.v) return false;
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

inline void require_tree_on(const SpanningTree& t, const PointSet& ps) {
  if (!validate(t)) throw InvalidInput("edge list is not a spanning tree on " + std::to_string(t.n) + " nodes");
  if (t.n != ps.size()) {
    throw InvalidInput("tree has " + std::to_string(t.n) + " nodes but point set has " +
                       std::to_string(ps.size()));
  }
}

struct EdgeContribution {
  Edge edge;
  std::size_t count_u = 0;  // nodes on u's side once the edge is removed
  std::size_t count_v = 0;
  double length = 0.0;
  double contribution = 0.0;
};

struct WienerReport {
  double wiener = 0.0;
  double weight = 0.0;
  std::vector<EdgeContribution> per_edge;
};

// Sum of tree distances over unordered pairs, one traversal per source.
inline double wiener_pairwise(const SpanningTree& t, const PointSet& ps) {
  require_tree_on(t, ps);
  const auto adj = detail::adjacency(t);
  double total = 0.0;
  for (std::size_t s = 0; s < t.n; ++s) {
    const auto dist = detail::distances_from(adj, ps, s);
    for (std::size_t q = s + 1; q < t.n; ++q) total += dist[q];
  }
  return total;
}

// W(T) as the sum over edges of (side sizes product) * length.
inline WienerReport wiener_edge_contribution(const SpanningTree& t, const PointSet& ps) {
  require_tree_on(t, ps);
  const auto adj = detail::adjacency(t);

  // Root at 0; subtree sizes in reverse DFS preorder.
  std::vector<std::size_t> parent(t.n, SIZE_MAX), parent_edge(t.n, SIZE_MAX), preorder;
  preorder.reserve(t.n);
  std::vector<std::size_t> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    preorder.push_back(x);
    for (const auto& nb : adj[x]) {
      if (parent[nb.node] != SIZE_MAX) continue;
      parent[nb.node] = x;
      parent_edge[nb.node] = nb.edge;
      stack.push_back(nb.node);
    }
  }
  std::vector<std::size_t> subtree(t.n, 1);
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    if (*it != 0) subtree[parent[*it]] += subtree[*it];
  }

  WienerReport report;
  report.per_edge.resize(t.edges.size());
  std::vector<std::size_t> child_of_edge(t.edges.size());
  for (std::size_t x = 1; x < t.n; ++x) child_of_edge[parent_edge[x]] = x;

  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const Edge& edge = t.edges[e];
    const std::size_t child = child_of_edge[e];
    const std::size_t below = subtree[child];
    auto& row = report.per_edge[e];
    row.edge = edge;
    row.count_u = edge.u == child ? below : t.n - below;
    row.count_v = t.n - row.count_u;
    row.length = distance(ps[edge.u], ps[edge.v]);
    row.contribution = static_cast<double>(row.count_u) * static_cast<double>(row.count_v) * row.length;
    report.wiener += row.contribution;
    report.weight += row.length;
  }
  return report;
}

inline double tree_weight(const SpanningTree& t, const PointSet& ps) {
  require_tree_on(t, ps);
  double w = 0.0;
  for (const auto& e : t.edges) w += distance(ps[e.u], ps[e.v]);
  return w;
}

// Sum of tree distances from v to every node.
inline double delta_from(const SpanningTree& t, const PointSet& ps, std::size_t v) {
  require_tree_on(t, ps);
  if (v >= t.n) throw InvalidInput("node index " + std::to_string(v) + " out of range");
  const auto dist = detail::distances_from(detail::adjacency(t), ps, v);
  double total = 0.0;
  for (double d : dist) total += d;
  return total;
}

inline double complete_graph_wiener(const PointSet& ps) {
  if (ps.size() < 2) throw InvalidInput("complete graph Wiener index needs at least 2 points");
  double total = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) total += distance(ps[i], ps[j]);
  }
  return total;
}

// Pairs (e, f), e < f, of edge indices whose segments properly cross.
inline std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const SpanningTree& t,
                                                                       const PointSet& ps) {
  require_tree_on(t, ps);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const Edge& a = t.edges[e];
    for (std::size_t f = e + 1; f < t.edges.size(); ++f) {
      const Edge& b = t.edges[f];
      if (segments_cross(ps[a.u], ps[a.v], ps[b.u], ps[b.v])) out.emplace_back(e, f);
    }
  }
  return out;
}

// One exchange step on a crossing pair of edges. Removing (a,c) and (b,d)
// leaves three subtrees; the endpoints are renamed so that a and b share one.
// T' swaps (b,d) for (a,d), T'' swaps (a,c) for (b,c), and the one with the
// smaller Wiener index is returned (T' on a tie). At least one of them is
// strictly better than `t` when the edges cross.
inline SpanningTree uncross(const SpanningTree& t, const PointSet& ps, const Edge& e1, const Edge& e2) {
  require_tree_on(t, ps);
  auto locate = [&](const Edge& e) {
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      if (t.edges[i].same_as(e)) return i;
    }
    throw InvalidInput("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not in the tree");
  };
  const std::size_t i1 = locate(e1);
  const std::size_t i2 = locate(e2);
  const Edge first = t.edges[i1];
  const Edge second = t.edges[i2];
  if (i1 == i2 || !segments_cross(ps[first.u], ps[first.v], ps[second.u], ps[second.v])) {
    throw InvalidInput("uncross requires two properly crossing tree edges");
  }

  const auto comp = detail::components(detail::adjacency(t, i1, i2));
  std::size_t a = 0, c = 0, b = 0, d = 0;
  bool found = false;
  for (auto [x, y] : {std::pair{first.u, first.v}, std::pair{first.v, first.u}}) {
    for (auto [z, w] : {std::pair{second.u, second.v}, std::pair{second.v, second.u}}) {
      if (!found && comp[x] == comp[z]) {
        a = x, c = y, b = z, d = w;
        found = true;
      }
    }
  }
  if (!found) throw InternalError("crossing edges left no shared component");

  SpanningTree t1 = t;
  t1.edges[i2] = Edge{a, d};
  SpanningTree t2 = t;
  t2.edges[i1] = Edge{b, c};
  const double w1 = wiener_edge_contribution(t1, ps).wiener;
  const double w2 = wiener_edge_contribution(t2, ps).wiener;
  if (w1 <= w2 || approx_equal(w1, w2)) return t1;
  return t2;
}

struct UncrossResult {
  SpanningTree tree;
  std::size_t steps = 0;
};

// Repeatedly uncross the first crossing pair until the tree is planar.
inline UncrossResult uncross_until_planar(SpanningTree t, const PointSet& ps, std::size_t max_steps = 1'000'000) {
  std::size_t steps = 0;
  for (auto pairs = crossing_pairs(t, ps); !pairs.empty(); pairs = crossing_pairs(t, ps)) {
    if (steps == max_steps) throw InternalError("uncrossing did not terminate within the step budget");
    const auto [e, f] = pairs.front();
    t = uncross(t, ps, t.edges[e], t.edges[f]);
    ++steps;
  }
  return {std::move(t), steps};
}

}  // namespace wiener

#endif  // WIENER_TREE_HPP
