#ifndef WIENER_ORACLE_HPP
#define WIENER_ORACLE_HPP

// Exhaustive ground truth. Deliberately brute force: every labeled tree via
// its Pruefer sequence, every Hamiltonian path via permutations.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wiener/error.hpp"
#include "wiener/geometry.hpp"
#include "wiener/paths.hpp"
#include "wiener/tree.hpp"

namespace wiener {

struct OracleLimits {
  std::size_t max_tree_nodes = 9;   // 9^7 ~ 4.8e6 trees
  std::size_t max_path_nodes = 10;  // 10!/2 ~ 1.8e6 paths
  bool force = false;               // skip the caps; runtime is exponential
  unsigned threads = 1;
  double budget_tolerance = kRelTol;  // relative slack on the weight budget
};

template <typename Witness>
struct OracleResult {
  double best_value = std::numeric_limits<double>::infinity();
  Witness best_witness{};
  std::uint64_t enumerated_count = 0;
  bool feasible = true;
};

inline std::uint64_t cayley_count(std::size_t n) {
  if (n < 2) return 1;
  std::uint64_t c = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) c *= n;
  return c;
}

namespace detail {

inline void check_tree_cap(std::size_t n, const OracleLimits& lim) {
  if (n < 2) throw LimitExceeded("tree enumeration needs n >= 2, got " + std::to_string(n));
  if (!lim.force && n > lim.max_tree_nodes) {
    throw LimitExceeded("tree enumeration over " + std::to_string(n) + " nodes visits " +
                        std::to_string(cayley_count(n)) + " trees; cap is n <= " +
                        std::to_string(lim.max_tree_nodes) + " (use force to override)");
  }
  if (n > 20) throw LimitExceeded("tree enumeration beyond 20 nodes overflows the tree count");
}

inline void check_path_cap(std::size_t n, const OracleLimits& lim) {
  if (n < 2) throw LimitExceeded("path enumeration needs n >= 2, got " + std::to_string(n));
  if (!lim.force && n > lim.max_path_nodes) {
    throw LimitExceeded("path enumeration over " + std::to_string(n) + " nodes is capped at n <= " +
                        std::to_string(lim.max_path_nodes) + " (use force to override)");
  }
  if (n > 20) throw LimitExceeded("path enumeration beyond 20 nodes overflows the path count");
}

// Linear-time Pruefer decoding. Edges come out as (leaf, parent) in removal
// order, which roots the tree at n-1: when a leaf is removed, its whole
// subtree has already been removed before it.
class PrueferDecoder {
 public:
  explicit PrueferDecoder(std::size_t n) : n_(n), degree_(n), size_(n), tree_{n, std::vector<Edge>(n - 1)} {}

  // Decodes `seq` and records, per emitted edge, the node count on the leaf side.
  const SpanningTree& decode(const std::vector<std::size_t>& seq) {
    std::fill(degree_.begin(), degree_.end(), 1);
    std::fill(size_.begin(), size_.end(), 1);
    for (auto v : seq) ++degree_[v];
    std::size_t ptr = 0;
    while (degree_[ptr] != 1) ++ptr;
    std::size_t leaf = ptr;
    std::size_t e = 0;
    for (auto v : seq) {
      tree_.edges[e++] = {leaf, v};
      size_[v] += size_[leaf];
      --degree_[leaf];
      if (--degree_[v] == 1 && v < ptr) {
        leaf = v;
      } else {
        ++ptr;
        while (degree_[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    tree_.edges[e] = {leaf, n_ - 1};
    return tree_;
  }

  // Node count on the leaf (first) side of edge e after decode().
  std::size_t leaf_side(std::size_t e) const { return size_[tree_.edges[e].u]; }

 private:
  std::size_t n_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> size_;
  SpanningTree tree_;
};

// Visits every Pruefer sequence with the given leading symbol (or all
// sequences when leading is SIZE_MAX) in lexicographic order.
inline void for_each_sequence(std::size_t n, std::size_t leading,
                              const std::function<void(const std::vector<std::size_t>&)>& fn) {
  const std::size_t len = n - 2;
  std::vector<std::size_t> seq(len, 0);
  const std::size_t fixed = (leading == SIZE_MAX || len == 0) ? 0 : 1;
  if (fixed) seq[0] = leading;
  while (true) {
    fn(seq);
    bool wrapped = true;
    for (std::size_t pos = len; pos > fixed;) {
      --pos;
      if (++seq[pos] < n) {
        wrapped = false;
        break;
      }
      seq[pos] = 0;
    }
    if (wrapped) return;
  }
}

inline std::vector<double> distance_matrix(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = distance(ps[i], ps[j]);
  }
  return d;
}

// Runs `body(leading)` for every leading Pruefer symbol, spread over workers,
// and returns results in leading-symbol order so that merging them reproduces
// the serial scan.
template <typename Partial>
std::vector<Partial> partitioned(std::size_t n, unsigned threads,
                                 const std::function<Partial(std::size_t)>& body) {
  if (n == 2) return {body(SIZE_MAX)};
  std::vector<Partial> parts(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t s = 0; s < n; ++s) parts[s] = body(s);
    return parts;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t s = w; s < n; s += workers) parts[s] = body(s);
    });
  }
  pool.clear();
  return parts;
}

template <typename Witness>
OracleResult<Witness> merge(const std::vector<OracleResult<Witness>>& parts) {
  OracleResult<Witness> out;
  out.feasible = false;
  for (const auto& p : parts) {
    out.enumerated_count += p.enumerated_count;
    if (p.feasible && (!out.feasible || p.best_value < out.best_value)) {
      out.best_value = p.best_value;
      out.best_witness = p.best_witness;
      out.feasible = true;
    }
  }
  return out;
}

}  // namespace detail

// Decodes one Pruefer sequence over labels 0..n-1 (length n-2).
inline SpanningTree prufer_decode(const std::vector<std::size_t>& seq, std::size_t n) {
  if (n < 2 || seq.size() != n - 2) throw InvalidInput("Pruefer sequence must have length n - 2");
  for (auto v : seq) {
    if (v >= n) throw InvalidInput("Pruefer symbol out of range");
  }
  detail::PrueferDecoder dec(n);
  return dec.decode(seq);
}

// Calls fn(tree) for each of the n^(n-2) labeled trees, in lexicographic
// Pruefer order.
template <typename Fn>
void for_each_spanning_tree(std::size_t n, Fn&& fn, const OracleLimits& lim = {}) {
  detail::check_tree_cap(n, lim);
  detail::PrueferDecoder dec(n);
  detail::for_each_sequence(n, SIZE_MAX, [&](const std::vector<std::size_t>& seq) { fn(dec.decode(seq)); });
}

inline std::vector<SpanningTree> enumerate_spanning_trees(std::size_t n, const OracleLimits& lim = {}) {
  detail::check_tree_cap(n, lim);
  std::vector<SpanningTree> out;
  out.reserve(cayley_count(n));
  for_each_spanning_tree(n, [&](const SpanningTree& t) { out.push_back(t); }, lim);
  return out;
}

namespace detail {

// Minimum Wiener over all trees whose weight is at most `budget`.
inline OracleResult<SpanningTree> tree_search(const PointSet& ps, double budget, const OracleLimits& lim) {
  const std::size_t n = ps.size();
  check_tree_cap(n, lim);
  const auto dist = distance_matrix(ps);
  const double slack = lim.budget_tolerance * std::max(1.0, std::abs(budget));

  auto body = [&](std::size_t leading) {
    OracleResult<SpanningTree> part;
    part.feasible = false;
    PrueferDecoder dec(n);
    for_each_sequence(n, leading, [&](const std::vector<std::size_t>& seq) {
      const SpanningTree& t = dec.decode(seq);
      ++part.enumerated_count;
      double wiener = 0.0, weight = 0.0;
      for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const double len = dist[t.edges[e].u * n + t.edges[e].v];
        const std::size_t side = dec.leaf_side(e);
        wiener += static_cast<double>(side) * static_cast<double>(n - side) * len;
        weight += len;
      }
      if (!(weight <= budget + slack)) return;
      if (!part.feasible || wiener < part.best_value) {
        part.best_value = wiener;
        part.best_witness = t;
        part.feasible = true;
      }
    });
    return part;
  };
  return merge(partitioned<OracleResult<SpanningTree>>(n, lim.threads, body));
}

}  // namespace detail

inline OracleResult<SpanningTree> min_wiener_tree_bruteforce(const PointSet& ps, const OracleLimits& lim = {}) {
  return detail::tree_search(ps, std::numeric_limits<double>::infinity(), lim);
}

// Minimum Wiener among trees with weight <= budget; feasible == false when no
// tree fits the budget.
inline OracleResult<SpanningTree> budgeted_min_wiener(const PointSet& ps, double budget,
                                                      const OracleLimits& lim = {}) {
  if (std::isnan(budget)) throw InvalidInput("budget is NaN");
  return detail::tree_search(ps, budget, lim);
}

// Minimum Wiener over the n!/2 Hamiltonian paths (a path and its reverse are
// one path; the representative has order.front() < order.back()).
inline OracleResult<HamiltonianPath> min_wiener_path_bruteforce(const PointSet& ps, const OracleLimits& lim = {}) {
  const std::size_t n = ps.size();
  detail::check_path_cap(n, lim);
  const auto dist = detail::distance_matrix(ps);
  std::vector<double> weight(n);
  for (std::size_t i = 0; i + 1 < n; ++i) weight[i] = static_cast<double>(i + 1) * static_cast<double>(n - i - 1);

  auto body = [&](std::size_t first) {
    OracleResult<HamiltonianPath> part;
    part.feasible = false;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::size_t fixed = 0;
    if (first != SIZE_MAX) {
      std::rotate(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(first),
                  perm.begin() + static_cast<std::ptrdiff_t>(first) + 1);
      fixed = 1;
    }
    do {
      if (perm.front() > perm.back()) continue;
      ++part.enumerated_count;
      double w = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) w += weight[i] * dist[perm[i] * n + perm[i + 1]];
      if (!part.feasible || w < part.best_value) {
        part.best_value = w;
        part.best_witness.order = perm;
        part.feasible = true;
      }
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(fixed), perm.end()));
    return part;
  };
  if (n == 2) return detail::merge(std::vector{body(SIZE_MAX)});
  return detail::merge(detail::partitioned<OracleResult<HamiltonianPath>>(n, lim.threads, body));
}

// Calls fn(path) for each of the n!/2 Hamiltonian paths.
template <typename Fn>
void for_each_hamiltonian_path(std::size_t n, Fn&& fn, const OracleLimits& lim = {}) {
  detail::check_path_cap(n, lim);
  HamiltonianPath path;
  path.order.resize(n);
  std::iota(path.order.begin(), path.order.end(), std::size_t{0});
  do {
    if (path.order.front() < path.order.back()) fn(std::as_const(path));
  } while (std::next_permutation(path.order.begin(), path.order.end()));
}

}  // namespace wiener

#endif  // WIENER_ORACLE_HPP
