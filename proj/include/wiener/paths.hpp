#ifndef WIENER_PATHS_HPP
#define WIENER_PATHS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wiener/error.hpp"
#include "wiener/geometry.hpp"
#include "wiener/tree.hpp"

namespace wiener {

// A Hamiltonian path given by its visiting order. A path and its reversal
// describe the same spanning path.
struct HamiltonianPath {
  std::vector<std::size_t> order;

  friend bool operator==(const HamiltonianPath&, const HamiltonianPath&) = default;
};

inline bool is_permutation_of(const HamiltonianPath& path, std::size_t n) {
  if (path.order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : path.order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline void require_path_on(const HamiltonianPath& path, const PointSet& ps) {
  if (!is_permutation_of(path, ps.size())) {
    throw InvalidInput("path is not a permutation of the " + std::to_string(ps.size()) + " point indices");
  }
}

inline SpanningTree path_as_tree(const HamiltonianPath& path) {
  SpanningTree t{path.order.size(), {}};
  for (std::size_t i = 0; i + 1 < path.order.size(); ++i) t.edges.push_back({path.order[i], path.order[i + 1]});
  return t;
}

// The i-th edge (1-based) splits the path into i and n - i points.
inline double path_wiener(const HamiltonianPath& path, const PointSet& ps) {
  require_path_on(path, ps);
  const std::size_t n = path.order.size();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double len = distance(ps[path.order[i]], ps[path.order[i + 1]]);
    total += static_cast<double>(i + 1) * static_cast<double>(n - i - 1) * len;
  }
  return total;
}

// Wiener index of a path of n unit-length edges, C(n+1, 3).
inline std::uint64_t unit_path_wiener(std::uint64_t n) {
  if (n < 2) return 0;
  return (n + 1) * n * (n - 1) / 6;
}

// No two non-adjacent path edges properly cross. Zero-length edges never
// cross anything.
inline bool is_path_planar(const HamiltonianPath& path, const PointSet& ps) {
  require_path_on(path, ps);
  const auto& o = path.order;
  for (std::size_t e = 0; e + 1 < o.size(); ++e) {
    for (std::size_t f = e + 2; f + 1 < o.size(); ++f) {
      if (segments_cross(ps[o[e]], ps[o[e + 1]], ps[o[f]], ps[o[f + 1]])) return false;
    }
  }
  return true;
}

// --- super-node model ------------------------------------------------------
//
// Two heavy clusters of m coincident points at (0,0) and (6,0) plus single
// points p = (5,1) and q = (5,-1). A minimum-Wiener path visits each cluster
// contiguously at zero internal cost, so only the order of the four
// super-nodes matters.

struct SuperNode {
  char name = '?';
  Point anchor;
  std::size_t multiplicity = 1;
};

using SuperNodeConfig = std::array<SuperNode, 4>;

struct ConfigValue {
  SuperNodeConfig config;
  double wiener = 0.0;
  bool planar = true;
};

inline std::array<SuperNode, 4> super_nodes(std::size_t m) {
  return {SuperNode{'L', {0.0, 0.0}, m}, SuperNode{'R', {6.0, 0.0}, m}, SuperNode{'p', {5.0, 1.0}, 1},
          SuperNode{'q', {5.0, -1.0}, 1}};
}

inline double config_wiener(const SuperNodeConfig& cfg) {
  std::size_t total = 0;
  for (const auto& s : cfg) total += s.multiplicity;
  double value = 0.0;
  std::size_t before = 0;
  for (std::size_t i = 0; i + 1 < cfg.size(); ++i) {
    before += cfg[i].multiplicity;
    value += static_cast<double>(before) * static_cast<double>(total - before) *
             distance(cfg[i].anchor, cfg[i + 1].anchor);
  }
  return value;
}

// Planarity of the 3-edge path drawn on the four anchors.
inline bool config_planar(const SuperNodeConfig& cfg) {
  return !segments_cross(cfg[0].anchor, cfg[1].anchor, cfg[2].anchor, cfg[3].anchor);
}

inline std::string config_label(const SuperNodeConfig& cfg) {
  std::string s;
  for (const auto& n : cfg) s.push_back(n.name);
  return s;
}

// All 4!/2 = 12 orders of the super-nodes (each order and its reverse counted
// once), sorted by ascending Wiener value; ties keep enumeration order.
inline std::vector<ConfigValue> twelve_config_wiener(std::size_t m) {
  if (m < 1) throw InvalidInput("cluster multiplicity must be at least 1");
  const auto nodes = super_nodes(m);
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  std::vector<ConfigValue> out;
  do {
    if (perm.front() > perm.back()) continue;
    SuperNodeConfig cfg;
    for (std::size_t i = 0; i < 4; ++i) cfg[i] = nodes[perm[i]];
    out.push_back({cfg, config_wiener(cfg), config_planar(cfg)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const ConfigValue& a, const ConfigValue& b) { return a.wiener < b.wiener; });
  return out;
}

struct ThresholdSweep {
  std::size_t m_max = 0;
  // Smallest m such that the minimizer is non-planar for every m' in
  // [m, m_max]; 0 when the minimizer at m_max is planar.
  std::size_t threshold = 0;
  std::vector<bool> minimizer_planar;  // indexed by m - 1
  // Some m had two tied minimizers that disagree on planarity.
  bool ambiguous_tie = false;
};

inline ThresholdSweep sweep_nonplanar_threshold(std::size_t m_max) {
  ThresholdSweep sweep;
  sweep.m_max = m_max;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const auto rows = twelve_config_wiener(m);
    const bool planar = rows.front().planar;
    for (const auto& r : rows) {
      if (r.wiener != rows.front().wiener) break;
      if (r.planar != planar) sweep.ambiguous_tie = true;
    }
    sweep.minimizer_planar.push_back(planar);
  }
  std::size_t m = m_max;
  while (m >= 1 && !sweep.minimizer_planar[m - 1]) --m;
  sweep.threshold = (m == m_max) ? 0 : m + 1;
  return sweep;
}

// --- grid bound ------------------------------------------------------------

struct GridBoundReport {
  double value = 0.0;
  std::uint64_t bound = 0;
  bool ok = false;
  double complete_graph = 0.0;
  double ratio = 0.0;  // value / complete_graph
};

// Any Hamiltonian path on points with pairwise distances >= 1 has Wiener
// index at least C(n+1, 3).
inline GridBoundReport grid_path_bound_check(const PointSet& ps, const HamiltonianPath& path,
                                             double tolerance = kRelTol) {
  require_path_on(path, ps);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (distance(ps[i], ps[j]) < 1.0 - tolerance) {
        throw InvalidInput("points " + std::to_string(i) + " and " + std::to_string(j) +
                           " are closer than unit distance");
      }
    }
  }
  GridBoundReport r;
  r.value = path_wiener(path, ps);
  r.bound = unit_path_wiener(ps.size());
  r.ok = r.value >= static_cast<double>(r.bound) - tolerance;
  if (ps.size() >= 2) {
    r.complete_graph = complete_graph_wiener(ps);
    r.ratio = r.value / r.complete_graph;
  }
  return r;
}

}  // namespace wiener

#endif  // WIENER_PATHS_HPP
