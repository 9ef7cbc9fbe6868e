#ifndef WIENER_INSTANCES_HPP
#define WIENER_INSTANCES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wiener/error.hpp"
#include "wiener/geometry.hpp"
#include "wiener/tree.hpp"

namespace wiener {

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

// Fisher-Yates with the same portable draws.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace detail

inline constexpr double kMinAngularGap = 1e-3;

// n points in strictly convex position, returned in a seed-dependent shuffled
// order. Angles around the unit circle keep a gap of at least 1e-3 rad; each
// radius is then redrawn from [0.9, 1.1] until the neighbouring turns stay
// strictly convex (or kept at 1 after 64 failed draws).
inline PointSet gen_random_convex(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidInput("random convex set needs n >= 3, got " + std::to_string(n));
  const double two_pi = 2.0 * std::numbers::pi;
  if (static_cast<double>(n) * kMinAngularGap >= two_pi) {
    throw InvalidInput("n = " + std::to_string(n) + " cannot keep the minimum angular gap");
  }
  std::mt19937_64 rng(seed);

  std::vector<double> gaps(n);
  double sum = 0.0;
  for (auto& g : gaps) {
    g = 0.05 + detail::unit_uniform(rng);
    sum += g;
  }
  const double spare = two_pi - static_cast<double>(n) * kMinAngularGap;
  std::vector<double> angle(n);
  double a = detail::uniform(rng, 0.0, two_pi);
  for (std::size_t i = 0; i < n; ++i) {
    angle[i] = a;
    a += kMinAngularGap + spare * gaps[i] / sum;
  }

  std::vector<double> radius(n, 1.0);
  auto at = [&](std::size_t i) {
    return Point{radius[i] * std::cos(angle[i]), radius[i] * std::sin(angle[i])};
  };
  auto left_turn = [&](std::size_t i) {
    return orientation(at((i + n - 1) % n), at(i), at((i + 1) % n)) > 0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const double keep = radius[i];
      radius[i] = detail::uniform(rng, 0.9, 1.1);
      if (left_turn((i + n - 1) % n) && left_turn(i) && left_turn((i + 1) % n)) break;
      radius[i] = keep;
    }
  }

  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = at(i);
  detail::shuffle(pts, rng);
  PointSet ps(std::move(pts));
  if (!is_strictly_convex_position(ps)) throw InternalError("generated set is not strictly convex");
  return ps;
}

// Integer grid points (a, b), 0 <= a < w, 0 <= b < h, row by row.
inline PointSet gen_grid(std::size_t w, std::size_t h) {
  if (w < 1 || h < 1) throw InvalidInput("grid dimensions must be positive");
  std::vector<Point> pts;
  pts.reserve(w * h);
  for (std::size_t b = 0; b < h; ++b) {
    for (std::size_t a = 0; a < w; ++a) pts.push_back({static_cast<double>(a), static_cast<double>(b)});
  }
  return PointSet(std::move(pts));
}

// Unit-spaced points on the x axis.
inline PointSet gen_collinear(std::size_t n) { return gen_grid(n, 1); }

// --- Partition reduction ---------------------------------------------------

inline constexpr std::size_t kPartitionDeskScaleMax = 12;

// Point layout: the n^3 center-cluster points come first (index 0 is the star
// center s), then p_1..p_n, then l_1..l_n, then r_1..r_n.
struct PartitionInstance {
  std::vector<std::int64_t> x;
  std::int64_t sum = 0;  // R
  PointSet points;
  double budget = 0.0;     // B = (n^2 + 7/4) R
  double threshold = 0.0;  // W = 3n^2(m-3)R + (9m/4 - 13/4)R, m = n^3 + 3n

  std::size_t n() const { return x.size(); }
  std::size_t cluster_size() const { return n() * n() * n(); }
  std::size_t star_center() const { return 0; }
  std::size_t p_index(std::size_t i) const { return cluster_size() + i; }
  std::size_t l_index(std::size_t i) const { return cluster_size() + n() + i; }
  std::size_t r_index(std::size_t i) const { return cluster_size() + 2 * n() + i; }
};

inline double partition_budget(std::size_t n, std::int64_t sum) {
  const double nn = static_cast<double>(n);
  return (nn * nn + 7.0 / 4.0) * static_cast<double>(sum);
}

// Expanded closed form 3n^5 R + 45/4 n^3 R - 9n^2 R + 27/4 n R - 13/4 R.
inline double partition_threshold(std::size_t n, std::int64_t sum) {
  const double nn = static_cast<double>(n);
  const double r = static_cast<double>(sum);
  return (3.0 * std::pow(nn, 5) + 45.0 / 4.0 * std::pow(nn, 3) - 9.0 * nn * nn + 27.0 / 4.0 * nn - 13.0 / 4.0) * r;
}

inline PartitionInstance gen_partition_instance(const std::vector<std::int64_t>& x) {
  if (x.size() < 2) throw InvalidInput("partition input needs at least 2 numbers");
  PartitionInstance inst;
  inst.x = x;
  for (auto v : x) {
    if (v < 1) throw InvalidInput("partition numbers must be positive, got " + std::to_string(v));
    inst.sum += v;
  }
  if (inst.sum % 2 != 0) throw InvalidInput("partition numbers must have an even sum, got " + std::to_string(inst.sum));

  const std::size_t n = x.size();
  const double radius = static_cast<double>(n) * static_cast<double>(inst.sum);
  // l_i, r_i sit at distance x_i from p_i, x_i/2 apart, mirrored about the
  // outward radial ray through p_i.
  const double sin_half = 0.25;
  const double cos_half = std::sqrt(1.0 - sin_half * sin_half);

  std::vector<Point> pts;
  std::vector<Role> roles;
  const std::size_t m = n * n * n + 3 * n;
  pts.reserve(m);
  roles.reserve(m);
  for (std::size_t c = 0; c < n * n * n; ++c) {
    pts.push_back({0.0, 0.0});
    roles.push_back(Role::center_cluster);
  }
  std::vector<Point> l(n), r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    const Point u{std::cos(theta), std::sin(theta)};
    const Point v{-u.y, u.x};
    const Point p{radius * u.x, radius * u.y};
    const double xi = static_cast<double>(x[i]);
    pts.push_back(p);
    roles.push_back(Role::circle);
    l[i] = {p.x + xi * (cos_half * u.x + sin_half * v.x), p.y + xi * (cos_half * u.y + sin_half * v.y)};
    r[i] = {p.x + xi * (cos_half * u.x - sin_half * v.x), p.y + xi * (cos_half * u.y - sin_half * v.y)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(l[i]);
    roles.push_back(Role::gadget_l);
  }
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(r[i]);
    roles.push_back(Role::gadget_r);
  }
  inst.points = PointSet(std::move(pts), std::move(roles));
  inst.budget = partition_budget(n, inst.sum);
  inst.threshold = partition_threshold(n, inst.sum);
  return inst;
}

// subset holds 0-based indices into x.
inline std::int64_t subset_sum(const PartitionInstance& inst, const std::vector<std::size_t>& subset) {
  std::int64_t s = 0;
  for (auto i : subset) s += inst.x.at(i);
  return s;
}

// Star from s over the cluster and every p_i; (p_i, l_i) always; (p_i, r_i)
// for i in the subset, (l_i, r_i) otherwise.
inline SpanningTree build_partition_tree(const PartitionInstance& inst, const std::vector<std::size_t>& subset) {
  const std::size_t n = inst.n();
  std::vector<bool> chosen(n, false);
  for (auto i : subset) {
    if (i >= n) throw InvalidInput("subset index " + std::to_string(i) + " out of range");
    chosen[i] = true;
  }
  SpanningTree t{inst.points.size(), {}};
  t.edges.reserve(t.n - 1);
  const std::size_t s = inst.star_center();
  for (std::size_t c = 1; c < inst.cluster_size(); ++c) t.edges.push_back({s, c});
  for (std::size_t i = 0; i < n; ++i) t.edges.push_back({s, inst.p_index(i)});
  for (std::size_t i = 0; i < n; ++i) {
    t.edges.push_back({inst.p_index(i), inst.l_index(i)});
    if (chosen[i]) {
      t.edges.push_back({inst.p_index(i), inst.r_index(i)});
    } else {
      t.edges.push_back({inst.l_index(i), inst.r_index(i)});
    }
  }
  return t;
}

// --- path counterexample ---------------------------------------------------

struct PathCounterexampleInstance {
  std::size_t m = 1;
  double epsilon = 0.0;
  PointSet points;  // m left-cluster points, m right-cluster points, p, q
};

inline PathCounterexampleInstance gen_path_counterexample(std::size_t m, double epsilon) {
  if (m < 1) throw InvalidInput("cluster multiplicity must be at least 1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw InvalidInput("epsilon must be a finite value >= 0");
  std::vector<Point> pts;
  std::vector<Role> roles;
  auto cluster = [&](Point anchor, Role role) {
    for (std::size_t k = 0; k < m; ++k) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
      pts.push_back({anchor.x + epsilon * std::cos(t), anchor.y + epsilon * std::sin(t)});
      roles.push_back(role);
    }
  };
  cluster({0.0, 0.0}, Role::cluster_left);
  cluster({6.0, 0.0}, Role::cluster_right);
  pts.push_back({5.0, 1.0});
  roles.push_back(Role::apex);
  pts.push_back({5.0, -1.0});
  roles.push_back(Role::apex);
  return {m, epsilon, PointSet(std::move(pts), std::move(roles))};
}

}  // namespace wiener

#endif  // WIENER_INSTANCES_HPP
