#ifndef WIENER_GEOMETRY_HPP
#define WIENER_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wiener/error.hpp"

namespace wiener {

// Absolute tolerance on the signed-area predicate. Inputs are expected at
// magnitudes up to ~1e6.
inline constexpr double kOrientationEps = 1e-12;

// Relative tolerance used for all Wiener/weight comparisons.
inline constexpr double kRelTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Role {
  plain,
  circle,
  center_cluster,
  gadget_l,
  gadget_r,
  cluster_left,
  cluster_right,
  apex,
};

inline std::string_view role_name(Role r) {
  switch (r) {
    case Role::plain: return "plain";
    case Role::circle: return "circle";
    case Role::center_cluster: return "center-cluster";
    case Role::gadget_l: return "gadget-l";
    case Role::gadget_r: return "gadget-r";
    case Role::cluster_left: return "cluster-left";
    case Role::cluster_right: return "cluster-right";
    case Role::apex: return "apex";
  }
  return "plain";
}

inline Role parse_role(std::string_view s) {
  for (Role r : {Role::plain, Role::circle, Role::center_cluster, Role::gadget_l,
                 Role::gadget_r, Role::cluster_left, Role::cluster_right, Role::apex}) {
    if (role_name(r) == s) return r;
  }
  throw InvalidInput("unknown point label '" + std::string(s) + "'");
}

// Ordered, optionally labeled planar points. Index i identifies point i in
// every tree, path and table built on top of the set. Coincident points are
// allowed.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts) : points_(std::move(pts)) { check(); }
  PointSet(std::vector<Point> pts, std::vector<Role> labels)
      : points_(std::move(pts)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != points_.size()) {
      throw InvalidInput("label count " + std::to_string(labels_.size()) +
                         " does not match point count " + std::to_string(points_.size()));
    }
    check();
  }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  bool has_labels() const { return !labels_.empty(); }
  Role label(std::size_t i) const { return labels_.empty() ? Role::plain : labels_[i]; }
  const std::vector<Role>& labels() const { return labels_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  void check() const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
        throw InvalidInput("point " + std::to_string(i) + " has a non-finite coordinate");
      }
    }
  }

  std::vector<Point> points_;
  std::vector<Role> labels_;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

// Twice the signed area of (a, b, c); positive for a counter-clockwise turn.
inline double cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// +1 counter-clockwise, -1 clockwise, 0 collinear within kOrientationEps.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  const double v = cross(a, b, c);
  if (v > kOrientationEps) return 1;
  if (v < -kOrientationEps) return -1;
  return 0;
}

// True iff the open segments ab and cd meet at a single point interior to
// both. Shared endpoints, touching, collinear overlap and zero-length
// segments all return false.
inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == b || c == d) return false;
  if (a == c || a == d || b == c || b == d) return false;
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

namespace detail {

inline bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Andrew's monotone chain keeping only strict turns. Returns indices in
// counter-clockwise order starting at the lexicographic minimum.
inline std::vector<std::size_t> strict_hull_ccw(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(ps[a], ps[b]); });
  if (n < 3) return idx;

  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orientation(ps[hull[k - 2]], ps[hull[k - 1]], ps[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(ps[hull[k - 2]], ps[hull[k - 1]], ps[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace detail

// Index of a point that keeps `ps` from being in strictly convex position, or
// nullopt if the set is strictly convex. Requires n >= 3.
inline std::optional<std::size_t> convexity_violation(const PointSet& ps) {
  if (ps.size() < 3) {
    throw InvalidInput("convex position needs at least 3 points, got " + std::to_string(ps.size()));
  }
  const auto hull = detail::strict_hull_ccw(ps);
  if (hull.size() == ps.size()) return std::nullopt;
  std::vector<bool> on_hull(ps.size(), false);
  for (auto i : hull) on_hull[i] = true;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!on_hull[i]) return i;
  }
  return std::nullopt;
}

inline bool is_strictly_convex_position(const PointSet& ps) {
  return !convexity_violation(ps).has_value();
}

// Clockwise hull order starting at the lexicographically smallest point.
inline std::vector<std::size_t> convex_clockwise_order(const PointSet& ps) {
  if (auto bad = convexity_violation(ps)) {
    throw InvalidInput("point " + std::to_string(*bad) + " (" + std::to_string(ps[*bad].x) + ", " +
                       std::to_string(ps[*bad].y) + ") is not a strict convex hull vertex");
  }
  auto order = detail::strict_hull_ccw(ps);
  std::reverse(order.begin() + 1, order.end());
  return order;
}

}  // namespace wiener

#endif  // WIENER_GEOMETRY_HPP
