#ifndef WIENER_IO_HPP
#define WIENER_IO_HPP

// JSON encodings of the library types (nlohmann/json). Doubles are written in
// shortest round-trip form.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "wiener/dp_convex.hpp"
#include "wiener/error.hpp"
#include "wiener/geometry.hpp"
#include "wiener/instances.hpp"
#include "wiener/oracle.hpp"
#include "wiener/paths.hpp"
#include "wiener/tree.hpp"

namespace wiener {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string(what) + " JSON is missing \"" + key + "\"");
  }
  return j.at(key);
}

inline std::size_t index_value(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidInput(std::string(what) + " indices must be non-negative integers");
  }
  return v.get<std::size_t>();
}

}  // namespace detail

// --- PointSet ----------------------------------------------------------------

inline json to_json(const PointSet& ps) {
  json pts = json::array();
  for (const auto& p : ps) pts.push_back(json::array({p.x, p.y}));
  json j{{"points", std::move(pts)}};
  if (ps.has_labels()) {
    json labels = json::array();
    for (auto r : ps.labels()) labels.push_back(std::string(role_name(r)));
    j["labels"] = std::move(labels);
  }
  return j;
}

inline PointSet point_set_from_json(const json& j) {
  const json& pts = detail::field(j, "points", "PointSet");
  if (!pts.is_array()) throw InvalidInput("PointSet \"points\" must be an array");
  std::vector<Point> points;
  points.reserve(pts.size());
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw InvalidInput("each point must be a [x, y] pair of numbers");
    }
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  std::vector<Role> labels;
  if (j.contains("labels") && !j.at("labels").is_null()) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw InvalidInput("labels must be strings");
      labels.push_back(parse_role(l.get<std::string>()));
    }
  }
  return PointSet(std::move(points), std::move(labels));
}

// --- SpanningTree / HamiltonianPath -------------------------------------------

inline json to_json(const SpanningTree& t) {
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back(json::array({e.u, e.v}));
  return json{{"n", t.n}, {"edges", std::move(edges)}};
}

inline SpanningTree tree_from_json(const json& j) {
  SpanningTree t;
  t.n = detail::index_value(detail::field(j, "n", "SpanningTree"), "SpanningTree");
  const json& edges = detail::field(j, "edges", "SpanningTree");
  if (!edges.is_array()) throw InvalidInput("SpanningTree \"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("each edge must be a [u, v] pair");
    t.edges.push_back({detail::index_value(e[0], "edge"), detail::index_value(e[1], "edge")});
  }
  return t;
}

inline json to_json(const HamiltonianPath& p) { return json{{"order", p.order}}; }

inline HamiltonianPath path_from_json(const json& j) {
  const json& order = detail::field(j, "order", "HamiltonianPath");
  if (!order.is_array()) throw InvalidInput("HamiltonianPath \"order\" must be an array");
  HamiltonianPath p;
  for (const auto& v : order) p.order.push_back(detail::index_value(v, "path"));
  return p;
}

// --- reports -----------------------------------------------------------------

inline json to_json(const WienerReport& r) {
  json rows = json::array();
  for (const auto& e : r.per_edge) {
    rows.push_back(json{{"edge", json::array({e.edge.u, e.edge.v})},
                        {"n_u", e.count_u},
                        {"n_v", e.count_v},
                        {"length", e.length},
                        {"contribution", e.contribution}});
  }
  return json{{"wiener", r.wiener}, {"weight", r.weight}, {"per_edge_contribution", std::move(rows)}};
}

inline json to_json(const ConvexSolution& s) {
  return json{{"wiener", s.wiener}, {"tree", to_json(s.tree)}, {"order", s.order}};
}

inline json to_json(const DPTables& t) {
  auto matrix = [&](const std::vector<double>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < t.n; ++j) {
        const double v = m[i * t.n + j];
        row.push_back(std::isfinite(v) ? json(v) : json(nullptr));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto choices = [&](const std::vector<SplitChoice>& c) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < t.n; ++j) {
        const auto& ch = c[i * t.n + j];
        row.push_back(ch.empty() ? json(nullptr) : json::array({ch.k, ch.l}));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return json{{"n", t.n},
              {"m_right", matrix(t.m_right)},
              {"m_left", matrix(t.m_left)},
              {"choice_right", choices(t.choice_right)},
              {"choice_left", choices(t.choice_left)}};
}

template <typename Witness>
json to_json(const OracleResult<Witness>& r) {
  if (!r.feasible) return json{{"infeasible", true}, {"count", r.enumerated_count}};
  return json{{"count", r.enumerated_count}, {"value", r.best_value}, {"witness", to_json(r.best_witness)}};
}

inline json sidecar_json(const PartitionInstance& inst) {
  json circle = json::array(), gl = json::array(), gr = json::array();
  for (std::size_t i = 0; i < inst.n(); ++i) {
    circle.push_back(inst.p_index(i));
    gl.push_back(inst.l_index(i));
    gr.push_back(inst.r_index(i));
  }
  return json{{"B", inst.budget},
              {"W", inst.threshold},
              {"R", inst.sum},
              {"X", inst.x},
              {"roles",
               {{"star_center", inst.star_center()},
                {"center_cluster", json::array({0, inst.cluster_size()})},
                {"circle", std::move(circle)},
                {"gadget_l", std::move(gl)},
                {"gadget_r", std::move(gr)}}}};
}

}  // namespace wiener

#endif  // WIENER_IO_HPP
