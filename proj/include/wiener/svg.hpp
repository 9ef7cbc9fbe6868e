#ifndef WIENER_SVG_HPP
#define WIENER_SVG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "wiener/geometry.hpp"
#include "wiener/tree.hpp"

namespace wiener {

struct SvgStyle {
  double canvas = 800.0;
  double margin = 40.0;
  double point_radius = 4.0;
};

namespace detail {

inline std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

// Points as circles, edges as lines; every edge taking part in a proper
// crossing gets class "crossing" and a red stroke. Output depends only on the
// inputs.
inline std::string render_svg(const PointSet& ps, const std::vector<Edge>& edges, const SvgStyle& style = {}) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!ps.empty()) {
    min_x = max_x = ps[0].x;
    min_y = max_y = ps[0].y;
    for (const auto& p : ps) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = (style.canvas - 2.0 * style.margin) / span;
  // SVG y grows downwards.
  auto sx = [&](double x) { return detail::fixed3(style.margin + (x - min_x) * scale); };
  auto sy = [&](double y) { return detail::fixed3(style.canvas - style.margin - (y - min_y) * scale); };

  std::vector<bool> crossing(edges.size(), false);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      if (segments_cross(ps[edges[e].u], ps[edges[e].v], ps[edges[f].u], ps[edges[f].v])) {
        crossing[e] = crossing[f] = true;
      }
    }
  }

  const std::string size = detail::fixed3(style.canvas);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g id=\"edges\" stroke-width=\"1.5\">\n";
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Point& a = ps[edges[e].u];
    const Point& b = ps[edges[e].v];
    out += "<line class=\"" + std::string(crossing[e] ? "crossing" : "edge") + "\" x1=\"" + sx(a.x) + "\" y1=\"" +
           sy(a.y) + "\" x2=\"" + sx(b.x) + "\" y2=\"" + sy(b.y) + "\" stroke=\"" +
           (crossing[e] ? "#d62728" : "#1f4e79") + "\"/>\n";
  }
  out += "</g>\n<g id=\"points\" fill=\"black\">\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out += "<circle id=\"p" + std::to_string(i) + "\" cx=\"" + sx(ps[i].x) + "\" cy=\"" + sy(ps[i].y) + "\" r=\"" +
           detail::fixed3(style.point_radius) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace wiener

#endif  // WIENER_SVG_HPP
