#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "maxplus/io.hpp"
#include "maxplus/location.hpp"

// SVG rendering of solved 2D instances: the envelope rectangle, the two
// 45-degree construction lines through its corners, the demand points, and
// the solution segment as the single polyline of the drawing. Constrained
// solves add the per-point cap squares and a heavier overlay on the feasible
// part of the segment.

namespace maxplus {

namespace detail {

inline void append_attr(std::string& out, const char* name, double v) {
  out += ' ';
  out += name;
  out += "=\"";
  out += format_real(v);
  out += '"';
}

inline void append_line(std::string& out, double x1, double y1, double x2, double y2,
                        const char* style) {
  out += "  <line";
  append_attr(out, "x1", x1);
  append_attr(out, "y1", y1);
  append_attr(out, "x2", x2);
  append_attr(out, "y2", y2);
  out += ' ';
  out += style;
  out += "/>\n";
}

}  // namespace detail

// Renders a solved 2D instance. The report may come from either solver;
// cap squares and the feasible overlay appear only when it carries the
// constrained parts.
inline std::string render_svg(const location_instance& inst, const solve_report& report) {
  if (inst.dim() != 2) throw dimension_error("render_svg: only 2D instances are drawable");
  if (report.parts && !inst.caps)
    throw missing_caps_error("render_svg: constrained report needs the instance caps");

  double lo_x = inst.points[0][0], hi_x = lo_x;
  double lo_y = inst.points[0][1], hi_y = lo_y;
  for (const auto& r : inst.points) {
    lo_x = std::min(lo_x, r[0]);
    hi_x = std::max(hi_x, r[0]);
    lo_y = std::min(lo_y, r[1]);
    hi_y = std::max(hi_y, r[1]);
  }
  const double pad = 10.0;
  const double width = hi_x - lo_x + 2.0 * pad;
  const double height = hi_y - lo_y + 2.0 * pad;
  const double unit = std::max(width, height);
  const double thin = unit / 400.0;
  const double thick = unit / 80.0;

  // The construction rectangle: the cap-free envelopes.
  const vec& rect_p = report.parts ? report.parts->p0 : report.family.p;
  const vec& rect_q = report.parts ? report.parts->q0 : report.family.q;
  const double rq1 = rect_q[0].value(), rq2 = rect_q[1].value();
  const double rp1 = rect_p[0].value(), rp2 = rect_p[1].value();

  const std::vector<double> seg_a = report.family.point_at(std::vector<double>{0.0, 0.0});
  const std::vector<double> seg_b = report.family.point_at(std::vector<double>{1.0, 1.0});

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  out += format_real(lo_x - pad) + " " + format_real(-(hi_y + pad)) + " " +
         format_real(width) + " " + format_real(height);
  out += "\">\n";
  // Flip the y axis so the drawing uses the usual math orientation.
  out += "<g transform=\"matrix(1 0 0 -1 0 0)\" fill=\"none\">\n";

  const std::string frame_style =
      "stroke=\"#999999\" stroke-width=\"" + format_real(thin) + "\"";
  out += "  <rect";
  detail::append_attr(out, "x", rq1);
  detail::append_attr(out, "y", rq2);
  detail::append_attr(out, "width", rp1 - rq1);
  detail::append_attr(out, "height", rp2 - rq2);
  out += ' ' + frame_style + "/>\n";

  // 45-degree lines through the lower-left and upper-right corners.
  const double reach = width + height;
  detail::append_line(out, rq1 - reach, rq2 - reach, rq1 + reach, rq2 + reach,
                      frame_style.c_str());
  detail::append_line(out, rp1 - reach, rp2 - reach, rp1 + reach, rp2 + reach,
                      frame_style.c_str());

  if (report.parts) {
    const std::string cap_style = "stroke=\"#bbbbbb\" stroke-width=\"" +
                                  format_real(thin) + "\" stroke-dasharray=\"" +
                                  format_real(4.0 * thin) + "\"";
    const std::vector<double>& caps = *inst.caps;
    for (std::size_t k = 0; k < inst.count(); ++k) {
      if (caps[k] <= 0.0) continue;
      out += "  <rect";
      detail::append_attr(out, "x", inst.points[k][0] - caps[k]);
      detail::append_attr(out, "y", inst.points[k][1] - caps[k]);
      detail::append_attr(out, "width", 2.0 * caps[k]);
      detail::append_attr(out, "height", 2.0 * caps[k]);
      out += ' ' + cap_style + "/>\n";
    }
  }

  // The solution segment: the one polyline of the drawing.
  out += "  <polyline points=\"";
  out += format_real(seg_a[0]) + "," + format_real(seg_a[1]) + " " +
         format_real(seg_b[0]) + "," + format_real(seg_b[1]);
  out += "\" stroke=\"#000000\" stroke-width=\"" + format_real(thick) + "\"/>\n";

  if (report.parts) {
    // Clip the segment to the feasible box and mark the surviving part.
    double t_lo = 0.0, t_hi = 1.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double a = seg_a[i], b = seg_b[i];
      const double lo = report.parts->p1[i].value(), hi = report.parts->q1[i].value();
      if (a == b) {
        if (a < lo || a > hi) t_hi = -1.0;
        continue;
      }
      double t0 = (lo - a) / (b - a), t1 = (hi - a) / (b - a);
      if (t0 > t1) std::swap(t0, t1);
      t_lo = std::max(t_lo, t0);
      t_hi = std::min(t_hi, t1);
    }
    if (t_lo <= t_hi) {
      detail::append_line(
          out, seg_a[0] + t_lo * (seg_b[0] - seg_a[0]), seg_a[1] + t_lo * (seg_b[1] - seg_a[1]),
          seg_a[0] + t_hi * (seg_b[0] - seg_a[0]), seg_a[1] + t_hi * (seg_b[1] - seg_a[1]),
          ("stroke=\"#000000\" stroke-width=\"" + format_real(2.0 * thick) + "\"").c_str());
    }
  }

  for (const auto& r : inst.points) {
    out += "  <circle";
    detail::append_attr(out, "cx", r[0]);
    detail::append_attr(out, "cy", r[1]);
    detail::append_attr(out, "r", 2.5 * thin);
    out += " fill=\"#000000\"/>\n";
  }

  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace maxplus
