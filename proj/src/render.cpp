// SVG rendering.  Screen x carries the strip coordinate: the upper point
// l_i sits at index i, the lower point r_j at index -j (so r-indices grow
// to the left).  Arcs become cubic curves; infinite families escaping the
// window get a three-dot glyph at the corner they leave through.
#include "arcstrip/render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace arcstrip {

namespace {

std::string fp(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

struct Canvas {
  double margin = 40.0;
  double px_per_unit = 0.0;
  i64 smin = 0;
  double y_top = 0.0;
  double y_bot = 0.0;

  double x(i64 s) const { return margin + double(s - smin) * px_per_unit; }
};

void add_circle(std::string& out, const char* cls, double cx, double cy,
                double r, const char* fill) {
  out += "<circle class=\"";
  out += cls;
  out += "\" cx=\"" + fp(cx) + "\" cy=\"" + fp(cy) + "\" r=\"" + fp(r) +
         "\" fill=\"";
  out += fill;
  out += "\"/>\n";
}

void add_label(std::string& out, double x, double y, const std::string& text) {
  out += "<text class=\"label\" x=\"" + fp(x) + "\" y=\"" + fp(y) +
         "\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"middle\">" +
         text + "</text>\n";
}

void add_curve(std::string& out, double x0, double y0, double cx0, double cy0,
               double cx1, double cy1, double x1, double y1) {
  out += "<path class=\"arc\" d=\"M " + fp(x0) + " " + fp(y0) + " C " +
         fp(cx0) + " " + fp(cy0) + ", " + fp(cx1) + " " + fp(cy1) + ", " +
         fp(x1) + " " + fp(y1) + "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\"/>\n";
}

void add_dots(std::string& out, double edge_x, int dir, double y) {
  for (int k = 0; k < 3; ++k)
    add_circle(out, "dots", edge_x + dir * (5.0 + 6.0 * k), y, 2.0, "#777");
}

}  // namespace

std::string render_svg(const ArcSet& t, const RenderSpec& spec) {
  const i64 wa = spec.window.lo;
  const i64 wb = spec.window.hi;
  const double w = spec.width_px;
  const double h = spec.height_px;

  Canvas cv;
  cv.smin = std::min(wa, -wb);
  const i64 smax = std::max(wb, -wa);
  cv.px_per_unit = (w - 2.0 * cv.margin) / double(smax - cv.smin);
  cv.y_top = 60.0;
  cv.y_bot = h - 60.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(spec.width_px) + "\" height=\"" +
         std::to_string(spec.height_px) + "\" viewBox=\"0 0 " +
         std::to_string(spec.width_px) + " " + std::to_string(spec.height_px) +
         "\">\n";

  const double line_l = cv.x(cv.smin) - 20.0;
  const double line_r = cv.x(smax) + 20.0;
  for (double y : {cv.y_top, cv.y_bot})
    out += "<line class=\"boundary\" x1=\"" + fp(line_l) + "\" y1=\"" + fp(y) +
           "\" x2=\"" + fp(line_r) + "\" y2=\"" + fp(y) +
           "\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  // Marked points with their names; the window bounds both boundaries.
  for (i64 i = wa; i <= wb; ++i) {
    add_circle(out, "pt", cv.x(i), cv.y_top, 3.0, "#222");
    if (spec.show_labels)
      add_label(out, cv.x(i), cv.y_top - 12.0, upper_point(i).str());
  }
  for (i64 j = wa; j <= wb; ++j) {
    add_circle(out, "pt", cv.x(-j), cv.y_bot, 3.0, "#222");
    if (spec.show_labels)
      add_label(out, cv.x(-j), cv.y_bot + 20.0, lower_point(j).str());
  }

  // Member arcs with both endpoints in the window, in enumeration order.
  const double depth_cap = 0.45 * (cv.y_bot - cv.y_top);
  for (const ArcOrEdge& u : t.enumerate_window(spec.window)) {
    switch (u.kind()) {
      case ArcKind::UpperArc: {
        double xa = cv.x(u.a()), xb = cv.x(u.b());
        double k = std::min(depth_cap, 10.0 + 0.18 * (xb - xa));
        add_curve(out, xa, cv.y_top, xa, cv.y_top + k, xb, cv.y_top + k, xb,
                  cv.y_top);
        break;
      }
      case ArcKind::LowerArc: {
        double xa = cv.x(-u.a()), xb = cv.x(-u.b());
        double k = std::min(depth_cap, 10.0 + 0.18 * (xa - xb));
        add_curve(out, xb, cv.y_bot, xb, cv.y_bot - k, xa, cv.y_bot - k, xa,
                  cv.y_bot);
        break;
      }
      default: {  // connecting arc
        double xa = cv.x(u.a()), xb = cv.x(-u.b());
        double mid = 0.4 * (cv.y_bot - cv.y_top);
        add_curve(out, xa, cv.y_top, xa, cv.y_top + mid, xb, cv.y_bot - mid,
                  xb, cv.y_bot);
        break;
      }
    }
  }

  // Escape glyphs.  Collect the index set touching each boundary; a part
  // beyond the window means members run off that end of the picture.
  IntervalSet upper_idx = project_x(t.upper_region())
                              .union_with(project_y(t.upper_region()))
                              .union_with(project_x(t.conn_region_stored()));
  IntervalSet conn_r = project_y(t.conn_region_stored());
  if (t.chirality() == ConnChir::Mir) conn_r = conn_r.negate();
  IntervalSet lower_idx = project_x(t.lower_region())
                              .union_with(project_y(t.lower_region()))
                              .union_with(conn_r);

  const IntervalSet below = IntervalSet::interval(-kInf, wa - 1);
  const IntervalSet above = IntervalSet::interval(wb + 1, kInf);
  // Upper indices grow to the right, lower indices to the left.
  if (!upper_idx.intersect(below).is_empty())
    add_dots(out, line_l, -1, cv.y_top);
  if (!upper_idx.intersect(above).is_empty())
    add_dots(out, line_r, +1, cv.y_top);
  if (!lower_idx.intersect(above).is_empty())
    add_dots(out, line_l, -1, cv.y_bot);
  if (!lower_idx.intersect(below).is_empty())
    add_dots(out, line_r, +1, cv.y_bot);

  out += "</svg>\n";
  return out;
}

}  // namespace arcstrip
