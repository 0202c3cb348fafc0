#pragma once

// SVG figures: the full plane sieve, a labelled detail window, the quotient
// distribution between y = p/x and y = p/x - 1, and the (quotient, remainder)
// scatter. Geometry is exact up to the SVG writer, which rounds pixel
// coordinates to 9 significant digits.

#include "focal_sieve/extremes.hpp"
#include "focal_sieve/focal.hpp"
#include "focal_sieve/integer.hpp"
#include "focal_sieve/plane.hpp"
#include "focal_sieve/rational.hpp"
#include "focal_sieve/remainders.hpp"
#include "focal_sieve/sieve.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace focal_sieve {

/// Axis-aligned rectangle in plane coordinates, bounds inclusive.
struct Window {
  Rational x_min;
  Rational y_min;
  Rational x_max;
  Rational y_max;

  bool has_area() const { return x_min < x_max && y_min < y_max; }
  bool contains(const PlanePoint& pt) const {
    return x_min <= pt.x && pt.x <= x_max && y_min <= pt.y && pt.y <= y_max;
  }
  bool contains(const Window& w) const {
    return x_min <= w.x_min && w.x_max <= x_max && y_min <= w.y_min && w.y_max <= y_max;
  }

  friend bool operator==(const Window&, const Window&) = default;
};

struct Palette {
  std::string uncrossed = "black";
  std::string crossed = "gray";
  std::string outside = "#c8c8c8";  // 1..p and p^2, not part of the sieved interval
  std::string focal_line = "lightblue";
  std::string curve = "black";
  std::string bisector = "#7f7f7f";
  std::string axis = "orange";
  std::string extreme = "green";
  std::string quotient = "blue";
  std::string horizontal = "red";
};

struct RenderOptions {
  int width_px = 800;
  int height_px = 800;
  std::optional<Window> window;
  Palette palette;
  int max_lines_per_family = 3;
  double stroke_width = 1.0;

  void validate() const {
    if (width_px < 64 || height_px < 64)
      throw std::invalid_argument("figure dimensions must be at least 64x64 px");
    if (window && !window->has_area()) throw std::invalid_argument("render window has zero area");
    if (max_lines_per_family < 0) throw std::invalid_argument("max lines per family must be >= 0");
    if (!(stroke_width > 0.0)) throw std::invalid_argument("stroke width must be positive");
  }
};

/// Bounds of the sieve plot: every image plus the first focal points above row 0.
inline Window sieve_plot_bounds(const SieveContext& ctx) {
  return Window{Rational(0), Rational(-ctx.p()), Rational(ctx.p() + 1), Rational(2)};
}

namespace detail {

inline std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Liang-Barsky clipping of segment ab against w, in exact arithmetic.
inline std::optional<std::pair<PlanePoint, PlanePoint>> clip_segment(const PlanePoint& a, const PlanePoint& b,
                                                                     const Window& w) {
  Rational t0(0), t1(1);
  const Rational dx = b.x - a.x;
  const Rational dy = b.y - a.y;
  auto edge = [&](const Rational& pe, const Rational& qe) {
    if (pe.is_zero()) return qe.sign() >= 0;
    const Rational t = qe / pe;
    if (pe.sign() < 0) {
      if (t > t1) return false;
      if (t > t0) t0 = t;
    } else {
      if (t < t0) return false;
      if (t < t1) t1 = t;
    }
    return true;
  };
  if (!edge(-dx, a.x - w.x_min) || !edge(dx, w.x_max - a.x) || !edge(-dy, a.y - w.y_min) ||
      !edge(dy, w.y_max - a.y))
    return std::nullopt;
  return std::pair{PlanePoint{a.x + t0 * dx, a.y + t0 * dy}, PlanePoint{a.x + t1 * dx, a.y + t1 * dy}};
}

class SvgCanvas {
 public:
  SvgCanvas(const RenderOptions& opts, Window view) : opts_(opts), view_(std::move(view)) {
    const double span_x = (view_.x_max - view_.x_min).to_double();
    const double span_y = (view_.y_max - view_.y_min).to_double();
    cell_px_ = std::min((opts_.width_px - 2 * kMargin) / span_x, (opts_.height_px - 2 * kMargin) / span_y);
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts_.width_px << "\" height=\""
         << opts_.height_px << "\" viewBox=\"0 0 " << opts_.width_px << ' ' << opts_.height_px << "\">\n"
         << "<rect x=\"0\" y=\"0\" width=\"" << opts_.width_px << "\" height=\"" << opts_.height_px
         << "\" fill=\"white\"/>\n";
  }

  const Window& view() const { return view_; }

  /// Radius in px for a marker occupying the given fraction of one plane unit.
  double radius(double fraction) const { return std::clamp(cell_px_ * fraction, 0.5, 8.0); }

  void open_group(std::string_view id) { out_ << "<g id=\"" << id << "\">\n"; }
  void close_group() { out_ << "</g>\n"; }

  void circle(const PlanePoint& pt, double r, std::string_view cls, std::string_view fill,
              std::string_view data_attr = {}, std::string_view data_value = {}) {
    out_ << "<circle class=\"" << cls << "\"";
    if (!data_attr.empty()) out_ << ' ' << data_attr << "=\"" << data_value << '"';
    out_ << " cx=\"" << px(pt.x) << "\" cy=\"" << py(pt.y) << "\" r=\"" << fmt9(r) << "\" fill=\""
         << xml_escape(fill) << "\"/>\n";
  }

  /// Draws the part of segment ab inside the view, if any.
  void segment(const PlanePoint& a, const PlanePoint& b, std::string_view cls, std::string_view stroke) {
    const auto clipped = clip_segment(a, b, view_);
    if (!clipped) return;
    out_ << "<line class=\"" << cls << "\" x1=\"" << px(clipped->first.x) << "\" y1=\"" << py(clipped->first.y)
         << "\" x2=\"" << px(clipped->second.x) << "\" y2=\"" << py(clipped->second.y) << "\" stroke=\""
         << xml_escape(stroke) << "\" stroke-width=\"" << fmt9(opts_.stroke_width) << "\"/>\n";
  }

  void polyline(const std::vector<PlanePoint>& pts, std::string_view cls, std::string_view stroke) {
    out_ << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << xml_escape(stroke)
         << "\" stroke-width=\"" << fmt9(opts_.stroke_width) << "\" points=\"";
    bool first = true;
    for (const auto& pt : pts) {
      if (!view_.contains(pt)) continue;
      out_ << (first ? "" : " ") << px(pt.x) << ',' << py(pt.y);
      first = false;
    }
    out_ << "\"/>\n";
  }

  void label(const PlanePoint& pt, std::string_view text, double offset_px) {
    out_ << "<text class=\"label\" x=\"" << fmt9(px_value(pt.x) + offset_px) << "\" y=\""
         << fmt9(py_value(pt.y) - offset_px) << "\" font-size=\"" << fmt9(std::clamp(cell_px_ * 0.3, 4.0, 14.0))
         << "\" font-family=\"sans-serif\">" << xml_escape(text) << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static constexpr int kMargin = 20;

  double px_value(const Rational& x) const {
    return kMargin + ((x - view_.x_min) / (view_.x_max - view_.x_min)).to_double() * (cell_px_ * span(true));
  }
  double py_value(const Rational& y) const {
    return kMargin + ((view_.y_max - y) / (view_.y_max - view_.y_min)).to_double() * (cell_px_ * span(false));
  }
  double span(bool horizontal) const {
    return horizontal ? (view_.x_max - view_.x_min).to_double() : (view_.y_max - view_.y_min).to_double();
  }
  std::string px(const Rational& x) const { return fmt9(px_value(x)); }
  std::string py(const Rational& y) const { return fmt9(py_value(y)); }

  const RenderOptions& opts_;
  Window view_;
  double cell_px_ = 1.0;
  std::ostringstream out_;
};

inline void draw_focal_lines(SvgCanvas& svg, const SieveContext& ctx, const RenderOptions& opts) {
  const Int p = ctx.p();
  const Rational top(2);
  const Rational bottom(-p);
  svg.open_group("focal-lines");
  svg.segment({Rational(p), top}, {Rational(p), bottom}, "zeroth-line", opts.palette.focal_line);
  const Int k_max = std::min<Int>(opts.max_lines_per_family, p);
  for (Int a = 2; a < p; ++a) {
    for (Int k = 1; k <= k_max; ++k) {
      const auto line = focal_line(ctx, a, k);
      const Rational r(line.remainder);
      const Rational x0(line.x_intercept());
      svg.segment({x0 + r * top, top}, {x0 + r * bottom, bottom}, "focal-line", opts.palette.focal_line);
    }
  }
  const auto axis = multiplicative_axis(ctx);
  svg.segment({Rational(0), Rational(0)}, {Rational(p + 1), axis.slope * Rational(p + 1)}, "axis",
              opts.palette.axis);
  svg.close_group();
}

inline void draw_points(SvgCanvas& svg, const SieveContext& ctx, const RenderOptions& opts, bool labels) {
  const CrossedSet crossed = crossed_geometric(ctx);
  const double r = svg.radius(0.22);
  svg.open_group("points");
  for (Int n = 1; n <= ctx.p_squared(); ++n) {
    const PlanePoint pt = map_to_plane(ctx, n);
    if (!svg.view().contains(pt)) continue;
    std::string_view cls = "point outside";
    std::string_view fill = opts.palette.outside;
    if (crossed.in_range(n)) {
      const bool hit = crossed.contains(n);
      cls = hit ? "point crossed" : "point prime";
      fill = hit ? opts.palette.crossed : opts.palette.uncrossed;
    }
    svg.circle(pt, r, cls, fill, "data-n", std::to_string(n));
    if (labels) svg.label(pt, std::to_string(n), r);
  }
  svg.close_group();
}

}  // namespace detail

/// Every image of 1..p^2 as a point element, primes of (p, p^2) distinguished from
/// crossed integers, plus focal lines with k <= max_lines_per_family.
inline std::string render_sieve(const SieveContext& ctx, const RenderOptions& opts) {
  opts.validate();
  detail::SvgCanvas svg(opts, sieve_plot_bounds(ctx));
  detail::draw_focal_lines(svg, ctx, opts);
  detail::draw_points(svg, ctx, opts, false);
  return svg.finish();
}

/// The sieve restricted to a window of the plot, with integer labels.
inline std::string render_detail(const SieveContext& ctx, const Window& window, const RenderOptions& opts) {
  opts.validate();
  if (!window.has_area()) throw std::invalid_argument("detail window has zero area");
  if (!sieve_plot_bounds(ctx).contains(window)) throw std::invalid_argument("detail window exceeds the plot bounds");
  detail::SvgCanvas svg(opts, window);
  detail::draw_focal_lines(svg, ctx, opts);
  detail::draw_points(svg, ctx, opts, true);
  return svg.finish();
}

/// Quotient points (a, floor(p/a)) with extremes overplotted, the bounding
/// curves y = p/x and y = p/x - 1, the bisector, and horizontals at attained quotients.
inline std::string render_quotient_distribution(const SieveContext& ctx, const RenderOptions& opts) {
  opts.validate();
  const Int p = ctx.p();
  const Window view{Rational(0), Rational(-1), Rational(p + 1), Rational(p + 1)};
  detail::SvgCanvas svg(opts, view);

  svg.open_group("guides");
  svg.segment({Rational(0), Rational(0)}, {Rational(p + 1), Rational(0)}, "axis", opts.palette.axis);
  svg.segment({Rational(0), Rational(-1)}, {Rational(0), Rational(p + 1)}, "axis", opts.palette.axis);
  for (Int q : attained_quotients(ctx))
    svg.segment({Rational(0), Rational(q)}, {Rational(p + 1), Rational(q)}, "horizontal", opts.palette.horizontal);
  svg.segment({Rational(0), Rational(0)}, {Rational(p + 1), Rational(p + 1)}, "bisector", opts.palette.bisector);
  std::vector<PlanePoint> upper;
  std::vector<PlanePoint> lower;
  for (Int j = 0; 8 + j <= 8 * p; ++j) {
    const Rational x(8 + j, 8);
    const Rational y = Rational(p) / x;
    upper.push_back({x, y});
    lower.push_back({x, y - Rational(1)});
  }
  svg.polyline(upper, "curve", opts.palette.curve);
  svg.polyline(lower, "curve", opts.palette.curve);
  svg.close_group();

  const double r = svg.radius(0.18);
  svg.open_group("quotients");
  for (const auto& qp : quotient_points(ctx))
    svg.circle({Rational(qp.a), Rational(qp.q)}, r, "point quotient", opts.palette.quotient, "data-a",
               std::to_string(qp.a));
  svg.close_group();
  svg.open_group("extremes");
  for (const auto& e : extremes(ctx))
    svg.circle({Rational(e.a), Rational(e.q)}, r, "extreme", opts.palette.extreme, "data-a", std::to_string(e.a));
  svg.close_group();
  return svg.finish();
}

/// Scatter of (floor(p/a), rem(p/a)) for 1 < a < p.
inline std::string render_quotient_remainder(const SieveContext& ctx, const RenderOptions& opts) {
  opts.validate();
  const Int p = ctx.p();
  const Int top = p / 2 + 1;
  const Window view{Rational(0), Rational(0), Rational(top), Rational(top)};
  detail::SvgCanvas svg(opts, view);
  svg.open_group("guides");
  svg.segment({Rational(0), Rational(0)}, {Rational(top), Rational(0)}, "axis", opts.palette.axis);
  svg.segment({Rational(0), Rational(0)}, {Rational(0), Rational(top)}, "axis", opts.palette.axis);
  svg.close_group();
  const double r = svg.radius(0.2);
  svg.open_group("points");
  for (Int a = 2; a < p; ++a)
    svg.circle({Rational(ctx.quotient(a)), Rational(ctx.remainder(a))}, r, "point qr", opts.palette.quotient, "data-a",
               std::to_string(a));
  svg.close_group();
  return svg.finish();
}

/// Number of elements whose class attribute starts with cls, e.g. "point" or "extreme".
inline std::size_t count_elements(std::string_view svg, std::string_view cls) {
  const std::string needle = "class=\"" + std::string(cls);
  std::size_t count = 0;
  for (auto pos = svg.find(needle); pos != std::string_view::npos; pos = svg.find(needle, pos + needle.size())) {
    const char after = pos + needle.size() < svg.size() ? svg[pos + needle.size()] : '\0';
    if (after == '"' || after == ' ') ++count;
  }
  return count;
}

}  // namespace focal_sieve
