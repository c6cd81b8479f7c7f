#pragma once

// SVG yin-yang symbols drawn from Fermat's spiral.
//
// The spiral is sampled as in the MetaPost generator it mirrors: the origin,
// then (r, 0) rotated by 180 r^2 turn degrees for r = 0, interpol, ..., 1,
// then (1, 0) rotated by 180 turn degrees. The symbol is the spiral, its
// copies rotated by 360 / parts degrees, the bounding circle and the filled
// regions between consecutive copies; the whole picture is rotated by
// (0.5 - turn) * 180 + rotate degrees, after a mirror in the vertical axis
// when the symbol is not clockwise.
//
// Curves are emitted as Catmull-Rom splines converted to cubic Béziers, so
// they interpolate the same on-curve samples as the MetaPost path.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "yinyang/geometry.hpp"

namespace yinyang {

/// 96 px per inch.
inline constexpr double kPxPerCm = 96.0 / 2.54;
inline constexpr double kPxPerBp = 96.0 / 72.0;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Rgb {
  double r = 0.5;
  double g = 0.5;
  double b = 0.5;
};

/// 1/16 up to two turns, 1/(16 turn) beyond.
inline double default_interpol(double turn) noexcept {
  return turn > 2.0 ? 1.0 / (16.0 * turn) : 1.0 / 16.0;
}

struct RenderConfig {
  double turn = 1.0;
  double radius_px = 2.0 * kPxPerCm;
  double rotate_deg = 0.0;
  bool clockwise = true;
  int parts = 2;
  Rgb dark{0.5, 0.5, 0.5};
  double stroke_width_px = 1.0 * kPxPerBp;
  /// Defaults to default_interpol(turn).
  std::optional<double> interpol;
  double margin_px = 1.0 * kPxPerCm;

  double effective_interpol() const { return interpol.value_or(default_interpol(turn)); }

  void validate() const {
    if (!(turn > 0.0) || !std::isfinite(turn)) throw std::invalid_argument("render: turn must be positive");
    if (!(radius_px > 0.0)) throw std::invalid_argument("render: radius must be positive");
    if (!(stroke_width_px > 0.0)) throw std::invalid_argument("render: stroke width must be positive");
    if (parts < 2) throw std::invalid_argument("render: parts must be at least 2");
    if (!(effective_interpol() > 0.0)) throw std::invalid_argument("render: interpol must be positive");
    if (!std::isfinite(rotate_deg)) throw std::invalid_argument("render: rotate must be finite");
    for (double c : {dark.r, dark.g, dark.b})
      if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("render: colour components must lie in [0, 1]");
    if (!(margin_px >= 0.0)) throw std::invalid_argument("render: margin must be non-negative");
  }
};

inline Point2 rotated_deg(Point2 p, double deg) noexcept {
  const double t = deg * kPi / 180.0;
  const double c = std::cos(t);
  const double s = std::sin(t);
  return Point2{c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Number of loop samples r = 0, interpol, ..., <= 1.
inline int spiral_loop_count(double interpol) {
  if (!(interpol > 0.0)) throw std::invalid_argument("spiral_points: interpol must be positive");
  return static_cast<int>(std::floor(1.0 / interpol + 1e-9)) + 1;
}

/// On-curve samples of the unit spiral.
inline std::vector<Point2> spiral_points(double turn, double interpol) {
  if (!(turn > 0.0)) throw std::invalid_argument("spiral_points: turn must be positive");
  const int loop = spiral_loop_count(interpol);
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(loop) + 2);
  pts.push_back({0.0, 0.0});
  for (int i = 0; i < loop; ++i) {
    const double r = i * interpol;
    pts.push_back(rotated_deg({r, 0.0}, 180.0 * r * r * turn));
  }
  pts.push_back(rotated_deg({1.0, 0.0}, 180.0 * turn));
  return pts;
}

/// The symbol in picture coordinates (y up, origin at the centre, in px)
/// before it is placed on the canvas.
struct SymbolGeometry {
  double radius = 0.0;
  /// Copy i of the spiral, rotated by 360 i / parts before the global
  /// transform.
  std::vector<std::vector<Point2>> spirals;

  /// Region i is bounded by spiral i, the clockwise rim arc from its end to
  /// the end of spiral i-1 (through arc_mid), and spiral i-1 reversed.
  struct Region {
    int from = 0;
    int to = 0;
    Point2 arc_mid;
    Rgb fill;
  };
  std::vector<Region> regions;
};

inline SymbolGeometry symbol_geometry(const RenderConfig& cfg) {
  cfg.validate();
  const double a = (0.5 - cfg.turn) * 180.0 + cfg.rotate_deg;
  auto place = [&](Point2 p) {
    p.x *= cfg.radius_px;
    p.y *= cfg.radius_px;
    if (!cfg.clockwise) p.x = -p.x;
    return rotated_deg(p, a);
  };

  const std::vector<Point2> base = spiral_points(cfg.turn, cfg.effective_interpol());
  SymbolGeometry geo;
  geo.radius = cfg.radius_px;
  for (int i = 0; i < cfg.parts; ++i) {
    const double copy_deg = 360.0 * i / cfg.parts;
    std::vector<Point2> pts;
    pts.reserve(base.size());
    for (const Point2& p : base) pts.push_back(place(rotated_deg(p, copy_deg)));
    geo.spirals.push_back(std::move(pts));
  }

  const double width_deg = 360.0 / cfg.parts;
  const int fills = cfg.parts == 2 ? 1 : cfg.parts;
  for (int i = 0; i < fills; ++i) {
    SymbolGeometry::Region reg;
    reg.from = i;
    reg.to = (i + cfg.parts - 1) % cfg.parts;
    const double end_deg = 180.0 * cfg.turn + 360.0 * i / cfg.parts;
    reg.arc_mid = place(rotated_deg({1.0, 0.0}, end_deg - 0.5 * width_deg));
    if (cfg.parts == 2) {
      reg.fill = cfg.dark;
    } else {
      const double lum = static_cast<double>(i) / cfg.parts;
      reg.fill = Rgb{lum, lum, lum};
    }
    geo.regions.push_back(reg);
  }
  return geo;
}

struct SvgElement {
  enum class Kind { spiral, outline, fill };
  Kind kind;
  std::string markup;
};

struct SvgDocument {
  double width = 0.0;
  double height = 0.0;
  /// Emitted as <desc>; records the parameters the drawing was made with.
  std::string description;
  std::vector<SvgElement> elements;

  std::size_t count(SvgElement::Kind kind) const {
    return static_cast<std::size_t>(std::count_if(
        elements.begin(), elements.end(), [kind](const SvgElement& e) { return e.kind == kind; }));
  }

  std::string str() const;
};

namespace detail {

inline std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

inline std::string hex_colour(const Rgb& c) {
  auto byte = [](double x) { return static_cast<int>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0)); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(c.r), byte(c.g), byte(c.b));
  return buf;
}

class PathWriter {
 public:
  PathWriter(double cx, double cy) : cx_(cx), cy_(cy) {}

  void move_to(Point2 p) { d_ += "M " + xy(p); }

  /// Catmull-Rom spline through pts, starting at the current point pts[0].
  void spline_through(std::vector<Point2> pts) {
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Point2 p0 = pts[i == 0 ? 0 : i - 1];
      const Point2 p1 = pts[i];
      const Point2 p2 = pts[i + 1];
      const Point2 p3 = pts[std::min(i + 2, n - 1)];
      const Point2 c1{p1.x + (p2.x - p0.x) / 6.0, p1.y + (p2.y - p0.y) / 6.0};
      const Point2 c2{p2.x - (p3.x - p1.x) / 6.0, p2.y - (p3.y - p1.y) / 6.0};
      d_ += " C " + xy(c1) + " " + xy(c2) + " " + xy(p2);
    }
  }

  /// Circular arc of radius r about the origin, from `from` to `to`, each
  /// call spanning less than a half turn.
  void arc_to(double r, Point2 from, Point2 to) {
    // Sweep direction from the orientation on the canvas (y down).
    const double fx = from.x, fy = -from.y, tx = to.x, ty = -to.y;
    const int sweep = fx * ty - fy * tx > 0.0 ? 1 : 0;
    d_ += " A " + fmt6(r) + " " + fmt6(r) + " 0 0 " + std::to_string(sweep) + " " + xy(to);
  }

  void close() { d_ += " Z"; }
  const std::string& str() const { return d_; }

 private:
  std::string xy(Point2 p) const { return fmt6(cx_ + p.x) + " " + fmt6(cy_ - p.y); }
  double cx_, cy_;
  std::string d_;
};

}  // namespace detail

inline std::string SvgDocument::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fmt6(width) +
         "\" height=\"" + detail::fmt6(height) + "\" viewBox=\"0 0 " + detail::fmt6(width) + " " +
         detail::fmt6(height) + "\">\n";
  if (!description.empty()) out += "  <desc>" + description + "</desc>\n";
  for (const SvgElement& e : elements) out += "  " + e.markup + "\n";
  out += "</svg>\n";
  return out;
}

/// Renders the symbol. parts = 2 gives the two-part symbol with one dark
/// fill; larger values give one shaded region per part.
inline SvgDocument render(const RenderConfig& cfg) {
  const SymbolGeometry geo = symbol_geometry(cfg);
  SvgDocument doc;
  const double half = cfg.radius_px + cfg.margin_px;
  doc.width = doc.height = 2.0 * half;
  doc.description = "yin-yang symbol: turn=" + detail::fmt6(cfg.turn) + " radius=" + detail::fmt6(cfg.radius_px) +
                    " rotate=" + detail::fmt6(cfg.rotate_deg) + " clockwise=" + (cfg.clockwise ? "true" : "false") +
                    " parts=" + std::to_string(cfg.parts) + " interpol=" + detail::fmt6(cfg.effective_interpol());
  const double cx = half;
  const double cy = half;
  // MetaPost's default pen is half a big point.
  const double thin = 0.5 * kPxPerBp;

  for (const auto& s : geo.spirals) {
    detail::PathWriter w(cx, cy);
    w.move_to(s.front());
    w.spline_through(s);
    doc.elements.push_back({SvgElement::Kind::spiral,
                            "<path d=\"" + w.str() + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
                                detail::fmt6(thin) + "\"/>"});
  }
  doc.elements.push_back({SvgElement::Kind::outline,
                          "<circle cx=\"" + detail::fmt6(cx) + "\" cy=\"" + detail::fmt6(cy) + "\" r=\"" +
                              detail::fmt6(geo.radius) + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
                              detail::fmt6(cfg.stroke_width_px) + "\"/>"});
  for (const auto& reg : geo.regions) {
    const auto& from = geo.spirals[static_cast<std::size_t>(reg.from)];
    auto back = geo.spirals[static_cast<std::size_t>(reg.to)];
    std::reverse(back.begin(), back.end());
    detail::PathWriter w(cx, cy);
    w.move_to(from.front());
    w.spline_through(from);
    w.arc_to(geo.radius, from.back(), reg.arc_mid);
    w.arc_to(geo.radius, reg.arc_mid, back.front());
    w.spline_through(back);
    w.close();
    doc.elements.push_back({SvgElement::Kind::fill, "<path d=\"" + w.str() + "\" fill=\"" +
                                                        detail::hex_colour(reg.fill) + "\" stroke=\"none\"/>"});
  }
  return doc;
}

/// k-part symbol; identical to render() with parts = k.
inline SvgDocument render_kpartite(RenderConfig cfg, int parts) {
  if (parts < 2) throw std::invalid_argument("render_kpartite: parts must be at least 2");
  cfg.parts = parts;
  return render(cfg);
}

struct RenderPreset {
  std::string name;
  std::string description;
  RenderConfig config;
};

inline std::vector<RenderPreset> render_presets() {
  std::vector<RenderPreset> out;
  {
    RenderConfig c;
    out.push_back({"classic", "one-turn Fermat spiral, the canonical symbol (turn=1)", c});
  }
  {
    RenderConfig c;
    c.turn = 2.0 / 9.0;
    out.push_back({"britannica", "close to the encyclopaedia Britannica drawing (turn=2/9)", c});
  }
  {
    RenderConfig c;
    c.turn = 0.6;
    c.radius_px = 0.75 * kPxPerCm;
    c.rotate_deg = -8.0;
    out.push_back({"chosun", "Chosun Dynasty flag (turn=.6; radius=.75cm; rotate=-8)", c});
  }
  {
    RenderConfig c;
    c.turn = 1.5;
    c.radius_px = 1.465 * kPxPerCm;
    c.rotate_deg = -60.0;
    out.push_back({"korea1882", "earliest Korean flag (turn=1.5; radius=1.465cm; rotate=-60)", c});
  }
  {
    RenderConfig c;
    c.turn = 2.0;
    out.push_back({"twoturn", "two-turn Fermat spiral (turn=2)", c});
  }
  return out;
}

inline std::optional<RenderConfig> find_render_preset(const std::string& name) {
  for (const auto& p : render_presets())
    if (p.name == name) return p.config;
  return std::nullopt;
}

/// Turn values of the four evolution phases, from a slight twist to two turns.
inline std::array<double, 4> evolution_turns() { return {2.0 / 9.0, 0.6, 1.0, 2.0}; }

}  // namespace yinyang
