#include "passplan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

namespace passplan {
namespace {

constexpr double kMarginM = 0.5;

struct Canvas {
  double ppm;
  double length;
  double width;

  double px(double x) const { return (x + 0.5 * length + kMarginM) * ppm; }
  double py(double y) const { return (0.5 * width - y + kMarginM) * ppm; }
  double w() const { return (length + 2.0 * kMarginM) * ppm; }
  double h() const { return (width + 2.0 * kMarginM) * ppm; }
};

void appendf(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  out += buf;
}

void line(std::string& out, const Canvas& c, Vec2 a, Vec2 b, const std::string& color,
          double width_px) {
  appendf(out, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
               "stroke-width=\"%.1f\"/>\n",
          c.px(a.x), c.py(a.y), c.px(b.x), c.py(b.y), color.c_str(), width_px);
}

void rect_outline(std::string& out, const Canvas& c, double x0, double y0, double x1, double y1,
                  const std::string& color) {
  appendf(out, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" "
               "stroke=\"%s\" stroke-width=\"2\"/>\n",
          c.px(x0), c.py(y1), (x1 - x0) * c.ppm, (y1 - y0) * c.ppm, color.c_str());
}

void circle(std::string& out, const Canvas& c, Vec2 p, double r_px, const std::string& fill) {
  appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\"/>\n", c.px(p.x), c.py(p.y),
          r_px, fill.c_str());
}

void cross(std::string& out, const Canvas& c, Vec2 p, double half_px, const std::string& color) {
  const double x = c.px(p.x), y = c.py(p.y);
  appendf(out, "<path d=\"M %.2f %.2f L %.2f %.2f M %.2f %.2f L %.2f %.2f\" stroke=\"%s\" "
               "stroke-width=\"1\"/>\n",
          x - half_px, y - half_px, x + half_px, y + half_px, x - half_px, y + half_px,
          x + half_px, y - half_px, color.c_str());
}

void field_and_teams(std::string& out, const Canvas& c, const WorldState& world,
                     const SvgStyle& s) {
  const FieldGeometry& f = world.field;
  const double hl = 0.5 * f.length, hw = 0.5 * f.width;
  rect_outline(out, c, -hl, -hw, hl, hw, s.line_color);
  line(out, c, {0.0, -hw}, {0.0, hw}, s.line_color, 2.0);
  appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" stroke=\"%s\" "
               "stroke-width=\"2\"/>\n",
          c.px(0.0), c.py(0.0), 0.5 * c.ppm, s.line_color.c_str());
  for (int side = -1; side <= 1; side += 2) {
    const double gx = side * hl;
    const double inner = gx - side * f.defense_depth;
    rect_outline(out, c, std::min(gx, inner), -0.5 * f.defense_width, std::max(gx, inner),
                 0.5 * f.defense_width, s.line_color);
    const double gdepth = 0.18;
    const double outer = gx + side * gdepth;
    rect_outline(out, c, std::min(gx, outer), -0.5 * f.goal_width, std::max(gx, outer),
                 0.5 * f.goal_width, s.line_color);
  }
  for (const RobotState& r : world.ours) {
    circle(out, c, r.position, 0.09 * c.ppm, s.our_color);
    appendf(out, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"10\" fill=\"#ffffff\" "
                 "text-anchor=\"middle\">%d</text>\n",
            c.px(r.position.x), c.py(r.position.y) - 0.12 * c.ppm, r.id);
  }
  for (const RobotState& r : world.theirs) {
    circle(out, c, r.position, 0.09 * c.ppm, s.their_color);
    appendf(out, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"10\" fill=\"#ffffff\" "
                 "text-anchor=\"middle\">%d</text>\n",
            c.px(r.position.x), c.py(r.position.y) - 0.12 * c.ppm, r.id);
  }
  circle(out, c, world.ball.position, 0.05 * c.ppm, s.ball_color);
}

std::string svg_open(const Canvas& c, const SvgStyle& s) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  appendf(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
               "viewBox=\"0 0 %.0f %.0f\">\n",
          c.w(), c.h(), c.w(), c.h());
  appendf(out, "<rect x=\"0\" y=\"0\" width=\"%.0f\" height=\"%.0f\" fill=\"%s\"/>\n", c.w(),
          c.h(), s.field_color.c_str());
  return out;
}

}  // namespace

std::string render_plan_svg(const WorldState& world, const CandidateGrid& grid,
                            const std::optional<PassCandidate>& best_flat,
                            const std::optional<PassCandidate>& best_chip, const SvgStyle& style) {
  const Canvas c{style.pixels_per_meter, world.field.length, world.field.width};
  std::string out = svg_open(c, style);
  for (const PassCandidate& cell : grid.cells) {
    if (!cell.feasible) continue;
    const std::string& color = cell.kick_type == KickType::flat ? style.flat_feasible_color
                                                                : style.chip_feasible_color;
    cross(out, c, cell.receive_point, 3.0, color);
  }
  const auto kick_line = [&](const PassCandidate& cand, const std::string& color) {
    line(out, c, world.ball.position, cand.receive_point, color, 3.0);
    appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"5\" fill=\"none\" stroke=\"%s\" "
                 "stroke-width=\"2\"/>\n",
            c.px(cand.receive_point.x), c.py(cand.receive_point.y), color.c_str());
  };
  if (best_flat) kick_line(*best_flat, style.best_flat_color);
  if (best_chip) kick_line(*best_chip, style.best_chip_color);
  field_and_teams(out, c, world, style);
  out += "</svg>\n";
  return out;
}

std::string render_heatmap_svg(const WorldState& world, const std::vector<HeatPoint>& points,
                               double cell_size_m, const SvgStyle& style) {
  const Canvas c{style.pixels_per_meter, world.field.length, world.field.width};
  std::string out = svg_open(c, style);
  double lo = 0.0, hi = 0.0;
  bool have = false;
  for (const HeatPoint& p : points) {
    if (!std::isfinite(p.value)) continue;
    if (!have) {
      lo = hi = p.value;
      have = true;
    } else {
      lo = std::min(lo, p.value);
      hi = std::max(hi, p.value);
    }
  }
  const double span = hi - lo;
  const double half = 0.5 * cell_size_m * c.ppm;
  for (const HeatPoint& p : points) {
    if (!std::isfinite(p.value)) continue;
    double t = span > 0.0 ? (p.value - lo) / span : 0.5;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    // blue (lowest) to red (highest)
    const int r = static_cast<int>(std::lround(0x20 + t * (0xe0 - 0x20)));
    const int g = static_cast<int>(std::lround(0x40 + t * (0x30 - 0x40)));
    const int b = static_cast<int>(std::lround(0xc0 + t * (0x20 - 0xc0)));
    appendf(out, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                 "fill=\"#%02x%02x%02x\" fill-opacity=\"0.85\"/>\n",
            c.px(p.point.x) - half, c.py(p.point.y) - half, 2.0 * half, 2.0 * half, r, g, b);
  }
  field_and_teams(out, c, world, style);
  out += "</svg>\n";
  return out;
}

}  // namespace passplan
