#include "svg.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>

namespace fagnano::cli {

namespace {

std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string points_attr(const std::vector<Point>& pts, const Viewport& vp) {
  std::string out;
  for (const Point& p : pts) {
    const Point q = vp.map(p);
    if (!out.empty()) out += ' ';
    out += num(q.x) + ',' + num(q.y);
  }
  return out;
}

const char* style_attrs(Style s) {
  switch (s) {
    case Style::Triangle:
      return R"(class="triangle" fill="#e0e0e0" fill-opacity="0.6" stroke="#a0a0a0" stroke-width="1")";
    case Style::OrthicLine:
      return R"(class="orthic-line" stroke="green" stroke-width="1.5" stroke-dasharray="8 4")";
    case Style::Channel:
      return R"(class="channel" stroke="red" stroke-width="1.5" stroke-dasharray="1.5 3" stroke-linecap="round")";
    case Style::Trajectory:
      return R"(class="trajectory" fill="none" stroke="blue" stroke-width="1.5")";
    case Style::Altitude:
      return R"(class="altitude" stroke="#808080" stroke-width="0.75" stroke-dasharray="3 3")";
  }
  return "";
}

}  // namespace

nlohmann::json Viewport::to_json() const {
  return {{"scale", scale},   {"offset_x", offset_x},
          {"offset_y", offset_y}, {"width", width},
          {"height", height}, {"mapping", "sx = offset_x + scale * x, sy = offset_y - scale * y"}};
}

void SvgScene::polygon(std::vector<Point> pts, Style style) {
  items_.push_back({Kind::Polygon, style, std::move(pts)});
}

void SvgScene::line(Point a, Point b, Style style) { items_.push_back({Kind::Line, style, {a, b}}); }

void SvgScene::polyline(std::vector<Point> pts, Style style) {
  items_.push_back({Kind::Polyline, style, std::move(pts)});
}

int SvgScene::count(Kind k) const {
  return static_cast<int>(
      std::count_if(items_.begin(), items_.end(), [k](const Item& i) { return i.kind == k; }));
}

Viewport SvgScene::fit(double size, double margin) const {
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  for (const Item& item : items_) {
    for (const Point& p : item.pts) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  Viewport vp;
  if (items_.empty()) return vp;
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-300});
  vp.scale = (size - 2.0 * margin) / extent;
  vp.offset_x = margin - vp.scale * min_x;
  vp.offset_y = margin + vp.scale * max_y;
  vp.width = 2.0 * margin + vp.scale * (max_x - min_x);
  vp.height = 2.0 * margin + vp.scale * (max_y - min_y);
  return vp;
}

std::string SvgScene::render(const Viewport& vp) const {
  std::string out;
  out += R"(<?xml version="1.0" encoding="UTF-8"?>)";
  out += '\n';
  out += R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")" + num(vp.width) +
         R"(" height=")" + num(vp.height) + R"(" viewBox="0 0 )" + num(vp.width) + ' ' +
         num(vp.height) + "\">\n";
  out += "  <desc>sx = " + num(vp.offset_x) + " + " + num(vp.scale) + " * x; sy = " +
         num(vp.offset_y) + " - " + num(vp.scale) + " * y</desc>\n";
  for (const Item& item : items_) {
    switch (item.kind) {
      case Kind::Polygon:
        out += "  <polygon points=\"" + points_attr(item.pts, vp) + "\" " + style_attrs(item.style) + "/>\n";
        break;
      case Kind::Polyline:
        out += "  <polyline points=\"" + points_attr(item.pts, vp) + "\" " + style_attrs(item.style) + "/>\n";
        break;
      case Kind::Line: {
        const Point a = vp.map(item.pts[0]), b = vp.map(item.pts[1]);
        out += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
               "\" y2=\"" + num(b.y) + "\" " + style_attrs(item.style) + "/>\n";
        break;
      }
    }
  }
  out += "</svg>\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorCode::InvalidArgument, "failed writing " + path);
}

}  // namespace fagnano::cli
