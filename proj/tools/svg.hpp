#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fagnano/geom.hpp"

namespace fagnano::cli {

/// World to SVG user units: sx = offset_x + scale * x, sy = offset_y - scale * y.
struct Viewport {
  double scale = 1.0;
  double offset_x = 0.0;
  double offset_y = 0.0;
  double width = 0.0;
  double height = 0.0;

  Point map(Point p) const { return {offset_x + scale * p.x, offset_y - scale * p.y}; }
  nlohmann::json to_json() const;
};

enum class Style { Triangle, OrthicLine, Channel, Trajectory, Altitude };

class SvgScene {
 public:
  void polygon(std::vector<Point> pts, Style style);
  void line(Point a, Point b, Style style);
  void polyline(std::vector<Point> pts, Style style);

  /// Fits everything into a canvas `size` user units wide or tall.
  Viewport fit(double size = 800.0, double margin = 20.0) const;
  std::string render(const Viewport& vp) const;

  int polygons() const { return count(Kind::Polygon); }
  int lines() const { return count(Kind::Line); }
  int polylines() const { return count(Kind::Polyline); }

 private:
  enum class Kind { Polygon, Line, Polyline };
  struct Item {
    Kind kind;
    Style style;
    std::vector<Point> pts;
  };
  int count(Kind k) const;
  std::vector<Item> items_;
};

/// Throws InvalidArgument when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fagnano::cli
