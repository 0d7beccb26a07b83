#include "fagnano/geom.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <string>

namespace fagnano {

char edge_letter(EdgeId e) { return "ABC"[index(e)]; }

EdgeId edge_from_letter(char letter) {
  switch (letter) {
    case 'A': return EdgeId::A;
    case 'B': return EdgeId::B;
    case 'C': return EdgeId::C;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  std::string("unknown edge '") + letter + "'");
  }
}

double relative_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("FAGNANO_REL_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && std::isfinite(v) && v > 0.0) return v;
    }
    return 1e-9;
  }();
  return tol;
}

std::array<double, 3> side_lengths(const Triangle& t) {
  return {distance(t.b, t.c), distance(t.a, t.c), distance(t.a, t.b)};
}

double diameter(const Triangle& t) {
  const auto s = side_lengths(t);
  return std::max({s[0], s[1], s[2]});
}

double perimeter(const Triangle& t) {
  const auto s = side_lengths(t);
  return s[0] + s[1] + s[2];
}

double signed_area2(const Triangle& t) { return cross(t.b - t.a, t.c - t.a); }

void validate(const Triangle& t) {
  for (const Point& p : {t.a, t.b, t.c}) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::DegenerateTriangle, "non-finite vertex coordinate");
    }
  }
  const double d = diameter(t);
  if (!(d > 0.0) || std::abs(signed_area2(t)) <= relative_tolerance() * d * d) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
  }
}

namespace {

// Unsigned angle between rays p->q and p->r.
double angle_at(Point p, Point q, Point r) {
  const Point u = q - p;
  const Point v = r - p;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

Angles angles(const Triangle& t) {
  validate(t);
  return {angle_at(t.a, t.b, t.c), angle_at(t.b, t.c, t.a), angle_at(t.c, t.a, t.b)};
}

bool is_acute(const Triangle& t) {
  const Angles an = angles(t);
  const double limit = std::numbers::pi / 2 - relative_tolerance();
  return an.a < limit && an.b < limit && an.c < limit;
}

bool is_non_obtuse(const Triangle& t) {
  const Angles an = angles(t);
  const double limit = std::numbers::pi / 2 + relative_tolerance();
  return an.a <= limit && an.b <= limit && an.c <= limit;
}

void require_acute(const Triangle& t) {
  if (!is_acute(t)) throw Error(ErrorCode::NotAcute, "triangle is not acute");
}

std::pair<int, int> edge_vertices(EdgeId e) {
  switch (e) {
    case EdgeId::A: return {1, 2};
    case EdgeId::B: return {0, 2};
    case EdgeId::C: return {0, 1};
  }
  return {0, 0};
}

Segment edge_segment(const Triangle& t, EdgeId e) {
  const auto [s, f] = edge_vertices(e);
  return {t.vertex(s), t.vertex(f)};
}

Point point_at(const Triangle& t, EdgeId e, double u) {
  const Segment s = edge_segment(t, e);
  return lerp(s.start, s.end, u);
}

Point project_onto_line(Point p, Point a, Point b) {
  const Point d = b - a;
  const double s = dot(p - a, d) / dot(d, d);
  return a + s * d;
}

Point project_onto_edge(Point p, const Triangle& t, EdgeId e) {
  const Segment s = edge_segment(t, e);
  return project_onto_line(p, s.start, s.end);
}

Point reflect_point(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (!(len2 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "reflection line endpoints coincide");
  }
  const Point foot = a + (dot(p - a, d) / len2) * d;
  return 2.0 * foot - p;
}

double edge_param(Point p, const Triangle& t, EdgeId e) {
  const Segment s = edge_segment(t, e);
  const Point d = s.end - s.start;
  const double len2 = dot(d, d);
  const double off = std::abs(cross(d, p - s.start)) / std::sqrt(len2);
  if (off > relative_tolerance() * diameter(t)) {
    throw Error(ErrorCode::PointOffEdge, "point does not lie on the edge line");
  }
  return dot(p - s.start, d) / len2;
}

bool intersect_lines(Point p, Point dp, Point q, Point dq, Point& out) {
  const double den = cross(dp, dq);
  if (den == 0.0) return false;
  const double s = cross(q - p, dq) / den;
  out = p + s * dp;
  return true;
}

double signed_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  return cross(d, p - a) / norm(d);
}

namespace {

double point_segment_distance(Point p, Segment s) {
  const Point d = s.end - s.start;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.start);
  const double u = std::clamp(dot(p - s.start, d) / len2, 0.0, 1.0);
  return distance(p, lerp(s.start, s.end, u));
}

}  // namespace

double segment_distance(Segment s, Segment r) {
  const Point ds = s.end - s.start;
  const Point dr = r.end - r.start;
  const auto side = [](Point a, Point b, Point p) { return cross(b - a, p - a); };
  const double o1 = side(s.start, s.end, r.start);
  const double o2 = side(s.start, s.end, r.end);
  const double o3 = side(r.start, r.end, s.start);
  const double o4 = side(r.start, r.end, s.end);
  if (cross(ds, dr) != 0.0 && ((o1 < 0) != (o2 < 0)) && ((o3 < 0) != (o4 < 0))) {
    return 0.0;
  }
  return std::min({point_segment_distance(s.start, r), point_segment_distance(s.end, r),
                   point_segment_distance(r.start, s), point_segment_distance(r.end, s)});
}

}  // namespace fagnano
