#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "fagnano/error.hpp"

namespace fagnano {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }
inline Point perp(Point p) { return {-p.y, p.x}; }
inline Point lerp(Point p, Point q, double u) { return (1.0 - u) * p + u * q; }

/// Edge named after the opposite vertex: A = BC, B = AC, C = AB.
enum class EdgeId : int { A = 0, B = 1, C = 2 };

inline constexpr std::array<EdgeId, 3> kEdges = {EdgeId::A, EdgeId::B, EdgeId::C};

inline constexpr int index(EdgeId e) { return static_cast<int>(e); }
char edge_letter(EdgeId e);
EdgeId edge_from_letter(char letter);

struct Triangle {
  Point a;
  Point b;
  Point c;

  /// Vertex by index: 0 -> a, 1 -> b, 2 -> c.
  const Point& vertex(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

/// Interior angles at a, b, c in radians.
struct Angles {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Directed edge with the global orientation A: B->C, B: A->C, C: A->B.
struct Segment {
  Point start;
  Point end;
};

/// Base relative tolerance, 1e-9 unless the FAGNANO_REL_TOL environment
/// variable holds a positive number. Read once per process.
double relative_tolerance();

double diameter(const Triangle& t);
double perimeter(const Triangle& t);
/// Twice the signed area; positive for counterclockwise vertex order.
double signed_area2(const Triangle& t);

/// Side lengths (alpha, beta, gamma) opposite a, b, c.
std::array<double, 3> side_lengths(const Triangle& t);

/// Throws DegenerateTriangle for non-finite or collinear vertices.
void validate(const Triangle& t);

Angles angles(const Triangle& t);

/// Strict: the largest angle must stay below pi/2 by the relative tolerance.
bool is_acute(const Triangle& t);
/// Accepts right triangles; used by the closed-form (formula-only) operations.
bool is_non_obtuse(const Triangle& t);
void require_acute(const Triangle& t);

Segment edge_segment(const Triangle& t, EdgeId e);
/// The two vertex indices (start, end) of an edge in the global orientation.
std::pair<int, int> edge_vertices(EdgeId e);

Point point_at(const Triangle& t, EdgeId e, double u);

/// Foot of the perpendicular from p onto the infinite line through a and b.
Point project_onto_line(Point p, Point a, Point b);
Point project_onto_edge(Point p, const Triangle& t, EdgeId e);

/// Mirror image of p across the line through a and b.
Point reflect_point(Point p, Point a, Point b);

/// Normalized coordinate u with p = (1-u) start + u end. Throws PointOffEdge
/// if p is farther than the scale-relative tolerance from the edge line.
double edge_param(Point p, const Triangle& t, EdgeId e);

/// Intersection of the lines p + s*dp and q + r*dq; false when parallel.
bool intersect_lines(Point p, Point dp, Point q, Point dq, Point& out);

/// Distance from p to the line through a and b, signed by the side of
/// the direction b - a (left positive).
double signed_distance(Point p, Point a, Point b);

double segment_distance(Segment s, Segment r);

}  // namespace fagnano
