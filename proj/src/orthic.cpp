#include "fagnano/orthic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fagnano {

OrthicData orthic_triangle(const Triangle& t) {
  require_acute(t);
  OrthicData o;
  o.k_foot = project_onto_edge(t.a, t, EdgeId::A);
  o.l_foot = project_onto_edge(t.b, t, EdgeId::B);
  o.m_foot = project_onto_edge(t.c, t, EdgeId::C);
  o.foot_params = {edge_param(o.k_foot, t, EdgeId::A), edge_param(o.l_foot, t, EdgeId::B),
                   edge_param(o.m_foot, t, EdgeId::C)};
  o.perimeter = distance(o.k_foot, o.l_foot) + distance(o.l_foot, o.m_foot) +
                distance(o.m_foot, o.k_foot);
  const Angles an = angles(t);
  o.x0 = std::cos(an.a) * std::sin(an.c) / std::sin(an.b);
  return o;
}

double orthic_perimeter(const Triangle& t) {
  if (!is_non_obtuse(t)) throw Error(ErrorCode::NotAcute, "triangle is obtuse");
  const Angles an = angles(t);
  const double sa = std::sin(an.a), sb = std::sin(an.b), sc = std::sin(an.c);
  return 2.0 * perimeter(t) / (1.0 / (sb * sc) + 1.0 / (sa * sc) + 1.0 / (sa * sb));
}

Schedule orthic_schedule(const Triangle& t) {
  const OrthicData o = orthic_triangle(t);
  return {t,
          {{EdgeId::A, o.foot_params[0]}, {EdgeId::C, o.foot_params[2]},
           {EdgeId::B, o.foot_params[1]}}};
}

ReflectionChain reflection_chain(const Triangle& t) {
  require_acute(t);
  ReflectionChain r;
  const auto sides = side_lengths(t);
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return sides[i] > sides[j]; });
  r.original_index = order;
  r.labeled = {t.vertex(order[0]), t.vertex(order[1]), t.vertex(order[2])};

  const Point a = r.labeled.a, b = r.labeled.b, c = r.labeled.c;
  r.c1 = reflect_point(c, a, b);
  r.b1 = reflect_point(b, a, r.c1);
  r.a1 = reflect_point(a, r.b1, r.c1);
  r.c2 = reflect_point(r.c1, r.a1, r.b1);
  r.b2 = reflect_point(r.b1, r.a1, r.c2);
  r.triangles = {Triangle{a, b, c},          Triangle{a, b, r.c1},
                 Triangle{a, r.b1, r.c1},    Triangle{r.a1, r.b1, r.c1},
                 Triangle{r.a1, r.b1, r.c2}, Triangle{r.a1, r.b2, r.c2}};

  r.k = project_onto_line(a, b, c);
  r.m = project_onto_line(c, a, b);
  r.l1 = project_onto_line(b, a, r.c1);
  r.k1 = project_onto_line(a, r.b1, r.c1);
  r.m1 = project_onto_line(r.c1, r.a1, r.b1);
  r.l2 = project_onto_line(r.b1, r.a1, r.c2);
  r.k2 = project_onto_line(r.a1, r.b2, r.c2);

  const Point bc = c - b;
  const Point b2c2 = r.c2 - r.b2;
  r.parallel_residual = std::asin(std::min(1.0, std::abs(cross(bc, b2c2)) / (norm(bc) * norm(b2c2))));

  const std::array<Point, 7> pts = {r.k, r.m, r.l1, r.k1, r.m1, r.l2, r.k2};
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t q = j + 1; q < pts.size(); ++q)
        worst = std::max(worst, std::abs(cross(pts[j] - pts[i], pts[q] - pts[i])));
  const double scale = diameter(t);
  r.collinearity_residual = worst / (scale * scale);
  return r;
}

std::pair<Point, Point> orthic_line(const ReflectionChain& chain) { return {chain.k, chain.k2}; }

namespace {

bool meets_two_edges(const Triangle& tri, const Line& line, double tol) {
  const std::array<double, 3> s = {cross(line.direction, tri.a - line.point),
                                   cross(line.direction, tri.b - line.point),
                                   cross(line.direction, tri.c - line.point)};
  int met = 0;
  for (EdgeId e : kEdges) {
    const auto [i, j] = edge_vertices(e);
    const double si = s[static_cast<std::size_t>(i)], sj = s[static_cast<std::size_t>(j)];
    if (std::abs(si) <= tol || std::abs(sj) <= tol || (si < 0) != (sj < 0)) ++met;
  }
  return met >= 2;
}

Point crossing_with_bc(const Line& line, const Triangle& labeled) {
  Point out;
  if (!intersect_lines(line.point, line.direction, labeled.b, labeled.c - labeled.b, out)) {
    throw Error(ErrorCode::InvariantViolation, "channel boundary parallel to BC");
  }
  return out;
}

// Gadget edges crossed by a channel line, in order: (triangle, edge).
constexpr std::array<std::pair<int, EdgeId>, 7> kCrossings = {{{0, EdgeId::A},
                                                                {0, EdgeId::C},
                                                                {1, EdgeId::B},
                                                                {2, EdgeId::A},
                                                                {3, EdgeId::C},
                                                                {4, EdgeId::B},
                                                                {5, EdgeId::A}}};

}  // namespace

ChannelData orthic_channel(const Triangle& t) {
  ChannelData ch;
  ch.chain = reflection_chain(t);
  const ReflectionChain& r = ch.chain;
  const Point a = r.labeled.a;

  const Point span = r.k2 - r.k;
  ch.direction = (1.0 / norm(span)) * span;
  ch.normal = perp(ch.direction);
  if (dot(a - r.k, ch.normal) < 0.0) ch.normal = -1.0 * ch.normal;
  ch.half_width_high = dot(a - r.k, ch.normal);
  ch.half_width_low = -dot(r.a1 - r.k, ch.normal);
  if (!(ch.half_width_high > 0.0 && ch.half_width_low > 0.0)) {
    throw Error(ErrorCode::InvariantViolation, "orthic line is not inside the channel");
  }
  ch.boundary_high = {a, ch.direction};
  ch.boundary_low = {r.a1, ch.direction};
  ch.t_point = crossing_with_bc(ch.boundary_high, r.labeled);
  ch.r_point = crossing_with_bc(ch.boundary_low, r.labeled);

  const double tol = relative_tolerance() * diameter(t);
  ch.low_meets_all = std::all_of(r.triangles.begin(), r.triangles.end(), [&](const Triangle& tri) {
    return meets_two_edges(tri, ch.boundary_low, tol);
  });
  ch.high_meets_all = std::all_of(r.triangles.begin(), r.triangles.end(), [&](const Triangle& tri) {
    return meets_two_edges(tri, ch.boundary_high, tol);
  });
  return ch;
}

std::array<Point, 7> channel_crossings(const ChannelData& ch, double lambda) {
  if (!(lambda >= -1.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::OutsideChannel, "channel parameter must lie in [-1, 1]");
  }
  const double offset = lambda >= 0.0 ? lambda * ch.half_width_high : lambda * ch.half_width_low;
  const Point origin = ch.chain.k + offset * ch.normal;
  std::array<Point, 7> out;
  for (std::size_t i = 0; i < kCrossings.size(); ++i) {
    const auto [tri, edge] = kCrossings[i];
    const Segment seg = edge_segment(ch.chain.triangles[static_cast<std::size_t>(tri)], edge);
    if (!intersect_lines(origin, ch.direction, seg.start, seg.end - seg.start, out[i])) {
      throw Error(ErrorCode::InvariantViolation, "channel line parallel to a gadget edge");
    }
  }
  return out;
}

Schedule sub_orthic_schedule(const ChannelData& ch, const Triangle& t, double lambda) {
  const std::array<Point, 7> hits = channel_crossings(ch, lambda);
  const double tol = relative_tolerance();
  const auto& idx = ch.chain.original_index;

  Schedule s;
  s.triangle = t;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [tri, edge] = kCrossings[i];
    const Segment seg = edge_segment(ch.chain.triangles[static_cast<std::size_t>(tri)], edge);
    const Point d = seg.end - seg.start;
    double u = dot(hits[i] - seg.start, d) / dot(d, d);
    if (u < -tol || u > 1.0 + tol) {
      throw Error(ErrorCode::OutsideChannel, "channel line leaves the reflected triangles");
    }
    if (u <= tol) u = 0.0;
    if (u >= 1.0 - tol) u = 1.0;

    // Same parameter on the same-named edge of the labeled triangle; map the
    // name and orientation back to the caller's labels.
    const EdgeId input_edge = static_cast<EdgeId>(idx[static_cast<std::size_t>(index(edge))]);
    const int labeled_start = edge_vertices(edge).first;
    const bool same_direction =
        idx[static_cast<std::size_t>(labeled_start)] == edge_vertices(input_edge).first;
    s.generator.push_back({input_edge, same_direction ? u : 1.0 - u});
  }
  return s;
}

Schedule sub_orthic_schedule(const Triangle& t, double lambda) {
  if (!(lambda >= -1.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::OutsideChannel, "channel parameter must lie in [-1, 1]");
  }
  return sub_orthic_schedule(orthic_channel(t), t, lambda);
}

}  // namespace fagnano
