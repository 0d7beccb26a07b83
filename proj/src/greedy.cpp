#include "fagnano/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fagnano {

namespace {

constexpr double kConvergence = 1e-12;

// Lap order after leaving BC.
std::array<EdgeId, 2> lap_edges(Direction d) {
  return d == Direction::Clockwise ? std::array{EdgeId::C, EdgeId::B}
                                   : std::array{EdgeId::B, EdgeId::C};
}

SchedulePoint project_step(Point& p, const Triangle& t, EdgeId e) {
  p = project_onto_edge(p, t, e);
  const double u = edge_param(p, t, e);
  const double tol = relative_tolerance();
  if (u < -tol || u > 1.0 + tol) {
    throw Error(ErrorCode::ProjectionEscapesEdge, "greedy projection left its edge");
  }
  return {e, std::clamp(u, 0.0, 1.0)};
}

}  // namespace

GreedyTrace greedy_run(const Triangle& input, double start_u, int num_cycles,
                       Direction direction) {
  require_acute(input);
  // Simulate with B at the origin; edge parameters do not see the shift.
  const Triangle t{input.a - input.b, {0.0, 0.0}, input.c - input.b};
  if (!(start_u >= 0.0 && start_u <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "start parameter must lie in [0, 1]");
  }
  if (num_cycles < 1) throw Error(ErrorCode::InvalidArgument, "need at least one greedy lap");

  const Angles an = angles(t);
  const auto sides = side_lengths(t);
  const double beta = sides[1] / sides[0];
  const double gamma = sides[2] / sides[0];
  const double ca = std::cos(an.a), cb = std::cos(an.b), cc = std::cos(an.c);

  GreedyTrace g;
  g.direction = direction;
  g.start_u = start_u;
  g.x = ca * cb * cc;
  // Distances along the lap with |BC| = 1: clockwise BE = d cos B,
  // AF = AE cos A, CG = CF cos C; counterclockwise mirrors it through C.
  g.c = direction == Direction::Clockwise ? 1.0 - cc * beta + ca * cc * gamma
                                          : gamma * cb - beta * ca * cb + g.x;
  g.fixed_point = g.c / (1.0 + g.x);

  Point p = point_at(t, EdgeId::A, start_u);
  g.trajectory.push_back({EdgeId::A, start_u});
  g.iterates.push_back(start_u);
  const auto order = lap_edges(direction);
  for (int lap = 1; lap <= num_cycles; ++lap) {
    for (EdgeId e : order) g.trajectory.push_back(project_step(p, t, e));
    const SchedulePoint back = project_step(p, t, EdgeId::A);
    g.trajectory.push_back(back);
    const double prev = g.iterates.back();
    const double next = edge_param(p, t, EdgeId::A);
    g.iterates.push_back(next);
    g.recurrence_residual = std::max(g.recurrence_residual, std::abs(next - (g.c - g.x * prev)));
    g.iterations_to_converge = lap;
    if (std::abs(next - prev) <= kConvergence) {
      g.converged = true;
      break;
    }
  }
  g.c_simulated = g.iterates[1] + g.x * g.iterates[0];

  Point d = point_at(t, EdgeId::A, std::clamp(g.iterates.back(), 0.0, 1.0));
  g.limit_schedule.triangle = input;
  g.limit_schedule.generator.push_back({EdgeId::A, std::clamp(g.iterates.back(), 0.0, 1.0)});
  for (EdgeId e : order) g.limit_schedule.generator.push_back(project_step(d, t, e));
  const auto& gen = g.limit_schedule.generator;
  g.limit_gap = distance(position(t, gen[0]), position(t, gen[1])) +
                distance(position(t, gen[1]), position(t, gen[2])) +
                distance(position(t, gen[2]), position(t, gen[0]));
  return g;
}

double greedy_similarity_ratio(double a, double b, double c) {
  return std::sin(a) * std::sin(b) * std::sin(c) / (1.0 + std::cos(a) * std::cos(b) * std::cos(c));
}

double greedy_limit_gap(const Triangle& t) {
  if (!is_non_obtuse(t)) throw Error(ErrorCode::NotAcute, "triangle is obtuse");
  const Angles an = angles(t);
  return perimeter(t) * greedy_similarity_ratio(an.a, an.b, an.c);
}

double greedy_ratio_formula(double a, double b, double c) {
  return (std::sin(a) + std::sin(b) + std::sin(c)) /
         (2.0 * (1.0 + std::cos(a) * std::cos(b) * std::cos(c)));
}

double greedy_ratio(double a, double b, double c) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  const double tol = relative_tolerance();
  for (double v : {a, b, c}) {
    if (!std::isfinite(v) || !(v > 0.0) || v > kHalfPi + tol) {
      throw Error(ErrorCode::InvalidArgument, "angles must lie in (0, pi/2]");
    }
  }
  if (std::abs(a + b + c - std::numbers::pi) > tol * std::numbers::pi) {
    throw Error(ErrorCode::InvalidArgument, "angles must sum to pi");
  }
  return greedy_ratio_formula(a, b, c);
}

RatioExtremes greedy_ratio_extremes(int grid_n) {
  if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "ratio grid needs grid_n >= 2");
  const double h = std::numbers::pi / (2.0 * grid_n);
  RatioExtremes r;
  r.grid_n = grid_n;
  r.max = -1.0;
  r.inf = 2.0;
  for (int i = 1; i <= grid_n; ++i) {
    for (int j = std::max(1, grid_n - i); j <= grid_n; ++j) {
      const int k = 2 * grid_n - i - j;
      if (k < 1 || k > grid_n) continue;
      // Evaluate on the sorted triple so permutations tie exactly.
      std::array<int, 3> s = {i, j, k};
      std::sort(s.begin(), s.end());
      const double v = greedy_ratio_formula(s[0] * h, s[1] * h, s[2] * h);
      const Angles an{i * h, j * h, k * h};
      if (v > r.max) {
        r.max = v;
        r.argmax = an;
      }
      if (v < r.inf) {
        r.inf = v;
        r.arginf = an;
      }
    }
  }
  return r;
}

}  // namespace fagnano
