#pragma once

#include <cstdint>
#include <vector>

#include "fagnano/geom.hpp"
#include "fagnano/schedule.hpp"

namespace fagnano {

/// Clockwise visits BC -> AB -> AC -> BC; counterclockwise BC -> AC -> AB -> BC.
enum class Direction { Clockwise, Counterclockwise };

struct GreedyTrace {
  Direction direction = Direction::Clockwise;
  double start_u = 0.0;
  /// d_i = BD_i / |BC| at the i-th visit of BC; iterates[0] = start_u.
  std::vector<double> iterates;
  /// Every visited point, starting at p_0 on BC.
  std::vector<SchedulePoint> trajectory;
  /// d_{i+1} = c - x d_i with x = cos A cos B cos C.
  double c = 0.0;
  double x = 0.0;
  /// c recovered from the first simulated lap, d_1 + x d_0.
  double c_simulated = 0.0;
  /// Largest |d_{i+1} - (c - x d_i)| over recorded laps.
  double recurrence_residual = 0.0;
  double fixed_point = 0.0;
  /// D (last iterate) and its two projections.
  Schedule limit_schedule;
  double limit_gap = 0.0;
  /// Laps performed before |d_{i+1} - d_i| <= 1e-12 or the lap budget ran out.
  int iterations_to_converge = 0;
  bool converged = false;
};

GreedyTrace greedy_run(const Triangle& t, double start_u, int num_cycles,
                       Direction direction = Direction::Clockwise);

/// Limit 1-gap p sin A sin B sin C / (1 + cos A cos B cos C).
double greedy_limit_gap(const Triangle& t);

/// Similarity ratio of the limit triangle to the input.
double greedy_similarity_ratio(double a, double b, double c);

/// f(A, B, C) = (sin A + sin B + sin C) / (2 (1 + cos A cos B cos C)): greedy
/// limit gap over orthic perimeter. Validates a non-obtuse angle triple.
double greedy_ratio(double a, double b, double c);

/// The bare expression, no domain checks.
double greedy_ratio_formula(double a, double b, double c);

struct RatioExtremes {
  double max = 0.0;
  double inf = 0.0;
  Angles argmax;
  Angles arginf;
  int grid_n = 0;
};

/// Grid over A = i h, B = j h (h = pi / (2 grid_n)), C = pi - A - B, all in
/// (0, pi/2]. Ties go to the lexicographically smallest angle triple.
RatioExtremes greedy_ratio_extremes(int grid_n);

}  // namespace fagnano
