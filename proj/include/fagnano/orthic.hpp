#pragma once

#include <array>
#include <utility>

#include "fagnano/geom.hpp"
#include "fagnano/schedule.hpp"

namespace fagnano {

struct OrthicData {
  Point k_foot;  // altitude foot from a onto BC
  Point l_foot;  // from b onto AC
  Point m_foot;  // from c onto AB
  /// Edge parameters of K, L, M on edges A, B, C.
  std::array<double, 3> foot_params{};
  /// |KL| + |LM| + |MK| from the constructed feet.
  double perimeter = 0.0;
  /// AL / AC, the minimizer of the reflected-segment length; L = x0 C + (1 - x0) A.
  double x0 = 0.0;
};

OrthicData orthic_triangle(const Triangle& t);

/// Closed form 2p / (1/(sin B sin C) + 1/(sin A sin C) + 1/(sin A sin B)).
/// Right triangles are accepted as the boundary case.
double orthic_perimeter(const Triangle& t);

/// The 3-periodic cyclic schedule K -> M -> L.
Schedule orthic_schedule(const Triangle& t);

/// Unfolding gadget. The input is relabeled so that |BC| >= |AC| >= |AB|, then
///   C1 = C mirrored in AB,    B1 = B mirrored in AC1,  A1 = A mirrored in B1C1,
///   C2 = C1 mirrored in A1B1, B2 = B1 mirrored in A1C2.
/// All points are in the caller's coordinates; only the names are relabeled.
struct ReflectionChain {
  Triangle labeled;
  /// labeled vertex i is input vertex original_index[i].
  std::array<int, 3> original_index{};
  Point c1, b1, a1, c2, b2;
  /// Altitude feet along the unfolded orthic orbit, in visiting order.
  Point k, m, l1, k1, m1, l2, k2;
  /// T0 = ABC, T1 = ABC1, T2 = AB1C1, T3 = A1B1C1, T4 = A1B1C2, T5 = A1B2C2,
  /// each stored with its images of (A, B, C) in (a, b, c).
  std::array<Triangle, 6> triangles;
  /// Angle in radians between lines B2C2 and BC.
  double parallel_residual = 0.0;
  /// Largest |det| over triples of {K, M, L1, K1, M1, L2, K2}, over diameter^2.
  double collinearity_residual = 0.0;
};

ReflectionChain reflection_chain(const Triangle& t);

/// Segment K K2: two laps of the orthic orbit, unfolded.
std::pair<Point, Point> orthic_line(const ReflectionChain& chain);

struct Line {
  Point point;
  Point direction;
};

struct ChannelData {
  ReflectionChain chain;
  Point direction;  // unit, K -> K2
  Point normal;     // unit, toward the labeled vertex A
  Line boundary_low;   // through A1
  Line boundary_high;  // through A
  double half_width_low = 0.0;
  double half_width_high = 0.0;
  /// Where the boundaries cross line BC.
  Point r_point;  // low
  Point t_point;  // high
  /// Each boundary meets at least two edges of every reflected triangle.
  bool low_meets_all = false;
  bool high_meets_all = false;
};

ChannelData orthic_channel(const Triangle& t);

/// The channel line at parameter lambda in [-1, 1] (-1 through A1, 0 the
/// orthic line, +1 through A) crossing the seven gadget edges, unfolded.
std::array<Point, 7> channel_crossings(const ChannelData& ch, double lambda);

/// Folds the channel line at lambda back into the triangle: a cyclic
/// 6-periodic schedule whose 2-gap is twice the orthic perimeter.
Schedule sub_orthic_schedule(const Triangle& t, double lambda);
Schedule sub_orthic_schedule(const ChannelData& ch, const Triangle& t, double lambda);

}  // namespace fagnano
