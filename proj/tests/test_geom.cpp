#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fagnano/geom.hpp"
#include "support/oracles.hpp"
#include "support/random_triangles.hpp"

using namespace fagnano;
using fagnano::testing::RandomAcute;

namespace {

const Triangle kEquilateral{{0.5, std::sqrt(3.0) / 2}, {0.0, 0.0}, {1.0, 0.0}};
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(Geom, EquilateralAngles) {
  const Angles an = angles(kEquilateral);
  EXPECT_NEAR(an.a, kPi / 3, 1e-15);
  EXPECT_NEAR(an.b, kPi / 3, 1e-15);
  EXPECT_NEAR(an.c, kPi / 3, 1e-15);
}

TEST(Geom, RightIsoscelesAngles) {
  const Angles an = angles({{0.5, 0.5}, {0.0, 0.0}, {1.0, 0.0}});
  EXPECT_NEAR(an.a, kPi / 2, 1e-15);
  EXPECT_NEAR(an.b, kPi / 4, 1e-15);
  EXPECT_NEAR(an.c, kPi / 4, 1e-15);
}

TEST(Geom, AnglesMatchLawOfCosines) {
  RandomAcute gen(7);
  for (int n = 0; n < 500; ++n) {
    const Triangle t = gen.next();
    const Angles an = angles(t);
    const auto ref = fagnano::testing::law_of_cosines_angles(t);
    EXPECT_NEAR(an.a, ref[0], 1e-12);
    EXPECT_NEAR(an.b, ref[1], 1e-12);
    EXPECT_NEAR(an.c, ref[2], 1e-12);
    EXPECT_NEAR(an.a + an.b + an.c, kPi, 1e-12 * kPi);
  }
}

TEST(Geom, AnglesInvariantUnderRigidMotionAndScale) {
  RandomAcute gen(8);
  for (int n = 0; n < 200; ++n) {
    const Triangle t = gen.next();
    const double th = 0.1 * n, s = 0.5 + 0.05 * n;
    const auto move = [&](Point p) {
      return Point{s * (std::cos(th) * p.x - std::sin(th) * p.y) + 3.0,
                   s * (std::sin(th) * p.x + std::cos(th) * p.y) - 1.0};
    };
    const Angles a0 = angles(t);
    const Angles a1 = angles({move(t.a), move(t.b), move(t.c)});
    EXPECT_NEAR(a0.a, a1.a, 1e-12);
    EXPECT_NEAR(a0.b, a1.b, 1e-12);
    EXPECT_NEAR(a0.c, a1.c, 1e-12);
  }
}

TEST(Geom, DegenerateTriangleRejected) {
  try {
    angles({{0, 0}, {1, 1}, {2, 2}});
    FAIL() << "collinear triangle accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriangle);
  }
  EXPECT_THROW(angles({{0, 0}, {1, 0}, {NAN, 1}}), Error);
}

TEST(Geom, AcuteClassification) {
  EXPECT_TRUE(is_acute(kEquilateral));
  const Triangle right{{0.5, 0.5}, {0.0, 0.0}, {1.0, 0.0}};
  EXPECT_FALSE(is_acute(right));
  EXPECT_TRUE(is_non_obtuse(right));
  const Triangle obtuse{{0.5, 0.1}, {0.0, 0.0}, {1.0, 0.0}};
  EXPECT_FALSE(is_non_obtuse(obtuse));
  EXPECT_THROW(require_acute(obtuse), Error);
}

TEST(Geom, ProjectionIdentityAndMidpoint) {
  const Point on = point_at(kEquilateral, EdgeId::A, 0.3);
  const Point q = project_onto_edge(on, kEquilateral, EdgeId::A);
  EXPECT_NEAR(q.x, on.x, 1e-15);
  EXPECT_NEAR(q.y, on.y, 1e-15);
  const Point mid = project_onto_edge(kEquilateral.a, kEquilateral, EdgeId::A);
  EXPECT_NEAR(mid.x, 0.5, 1e-15);
  EXPECT_NEAR(mid.y, 0.0, 1e-15);
}

TEST(Geom, ProjectionIsOrthogonalAndMinimal) {
  RandomAcute gen(9);
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> coord(-20, 20), along(-3, 4);
  for (int n = 0; n < 300; ++n) {
    const Triangle t = gen.next();
    const Point p{coord(rng), coord(rng)};
    for (EdgeId e : kEdges) {
      const Segment s = edge_segment(t, e);
      const Point f = project_onto_edge(p, t, e);
      const Point dir = s.end - s.start;
      EXPECT_LE(std::abs(dot(f - p, dir)) / norm(dir), 1e-12 * (1.0 + norm(p - f)));
      for (int k = 0; k < 5; ++k) {
        const Point q = lerp(s.start, s.end, along(rng));
        EXPECT_LE(distance(p, f), distance(p, q) + 1e-12);
      }
    }
  }
}

TEST(Geom, ReflectionExamples) {
  // A = (p, q) mirrored in BC on the x axis is (p, -q).
  const Point a{0.37, 0.81};
  const Point a1 = reflect_point(a, {0, 0}, {1, 0});
  EXPECT_DOUBLE_EQ(a1.x, 0.37);
  EXPECT_DOUBLE_EQ(a1.y, -0.81);
  // C = (1, 0) mirrored in AB lands on (cos 2B, sin 2B).
  const double b_angle = 1.1;
  const Point c1 = reflect_point({1, 0}, {0, 0}, {std::cos(b_angle), std::sin(b_angle)});
  EXPECT_NEAR(c1.x, std::cos(2 * b_angle), 1e-15);
  EXPECT_NEAR(c1.y, std::sin(2 * b_angle), 1e-15);
  const Point on{2.0, 0.0};
  EXPECT_EQ(reflect_point(on, {0, 0}, {1, 0}), on);
  EXPECT_THROW(reflect_point(on, {1, 1}, {1, 1}), Error);
}

TEST(Geom, ReflectionInvolutionAndIsometry) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-10, 10);
  for (int n = 0; n < 1000; ++n) {
    const Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    const Point p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)};
    const Point rp = reflect_point(p, a, b), rq = reflect_point(q, a, b);
    EXPECT_LE(distance(reflect_point(rp, a, b), p), 1e-12 * 20);
    EXPECT_NEAR(distance(rp, rq), distance(p, q), 1e-12 * (1 + distance(p, q)));
  }
}

TEST(Geom, EdgeParamConventions) {
  const Triangle& t = kEquilateral;
  EXPECT_DOUBLE_EQ(edge_param(t.b, t, EdgeId::A), 0.0);
  EXPECT_DOUBLE_EQ(edge_param(t.a, t, EdgeId::B), 0.0);
  EXPECT_DOUBLE_EQ(edge_param(t.a, t, EdgeId::C), 0.0);
  EXPECT_NEAR(edge_param(0.5 * (t.b + t.c), t, EdgeId::A), 0.5, 1e-15);
  EXPECT_NEAR(edge_param(t.c, t, EdgeId::B), 1.0, 1e-15);
  try {
    edge_param(t.a, t, EdgeId::A);
    FAIL() << "off-edge point accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointOffEdge);
  }
}

TEST(Geom, EdgeParamRoundTrip) {
  RandomAcute gen(12);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> along(-0.5, 1.5);
  for (int n = 0; n < 300; ++n) {
    const Triangle t = gen.next();
    for (EdgeId e : kEdges) {
      const double u = along(rng);
      const Point p = point_at(t, e, u);
      EXPECT_NEAR(edge_param(p, t, e), u, 1e-12);
      EXPECT_LE(distance(point_at(t, e, edge_param(p, t, e)), p), 1e-12 * diameter(t));
    }
  }
}

TEST(Geom, SegmentDistance) {
  EXPECT_DOUBLE_EQ(segment_distance({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}), 1.0);
  EXPECT_DOUBLE_EQ(segment_distance({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}), 0.0);
  EXPECT_NEAR(segment_distance({{0, 0}, {1, 0}}, {{2, 1}, {3, 1}}), std::sqrt(2.0), 1e-15);
}
