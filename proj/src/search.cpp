#include "fagnano/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fagnano/orthic.hpp"

namespace fagnano {

namespace {

constexpr std::array<EdgeId, 6> kHexPattern = {EdgeId::A, EdgeId::C, EdgeId::B,
                                               EdgeId::A, EdgeId::C, EdgeId::B};

std::vector<Point> grid_points(const Triangle& t, EdgeId e, int n) {
  std::vector<Point> pts(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) pts[static_cast<std::size_t>(i)] = point_at(t, e, static_cast<double>(i) / n);
  return pts;
}

}  // namespace

SearchResult grid_search_3periodic(const Triangle& t, int grid_n) {
  validate(t);
  if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2");
  const auto n1 = static_cast<std::size_t>(grid_n) + 1;
  const auto pa = grid_points(t, EdgeId::A, grid_n);
  const auto pb = grid_points(t, EdgeId::B, grid_n);
  const auto pc = grid_points(t, EdgeId::C, grid_n);

  // perimeter(i, j, k) = |A_i B_j| + (|B_j C_k| + |C_k A_i|)
  std::vector<double> ab(n1 * n1), bc_t(n1 * n1), ca(n1 * n1);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      ab[i * n1 + j] = distance(pa[i], pb[j]);
      bc_t[i * n1 + j] = distance(pb[j], pc[i]);  // row k = i, column j
      ca[i * n1 + j] = distance(pc[j], pa[i]);    // row i, column k = j
    }

  SearchResult r;
  r.grid_n = grid_n;
  r.objective = Objective::Gap1;
  r.best_value = std::numeric_limits<double>::infinity();
  std::size_t bi = 0, bj = 0;
  std::vector<double> tail(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    std::fill(tail.begin(), tail.end(), std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < n1; ++k) {
      const double c = ca[i * n1 + k];
      const double* row = &bc_t[k * n1];
      for (std::size_t j = 0; j < n1; ++j) tail[j] = std::min(tail[j], row[j] + c);
    }
    for (std::size_t j = 0; j < n1; ++j) {
      const double v = ab[i * n1 + j] + tail[j];
      if (v < r.best_value) {
        r.best_value = v;
        bi = i;
        bj = j;
      }
    }
  }
  // Smallest k attaining the optimum for the winning (i, j).
  std::size_t bk = 0;
  double best_tail = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n1; ++k) {
    const double v = bc_t[k * n1 + bj] + ca[bi * n1 + k];
    if (v < best_tail) {
      best_tail = v;
      bk = k;
    }
  }
  const double n = grid_n;
  r.best_params = {static_cast<double>(bi) / n, static_cast<double>(bj) / n, static_cast<double>(bk) / n};
  r.grid_value = r.best_value;
  r.evaluations = static_cast<std::int64_t>(n1 * n1 * n1);
  r.certified_tolerance = 6.0 * diameter(t) / n;
  return r;
}

double gap2_6periodic(const Triangle& t, std::span<const double, 6> params, GapWorkspace& ws) {
  std::array<SchedulePoint, 6> gen;
  for (std::size_t i = 0; i < 6; ++i) gen[i] = {kHexPattern[i], params[i]};
  return periodic_gap(t, gen, 2, ws);
}

SearchResult grid_search_6periodic_gap2(const Triangle& t, int grid_n, int refine_rounds) {
  validate(t);
  if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2");
  const double tol = 6.0 * diameter(t) / grid_n;
  GapWorkspace ws;
  std::array<SchedulePoint, 6> gen;
  for (std::size_t i = 0; i < 6; ++i) gen[i] = {kHexPattern[i], 0.0};

  SearchResult r;
  r.grid_n = grid_n;
  r.objective = Objective::Gap2;
  r.certified_tolerance = tol;
  double best = std::numeric_limits<double>::infinity();
  std::array<int, 6> best_idx{};
  std::vector<double> near;  // values that may end up within tol of the optimum

  std::array<int, 6> idx{};
  const int n = grid_n;
  for (idx[0] = 0; idx[0] <= n; ++idx[0])
    for (idx[1] = 0; idx[1] <= n; ++idx[1])
      for (idx[2] = 0; idx[2] <= n; ++idx[2])
        for (idx[3] = 0; idx[3] <= n; ++idx[3])
          for (idx[4] = 0; idx[4] <= n; ++idx[4])
            for (idx[5] = 0; idx[5] <= n; ++idx[5]) {
              for (std::size_t q = 0; q < 6; ++q) gen[q].u = static_cast<double>(idx[q]) / n;
              const double v = periodic_gap(t, gen, 2, ws);
              ++r.evaluations;
              if (v < best) {
                best = v;
                best_idx = idx;
              }
              if (v <= best + tol) near.push_back(v);
              if (near.size() > (1u << 22)) {
                std::erase_if(near, [&](double x) { return x > best + tol; });
              }
            }
  r.grid_value = best;
  r.near_optimal_cells = std::count_if(near.begin(), near.end(), [&](double x) { return x <= best + tol; });

  // Pattern search over {-h, 0, +h}^6, halving h when no neighbour improves.
  std::array<double, 6> cur;
  for (std::size_t q = 0; q < 6; ++q) cur[q] = static_cast<double>(best_idx[q]) / n;
  double h = 1.0 / n;
  for (int round = 0; round < refine_rounds; ++round) {
    std::array<double, 6> round_best = cur;
    double round_value = best;
    for (int code = 0; code < 729; ++code) {
      std::array<double, 6> cand = cur;
      int c = code;
      for (std::size_t q = 0; q < 6; ++q, c /= 3) cand[q] = std::clamp(cur[q] + (c % 3 - 1) * h, 0.0, 1.0);
      const double v = gap2_6periodic(t, cand, ws);
      ++r.evaluations;
      if (v < round_value) {
        round_value = v;
        round_best = cand;
      }
    }
    if (round_value < best) {
      best = round_value;
      cur = round_best;
    } else {
      h *= 0.5;
    }
  }
  r.best_value = best;
  r.best_params.assign(cur.begin(), cur.end());
  return r;
}

namespace {

Point hit(const Line& line, Point b, Point c) {
  Point out;
  if (!intersect_lines(line.point, line.direction, b, c - b, out)) {
    throw Error(ErrorCode::InvariantViolation, "channel boundary parallel to an unfolded BC");
  }
  return out;
}

}  // namespace

std::vector<LimitedStep> limited_2k_sequence(const Triangle& t, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  const ChannelData ch = orthic_channel(t);
  const Segment base{ch.r_point, ch.t_point};
  const double width = distance(base.start, base.end);

  Point a = ch.chain.labeled.a, b = ch.chain.labeled.b, c = ch.chain.labeled.c;
  std::vector<LimitedStep> steps;
  steps.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    const Point c1 = reflect_point(c, a, b);
    const Point b1 = reflect_point(b, a, c1);
    const Point a1 = reflect_point(a, b1, c1);
    const Point c2 = reflect_point(c1, a1, b1);
    const Point b2 = reflect_point(b1, a1, c2);
    const Point a2 = reflect_point(a1, b2, c2);
    a = a2;
    b = b2;
    c = c2;
    const Segment far{hit(ch.boundary_low, b, c), hit(ch.boundary_high, b, c)};
    LimitedStep s;
    s.k = k;
    s.v_k = segment_distance(base, far);
    s.ratio = s.v_k / k;
    s.bound = width / k;
    steps.push_back(s);
  }
  return steps;
}

double limited_2k_optimum(const Triangle& t, int k) { return limited_2k_sequence(t, k).back().v_k; }

OptimalityCertificate verify_1gap_optimality(const Triangle& t, int grid_n, int k) {
  OptimalityCertificate c;
  c.k = k;
  const auto steps = limited_2k_sequence(t, k);
  c.lower = steps.back().ratio / 2.0;
  c.upper = gap_report(orthic_schedule(t), 1, 3).overall;
  const double slack = relative_tolerance() * diameter(t);
  c.tolerance = steps.back().bound / 2.0 + slack;
  const SearchResult grid = grid_search_3periodic(t, grid_n);
  c.grid_value = grid.best_value;
  c.grid_tolerance = grid.certified_tolerance;
  c.ok = c.lower <= c.upper + slack && c.upper - c.lower <= c.tolerance &&
         grid.best_value >= c.upper - grid.certified_tolerance;
  return c;
}

}  // namespace fagnano
