#include "fagnano/schedule.hpp"

#include <algorithm>
#include <string>

namespace fagnano {

Point position(const Triangle& t, SchedulePoint s) {
  // Positions agree with the vertex credit given by `visited_edges`.
  const double tol = relative_tolerance();
  const double u = s.u <= tol ? 0.0 : s.u >= 1.0 - tol ? 1.0 : s.u;
  return point_at(t, s.edge, u);
}

EdgeMask visited_edges(SchedulePoint s) {
  const double tol = relative_tolerance();
  const auto [first, last] = edge_vertices(s.edge);
  int vertex = -1;
  if (s.u <= tol) vertex = first;
  else if (s.u >= 1.0 - tol) vertex = last;
  if (vertex < 0) return edge_bit(s.edge);
  // Both edges incident to a vertex are the ones not opposite it.
  return static_cast<EdgeMask>(kAllEdgesMask & ~(1u << vertex));
}

namespace {

EdgeMask credited(std::span<const SchedulePoint> points) {
  EdgeMask mask = 0;
  for (const SchedulePoint& p : points) mask |= visited_edges(p);
  return mask;
}

void require_feasible(std::span<const SchedulePoint> points) {
  const EdgeMask mask = credited(points);
  for (EdgeId e : kEdges) {
    if (!(mask & edge_bit(e))) {
      throw Error(ErrorCode::InfeasibleSchedule,
                  std::string("edge ") + edge_letter(e) + " is never visited");
    }
  }
}

void check_points(std::span<const SchedulePoint> points) {
  for (const SchedulePoint& p : points) {
    if (!(p.u >= 0.0 && p.u <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "schedule point parameter outside [0, 1]");
    }
  }
}

// Fills ws.times with the arrival time of every step of one period (plus the
// period length at index m) and ws.visits with merged per-edge visit times.
// Visits at the same instant count once; a visit at time T wraps onto time 0.
double fill_periodic_visits(const Triangle& tri, std::span<const SchedulePoint> gen,
                            GapWorkspace& ws) {
  const std::size_t m = gen.size();
  ws.times.assign(m + 1, 0.0);
  Point prev = position(tri, gen[0]);
  const Point first = prev;
  for (std::size_t i = 1; i <= m; ++i) {
    const Point cur = i < m ? position(tri, gen[i]) : first;
    ws.times[i] = ws.times[i - 1] + distance(prev, cur);
    prev = cur;
  }
  const double period = ws.times[m];
  const double eps = 1e-12 * period;
  for (auto& v : ws.visits) v.clear();
  for (std::size_t i = 0; i < m; ++i) {
    const EdgeMask mask = visited_edges(gen[i]);
    for (EdgeId e : kEdges) {
      if (!(mask & edge_bit(e))) continue;
      auto& v = ws.visits[index(e)];
      if (v.empty() || ws.times[i] - v.back() > eps) v.push_back(ws.times[i]);
    }
  }
  for (auto& v : ws.visits) {
    if (v.size() > 1 && v.front() + period - v.back() <= eps) v.pop_back();
  }
  return period;
}

// Time of the j-th visit (j >= 0) of an edge whose one-period visits are v.
inline double visit_time(const std::vector<double>& v, double period, std::int64_t j) {
  const auto n = static_cast<std::int64_t>(v.size());
  return v[static_cast<std::size_t>(j % n)] + period * static_cast<double>(j / n);
}

}  // namespace

void validate_schedule(const Schedule& s) {
  validate(s.triangle);
  if (s.generator.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "schedule generator needs at least 3 points");
  }
  check_points(s.generator);
  require_feasible(s.generator);
}

bool is_cyclic(const Schedule& s) {
  const auto& g = s.generator;
  const std::size_t m = g.size();
  if (m < 3) return false;
  if (g[0].edge == g[1].edge || g[1].edge == g[2].edge || g[0].edge == g[2].edge) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (g[(i + 3) % m].edge != g[i].edge) return false;
  }
  return true;
}

bool is_k_periodic(const Schedule& s, int k) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "periodicity order must be at least 3");
  const std::size_t m = s.generator.size();
  const double tol = relative_tolerance() * diameter(s.triangle);
  for (std::size_t i = 0; i < m; ++i) {
    const Point p = position(s.triangle, s.generator[i]);
    const Point q = position(s.triangle, s.generator[(i + static_cast<std::size_t>(k)) % m]);
    if (distance(p, q) > tol) return false;
  }
  return true;
}

double period_length(const Schedule& s) {
  return travel_time(s, 0, static_cast<std::int64_t>(s.generator.size()));
}

double travel_time(const Schedule& s, std::int64_t i, std::int64_t j) {
  if (i < 0 || j < i) throw Error(ErrorCode::InvalidArgument, "travel_time needs 0 <= i <= j");
  const auto m = static_cast<std::int64_t>(s.generator.size());
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty schedule");
  std::vector<double> hop(static_cast<std::size_t>(m));
  double period = 0.0;
  for (std::int64_t q = 0; q < m; ++q) {
    hop[static_cast<std::size_t>(q)] =
        distance(position(s.triangle, s.generator[static_cast<std::size_t>(q)]),
                 position(s.triangle, s.generator[static_cast<std::size_t>((q + 1) % m)]));
    period += hop[static_cast<std::size_t>(q)];
  }
  const std::int64_t steps = j - i;
  double total = period * static_cast<double>(steps / m);
  for (std::int64_t q = 0; q < steps % m; ++q) total += hop[static_cast<std::size_t>((i + q) % m)];
  return total;
}

double periodic_gap(const Triangle& tri, std::span<const SchedulePoint> generator, int t,
                    GapWorkspace& ws) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "gap order t must be positive");
  if (generator.empty()) throw Error(ErrorCode::InvalidArgument, "empty schedule");
  require_feasible(generator);
  const double period = fill_periodic_visits(tri, generator, ws);
  double overall = 0.0;
  for (const auto& v : ws.visits) {
    const auto n = static_cast<std::int64_t>(v.size());
    for (std::int64_t k = 0; k < n; ++k) {
      overall = std::max(overall, visit_time(v, period, k + t) - visit_time(v, period, k));
    }
  }
  return overall;
}

GapReport gap_report(const Schedule& s, int t, std::int64_t horizon) {
  validate_schedule(s);
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "gap order t must be positive");
  const auto m = static_cast<std::int64_t>(s.generator.size());
  if (horizon < m) {
    throw Error(ErrorCode::InvalidArgument, "horizon shorter than one generator period");
  }
  GapWorkspace ws;
  const double period = fill_periodic_visits(s.triangle, s.generator, ws);
  const std::int64_t periods = (horizon + m - 1) / m;

  GapReport r;
  r.t = t;
  r.mode = GapMode::Periodic;
  r.horizon = periods * m;
  for (EdgeId e : kEdges) {
    const auto& v = ws.visits[index(e)];
    const auto count = static_cast<std::int64_t>(v.size()) * periods;
    auto& gaps = r.per_edge_gaps[index(e)];
    gaps.reserve(static_cast<std::size_t>(count));
    double sup = 0.0;
    for (std::int64_t k = 0; k < count; ++k) {
      const double g = visit_time(v, period, k + t) - visit_time(v, period, k);
      gaps.push_back(g);
      sup = std::max(sup, g);
    }
    r.per_edge_sup[index(e)] = sup;
    r.overall = std::max(r.overall, sup);
  }
  return r;
}

GapReport gap_report_prefix(const Triangle& tri, std::span<const SchedulePoint> prefix, int t) {
  validate(tri);
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "gap order t must be positive");
  check_points(prefix);
  require_feasible(prefix);

  std::vector<double> times(prefix.size(), 0.0);
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    times[i] = times[i - 1] + distance(position(tri, prefix[i - 1]), position(tri, prefix[i]));
  }
  const double eps = 1e-12 * times.back();
  std::array<std::vector<double>, 3> visits;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const EdgeMask mask = visited_edges(prefix[i]);
    for (EdgeId e : kEdges) {
      auto& v = visits[index(e)];
      if ((mask & edge_bit(e)) && (v.empty() || times[i] - v.back() > eps)) v.push_back(times[i]);
    }
  }

  GapReport r;
  r.t = t;
  r.mode = GapMode::Prefix;
  r.horizon = static_cast<std::int64_t>(prefix.size());
  for (EdgeId e : kEdges) {
    const auto& v = visits[index(e)];
    auto& gaps = r.per_edge_gaps[index(e)];
    for (std::size_t k = 0; k + static_cast<std::size_t>(t) < v.size(); ++k) {
      gaps.push_back(v[k + static_cast<std::size_t>(t)] - v[k]);
    }
    if (gaps.empty()) {
      r.complete = false;
      continue;
    }
    const double sup = *std::max_element(gaps.begin(), gaps.end());
    r.per_edge_sup[index(e)] = sup;
    r.overall = std::max(r.overall, sup);
  }
  return r;
}

double pairwise_gap(const Schedule& s) {
  validate_schedule(s);
  if (!is_cyclic(s)) throw Error(ErrorCode::NotCyclic, "pairwise gap needs a cyclic schedule");
  const std::size_t m = s.generator.size();
  double longest = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    longest = std::max(longest, distance(position(s.triangle, s.generator[i]),
                                         position(s.triangle, s.generator[(i + 1) % m])));
  }
  return longest;
}

CyclicReduction cyclic_reduction(const Triangle& tri, std::span<const SchedulePoint> prefix) {
  validate(tri);
  check_points(prefix);
  const std::size_t n = prefix.size();
  const auto e = [&](std::size_t i) { return prefix[i].edge; };

  CyclicReduction out;
  out.schedule.triangle = tri;

  bool edge_cyclic = n >= 3 && e(0) != e(1) && e(1) != e(2) && e(0) != e(2);
  for (std::size_t i = 0; edge_cyclic && i + 3 < n; ++i) edge_cyclic = e(i + 3) == e(i);
  if (edge_cyclic) {
    out.already_cyclic = true;
    out.schedule.generator.assign(prefix.begin(), prefix.begin() + 3);
    out.window_length = 3;
    GapWorkspace ws;
    out.first_gap = periodic_gap(tri, out.schedule.generator, 1, ws);
    out.window_travel = out.first_gap;
    return out;
  }

  for (std::size_t k = 0; k + 4 < n; ++k) {
    const EdgeId x = e(k), y = e(k + 1), z = e(k + 2);
    if (x == y || y == z || x == z || e(k + 3) != y) continue;
    std::size_t l = 4;
    while (k + l < n && e(k + l) != x) ++l;
    if (k + l >= n) continue;

    out.window_start = k;
    out.window_length = l;
    for (std::size_t i = 0; i < l; ++i) {
      out.window_travel += distance(position(tri, prefix[k + i]), position(tri, prefix[k + i + 1]));
    }
    const std::vector<SchedulePoint> first = {prefix[k], prefix[k + 1], prefix[k + 2]};
    const std::vector<SchedulePoint> second = {prefix[k + 2], prefix[k + 3], prefix[k + l]};
    GapWorkspace ws;
    out.first_gap = periodic_gap(tri, first, 1, ws);
    out.second_gap = periodic_gap(tri, second, 1, ws);
    out.chose_first = out.first_gap <= out.second_gap;
    out.schedule.generator = out.chose_first ? first : second;
    return out;
  }
  throw Error(ErrorCode::NoReductionWindow, "prefix has no non-cyclic window x,y,z,y,...,x");
}

}  // namespace fagnano
