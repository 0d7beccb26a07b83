#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fagnano/greedy.hpp"
#include "fagnano/io.hpp"
#include "fagnano/orthic.hpp"
#include "fagnano/search.hpp"
#include "svg.hpp"

namespace fagnano::cli {

namespace {

using nlohmann::json;

json edge_map(const std::array<double, 3>& v) {
  return {{"A", v[0]}, {"B", v[1]}, {"C", v[2]}};
}

json gap_json(const GapReport& r) {
  json gaps, sup;
  for (EdgeId e : kEdges) {
    const std::string key(1, edge_letter(e));
    gaps[key] = r.per_edge_gaps[index(e)];
    sup[key] = r.per_edge_sup[index(e)] ? json(*r.per_edge_sup[index(e)]) : json(nullptr);
  }
  return {{"t", r.t},
          {"mode", r.mode == GapMode::Periodic ? "periodic" : "prefix"},
          {"horizon", r.horizon},
          {"per_edge_gaps", gaps},
          {"per_edge_sup", sup},
          {"overall", r.overall},
          {"complete", r.complete}};
}

json line_json(const Line& l) {
  return {{"point", point_to_json(l.point)}, {"direction", point_to_json(l.direction)}};
}

void emit(const std::optional<std::string>& path, const Schedule& s, json& results) {
  if (!path) return;
  write_text_file(*path, schedule_to_json(s).dump(2) + "\n");
  results["schedule_file"] = *path;
}

std::vector<Point> closed_path(const Schedule& s) {
  std::vector<Point> pts;
  for (const SchedulePoint& p : s.generator) pts.push_back(position(s.triangle, p));
  pts.push_back(pts.front());
  return pts;
}

// Segment of line l spanning the extent of the gadget along its direction.
std::pair<Point, Point> clip_to_gadget(const Line& l, const ReflectionChain& chain) {
  double lo = 1e300, hi = -1e300;
  for (const Triangle& tri : chain.triangles) {
    for (int i = 0; i < 3; ++i) {
      const double s = dot(tri.vertex(i) - l.point, l.direction);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  return {l.point + lo * l.direction, l.point + hi * l.direction};
}

json scene_json(const SvgScene& scene, const Viewport& vp, const std::string& file) {
  return {{"file", file},
          {"viewport", vp.to_json()},
          {"polygons", scene.polygons()},
          {"lines", scene.lines()},
          {"polylines", scene.polylines()}};
}

json render_channel(const ChannelData& ch, const Schedule& folded, const std::string& path) {
  SvgScene scene;
  for (const Triangle& tri : ch.chain.triangles) scene.polygon({tri.a, tri.b, tri.c}, Style::Triangle);
  const auto [k, k2] = orthic_line(ch.chain);
  scene.line(k, k2, Style::OrthicLine);
  const auto low = clip_to_gadget(ch.boundary_low, ch.chain);
  const auto high = clip_to_gadget(ch.boundary_high, ch.chain);
  scene.line(low.first, low.second, Style::Channel);
  scene.line(high.first, high.second, Style::Channel);
  scene.polyline(closed_path(folded), Style::Trajectory);
  const Viewport vp = scene.fit();
  write_text_file(path, scene.render(vp));
  json j = scene_json(scene, vp, path);
  j["orthic_line"] = {point_to_json(k), point_to_json(k2)};
  j["boundary_low_segment"] = {point_to_json(low.first), point_to_json(low.second)};
  j["boundary_high_segment"] = {point_to_json(high.first), point_to_json(high.second)};
  return j;
}

Direction parse_direction(const std::string& d) {
  if (d == "cw" || d == "clockwise") return Direction::Clockwise;
  if (d == "ccw" || d == "counterclockwise") return Direction::Counterclockwise;
  throw Error(ErrorCode::InvalidArgument, "direction must be cw or ccw");
}

json search_json(const SearchResult& r) {
  return {{"objective", r.objective == Objective::Gap1 ? "gap1" : "gap2"},
          {"grid_n", r.grid_n},
          {"best_value", r.best_value},
          {"best_params", r.best_params},
          {"grid_value", r.grid_value},
          {"certified_tolerance", r.certified_tolerance},
          {"evaluations", r.evaluations},
          {"near_optimal_cells", r.near_optimal_cells}};
}

}  // namespace

json tolerances_json() {
  const char* env = std::getenv("FAGNANO_REL_TOL");
  return {{"relative", relative_tolerance()},
          {"relative_source", env ? "FAGNANO_REL_TOL" : "default"},
          {"greedy_convergence", 1e-12}};
}

json cmd_orthic(const Triangle& t, const OrthicOptions& o) {
  const OrthicData d = orthic_triangle(t);
  json r = {{"feet", {{"K", point_to_json(d.k_foot)}, {"L", point_to_json(d.l_foot)},
                      {"M", point_to_json(d.m_foot)}}},
            {"foot_params", edge_map(d.foot_params)},
            {"perimeter_coordinates", d.perimeter},
            {"perimeter_formula", orthic_perimeter(t)},
            {"x0", d.x0}};
  const Schedule s = orthic_schedule(t);
  r["schedule"] = schedule_to_json(s);
  emit(o.emit_schedule, s, r);
  return r;
}

json cmd_greedy(const Triangle& t, const GreedyOptions& o) {
  const Direction dir = parse_direction(o.direction);
  const GreedyTrace g = greedy_run(t, o.start, o.cycles, dir);
  const Angles an = angles(t);
  const double orthic = orthic_perimeter(t);
  json r = {{"direction", dir == Direction::Clockwise ? "cw" : "ccw"},
            {"start_u", g.start_u},
            {"cycles", o.cycles},
            {"x", g.x},
            {"c", g.c},
            {"c_simulated", g.c_simulated},
            {"recurrence_residual", g.recurrence_residual},
            {"fixed_point", g.fixed_point},
            {"iterates", g.iterates},
            {"iterations_to_converge", g.iterations_to_converge},
            {"converged", g.converged},
            {"status", g.converged ? "converged" : "not converged"},
            {"limit_schedule", schedule_to_json(g.limit_schedule)},
            {"limit_gap", g.limit_gap},
            {"limit_gap_formula", greedy_limit_gap(t)},
            {"orthic_perimeter", orthic},
            {"ratio", g.limit_gap / orthic},
            {"ratio_formula", greedy_ratio(an.a, an.b, an.c)}};
  r["observed_prefix_gaps"] = gap_json(gap_report_prefix(t, g.trajectory, 1));
  emit(o.emit_schedule, g.limit_schedule, r);
  return r;
}

json cmd_gap(const GapOptions& o, json& input) {
  std::ifstream f(o.schedule_file, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + o.schedule_file);
  std::stringstream buf;
  buf << f.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("schedule file is not JSON: ") + e.what());
  }
  const Schedule s = schedule_from_json(doc);
  validate(s.triangle);
  input = {{"source", "schedule_file"},
           {"schedule_file", o.schedule_file},
           {"vertices", triangle_to_json(s.triangle)}};
  if (o.t < 1) throw Error(ErrorCode::InvalidArgument, "--t must be positive");
  const long long horizon = o.horizon.value_or(static_cast<long long>(s.generator.size()));
  json r = gap_json(gap_report(s, o.t, horizon));
  r["is_cyclic"] = is_cyclic(s);
  r["period_length"] = period_length(s);
  r["generator_length"] = s.generator.size();
  return r;
}

json cmd_channel(const Triangle& t, const ChannelOptions& o) {
  if (!(o.lambda >= -1.0 && o.lambda <= 1.0)) {
    throw Error(ErrorCode::OutsideChannel, "lambda must lie in [-1, 1]");
  }
  const ChannelData ch = orthic_channel(t);
  const ReflectionChain& c = ch.chain;
  const Schedule s = sub_orthic_schedule(ch, t, o.lambda);
  const double orthic = orthic_perimeter(t);
  json crossings = json::array();
  for (const Point& p : channel_crossings(ch, o.lambda)) crossings.push_back(point_to_json(p));
  json r = {
      {"lambda", o.lambda},
      {"relabeling", c.original_index},
      {"chain",
       {{"c1", point_to_json(c.c1)},
        {"b1", point_to_json(c.b1)},
        {"a1", point_to_json(c.a1)},
        {"c2", point_to_json(c.c2)},
        {"b2", point_to_json(c.b2)},
        {"feet", {point_to_json(c.k), point_to_json(c.m), point_to_json(c.l1), point_to_json(c.k1),
                  point_to_json(c.m1), point_to_json(c.l2), point_to_json(c.k2)}},
        {"parallel_residual", c.parallel_residual},
        {"collinearity_residual", c.collinearity_residual}}},
      {"direction", point_to_json(ch.direction)},
      {"normal", point_to_json(ch.normal)},
      {"boundary_low", line_json(ch.boundary_low)},
      {"boundary_high", line_json(ch.boundary_high)},
      {"half_width_low", ch.half_width_low},
      {"half_width_high", ch.half_width_high},
      {"r_point", point_to_json(ch.r_point)},
      {"t_point", point_to_json(ch.t_point)},
      {"low_meets_all", ch.low_meets_all},
      {"high_meets_all", ch.high_meets_all},
      {"crossings", crossings},
      {"generator", schedule_to_json(s)},
      {"is_cyclic", is_cyclic(s)},
      {"gap1", gap_report(s, 1, 6).overall},
      {"gap2", gap_report(s, 2, 6).overall},
      {"pairwise_gap", pairwise_gap(s)},
      {"orthic_perimeter", orthic},
      {"twice_orthic_perimeter", 2.0 * orthic}};
  emit(o.emit_schedule, s, r);
  if (o.render) r["svg"] = render_channel(ch, s, *o.render);
  return r;
}

json cmd_search(const Triangle& t, const SearchOptions& o) {
  if (o.period != 3 && o.period != 6) throw Error(ErrorCode::InvalidArgument, "--period must be 3 or 6");
  const double orthic = orthic_perimeter(t);
  if (o.period == 3) {
    const SearchResult s = grid_search_3periodic(t, o.grid.value_or(200));
    json r = search_json(s);
    r["period"] = 3;
    r["reference"] = orthic;
    r["reference_name"] = "orthic_perimeter";
    r["above_reference_minus_tolerance"] = s.best_value >= orthic - s.certified_tolerance;
    r["within_tolerance"] = std::abs(s.best_value - orthic) <= s.certified_tolerance;
    return r;
  }
  const SearchResult s = grid_search_6periodic_gap2(t, o.grid.value_or(8), o.refine);
  json r = search_json(s);
  r["period"] = 6;
  r["refine_rounds"] = o.refine;
  r["reference"] = 2.0 * orthic;
  r["reference_name"] = "twice_orthic_perimeter";
  r["above_reference_minus_tolerance"] = s.best_value >= 2.0 * orthic - s.certified_tolerance;
  r["within_tolerance"] = std::abs(s.best_value - 2.0 * orthic) <= s.certified_tolerance;
  return r;
}

json cmd_unfold(const Triangle& t, const UnfoldOptions& o) {
  const auto steps = limited_2k_sequence(t, o.k);
  const double target = 2.0 * orthic_perimeter(t);
  json table = json::array();
  bool non_decreasing = true, non_increasing = true;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const LimitedStep& s = steps[i];
    table.push_back({{"k", s.k}, {"v_k", s.v_k}, {"ratio", s.ratio}, {"bound", s.bound}});
    if (i > 0) {
      non_decreasing = non_decreasing && s.ratio >= steps[i - 1].ratio - 1e-12 * target;
      non_increasing = non_increasing && s.ratio <= steps[i - 1].ratio + 1e-12 * target;
    }
  }
  const LimitedStep& last = steps.back();
  return {{"k_max", o.k},
          {"table", table},
          {"twice_orthic_perimeter", target},
          {"limit_error", std::abs(last.ratio - target)},
          {"limit_bound", last.bound},
          {"within_bound", std::abs(last.ratio - target) <= last.bound},
          {"non_decreasing", non_decreasing},
          {"non_increasing", non_increasing}};
}

json cmd_render(const Triangle& t, const RenderOptions& o) {
  if (o.scene == "channel") {
    if (!(o.lambda >= -1.0 && o.lambda <= 1.0)) {
      throw Error(ErrorCode::OutsideChannel, "lambda must lie in [-1, 1]");
    }
    const ChannelData ch = orthic_channel(t);
    const Schedule s = sub_orthic_schedule(ch, t, o.lambda);
    json r = render_channel(ch, s, o.out);
    r["scene"] = "channel";
    r["lambda"] = o.lambda;
    r["trajectory"] = schedule_to_json(s);
    return r;
  }
  SvgScene scene;
  scene.polygon({t.a, t.b, t.c}, Style::Triangle);
  json r = {{"scene", o.scene}};
  if (o.scene == "orthic") {
    const OrthicData d = orthic_triangle(t);
    scene.line(t.a, d.k_foot, Style::Altitude);
    scene.line(t.b, d.l_foot, Style::Altitude);
    scene.line(t.c, d.m_foot, Style::Altitude);
    scene.polyline(closed_path(orthic_schedule(t)), Style::Trajectory);
    r["trajectory"] = schedule_to_json(orthic_schedule(t));
  } else if (o.scene == "greedy") {
    const GreedyTrace g = greedy_run(t, o.start, o.cycles);
    std::vector<Point> pts;
    for (const SchedulePoint& p : g.trajectory) pts.push_back(position(t, p));
    scene.polyline(pts, Style::Trajectory);
    r["start_u"] = o.start;
    r["cycles"] = o.cycles;
    r["trajectory"] = schedule_to_json({t, g.trajectory});
  } else {
    throw Error(ErrorCode::InvalidArgument, "--scene must be channel, orthic or greedy");
  }
  const Viewport vp = scene.fit();
  write_text_file(o.out, scene.render(vp));
  r.update(scene_json(scene, vp, o.out));
  return r;
}

}  // namespace fagnano::cli
