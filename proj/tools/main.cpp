#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "triangle_spec.hpp"

namespace {

using fagnano::Error;
using fagnano::ErrorCode;
using nlohmann::json;
namespace cli = fagnano::cli;

struct TriangleFlags {
  std::vector<std::string> vertices;
  std::vector<double> angles_deg;
  std::vector<double> angles_rad;
  double side = 1.0;
};

void add_triangle_flags(CLI::App* cmd, TriangleFlags& f, bool required) {
  auto* v = cmd->add_option("--vertices", f.vertices, "three vertices A B C as x,y")->expected(3);
  auto* d = cmd->add_option("--angles-deg", f.angles_deg, "angles A B in degrees")->expected(2);
  auto* r = cmd->add_option("--angles-rad", f.angles_rad, "angles A B in radians")->expected(2);
  cmd->add_option("--side", f.side, "length of BC for angle input")->capture_default_str();
  v->excludes(d)->excludes(r);
  d->excludes(r);
  auto* group = cmd->add_option_group("triangle");
  group->add_option(v);
  group->add_option(d);
  group->add_option(r);
  if (required) group->require_option(1);
}

cli::TriangleSpec to_spec(const TriangleFlags& f) {
  if (!f.vertices.empty()) return cli::spec_from_vertices(f.vertices);
  if (!f.angles_deg.empty()) return cli::spec_from_angles(cli::AngleUnit::Degrees, f.angles_deg, f.side);
  return cli::spec_from_angles(cli::AngleUnit::Radians, f.angles_rad, f.side);
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InfeasibleSchedule:
      return 3;
    case ErrorCode::InvariantViolation:
    case ErrorCode::ProjectionEscapesEdge:
      return 1;
    default:
      return 2;
  }
}

int fail(const std::string& error, const std::string& message, int code) {
  std::cout << json{{"error", error}, {"message", message}}.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Patrolling schedules on acute triangles: orthic optimum, channel, greedy, oracles"};
  app.set_version_flag("--version", cli::kToolVersion);
  app.require_subcommand(1);

  TriangleFlags tri;
  cli::OrthicOptions orthic;
  cli::GreedyOptions greedy;
  cli::GapOptions gap;
  cli::ChannelOptions channel;
  cli::SearchOptions search;
  cli::UnfoldOptions unfold;
  cli::RenderOptions render;
  std::optional<std::string> emit_orthic, emit_greedy, emit_channel, render_file;
  std::optional<long long> horizon;
  std::optional<int> grid;

  auto* c_orthic = app.add_subcommand("orthic", "orthic triangle, feet and perimeter");
  add_triangle_flags(c_orthic, tri, true);
  c_orthic->add_option("--emit-schedule", emit_orthic, "write the orthic schedule JSON here");

  auto* c_greedy = app.add_subcommand("greedy", "greedy projection schedule");
  add_triangle_flags(c_greedy, tri, true);
  c_greedy->add_option("--start", greedy.start, "start parameter on BC")->capture_default_str();
  c_greedy->add_option("--cycles", greedy.cycles, "lap budget")->capture_default_str();
  c_greedy->add_option("--direction", greedy.direction, "cw or ccw")->capture_default_str();
  c_greedy->add_option("--emit-schedule", emit_greedy, "write the limit schedule JSON here");

  auto* c_gap = app.add_subcommand("gap", "t-gap report of a schedule file");
  c_gap->add_option("--schedule", gap.schedule_file, "schedule JSON file")->required();
  c_gap->add_option("--t", gap.t, "gap order")->capture_default_str();
  c_gap->add_option("--horizon", horizon, "sequence elements to examine (default: one period)");

  auto* c_channel = app.add_subcommand("channel", "orthic channel and sub-orthic schedule");
  add_triangle_flags(c_channel, tri, true);
  c_channel->add_option("--lambda", channel.lambda, "channel parameter in [-1, 1]")->capture_default_str();
  c_channel->add_option("--render", render_file, "write an SVG of the unfolded strip here");
  c_channel->add_option("--emit-schedule", emit_channel, "write the folded schedule JSON here");

  auto* c_search = app.add_subcommand("search", "grid search oracles");
  add_triangle_flags(c_search, tri, true);
  c_search->add_option("--period", search.period, "3 (1-gap) or 6 (2-gap)")->capture_default_str();
  c_search->add_option("--grid", grid, "grid resolution (default 200 for period 3, 8 for period 6)");
  c_search->add_option("--refine", search.refine, "pattern-search rounds for period 6")->capture_default_str();

  auto* c_unfold = app.add_subcommand("unfold", "v_k lower-bound sequence");
  add_triangle_flags(c_unfold, tri, true);
  c_unfold->add_option("-k", unfold.k, "largest k")->capture_default_str();

  auto* c_render = app.add_subcommand("render", "SVG of a trajectory");
  add_triangle_flags(c_render, tri, true);
  c_render->add_option("--scene", render.scene, "channel, orthic or greedy")->capture_default_str();
  c_render->add_option("--out", render.out, "SVG output file")->required();
  c_render->add_option("--lambda", render.lambda, "channel parameter")->capture_default_str();
  c_render->add_option("--start", render.start, "greedy start parameter")->capture_default_str();
  c_render->add_option("--cycles", render.cycles, "greedy laps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("UsageError", e.what(), 2);
  }

  try {
    json report;
    json input;
    json results;
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "gap") {
      gap.horizon = horizon;
      results = cli::cmd_gap(gap, input);
    } else {
      const cli::TriangleSpec spec = to_spec(tri);
      const fagnano::Triangle t = cli::resolve(spec);
      input = cli::spec_to_json(spec, t);
      if (name == "orthic") {
        orthic.emit_schedule = emit_orthic;
        results = cli::cmd_orthic(t, orthic);
      } else if (name == "greedy") {
        greedy.emit_schedule = emit_greedy;
        results = cli::cmd_greedy(t, greedy);
      } else if (name == "channel") {
        channel.emit_schedule = emit_channel;
        channel.render = render_file;
        results = cli::cmd_channel(t, channel);
      } else if (name == "search") {
        search.grid = grid;
        results = cli::cmd_search(t, search);
      } else if (name == "unfold") {
        results = cli::cmd_unfold(t, unfold);
      } else {
        results = cli::cmd_render(t, render);
      }
    }
    report["command"] = name;
    report["input"] = input;
    report["results"] = results;
    report["tool_version"] = cli::kToolVersion;
    report["tolerances"] = cli::tolerances_json();
    std::cout << report.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    return fail(std::string(fagnano::to_string(e.code())), e.what(), exit_code(e.code()));
  } catch (const std::exception& e) {
    return fail("InternalError", e.what(), 1);
  }
}
