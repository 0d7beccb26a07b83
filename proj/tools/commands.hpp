#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fagnano/geom.hpp"

namespace fagnano::cli {

inline constexpr const char* kToolVersion = "1.0.0";

struct OrthicOptions {
  std::optional<std::string> emit_schedule;
};

struct GreedyOptions {
  double start = 0.5;
  int cycles = 100;
  std::string direction = "cw";
  std::optional<std::string> emit_schedule;
};

struct GapOptions {
  std::string schedule_file;
  int t = 1;
  std::optional<long long> horizon;
};

struct ChannelOptions {
  double lambda = 0.0;
  std::optional<std::string> render;
  std::optional<std::string> emit_schedule;
};

struct SearchOptions {
  int period = 3;
  std::optional<int> grid;
  int refine = 60;
};

struct UnfoldOptions {
  int k = 50;
};

struct RenderOptions {
  std::string scene = "channel";
  std::string out;
  double lambda = 0.5;
  double start = 0.1;
  int cycles = 12;
};

nlohmann::json cmd_orthic(const Triangle& t, const OrthicOptions& o);
nlohmann::json cmd_greedy(const Triangle& t, const GreedyOptions& o);
/// Reads the triangle from the schedule file; `input` receives its block.
nlohmann::json cmd_gap(const GapOptions& o, nlohmann::json& input);
nlohmann::json cmd_channel(const Triangle& t, const ChannelOptions& o);
nlohmann::json cmd_search(const Triangle& t, const SearchOptions& o);
nlohmann::json cmd_unfold(const Triangle& t, const UnfoldOptions& o);
nlohmann::json cmd_render(const Triangle& t, const RenderOptions& o);

/// The `tolerances` block of every report.
nlohmann::json tolerances_json();

}  // namespace fagnano::cli
