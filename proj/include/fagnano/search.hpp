#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fagnano/geom.hpp"
#include "fagnano/schedule.hpp"

namespace fagnano {

enum class Objective { Gap1, Gap2 };

struct SearchResult {
  double best_value = 0.0;
  /// 3-periodic: (u_A, u_B, u_C). 6-periodic: parameters of the points on
  /// edges (A, C, B, A, C, B) in visiting order.
  std::vector<double> best_params;
  int grid_n = 0;
  Objective objective = Objective::Gap1;
  /// Grid spacing times the Lipschitz constant: the grid optimum exceeds the
  /// true optimum by at most this much.
  double certified_tolerance = 0.0;
  /// Best value on the grid itself, before any local refinement.
  double grid_value = 0.0;
  std::int64_t evaluations = 0;
  /// Grid cells within certified_tolerance of grid_value (6-periodic only).
  std::int64_t near_optimal_cells = 0;
};

/// Minimum inscribed-triangle perimeter over the (grid_n + 1)^3 grid u = i / grid_n.
SearchResult grid_search_3periodic(const Triangle& t, int grid_n);

/// 2-gap of the cyclic 6-periodic schedule with edge pattern (A, C, B, A, C, B).
double gap2_6periodic(const Triangle& t, std::span<const double, 6> params, GapWorkspace& ws);

/// Minimum of gap2_6periodic over the (grid_n + 1)^6 grid, then a local
/// pattern search from the best cell.
SearchResult grid_search_6periodic_gap2(const Triangle& t, int grid_n, int refine_rounds = 60);

struct LimitedStep {
  int k = 0;
  double v_k = 0.0;
  double ratio = 0.0;  // v_k / k
  /// |v_k / k - 2 * orthic perimeter| <= bound = |RT| / k, RT the channel's
  /// cross-section of BC.
  double bound = 0.0;
};

/// Shortest segment from RT on BC to R_k T_k on B_k C_k in the k-fold unfolding.
double limited_2k_optimum(const Triangle& t, int k);
/// All steps 1..k_max from a single unfolding.
std::vector<LimitedStep> limited_2k_sequence(const Triangle& t, int k_max);

struct OptimalityCertificate {
  bool ok = false;
  int k = 0;
  double lower = 0.0;  // v_k / (2k)
  double upper = 0.0;  // 1-gap of the orthic schedule
  double tolerance = 0.0;
  double grid_value = 0.0;
  double grid_tolerance = 0.0;
};

/// Sandwich v_k / (2k) <= G^1(orthic) within the unfolding bound, plus the
/// 3-periodic grid finding nothing better than the orthic schedule.
OptimalityCertificate verify_1gap_optimality(const Triangle& t, int grid_n, int k = 100);

}  // namespace fagnano
