#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fagnano/geom.hpp"

namespace fagnano {

/// A point on one edge at normalized position u. u == 0 or u == 1 is a
/// vertex and counts as a visit of both incident edges.
struct SchedulePoint {
  EdgeId edge = EdgeId::A;
  double u = 0.0;
};

/// Periodic schedule: s_i = generator[i mod m], time 0 at s_0, unit speed.
struct Schedule {
  Triangle triangle;
  std::vector<SchedulePoint> generator;
};

using EdgeMask = std::uint8_t;

inline constexpr EdgeMask edge_bit(EdgeId e) { return static_cast<EdgeMask>(1u << index(e)); }
inline constexpr EdgeMask kAllEdgesMask = 0b111;

/// Parameters within the relative tolerance of 0 or 1 land exactly on the vertex.
Point position(const Triangle& t, SchedulePoint s);

/// Edges credited by a visit of s: its own edge, plus the other incident
/// edge when s sits on a vertex.
EdgeMask visited_edges(SchedulePoint s);

/// Throws InvalidArgument for m < 3 or u outside [0, 1], InfeasibleSchedule
/// when some edge is never credited.
void validate_schedule(const Schedule& s);

bool is_cyclic(const Schedule& s);
bool is_k_periodic(const Schedule& s, int k);

/// Length of the path s_i -> s_{i+1} -> ... -> s_j (0 <= i <= j).
double travel_time(const Schedule& s, std::int64_t i, std::int64_t j);
double period_length(const Schedule& s);

enum class GapMode { Periodic, Prefix };

struct GapReport {
  int t = 1;
  GapMode mode = GapMode::Periodic;
  /// Sequence elements examined (whole periods in periodic mode).
  std::int64_t horizon = 0;
  std::array<std::vector<double>, 3> per_edge_gaps;
  /// Empty for an edge with fewer than t + 1 observed visits (prefix mode only).
  std::array<std::optional<double>, 3> per_edge_sup;
  double overall = 0.0;
  /// True when every edge produced at least one complete t-gap.
  bool complete = true;
};

/// t-gap sequences over ceil(horizon / m) generator periods. Periodicity
/// makes the per-period maximum the exact supremum.
GapReport gap_report(const Schedule& s, int t, std::int64_t horizon);

/// Same bookkeeping over a finite, possibly aperiodic, prefix.
GapReport gap_report_prefix(const Triangle& tri, std::span<const SchedulePoint> prefix, int t);

/// Reusable buffers for `periodic_gap`; keeps hot search loops allocation-free.
struct GapWorkspace {
  std::vector<double> times;
  std::array<std::vector<double>, 3> visits;
};

/// G^t of the periodic schedule (tri, generator); identical arithmetic to
/// `gap_report(...).overall`. Throws InfeasibleSchedule.
double periodic_gap(const Triangle& tri, std::span<const SchedulePoint> generator, int t,
                    GapWorkspace& ws);

/// Longest single hop of a cyclic schedule: the largest time between visits
/// of two consecutively visited edges.
double pairwise_gap(const Schedule& s);

struct CyclicReduction {
  Schedule schedule;
  bool already_cyclic = false;
  std::size_t window_start = 0;   // k
  std::size_t window_length = 0;  // l, s_{k+l} is the next visit of e(s_k)
  double window_travel = 0.0;     // sum of hops s_k .. s_{k+l}
  double first_gap = 0.0;         // G' of (s_k, s_{k+1}, s_{k+2})
  double second_gap = 0.0;        // G'' of (s_{k+2}, s_{k+3}, s_{k+l})
  bool chose_first = true;
};

/// Replaces a non-cyclic visiting pattern x, y, z, y, ..., x by the better of
/// the two inscribed triangles it contains. The result's 1-gap never exceeds
/// the window's travel time. Uses the leftmost qualifying window.
CyclicReduction cyclic_reduction(const Triangle& tri, std::span<const SchedulePoint> prefix);

}  // namespace fagnano
