// One line per acceptance criterion, PASS or FAIL, with the measured numbers.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

#include "fagnano/greedy.hpp"
#include "fagnano/orthic.hpp"
#include "fagnano/schedule.hpp"
#include "fagnano/search.hpp"
#include "support/cli_cases.hpp"
#include "support/random_triangles.hpp"

using namespace fagnano;
using fagnano::testing::RandomAcute;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

/// Every criterion draws from the same family: angles in [0.1, pi/2 - 0.05]
/// rad (about 5.7 to 87.1 degrees), random rotation, scale and offset.
std::vector<Triangle> suite(std::uint64_t seed, int n) {
  RandomAcute gen(seed);
  std::vector<Triangle> out;
  for (int i = 0; i < n; ++i) out.push_back(gen.next());
  return out;
}

const std::vector<Triangle>& suite1000() {
  static const auto s = suite(1, 1000);
  return s;
}

const std::vector<Triangle>& suite50() {
  static const auto s = suite(2, 50);
  return s;
}

double max_edge(const Triangle& t) {
  const auto s = side_lengths(t);
  return std::max({s[0], s[1], s[2]});
}

double deg(double r) { return r * 180.0 / kPi; }

Outcome fagnano_optimality() {
  const int n = 200;
  int value_ok = 0, argmin_ok = 0;
  double worst_value = 0.0, worst_dev = 0.0;
  double fail_min_angle = 180.0, fail_max_angle = 0.0, fail_worst_value = 0.0;
  for (const Triangle& t : suite1000()) {
    const SearchResult r = grid_search_3periodic(t, n);
    const double p = orthic_perimeter(t);
    const double tol = 6.0 * max_edge(t) / n;
    const double err = std::abs(r.best_value - p);
    worst_value = std::max(worst_value, err / tol);
    if (err <= tol) ++value_ok;
    const OrthicData o = orthic_triangle(t);
    double dev = 0.0;
    for (std::size_t i = 0; i < 3; ++i) dev = std::max(dev, std::abs(r.best_params[i] - o.foot_params[i]));
    worst_dev = std::max(worst_dev, dev);
    if (dev <= 2.0 / n) {
      ++argmin_ok;
    } else {
      const Angles an = angles(t);
      fail_min_angle = std::min(fail_min_angle, deg(std::min({an.a, an.b, an.c})));
      fail_max_angle = std::max(fail_max_angle, deg(std::max({an.a, an.b, an.c})));
      fail_worst_value = std::max(fail_worst_value, err / p);
    }
  }
  Outcome o;
  o.pass = value_ok == 1000 && argmin_ok == 1000;
  o.detail = fmt("value within 6*maxedge/200: %d/1000 (worst %.3g of tol); argmin within 2/200: %d/1000 (worst %.4f)",
                 value_ok, worst_value, argmin_ok, worst_dev);
  if (argmin_ok < 1000) {
    o.notes.push_back(fmt("argmin misses: smallest angle down to %.1f deg, largest up to %.1f deg; their values are still within %.2g relative of the orthic perimeter",
                          fail_min_angle, fail_max_angle, fail_worst_value));
    o.notes.push_back("the perimeter is nearly flat along a valley when two angles approach pi/2, so the grid argmin can sit far from the feet while its value is optimal to O(h^2)");
  }
  return o;
}

Outcome perimeter_formula() {
  double worst = 0.0;
  for (const Triangle& t : suite1000()) worst = std::max(worst, rel(orthic_triangle(t).perimeter, orthic_perimeter(t)));
  return {worst <= 1e-10, fmt("worst relative difference %.3g (limit 1e-10), 1000 triangles", worst), {}};
}

Outcome collinear_parallel() {
  double det = 0.0, ang = 0.0;
  for (const Triangle& t : suite1000()) {
    const ReflectionChain r = reflection_chain(t);
    det = std::max(det, r.collinearity_residual);
    ang = std::max(ang, r.parallel_residual);
  }
  return {det <= 1e-9 && ang <= 1e-10,
          fmt("worst |det|/scale^2 %.3g (limit 1e-9), worst angle %.3g rad (limit 1e-10)", det, ang), {}};
}

Outcome two_gap_optimality() {
  const int grid = 10;
  double worst_rel = 0.0, worst_margin = 1e300;
  int below_tol = 0, below_exact = 0;
  for (const Triangle& t : suite50()) {
    const ChannelData ch = orthic_channel(t);
    const double p2 = 2.0 * orthic_perimeter(t);
    for (int i = 0; i <= 20; ++i) {
      const Schedule s = sub_orthic_schedule(ch, t, -1.0 + i / 10.0);
      worst_rel = std::max(worst_rel, rel(gap_report(s, 2, 6).overall, p2));
    }
    const SearchResult r = grid_search_6periodic_gap2(t, grid);
    if (r.best_value < p2 - r.certified_tolerance) ++below_tol;
    if (r.best_value < p2 * (1 - 1e-12)) ++below_exact;
    worst_margin = std::min(worst_margin, (r.best_value - p2) / p2);
  }
  Outcome o;
  o.pass = worst_rel <= 1e-9 && below_tol == 0;
  o.detail = fmt("sub-orthic G2 worst relative error %.3g over 50x21 (limit 1e-9); grid %d search below 2P - tol: %d/50",
                 worst_rel, grid, below_tol);
  o.notes.push_back(fmt("searched minimum never below 2P by more than 1e-12 relative (%d violations); smallest (best - 2P)/2P = %.3g",
                        below_exact, worst_margin));
  return o;
}

Outcome lower_bound_sequence() {
  int non_increasing = 0, non_decreasing = 0, within = 0;
  double worst_ratio = 0.0;
  for (const Triangle& t : suite50()) {
    const auto steps = limited_2k_sequence(t, 100);
    const double p2 = 2.0 * orthic_perimeter(t);
    bool inc_ok = true, dec_ok = true;
    for (std::size_t i = 1; i < steps.size(); ++i) {
      if (steps[i].ratio > steps[i - 1].ratio + 1e-12) inc_ok = false;
      if (steps[i].ratio < steps[i - 1].ratio - 1e-12) dec_ok = false;
    }
    non_increasing += inc_ok;
    non_decreasing += dec_ok;
    const double err = std::abs(steps.back().ratio - p2);
    if (err <= steps.back().bound) ++within;
    worst_ratio = std::max(worst_ratio, err / steps.back().bound);
  }
  Outcome o;
  o.pass = non_increasing == 50 && within == 50;
  o.detail = fmt("v_k/k non-increasing for k<=100: %d/50; |v_100/100 - 2P| <= bound: %d/50 (worst %.3g of bound)",
                 non_increasing, within, worst_ratio);
  o.notes.push_back(fmt("v_k/k is non-decreasing in k on %d/50 triangles: it climbs to 2P from below", non_decreasing));
  return o;
}

Outcome multi_objective() {
  int violations = 0, samples = 0;
  double worst = 1e300;
  for (const Triangle& t : suite50()) {
    const ChannelData ch = orthic_channel(t);
    const double base = pairwise_gap(sub_orthic_schedule(ch, t, 0.0));
    for (int i = 0; i <= 20; ++i) {
      const double g = pairwise_gap(sub_orthic_schedule(ch, t, -1.0 + i / 10.0));
      ++samples;
      if (g < base - 1e-10) ++violations;
      worst = std::min(worst, g - base);
    }
  }
  return {violations == 0,
          fmt("pairwise_gap(lambda) >= pairwise_gap(0) - 1e-10: %d/%d samples hold, smallest margin %.3g",
              samples - violations, samples, worst),
          {}};
}

Outcome greedy_convergence() {
  double worst_gap = 0.0, worst_contraction = 0.0, worst_dir = 0.0;
  for (const Triangle& t : suite1000()) {
    const GreedyTrace cw = greedy_run(t, 0.05, 1000, Direction::Clockwise);
    const GreedyTrace ccw = greedy_run(t, 0.05, 1000, Direction::Counterclockwise);
    worst_gap = std::max(worst_gap, rel(cw.limit_gap, greedy_limit_gap(t)));
    worst_dir = std::max(worst_dir, rel(ccw.limit_gap, cw.limit_gap));
    const double d = cw.fixed_point;
    for (std::size_t i = 0; i + 1 < cw.iterates.size(); ++i) {
      if (std::abs(cw.iterates[i] - d) <= 1e-6) break;
      const double r = std::abs(cw.iterates[i + 1] - d) / std::abs(cw.iterates[i] - d);
      worst_contraction = std::max(worst_contraction, std::abs(r - std::abs(cw.x)));
    }
  }
  return {worst_gap <= 1e-8 && worst_contraction <= 1e-9 && worst_dir <= 1e-10,
          fmt("limit vs formula %.3g (1e-8); contraction vs |cosA cosB cosC| %.3g (1e-9); cw vs ccw %.3g (1e-10)",
              worst_gap, worst_contraction, worst_dir),
          {}};
}

Outcome ratio_landmarks() {
  const double eq = greedy_ratio(kPi / 3, kPi / 3, kPi / 3);
  const double ri = greedy_ratio(kPi / 4, kPi / 4, kPi / 2);
  const double e1 = std::abs(eq - 2.0 * std::sqrt(3.0) / 3.0);
  const double e2 = std::abs(ri - (1.0 + std::sqrt(2.0)) / 2.0);
  const RatioExtremes x = greedy_ratio_extremes(500);
  const double h = kPi / 1000.0;
  bool approaches = true;
  double prev = 2.0, last = 0.0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    last = greedy_ratio(eps, kPi / 2 - eps, kPi / 2);
    approaches = approaches && last < prev && last >= 1.0;
    prev = last;
  }
  Outcome o;
  o.pass = e1 <= 1e-12 && e2 <= 1e-12 && std::abs(x.max - 1.2071068) <= 1e-4 &&
           x.inf - 1.0 <= h && approaches && last - 1.0 <= 1e-6;
  o.detail = fmt("f(pi/3,..) err %.2g, f(pi/4,pi/4,pi/2) err %.2g; grid 500 max %.9f at (%.4f, %.4f, %.4f); inf %.6f; f(1e-6, pi/2-1e-6, pi/2) - 1 = %.2g",
                 e1, e2, x.max, x.argmax.a, x.argmax.b, x.argmax.c, x.inf, last - 1.0);
  return o;
}

Outcome cyclic_reduction_trials() {
  RandomAcute gen(9);
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 1), lead(0, 4), filler(0, 6);
  int ok = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Triangle t = gen.next();
    std::array<EdgeId, 3> perm = kEdges;
    std::shuffle(perm.begin(), perm.end(), rng);
    const EdgeId x = perm[0], y = perm[1], z = perm[2];
    std::vector<SchedulePoint> prefix;
    for (int i = lead(rng); i > 0; --i) prefix.push_back({x, u(rng)});
    prefix.push_back({x, u(rng)});
    prefix.push_back({y, u(rng)});
    prefix.push_back({z, u(rng)});
    prefix.push_back({y, u(rng)});
    for (int i = filler(rng); i > 0; --i) prefix.push_back({coin(rng) ? y : z, u(rng)});
    prefix.push_back({x, u(rng)});
    const CyclicReduction r = cyclic_reduction(t, prefix);
    double travel = 0.0;
    for (std::size_t i = r.window_start; i < r.window_start + r.window_length; ++i) {
      travel += distance(position(t, prefix[i]), position(t, prefix[i + 1]));
    }
    const double g = gap_report(r.schedule, 1, 3).overall;
    if (g <= travel) ++ok;
    worst = std::max(worst, g / travel);
  }
  return {ok == 10000, fmt("G1(reduced) <= window travel: %d/10000 (largest ratio %.4f)", ok, worst), {}};
}

Outcome cli_determinism() {
  namespace ft = fagnano::testing;
  unsetenv("FAGNANO_REL_TOL");
  const auto work = ft::make_cli_workdir("fagnano_acceptance");
  int golden = 0, rerun = 0, codes = 0, svgs = 0, svg_ok = 0, total = 0;
  for (const ft::CliCase& c : ft::cli_cases()) {
    ++total;
    const ft::CliRun a = ft::run_cli(work, c.args);
    std::vector<std::string> first;
    for (const std::string& f : c.files) first.push_back(ft::read_file(work / f));
    const ft::CliRun b = ft::run_cli(work, c.args);
    bool same = a.out == b.out && a.code == b.code;
    bool match = a.out == ft::read_file(ft::fs::path(GOLDEN_DIR) / (c.name + ".json"));
    for (std::size_t i = 0; i < c.files.size(); ++i) {
      const std::string again = ft::read_file(work / c.files[i]);
      same = same && again == first[i];
      match = match && first[i] == ft::read_file(ft::fs::path(GOLDEN_DIR) / c.files[i]);
      if (c.files[i].ends_with(".svg")) {
        ++svgs;
        try {
          boost::property_tree::ptree tree;
          boost::property_tree::read_xml((work / c.files[i]).string(), tree);
          ++svg_ok;
        } catch (const std::exception&) {
        }
      }
    }
    golden += match;
    rerun += same;
    codes += a.code == c.exit_code && nlohmann::json::accept(a.out);
  }
  ft::fs::remove_all(work);
  return {golden == total && rerun == total && codes == total && svg_ok == svgs,
          fmt("golden match %d/%d, byte-identical rerun %d/%d, exit code + JSON %d/%d, SVG parses as XML %d/%d",
              golden, total, rerun, total, codes, total, svg_ok, svgs),
          {}};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Fagnano optimality", 60, fagnano_optimality},
      {2, "orthic perimeter formula", 1, perimeter_formula},
      {3, "collinearity and parallelism", 5, collinear_parallel},
      {4, "2-gap optimality", 300, two_gap_optimality},
      {5, "lower-bound sequence", 10, lower_bound_sequence},
      {6, "multi-objective optimality", 10, multi_objective},
      {7, "greedy convergence and cost", 30, greedy_convergence},
      {8, "ratio landmarks", 10, ratio_landmarks},
      {9, "cyclic reduction", 10, cyclic_reduction_trials},
      {10, "CLI determinism and schema", 5, cli_determinism},
  };
  // Built once so triangle generation is not charged to the first criterion.
  suite1000();
  suite50();

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] %2d %s: %s; %.2f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", exceeded");
    for (const std::string& n : o.notes) std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
