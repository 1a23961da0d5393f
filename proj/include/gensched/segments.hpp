#ifndef GENSCHED_SEGMENTS_HPP
#define GENSCHED_SEGMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gensched/execution.hpp"
#include "gensched/model.hpp"

namespace gensched {

/// Which clip boundary of the capped cumulative process a value sits on.
enum class Boundary : std::uint8_t { interior, lower, upper };

/// Single-slot cost advantage of running the generator: psi(slot, 0) - psi(slot, 1).
double delta(const InputSlot& slot, const SystemParams& params);

/// Absolute tolerance used when deciding that the process touches 0 or -beta.
double boundary_tolerance(const SystemParams& params) noexcept;

struct CappedStep {
  double value = 0.0;
  Boundary touch = Boundary::interior;
};

/// One step of the recursion min{0, max{-beta, prev + d}}. Values within
/// boundary_tolerance() of a boundary are snapped onto it. With beta = 0 both
/// boundaries coincide and the sign of `d` decides which one is touched.
CappedStep advance(double prev, double d, const SystemParams& params) noexcept;

/// delta[t-1] = delta(t) for t = 1..T; capped[t] = Delta(t) for t = 0..T with
/// capped[0] = -beta; touch[t] classifies capped[t].
struct DeltaSeries {
  std::vector<double> delta;
  std::vector<double> capped;
  std::vector<Boundary> touch;
  double beta = 0.0;

  std::size_t horizon() const noexcept { return delta.size(); }
};

DeltaSeries capped_series(const Trace& trace, const SystemParams& params);

/// Uncapped sum of delta(s) for s in [first, last], 1-based and inclusive.
/// Returns 0 for an empty range.
double cumulative_cost(const DeltaSeries& series, std::size_t first, std::size_t last);

enum class SegmentKind { type_start, type1, type2, type_end };

/// Closed 1-based interval [start, end]. `transit_end` is the first index at
/// the arriving boundary for type1/type2 segments.
struct CriticalSegment {
  std::size_t start = 0;
  std::size_t end = 0;
  SegmentKind kind = SegmentKind::type_start;
  std::optional<std::size_t> transit_end;
};

struct Decomposition {
  std::vector<CriticalSegment> segments;  // non-empty segments, in time order
  std::vector<std::size_t> critical_points;
  Boundary final_boundary = Boundary::lower;  // boundary of the last dwell

  std::size_t count(SegmentKind kind) const noexcept;
};

/// Splits [1, T] into critical segments. A dwell on one boundary runs from
/// the first to the last index touching it; excursions that come back to the
/// same boundary stay inside the dwell. A transit segment runs from just
/// after one dwell's last index to the next dwell's last index; the tail
/// after the final dwell is type_end.
Decomposition decompose(const DeltaSeries& series);

/// Offline optimum: generator on exactly over type1 segments.
Schedule offline_optimal(const Trace& trace, const SystemParams& params);
std::vector<bool> offline_statuses(const DeltaSeries& series);

inline constexpr std::size_t kEnumerationLimit = 20;

/// Exhaustive minimum over all 2^T status sequences. Ties resolve to the
/// numerically smallest sequence (slot 1 as the least significant bit).
/// Throws HorizonTooLarge when T > kEnumerationLimit.
Schedule brute_force_optimal(const Trace& trace, const SystemParams& params,
                             Execution exec = Execution::parallel);

struct DpPlan {
  std::vector<bool> y;
  double cost = 0.0;
};

/// Exact dynamic program over y in {0, 1} for the slots in `slots`, starting
/// from status `y_prev` and charging beta on every 0 -> 1 transition. No
/// terminal value. Ties prefer turning (or staying) on.
DpPlan dp_optimal(std::span<const InputSlot> slots, const SystemParams& params, bool y_prev = false);

/// dp_optimal over the whole trace from y(0) = 0, as a Schedule.
Schedule dp_optimal_schedule(const Trace& trace, const SystemParams& params);

}  // namespace gensched

#endif
