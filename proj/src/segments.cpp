#include "gensched/segments.hpp"

#include <array>
#include <cstdint>
#include <limits>

namespace gensched {

double delta(const InputSlot& slot, const SystemParams& params) {
  return slot_cost(slot, false, params) - slot_cost(slot, true, params);
}

double boundary_tolerance(const SystemParams& params) noexcept { return 1e-9 * params.beta; }

CappedStep advance(double prev, double d, const SystemParams& params) noexcept {
  const double beta = params.beta;
  if (beta <= 0.0) return {0.0, d > 0.0 ? Boundary::upper : Boundary::lower};

  const double tol = boundary_tolerance(params);
  const double raw = prev + d;
  if (raw >= -tol) return {0.0, Boundary::upper};
  if (raw <= -beta + tol) return {-beta, Boundary::lower};
  return {raw, Boundary::interior};
}

DeltaSeries capped_series(const Trace& trace, const SystemParams& params) {
  DeltaSeries s;
  s.beta = params.beta;
  const std::size_t T = trace.size();
  s.delta.resize(T);
  s.capped.resize(T + 1);
  s.touch.resize(T + 1);
  s.capped[0] = -params.beta;
  s.touch[0] = Boundary::lower;
  for (std::size_t t = 1; t <= T; ++t) {
    s.delta[t - 1] = delta(trace.slots[t - 1], params);
    const auto step = advance(s.capped[t - 1], s.delta[t - 1], params);
    s.capped[t] = step.value;
    s.touch[t] = step.touch;
  }
  return s;
}

double cumulative_cost(const DeltaSeries& series, std::size_t first, std::size_t last) {
  if (first == 0 || last > series.horizon()) {
    throw DomainError("cumulative_cost: range outside [1, T]");
  }
  double sum = 0.0;
  for (std::size_t t = first; t <= last; ++t) sum += series.delta[t - 1];
  return sum;
}

std::size_t Decomposition::count(SegmentKind kind) const noexcept {
  std::size_t n = 0;
  for (const auto& seg : segments) n += seg.kind == kind ? 1 : 0;
  return n;
}

namespace {

struct Dwell {
  std::size_t first;
  std::size_t last;
  Boundary side;
};

std::vector<Dwell> dwells(const DeltaSeries& series) {
  std::vector<Dwell> out;
  for (std::size_t t = 0; t < series.touch.size(); ++t) {
    const Boundary b = series.touch[t];
    if (b == Boundary::interior) continue;
    if (!out.empty() && out.back().side == b) {
      out.back().last = t;
    } else {
      out.push_back({t, t, b});
    }
  }
  return out;
}

}  // namespace

Decomposition decompose(const DeltaSeries& series) {
  Decomposition d;
  const std::size_t T = series.horizon();
  const auto groups = dwells(series);  // groups[0] always starts at index 0

  if (groups.front().last >= 1) {
    d.segments.push_back({1, groups.front().last, SegmentKind::type_start, std::nullopt});
  }
  for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
    d.critical_points.push_back(groups[g].last);
    const auto kind = groups[g].side == Boundary::lower ? SegmentKind::type1 : SegmentKind::type2;
    d.segments.push_back({groups[g].last + 1, groups[g + 1].last, kind, groups[g + 1].first});
  }
  if (groups.back().last < T) {
    d.segments.push_back({groups.back().last + 1, T, SegmentKind::type_end, std::nullopt});
  }
  d.final_boundary = groups.back().side;
  return d;
}

std::vector<bool> offline_statuses(const DeltaSeries& series) {
  std::vector<bool> y(series.horizon(), false);
  for (const auto& seg : decompose(series).segments) {
    if (seg.kind != SegmentKind::type1) continue;
    for (std::size_t t = seg.start; t <= seg.end; ++t) y[t - 1] = true;
  }
  return y;
}

Schedule offline_optimal(const Trace& trace, const SystemParams& params) {
  return total_cost(offline_statuses(capped_series(trace, params)), trace, params);
}

namespace {

struct Candidate {
  double cost = std::numeric_limits<double>::infinity();
  std::uint64_t mask = 0;

  bool better_than(const Candidate& o) const noexcept {
    return cost < o.cost || (cost == o.cost && mask < o.mask);
  }
};

double mask_cost(std::uint64_t mask, const std::vector<double>& off, const std::vector<double>& on,
                 double beta) {
  double cost = 0.0;
  bool prev = false;
  for (std::size_t t = 0; t < off.size(); ++t) {
    const bool y = (mask >> t) & 1U;
    cost += y ? on[t] : off[t];
    if (y && !prev) cost += beta;
    prev = y;
  }
  return cost;
}

}  // namespace

Schedule brute_force_optimal(const Trace& trace, const SystemParams& params, Execution exec) {
  const std::size_t T = trace.size();
  if (T > kEnumerationLimit) throw HorizonTooLarge(T, kEnumerationLimit);

  std::vector<double> off(T), on(T);
  for (std::size_t t = 0; t < T; ++t) {
    off[t] = slot_cost(trace.slots[t], false, params);
    on[t] = slot_cost(trace.slots[t], true, params);
  }
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << T);

  Candidate best;
  if (exec == Execution::serial) {
    for (std::int64_t m = 0; m < count; ++m) {
      const Candidate c{mask_cost(static_cast<std::uint64_t>(m), off, on, params.beta),
                        static_cast<std::uint64_t>(m)};
      if (c.better_than(best)) best = c;
    }
  } else {
#pragma omp parallel
    {
      Candidate local;
#pragma omp for schedule(static)
      for (std::int64_t m = 0; m < count; ++m) {
        const Candidate c{mask_cost(static_cast<std::uint64_t>(m), off, on, params.beta),
                          static_cast<std::uint64_t>(m)};
        if (c.better_than(local)) local = c;
      }
#pragma omp critical(gensched_enumeration)
      if (local.better_than(best)) best = local;
    }
  }

  std::vector<bool> y(T);
  for (std::size_t t = 0; t < T; ++t) y[t] = (best.mask >> t) & 1U;
  return total_cost(y, trace, params);
}

DpPlan dp_optimal(std::span<const InputSlot> slots, const SystemParams& params, bool y_prev) {
  const std::size_t n = slots.size();
  // value[t][s]: optimal cost of slots t..n-1 given status s at slot t-1.
  std::vector<std::array<double, 2>> value(n + 1, {0.0, 0.0});
  std::vector<std::array<double, 2>> run(n);
  for (std::size_t t = n; t-- > 0;) {
    run[t] = {slot_cost(slots[t], false, params), slot_cost(slots[t], true, params)};
    for (int s = 0; s < 2; ++s) {
      const double stay_off = run[t][0] + value[t + 1][0];
      const double go_on = run[t][1] + (s == 0 ? params.beta : 0.0) + value[t + 1][1];
      value[t][s] = std::min(stay_off, go_on);
    }
  }

  DpPlan plan;
  plan.y.resize(n);
  plan.cost = value[0][y_prev ? 1 : 0];
  bool prev = y_prev;
  for (std::size_t t = 0; t < n; ++t) {
    const double stay_off = run[t][0] + value[t + 1][0];
    const double go_on = run[t][1] + (prev ? 0.0 : params.beta) + value[t + 1][1];
    const bool y = go_on <= stay_off;
    plan.y[t] = y;
    prev = y;
  }
  return plan;
}

Schedule dp_optimal_schedule(const Trace& trace, const SystemParams& params) {
  return total_cost(dp_optimal(trace.slots, params, false).y, trace, params);
}

}  // namespace gensched
