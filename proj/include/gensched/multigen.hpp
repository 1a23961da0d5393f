#ifndef GENSCHED_MULTIGEN_HPP
#define GENSCHED_MULTIGEN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gensched/execution.hpp"
#include "gensched/model.hpp"
#include "gensched/noise.hpp"
#include "gensched/online.hpp"

namespace gensched {

/// Generators sharing every economic parameter except capacity, ordered by
/// nonincreasing capacity (stable in input order).
class GeneratorFleet {
public:
  /// Throws EmptyFleet for no capacities, AssumptionViolated for an invalid unit.
  static GeneratorFleet make(const SystemParams& shared, const std::vector<double>& capacities);

  std::size_t size() const noexcept { return units_.size(); }
  const SystemParams& unit(std::size_t n) const { return units_.at(n); }
  const std::vector<SystemParams>& units() const noexcept { return units_; }
  double total_capacity() const noexcept;

private:
  std::vector<SystemParams> units_;
};

/// Per-unit demand slices plus whatever is left above the last unit.
struct LayeredTrace {
  std::vector<Trace> layers;
  Trace top;
};

/// Slice of one slot assigned to layer `n`.
InputSlot layer_slot(const InputSlot& slot, const GeneratorFleet& fleet, std::size_t n);
InputSlot top_slot(const InputSlot& slot, const GeneratorFleet& fleet);

/// Bottom-up slicing: layer n gets min(L_n, [a - sum_{k<n} L_k]+) of
/// electricity and the same rule with caps eta*L_n for heat.
LayeredTrace layer_demand(const Trace& trace, const GeneratorFleet& fleet);

struct FleetSchedule {
  std::vector<Schedule> layers;
  double top_cost = 0.0;
  double total_cost = 0.0;
  std::size_t startup_count = 0;
};

/// Schedules every layer independently. `algo` empty means offline optimum.
/// Forecast noise is drawn on the aggregate demand and then sliced.
FleetSchedule schedule_fleet(const Trace& trace, const GeneratorFleet& fleet,
                             std::optional<Algorithm> algo, std::size_t w,
                             const NoiseModel& noise = {}, Execution exec = Execution::parallel);

/// Cost of buying all aggregate demand externally.
double fleet_external_cost(const Trace& trace, const GeneratorFleet& fleet);

/// Largest per-unit CHASEpp bound, attained by the largest unit.
double cr_fleet(const GeneratorFleet& fleet, double w);

}  // namespace gensched

#endif
