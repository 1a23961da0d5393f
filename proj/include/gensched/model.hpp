#ifndef GENSCHED_MODEL_HPP
#define GENSCHED_MODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gensched/error.hpp"

namespace gensched {

/// Generator economics and market price bounds for one CHP unit.
///
/// Money is in dollars, power in kW, and rates are per slot. `c_m` is the
/// sunk running cost per slot while on; `c_o` is the marginal cost per kWh of
/// output; `eta` is heat recovered per unit of electricity generated.
struct SystemParams {
  double beta = 0.0;   // startup cost
  double c_m = 0.0;    // running cost per slot
  double c_o = 0.0;    // incremental cost per kWh
  double L = 1.0;      // capacity
  double eta = 0.0;    // heat recovery efficiency
  double c_g = 0.0;    // external heat price per kWh
  double p_min = 0.0;  // grid price lower bound
  double p_max = 0.0;  // grid price upper bound

  /// p_max + eta * c_g, the most expensive external energy bundle.
  double peak_external_price() const noexcept { return p_max + eta * c_g; }
};

/// One slot of joint input: net electricity demand, heat demand and spot price.
struct InputSlot {
  double a = 0.0;
  double h = 0.0;
  double p = 0.0;
};

struct Trace {
  std::vector<InputSlot> slots;
  double slot_hours = 1.0;

  std::size_t size() const noexcept { return slots.size(); }
  bool empty() const noexcept { return slots.empty(); }
};

struct DispatchSlot {
  bool y = false;
  double u = 0.0;  // generator output
  double v = 0.0;  // grid purchase
  double s = 0.0;  // gas heat
};

struct Schedule {
  std::vector<DispatchSlot> dispatch;
  bool y0 = false;
  double total_cost = 0.0;
  std::size_t startup_count = 0;

  std::vector<bool> statuses() const;
};

/// Returns the first violated constraint, or nothing when `params` is usable.
std::optional<std::string> check_params(const SystemParams& params);

/// Throws AssumptionViolated naming the first failed inequality.
void validate_params(const SystemParams& params);

/// Throws ValidationError when a slot is negative or its price leaves
/// [p_min, p_max]. `line` is reported in the error.
void validate_slot(const InputSlot& slot, const SystemParams& params, std::size_t line = 0);

void validate_trace(const Trace& trace, const SystemParams& params);

/// Cheapest (u, v, s) for a fixed on/off status.
DispatchSlot dispatch_given_status(const InputSlot& slot, bool y, const SystemParams& params);

/// Operating cost p*v + c_g*s + c_o*u + c_m*y of the optimal dispatch.
double slot_cost(const InputSlot& slot, bool y, const SystemParams& params);

/// Cost of a dispatched slot, without recomputing the dispatch.
double operating_cost(const InputSlot& slot, const DispatchSlot& d, const SystemParams& params);

/// Evaluates a full on/off sequence with y(0) = 0: per-slot operating cost
/// plus beta for each 0 -> 1 transition.
Schedule total_cost(const std::vector<bool>& y, const Trace& trace, const SystemParams& params);

/// Cost of serving every slot externally (generator never on).
double external_cost(const Trace& trace, const SystemParams& params);

}  // namespace gensched

#endif
