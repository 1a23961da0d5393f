#include "gensched/multigen.hpp"

#include <algorithm>
#include <cstdint>

#include "gensched/ratio.hpp"
#include "gensched/segments.hpp"

namespace gensched {

GeneratorFleet GeneratorFleet::make(const SystemParams& shared,
                                    const std::vector<double>& capacities) {
  if (capacities.empty()) throw EmptyFleet();
  std::vector<double> caps = capacities;
  std::stable_sort(caps.begin(), caps.end(), std::greater<>());
  GeneratorFleet fleet;
  for (double L : caps) {
    SystemParams u = shared;
    u.L = L;
    validate_params(u);
    fleet.units_.push_back(u);
  }
  return fleet;
}

double GeneratorFleet::total_capacity() const noexcept {
  double sum = 0.0;
  for (const auto& u : units_) sum += u.L;
  return sum;
}

namespace {

double slice(double demand, double below, double cap) {
  return std::min(cap, std::max(0.0, demand - below));
}

}  // namespace

InputSlot layer_slot(const InputSlot& slot, const GeneratorFleet& fleet, std::size_t n) {
  double below = 0.0;
  for (std::size_t k = 0; k < n; ++k) below += fleet.unit(k).L;
  const auto& u = fleet.unit(n);
  return {slice(slot.a, below, u.L), slice(slot.h, u.eta * below, u.eta * u.L), slot.p};
}

InputSlot top_slot(const InputSlot& slot, const GeneratorFleet& fleet) {
  const double cap = fleet.total_capacity();
  const double eta = fleet.unit(0).eta;
  return {std::max(0.0, slot.a - cap), std::max(0.0, slot.h - eta * cap), slot.p};
}

LayeredTrace layer_demand(const Trace& trace, const GeneratorFleet& fleet) {
  LayeredTrace out;
  out.layers.resize(fleet.size());
  for (auto& layer : out.layers) {
    layer.slot_hours = trace.slot_hours;
    layer.slots.reserve(trace.size());
  }
  out.top.slot_hours = trace.slot_hours;
  out.top.slots.reserve(trace.size());
  for (const auto& slot : trace.slots) {
    for (std::size_t n = 0; n < fleet.size(); ++n) {
      out.layers[n].slots.push_back(layer_slot(slot, fleet, n));
    }
    out.top.slots.push_back(top_slot(slot, fleet));
  }
  return out;
}

FleetSchedule schedule_fleet(const Trace& trace, const GeneratorFleet& fleet,
                             std::optional<Algorithm> algo, std::size_t w,
                             const NoiseModel& noise, Execution exec) {
  const LayeredTrace layered = layer_demand(trace, fleet);
  const NoiseModel resolved = noise.is_exact() ? noise : noise.resolved(trace);

  FleetSchedule out;
  out.layers.resize(fleet.size());
  auto run_layer = [&](std::size_t n) {
    const auto& unit = fleet.unit(n);
    if (!algo) {
      out.layers[n] = offline_optimal(layered.layers[n], unit);
      return;
    }
    const Policy policy = Policy::make(*algo, w, unit);
    out.layers[n] = simulate(policy, layered.layers[n], [&](std::size_t t) {
      PredictionWindow win = noisy_window(trace, t, w, resolved);
      for (auto& s : win.slots) s = layer_slot(s, fleet, n);
      return win;
    });
  };

  const auto count = static_cast<std::int64_t>(fleet.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t n = 0; n < count; ++n) run_layer(static_cast<std::size_t>(n));
  } else {
    for (std::int64_t n = 0; n < count; ++n) run_layer(static_cast<std::size_t>(n));
  }

  for (const auto& s : layered.top.slots) out.top_cost += s.p * s.a + fleet.unit(0).c_g * s.h;
  out.total_cost = out.top_cost;
  for (const auto& layer : out.layers) {
    out.total_cost += layer.total_cost;
    out.startup_count += layer.startup_count;
  }
  return out;
}

double fleet_external_cost(const Trace& trace, const GeneratorFleet& fleet) {
  const double c_g = fleet.unit(0).c_g;
  double sum = 0.0;
  for (const auto& s : trace.slots) sum += s.p * s.a + c_g * s.h;
  return sum;
}

double cr_fleet(const GeneratorFleet& fleet, double w) {
  if (fleet.size() == 0) throw EmptyFleet();
  double worst = 0.0;
  for (const auto& u : fleet.units()) worst = std::max(worst, cr_chasepp(w, u));
  return worst;
}

}  // namespace gensched
