#include "gensched/model.hpp"

#include <algorithm>
#include <cmath>

namespace gensched {

std::vector<bool> Schedule::statuses() const {
  std::vector<bool> y(dispatch.size());
  std::transform(dispatch.begin(), dispatch.end(), y.begin(),
                 [](const DispatchSlot& d) { return d.y; });
  return y;
}

std::optional<std::string> check_params(const SystemParams& p) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(finite(p.beta) && finite(p.c_m) && finite(p.c_o) && finite(p.L) && finite(p.eta) &&
        finite(p.c_g) && finite(p.p_min) && finite(p.p_max))) {
    return "all parameters finite";
  }
  if (p.beta < 0.0) return "beta >= 0";
  if (p.c_m < 0.0) return "c_m >= 0";
  if (p.c_o < 0.0) return "c_o >= 0";
  if (p.L <= 0.0) return "L > 0";
  if (p.eta < 0.0) return "eta >= 0";
  if (p.c_g < 0.0) return "c_g >= 0";
  if (p.p_min < 0.0) return "p_min >= 0";
  if (p.p_min > p.p_max) return "p_min <= p_max";
  if (p.c_o < p.eta * p.c_g) return "c_o >= eta*c_g";
  if (p.c_o + p.c_m / p.L > p.peak_external_price()) return "c_o + c_m/L <= p_max + eta*c_g";
  return std::nullopt;
}

void validate_params(const SystemParams& params) {
  if (auto failed = check_params(params)) throw AssumptionViolated(*failed);
}

void validate_slot(const InputSlot& slot, const SystemParams& params, std::size_t line) {
  if (!(slot.a >= 0.0) || !std::isfinite(slot.a)) {
    throw ValidationError("a", line, "electricity demand must be finite and >= 0");
  }
  if (!(slot.h >= 0.0) || !std::isfinite(slot.h)) {
    throw ValidationError("h", line, "heat demand must be finite and >= 0");
  }
  if (!(slot.p >= params.p_min && slot.p <= params.p_max)) {
    throw ValidationError("p", line, "price outside [p_min, p_max]");
  }
}

void validate_trace(const Trace& trace, const SystemParams& params) {
  for (std::size_t t = 0; t < trace.size(); ++t) validate_slot(trace.slots[t], params, t + 1);
}

DispatchSlot dispatch_given_status(const InputSlot& slot, bool y, const SystemParams& params) {
  const double cap = y ? params.L : 0.0;
  const double co = params.c_o;
  const double heat_credit = params.eta * params.c_g;

  double u = 0.0;
  if (slot.p + heat_credit <= co) {
    u = 0.0;
  } else if (slot.p < co && co < slot.p + heat_credit) {
    // Only reachable with eta > 0, so h / eta is defined.
    u = std::min({slot.h / params.eta, slot.a, cap});
  } else {
    u = std::min(slot.a, cap);
  }
  u = std::max(u, 0.0);

  DispatchSlot d;
  d.y = y;
  d.u = u;
  d.v = std::max(slot.a - u, 0.0);
  d.s = std::max(slot.h - params.eta * u, 0.0);
  return d;
}

double operating_cost(const InputSlot& slot, const DispatchSlot& d, const SystemParams& params) {
  return slot.p * d.v + params.c_g * d.s + params.c_o * d.u + (d.y ? params.c_m : 0.0);
}

double slot_cost(const InputSlot& slot, bool y, const SystemParams& params) {
  return operating_cost(slot, dispatch_given_status(slot, y, params), params);
}

Schedule total_cost(const std::vector<bool>& y, const Trace& trace, const SystemParams& params) {
  if (y.size() != trace.size()) throw LengthMismatch(trace.size(), y.size());
  Schedule out;
  out.dispatch.reserve(y.size());
  bool prev = out.y0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    const auto d = dispatch_given_status(trace.slots[t], y[t], params);
    out.total_cost += operating_cost(trace.slots[t], d, params);
    if (y[t] && !prev) {
      out.total_cost += params.beta;
      ++out.startup_count;
    }
    prev = y[t];
    out.dispatch.push_back(d);
  }
  return out;
}

double external_cost(const Trace& trace, const SystemParams& params) {
  double cost = 0.0;
  for (const auto& s : trace.slots) cost += s.p * s.a + params.c_g * s.h;
  return cost;
}

}  // namespace gensched
