#include "gensched/online.hpp"

#include "gensched/ratio.hpp"

namespace gensched {

std::string_view to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::chase: return "chase";
    case Algorithm::chaselk: return "chaselk";
    case Algorithm::chaselk_plus: return "chaselk_plus";
    case Algorithm::chasepp: return "chasepp";
    case Algorithm::chasepp_plus: return "chasepp_plus";
    case Algorithm::rhc: return "rhc";
  }
  return "chase";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept {
  for (auto a : {Algorithm::chase, Algorithm::chaselk, Algorithm::chaselk_plus, Algorithm::chasepp,
                 Algorithm::chasepp_plus, Algorithm::rhc}) {
    if (text == to_string(a)) return a;
  }
  return std::nullopt;
}

PolicyState PolicyState::initial(const SystemParams& params) {
  return {false, 0, -params.beta};
}

void PolicyState::commit(bool y, const InputSlot& realized, const SystemParams& params) {
  capped_prefix = advance(capped_prefix, delta(realized, params), params).value;
  y_prev = y;
  ++t;
}

WindowScan scan_window(const PolicyState& state, const PredictionWindow& window,
                       const SystemParams& params) {
  WindowScan scan;
  const std::size_t n = window.slots.size();
  scan.capped.reserve(n);
  scan.touch.reserve(n);
  scan.cumulative.reserve(n);
  double prev = state.capped_prefix;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = delta(window.slots[i], params);
    const auto step = advance(prev, d, params);
    sum += d;
    scan.capped.push_back(step.value);
    scan.touch.push_back(step.touch);
    scan.cumulative.push_back(sum);
    if (step.touch != Boundary::interior && !scan.first_hit) scan.first_hit = i;
    if (step.touch == Boundary::lower && !scan.first_lower) scan.first_lower = i;
    prev = step.value;
  }
  return scan;
}

bool chase_step(const PolicyState& state, const InputSlot& slot, const SystemParams& params) {
  switch (advance(state.capped_prefix, delta(slot, params), params).touch) {
    case Boundary::upper: return true;
    case Boundary::lower: return false;
    case Boundary::interior: break;
  }
  return state.y_prev;
}

bool chaselk_step(const PolicyState& state, const PredictionWindow& window,
                  const SystemParams& params) {
  const auto scan = scan_window(state, window, params);
  if (!scan.first_hit) return state.y_prev;
  return scan.touch[*scan.first_hit] == Boundary::upper;
}

bool chasepp_step(const PolicyState& state, const PredictionWindow& window, double lambda,
                  const SystemParams& params) {
  const auto scan = scan_window(state, window, params);
  if (!scan.first_hit) return state.y_prev;
  if (scan.touch[*scan.first_hit] == Boundary::lower) return false;

  const double tol = boundary_tolerance(params);
  // With beta = 0 every slot sits on -beta, so tau2 is the current slot.
  if (params.beta == 0.0) return scan.cumulative.front() >= -tol;
  if (!scan.first_lower) {
    if (scan.cumulative.back() >= lambda - tol) return true;
  } else if (scan.cumulative[*scan.first_lower] >= -tol) {
    return true;
  }
  return state.y_prev;
}

DispatchSlot chasepp_plus_step(const PolicyState& state, const PredictionWindow& window,
                               const SystemParams& params, double cr_chasepp, double lambda) {
  const InputSlot& now = window.slots.front();
  if (1.0 / alpha(params) < cr_chasepp) return dispatch_given_status(now, false, params);
  return dispatch_given_status(now, chasepp_step(state, window, lambda, params), params);
}

bool rhc_step(const PolicyState& state, const PredictionWindow& window,
              const SystemParams& params) {
  return dp_optimal(window.slots, params, state.y_prev).y.front();
}

Policy Policy::make(Algorithm algo, std::size_t w, const SystemParams& params) {
  validate_params(params);
  Policy p(algo, w, params);
  const double wd = static_cast<double>(w);
  switch (algo) {
    case Algorithm::chasepp:
      p.lambda_ = optimal_threshold(wd, params).lambda_star;
      break;
    case Algorithm::chasepp_plus:
      p.lambda_ = optimal_threshold(wd, params).lambda_star;
      p.all_external_ = 1.0 / alpha(params) < cr_chasepp(wd, params);
      break;
    case Algorithm::chaselk_plus:
      p.all_external_ = 1.0 / alpha(params) < cr_chaselk(wd, params);
      break;
    default:
      break;
  }
  return p;
}

Policy Policy::chasepp(std::size_t w, double lambda, const SystemParams& params) {
  validate_params(params);
  Policy p(Algorithm::chasepp, w, params);
  p.lambda_ = lambda;
  return p;
}

bool Policy::decide(const PolicyState& state, const PredictionWindow& window) const {
  if (all_external_) return false;
  switch (algo_) {
    case Algorithm::chase: return chase_step(state, window.slots.front(), params_);
    case Algorithm::chaselk:
    case Algorithm::chaselk_plus: return chaselk_step(state, window, params_);
    case Algorithm::chasepp:
    case Algorithm::chasepp_plus: return chasepp_step(state, window, lambda_, params_);
    case Algorithm::rhc: return rhc_step(state, window, params_);
  }
  return false;
}

PredictionWindow noisy_window(const Trace& trace, std::size_t t, std::size_t w,
                              const NoiseModel& noise) {
  return {forecast_slots(trace, t, w, noise), w};
}

Schedule simulate(const Policy& policy, const Trace& realized, const WindowSource& source) {
  const SystemParams& params = policy.params();
  Schedule out;
  out.dispatch.reserve(realized.size());
  auto state = PolicyState::initial(params);
  for (std::size_t t = 0; t < realized.size(); ++t) {
    const PredictionWindow window = source(t);
    const bool y = policy.decide(state, window);
    const InputSlot& slot = realized.slots[t];
    const DispatchSlot d = dispatch_given_status(slot, y, params);
    out.total_cost += operating_cost(slot, d, params);
    if (y && !state.y_prev) {
      out.total_cost += params.beta;
      ++out.startup_count;
    }
    out.dispatch.push_back(d);
    state.commit(y, slot, params);
  }
  return out;
}

Schedule run_online(const Policy& policy, const Trace& trace, const NoiseModel& noise) {
  const NoiseModel n = noise.is_exact() ? noise : noise.resolved(trace);
  const std::size_t w = policy.window();
  return simulate(policy, trace,
                  [&](std::size_t t) { return noisy_window(trace, t, w, n); });
}

Schedule run_online(Algorithm algo, const Trace& trace, std::size_t w, const NoiseModel& noise,
                    const SystemParams& params) {
  return run_online(Policy::make(algo, w, params), trace, noise);
}

}  // namespace gensched
