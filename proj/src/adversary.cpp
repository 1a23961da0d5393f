#include "gensched/adversary.hpp"

namespace gensched {

Trace adversary_chase(const DecisionRule& decide, const SystemParams& params,
                      std::size_t horizon) {
  Trace trace;
  trace.slots.reserve(horizon);
  auto state = PolicyState::initial(params);
  for (std::size_t t = 0; t < horizon; ++t) {
    const InputSlot slot = state.y_prev ? InputSlot{0.0, 0.0, params.p_max}
                                        : InputSlot{params.L, params.eta * params.L, params.p_max};
    const bool y = decide(state, PredictionWindow{{slot}, 0});
    state.commit(y, slot, params);
    trace.slots.push_back(slot);
  }
  return trace;
}

Trace adversary_chase(const Policy& policy, const SystemParams& params, std::size_t horizon) {
  return adversary_chase(
      [&](const PolicyState& s, const PredictionWindow& w) { return policy.decide(s, w); }, params,
      horizon);
}

}  // namespace gensched
