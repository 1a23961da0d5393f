#ifndef GENSCHED_ADVERSARY_HPP
#define GENSCHED_ADVERSARY_HPP

#include <cstddef>
#include <functional>

#include "gensched/model.hpp"
#include "gensched/online.hpp"

namespace gensched {

/// Interactive worst case for CHASE-like policies: full demand (L, eta*L,
/// p_max) while the policy was off in the previous slot, nothing while it was
/// on. The adversary reveals one slot at a time, so the policy sees a window
/// holding only the current slot.
Trace adversary_chase(const Policy& policy, const SystemParams& params, std::size_t horizon);

using DecisionRule = std::function<bool(const PolicyState&, const PredictionWindow&)>;

/// Same construction against an arbitrary decision rule.
Trace adversary_chase(const DecisionRule& decide, const SystemParams& params, std::size_t horizon);

}  // namespace gensched

#endif
