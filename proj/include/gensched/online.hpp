#ifndef GENSCHED_ONLINE_HPP
#define GENSCHED_ONLINE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gensched/model.hpp"
#include "gensched/noise.hpp"
#include "gensched/segments.hpp"

namespace gensched {

enum class Algorithm { chase, chaselk, chaselk_plus, chasepp, chasepp_plus, rhc };

std::string_view to_string(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept;

/// Everything an online policy remembers between slots. `t` is the 0-based
/// index of the next slot to decide; `capped_prefix` is Delta(t-1) computed
/// from realized inputs.
struct PolicyState {
  bool y_prev = false;
  std::size_t t = 0;
  double capped_prefix = 0.0;

  static PolicyState initial(const SystemParams& params);

  /// Records the decision for the current slot and advances Delta with the
  /// realized input.
  void commit(bool y, const InputSlot& realized, const SystemParams& params);
};

/// Inputs for slots t..t+w, truncated at the horizon. slots[0] is exact.
struct PredictionWindow {
  std::vector<InputSlot> slots;
  std::size_t w = 0;
};

/// Forward pass of Delta over a window, starting from the state's prefix.
struct WindowScan {
  std::vector<double> capped;      // capped[i] = Delta(t + i)
  std::vector<Boundary> touch;     // boundary classification of capped[i]
  std::vector<double> cumulative;  // sum of delta(t..t+i), uncapped
  std::optional<std::size_t> first_hit;    // first i touching either boundary
  std::optional<std::size_t> first_lower;  // first i touching -beta
};

WindowScan scan_window(const PolicyState& state, const PredictionWindow& window,
                       const SystemParams& params);

bool chase_step(const PolicyState& state, const InputSlot& slot, const SystemParams& params);
bool chaselk_step(const PolicyState& state, const PredictionWindow& window,
                  const SystemParams& params);
bool chasepp_step(const PolicyState& state, const PredictionWindow& window, double lambda,
                  const SystemParams& params);

/// All-external dispatch when 1/alpha < cr_chasepp, else the CHASEpp decision
/// with threshold `lambda`, dispatched on the current slot.
DispatchSlot chasepp_plus_step(const PolicyState& state, const PredictionWindow& window,
                               const SystemParams& params, double cr_chasepp, double lambda);

/// First status of the exact window plan from y_prev, zero terminal value.
bool rhc_step(const PolicyState& state, const PredictionWindow& window,
              const SystemParams& params);

/// A configured online policy: algorithm, window and any precomputed
/// threshold or fallback.
class Policy {
public:
  /// Uses the optimal threshold and closed-form ratios for `params`.
  static Policy make(Algorithm algo, std::size_t w, const SystemParams& params);

  /// CHASEpp with an explicit threshold (no fallback).
  static Policy chasepp(std::size_t w, double lambda, const SystemParams& params);

  Algorithm algorithm() const noexcept { return algo_; }
  std::size_t window() const noexcept { return w_; }
  double lambda() const noexcept { return lambda_; }
  bool all_external() const noexcept { return all_external_; }
  const SystemParams& params() const noexcept { return params_; }

  bool decide(const PolicyState& state, const PredictionWindow& window) const;

private:
  Policy(Algorithm algo, std::size_t w, const SystemParams& params)
      : algo_(algo), w_(w), params_(params) {}

  Algorithm algo_;
  std::size_t w_;
  SystemParams params_;
  double lambda_ = 0.0;
  bool all_external_ = false;
};

/// Window for slot `t` (0-based): slot t exact, later slots perturbed.
PredictionWindow noisy_window(const Trace& trace, std::size_t t, std::size_t w,
                              const NoiseModel& noise);

using WindowSource = std::function<PredictionWindow(std::size_t t)>;

/// Steps through `realized`, asking `source` for each window. Cost and Delta
/// always use realized inputs.
Schedule simulate(const Policy& policy, const Trace& realized, const WindowSource& source);

Schedule run_online(const Policy& policy, const Trace& trace, const NoiseModel& noise = {});
Schedule run_online(Algorithm algo, const Trace& trace, std::size_t w, const NoiseModel& noise,
                    const SystemParams& params);

}  // namespace gensched

#endif
