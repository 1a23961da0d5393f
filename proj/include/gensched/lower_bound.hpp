#ifndef GENSCHED_LOWER_BOUND_HPP
#define GENSCHED_LOWER_BOUND_HPP

#include <cstddef>
#include <vector>

#include "gensched/execution.hpp"
#include "gensched/model.hpp"

namespace gensched {

// Lower bound on the competitive ratio of any deterministic online algorithm
// with a w-slot window. The adversary feeds differential cost delta1 per slot
// while its counter stays below (beta - w*delta2)/delta1, then delta2.

/// Counter input evaluated as q(t) = Delta(t) + beta for t >= 0 (integer slots).
struct CounterInput {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double beta = 0.0;
  std::size_t w = 0;
  std::size_t n1 = 0;  // number of delta1 slots

  CounterInput(double delta1, double delta2, std::size_t w, double beta);

  double q(std::size_t t) const noexcept;

  /// delta(1..T) of the input, for simulation.
  std::vector<double> deltas(std::size_t horizon) const;
};

/// Performance ratio of turning on at slot s. Throws DomainError unless
/// 1 <= s <= (beta - w*delta2)/delta1.
double pr_s(std::size_t s, double delta1, double delta2, std::size_t w, const SystemParams& params);

/// min over valid s of pr_s, using only the endpoints of the pieces on which
/// pr_s is monotone.
double r_on_lower(double delta1, double delta2, std::size_t w, const SystemParams& params);

/// Same minimum by visiting every s. Reference for r_on_lower.
double r_on_lower_exhaustive(double delta1, double delta2, std::size_t w,
                             const SystemParams& params);

/// (c_m + delta2) / (c_m + (c_o/(p_max + eta*c_g)) * delta2); 1 when both c_m and delta2 are 0.
double r_off_lower(double delta2, const SystemParams& params);

struct LowerBoundOptions {
  bool refine = true;          // split slots until cr_lower settles
  double tolerance = 1e-4;     // settle threshold on cr_lower
  int max_doublings = 12;
  std::size_t delta2_grid = 1000;
  std::size_t delta1_grid = 64;
  Execution exec = Execution::parallel;
};

struct LowerBoundResult {
  double delta1_star = 0.0;  // per original slot
  double delta2_star = 0.0;  // per original slot
  double cr_lower = 1.0;
  double r_on_at = 1.0;
  std::size_t subslots = 1;  // slot refinement factor of the final estimate
  bool converged = true;
};

/// Single evaluation at integer window `w` without refinement.
LowerBoundResult lower_bound_discrete(std::size_t w, const SystemParams& params,
                                      const LowerBoundOptions& options = {});

/// Lower bound for a window of `w` original slots (fractional allowed). w = 0
/// returns 3 - 2*alpha.
LowerBoundResult lower_bound(double w, const SystemParams& params,
                             const LowerBoundOptions& options = {});

}  // namespace gensched

#endif
