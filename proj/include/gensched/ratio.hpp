#ifndef GENSCHED_RATIO_HPP
#define GENSCHED_RATIO_HPP

#include <cstddef>
#include <optional>

#include "gensched/execution.hpp"
#include "gensched/model.hpp"

namespace gensched {

// Closed-form competitive-ratio machinery for a single generator. Windows are
// measured in slots and may be fractional for continuous-limit analysis.

/// Price-discrepancy parameter (c_o + c_m/L) / (p_max + eta*c_g), in (0, 1]
/// for validated parameters.
double alpha(const SystemParams& params);

/// Largest single-slot differential cost, L(p_max + eta*c_g - c_o) - c_m.
double max_delta(const SystemParams& params);

/// f(alpha, w) of the lookahead CHASE bound 3 - 2f. f(alpha, 0) = alpha.
double f_chaselk(const SystemParams& params, double w);

/// Worst-case ratio when turning on too eagerly. Maximum over q in {0, w*c_m}.
double r_on(double lambda, double w, const SystemParams& params);

/// Worst-case ratio when staying off too long. r_off(0, 0) = 1; throws
/// DegenerateWindow for w = 0 and lambda > 0.
double r_off(double lambda, double w, const SystemParams& params);

struct ThresholdResult {
  double lambda_star = 0.0;
  double r_on_at = 1.0;
  double r_off_at = 1.0;
  double cr = 1.0;
  int iterations = 0;
};

/// Largest lambda in [0, min(beta, w*max_delta)] with r_on >= r_off, by
/// bisection to 1e-9*beta (at most 200 steps).
ThresholdResult optimal_threshold(double w, const SystemParams& params);

/// g(alpha, w) at the given threshold, written in terms of alpha.
double g_chasepp(double w, double lambda, const SystemParams& params);
double g_chasepp(double w, const SystemParams& params);

double cr_chase(const SystemParams& params);
double cr_chaselk(double w, const SystemParams& params);
double cr_chaselk_plus(double w, const SystemParams& params);

/// 3 - 2g(alpha, w) with the optimal threshold. Cross-checked against
/// r_on(lambda*) to 1e-6 relative; a mismatch throws DomainError.
double cr_chasepp(double w, const SystemParams& params);

/// min(cr_chasepp, 1/alpha).
double cr_chasepp_plus(double w, const SystemParams& params);

struct LowerBoundResult;

/// Closed-form bounds for one window size.
struct RatioReport {
  double w = 0.0;
  double alpha = 0.0;
  double inv_alpha = 0.0;
  double r_off_limit = 0.0;  // lambda -> infinity limit of r_off, (p_max + eta*c_g)/c_o
  double p_max = 0.0;
  double lambda_star = 0.0;
  double cr_chase = 0.0;
  double cr_chaselk = 0.0;
  double cr_chaselk_plus = 0.0;
  double cr_chasepp = 0.0;
  double cr_chasepp_plus = 0.0;
  std::optional<double> cr_lower;
  std::optional<double> delta1_star;
  std::optional<double> delta2_star;
};

RatioReport ratio_report(double w, const SystemParams& params, bool with_lower_bound,
                         Execution exec = Execution::parallel);

/// Maps an abstract differential cost back to a concrete slot at p = p_max:
/// a = (d + c_m)/(p_max + eta*c_g - c_o), h = eta*a. Throws RangeError
/// outside [-c_m, max_delta].
InputSlot realize_delta(double d, const SystemParams& params);
Trace realize_delta_trace(const std::vector<double>& deltas, const SystemParams& params);

}  // namespace gensched

#endif
