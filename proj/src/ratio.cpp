#include "gensched/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gensched/lower_bound.hpp"

namespace gensched {

double alpha(const SystemParams& p) { return (p.c_o + p.c_m / p.L) / p.peak_external_price(); }

double max_delta(const SystemParams& p) { return p.L * (p.peak_external_price() - p.c_o) - p.c_m; }

double f_chaselk(const SystemParams& p, double w) {
  const double a = alpha(p);
  if (w <= 0.0 || a >= 1.0 || p.c_m <= 0.0) return std::min(a, 1.0);
  const double Lco = p.L * p.c_o;
  const double lag = p.beta * (Lco + p.c_m / (1.0 - a)) / (w * p.c_m * (Lco + p.c_m));
  return a + (1.0 - a) / (1.0 + lag);
}

double r_on(double lambda, double w, const SystemParams& p) {
  const double P = p.peak_external_price();
  const double prefactor = 1.0 - (p.L * p.c_o + p.c_m) / (p.L * P);
  if (prefactor <= 0.0) return 1.0;
  const double shrink = 1.0 - p.c_m / (p.L * (P - p.c_o));
  const double price_ratio = p.c_o / P;

  auto term = [&](double q) {
    return (2.0 * p.beta - q) /
           (p.beta + (2.0 * w * p.c_m - q + price_ratio * lambda) * shrink);
  };
  const double best = std::max(term(0.0), term(w * p.c_m));
  if (p.beta == 0.0) return 1.0;
  return 1.0 + prefactor * best;
}

double r_off(double lambda, double w, const SystemParams& p) {
  if (lambda == 0.0) return 1.0;
  if (w <= 0.0 && lambda > 0.0) throw DegenerateWindow("r_off undefined for w = 0, lambda > 0");
  const double wcm = w * p.c_m;
  return (wcm + lambda) / (wcm + (p.c_o / p.peak_external_price()) * lambda);
}

ThresholdResult optimal_threshold(double w, const SystemParams& p) {
  ThresholdResult res;
  const double cap = std::max(0.0, max_delta(p) * w);
  double hi = std::min(p.beta, cap);
  auto feasible = [&](double lam) { return r_on(lam, w, p) >= r_off(lam, w, p); };

  double lam = 0.0;
  if (hi <= 0.0) {
    lam = 0.0;
  } else if (feasible(hi)) {
    lam = hi;
  } else {
    double lo = 0.0;
    const double tol = 1e-9 * p.beta;
    while (hi - lo > tol && res.iterations < 200) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
      ++res.iterations;
    }
    lam = lo;
  }
  res.lambda_star = lam;
  res.r_on_at = r_on(lam, w, p);
  res.r_off_at = r_off(lam, w, p);
  res.cr = res.r_on_at;
  return res;
}

double g_chasepp(double w, double lambda, const SystemParams& p) {
  const double a = alpha(p);
  if (a >= 1.0 || p.beta == 0.0) return 1.0;
  const double Lco = p.L * p.c_o;
  const double denom_scale = Lco + p.c_m / (1.0 - a);
  auto term = [&](double q) {
    return (2.0 * p.beta - q) /
           (p.beta + ((2.0 * w * p.c_m - q) * (Lco + p.c_m) + a * Lco * lambda) / denom_scale);
  };
  const double best = std::max(term(0.0), term(w * p.c_m));
  return a + (1.0 - a) * (1.0 - 0.5 * best);
}

double g_chasepp(double w, const SystemParams& p) {
  return g_chasepp(w, optimal_threshold(w, p).lambda_star, p);
}

double cr_chase(const SystemParams& p) { return 3.0 - 2.0 * alpha(p); }

double cr_chaselk(double w, const SystemParams& p) { return 3.0 - 2.0 * f_chaselk(p, w); }

double cr_chaselk_plus(double w, const SystemParams& p) {
  return std::min(cr_chaselk(w, p), 1.0 / alpha(p));
}

double cr_chasepp(double w, const SystemParams& p) {
  const auto th = optimal_threshold(w, p);
  const double via_g = 3.0 - 2.0 * g_chasepp(w, th.lambda_star, p);
  if (std::abs(via_g - th.cr) > 1e-6 * std::abs(th.cr)) {
    throw DomainError("cr_chasepp: g-form and r_on-form disagree");
  }
  return via_g;
}

double cr_chasepp_plus(double w, const SystemParams& p) {
  return std::min(cr_chasepp(w, p), 1.0 / alpha(p));
}

RatioReport ratio_report(double w, const SystemParams& p, bool with_lower_bound, Execution exec) {
  RatioReport r;
  r.w = w;
  r.alpha = alpha(p);
  r.inv_alpha = 1.0 / r.alpha;
  r.r_off_limit = p.c_o > 0.0 ? p.peak_external_price() / p.c_o
                              : std::numeric_limits<double>::infinity();
  r.p_max = p.p_max;
  r.lambda_star = optimal_threshold(w, p).lambda_star;
  r.cr_chase = cr_chase(p);
  r.cr_chaselk = cr_chaselk(w, p);
  r.cr_chaselk_plus = cr_chaselk_plus(w, p);
  r.cr_chasepp = cr_chasepp(w, p);
  r.cr_chasepp_plus = cr_chasepp_plus(w, p);
  if (with_lower_bound) {
    LowerBoundOptions opt;
    opt.exec = exec;
    const auto lb = lower_bound(w, p, opt);
    r.cr_lower = lb.cr_lower;
    if (w > 0.0) {
      r.delta1_star = lb.delta1_star;
      r.delta2_star = lb.delta2_star;
    }
  }
  return r;
}

InputSlot realize_delta(double d, const SystemParams& p) {
  const double lo = -p.c_m;
  const double hi = max_delta(p);
  const double tol = 1e-9 * std::max({1.0, std::abs(lo), std::abs(hi)});
  if (d < lo - tol || d > hi + tol) throw RangeError("differential cost not realizable");
  const double margin = p.peak_external_price() - p.c_o;
  const double a = margin > 0.0 ? std::clamp((d + p.c_m) / margin, 0.0, p.L) : 0.0;
  return {a, p.eta * a, p.p_max};
}

Trace realize_delta_trace(const std::vector<double>& deltas, const SystemParams& p) {
  Trace t;
  t.slots.reserve(deltas.size());
  for (double d : deltas) t.slots.push_back(realize_delta(d, p));
  return t;
}

}  // namespace gensched
