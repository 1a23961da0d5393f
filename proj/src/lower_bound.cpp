#include "gensched/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "gensched/ratio.hpp"

namespace gensched {

CounterInput::CounterInput(double d1, double d2, std::size_t window, double b)
    : delta1(d1), delta2(d2), beta(b), w(window) {
  if (!(d1 > 0.0) || d2 < 0.0) throw DomainError("counter input needs delta1 > 0, delta2 >= 0");
  const double room = (beta - static_cast<double>(w) * delta2) / delta1;
  n1 = room > 0.0 ? static_cast<std::size_t>(std::floor(room * (1.0 + 1e-12))) : 0;
}

double CounterInput::q(std::size_t t) const noexcept {
  if (t <= n1) return static_cast<double>(t) * delta1;
  return std::min(beta, static_cast<double>(n1) * delta1 + static_cast<double>(t - n1) * delta2);
}

std::vector<double> CounterInput::deltas(std::size_t horizon) const {
  std::vector<double> out(horizon);
  for (std::size_t t = 1; t <= horizon; ++t) out[t - 1] = t <= n1 ? delta1 : delta2;
  return out;
}

namespace {

double pr_unchecked(const CounterInput& in, std::size_t s, const SystemParams& p) {
  const double P = p.peak_external_price();
  const double K = P / (P - p.c_o);
  const double wd = static_cast<double>(in.w);
  const double qs = in.q(s);
  const double qsw = in.q(s + in.w);
  const double num = p.beta - (qsw - qs) + std::max(qsw - wd * p.c_m, 0.0);
  const double den = K * ((static_cast<double>(s) + wd) * p.c_m + qsw);
  return 1.0 + num / den;
}

}  // namespace

double pr_s(std::size_t s, double delta1, double delta2, std::size_t w, const SystemParams& p) {
  const CounterInput in(delta1, delta2, w, p.beta);
  if (s < 1 || s > in.n1) throw DomainError("pr_s: s outside [1, (beta - w*delta2)/delta1]");
  return pr_unchecked(in, s, p);
}

double r_on_lower(double delta1, double delta2, std::size_t w, const SystemParams& p) {
  const CounterInput in(delta1, delta2, w, p.beta);
  if (in.n1 == 0) return std::numeric_limits<double>::infinity();
  const std::size_t n1 = in.n1;
  const double wcm = static_cast<double>(w) * p.c_m;

  // Largest s with q(s + w) <= w*c_m; 0 when none.
  std::size_t lo = 0, hi = n1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (in.q(mid + w) <= wcm) lo = mid;
    else hi = mid - 1;
  }
  const std::size_t sk = lo;

  double best = std::numeric_limits<double>::infinity();
  auto visit = [&](std::size_t s) {
    if (s >= 1 && s <= n1) best = std::min(best, pr_unchecked(in, s, p));
  };
  visit(1);
  visit(n1);
  visit(sk);
  visit(sk + 1);
  if (n1 > w) {
    visit(n1 - w);
    visit(n1 - w + 1);
  }
  return best;
}

double r_on_lower_exhaustive(double delta1, double delta2, std::size_t w,
                             const SystemParams& p) {
  const CounterInput in(delta1, delta2, w, p.beta);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 1; s <= in.n1; ++s) best = std::min(best, pr_unchecked(in, s, p));
  return best;
}

double r_off_lower(double delta2, const SystemParams& p) {
  if (p.c_m + delta2 == 0.0) return 1.0;
  return (p.c_m + delta2) / (p.c_m + (p.c_o / p.peak_external_price()) * delta2);
}

namespace {

struct InnerBest {
  double delta1 = 0.0;
  double r_on = 1.0;
};

// max over delta1 of r_on_lower for fixed delta2: grid scan, then
// golden-section inside the bracket around the best grid point.
InnerBest best_delta1(double delta2, std::size_t w, double dmax, const SystemParams& p,
                      std::size_t grid) {
  const double wd = static_cast<double>(w);
  const double hi = std::min((p.beta - wd * delta2) / wd, dmax);
  const double lo = std::min(hi, std::max(delta2, 1e-12 * p.beta));
  if (!(hi > 0.0)) return {0.0, std::numeric_limits<double>::infinity()};

  auto f = [&](double d1) { return r_on_lower(d1, delta2, w, p); };
  const std::size_t n = std::max<std::size_t>(grid, 3);
  std::size_t arg = 0;
  double fbest = -std::numeric_limits<double>::infinity();
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double v = f(xs[i]);
    if (v > fbest) {
      fbest = v;
      arg = i;
    }
  }
  double a = xs[arg == 0 ? 0 : arg - 1];
  double b = xs[std::min(arg + 1, n - 1)];
  InnerBest out{xs[arg], fbest};

  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-6 * std::max(std::abs(b), 1e-300); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  for (double x : {c, d}) {
    const double v = f(x);
    if (v > out.r_on) out = {x, v};
  }
  return out;
}

}  // namespace

LowerBoundResult lower_bound_discrete(std::size_t w, const SystemParams& p,
                                      const LowerBoundOptions& opt) {
  if (w == 0) throw DomainError("lower_bound_discrete needs w >= 1");
  LowerBoundResult res;
  const double dmax = max_delta(p);
  if (!(dmax > 0.0) || p.beta <= 0.0) return res;

  const double wd = static_cast<double>(w);
  const double upper = std::min(p.beta / (2.0 * wd), dmax);
  const std::size_t n = std::max<std::size_t>(opt.delta2_grid, 2);

  std::vector<InnerBest> inner(n + 1);
  std::vector<double> gap(n + 1);
  auto eval = [&](std::size_t i) {
    const double d2 = upper * static_cast<double>(i) / static_cast<double>(n);
    inner[i] = best_delta1(d2, w, dmax, p, opt.delta1_grid);
    gap[i] = inner[i].r_on - r_off_lower(d2, p);
  };
  const auto count = static_cast<std::int64_t>(n + 1);
  if (opt.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) eval(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) eval(static_cast<std::size_t>(i));
  }

  std::size_t cross = n + 1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (gap[i] < 0.0) {
      cross = i;
      break;
    }
  }

  double d2 = upper;
  InnerBest at = inner[n];
  if (cross == 0) {
    d2 = 0.0;
    at = inner[0];
  } else if (cross <= n) {
    double a = upper * static_cast<double>(cross - 1) / static_cast<double>(n);
    double b = upper * static_cast<double>(cross) / static_cast<double>(n);
    at = inner[cross - 1];
    for (int it = 0; it < 100 && b - a > 1e-12 * std::max(upper, 1e-300); ++it) {
      const double mid = 0.5 * (a + b);
      const auto m = best_delta1(mid, w, dmax, p, opt.delta1_grid);
      if (m.r_on - r_off_lower(mid, p) >= 0.0) {
        a = mid;
        at = m;
      } else {
        b = mid;
      }
    }
    d2 = a;
  }
  res.delta1_star = at.delta1;
  res.delta2_star = d2;
  res.r_on_at = at.r_on;
  res.cr_lower = r_off_lower(d2, p);
  return res;
}

LowerBoundResult lower_bound(double w, const SystemParams& p, const LowerBoundOptions& opt) {
  if (w < 0.0) throw DomainError("lower_bound: w must be >= 0");
  if (w == 0.0) {
    LowerBoundResult r;
    r.cr_lower = 3.0 - 2.0 * alpha(p);
    r.r_on_at = r.cr_lower;
    return r;
  }

  auto at_scale = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    SystemParams s = p;
    s.c_m /= kd;
    s.L /= kd;
    const auto W = static_cast<std::size_t>(std::llround(w * kd));
    auto r = lower_bound_discrete(std::max<std::size_t>(W, 1), s, opt);
    r.delta1_star *= kd;
    r.delta2_star *= kd;
    r.subslots = k;
    return r;
  };

  std::size_t k = 1;
  while (std::llround(w * static_cast<double>(k)) < 1) k *= 2;
  auto current = at_scale(k);
  if (!opt.refine) return current;

  current.converged = false;
  for (int i = 0; i < opt.max_doublings; ++i) {
    k *= 2;
    auto next = at_scale(k);
    const bool settled = std::abs(next.cr_lower - current.cr_lower) < opt.tolerance;
    current = next;
    if (settled) {
      current.converged = true;
      break;
    }
  }
  return current;
}

}  // namespace gensched
