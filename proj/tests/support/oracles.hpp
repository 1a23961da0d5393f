// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the library's dispatch, delta or optimizer code.
#ifndef GENSCHED_TESTS_ORACLES_HPP
#define GENSCHED_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "gensched/model.hpp"

namespace oracle {

using gensched::InputSlot;
using gensched::SystemParams;
using gensched::Trace;

// Minimum of p*v + c_g*s + c_o*u + c_m*y over u in [0, min(a, cap)] by
// evaluating every breakpoint of the piecewise-linear objective.
inline double slot_cost(const InputSlot& s, double cap, double running, const SystemParams& p) {
  const double hi = std::min(s.a, cap);
  std::vector<double> cands = {0.0, hi};
  if (p.eta > 0.0) cands.push_back(std::clamp(s.h / p.eta, 0.0, hi));
  double best = std::numeric_limits<double>::infinity();
  for (double u : cands) {
    const double v = std::max(s.a - u, 0.0);
    const double g = std::max(s.h - p.eta * u, 0.0);
    best = std::min(best, s.p * v + p.c_g * g + p.c_o * u);
  }
  return best + running;
}

inline double status_cost(const InputSlot& s, bool y, const SystemParams& p) {
  return slot_cost(s, y ? p.L : 0.0, y ? p.c_m : 0.0, p);
}

inline double delta(const InputSlot& s, const SystemParams& p) {
  return status_cost(s, false, p) - status_cost(s, true, p);
}

inline double sequence_cost(const std::vector<bool>& y, const Trace& t, const SystemParams& p) {
  double cost = 0.0;
  bool prev = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    cost += status_cost(t.slots[i], static_cast<bool>(y[i]), p);
    if (y[i] && !prev) cost += p.beta;
    prev = y[i];
  }
  return cost;
}

// Exhaustive minimum over all 2^T status sequences.
inline double enumerate_optimum(const Trace& t, const SystemParams& p) {
  const std::size_t T = t.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << T); ++m) {
    std::vector<bool> y(T);
    for (std::size_t i = 0; i < T; ++i) y[i] = (m >> i) & 1U;
    best = std::min(best, sequence_cost(y, t, p));
  }
  return best;
}

// Exhaustive joint optimum for a two-unit fleet: 4^T status combinations,
// each slot dispatched with the pooled capacity of the running units.
inline double joint_fleet_optimum(const Trace& t, const SystemParams& shared, double L1,
                                  double L2) {
  const std::size_t T = t.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << T); ++m1) {
    for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << T); ++m2) {
      double cost = 0.0;
      bool p1 = false, p2 = false;
      for (std::size_t i = 0; i < T; ++i) {
        const bool y1 = (m1 >> i) & 1U, y2 = (m2 >> i) & 1U;
        const double cap = (y1 ? L1 : 0.0) + (y2 ? L2 : 0.0);
        const double run = shared.c_m * ((y1 ? 1.0 : 0.0) + (y2 ? 1.0 : 0.0));
        cost += slot_cost(t.slots[i], cap, run, shared);
        if (y1 && !p1) cost += shared.beta;
        if (y2 && !p2) cost += shared.beta;
        p1 = y1;
        p2 = y2;
      }
      best = std::min(best, cost);
    }
  }
  return best;
}

// Parameters satisfying every sign constraint and both economic assumptions.
inline SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  SystemParams p;
  p.beta = u01(rng) < 0.05 ? 0.0 : 5.0 + 200.0 * u01(rng);
  p.c_m = u01(rng) < 0.05 ? 0.0 : 20.0 * u01(rng);
  p.c_o = 0.05 + u01(rng);
  p.L = 5.0 + 100.0 * u01(rng);
  p.eta = u01(rng) < 0.1 ? 0.0 : 2.0 * u01(rng);
  p.c_g = p.eta > 0.0 ? u01(rng) * p.c_o / p.eta : u01(rng);
  p.p_min = u01(rng) * p.c_o;
  const double floor = p.c_o + p.c_m / p.L - p.eta * p.c_g;
  p.p_max = std::max(p.p_min, floor) + 0.05 + 1.5 * u01(rng);
  return p;
}

inline Trace random_trace(const SystemParams& p, std::size_t T, std::mt19937_64& rng,
                          double scale = 1.3) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Trace t;
  for (std::size_t i = 0; i < T; ++i) {
    const double a = u01(rng) < 0.15 ? 0.0 : scale * p.L * u01(rng);
    const double h = u01(rng) < 0.15 ? 0.0 : scale * (p.eta + 0.2) * p.L * u01(rng);
    t.slots.push_back({a, h, p.p_min + (p.p_max - p.p_min) * u01(rng)});
  }
  return t;
}

// Bursty trace: blocks of high or low demand so that startups matter.
inline Trace blocky_trace(const SystemParams& p, std::size_t T, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> len(1, 12);
  Trace t;
  bool high = u01(rng) < 0.5;
  while (t.size() < T) {
    const int n = len(rng);
    for (int i = 0; i < n && t.size() < T; ++i) {
      const double level = high ? 0.6 + 0.5 * u01(rng) : 0.2 * u01(rng);
      const double a = level * p.L;
      t.slots.push_back({a, p.eta * a * (0.5 + u01(rng)), p.p_min + (p.p_max - p.p_min) * u01(rng)});
    }
    high = !high;
  }
  return t;
}

}  // namespace oracle

#endif
