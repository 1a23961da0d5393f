// Serial reference vs OpenMP kernels: wall time and result agreement.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include <omp.h>

#include "gensched/experiment.hpp"
#include "gensched/lower_bound.hpp"
#include "gensched/segments.hpp"

using namespace gensched;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  return d.count() / reps;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial_s", "parallel_s", "speedup");

  SystemParams p = default_economics();
  p.L = 3000.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> a(0.0, p.L), pr(p.p_min, p.p_max);
  Trace trace;
  for (int t = 0; t < 20; ++t) {
    const double av = a(rng);
    trace.slots.push_back({av, p.eta * av, pr(rng)});
  }
  double cs = 0, cp = 0;
  const double ts = seconds([&] { cs = brute_force_optimal(trace, p, Execution::serial).total_cost; }, 2);
  const double tp = seconds([&] { cp = brute_force_optimal(trace, p, Execution::parallel).total_cost; }, 2);
  row("enumeration T=20", ts, tp, cs == cp);

  LowerBoundOptions so, po;
  so.exec = Execution::serial;
  po.exec = Execution::parallel;
  LowerBoundResult ls, lp;
  const double bs = seconds([&] { ls = lower_bound_discrete(6, p, so); }, 3);
  const double bp = seconds([&] { lp = lower_bound_discrete(6, p, po); }, 3);
  row("lower bound w=6", bs, bp, ls.cr_lower == lp.cr_lower);

  ExperimentConfig cfg;
  cfg.windows = {0, 1, 2, 3, 5, 10, 15};
  cfg.lower_bound = false;
  Report rs, rp;
  const double es = seconds([&] { rs = run_experiment(cfg, Execution::serial); }, 1);
  const double ep = seconds([&] { rp = run_experiment(cfg, Execution::parallel); }, 1);
  bool same = rs.runs.size() == rp.runs.size();
  for (std::size_t i = 0; same && i < rs.runs.size(); ++i) same = rs.runs[i].cost == rp.runs[i].cost;
  row("experiment batch", es, ep, same);
  return 0;
}
