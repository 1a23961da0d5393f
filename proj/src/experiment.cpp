#include "gensched/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gensched/adversary.hpp"
#include "gensched/trace_io.hpp"

namespace gensched {

std::string_view to_string(TraceKind kind) noexcept {
  switch (kind) {
    case TraceKind::file: return "file";
    case TraceKind::diurnal: return "diurnal";
    case TraceKind::random: return "random";
    case TraceKind::adversary: return "adversary";
    case TraceKind::fig11a: return "fig11a";
    case TraceKind::fig11b: return "fig11b";
  }
  return "file";
}

std::optional<TraceKind> parse_trace_kind(std::string_view text) noexcept {
  for (auto k : {TraceKind::file, TraceKind::diurnal, TraceKind::random, TraceKind::adversary,
                 TraceKind::fig11a, TraceKind::fig11b}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

std::string_view to_string(ReportFormat format) noexcept {
  return format == ReportFormat::json ? "json" : "csv";
}

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept {
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  return std::nullopt;
}

SystemParams default_economics() {
  SystemParams p;
  p.beta = 1400.0;
  p.c_m = 110.0;
  p.c_o = 0.051;
  p.L = 1000.0;
  p.eta = 1.8;
  p.c_g = 0.0179;
  p.p_min = 0.08;
  p.p_max = 0.20;
  return p;
}

std::vector<double> default_capacities() {
  return {1000, 1000, 1000, 3000, 3000, 3000, 3000, 5000, 5000, 5000};
}

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw DomainError("at least one algorithm is required");
  if (windows.empty()) throw DomainError("at least one window is required");
  if (noise_std.empty()) throw DomainError("at least one noise level is required");
  if (runs == 0) throw DomainError("runs must be >= 1");
  if (capacities.empty()) throw EmptyFleet();
  if (trace_kind == TraceKind::file && trace_path.empty()) {
    throw DomainError("trace file path is empty");
  }
  if (trace_kind != TraceKind::file && horizon == 0) {
    throw DomainError("synthetic traces need a horizon >= 1");
  }
  for (double s : noise_std) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("noise std fractions must lie in [0, 1]");
  }
  if (!(hyperbolic_tail > 0.0)) throw DomainError("hyperbolic tail must be > 0");
}

namespace {

using Rng = std::mt19937_64;

std::size_t jitter(Rng& rng, std::size_t spread) {
  return std::uniform_int_distribution<std::size_t>(0, spread)(rng);
}

void append_block(Trace& trace, std::size_t n, double a, const SystemParams& u,
                  std::size_t horizon) {
  for (std::size_t i = 0; i < n && trace.size() < horizon; ++i) {
    trace.slots.push_back({a, u.eta * a, u.p_max});
  }
}

std::size_t slots_to_cover(double amount, double per_slot) {
  if (!(per_slot > 0.0)) return 1;
  return static_cast<std::size_t>(std::ceil(amount / per_slot - 1e-12));
}

// Alternating idle and full-load blocks, each long enough for the capped
// cumulative cost to travel between its boundaries with room to spare.
Trace fig11a(const SystemParams& u, std::size_t horizon, Rng& rng) {
  Trace t;
  const std::size_t ramp_up = slots_to_cover(u.beta, max_delta(u));
  const std::size_t ramp_down = slots_to_cover(u.beta, u.c_m);
  while (t.size() < horizon) {
    append_block(t, ramp_down + 4 + jitter(rng, 8), 0.0, u, horizon);
    append_block(t, ramp_up + 4 + jitter(rng, 8), u.L, u, horizon);
  }
  return t;
}

// Idle stretches broken by quarter-load bursts that only just pay back a
// startup, plus occasional full-load blocks.
Trace fig11b(const SystemParams& u, std::size_t horizon, Rng& rng) {
  Trace t;
  const double quarter = 0.25 * u.L;
  const double d_quarter = quarter * (u.peak_external_price() - u.c_o) - u.c_m;
  const std::size_t burst = slots_to_cover(u.beta, d_quarter);
  const std::size_t ramp_up = slots_to_cover(u.beta, max_delta(u));
  const std::size_t ramp_down = slots_to_cover(u.beta, u.c_m);
  bool full = false;
  while (t.size() < horizon) {
    append_block(t, ramp_down + 4 + jitter(rng, 6), 0.0, u, horizon);
    if (full) append_block(t, ramp_up + 4 + jitter(rng, 6), u.L, u, horizon);
    else append_block(t, burst, quarter, u, horizon);
    full = !full;
  }
  return t;
}

Trace random_trace(const GeneratorFleet& fleet, std::size_t horizon, Rng& rng) {
  const auto& u = fleet.unit(0);
  const double cap = fleet.total_capacity();
  std::uniform_real_distribution<double> a(0.0, cap), h(0.0, u.eta * cap), p(u.p_min, u.p_max);
  Trace t;
  for (std::size_t i = 0; i < horizon; ++i) {
    const double av = a(rng);
    const double hv = h(rng);
    t.slots.push_back({av, hv, p(rng)});
  }
  return t;
}

// Campus-like week: daytime electricity peak, night and morning heat peak,
// autocorrelated wind offsetting demand, afternoon price peak.
Trace diurnal_trace(const GeneratorFleet& fleet, std::size_t horizon, Rng& rng) {
  const auto& u = fleet.unit(0);
  const double cap = fleet.total_capacity();
  const double two_pi = 2.0 * std::numbers::pi;
  std::normal_distribution<double> small(0.0, 0.03), gust(0.0, 0.04), tick(0.0, 0.05);
  double wind = 0.15;
  Trace t;
  for (std::size_t i = 0; i < horizon; ++i) {
    const double hour = static_cast<double>(i % 24);
    const bool weekend = (i / 24) % 7 >= 5;
    const double day = std::max(0.0, std::sin(std::numbers::pi * (hour - 6.0) / 16.0));
    const double load = (weekend ? 0.8 : 1.0) * (0.30 + 0.45 * day) + small(rng);
    wind = std::clamp(0.9 * wind + 0.1 * 0.15 + gust(rng), 0.0, 0.35);
    const double a = cap * std::max(0.0, load - wind);

    const double heat = 0.30 + 0.20 * std::cos(two_pi * (hour - 4.0) / 24.0) + small(rng);
    const double h = u.eta * cap * std::clamp(heat, 0.0, 1.0);

    const double peak = std::max(0.0, std::sin(std::numbers::pi * (hour - 8.0) / 14.0));
    const double level = std::clamp(0.2 + 0.8 * peak + tick(rng), 0.0, 1.0);
    t.slots.push_back({a, h, u.p_min + (u.p_max - u.p_min) * level});
  }
  return t;
}

}  // namespace

Trace synthesize_trace(TraceKind kind, const GeneratorFleet& fleet, std::size_t horizon,
                       std::uint64_t seed) {
  Rng rng(seed);
  const auto& u = fleet.unit(0);
  switch (kind) {
    case TraceKind::fig11a: return fig11a(u, horizon, rng);
    case TraceKind::fig11b: return fig11b(u, horizon, rng);
    case TraceKind::random: return random_trace(fleet, horizon, rng);
    case TraceKind::diurnal: return diurnal_trace(fleet, horizon, rng);
    case TraceKind::adversary:
      return adversary_chase(Policy::make(Algorithm::chase, 0, u), u, horizon);
    case TraceKind::file: break;
  }
  throw DomainError("trace kind 'file' cannot be synthesized");
}

Trace experiment_trace(const ExperimentConfig& config, const GeneratorFleet& fleet) {
  if (config.trace_kind != TraceKind::file) {
    return synthesize_trace(config.trace_kind, fleet, config.horizon, config.trace_seed);
  }
  Trace trace = load_trace(config.trace_path, fleet.unit(0));
  if (config.horizon > 0) {
    if (config.horizon > trace.size()) {
      throw DomainError("horizon " + std::to_string(config.horizon) + " exceeds trace length " +
                        std::to_string(trace.size()));
    }
    trace.slots.resize(config.horizon);
  }
  return trace;
}

double cost_reduction(double cost, double benchmark) {
  return benchmark > 0.0 ? (benchmark - cost) / benchmark : 0.0;
}

namespace {

struct Job {
  Algorithm algorithm;
  std::size_t w;
  double noise_std;
  std::uint64_t seed;
};

}  // namespace

Report run_experiment(const ExperimentConfig& config, Execution exec) {
  config.validate();
  const auto fleet = GeneratorFleet::make(config.economics, config.capacities);
  const Trace trace = experiment_trace(config, fleet);
  validate_trace(trace, fleet.unit(0));

  Report report;
  report.horizon = trace.size();
  report.units = fleet.size();
  report.p_max = config.economics.p_max;
  report.benchmark_cost = fleet_external_cost(trace, fleet);
  report.offline_cost = schedule_fleet(trace, fleet, std::nullopt, 0, {}, exec).total_cost;

  std::vector<Job> jobs;
  for (auto algo : config.algorithms) {
    for (auto w : config.windows) {
      for (double sd : config.noise_std) {
        for (std::size_t r = 0; r < config.runs; ++r) jobs.push_back({algo, w, sd, config.seed + r});
      }
    }
  }

  report.runs.resize(jobs.size());
  auto run_job = [&](std::size_t i) {
    const Job& job = jobs[i];
    NoiseModel noise;
    noise.kind = config.noise_kind;
    noise.wind_std_frac = job.noise_std;
    noise.heat_std_frac = job.noise_std;
    noise.hyperbolic_tail = config.hyperbolic_tail;
    noise.seed = job.seed;
    const auto sched =
        schedule_fleet(trace, fleet, job.algorithm, job.w, noise, Execution::serial);

    RunRecord& rec = report.runs[i];
    rec.algorithm = job.algorithm;
    rec.w = job.w;
    rec.seed = job.seed;
    rec.noise_std = job.noise_std;
    rec.cost = sched.total_cost;
    rec.benchmark = report.benchmark_cost;
    rec.offline_cost = report.offline_cost;
    rec.cost_reduction = cost_reduction(rec.cost, rec.benchmark);
    rec.offline_reduction = cost_reduction(rec.offline_cost, rec.benchmark);
    rec.ratio = rec.offline_cost > 0.0 ? rec.cost / rec.offline_cost
                : rec.cost > 0.0       ? std::numeric_limits<double>::infinity()
                                       : 1.0;
    rec.startups = sched.startup_count;
  };

  const auto count = static_cast<std::int64_t>(jobs.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) run_job(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) run_job(static_cast<std::size_t>(i));
  }

  for (auto w : config.windows) {
    report.bounds.push_back(
        ratio_report(static_cast<double>(w), fleet.unit(0), config.lower_bound, exec));
  }
  return report;
}

}  // namespace gensched
