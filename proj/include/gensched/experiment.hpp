#ifndef GENSCHED_EXPERIMENT_HPP
#define GENSCHED_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gensched/execution.hpp"
#include "gensched/multigen.hpp"
#include "gensched/noise.hpp"
#include "gensched/online.hpp"
#include "gensched/ratio.hpp"

namespace gensched {

enum class TraceKind { file, diurnal, random, adversary, fig11a, fig11b };

std::string_view to_string(TraceKind kind) noexcept;
std::optional<TraceKind> parse_trace_kind(std::string_view text) noexcept;

enum class ReportFormat { csv, json };

std::string_view to_string(ReportFormat format) noexcept;
std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept;

/// Shared economics of the default fleet. L is unused here; capacities come
/// from ExperimentConfig::capacities.
SystemParams default_economics();
std::vector<double> default_capacities();

struct ExperimentConfig {
  SystemParams economics = default_economics();
  std::vector<double> capacities = default_capacities();

  TraceKind trace_kind = TraceKind::diurnal;
  std::string trace_path;
  std::size_t horizon = 168;  // 0 means the whole trace file
  std::uint64_t trace_seed = 1;

  std::vector<Algorithm> algorithms = {Algorithm::chase, Algorithm::chaselk_plus,
                                       Algorithm::chasepp_plus, Algorithm::rhc};
  std::vector<std::size_t> windows = {0, 1, 2, 3, 5, 10, 15};

  NoiseKind noise_kind = NoiseKind::none;
  std::vector<double> noise_std = {0.0};  // applied to both wind and heat
  double hyperbolic_tail = 1.0;
  std::uint64_t seed = 1;
  std::size_t runs = 1;  // seeds seed, seed+1, ..., seed+runs-1

  bool lower_bound = true;

  std::string out_path;
  ReportFormat format = ReportFormat::csv;

  /// Throws DomainError on an unusable configuration.
  void validate() const;
};

/// Synthetic trace of `horizon` slots for `fleet`. Block traces (fig11a,
/// fig11b) and the adversary use the largest unit; random and diurnal scale
/// with total capacity.
Trace synthesize_trace(TraceKind kind, const GeneratorFleet& fleet, std::size_t horizon,
                       std::uint64_t seed);

/// The trace an experiment runs on (file or synthetic), cut to its horizon.
Trace experiment_trace(const ExperimentConfig& config, const GeneratorFleet& fleet);

struct RunRecord {
  Algorithm algorithm = Algorithm::chase;
  std::size_t w = 0;
  std::uint64_t seed = 0;
  double noise_std = 0.0;
  double cost = 0.0;
  double benchmark = 0.0;
  double offline_cost = 0.0;
  double cost_reduction = 0.0;     // (benchmark - cost) / benchmark
  double offline_reduction = 0.0;  // same for the offline optimum
  double ratio = 1.0;              // cost / offline_cost
  std::size_t startups = 0;
};

struct Report {
  std::size_t horizon = 0;
  std::size_t units = 0;
  double p_max = 0.0;
  double benchmark_cost = 0.0;
  double offline_cost = 0.0;
  std::vector<RunRecord> runs;
  std::vector<RatioReport> bounds;  // per window, for the largest unit
};

double cost_reduction(double cost, double benchmark);

Report run_experiment(const ExperimentConfig& config, Execution exec = Execution::parallel);

}  // namespace gensched

#endif
