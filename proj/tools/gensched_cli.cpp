#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gensched/config.hpp"
#include "gensched/experiment.hpp"
#include "gensched/ratio.hpp"
#include "gensched/report.hpp"
#include "gensched/text.hpp"
#include "gensched/trace_io.hpp"

using namespace gensched;

namespace {

struct RunFlags {
  std::string config;
  std::string algo;
  std::string window;
  std::string noise_std;
  std::string noise_kind;
  std::string seed;
  std::string runs;
  std::string trace;
  std::string out;
  std::string format;
  bool serial = false;
};

void override_setting(ExperimentConfig& c, const char* key, const std::string& value) {
  if (!value.empty()) apply_setting(c, key, value);
}

ExperimentConfig build_config(const RunFlags& f) {
  ExperimentConfig c = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  override_setting(c, "algorithms", f.algo);
  override_setting(c, "windows", f.window);
  override_setting(c, "noise.std", f.noise_std);
  override_setting(c, "noise.kind", f.noise_kind);
  override_setting(c, "seed", f.seed);
  override_setting(c, "runs", f.runs);
  override_setting(c, "trace", f.trace);
  override_setting(c, "output.path", f.out);
  override_setting(c, "output.format", f.format);
  // A requested noise level without a kind means Gaussian.
  if (!f.noise_std.empty() && f.noise_kind.empty() && c.noise_kind == NoiseKind::none) {
    c.noise_kind = NoiseKind::gaussian;
  }
  return c;
}

int run(const RunFlags& f) {
  const auto config = build_config(f);
  const auto report = run_experiment(config, f.serial ? Execution::serial : Execution::parallel);
  write_report(config.out_path, report, config.format);
  return 0;
}

struct BoundFlags {
  std::string config;
  std::string window = "0..15";
  double capacity = 0.0;
  double p_max = 0.0;
  bool no_lower = false;
  std::string out;
  std::string format = "csv";
};

int bounds(const BoundFlags& f) {
  ExperimentConfig c = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  apply_setting(c, "windows", f.window);
  SystemParams unit = c.economics;
  unit.L = f.capacity > 0.0 ? f.capacity : GeneratorFleet::make(c.economics, c.capacities).unit(0).L;
  if (f.p_max > 0.0) unit.p_max = f.p_max;
  validate_params(unit);
  const auto format = parse_report_format(f.format);
  if (!format) throw DomainError("format must be csv or json");

  std::vector<RatioReport> rows;
  for (auto w : c.windows) rows.push_back(ratio_report(static_cast<double>(w), unit, !f.no_lower));

  if (f.out.empty() || f.out == "-") {
    emit_bounds(std::cout, rows, *format);
    return 0;
  }
  std::ofstream out(f.out, std::ios::binary);
  if (!out) throw IoError("cannot write '" + f.out + "'");
  emit_bounds(out, rows, *format);
  return out ? 0 : 1;
}

struct SynthFlags {
  std::string config;
  std::string kind = "diurnal";
  std::size_t horizon = 168;
  unsigned long long seed = 1;
  std::string out;
};

int synth(const SynthFlags& f) {
  ExperimentConfig c = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  const auto kind = parse_trace_kind(f.kind);
  if (!kind || *kind == TraceKind::file) throw DomainError("unknown trace kind '" + f.kind + "'");
  const auto fleet = GeneratorFleet::make(c.economics, c.capacities);
  const auto trace = synthesize_trace(*kind, fleet, f.horizon, f.seed);
  if (f.out.empty() || f.out == "-") write_trace(std::cout, trace);
  else save_trace(f.out, trace);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generator scheduling simulator with lookahead online algorithms"};
  app.require_subcommand(0, 1);

  RunFlags rf;
  app.add_option("--config", rf.config, "Experiment config file (key = value)");
  app.add_option("--algo", rf.algo, "Algorithms, comma separated (chase, chaselk, chaselk_plus, "
                                    "chasepp, chasepp_plus, rhc)");
  app.add_option("--window", rf.window, "Windows, e.g. 0..15 or 0,1,3");
  app.add_option("--noise-std", rf.noise_std, "Forecast error std fractions, comma separated");
  app.add_option("--noise-kind", rf.noise_kind, "none, gaussian or hyperbolic");
  app.add_option("--seed", rf.seed, "First noise seed");
  app.add_option("--runs", rf.runs, "Number of noise seeds");
  app.add_option("--trace", rf.trace, "Trace CSV path or synthetic kind");
  app.add_option("--out", rf.out, "Report path (stdout when omitted)");
  app.add_option("--format", rf.format, "csv or json");
  app.add_flag("--serial", rf.serial, "Run without threads");

  BoundFlags bf;
  auto* bcmd = app.add_subcommand("bounds", "Print closed-form competitive ratios per window");
  bcmd->add_option("--config", bf.config, "Experiment config file");
  bcmd->add_option("--window", bf.window, "Windows, e.g. 0..15");
  bcmd->add_option("--capacity", bf.capacity, "Unit capacity in kW (default: largest unit)");
  bcmd->add_option("--p-max", bf.p_max, "Override the peak grid price");
  bcmd->add_flag("--no-lower", bf.no_lower, "Skip the lower-bound search");
  bcmd->add_option("--out", bf.out, "Output path");
  bcmd->add_option("--format", bf.format, "csv or json");

  SynthFlags sf;
  auto* scmd = app.add_subcommand("synth", "Write a synthetic trace CSV");
  scmd->add_option("--config", sf.config, "Experiment config file");
  scmd->add_option("--kind", sf.kind, "diurnal, random, adversary, fig11a or fig11b");
  scmd->add_option("--horizon", sf.horizon, "Number of slots");
  scmd->add_option("--seed", sf.seed, "Generator seed");
  scmd->add_option("--out", sf.out, "Output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bcmd->parsed()) return bounds(bf);
    if (scmd->parsed()) return synth(sf);
    return run(rf);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gensched: %s\n", e.what());
    return 1;
  }
}
