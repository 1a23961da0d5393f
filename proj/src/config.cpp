#include "gensched/config.hpp"

#include <fstream>
#include <istream>

#include "gensched/text.hpp"

namespace gensched {

namespace {

double need_double(std::string_view v, std::size_t line) {
  const auto d = parse_double(v);
  if (!d) throw ParseError(line, "expected a number, got '" + std::string(v) + "'");
  return *d;
}

unsigned long long need_unsigned(std::string_view v, std::size_t line) {
  const auto d = parse_unsigned(v);
  if (!d) throw ParseError(line, "expected a non-negative integer, got '" + std::string(v) + "'");
  return *d;
}

bool need_bool(std::string_view v, std::size_t line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ParseError(line, "expected true or false, got '" + std::string(v) + "'");
}

}  // namespace

bool apply_setting(ExperimentConfig& c, std::string_view key, std::string_view value,
                   std::size_t line) {
  value = trim(value);
  auto& e = c.economics;
  if (key == "econ.beta") e.beta = need_double(value, line);
  else if (key == "econ.c_m") e.c_m = need_double(value, line);
  else if (key == "econ.c_o") e.c_o = need_double(value, line);
  else if (key == "econ.eta") e.eta = need_double(value, line);
  else if (key == "econ.c_g") e.c_g = need_double(value, line);
  else if (key == "econ.p_min") e.p_min = need_double(value, line);
  else if (key == "econ.p_max") e.p_max = need_double(value, line);
  else if (key == "fleet.capacities") {
    const auto caps = parse_double_list(value);
    if (!caps) throw ParseError(line, "fleet.capacities must be a list of numbers");
    c.capacities = *caps;
  } else if (key == "trace") {
    if (const auto kind = parse_trace_kind(value); kind && *kind != TraceKind::file) {
      c.trace_kind = *kind;
      c.trace_path.clear();
    } else {
      c.trace_kind = TraceKind::file;
      c.trace_path = std::string(value);
    }
  } else if (key == "trace.horizon") c.horizon = need_unsigned(value, line);
  else if (key == "trace.seed") c.trace_seed = need_unsigned(value, line);
  else if (key == "algorithms") {
    c.algorithms.clear();
    for (auto item : split(value, ',')) {
      const auto algo = parse_algorithm(trim(item));
      if (!algo) throw ParseError(line, "unknown algorithm '" + std::string(trim(item)) + "'");
      c.algorithms.push_back(*algo);
    }
  } else if (key == "windows") {
    const auto ws = parse_index_list(value);
    if (!ws) throw ParseError(line, "windows must be integers or ranges like 0..15");
    c.windows = *ws;
  } else if (key == "noise.kind") {
    const auto kind = parse_noise_kind(value);
    if (!kind) throw ParseError(line, "noise.kind must be none, gaussian or hyperbolic");
    c.noise_kind = *kind;
  } else if (key == "noise.std") {
    const auto sd = parse_double_list(value);
    if (!sd) throw ParseError(line, "noise.std must be a list of numbers");
    c.noise_std = *sd;
  } else if (key == "noise.tail") c.hyperbolic_tail = need_double(value, line);
  else if (key == "seed") c.seed = need_unsigned(value, line);
  else if (key == "runs") c.runs = need_unsigned(value, line);
  else if (key == "bounds.lower") c.lower_bound = need_bool(value, line);
  else if (key == "output.path") c.out_path = std::string(value);
  else if (key == "output.format") {
    const auto f = parse_report_format(value);
    if (!f) throw ParseError(line, "output.format must be csv or json");
    c.format = *f;
  } else return false;
  return true;
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError(line, "expected key = value");
    const auto key = trim(text.substr(0, eq));
    if (!apply_setting(base, key, text.substr(eq + 1), line)) {
      throw ParseError(line, "unknown key '" + std::string(key) + "'");
    }
  }
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  return parse_config(in, std::move(base));
}

}  // namespace gensched
