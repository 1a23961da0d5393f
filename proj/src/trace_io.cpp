#include "gensched/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "gensched/text.hpp"

namespace gensched {

namespace {

double parse_field(std::string_view text, const char* name, std::size_t row) {
  const auto value = parse_double(text);
  if (!value) throw ParseError(row, std::string("column '") + name + "' is not a number");
  if (!std::isfinite(*value)) throw ValidationError(name, row, "value must be finite");
  return *value;
}

}  // namespace

Trace parse_trace(std::istream& in, const std::optional<SystemParams>& bounds) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(0, "missing header");
  const auto header = split(trim(line), ',');
  const char* expected[] = {"t", "a_kw", "h_kw", "p_usd_per_kwh"};
  if (header.size() != 4) throw ParseError(0, std::string("header must be ") + kTraceHeader);
  for (std::size_t i = 0; i < 4; ++i) {
    if (trim(header[i]) != expected[i]) {
      throw ParseError(0, std::string("missing column '") + expected[i] + "'");
    }
  }

  Trace trace;
  std::size_t row = 0;
  double last_t = 0.0;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty()) continue;
    ++row;
    const auto fields = split(body, ',');
    if (fields.size() != 4) {
      throw ParseError(row, "expected 4 fields, got " + std::to_string(fields.size()));
    }
    const double t = parse_field(fields[0], "t", row);
    if (t != std::floor(t) || t != last_t + 1.0) {
      throw ParseError(row, "t must count 1, 2, 3, ...");
    }
    last_t = t;
    InputSlot slot{parse_field(fields[1], "a_kw", row), parse_field(fields[2], "h_kw", row),
                   parse_field(fields[3], "p_usd_per_kwh", row)};
    if (slot.a < 0.0) throw ValidationError("a", row, "electricity demand must be >= 0");
    if (slot.h < 0.0) throw ValidationError("h", row, "heat demand must be >= 0");
    if (slot.p < 0.0) throw ValidationError("p", row, "price must be >= 0");
    if (bounds) validate_slot(slot, *bounds, row);
    trace.slots.push_back(slot);
  }
  return trace;
}

Trace load_trace(const std::string& path, const std::optional<SystemParams>& bounds) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trace '" + path + "'");
  return parse_trace(in, bounds);
}

void write_trace(std::ostream& out, const Trace& trace) {
  out << kTraceHeader << '\n';
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const auto& s = trace.slots[t];
    out << (t + 1) << ',' << format_double(s.a) << ',' << format_double(s.h) << ','
        << format_double(s.p) << '\n';
  }
}

void save_trace(const std::string& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trace '" + path + "'");
  write_trace(out, trace);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace gensched
