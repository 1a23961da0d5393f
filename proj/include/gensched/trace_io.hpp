#ifndef GENSCHED_TRACE_IO_HPP
#define GENSCHED_TRACE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "gensched/model.hpp"

namespace gensched {

inline constexpr const char* kTraceHeader = "t,a_kw,h_kw,p_usd_per_kwh";

/// Reads a trace CSV. Row numbers in errors count data rows from 1 (the
/// header is row 0). With `bounds`, prices must lie in [p_min, p_max].
/// Throws ParseError for malformed text and ValidationError for bad values.
Trace parse_trace(std::istream& in, const std::optional<SystemParams>& bounds = std::nullopt);
Trace load_trace(const std::string& path, const std::optional<SystemParams>& bounds = std::nullopt);

void write_trace(std::ostream& out, const Trace& trace);

/// Throws IoError when the file cannot be written.
void save_trace(const std::string& path, const Trace& trace);

}  // namespace gensched

#endif
