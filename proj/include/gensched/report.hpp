#ifndef GENSCHED_REPORT_HPP
#define GENSCHED_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gensched/experiment.hpp"

namespace gensched {

/// CSV: a header comment with the run summary, one row per run, then a
/// "# bounds" line followed by the bound table. JSON: runs nested by
/// algorithm plus the same bound table.
void emit_report(std::ostream& out, const Report& report, ReportFormat format);

/// Bound table alone, CSV rows or a JSON array.
void emit_bounds(std::ostream& out, const std::vector<RatioReport>& bounds, ReportFormat format);

/// Writes to `path`, or to stdout when `path` is empty or "-". Throws IoError.
void write_report(const std::string& path, const Report& report, ReportFormat format);

/// Reads back a CSV report written by emit_report. Throws ParseError.
Report parse_report_csv(std::istream& in);

}  // namespace gensched

#endif
