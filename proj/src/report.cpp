#include "gensched/report.hpp"

#include <fstream>
#include <iostream>
#include <istream>
#include <map>
#include <ostream>

#include <json.hpp>

#include "gensched/text.hpp"

namespace gensched {

namespace {

constexpr const char* kRunHeader =
    "algorithm,w,seed,noise_std,cost,benchmark,offline_cost,cost_reduction,offline_reduction,"
    "ratio,startups";
constexpr const char* kBoundHeader =
    "w,p_max,alpha,inv_alpha,r_off_limit,lambda_star,cr_chase,cr_chaselk,cr_chaselk_plus,"
    "cr_chasepp,cr_chasepp_plus,cr_lower,delta1_star,delta2_star";

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

void bound_rows(std::ostream& out, const std::vector<RatioReport>& bounds) {
  out << kBoundHeader << '\n';
  for (const auto& b : bounds) {
    out << format_double(b.w) << ',' << format_double(b.p_max) << ',' << format_double(b.alpha)
        << ',' << format_double(b.inv_alpha) << ',' << format_double(b.r_off_limit) << ','
        << format_double(b.lambda_star) << ',' << format_double(b.cr_chase) << ','
        << format_double(b.cr_chaselk) << ',' << format_double(b.cr_chaselk_plus) << ','
        << format_double(b.cr_chasepp) << ',' << format_double(b.cr_chasepp_plus) << ','
        << opt(b.cr_lower) << ',' << opt(b.delta1_star) << ',' << opt(b.delta2_star) << '\n';
  }
}

void emit_csv(std::ostream& out, const Report& r) {
  out << "# horizon=" << r.horizon << " units=" << r.units << " p_max=" << format_double(r.p_max)
      << " benchmark_cost=" << format_double(r.benchmark_cost)
      << " offline_cost=" << format_double(r.offline_cost) << '\n';
  out << kRunHeader << '\n';
  for (const auto& x : r.runs) {
    out << to_string(x.algorithm) << ',' << x.w << ',' << x.seed << ','
        << format_double(x.noise_std) << ',' << format_double(x.cost) << ','
        << format_double(x.benchmark) << ',' << format_double(x.offline_cost) << ','
        << format_double(x.cost_reduction) << ',' << format_double(x.offline_reduction) << ','
        << format_double(x.ratio) << ',' << x.startups << '\n';
  }
  out << "# bounds\n";
  bound_rows(out, r.bounds);
}

nlohmann::json bound_json(const RatioReport& b) {
  nlohmann::json j = {{"w", b.w},
                      {"p_max", b.p_max},
                      {"alpha", b.alpha},
                      {"inv_alpha", b.inv_alpha},
                      {"r_off_limit", b.r_off_limit},
                      {"lambda_star", b.lambda_star},
                      {"cr_chase", b.cr_chase},
                      {"cr_chaselk", b.cr_chaselk},
                      {"cr_chaselk_plus", b.cr_chaselk_plus},
                      {"cr_chasepp", b.cr_chasepp},
                      {"cr_chasepp_plus", b.cr_chasepp_plus}};
  j["cr_lower"] = b.cr_lower ? nlohmann::json(*b.cr_lower) : nlohmann::json(nullptr);
  j["delta1_star"] = b.delta1_star ? nlohmann::json(*b.delta1_star) : nlohmann::json(nullptr);
  j["delta2_star"] = b.delta2_star ? nlohmann::json(*b.delta2_star) : nlohmann::json(nullptr);
  return j;
}

void emit_json(std::ostream& out, const Report& r) {
  nlohmann::json j;
  j["horizon"] = r.horizon;
  j["units"] = r.units;
  j["p_max"] = r.p_max;
  j["benchmark_cost"] = r.benchmark_cost;
  j["offline_cost"] = r.offline_cost;
  j["algorithms"] = nlohmann::json::object();
  for (const auto& x : r.runs) {
    j["algorithms"][std::string(to_string(x.algorithm))].push_back(
        {{"w", x.w},
         {"seed", x.seed},
         {"noise_std", x.noise_std},
         {"cost", x.cost},
         {"cost_reduction", x.cost_reduction},
         {"offline_reduction", x.offline_reduction},
         {"ratio", x.ratio},
         {"startups", x.startups}});
  }
  j["bounds"] = nlohmann::json::array();
  for (const auto& b : r.bounds) j["bounds"].push_back(bound_json(b));
  out << j.dump(2) << '\n';
}

}  // namespace

void emit_bounds(std::ostream& out, const std::vector<RatioReport>& bounds, ReportFormat format) {
  if (format == ReportFormat::csv) {
    bound_rows(out, bounds);
    return;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& b : bounds) j.push_back(bound_json(b));
  out << j.dump(2) << '\n';
}

void emit_report(std::ostream& out, const Report& report, ReportFormat format) {
  if (format == ReportFormat::json) emit_json(out, report);
  else emit_csv(out, report);
}

void write_report(const std::string& path, const Report& report, ReportFormat format) {
  if (path.empty() || path == "-") {
    emit_report(std::cout, report, format);
    std::cout.flush();
    if (!std::cout) throw IoError("write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write report '" + path + "'");
  emit_report(out, report, format);
  if (!out) throw IoError("write failed for '" + path + "'");
}

namespace {

double number(std::string_view s, std::size_t line) {
  const auto v = parse_double(s);
  if (!v) throw ParseError(line, "expected a number, got '" + std::string(s) + "'");
  return *v;
}

std::optional<double> maybe_number(std::string_view s, std::size_t line) {
  if (trim(s).empty()) return std::nullopt;
  return number(s, line);
}

std::map<std::string, std::string> summary_fields(std::string_view line) {
  std::map<std::string, std::string> out;
  for (auto item : split(trim(line.substr(1)), ' ')) {
    const auto eq = item.find('=');
    if (eq != std::string_view::npos) {
      out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    }
  }
  return out;
}

}  // namespace

Report parse_report_csv(std::istream& in) {
  Report r;
  std::string line;
  std::size_t n = 0;
  enum class Section { summary, runs, bounds } section = Section::summary;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++n;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body == "# bounds") {
      section = Section::bounds;
      header_seen = false;
      continue;
    }
    if (section == Section::summary && body.front() == '#') {
      const auto f = summary_fields(body);
      auto get = [&](const char* key) {
        const auto it = f.find(key);
        if (it == f.end()) throw ParseError(n, std::string("summary lacks '") + key + "'");
        return number(it->second, n);
      };
      r.horizon = static_cast<std::size_t>(get("horizon"));
      r.units = static_cast<std::size_t>(get("units"));
      r.p_max = get("p_max");
      r.benchmark_cost = get("benchmark_cost");
      r.offline_cost = get("offline_cost");
      section = Section::runs;
      continue;
    }
    if (!header_seen) {
      const char* expected = section == Section::bounds ? kBoundHeader : kRunHeader;
      if (body != expected) throw ParseError(n, "unexpected header");
      header_seen = true;
      continue;
    }
    const auto f = split(body, ',');
    if (section == Section::bounds) {
      if (f.size() != 14) throw ParseError(n, "bound row needs 14 fields");
      RatioReport b;
      b.w = number(f[0], n);
      b.p_max = number(f[1], n);
      b.alpha = number(f[2], n);
      b.inv_alpha = number(f[3], n);
      b.r_off_limit = number(f[4], n);
      b.lambda_star = number(f[5], n);
      b.cr_chase = number(f[6], n);
      b.cr_chaselk = number(f[7], n);
      b.cr_chaselk_plus = number(f[8], n);
      b.cr_chasepp = number(f[9], n);
      b.cr_chasepp_plus = number(f[10], n);
      b.cr_lower = maybe_number(f[11], n);
      b.delta1_star = maybe_number(f[12], n);
      b.delta2_star = maybe_number(f[13], n);
      r.bounds.push_back(b);
    } else {
      if (f.size() != 11) throw ParseError(n, "run row needs 11 fields");
      const auto algo = parse_algorithm(trim(f[0]));
      if (!algo) throw ParseError(n, "unknown algorithm '" + std::string(f[0]) + "'");
      RunRecord x;
      x.algorithm = *algo;
      x.w = static_cast<std::size_t>(number(f[1], n));
      const auto seed = parse_unsigned(f[2]);
      if (!seed) throw ParseError(n, "bad seed");
      x.seed = *seed;
      x.noise_std = number(f[3], n);
      x.cost = number(f[4], n);
      x.benchmark = number(f[5], n);
      x.offline_cost = number(f[6], n);
      x.cost_reduction = number(f[7], n);
      x.offline_reduction = number(f[8], n);
      x.ratio = number(f[9], n);
      x.startups = static_cast<std::size_t>(number(f[10], n));
      r.runs.push_back(x);
    }
  }
  return r;
}

}  // namespace gensched
