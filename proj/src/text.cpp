#include "gensched/text.hpp"

#include <charconv>
#include <cstdio>

namespace gensched {

std::string_view trim(std::string_view text) noexcept {
  const auto* ws = " \t\r\n";
  const auto first = text.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<double> parse_double(std::string_view text) noexcept {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<unsigned long long> parse_unsigned(std::string_view text) noexcept {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  unsigned long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::optional<std::vector<std::size_t>> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto item : split(text, ',')) {
    item = trim(item);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      const auto v = parse_unsigned(item);
      if (!v) return std::nullopt;
      out.push_back(static_cast<std::size_t>(*v));
      continue;
    }
    const auto lo = parse_unsigned(item.substr(0, dots));
    const auto hi = parse_unsigned(item.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    for (auto v = *lo; v <= *hi; ++v) out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::optional<std::vector<double>> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (auto item : split(text, ',')) {
    const auto v = parse_double(item);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

}  // namespace gensched
