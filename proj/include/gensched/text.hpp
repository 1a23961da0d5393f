#ifndef GENSCHED_TEXT_HPP
#define GENSCHED_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gensched {

std::string_view trim(std::string_view text) noexcept;
std::vector<std::string_view> split(std::string_view text, char sep);

/// Whole-string parse; nothing on trailing garbage.
std::optional<double> parse_double(std::string_view text) noexcept;
std::optional<unsigned long long> parse_unsigned(std::string_view text) noexcept;

/// Round-trippable "%.17g".
std::string format_double(double value);

/// Comma-separated list of non-negative integers and inclusive ranges "a..b".
std::optional<std::vector<std::size_t>> parse_index_list(std::string_view text);
std::optional<std::vector<double>> parse_double_list(std::string_view text);

}  // namespace gensched

#endif
