#ifndef GENSCHED_CONFIG_HPP
#define GENSCHED_CONFIG_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "gensched/experiment.hpp"

namespace gensched {

/// Flat "key = value" text; '#' starts a comment. Unknown keys and malformed
/// values raise ParseError with the 1-based line number. See
/// configs/default.conf for every key.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

/// Applies one setting. Returns false for an unknown key; throws ParseError
/// (with `line`) for a malformed value.
bool apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value,
                   std::size_t line = 0);

}  // namespace gensched

#endif
