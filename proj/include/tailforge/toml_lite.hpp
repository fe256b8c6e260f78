#pragma once

// Reader for the TOML subset the config files use: comments, [section]
// headers, and key = value pairs with string/integer/float/boolean/array
// values. Parses into a JSON object {section: {key: value}} with top-level
// keys under "". Unsupported TOML constructs fail with a line-numbered
// ParseError rather than being misread.

#include <nlohmann/json_fwd.hpp>
#include <string_view>

namespace tailforge {

nlohmann::json parse_toml(std::string_view text);

}  // namespace tailforge
