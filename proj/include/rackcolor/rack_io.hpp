#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rackcolor/algebra.hpp"

namespace rackcolor {

/// `.rack` text: `order <n>` then n rows of n integers; `#` starts a comment.
/// Input starting with `{` is read as the JSON form produced by rack_to_json.
RackTable parse_rack(std::string_view text);
std::string serialize_rack(const RackTable& t);

nlohmann::json rack_to_json(const RackTable& t);
RackTable rack_from_json(const nlohmann::json& j);

/// `builtin:<family>:<n>` or a path to a rack file.
RackTable load_rack_source(const std::string& source);

}  // namespace rackcolor
