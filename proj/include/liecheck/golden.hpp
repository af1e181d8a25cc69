#pragma once

#include "json.hpp"

namespace liecheck {

using Json = nlohmann::ordered_json;

// Reference constants bundled into the binary from data/golden.json.
const Json& golden();

}  // namespace liecheck
