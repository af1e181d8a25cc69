#include "liecheck/golden.hpp"

#include <string_view>

namespace liecheck {

namespace detail {
extern const std::string_view kGoldenJson;
}

const Json& golden() {
  static const Json data = Json::parse(detail::kGoldenJson);
  return data;
}

}  // namespace liecheck
