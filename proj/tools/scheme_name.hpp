#pragma once

#include <optional>
#include <string_view>

#include "polyeval/scheme.hpp"

namespace polyeval::cli {

/// Maps a CLI scheme name to a scheme. Accepts the four builtin names and
/// the threshold syntax "upper:lower@N" (e.g. "estrin:horner@10"), where both
/// sides are builtin names and N >= 1. Returns nothing for anything else.
std::optional<FunctionScheme> scheme_from_name(std::string_view name);

}  // namespace polyeval::cli
