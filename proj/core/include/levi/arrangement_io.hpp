#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "levi/arrangement.hpp"

namespace levi {

/// Arrangement document (UTF-8 JSON):
///
///   {
///     "kind": "d-arrangement" | "conic-line",
///     "d": 1,                      // d-arrangement only
///     "n": 3, "k": 4,              // conic-line only
///     "complete": true,
///     "curves": [{"id": "l1", "degree": 1}, ...],
///     "points": [{"id": "p1", "curves": ["l1", "l2"]}, ...]
///   }
///
/// Unknown fields are rejected. Syntax errors carry line and column.
Arrangement parse_arrangement(std::string_view text);
Arrangement read_arrangement(const std::filesystem::path& path);

/// Canonical rendering; parse_arrangement(emit_arrangement(a)) == a.
std::string emit_arrangement(const Arrangement& arr);

}  // namespace levi
