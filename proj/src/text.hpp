#pragma once

// Private helpers for the textual formats.

#include <string>
#include <string_view>
#include <vector>

namespace nomcode::detail {

std::string_view trim(std::string_view s);

/// Whitespace-separated integers. A single token longer than one character
/// made only of digits is split into one value per digit ("23154").
std::vector<int> parse_int_list(std::string_view text, const char* what);

/// Parses "(a,b)(c,d,e)..." into its groups. Empty groups are rejected.
std::vector<std::vector<int>> parse_groups(std::string_view text,
                                           const char* what);

std::string join(const std::vector<int>& values, std::string_view sep);

}  // namespace nomcode::detail
