#include "text.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace nomcode::detail {

namespace {

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      token.empty() || token.front() == '+') {
    throw std::invalid_argument(std::string(what) + ": bad integer '" +
                                std::string(token) + "'");
  }
  return value;
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return !s.empty();
}

}  // namespace

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].size() > 1 && all_digits(tokens[0])) {
    for (char c : tokens[0]) values.push_back(c - '0');
    return values;
  }
  values.reserve(tokens.size());
  for (auto t : tokens) values.push_back(parse_int(t, what));
  return values;
}

std::vector<std::vector<int>> parse_groups(std::string_view text,
                                           const char* what) {
  text = trim(text);
  std::vector<std::vector<int>> groups;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument(std::string(what) + ": expected '('");
    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw std::invalid_argument(std::string(what) + ": missing ')'");
    auto body = text.substr(i + 1, close - i - 1);
    if (body.empty())
      throw std::invalid_argument(std::string(what) + ": empty group");
    std::vector<int> group;
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      auto token = body.substr(start, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - start);
      group.push_back(parse_int(token, what));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    groups.push_back(std::move(group));
    i = close + 1;
  }
  return groups;
}

std::string join(const std::vector<int>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace nomcode::detail
