#include "refgraph/record.hpp"

#include <cctype>

#include "refgraph/error.hpp"

namespace refgraph {

std::string normalize_commit(std::string_view hash) {
  while (!hash.empty() && std::isspace(static_cast<unsigned char>(hash.front()))) hash.remove_prefix(1);
  while (!hash.empty() && std::isspace(static_cast<unsigned char>(hash.back()))) hash.remove_suffix(1);

  std::string out;
  out.reserve(hash.size());
  for (char c : hash) {
    const auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!std::isxdigit(static_cast<unsigned char>(lower))) {
      throw ParseError("invalid commit hash '" + std::string(hash) + "'");
    }
    out += lower;
  }
  if (out.size() < 7 || out.size() > 40) {
    throw ParseError("commit hash '" + std::string(hash) + "' must have 7 to 40 hex digits");
  }
  return out;
}

}  // namespace refgraph
