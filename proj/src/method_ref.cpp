#include "refgraph/method_ref.hpp"

#include <cctype>

#include "refgraph/error.hpp"

namespace refgraph {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_punct(char c) {
  switch (c) {
    case '<': case '>': case ',': case '[': case ']': case '(': case ')':
      return true;
    default:
      return false;
  }
}

// "Map< K ,V >" -> "Map<K,V>", "? extends  T" -> "? extends T"
std::string normalize_type(std::string_view text) {
  text = trim(text);
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty() && !is_punct(out.back()) && !is_punct(c)) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

[[noreturn]] void fail(std::string_view what, std::string_view raw) {
  throw ParseError(std::string(what) + " in signature '" + std::string(raw) + "'");
}

char closer_for(char open) {
  switch (open) {
    case '(': return ')';
    case '<': return '>';
    default: return ']';
  }
}

std::vector<std::string> split_params(std::string_view inner, std::string_view raw) {
  std::vector<std::string> params;
  if (trim(inner).empty()) return params;

  std::string stack;
  std::size_t start = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const char c = inner[i];
    if (c == '(' || c == '<' || c == '[') {
      stack += closer_for(c);
    } else if (c == ')' || c == '>' || c == ']') {
      if (stack.empty() || stack.back() != c) fail("unbalanced brackets", raw);
      stack.pop_back();
    } else if (c == ',' && stack.empty()) {
      params.push_back(normalize_type(inner.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (!stack.empty()) fail("unbalanced brackets", raw);
  params.push_back(normalize_type(inner.substr(start)));
  for (const auto& p : params) {
    if (p.empty()) fail("empty parameter", raw);
  }
  return params;
}

std::vector<std::string> split(std::string_view s, std::string_view delims) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || delims.find(s[i]) != std::string_view::npos) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

std::string MethodRef::class_path() const {
  if (package.empty()) return class_name;
  return package + "." + class_name;
}

std::string MethodRef::canonical() const {
  std::string out = class_path();
  out += '#';
  out += method;
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ", ";
    out += params[i];
  }
  out += ')';
  return out;
}

std::string MethodRef::simple_class_name() const {
  auto parts = split(class_name, ".$");
  return parts.back();
}

bool MethodRef::is_constructor() const {
  if (method == "<init>") return true;
  const auto simple = simple_class_name();
  return !simple.empty() && method == simple;
}

std::vector<std::string> MethodRef::package_segments() const {
  if (package.empty()) return {};
  return split(package, ".");
}

MethodRef parse_signature(std::string_view raw) {
  const std::string_view text = trim(raw);
  const auto open = text.find('(');
  const std::string_view head = open == std::string_view::npos ? text : text.substr(0, open);

  const auto hash = head.rfind('#');
  if (hash == std::string_view::npos) fail("missing '#'", raw);

  MethodRef ref;
  ref.raw = std::string(raw);
  ref.method = std::string(trim(head.substr(hash + 1)));
  if (ref.method.empty()) fail("empty method name", raw);

  if (open == std::string_view::npos) {
    if (text.find_first_of(")<>[]") != std::string_view::npos) fail("unbalanced brackets", raw);
  } else {
    if (text.back() != ')') fail("unbalanced brackets", raw);
    ref.params = split_params(text.substr(open + 1, text.size() - open - 2), raw);
  }

  const std::string_view class_path = trim(head.substr(0, hash));
  if (!class_path.empty()) {
    const auto segments = split(class_path, ".");
    std::size_t first_class = segments.size() - 1;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (!segments[i].empty() && std::isupper(static_cast<unsigned char>(segments[i][0]))) {
        first_class = i;
        break;
      }
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
      std::string& target = i < first_class ? ref.package : ref.class_name;
      if (!target.empty()) target += '.';
      target += segments[i];
    }
  }
  return ref;
}

}  // namespace refgraph
