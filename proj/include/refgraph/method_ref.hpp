#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace refgraph {

/// A method identified by its full signature, e.g. `util.Foo#m(int)`.
///
/// Identity is the canonical string: two MethodRefs are equal when their
/// canonical forms are equal, regardless of how `raw` was spelled.
struct MethodRef {
  std::string package;     ///< dotted path, may be empty
  std::string class_name;  ///< may carry nesting via `$` or `.`
  std::string method;
  std::vector<std::string> params;
  std::string raw;

  /// `package.Class#method(p1, p2)`; the package prefix is omitted when empty.
  std::string canonical() const;

  /// Dotted package plus class path, i.e. everything left of `#`.
  std::string class_path() const;

  /// Innermost class name (last segment after `.` or `$`).
  std::string simple_class_name() const;

  /// Method name equals the simple class name, or is `<init>`.
  bool is_constructor() const;

  std::vector<std::string> package_segments() const;

  friend bool operator==(const MethodRef& a, const MethodRef& b) {
    return a.canonical() == b.canonical();
  }
};

/// Splits a signature string into its parts. The class path is split from the
/// method on the last `#` before the parameter list; parameters are split on
/// top-level commas only, so `Map<K, V>` stays one parameter. Whitespace around
/// punctuation inside a parameter is dropped and other runs collapse to one
/// space. Throws ParseError on a missing `#`, an empty method name, or
/// unbalanced brackets.
MethodRef parse_signature(std::string_view raw);

}  // namespace refgraph
