#pragma once

#include <string>
#include <string_view>

#include "refgraph/method_ref.hpp"
#include "refgraph/refactoring_type.hpp"
#include "refgraph/time.hpp"

namespace refgraph {

/// One detected refactoring: `source` became (or produced) `target`.
struct RefactoringRecord {
  std::string project;
  MethodRef source;
  MethodRef target;
  RefactoringType type = RefactoringType::Rename;
  std::string commit;  ///< lowercase hex, 7 to 40 chars
  Timestamp timestamp{};
  std::string author_name;
  std::string author_email;
};

/// Trims and lowercases a commit hash; throws ParseError unless the result
/// matches `[0-9a-f]{7,40}`.
std::string normalize_commit(std::string_view hash);

}  // namespace refgraph
