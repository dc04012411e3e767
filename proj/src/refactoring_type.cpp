#include "refgraph/refactoring_type.hpp"

#include <string>

#include "refgraph/error.hpp"

namespace refgraph {

std::string_view to_string(RefactoringType type) {
  switch (type) {
    case RefactoringType::Rename: return "rename";
    case RefactoringType::Move: return "move";
    case RefactoringType::MoveAndRename: return "move_and_rename";
    case RefactoringType::Extract: return "extract";
    case RefactoringType::ExtractAndMove: return "extract_and_move";
    case RefactoringType::Inline: return "inline";
    case RefactoringType::PullUp: return "pull_up";
    case RefactoringType::PushDown: return "push_down";
  }
  return "unknown";
}

std::string_view display_name(RefactoringType type) {
  switch (type) {
    case RefactoringType::Rename: return "Rename";
    case RefactoringType::Move: return "Move";
    case RefactoringType::MoveAndRename: return "Move and rename";
    case RefactoringType::Extract: return "Extract";
    case RefactoringType::ExtractAndMove: return "Extract and move";
    case RefactoringType::Inline: return "Inline";
    case RefactoringType::PullUp: return "Pull up";
    case RefactoringType::PushDown: return "Push down";
  }
  return "Unknown";
}

RefactoringType parse_refactoring_type(std::string_view text) {
  for (auto type : kAllRefactoringTypes) {
    if (to_string(type) == text) return type;
  }
  throw ParseError("unknown refactoring type '" + std::string(text) + "'");
}

}  // namespace refgraph
