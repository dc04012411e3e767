#pragma once

#include <array>
#include <string_view>

namespace refgraph {

/// The eight method-level refactorings a graph edge can carry.
enum class RefactoringType {
  Rename,
  Move,
  MoveAndRename,
  Extract,
  ExtractAndMove,
  Inline,
  PullUp,
  PushDown,
};

inline constexpr std::array<RefactoringType, 8> kAllRefactoringTypes = {
    RefactoringType::Rename,  RefactoringType::Move,           RefactoringType::MoveAndRename,
    RefactoringType::Extract, RefactoringType::ExtractAndMove, RefactoringType::Inline,
    RefactoringType::PullUp,  RefactoringType::PushDown,
};

/// snake_case wire name, e.g. `extract_and_move`.
std::string_view to_string(RefactoringType type);

/// Human-readable table name, e.g. `Extract and move`.
std::string_view display_name(RefactoringType type);

/// Inverse of to_string. Throws ParseError for anything else.
RefactoringType parse_refactoring_type(std::string_view text);

}  // namespace refgraph
