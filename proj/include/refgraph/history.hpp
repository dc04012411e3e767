#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "refgraph/ingest.hpp"
#include "refgraph/record.hpp"

namespace refgraph {

/// Format string that makes `git log --first-parent` emit the commit-log
/// format read by parse_commit_log.
inline constexpr std::string_view kGitLogFormat = "%H%x09%aI%x09%an%x09%ae";

struct CommitMeta {
  std::string hash;  ///< normalized lowercase hex
  Timestamp timestamp{};
  std::string author_name;
  std::string author_email;
};

/// Main-branch commits, newest first as log tooling emits them. Immutable
/// once built; lookups accept any unambiguous hash prefix.
class CommitLog {
 public:
  CommitLog() = default;

  /// Throws ParseError on a duplicate hash.
  explicit CommitLog(std::vector<CommitMeta> entries);

  const std::vector<CommitMeta>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Entry whose hash starts with `prefix` (normalized), or nullptr when none
  /// does. Throws Error when the prefix matches more than one commit.
  const CommitMeta* find(std::string_view prefix) const;

 private:
  std::vector<CommitMeta> entries_;
  std::vector<std::size_t> by_hash_;  // indices into entries_, sorted by hash
};

/// Reads `<hash>\t<ISO-8601>\t<name>\t<email>` lines. Blank lines are skipped;
/// any malformed line or duplicate hash throws ParseError with its line number.
CommitLog parse_commit_log(std::istream& in);

CommitLog parse_commit_log_file(const std::filesystem::path& path);

struct RestrictResult {
  std::vector<RefactoringRecord> kept;
  std::size_t dropped_off_branch = 0;
  /// Records whose commit prefix is ambiguous; `line` holds the 1-based
  /// position of the record in the input list.
  std::vector<RecordError> errors;
};

/// Keeps records whose commit is on the log and rewrites their commit,
/// timestamp, and author fields from the log entry.
RestrictResult restrict_to_log(const std::vector<RefactoringRecord>& records, const CommitLog& log);

}  // namespace refgraph
