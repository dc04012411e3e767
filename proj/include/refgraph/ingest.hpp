#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refgraph/record.hpp"

namespace refgraph {

struct RecordError {
  std::size_t line = 0;  ///< 1-based line number in the input
  std::string message;
};

struct ParseOptions {
  /// Throw on the first malformed line instead of collecting it.
  bool strict = false;
};

struct ParseResult {
  std::vector<RefactoringRecord> records;  ///< in input order
  std::vector<RecordError> errors;
};

/// Parses one record line: a JSON object with exactly the keys `project`,
/// `commit`, `timestamp`, `author_name`, `author_email`, `type`, `source`,
/// `target`, all strings. Throws ParseError.
RefactoringRecord parse_record_line(std::string_view line);

/// Serializes a record as one line (no trailing newline) that
/// parse_record_line accepts. Signatures are written in canonical form.
std::string format_record_line(const RefactoringRecord& record);

/// Reads line-delimited records. Blank lines are skipped. Malformed lines are
/// collected into `errors` unless `options.strict`, in which case the first one
/// is thrown as ParseError. A stream that goes bad mid-read throws IoError.
ParseResult parse_records(std::istream& in, const ParseOptions& options = {});

/// Throws IoError when the file cannot be opened.
ParseResult parse_records_file(const std::filesystem::path& path, const ParseOptions& options = {});

struct FilterConfig {
  std::vector<std::string> excluded_package_keywords = {"test",    "tests",   "example",
                                                        "examples", "sample", "samples"};
  bool drop_constructors = true;
  bool drop_self_loops = true;
};

enum class ExclusionReason { PackageKeyword, Constructor, SelfLoop };

std::string_view to_string(ExclusionReason reason);

struct ExclusionReport {
  std::size_t package_keyword = 0;
  std::size_t constructor = 0;
  std::size_t self_loop = 0;

  std::size_t total() const { return package_keyword + constructor + self_loop; }
};

struct FilterResult {
  std::vector<RefactoringRecord> kept;
  ExclusionReport report;
};

/// First reason `record` is excluded, checked in the order package keyword,
/// constructor, self-loop. nullopt when the record is kept.
std::optional<ExclusionReason> exclusion_reason(const RefactoringRecord& record,
                                                const FilterConfig& config);

/// Drops records in excluded packages, touching constructors, or whose two
/// endpoints are the same method. Each dropped record is counted once, under
/// its first matching reason. Kept records stay in input order.
FilterResult apply_filters(const std::vector<RefactoringRecord>& records, const FilterConfig& config);

}  // namespace refgraph
