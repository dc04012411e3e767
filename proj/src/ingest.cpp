#include "refgraph/ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>

#include <json.hpp>

#include "refgraph/error.hpp"

namespace refgraph {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 8> kRecordKeys = {
    "project", "commit", "timestamp", "author_name", "author_email", "type", "source", "target",
};

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
}

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

const std::string& string_field(const json& object, std::string_view key) {
  const auto& value = object.at(std::string(key));
  if (!value.is_string()) throw ParseError("field '" + std::string(key) + "' must be a string");
  return value.get_ref<const std::string&>();
}

bool equals_ignore_case(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

bool in_excluded_package(const MethodRef& ref, const std::vector<std::string>& keywords) {
  for (const auto& segment : ref.package_segments()) {
    for (const auto& keyword : keywords) {
      if (equals_ignore_case(segment, keyword)) return true;
    }
  }
  return false;
}

}  // namespace

RefactoringRecord parse_record_line(std::string_view line) {
  json object;
  try {
    object = json::parse(line);
  } catch (const json::parse_error&) {
    throw ParseError("not a valid JSON object");
  }
  if (!object.is_object()) throw ParseError("not a valid JSON object");

  for (auto key : kRecordKeys) {
    if (!object.contains(std::string(key))) throw ParseError("missing field '" + std::string(key) + "'");
  }
  if (object.size() != kRecordKeys.size()) {
    for (const auto& item : object.items()) {
      if (std::find(kRecordKeys.begin(), kRecordKeys.end(), item.key()) == kRecordKeys.end()) {
        throw ParseError("unexpected field '" + item.key() + "'");
      }
    }
  }

  RefactoringRecord record;
  record.project = trimmed(string_field(object, "project"));
  if (record.project.empty()) throw ParseError("field 'project' is empty");
  record.commit = normalize_commit(string_field(object, "commit"));
  record.timestamp = parse_timestamp(trimmed(string_field(object, "timestamp")));
  record.author_name = trimmed(string_field(object, "author_name"));
  record.author_email = trimmed(string_field(object, "author_email"));
  if (record.author_email.empty()) throw ParseError("field 'author_email' is empty");
  record.type = parse_refactoring_type(trimmed(string_field(object, "type")));
  record.source = parse_signature(string_field(object, "source"));
  record.target = parse_signature(string_field(object, "target"));
  return record;
}

std::string format_record_line(const RefactoringRecord& record) {
  nlohmann::ordered_json object;
  object["project"] = record.project;
  object["commit"] = record.commit;
  object["timestamp"] = format_timestamp(record.timestamp);
  object["author_name"] = record.author_name;
  object["author_email"] = record.author_email;
  object["type"] = std::string(to_string(record.type));
  object["source"] = record.source.canonical();
  object["target"] = record.target.canonical();
  return object.dump();
}

ParseResult parse_records(std::istream& in, const ParseOptions& options) {
  ParseResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    try {
      result.records.push_back(parse_record_line(line));
    } catch (const ParseError& e) {
      if (options.strict) throw ParseError(e.what(), line_no);
      result.errors.push_back({line_no, e.what()});
    }
  }
  if (in.bad()) throw IoError("read error after line " + std::to_string(line_no));
  return result;
}

ParseResult parse_records_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open records file '" + path.string() + "'");
  try {
    return parse_records(in, options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string_view to_string(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::PackageKeyword: return "package-keyword";
    case ExclusionReason::Constructor: return "constructor";
    case ExclusionReason::SelfLoop: return "self-loop";
  }
  return "unknown";
}

std::optional<ExclusionReason> exclusion_reason(const RefactoringRecord& record,
                                                const FilterConfig& config) {
  if (in_excluded_package(record.source, config.excluded_package_keywords) ||
      in_excluded_package(record.target, config.excluded_package_keywords)) {
    return ExclusionReason::PackageKeyword;
  }
  if (config.drop_constructors && (record.source.is_constructor() || record.target.is_constructor())) {
    return ExclusionReason::Constructor;
  }
  if (config.drop_self_loops && record.source.canonical() == record.target.canonical()) {
    return ExclusionReason::SelfLoop;
  }
  return std::nullopt;
}

FilterResult apply_filters(const std::vector<RefactoringRecord>& records, const FilterConfig& config) {
  FilterResult result;
  for (const auto& record : records) {
    const auto reason = exclusion_reason(record, config);
    if (!reason) {
      result.kept.push_back(record);
      continue;
    }
    switch (*reason) {
      case ExclusionReason::PackageKeyword: ++result.report.package_keyword; break;
      case ExclusionReason::Constructor: ++result.report.constructor; break;
      case ExclusionReason::SelfLoop: ++result.report.self_loop; break;
    }
  }
  return result;
}

}  // namespace refgraph
