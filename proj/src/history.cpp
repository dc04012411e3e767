#include "refgraph/history.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "refgraph/error.hpp"

namespace refgraph {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

CommitLog::CommitLog(std::vector<CommitMeta> entries) : entries_(std::move(entries)) {
  by_hash_.resize(entries_.size());
  for (std::size_t i = 0; i < by_hash_.size(); ++i) by_hash_[i] = i;
  std::sort(by_hash_.begin(), by_hash_.end(),
            [this](std::size_t a, std::size_t b) { return entries_[a].hash < entries_[b].hash; });
  for (std::size_t i = 1; i < by_hash_.size(); ++i) {
    if (entries_[by_hash_[i - 1]].hash == entries_[by_hash_[i]].hash) {
      throw ParseError("duplicate commit " + entries_[by_hash_[i]].hash + " in commit log");
    }
  }
}

const CommitMeta* CommitLog::find(std::string_view prefix) const {
  const std::string key = normalize_commit(prefix);
  auto it = std::lower_bound(by_hash_.begin(), by_hash_.end(), key,
                             [this](std::size_t i, const std::string& k) { return entries_[i].hash < k; });
  auto starts_with_key = [&](std::size_t i) { return entries_[i].hash.compare(0, key.size(), key) == 0; };
  if (it == by_hash_.end() || !starts_with_key(*it)) return nullptr;
  if (std::next(it) != by_hash_.end() && starts_with_key(*std::next(it))) {
    throw Error("ambiguous commit prefix '" + key + "'");
  }
  return &entries_[*it];
}

CommitLog parse_commit_log(std::istream& in) {
  std::vector<CommitMeta> entries;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw ParseError("expected 4 tab-separated fields, got " + std::to_string(fields.size()), line_no);
    }
    CommitMeta meta;
    try {
      meta.hash = normalize_commit(fields[0]);
      meta.timestamp = parse_timestamp(trimmed(fields[1]));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    meta.author_name = trimmed(fields[2]);
    meta.author_email = trimmed(fields[3]);
    if (meta.author_email.empty()) throw ParseError("empty author email", line_no);
    if (!seen.insert(meta.hash).second) throw ParseError("duplicate commit " + meta.hash, line_no);
    entries.push_back(std::move(meta));
  }
  if (in.bad()) throw IoError("read error after line " + std::to_string(line_no));
  return CommitLog(std::move(entries));
}

CommitLog parse_commit_log_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open commit log '" + path.string() + "'");
  try {
    return parse_commit_log(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

RestrictResult restrict_to_log(const std::vector<RefactoringRecord>& records, const CommitLog& log) {
  RestrictResult result;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CommitMeta* meta = nullptr;
    try {
      meta = log.find(records[i].commit);
    } catch (const Error& e) {
      result.errors.push_back({i + 1, e.what()});
      continue;
    }
    if (meta == nullptr) {
      ++result.dropped_off_branch;
      continue;
    }
    RefactoringRecord record = records[i];
    record.commit = meta->hash;
    record.timestamp = meta->timestamp;
    record.author_name = meta->author_name;
    record.author_email = meta->author_email;
    result.kept.push_back(std::move(record));
  }
  return result;
}

}  // namespace refgraph
