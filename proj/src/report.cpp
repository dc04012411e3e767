#include "refgraph/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "refgraph/error.hpp"

namespace refgraph {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<std::string_view> header) { row(header); }

  void row(std::initializer_list<std::string_view> fields) {
    bool first = true;
    for (auto f : fields) {
      if (!first) out_ << ',';
      out_ << csv_field(f);
      first = false;
    }
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string num(std::size_t n) { return std::to_string(n); }

std::string fixed(double value, const char* format) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

std::string histogram_table(std::string_view value_column, const Histogram& histogram) {
  std::size_t total = 0;
  for (const auto& [value, count] : histogram) total += count;
  CsvWriter csv{value_column, "subgraphs", "pct"};
  for (const auto& [value, count] : histogram) csv.row({num(value), num(count), format_percent(count, total)});
  csv.row({kAllRowLabel, num(total), format_percent(total, total)});
  return csv.str();
}

void age_row(CsvWriter& csv, const AgeSummary& s) {
  if (!s.days) {
    csv.row({s.project, num(s.n), "", "", "", "", ""});
    return;
  }
  const auto& q = *s.days;
  csv.row({s.project, num(s.n), format_decimal(q.min), format_decimal(q.q1), format_decimal(q.median),
           format_decimal(q.q3), format_decimal(q.max)});
}

void correlation_row(CsvWriter& csv, std::string_view study, const CorrelationOutcome& c) {
  if (c.status == CorrelationOutcome::Status::Computed) {
    csv.row({study, to_string(c.status), fixed(c.result.rho, "%.6f"), num(c.result.n),
             fixed(c.result.p_approx, "%.6g"), "p-value from normal approximation"});
  } else {
    csv.row({study, to_string(c.status), "", "", "", c.note});
  }
}

ordered_json correlation_json(const CorrelationOutcome& c) {
  ordered_json j;
  j["status"] = std::string(to_string(c.status));
  if (c.status == CorrelationOutcome::Status::Computed) {
    j["rho"] = c.result.rho;
    j["n"] = c.result.n;
    j["p_approx"] = c.result.p_approx;
    j["p_method"] = "normal approximation (approximate)";
  } else {
    j["note"] = c.note;
  }
  return j;
}

ordered_json histogram_json(const Histogram& histogram) {
  ordered_json arr = ordered_json::array();
  for (const auto& [value, count] : histogram) arr.push_back({{"value", value}, {"count", count}});
  return arr;
}

ordered_json age_json(const AgeSummary& s) {
  ordered_json j;
  j["project"] = s.project;
  j["n"] = s.n;
  if (s.days) {
    j["min"] = s.days->min;
    j["q1"] = s.days->q1;
    j["median"] = s.days->median;
    j["q3"] = s.days->q3;
    j["max"] = s.days->max;
  } else {
    for (const char* key : {"min", "q1", "median", "q3", "max"}) j[key] = nullptr;
  }
  return j;
}

std::string quoted_id(std::string_view id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_percent(std::size_t count, std::size_t total) {
  if (total == 0) return "0.0";
  // round-half-up of count * 1000 / total, in tenths of a percent
  const auto tenths = (2 * count * 1000 + total) / (2 * total);
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::string format_decimal(double value) {
  const double tenths = std::floor(value * 10.0 + 0.5);
  return fixed(tenths / 10.0, "%.1f");
}

std::vector<OutputFile> emit_tables(const CorpusStats& stats) {
  std::vector<OutputFile> files;

  {
    CsvWriter csv{"project", "all", "len_1", "len_1_pct", "len_ge_2", "len_ge_2_pct"};
    auto row = [&](const SizeRow& r) {
      csv.row({r.project, num(r.all), num(r.single_commit), format_percent(r.single_commit, r.all),
               num(r.multi_commit), format_percent(r.multi_commit, r.all)});
    };
    for (const auto& r : stats.subgraph_rows) row(r);
    row(stats.subgraph_total);
    files.push_back({"subgraphs.csv", csv.str()});
  }
  {
    CsvWriter csv{"refactoring", "occurrences", "pct"};
    for (const auto& t : stats.type_frequency) {
      csv.row({display_name(t.type), num(t.count), format_percent(t.count, stats.total_edges)});
    }
    csv.row({kAllRowLabel, num(stats.total_edges), format_percent(stats.total_edges, stats.total_edges)});
    files.push_back({"refactoring_types.csv", csv.str()});
  }
  {
    CsvWriter csv{"project", "homogeneous", "homogeneous_pct", "heterogeneous", "heterogeneous_pct"};
    auto row = [&](const CompositionRow& r) {
      const auto total = r.homogeneous + r.heterogeneous;
      csv.row({r.project, num(r.homogeneous), format_percent(r.homogeneous, total), num(r.heterogeneous),
               format_percent(r.heterogeneous, total)});
    };
    for (const auto& r : stats.composition) row(r);
    row(stats.composition_total);
    files.push_back({"composition.csv", csv.str()});
  }
  {
    CsvWriter csv{"project", "single_dev", "single_dev_pct", "multiple_devs", "multiple_devs_pct"};
    auto row = [&](const AuthorshipRow& r) {
      const auto total = r.single + r.multiple;
      csv.row({r.project, num(r.single), format_percent(r.single, total), num(r.multiple),
               format_percent(r.multiple, total)});
    };
    for (const auto& r : stats.authorship) row(r);
    row(stats.authorship_total);
    files.push_back({"developers.csv", csv.str()});
  }
  {
    CsvWriter csv{"project", "subgraphs", "min_days", "q1_days", "median_days", "q3_days", "max_days"};
    for (const auto& s : stats.ages) age_row(csv, s);
    age_row(csv, stats.age_total);
    files.push_back({"subgraph_age.csv", csv.str()});
  }
  files.push_back({"histogram_vertices.csv", histogram_table("vertices", stats.vertices_histogram)});
  files.push_back({"histogram_edges.csv", histogram_table("edges", stats.edges_histogram)});
  files.push_back({"histogram_commits.csv", histogram_table("commits", stats.commits_histogram)});
  files.push_back(
      {"histogram_distinct_types.csv", histogram_table("distinct_types", stats.distinct_types_histogram)});
  {
    CsvWriter csv{"study", "status", "rho", "n", "p_approx", "note"};
    correlation_row(csv, "developers_vs_commits", stats.correlations.developers_vs_commits);
    correlation_row(csv, "project_age_vs_median_subgraph_age", stats.correlations.project_age_vs_median_age);
    files.push_back({"correlations.csv", csv.str()});
  }
  return files;
}

std::string emit_dot(const Subgraph& subgraph) {
  std::vector<std::string> nodes;
  for (const auto& v : subgraph.vertices) nodes.push_back("  " + quoted_id(v.canonical()) + ";");
  std::vector<std::string> edges;
  for (const auto& e : subgraph.edges) {
    const std::string label = std::string(to_string(e.type)) + "\\n" + e.commit.substr(0, 7) + "\\n" +
                              format_date(e.timestamp);
    edges.push_back("  " + quoted_id(e.source.canonical()) + " -> " + quoted_id(e.target.canonical()) +
                    " [label=\"" + label + "\"];");
  }
  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());

  std::string out = "digraph " + quoted_id(subgraph.id) + " {\n";
  out += "  node [shape=box];\n";
  for (const auto& n : nodes) out += n + "\n";
  for (const auto& e : edges) out += e + "\n";
  out += "}\n";
  return out;
}

std::string emit_json_summary(const CorpusStats& stats) {
  ordered_json doc;
  doc["format_version"] = std::string(kSummaryVersion);
  doc["min_commits"] = stats.min_commits;
  doc["projects"] = stats.projects;

  auto size_json = [](const SizeRow& r) {
    return ordered_json{{"project", r.project}, {"all", r.all}, {"len_1", r.single_commit},
                        {"len_ge_2", r.multi_commit}};
  };
  auto& subgraphs = doc["subgraphs"];
  subgraphs["rows"] = ordered_json::array();
  for (const auto& r : stats.subgraph_rows) subgraphs["rows"].push_back(size_json(r));
  subgraphs["all"] = size_json(stats.subgraph_total);
  doc["kept_subgraphs"] = stats.kept_subgraphs;

  auto& types = doc["refactoring_types"];
  types["total_edges"] = stats.total_edges;
  types["rows"] = ordered_json::array();
  for (const auto& t : stats.type_frequency) {
    types["rows"].push_back({{"type", std::string(to_string(t.type))}, {"count", t.count}});
  }

  auto composition_json = [](const CompositionRow& r) {
    return ordered_json{{"project", r.project}, {"homogeneous", r.homogeneous}, {"heterogeneous", r.heterogeneous}};
  };
  auto& composition = doc["composition"];
  composition["rows"] = ordered_json::array();
  for (const auto& r : stats.composition) composition["rows"].push_back(composition_json(r));
  composition["all"] = composition_json(stats.composition_total);

  auto authorship_json = [](const AuthorshipRow& r) {
    return ordered_json{{"project", r.project}, {"single", r.single}, {"multiple", r.multiple}};
  };
  auto& developers = doc["developers"];
  developers["rows"] = ordered_json::array();
  for (const auto& r : stats.authorship) developers["rows"].push_back(authorship_json(r));
  developers["all"] = authorship_json(stats.authorship_total);

  auto& ages = doc["age_days"];
  ages["rows"] = ordered_json::array();
  for (const auto& s : stats.ages) ages["rows"].push_back(age_json(s));
  ages["all"] = age_json(stats.age_total);

  auto& histograms = doc["histograms"];
  histograms["vertices"] = histogram_json(stats.vertices_histogram);
  histograms["edges"] = histogram_json(stats.edges_histogram);
  histograms["commits"] = histogram_json(stats.commits_histogram);
  histograms["distinct_types"] = histogram_json(stats.distinct_types_histogram);

  auto& correlations = doc["correlations"];
  correlations["developers_vs_commits"] = correlation_json(stats.correlations.developers_vs_commits);
  correlations["project_age_vs_median_subgraph_age"] =
      correlation_json(stats.correlations.project_age_vs_median_age);

  return doc.dump(2) + "\n";
}

void write_files(const std::filesystem::path& dir, const std::vector<OutputFile>& files) {
  namespace fs = std::filesystem;
  std::vector<fs::path> written;
  auto rollback = [&] {
    std::error_code ignored;
    for (const auto& p : written) fs::remove(p, ignored);
  };
  for (const auto& file : files) {
    const fs::path path = dir / file.name;
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (out) {
      written.push_back(path);
      out << file.content;
      out.flush();
    }
    if (!out) {
      rollback();
      throw IoError("cannot write '" + path.string() + "'");
    }
  }
}

}  // namespace refgraph
