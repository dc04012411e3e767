#include "refgraph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

#include <json.hpp>

#include "refgraph/error.hpp"

namespace refgraph {

std::string write_graph_dump(const std::vector<ProjectGraph>& projects) {
  nlohmann::ordered_json doc;
  doc["format_version"] = std::string(kGraphDumpVersion);
  doc["projects"] = nlohmann::ordered_json::array();
  for (const auto& [name, graph] : projects) {
    nlohmann::ordered_json entry;
    entry["project"] = name;
    auto& vertices = entry["vertices"] = nlohmann::ordered_json::array();
    for (const auto& [label, ref] : graph.vertices()) vertices.push_back(label);
    auto& edges = entry["edges"] = nlohmann::ordered_json::array();
    for (const auto& [key, edge] : graph.edges()) {
      nlohmann::ordered_json e;
      e["source"] = key.source;
      e["target"] = key.target;
      e["type"] = std::string(to_string(edge.type));
      e["commit"] = edge.commit;
      e["timestamp"] = format_timestamp(edge.timestamp);
      e["author_name"] = edge.author_name;
      e["author_email"] = edge.author_email;
      edges.push_back(std::move(e));
    }
    doc["projects"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<ProjectGraph> read_graph_dump(std::istream& in) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph dump is not valid JSON: ") + e.what());
  }

  auto text = [](const json& obj, const char* key) -> std::string {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_string()) {
      throw ParseError(std::string("graph dump: missing string field '") + key + "'");
    }
    return obj.at(key).get<std::string>();
  };

  if (text(doc, "format_version") != kGraphDumpVersion) {
    throw ParseError("graph dump: unsupported format version '" + text(doc, "format_version") + "'");
  }
  if (!doc.contains("projects") || !doc.at("projects").is_array()) {
    throw ParseError("graph dump: missing 'projects' array");
  }

  std::vector<ProjectGraph> projects;
  for (const auto& entry : doc.at("projects")) {
    ProjectGraph pg{text(entry, "project"), {}};
    if (!entry.contains("edges") || !entry.at("edges").is_array() || !entry.contains("vertices") ||
        !entry.at("vertices").is_array()) {
      throw ParseError("graph dump: project '" + pg.project + "' needs 'vertices' and 'edges' arrays");
    }
    for (const auto& e : entry.at("edges")) {
      Edge edge;
      edge.source = parse_signature(text(e, "source"));
      edge.target = parse_signature(text(e, "target"));
      edge.type = parse_refactoring_type(text(e, "type"));
      edge.commit = normalize_commit(text(e, "commit"));
      edge.timestamp = parse_timestamp(text(e, "timestamp"));
      edge.author_name = e.contains("author_name") ? text(e, "author_name") : std::string{};
      edge.author_email = e.contains("author_email") ? text(e, "author_email") : std::string{};
      try {
        pg.graph.add(std::move(edge));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph dump: ") + e.what());
      }
    }
    for (const auto& v : entry.at("vertices")) {
      if (!v.is_string()) throw ParseError("graph dump: vertex labels must be strings");
      if (!pg.graph.vertices().contains(parse_signature(v.get<std::string>()).canonical())) {
        throw ParseError("graph dump: vertex '" + v.get<std::string>() + "' has no edges");
      }
    }
    if (pg.graph.vertex_count() != entry.at("vertices").size()) {
      throw ParseError("graph dump: project '" + pg.project + "' vertex list does not match its edges");
    }
    projects.push_back(std::move(pg));
  }
  return projects;
}

std::vector<ProjectGraph> read_graph_dump_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph dump '" + path.string() + "'");
  return read_graph_dump(in);
}

}  // namespace refgraph
