#include "flagrec/json_io.hpp"

#include <nlohmann/json.hpp>

namespace flagrec {

using nlohmann::json;

bool valid_external_label(std::string_view label) {
  if (label.empty()) return false;
  auto word_char = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  };
  if (!word_char(label[0])) return false;
  for (char c : label.substr(1)) {
    if (!word_char(c) && c != '_' && c != '-') return false;
  }
  return true;
}

namespace {

json parse(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON");
  return parsed;
}

std::string label_from(const json& value, bool require_external) {
  if (!value.is_string()) fail(ErrorCode::ParseError, "labels must be strings");
  std::string label = value.get<std::string>();
  if (require_external && !valid_external_label(label)) {
    fail(ErrorCode::BadLabel, label);
  }
  if (label.empty()) fail(ErrorCode::BadLabel, "empty label");
  return label;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json out;
  out["vertices"] = g.labels();
  json edges = json::array();
  for (const auto& [a, b] : g.edge_list()) {
    edges.push_back(json::array({a, b}));
  }
  out["edges"] = std::move(edges);
  return out.dump();
}

Graph graph_from_json(const std::string& text, bool require_external_labels) {
  json parsed = parse(text);
  if (!parsed.is_object() || !parsed.contains("vertices") || !parsed.contains("edges")) {
    fail(ErrorCode::ParseError, "graph JSON needs \"vertices\" and \"edges\"");
  }
  if (!parsed["vertices"].is_array() || !parsed["edges"].is_array()) {
    fail(ErrorCode::ParseError, "\"vertices\" and \"edges\" must be arrays");
  }
  std::vector<std::string> vertices;
  for (const auto& v : parsed["vertices"]) {
    vertices.push_back(label_from(v, require_external_labels));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : parsed["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      fail(ErrorCode::ParseError, "each edge must be a two-element array");
    }
    edges.emplace_back(label_from(e[0], require_external_labels),
                       label_from(e[1], require_external_labels));
  }
  return Graph::build(vertices, edges);
}

std::string instance_to_json(const BoundaryInstance& instance) {
  json out;
  out["boundary"] = instance.boundary;
  out["dist"] = instance.dist.entries();
  return out.dump();
}

BoundaryInstance instance_from_json(const std::string& text, bool require_external_labels) {
  json parsed = parse(text);
  if (!parsed.is_object() || !parsed.contains("boundary") || !parsed.contains("dist")) {
    fail(ErrorCode::ParseError, "instance JSON needs \"boundary\" and \"dist\"");
  }
  if (!parsed["boundary"].is_array() || !parsed["dist"].is_array()) {
    fail(ErrorCode::ParseError, "\"boundary\" and \"dist\" must be arrays");
  }
  std::vector<std::string> boundary;
  for (const auto& v : parsed["boundary"]) {
    boundary.push_back(label_from(v, require_external_labels));
  }
  std::vector<std::vector<int>> entries;
  for (const auto& row : parsed["dist"]) {
    if (!row.is_array() || row.size() != boundary.size()) {
      fail(ErrorCode::ParseError, "\"dist\" must be square and match \"boundary\"");
    }
    std::vector<int> values;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) fail(ErrorCode::ParseError, "distances must be integers");
      values.push_back(cell.get<int>());
    }
    entries.push_back(std::move(values));
  }
  if (entries.size() != boundary.size()) {
    fail(ErrorCode::ParseError, "\"dist\" must be square and match \"boundary\"");
  }
  BoundaryInstance instance{std::move(boundary), DistanceMatrix({}, {})};
  instance.dist = DistanceMatrix(instance.boundary, std::move(entries));
  std::string why;
  if (!instance.dist.is_metric(&why)) {
    fail(ErrorCode::InconsistentMatrix, why);
  }
  return instance;
}

std::string report_to_json(const ClassReport& report) {
  json out;
  out["class"] = graph_class_name(report.graph_class);
  out["verdict"] = report.verdict;
  out["certificate"] = report.certificate ? json(*report.certificate) : json(nullptr);
  if (report.witness) {
    json witness;
    witness["kind"] = witness_kind_name(report.witness->kind);
    if (!report.witness->vertices.empty()) witness["vertices"] = report.witness->vertices;
    if (!report.witness->cliques.empty()) witness["cliques"] = report.witness->cliques;
    out["witness"] = std::move(witness);
  } else {
    out["witness"] = nullptr;
  }
  return out.dump();
}

std::string stats_to_json(const ReconstructionStats& stats) {
  json out;
  out["steps"] = stats.steps;
  out["backtracks"] = stats.backtracks;
  out["elapsed_ms"] = stats.elapsed_ms;
  return out.dump();
}

std::string genspec_to_json(const GenSpec& spec) {
  json out;
  out["family"] = gen_family_name(spec.family);
  out["n"] = spec.n;
  out["rows"] = spec.rows;
  out["cols"] = spec.cols;
  out["radius"] = spec.radius;
  out["tris"] = spec.tri_count;
  out["density_num"] = spec.density_num;
  out["density_den"] = spec.density_den;
  out["class"] = graph_class_name(spec.filter_class);
  out["attempts"] = spec.attempts;
  out["seed"] = spec.seed;
  return out.dump();
}

GenSpec genspec_from_json(const std::string& text) {
  json parsed = parse(text);
  if (!parsed.is_object() || !parsed.contains("family")) {
    fail(ErrorCode::ParseError, "generator spec needs \"family\"");
  }
  GenSpec spec;
  auto family = gen_family_from_name(parsed["family"].get<std::string>());
  if (!family) fail(ErrorCode::ParseError, "unknown generator family");
  spec.family = *family;
  auto read_int = [&](const char* name, int& into) {
    if (parsed.contains(name)) {
      if (!parsed[name].is_number_integer()) {
        fail(ErrorCode::ParseError, std::string(name) + " must be an integer");
      }
      into = parsed[name].get<int>();
    }
  };
  read_int("n", spec.n);
  read_int("rows", spec.rows);
  read_int("cols", spec.cols);
  read_int("radius", spec.radius);
  read_int("tris", spec.tri_count);
  read_int("density_num", spec.density_num);
  read_int("density_den", spec.density_den);
  read_int("attempts", spec.attempts);
  if (parsed.contains("class")) {
    auto cls = graph_class_from_name(parsed["class"].get<std::string>());
    if (!cls) fail(ErrorCode::ParseError, "unknown graph class");
    spec.filter_class = *cls;
  }
  if (parsed.contains("seed")) {
    if (!parsed["seed"].is_number_integer() && !parsed["seed"].is_number_unsigned()) {
      fail(ErrorCode::ParseError, "seed must be an integer");
    }
    spec.seed = parsed["seed"].get<std::uint64_t>();
  }
  return spec;
}

}  // namespace flagrec
