#include "dmtree/document.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "dmtree/error.hpp"

namespace dmtree {

namespace {

using Json = nlohmann::ordered_json;

std::optional<double> read_value(const Json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number()) throw Error(ErrorCode::ParseError, where + ": value must be a number or null");
  return j.get<double>();
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!root.is_object()) throw Error(ErrorCode::ParseError, "document must be an object");
  if (!root.contains("vertices") || !root["vertices"].is_object()) {
    throw Error(ErrorCode::ParseError, "document needs a 'vertices' object");
  }
  if (root.contains("edges") && !root["edges"].is_array()) {
    throw Error(ErrorCode::ParseError, "'edges' must be an array");
  }

  InputDocument doc;
  for (const auto& [name, value] : root["vertices"].items()) {
    doc.vertices.push_back(name);
    doc.vertex_values.push_back(read_value(value, "vertex '" + name + "'"));
  }
  if (root.contains("edges")) {
    std::size_t index = 0;
    for (const Json& edge : root["edges"]) {
      const std::string where = "edge #" + std::to_string(index++);
      if (!edge.is_array() || edge.size() < 2 || edge.size() > 3 || !edge[0].is_string() ||
          !edge[1].is_string()) {
        throw Error(ErrorCode::ParseError, where + ": expected [u, v, value]");
      }
      doc.edges.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
      doc.edge_values.push_back(edge.size() == 3 ? read_value(edge[2], where) : std::nullopt);
    }
  }
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

SimplicialTree document_tree(const InputDocument& doc) { return SimplicialTree::build(doc.vertices, doc.edges); }

MorseFunction document_function(const InputDocument& doc) {
  auto tree = std::make_shared<const SimplicialTree>(document_tree(doc));
  std::vector<double> vertex_values;
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    if (!doc.vertex_values[i]) throw Error(ErrorCode::MissingValue, "vertex '" + doc.vertices[i] + "' has no value");
    vertex_values.push_back(*doc.vertex_values[i]);
  }
  std::vector<double> edge_values(tree->edge_count());
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const auto& [u, v] = doc.edges[i];
    if (!doc.edge_values[i]) throw Error(ErrorCode::MissingValue, "edge (" + u + ", " + v + ") has no value");
    // The tree keeps document edge order.
    edge_values[i] = *doc.edge_values[i];
  }
  return MorseFunction::validate(std::move(tree), std::move(vertex_values), std::move(edge_values));
}

std::string write_document(const MorseFunction& f) {
  const SimplicialTree& tree = f.domain();
  const auto number = [](double x) -> Json {
    if (x == std::trunc(x) && std::abs(x) < 9.0e15) return static_cast<long long>(x);
    return x;
  };
  Json doc;
  doc["vertices"] = Json::object();
  for (VertexId v = 0; v < tree.vertex_count(); ++v) doc["vertices"][tree.name(v)] = number(f.vertex_value(v));
  doc["edges"] = Json::array();
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    const Edge& edge = tree.edge(e);
    doc["edges"].push_back(Json::array({tree.name(edge.lo), tree.name(edge.hi), number(f.edge_value(e))}));
  }
  return doc.dump(2) + "\n";
}

}  // namespace dmtree
