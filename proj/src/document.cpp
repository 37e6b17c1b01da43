#include "gkm/document.hpp"

#include <fstream>
#include <sstream>

#include "gkm/error.hpp"
#include "json.hpp"

namespace gkm {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const json& member(const json& obj, const std::string& pointer, const char* key) {
  if (!obj.is_object()) schema_error(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(pointer, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t read_count(const json& v, const std::string& pointer) {
  if (!v.is_number_unsigned()) schema_error(pointer, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::string read_string(const json& v, const std::string& pointer) {
  if (!v.is_string()) schema_error(pointer, "expected a string");
  return v.get<std::string>();
}

Rational read_rational(const json& v, const std::string& pointer) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) schema_error(pointer, "expected a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    schema_error(pointer, e.what());
  }
}

WeightVector read_vector(const json& v, const std::string& pointer) {
  if (!v.is_array()) schema_error(pointer, "expected an array of rationals");
  WeightVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = read_rational(v[i], pointer + "/" + std::to_string(i));
  return out;
}

json write_vector(const WeightVector& w) {
  json out = json::array();
  for (const auto& c : w.components()) out.push_back(c.to_string());
  return out;
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  GraphDocument doc;
  doc.rank = read_count(member(root, "", "rank"), "/rank");
  doc.valence = read_count(member(root, "", "valence"), "/valence");

  const json& vertices = member(root, "", "vertices");
  if (!vertices.is_array()) schema_error("/vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = "/vertices/" + std::to_string(i);
    doc.vertices.push_back(
        Vertex{read_string(member(vertices[i], at, "id"), at + "/id"), read_vector(member(vertices[i], at, "mu"), at + "/mu")});
  }

  const json& edges = member(root, "", "edges");
  if (!edges.is_array()) schema_error("/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = "/edges/" + std::to_string(i);
    doc.edges.push_back(Edge{read_string(member(edges[i], at, "from"), at + "/from"),
                             read_string(member(edges[i], at, "to"), at + "/to"),
                             read_vector(member(edges[i], at, "weight"), at + "/weight")});
  }

  if (auto it = root.find("xi"); it != root.end() && !it->is_null()) doc.xi = read_vector(*it, "/xi");
  return doc;
}

std::string serialize(const GraphDocument& doc) {
  json root;
  root["rank"] = doc.rank;
  root["valence"] = doc.valence;
  root["vertices"] = json::array();
  for (const auto& v : doc.vertices) root["vertices"].push_back({{"id", v.id}, {"mu", write_vector(v.mu)}});
  root["edges"] = json::array();
  for (const auto& e : doc.edges) {
    root["edges"].push_back({{"from", e.first}, {"to", e.second}, {"weight", write_vector(e.weight_from_first)}});
  }
  if (doc.xi) root["xi"] = write_vector(*doc.xi);
  return root.dump(2) + "\n";
}

GraphDocument document_of(const GkmGraph& g, std::optional<WeightVector> xi) {
  return GraphDocument{g.rank(), g.valence(), g.vertices(), g.edges(), std::move(xi)};
}

LoadedGraph build_graph(const GraphDocument& doc) {
  std::shared_ptr<const GkmGraph> graph;
  try {
    graph = std::make_shared<const GkmGraph>(doc.rank, doc.valence, doc.vertices, doc.edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, std::string("structure: ") + e.what());
  }
  const ValidationReport report = validate(*graph);
  if (!report.ok()) throw Error(ErrorKind::ValidationError, report.to_string());
  if (doc.xi && doc.xi->rank() != doc.rank) throw Error(ErrorKind::ValidationError, "xi has the wrong rank");
  return LoadedGraph{graph, doc.xi};
}

LoadedGraph load_graph_text(std::string_view text) { return build_graph(parse_document(text)); }

LoadedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph_text(buf.str());
}

WeightVector parse_weight_list(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  WeightVector out(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) out[i] = parts[i];
  return out;
}

}  // namespace gkm
