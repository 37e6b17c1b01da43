#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gkm/gkm_graph.hpp"

namespace gkm {

/// On-disk form of a graph:
///
///   { "rank": 2, "valence": 3,
///     "vertices": [ {"id": "A", "mu": ["0", "1/2"]}, ... ],
///     "edges": [ {"from": "A", "to": "B", "weight": ["1", "0"]}, ... ],
///     "xi": ["1", "3"] }
///
/// Rationals are strings "a/b" (or "a"); plain JSON integers are also accepted.
/// Edge weights are read from the `from` endpoint. `xi` is optional.
struct GraphDocument {
  std::size_t rank = 0;
  std::size_t valence = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::optional<WeightVector> xi;
};

/// Throws Error(ParseError) with a byte offset for malformed JSON or a JSON
/// pointer for schema violations.
GraphDocument parse_document(std::string_view text);

/// Pretty-printed, canonical rationals, trailing newline.
std::string serialize(const GraphDocument& doc);

GraphDocument document_of(const GkmGraph& g, std::optional<WeightVector> xi = std::nullopt);

struct LoadedGraph {
  std::shared_ptr<const GkmGraph> graph;
  std::optional<WeightVector> xi;
};

/// Builds and validates. Structural and GKM failures alike are reported as
/// Error(ValidationError) carrying the report text.
LoadedGraph build_graph(const GraphDocument& doc);

LoadedGraph load_graph_text(std::string_view text);
/// Throws Error(InvalidArgument) if the file cannot be read.
LoadedGraph load_graph(const std::filesystem::path& path);

/// Parses "a/b,c/d" into a weight vector.
WeightVector parse_weight_list(std::string_view text);

}  // namespace gkm
