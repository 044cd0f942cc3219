#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rtw/graph.hpp"

namespace rtw {

/// A graph as read from or written to the canonical JSON form: `n`,
/// `edges` (sorted pairs, lexicographic), and an optional `left` side
/// whose complement is the right side.
struct GraphDocument {
  BitGraph graph;
  std::optional<VertexSet> left;
};

nlohmann::json graph_to_json(const BitGraph& g, const VertexSet* left = nullptr);
GraphDocument graph_from_json(const nlohmann::json& j);

/// Compact, byte-deterministic serialization.
std::string dump_canonical(const nlohmann::json& j);

GraphDocument read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rtw
