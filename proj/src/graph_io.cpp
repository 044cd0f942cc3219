#include "rtw/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "rtw/error.hpp"

namespace rtw {

nlohmann::json graph_to_json(const BitGraph& g, const VertexSet* left) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json j{{"n", g.n()}, {"edges", std::move(edges)}};
  if (left != nullptr) j["left"] = left->to_vector();
  return j;
}

GraphDocument graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw InputError("graph JSON needs a nonnegative integer field 'n'");
  const std::size_t n = j["n"].get<std::size_t>();
  GraphDocument doc{BitGraph(n), std::nullopt};
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("graph JSON 'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned())
        throw InputError("graph JSON edge must be a pair of vertex ids");
      doc.graph.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  }
  if (j.contains("left")) {
    if (!j["left"].is_array()) throw InputError("graph JSON 'left' must be an array");
    VertexSet left(n);
    for (const auto& v : j["left"]) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n)
        throw InputError("graph JSON 'left' holds an invalid vertex id");
      left.insert(v.get<Vertex>());
    }
    doc.left = std::move(left);
  }
  return doc;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(); }

GraphDocument read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  // Construction records nest the graph under "graph".
  if (j.is_object() && j.contains("graph") && !j.contains("n")) return graph_from_json(j["graph"]);
  return graph_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace rtw
