#pragma once

#include <string>

#include <json.hpp>

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"

namespace icolor {

// Graph file: {"name": string, "num_vertices": int, "edges": [[u,v],...]}.
// The writer emits the canonical form; the parser accepts non-canonical
// edge lists and canonicalizes.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Coloring file: {"graph": <graph>, "colors": [int,...]} parallel to the
// canonical edge order.
nlohmann::ordered_json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

// Certificate report: {"valid", "t", "violations", "spectra": {v: [min,max]}}.
nlohmann::ordered_json certificate_to_json(const IntervalCertificate& cert);

Graph load_graph(const std::string& path);
EdgeColoring load_coloring(const std::string& path);
void save_json(const nlohmann::ordered_json& j, const std::string& path);
std::string json_file_text(const nlohmann::ordered_json& j);

// Graphviz export: one line per edge with label="<color>", vertices named
// by their ids, canonical edge order.
std::string export_dot(const EdgeColoring& c);

}  // namespace icolor
