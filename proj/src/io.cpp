#include "icolor/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace icolor {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["name"] = g.name();
    j["num_vertices"] = g.num_vertices();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph json: expected an object");
    std::string name = j.value("name", std::string{});
    if (!j.contains("num_vertices") || !j["num_vertices"].is_number_integer())
        throw std::invalid_argument("graph json: missing integer 'num_vertices'");
    int n = j["num_vertices"].get<int>();
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph json: missing array 'edges'");
    std::vector<Edge> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw std::invalid_argument("graph json: each edge must be [u, v]");
        edges.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return Graph(std::move(name), n, std::move(edges));
}

nlohmann::ordered_json coloring_to_json(const EdgeColoring& c) {
    ordered_json j;
    j["graph"] = graph_to_json(c.graph);
    j["colors"] = c.colors;
    return j;
}

EdgeColoring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("colors") ||
        !j["colors"].is_array())
        throw std::invalid_argument(
            "coloring json: expected {\"graph\": ..., \"colors\": [...]}");
    Graph g = graph_from_json(j["graph"]);
    std::vector<int> colors;
    for (const auto& item : j["colors"]) {
        if (!item.is_number_integer())
            throw std::invalid_argument("coloring json: colors must be integers");
        int c = item.get<int>();
        if (c < 1) throw std::invalid_argument("coloring json: colors must be >= 1");
        colors.push_back(c);
    }
    return EdgeColoring(std::move(g), std::move(colors));
}

nlohmann::ordered_json certificate_to_json(const IntervalCertificate& cert) {
    ordered_json j;
    j["valid"] = cert.valid;
    j["t"] = cert.t;
    j["violations"] = cert.violations;
    ordered_json spect = ordered_json::object();
    for (size_t v = 0; v < cert.windows.size(); ++v)
        spect[std::to_string(v)] = {cert.windows[v].first, cert.windows[v].second};
    j["spectra"] = std::move(spect);
    return j;
}

std::string json_file_text(const ordered_json& j) { return j.dump(2) + "\n"; }

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("parse error in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

Graph load_graph(const std::string& path) { return graph_from_json(parse_file(path)); }

EdgeColoring load_coloring(const std::string& path) {
    return coloring_from_json(parse_file(path));
}

void save_json(const ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << json_file_text(j);
}

std::string export_dot(const EdgeColoring& c) {
    std::ostringstream out;
    out << "graph \"" << c.graph.name() << "\" {\n";
    for (int v = 0; v < c.graph.num_vertices(); ++v)
        if (c.graph.degree(v) == 0) out << "  " << v << ";\n";
    for (int e = 0; e < c.graph.num_edges(); ++e)
        out << "  " << c.graph.edge(e).u << " -- " << c.graph.edge(e).v << " [label=\""
            << c.colors[e] << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace icolor
