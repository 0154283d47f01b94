#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "icolor/composition.hpp"
#include "icolor/constructions.hpp"
#include "icolor/io.hpp"
#include "icolor/search.hpp"

using namespace icolor;
using nlohmann::ordered_json;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("expected a comma-separated integer list, got '" +
                                        s + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw std::invalid_argument("expected a comma-separated integer list, got '" +
                                        s + "'");
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

void emit(const ordered_json& j, const std::string& report_path) {
    if (report_path.empty())
        std::cout << json_file_text(j);
    else
        save_json(j, report_path);
}

ordered_json outcome_json(const SearchOutcome& o) {
    ordered_json j;
    switch (o.status) {
        case SearchStatus::Found: j["result"] = "found"; break;
        case SearchStatus::ProvenNone: j["result"] = "proven-none"; break;
        case SearchStatus::BudgetExhausted: j["result"] = "budget-exhausted"; break;
    }
    j["nodes_expanded"] = o.nodes_expanded;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "interval edge colorings of graphs and their lexicographic compositions"};
    app.require_subcommand(1);
    // --h is a real option below, so help lives on --help only
    app.set_help_flag("--help", "print help");
    auto add_subcommand = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->set_help_flag("--help", "print help");
        return s;
    };
    int rc = 0;

    // gen
    auto* gen = add_subcommand("gen", "generate a graph family member");
    std::string gen_family, gen_params, gen_out;
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--family", gen_family, "family name")->required();
    gen->add_option("--params", gen_params, "comma-separated parameters")->required();
    gen->add_option("--seed", gen_seed, "seed for random_tree");
    gen->add_option("--out", gen_out, "output graph file")->required();
    gen->callback([&] {
        Graph g = generate(gen_family, parse_int_list(gen_params), gen_seed);
        save_json(graph_to_json(g), gen_out);
    });

    // compose
    auto* comp = add_subcommand("compose", "lexicographic product G[H]");
    std::string comp_g, comp_h, comp_out;
    comp->add_option("--g", comp_g, "graph file for G")->required();
    comp->add_option("--h", comp_h, "graph file for H")->required();
    comp->add_option("--out", comp_out, "output graph file")->required();
    comp->callback([&] {
        Graph g = load_graph(comp_g), h = load_graph(comp_h);
        save_json(graph_to_json(compose(g, h)), comp_out);
    });

    // color
    auto* col = add_subcommand("color", "construct an interval coloring");
    std::string col_graph, col_strategy, col_lse, col_out;
    std::optional<int> col_t;
    int col_max_edges = 16;
    std::optional<long long> col_max_nodes;
    col->add_option("--graph", col_graph, "input graph file")->required();
    col->add_option("--strategy", col_strategy, "construction to apply")
        ->required()
        ->check(CLI::IsMember(
            {"tree", "kmn", "even-cycle", "regular", "knn-lse", "k2n-max", "search"}));
    col->add_option("--lse", col_lse, "prescribed lower spectral edge (knn-lse)");
    col->add_option("--t", col_t, "color count for the search strategy");
    col->add_option("--max-edges", col_max_edges, "search edge budget");
    col->add_option("--max-nodes", col_max_nodes, "search node budget");
    col->add_option("--out", col_out, "output coloring file")->required();
    col->callback([&] {
        Graph g = load_graph(col_graph);
        EdgeColoring c;
        if (col_strategy == "tree") {
            c = tree_continuous_use(g);
        } else if (col_strategy == "kmn") {
            c = complete_bipartite_color(g);
        } else if (col_strategy == "even-cycle") {
            c = even_cycle_color(g);
        } else if (col_strategy == "regular") {
            c = regular_delta_color(g);
        } else if (col_strategy == "knn-lse") {
            if (col_lse.empty())
                throw std::invalid_argument("knn-lse needs --lse \"a,b,c\"");
            c = knn_prescribed_lse(g, ColorSequence(parse_int_list(col_lse)));
        } else if (col_strategy == "k2n-max") {
            int nv = g.num_vertices();
            if (nv < 2 || nv % 2 != 0 || g.num_edges() != nv * (nv - 1) / 2)
                throw std::invalid_argument(
                    "k2n-max needs a complete graph of even order");
            c = EdgeColoring(g, search_k2n_theorem6(nv / 2).colors);
        } else {  // search
            SearchBudget b;
            b.max_edges = col_max_edges;
            b.max_nodes = col_max_nodes;
            SearchOutcome o;
            if (col_t) {
                o = find_interval_t(g, *col_t, b);
            } else {
                // no --t: first achievable t from Δ upward
                for (int t = std::max(g.max_degree(), 1); t <= g.num_edges(); ++t) {
                    o = find_interval_t(g, t, b);
                    if (o.status != SearchStatus::ProvenNone) break;
                }
            }
            if (o.status != SearchStatus::Found) {
                std::cout << json_file_text(outcome_json(o));
                rc = 3;
                return;
            }
            c = *o.coloring;
        }
        save_json(coloring_to_json(c), col_out);
        ordered_json report = certificate_to_json(verify_interval(c));
        report["strategy"] = col_strategy;
        report["written"] = col_out;
        std::cout << json_file_text(report);
    });

    // compose-color
    auto* cc = add_subcommand("compose-color",
                                  "composite interval coloring of G[H]");
    std::string cc_g, cc_gcol, cc_h, cc_hcol, cc_out;
    cc->add_option("--g", cc_g, "graph file for G")->required();
    cc->add_option("--gcol", cc_gcol, "interval coloring of G")->required();
    cc->add_option("--h", cc_h, "graph file for H")->required();
    cc->add_option("--hcol", cc_hcol,
                   "interval coloring of H with continuous USE (omit when H is "
                   "edgeless)");
    cc->add_option("--out", cc_out, "output coloring file")->required();
    cc->callback([&] {
        Graph g = load_graph(cc_g), h = load_graph(cc_h);
        EdgeColoring ag = load_coloring(cc_gcol);
        EdgeColoring ah = cc_hcol.empty() ? EdgeColoring(h, std::vector<int>(h.num_edges(), 0))
                                          : load_coloring(cc_hcol);
        if (cc_hcol.empty() && h.num_edges() != 0)
            throw std::invalid_argument("--hcol required unless H is edgeless");
        EdgeColoring out = compose_coloring(g, ag, h, ah);
        save_json(coloring_to_json(out), cc_out);
        std::cout << json_file_text(certificate_to_json(verify_interval(out)));
    });

    // verify
    auto* ver = add_subcommand("verify", "check the interval property");
    std::string ver_col, ver_report;
    ver->add_option("--coloring", ver_col, "coloring file")->required();
    ver->add_option("--report", ver_report, "write the report here instead of stdout");
    ver->callback([&] {
        IntervalCertificate cert = verify_interval(load_coloring(ver_col));
        emit(certificate_to_json(cert), ver_report);
        if (!cert.valid) rc = 2;
    });

    // spectra
    auto* spec = add_subcommand("spectra", "per-vertex spectra and LSE/USE");
    std::string spec_col, spec_subset;
    spec->add_option("--coloring", spec_col, "coloring file")->required();
    spec->add_option("--subset", spec_subset, "vertex subset, e.g. \"0,1,2\"");
    spec->callback([&] {
        EdgeColoring c = load_coloring(spec_col);
        std::vector<int> verts;
        if (spec_subset.empty()) {
            verts.resize(c.graph.num_vertices());
            for (int v = 0; v < c.graph.num_vertices(); ++v) verts[v] = v;
        } else {
            verts = parse_int_list(spec_subset);
        }
        SpectrumTable table = spectra(c);
        ordered_json j;
        ordered_json per = ordered_json::object();
        for (int v : verts) {
            if (v < 0 || v >= c.graph.num_vertices())
                throw std::invalid_argument("subset vertex out of range");
            per[std::to_string(v)] = table.at(v);
        }
        j["spectra"] = std::move(per);
        j["lse"] = lse(c, verts).values();
        j["use"] = use(c, verts).values();
        std::cout << json_file_text(j);
    });

    // bounds
    auto* bnd = add_subcommand("bounds", "exact w(G), W(G) and achievable t set");
    std::string bnd_graph;
    int bnd_max_edges = 16;
    std::optional<long long> bnd_max_nodes;
    std::optional<double> bnd_time;
    bnd->add_option("--graph", bnd_graph, "input graph file")->required();
    bnd->add_option("--max-edges", bnd_max_edges, "edge budget");
    bnd->add_option("--max-nodes", bnd_max_nodes, "node budget");
    bnd->add_option("--time-limit", bnd_time, "seconds");
    bnd->callback([&] {
        SearchBudget b;
        b.max_edges = bnd_max_edges;
        b.max_nodes = bnd_max_nodes;
        b.time_limit_seconds = bnd_time;
        BoundsResult r = bounds(load_graph(bnd_graph), b);
        ordered_json j;
        j["interval_colorable"] = r.interval_colorable;
        j["w"] = r.w;
        j["W"] = r.W;
        j["achievable"] = r.achievable;
        j["complete"] = r.complete;
        j["nodes_expanded"] = r.nodes_expanded;
        std::cout << json_file_text(j);
        if (!r.complete) rc = 3;
    });

    // search
    auto* sea = add_subcommand("search", "exhaustive coloring search");
    std::string sea_graph, sea_out;
    std::optional<int> sea_t;
    bool sea_cont = false;
    int sea_max_edges = 16;
    std::optional<long long> sea_max_nodes;
    std::optional<double> sea_time;
    sea->add_option("--graph", sea_graph, "input graph file")->required();
    sea->add_option("--t", sea_t, "look for an interval t-coloring");
    sea->add_flag("--continuous-use", sea_cont,
                  "look for an interval coloring with continuous USE");
    sea->add_option("--out", sea_out, "write the witness coloring here");
    sea->add_option("--max-edges", sea_max_edges, "edge budget");
    sea->add_option("--max-nodes", sea_max_nodes, "node budget");
    sea->add_option("--time-limit", sea_time, "seconds");
    sea->callback([&] {
        if (!sea_t && !sea_cont)
            throw std::invalid_argument("search needs --t or --continuous-use");
        SearchBudget b;
        b.max_edges = sea_max_edges;
        b.max_nodes = sea_max_nodes;
        b.time_limit_seconds = sea_time;
        Graph g = load_graph(sea_graph);
        SearchOutcome o =
            sea_cont ? find_continuous_use(g, b) : find_interval_t(g, *sea_t, b);
        ordered_json j = outcome_json(o);
        if (o.status == SearchStatus::Found) {
            j["t"] = verify_interval(*o.coloring).t;
            if (!sea_out.empty()) save_json(coloring_to_json(*o.coloring), sea_out);
        } else {
            rc = 3;
        }
        std::cout << json_file_text(j);
    });

    // export-dot
    auto* dot = add_subcommand("export-dot", "Graphviz export with color labels");
    std::string dot_col, dot_out;
    dot->add_option("--coloring", dot_col, "coloring file")->required();
    dot->add_option("--out", dot_out, "output .dot file")->required();
    dot->callback([&] {
        std::ofstream out(dot_out);
        if (!out) throw std::invalid_argument("cannot write file: " + dot_out);
        out << export_dot(load_coloring(dot_col));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
