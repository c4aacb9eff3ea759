#include "reconforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "reconforge/errors.hpp"

namespace reconforge {

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    json loops = json::array();
    for (int v : g.loop_vertices()) loops.push_back(v);
    j["loops"] = std::move(loops);
    json labels = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
    if (!labels.empty()) j["labels"] = std::move(labels);
    return j;
}

Graph graph_from_json(const json& j) {
    try {
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.value("edges", json::array())) {
            if (!e.is_array() || e.size() != 2)
                throw malformed_input_error("graph json: edge entries must be pairs");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        for (const auto& v : j.value("loops", json::array()))
            g.add_edge(v.get<int>(), v.get<int>());
        if (j.contains("labels"))
            for (const auto& [key, value] : j.at("labels").items())
                g.set_label(std::stoi(key), value.get<std::string>());
        return g;
    } catch (const json::exception& e) {
        throw malformed_input_error(std::string("graph json: ") + e.what());
    }
}

json embedding_to_json(const Embedding& e) {
    json j;
    json rot = json::object();
    for (std::size_t v = 0; v < e.rotations.size(); ++v) rot[std::to_string(v)] = e.rotations[v];
    j["rotations"] = std::move(rot);
    if (!e.negative_edges.empty()) {
        json signs = json::array();
        for (const auto& [u, v] : e.negative_edges) signs.push_back({u, v, -1});
        j["signs"] = std::move(signs);
    }
    return j;
}

Embedding embedding_from_json(const json& j, const Graph& g) {
    Embedding e;
    e.rotations.resize(g.vertex_count());
    try {
        for (const auto& [key, value] : j.at("rotations").items()) {
            const int v = std::stoi(key);
            g.check_vertex(v, "embedding json");
            e.rotations[v] = value.get<std::vector<int>>();
        }
        for (const auto& s : j.value("signs", json::array())) {
            if (!s.is_array() || s.size() != 3)
                throw malformed_input_error("embedding json: sign entries must be triples");
            if (s[2].get<int>() == -1) {
                int u = s[0].get<int>(), v = s[1].get<int>();
                e.negative_edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
    } catch (const json::exception& ex) {
        throw malformed_input_error(std::string("embedding json: ") + ex.what());
    }
    check_embedding(g, e);
    return e;
}

json colouring_to_json(const Colouring& c) { return json(c); }

Colouring colouring_from_json(const json& j) {
    try {
        return j.get<Colouring>();
    } catch (const json::exception& e) {
        throw malformed_input_error(std::string("colouring json: ") + e.what());
    }
}

json witness_to_json(const Witness& w) {
    json j;
    j["steps"] = json::array();
    for (const auto& s : w.steps) j["steps"].push_back(s);
    return j;
}

Witness witness_from_json(const json& j) {
    try {
        Witness w;
        const json& steps = j.is_array() ? j : j.at("steps");
        for (const auto& s : steps) w.steps.push_back(s.get<Colouring>());
        return w;
    } catch (const json::exception& e) {
        throw malformed_input_error(std::string("witness json: ") + e.what());
    }
}

json report_to_json(const ValidationReport& r) {
    json j;
    j["checks"] = json::array();
    for (const auto& [name, ok] : r.checks) j["checks"].push_back({{"name", name}, {"ok", ok}});
    j["notes"] = r.notes;
    j["all_passed"] = r.all_passed();
    return j;
}

json gadget_to_json(const PatternGadget& g) {
    json j;
    j["kind"] = g.kind;
    j["rule"] = to_string(g.rule);
    j["graph"] = graph_to_json(g.graph);
    j["host"] = graph_to_json(g.host);
    j["signals"] = g.signals;
    j["patterns"] = g.patterns;
    json canon = json::array();
    for (const auto& [p, col] : g.canonical)
        canon.push_back({{"pattern", p}, {"colouring", col}});
    j["canonical"] = std::move(canon);
    if (!g.phi_pairs.empty()) {
        json pairs = json::array();
        for (const auto& [a, b] : g.phi_pairs) pairs.push_back({a, b});
        j["phi_path"] = std::move(pairs);
    }
    if (!g.provenance.empty()) j["provenance"] = g.provenance;
    return j;
}

PatternGadget gadget_from_json(const json& j) {
    try {
        PatternGadget g;
        g.kind = j.value("kind", "");
        g.rule = j.value("rule", "irreflexive") == std::string("reflexive")
                     ? MoveRule::Reflexive
                     : MoveRule::Irreflexive;
        g.graph = graph_from_json(j.at("graph"));
        g.host = graph_from_json(j.at("host"));
        g.signals = j.at("signals").get<std::vector<int>>();
        g.patterns = j.at("patterns").get<std::vector<std::vector<int>>>();
        std::sort(g.patterns.begin(), g.patterns.end());
        for (const auto& entry : j.at("canonical"))
            g.canonical[entry.at("pattern").get<std::vector<int>>()] =
                entry.at("colouring").get<Colouring>();
        for (const auto& p : j.value("phi_path", json::array()))
            g.phi_pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
        g.provenance = j.value("provenance", "");
        return g;
    } catch (const json::exception& e) {
        throw malformed_input_error(std::string("gadget json: ") + e.what());
    }
}

json reach_to_json(const ReachResult& r) {
    json j;
    j["status"] = to_string(r.status);
    j["states_explored"] = r.states_explored;
    j["cap"] = r.cap;
    if (r.witness) j["witness"] = witness_to_json(*r.witness);
    return j;
}

std::string graph_to_dot(const Graph& g, const std::vector<int>& highlight) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v << " [label=\""
            << (g.label(v).empty() ? std::to_string(v) : g.label(v)) << "\"";
        if (std::find(highlight.begin(), highlight.end(), v) != highlight.end())
            out << ", shape=doublecircle";
        out << "];\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    for (int v : g.loop_vertices()) out << "  v" << v << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw malformed_input_error("cannot open file: " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw malformed_input_error("cannot parse " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw malformed_input_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace reconforge
