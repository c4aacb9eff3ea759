#ifndef RECONFORGE_JSON_IO_HPP
#define RECONFORGE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "reconforge/embedding.hpp"
#include "reconforge/gadget.hpp"
#include "reconforge/graph.hpp"
#include "reconforge/oracle.hpp"
#include "reconforge/surface.hpp"

namespace reconforge {

using json = nlohmann::json;

/// Shared graph format: { "n": int, "edges": [[u,v],...], "loops": [v,...],
/// "labels": {"id": "name"}? }. Loops may also appear as [v,v] edges; the
/// loader normalizes. Throws malformed_input_error on schema violations.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// Embedding format: { "rotations": {"v": [neighbours...]},
/// "signs": [[u,v,s],...]? }; absent signs mean orientable.
json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const json& j, const Graph& g);

json colouring_to_json(const Colouring& c);
Colouring colouring_from_json(const json& j);

json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);

json report_to_json(const ValidationReport& r);

json gadget_to_json(const PatternGadget& g);
PatternGadget gadget_from_json(const json& j);

json reach_to_json(const ReachResult& r);

/// DOT emitter for eyeballing graphs and gadgets.
std::string graph_to_dot(const Graph& g, const std::vector<int>& highlight = {});

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace reconforge

#endif
