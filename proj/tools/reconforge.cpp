// reconforge - structural validators, a Hom-graph reachability oracle,
// pattern-gadget compilers and the K4-recolouring reduction, over shared
// JSON formats.
//
// Exit codes: 0 success/affirmative, 1 negative result, 2 usage or malformed
// input, 3 state cap exceeded. Machine output on stdout, diagnostics on
// stderr.

#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "reconforge/errors.hpp"
#include "reconforge/gadget.hpp"
#include "reconforge/gadget_reflexive.hpp"
#include "reconforge/generators.hpp"
#include "reconforge/json_io.hpp"
#include "reconforge/oracle.hpp"
#include "reconforge/reduction.hpp"
#include "reconforge/surface.hpp"
#include "reconforge/transforms.hpp"

namespace rf = reconforge;
using rf::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

std::uint64_t cap_from_env() {
    if (const char* env = std::getenv("RECONFORGE_CAP")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw rf::malformed_input_error("RECONFORGE_CAP is not a number");
        }
    }
    return rf::default_state_cap;
}

rf::MoveRule parse_rule(const std::string& s) {
    if (s == "irreflexive") return rf::MoveRule::Irreflexive;
    if (s == "reflexive") return rf::MoveRule::Reflexive;
    throw rf::malformed_input_error("unknown rule '" + s + "'");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct GraphWithEmbedding {
    rf::Graph graph;
    rf::Embedding embedding;
};

GraphWithEmbedding load_pair(const std::string& graph_path, const std::string& emb_path) {
    GraphWithEmbedding out;
    out.graph = rf::graph_from_json(rf::load_json_file(graph_path));
    out.embedding = rf::embedding_from_json(rf::load_json_file(emb_path), out.graph);
    return out;
}

std::pair<rf::Graph, rf::Embedding> generate_named(const std::string& name, int k, int levels,
                                                   const std::string& surface) {
    const bool pp = surface == "pp";
    if (name == "cube") return rf::cube();
    if (name == "k23") return rf::k23_planar();
    if (name == "octahedron") return rf::octahedron();
    if (name == "icosahedron") return rf::icosahedron();
    if (name == "reflexive-octahedron") return rf::reflexive_octahedron();
    if (name == "reflexive-icosahedron") return rf::reflexive_icosahedron();
    if (name == "reflexive-triangle") return rf::reflexive_triangle();
    if (name == "grotzsch") return rf::grotzsch();
    if (name == "cycle") return pp ? rf::cycle_pp(k) : rf::cycle_planar(k);
    if (name == "wheel") {
        if (pp) return rf::wheel_pp(k);
        return {rf::wheel(k), rf::Embedding{}};
    }
    if (name == "mycielski") {
        if (pp) return rf::generalized_mycielski_pp(k, levels);
        return {rf::generalized_mycielski(k, levels), rf::Embedding{}};
    }
    if (name == "complete") return {rf::complete_graph(k), rf::Embedding{}};
    if (name == "path") return {rf::path_graph(k), rf::Embedding{}};
    throw rf::malformed_input_error("unknown generator '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-homomorphism reconfiguration toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::uint64_t cap = 0; // resolved after parsing (flag > env > default)
    bool cap_set = false;
    app.add_option("--cap", cap, "state cap for oracle searches")->each([&](const std::string&) {
        cap_set = true;
    });
    std::string rule_name = "irreflexive";
    app.add_option("--rule", rule_name, "move rule: irreflexive|reflexive")
        ->check(CLI::IsMember({"irreflexive", "reflexive"}));
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for randomized subcommands");

    // validate
    auto* validate = app.add_subcommand("validate", "run a structural validator");
    std::string val_kind, val_graph, val_emb;
    validate->add_option("--kind", val_kind, "sphere-quad|pp-quad|reflexive-tri")->required();
    validate->add_option("graph", val_graph)->required();
    validate->add_option("embedding", val_emb)->required();

    // generate
    auto* generate = app.add_subcommand("generate", "emit a corpus graph (+ embedding)");
    std::string gen_name, gen_surface = "sphere", gen_out, gen_emb_out, gen_dot;
    int gen_k = 5, gen_levels = 1;
    generate->add_option("name", gen_name,
                         "cube|k23|octahedron|icosahedron|reflexive-octahedron|"
                         "reflexive-icosahedron|reflexive-triangle|grotzsch|cycle|wheel|"
                         "mycielski|complete|path")
        ->required();
    generate->add_option("-k,--size", gen_k, "cycle length / wheel rim / clique size");
    generate->add_option("--levels", gen_levels, "mycielski levels (0..3)");
    generate->add_option("--surface", gen_surface, "sphere|pp")
        ->check(CLI::IsMember({"sphere", "pp"}));
    generate->add_option("-o,--out", gen_out, "graph output file (default stdout)");
    generate->add_option("--emb-out", gen_emb_out, "embedding output file");
    generate->add_option("--dot", gen_dot, "also write a DOT rendering here");

    // transform
    auto* transform = app.add_subcommand("transform", "double-cover / pp-lift / retraction / xK2");
    std::string tr_what, tr_graph, tr_emb, tr_col, tr_out, tr_emb_out;
    int tr_k = 6;
    transform->add_option("what", tr_what,
                          "double-cover|pp-lift|wheel-retraction|lift-colouring|project-colouring")
        ->required();
    transform->add_option("--graph", tr_graph);
    transform->add_option("--embedding", tr_emb);
    transform->add_option("--colouring", tr_col);
    transform->add_option("-k,--size", tr_k, "wheel size for wheel-retraction");
    transform->add_option("-o,--out", tr_out, "primary output file (default stdout)");
    transform->add_option("--emb-out", tr_emb_out, "embedding output file");

    // compile-gadget
    auto* compile_g = app.add_subcommand("compile-gadget", "build a pattern gadget");
    std::string cg_kind, cg_graph, cg_emb, cg_out, cg_dot;
    std::vector<int> cg_params;
    int cg_zero = 0;
    compile_g->add_option("--kind", cg_kind,
                          "nbo-quad|naz-quad|nbo-reflexive|naz-reflexive|listable-edge")
        ->required();
    compile_g->add_option("--host", cg_graph)->required();
    compile_g->add_option("--embedding", cg_emb)->required();
    compile_g->add_option("--params", cg_params,
                          "nbo-quad: a0 a1 b0 b1; listable-edge: u v; nbo-reflexive: i "
                          "(0=Loop01, i>=1 ToBetaI(i), -i ToBetaIPlus1(i))");
    compile_g->add_option("--zero", cg_zero, "centre vertex for reflexive kinds");
    compile_g->add_option("-o,--out", cg_out, "gadget output file (default stdout)");
    compile_g->add_option("--dot", cg_dot, "also write a DOT rendering here");

    // verify-gadget
    auto* verify_g = app.add_subcommand("verify-gadget", "certify gadget conditions (a)(b)(c)");
    std::string vg_file;
    verify_g->add_option("gadget", vg_file)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "reachability between two colourings");
    std::string v_g, v_h, v_f, v_gcol;
    verify->add_option("G", v_g)->required();
    verify->add_option("H", v_h)->required();
    verify->add_option("f", v_f)->required();
    verify->add_option("g", v_gcol)->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "compile a K4-recolouring instance");
    std::string rd_g, rd_f, rd_gcol, rd_host, rd_emb, rd_dir;
    int rd_zero = 0;
    reduce->add_option("--graph", rd_g)->required();
    reduce->add_option("--f", rd_f)->required();
    reduce->add_option("--g", rd_gcol)->required();
    reduce->add_option("--host", rd_host)->required();
    reduce->add_option("--embedding", rd_emb)->required();
    reduce->add_option("--zero", rd_zero, "centre vertex for the reflexive host kit");
    reduce->add_option("--out-dir", rd_dir, "bundle directory")->required();
    std::uint64_t rd_walk = 0;
    reduce->add_option("--walk-steps", rd_walk,
                       "after compiling, run a seeded random walk of this many steps over "
                       "Hom(G',H) from f' and check every state projects into the component "
                       "of f");

    // lift
    auto* lift = app.add_subcommand("lift", "lift a K4 witness through a bundle");
    std::string lf_dir, lf_witness, lf_out;
    lift->add_option("--bundle", lf_dir)->required();
    lift->add_option("--witness", lf_witness)->required();
    lift->add_option("-o,--out", lf_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (!cap_set) cap = cap_from_env();
        const rf::MoveRule rule = parse_rule(rule_name);

        if (*validate) {
            auto in = load_pair(val_graph, val_emb);
            rf::ValidationReport rep;
            if (val_kind == "sphere-quad")
                rep = rf::validate_sphere_quadrangulation(in.graph, in.embedding);
            else if (val_kind == "pp-quad")
                rep = rf::validate_pp_quadrangulation(in.graph, in.embedding);
            else if (val_kind == "reflexive-tri")
                rep = rf::validate_reflexive_triangulation(in.graph, in.embedding);
            else
                throw rf::malformed_input_error("unknown validator kind '" + val_kind + "'");
            emit(rf::report_to_json(rep));
            return rep.all_passed() ? exit_ok : exit_negative;
        }

        if (*generate) {
            auto [g, e] = generate_named(gen_name, gen_k, gen_levels, gen_surface);
            const json gj = rf::graph_to_json(g);
            if (gen_out.empty()) emit(gj);
            else rf::save_json_file(gen_out, gj);
            if (!gen_emb_out.empty()) {
                if (e.rotations.empty())
                    throw rf::malformed_input_error("generator '" + gen_name +
                                                    "' has no canonical embedding");
                rf::save_json_file(gen_emb_out, rf::embedding_to_json(e));
            }
            if (!gen_dot.empty()) {
                std::ofstream dot(gen_dot);
                dot << rf::graph_to_dot(g);
            }
            return exit_ok;
        }

        if (*transform) {
            if (tr_what == "double-cover") {
                auto g = rf::graph_from_json(rf::load_json_file(tr_graph));
                const json out = rf::graph_to_json(rf::double_cover(g));
                if (tr_out.empty()) emit(out);
                else rf::save_json_file(tr_out, out);
                return exit_ok;
            }
            if (tr_what == "pp-lift") {
                auto in = load_pair(tr_graph, tr_emb);
                rf::PpLift lifted = rf::pp_lift(in.graph, in.embedding);
                json out;
                out["graph"] = rf::graph_to_json(lifted.graph);
                out["iso_to_double_cover"] = lifted.iso_to_double_cover;
                if (tr_out.empty()) emit(out);
                else rf::save_json_file(tr_out, rf::graph_to_json(lifted.graph));
                if (!tr_emb_out.empty())
                    rf::save_json_file(tr_emb_out, rf::embedding_to_json(lifted.embedding));
                return exit_ok;
            }
            if (tr_what == "wheel-retraction") {
                rf::WheelRetraction wr = rf::wheel_retraction(tr_k);
                json out;
                out["product"] = rf::graph_to_json(wr.product);
                out["h_vertices"] = wr.h_vertices;
                out["phi"] = wr.phi;
                out["h_graph"] = rf::graph_to_json(wr.h_graph);
                out["h_embedding"] = rf::embedding_to_json(wr.h_embedding);
                if (tr_out.empty()) emit(out);
                else rf::save_json_file(tr_out, out);
                return exit_ok;
            }
            if (tr_what == "lift-colouring") {
                auto g = rf::graph_from_json(rf::load_json_file(tr_graph));
                auto col = rf::colouring_from_json(rf::load_json_file(tr_col));
                emit(rf::colouring_to_json(rf::lift_to_cover(g, col)));
                return exit_ok;
            }
            if (tr_what == "project-colouring") {
                auto col = rf::colouring_from_json(rf::load_json_file(tr_col));
                emit(rf::colouring_to_json(rf::project_from_cover(col)));
                return exit_ok;
            }
            throw rf::malformed_input_error("unknown transform '" + tr_what + "'");
        }

        if (*compile_g) {
            auto in = load_pair(cg_graph, cg_emb);
            rf::PatternGadget g;
            if (cg_kind == "nbo-quad") {
                if (cg_params.size() != 4)
                    throw rf::malformed_input_error("nbo-quad needs --params a0 a1 b0 b1");
                g = rf::build_nbo_quad(in.graph, in.embedding, cg_params[0], cg_params[1],
                                       cg_params[2], cg_params[3]);
            } else if (cg_kind == "naz-quad") {
                g = rf::build_naz_quad(in.graph, in.embedding,
                                       rf::find_anchor(in.graph, in.embedding));
            } else if (cg_kind == "listable-edge") {
                if (cg_params.size() != 2)
                    throw rf::malformed_input_error("listable-edge needs --params u v");
                g = rf::build_listable_edge_gadget(in.graph, in.embedding, cg_params[0],
                                                   cg_params[1]);
            } else if (cg_kind == "nbo-reflexive" || cg_kind == "naz-reflexive") {
                std::vector<int> all(in.graph.vertex_count());
                for (int i = 0; i < in.graph.vertex_count(); ++i) all[i] = i;
                auto cert = rf::validate_locally_triangulated(in.graph, cg_zero, all);
                if (cg_kind == "naz-reflexive") {
                    g = rf::build_naz_reflexive(cert);
                } else {
                    const int p = cg_params.empty() ? 0 : cg_params[0];
                    auto walk = p == 0 ? rf::reflexive_paths(cert, rf::ReflexivePathKind::Loop01)
                                : p > 0 ? rf::reflexive_paths(cert, rf::ReflexivePathKind::ToBetaI, p)
                                        : rf::reflexive_paths(
                                              cert, rf::ReflexivePathKind::ToBetaIPlus1, -p);
                    g = rf::build_nbo_reflexive(cert, walk);
                }
            } else {
                throw rf::malformed_input_error("unknown gadget kind '" + cg_kind + "'");
            }
            const json out = rf::gadget_to_json(g);
            if (cg_out.empty()) emit(out);
            else rf::save_json_file(cg_out, out);
            if (!cg_dot.empty()) {
                std::ofstream dot(cg_dot);
                dot << rf::graph_to_dot(g.graph, g.signals);
            }
            return exit_ok;
        }

        if (*verify_g) {
            rf::PatternGadget g = rf::gadget_from_json(rf::load_json_file(vg_file));
            rf::GadgetVerification v = rf::verify_pattern_gadget(g, cap);
            json out;
            out["condition_a"] = v.condition_a;
            out["condition_b"] = v.condition_b;
            out["condition_c"] = v.condition_c;
            out["cap_exceeded"] = v.cap_exceeded;
            out["states_explored"] = v.states_explored;
            out["largest_component"] = v.largest_component;
            out["failures"] = v.failures;
            out["ok"] = v.ok();
            emit(out);
            return v.cap_exceeded ? exit_cap : (v.ok() ? exit_ok : exit_negative);
        }

        if (*verify) {
            auto g = rf::graph_from_json(rf::load_json_file(v_g));
            auto h = rf::graph_from_json(rf::load_json_file(v_h));
            auto f = rf::colouring_from_json(rf::load_json_file(v_f));
            auto gc = rf::colouring_from_json(rf::load_json_file(v_gcol));
            rf::ReachResult r = rf::reachable(g, h, f, gc, rule, cap);
            emit(rf::reach_to_json(r));
            switch (r.status) {
                case rf::ReachStatus::Reachable: return exit_ok;
                case rf::ReachStatus::Unreachable: return exit_negative;
                default: return exit_cap;
            }
        }

        if (*reduce) {
            auto g = rf::graph_from_json(rf::load_json_file(rd_g));
            auto f = rf::colouring_from_json(rf::load_json_file(rd_f));
            auto gc = rf::colouring_from_json(rf::load_json_file(rd_gcol));
            auto host = rf::graph_from_json(rf::load_json_file(rd_host));
            auto emb = rf::embedding_from_json(rf::load_json_file(rd_emb), host);
            std::shared_ptr<const rf::HostKit> kit;
            if (host.is_reflexive()) {
                std::vector<int> all(host.vertex_count());
                for (int i = 0; i < host.vertex_count(); ++i) all[i] = i;
                kit = rf::make_reflexive_host_kit(host, rd_zero, all);
            } else {
                kit = rf::make_quad_host_kit(host, emb);
            }
            rf::ReductionBundle bundle = rf::compile(g, f, gc, kit);
            namespace fs = std::filesystem;
            fs::create_directories(rd_dir);
            rf::save_json_file(rd_dir + "/g_prime.json", rf::graph_to_json(bundle.g_prime));
            rf::save_json_file(rd_dir + "/f_prime.json",
                               rf::colouring_to_json(bundle.f_prime));
            rf::save_json_file(rd_dir + "/g_prime_colouring.json",
                               rf::colouring_to_json(bundle.g_prime_colouring));
            json registry;
            registry["host"] = rf::graph_to_json(host);
            registry["host_embedding"] = rf::embedding_to_json(emb);
            registry["host_kind"] = kit->kind;
            registry["zero"] = kit->v0;
            registry["one"] = kit->v1;
            registry["rule"] = rf::to_string(kit->rule);
            registry["source"] = rf::graph_to_json(g);
            registry["source_f"] = f;
            registry["source_g"] = gc;
            json signals = json::array();
            for (const auto& s : bundle.signal_index) signals.push_back({s[0], s[1], s[2], s[3]});
            registry["signal_index"] = std::move(signals);
            json gadgets = json::array();
            for (const auto& inst : bundle.gadgets) {
                json gi;
                gi["id"] = inst.id;
                gi["kind"] =
                    inst.kind == rf::GadgetKind::NotAllZero ? "not-all-zero" : "not-both-one";
                gi["signals"] = inst.signals;
                gi["vertex_map"] = inst.vertex_map;
                if (inst.kind == rf::GadgetKind::NotBothOne) {
                    gi["edge"] = {inst.source_u, inst.source_v};
                    gi["colour"] = inst.colour + 1;
                } else {
                    gi["vertex"] = inst.source_vertex;
                }
                gadgets.push_back(std::move(gi));
            }
            registry["gadgets"] = std::move(gadgets);
            rf::save_json_file(rd_dir + "/registry.json", registry);
            std::cerr << "bundle written to " << rd_dir << " (|V(G')| = "
                      << bundle.g_prime.vertex_count() << ")\n";
            if (rd_walk > 0) {
                const rf::Graph k4 = rf::complete_graph(4);
                const auto homs = rf::enumerate_homs(g, k4).homs;
                std::set<rf::Colouring> component;
                for (const auto& other : homs)
                    if (rf::reachable(g, k4, f, other, rf::MoveRule::Irreflexive).status ==
                        rf::ReachStatus::Reachable)
                        component.insert(other);
                std::mt19937_64 rng(seed);
                rf::Colouring state = bundle.f_prime;
                for (std::uint64_t step = 0; step < rd_walk; ++step) {
                    auto moves = rf::hom_neighbours(bundle.g_prime, kit->host, state, kit->rule);
                    if (moves.empty()) break;
                    state = moves[rng() % moves.size()];
                    if (!component.count(rf::project(bundle, state)))
                        throw rf::certificate_violation(
                            "random walk escaped the source component at step " +
                            std::to_string(step));
                }
                std::cerr << "projection safety held along " << rd_walk << " walk steps (seed "
                          << seed << ")\n";
            }
            return exit_ok;
        }

        if (*lift) {
            const json registry = rf::load_json_file(lf_dir + "/registry.json");
            auto host = rf::graph_from_json(registry.at("host"));
            auto emb = rf::embedding_from_json(registry.at("host_embedding"), host);
            auto g = rf::graph_from_json(registry.at("source"));
            auto f = registry.at("source_f").get<rf::Colouring>();
            auto gc = registry.at("source_g").get<rf::Colouring>();
            std::shared_ptr<const rf::HostKit> kit;
            if (registry.at("host_kind") == "reflexive") {
                std::vector<int> all(host.vertex_count());
                for (int i = 0; i < host.vertex_count(); ++i) all[i] = i;
                kit = rf::make_reflexive_host_kit(host, registry.at("zero").get<int>(), all);
            } else {
                kit = rf::make_quad_host_kit(host, emb);
            }
            rf::ReductionBundle bundle = rf::compile(g, f, gc, kit);
            rf::Witness w = rf::witness_from_json(rf::load_json_file(lf_witness));
            rf::Witness lifted = rf::lift_sequence(bundle, w);
            const rf::WitnessCheck check =
                rf::validate_witness(bundle.g_prime, kit->host, lifted, kit->rule);
            if (!check.ok)
                throw rf::certificate_violation("lifted witness invalid: " + check.reason);
            const json out = rf::witness_to_json(lifted);
            if (lf_out.empty()) emit(out);
            else rf::save_json_file(lf_out, out);
            return exit_ok;
        }

        throw rf::malformed_input_error("no subcommand");
    } catch (const rf::malformed_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const rf::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const rf::certificate_violation& e) {
        std::cerr << "certificate violation: " << e.what() << "\n";
        return exit_negative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
