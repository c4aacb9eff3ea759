#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "reconforge/generators.hpp"
#include "reconforge/json_io.hpp"
#include "reconforge/errors.hpp"

using namespace reconforge;
namespace fs = std::filesystem;

namespace {

const fs::path sandbox = fs::temp_directory_path() / "reconforge_cli_tests";

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const fs::path& stdout_file = {}) {
    std::string cmd = std::string(RECONFORGE_CLI_PATH) + " " + args;
    if (!stdout_file.empty()) cmd += " > " + stdout_file.string();
    cmd += " 2> " + (sandbox / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

struct SandboxSetup {
    SandboxSetup() {
        fs::remove_all(sandbox);
        fs::create_directories(sandbox);
    }
};
const SandboxSetup setup_once;

} // namespace

TEST_CASE("json round trips") {
    auto [g, e] = cube();
    g.set_label(0, "origin");
    const Graph g2 = graph_from_json(graph_to_json(g));
    CHECK(g2.vertex_count() == g.vertex_count());
    CHECK(g2.edges() == g.edges());
    CHECK(g2.label(0) == "origin");

    const Embedding e2 = embedding_from_json(embedding_to_json(e), g);
    CHECK(e2.rotations == e.rotations);

    auto [pg, pe] = grotzsch();
    const Embedding pe2 = embedding_from_json(embedding_to_json(pe), pg);
    CHECK(pe2.negative_edges == pe.negative_edges);

    // loops normalize whether given as [v,v] edges or in "loops"
    const json j1 = {{"n", 2}, {"edges", {{0, 1}, {1, 1}}}};
    const json j2 = {{"n", 2}, {"edges", {{0, 1}}}, {"loops", {1}}};
    CHECK(graph_from_json(j1).loop_count() == 1);
    CHECK(graph_from_json(j2).has_loop(1));

    CHECK_THROWS_AS(graph_from_json(json{{"edges", json::array()}}), malformed_input_error);

    Witness w;
    w.steps = {{0, 1}, {0, 2}};
    CHECK(witness_from_json(witness_to_json(w)).steps == w.steps);
}

TEST_CASE("gadget json round trip") {
    auto [h, e] = cube();
    const json gadget_json = [&] {
        const Anchor anchor = find_anchor(h, e);
        return gadget_to_json(build_nbo_quad(h, e, anchor.zero, anchor.ring[0], anchor.zero,
                                             anchor.ring[0]));
    }();
    const PatternGadget back = gadget_from_json(gadget_json);
    CHECK(back.kind == "nbo-quad");
    CHECK(back.signals.size() == 2);
    CHECK(back.patterns.size() == 3);
    CHECK(back.canonical.size() == 3);
    CHECK(verify_pattern_gadget(back).ok());
}

TEST_CASE("cli validate") {
    REQUIRE(run_cli("generate cube -o " + (sandbox / "cube.json").string() + " --emb-out " +
                    (sandbox / "cube.emb.json").string()) == 0);
    CHECK(run_cli("validate --kind sphere-quad " + (sandbox / "cube.json").string() + " " +
                  (sandbox / "cube.emb.json").string(),
                  sandbox / "cube.report.json") == 0);

    REQUIRE(run_cli("generate cycle -k 4 -o " + (sandbox / "c4.json").string() + " --emb-out " +
                    (sandbox / "c4.emb.json").string()) == 0);
    CHECK(run_cli("validate --kind sphere-quad " + (sandbox / "c4.json").string() + " " +
                  (sandbox / "c4.emb.json").string()) == 1);

    CHECK(run_cli("validate --kind sphere-quad missing.json missing.emb.json") == 2);
}

TEST_CASE("cli verify exit codes") {
    write_file(sandbox / "k4.json", R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
    write_file(sandbox / "id.json", "[0,1,2,3]");
    write_file(sandbox / "swap.json", "[1,0,2,3]");
    const std::string k4 = (sandbox / "k4.json").string();
    CHECK(run_cli("verify " + k4 + " " + k4 + " " + (sandbox / "id.json").string() + " " +
                  (sandbox / "id.json").string()) == 0);
    CHECK(run_cli("verify " + k4 + " " + k4 + " " + (sandbox / "id.json").string() + " " +
                  (sandbox / "swap.json").string()) == 1);
    // a tiny cap forces the explicit cap-exceeded exit
    write_file(sandbox / "k1.json", R"({"n":1,"edges":[]})");
    write_file(sandbox / "c0.json", "[0]");
    write_file(sandbox / "c3.json", "[3]");
    CHECK(run_cli("--cap 2 verify " + (sandbox / "k1.json").string() + " " + k4 + " " +
                  (sandbox / "c0.json").string() + " " + (sandbox / "c3.json").string()) == 3);
}

TEST_CASE("cli output is deterministic") {
    const std::string cmd = "validate --kind sphere-quad " + (sandbox / "cube.json").string() +
                            " " + (sandbox / "cube.emb.json").string();
    REQUIRE(run_cli(cmd, sandbox / "run1.json") == 0);
    REQUIRE(run_cli(cmd, sandbox / "run2.json") == 0);
    CHECK(read_file(sandbox / "run1.json") == read_file(sandbox / "run2.json"));
    CHECK_FALSE(read_file(sandbox / "run1.json").empty());
}

TEST_CASE("cli gadget pipeline") {
    const std::string host = (sandbox / "cube.json").string();
    const std::string emb = (sandbox / "cube.emb.json").string();
    REQUIRE(run_cli("compile-gadget --kind naz-quad --host " + host + " --embedding " + emb +
                    " -o " + (sandbox / "naz.json").string()) == 0);
    CHECK(run_cli("verify-gadget " + (sandbox / "naz.json").string(),
                  sandbox / "naz.verify.json") == 0);
    const json report = load_json_file((sandbox / "naz.verify.json").string());
    CHECK(report.at("ok").get<bool>());
}

TEST_CASE("cli reduce and lift") {
    write_file(sandbox / "edge.json", R"({"n":2,"edges":[[0,1]]})");
    write_file(sandbox / "f.json", "[0,1]");
    write_file(sandbox / "g.json", "[2,3]");
    write_file(sandbox / "witness.json",
               R"({"steps":[[0,1],[2,1],[2,3]]})");
    const std::string dir = (sandbox / "bundle").string();
    REQUIRE(run_cli("reduce --graph " + (sandbox / "edge.json").string() + " --f " +
                    (sandbox / "f.json").string() + " --g " + (sandbox / "g.json").string() +
                    " --host " + (sandbox / "cube.json").string() + " --embedding " +
                    (sandbox / "cube.emb.json").string() + " --out-dir " + dir) == 0);
    CHECK(fs::exists(dir + "/g_prime.json"));
    CHECK(fs::exists(dir + "/f_prime.json"));
    CHECK(fs::exists(dir + "/registry.json"));
    CHECK(run_cli("lift --bundle " + dir + " --witness " + (sandbox / "witness.json").string() +
                  " -o " + (sandbox / "lifted.json").string()) == 0);
    const json lifted = load_json_file((sandbox / "lifted.json").string());
    CHECK(lifted.at("steps").size() > 2);
}

TEST_CASE("cli reduce and lift on a reflexive host") {
    REQUIRE(run_cli("generate reflexive-octahedron -o " + (sandbox / "octa.json").string() +
                    " --emb-out " + (sandbox / "octa.emb.json").string()) == 0);
    const std::string dir = (sandbox / "rbundle").string();
    REQUIRE(run_cli("reduce --graph " + (sandbox / "edge.json").string() + " --f " +
                    (sandbox / "f.json").string() + " --g " + (sandbox / "g.json").string() +
                    " --host " + (sandbox / "octa.json").string() + " --embedding " +
                    (sandbox / "octa.emb.json").string() + " --out-dir " + dir +
                    " --walk-steps 500 --seed 11") == 0);
    CHECK(run_cli("lift --bundle " + dir + " --witness " + (sandbox / "witness.json").string() +
                  " -o " + (sandbox / "rlifted.json").string()) == 0);
    const json registry = load_json_file(dir + "/registry.json");
    CHECK(registry.at("host_kind") == "reflexive");
    CHECK(registry.at("rule") == "reflexive");
}
