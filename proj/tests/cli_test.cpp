#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mhg/json_io.hpp"

namespace {

using namespace mhg;
using nlohmann::json;

ParameterSet make(int delta, int k1, int k2, int c0, int c1) {
    ParameterSet p;
    p.delta = delta;
    p.k1 = k1;
    p.k2 = k2;
    p.c0 = c0;
    p.c1 = c1;
    return p;
}

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch_path(const std::string& name) {
    return std::filesystem::temp_directory_path() /
           ("mhg_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string write_scratch(const std::string& name, const std::string& content) {
    std::filesystem::path path = scratch_path(name);
    std::ofstream(path) << content;
    return path.string();
}

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("MHG_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "MHG_CLI must point at the cli binary");
    std::filesystem::path errfile = scratch_path("stderr.txt");
    std::string cmd = std::string(bin) + " " + args + " 2>" + errfile.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    r.code = WEXITSTATUS(status);
    std::ifstream err(errfile);
    std::stringstream ss;
    ss << err.rdbuf();
    r.err = ss.str();
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

const std::string kDoubledGap = "--delta 5 --k1 3 --k2 3 --c0 16 --c1 13";

} // namespace

TEST_CASE("json parameter round trip") {
    ParameterSet p = make(5, 3, 3, 16, 13);
    p.henson = {HensonConstraint{{4}, false}, HensonConstraint{{2, 1}, true}};
    json j = to_json(p);
    CHECK(j["delta"] == 5);
    CHECK(j["henson"][0] == json::array({4}));
    CHECK(j["henson"][1]["companion"] == json::array({2, 1}));

    ParameterSet q = parameter_set_from_json(j);
    CHECK(q.delta == 5);
    CHECK(q.c0 == 16);
    REQUIRE(q.henson.size() == 2);
    CHECK(q.henson[0].clique_sizes == std::vector<int>{4});
    CHECK_FALSE(q.henson[0].companion);
    CHECK(q.henson[1].companion);

    json inf = to_json(make(kInf, 1, kInf, kInf, kInf));
    CHECK(inf["delta"] == "inf");
    CHECK(parameter_set_from_json(inf).k2 == kInf);
}

TEST_CASE("json parameter validation") {
    json j = to_json(make(5, 3, 3, 16, 13));
    j.erase("c1");
    CHECK_THROWS_AS(parameter_set_from_json(j), Error);

    json bad = to_json(make(5, 3, 3, 16, 13));
    bad["delta"] = -1;
    CHECK_THROWS_AS(parameter_set_from_json(bad), Error);
    bad["delta"] = "five";
    CHECK_THROWS_AS(parameter_set_from_json(bad), Error);
    bad["delta"] = 5.5;
    CHECK_THROWS_AS(parameter_set_from_json(bad), Error);

    json h = to_json(make(5, 3, 3, 16, 13));
    h["henson"] = "none";
    CHECK_THROWS_AS(parameter_set_from_json(h), Error);
    h["henson"] = json::array({json::object({{"companion", json::array({2})}})});
    CHECK_THROWS_AS(parameter_set_from_json(h), Error);
}

TEST_CASE("json graph round trip") {
    EdgeLabelledGraph g(4);
    g.set_edge(2, 3, 5);
    g.set_edge(0, 1, 1);
    g.set_edge(1, 3, 4);
    json j = to_json(g);
    CHECK(j["vertices"] == 4);
    REQUIRE(j["edges"].size() == 3);
    CHECK(j["edges"][0] == json::array({0, 1, 1}));
    CHECK(j["edges"][1] == json::array({1, 3, 4}));
    CHECK(j["edges"][2] == json::array({2, 3, 5}));
    CHECK(graph_from_json(j) == g);
}

TEST_CASE("json graph validation") {
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": -1, "edges": []})")), Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 5000, "edges": []})")), Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 3, "edges": [[0, 0, 1]]})")),
                    Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 3, "edges": [[0, 3, 1]]})")),
                    Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 3, "edges": [[0, 1, 0]]})")),
                    Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 3, "edges": [[0, 1]]})")), Error);
    CHECK_THROWS_AS(
        graph_from_json(json::parse(R"({"vertices": 3, "edges": [[0, 1, 2], [1, 0, 2]]})")),
        Error);
}

TEST_CASE("json completion report shapes") {
    ParameterSet p = make(5, 3, 3, 16, 13);
    EdgeLabelledGraph good(4);
    good.set_edge(0, 1, 1);
    good.set_edge(1, 2, 5);
    good.set_edge(2, 3, 5);
    good.set_edge(0, 3, 5);
    CompletionResult res = magic_complete(good, p, 3);

    json brief = to_json(res, false);
    CHECK(brief["status"] == "SUCCESS");
    CHECK(brief["graph"]["vertices"] == 4);
    CHECK_FALSE(brief.contains("trace"));
    CHECK_FALSE(brief.contains("certificate"));
    CHECK(brief["pode_dependent"] == false);
    CHECK(brief["joined_components"] == false);

    json traced = to_json(res, true);
    REQUIRE(traced["trace"].size() == 2);
    CHECK(traced["trace"][0]["time"] == 2);
    CHECK(traced["trace"][0]["edge"] == json::array({0, 2}));
    CHECK(traced["trace"][0]["dist"] == 4);
    CHECK(traced["trace"][0]["witness"] == 1);

    TraceEntry fill{11, 0, 2, 3, -1};
    CHECK(to_json(fill)["witness"].is_null());

    EdgeLabelledGraph bad(5);
    bad.set_edge(0, 1, 1);
    bad.set_edge(1, 2, 1);
    bad.set_edge(2, 3, 5);
    bad.set_edge(3, 4, 5);
    bad.set_edge(0, 4, 5);
    json failed = to_json(magic_complete(bad, p, 3), false);
    CHECK(failed["status"] == "NO_COMPLETION");
    CHECK(failed["certificate"]["kind"] == "FORBIDDEN_TRIANGLE");
    CHECK(failed["certificate"]["vertices"] == json::array({0, 1, 3}));
}

TEST_CASE("json admissible rows") {
    std::vector<AdmissibleRow> rows = enumerate_admissible(3, true);
    REQUIRE(rows.size() == 13);

    json first = to_json(rows.front());
    CHECK(first["case"] == "IIA");
    CHECK(first["kind"] == "ANTIPODAL_NONBIPARTITE");
    CHECK(first["magic"] == json::array());  // empty mechanical range
    CHECK(first["m_min"] == 2);
    CHECK(first["m_max"] == 1);

    json last = to_json(rows.back());
    CHECK(last["params"]["k1"] == "inf");
    CHECK(last["kind"] == "BIPARTITE");
    CHECK_FALSE(last.contains("m_min"));
    CHECK(last["magic"] == json::array());

    json third = to_json(rows[5]);  // (1, 3, 10, 11)
    CHECK(third["magic"] == json::array({2, 3}));
}

TEST_CASE("json obstacle catalogue") {
    ObstacleCatalogue cat = enumerate_obstacles(make(5, 3, 3, 16, 13), 3,
                                                ObstacleDecider::Engine);
    json j = to_json(cat);
    CHECK(j["bound_theoretical"] == 96);
    CHECK(j["params"]["delta"] == 5);
    REQUIRE(j["cycles"]["3"].size() == 15);
    CHECK(j["cycles"]["3"][0] == "1 1 1");
    CHECK(j["cycles"]["3"][14] == "5 5 5");
}

TEST_CASE("cli admissible table") {
    CliResult r = run_cli("admissible --delta 3");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 14);  // header and 13 rows
    CHECK(r.out.find("K1") != std::string::npos);
    CHECK(r.out.find("Case") != std::string::npos);
    CHECK(r.out.find("--") != std::string::npos);
    CHECK(r.out.find("2, 3") != std::string::npos);
    CHECK(r.out.find("inf") != std::string::npos);

    CliResult nb = run_cli("admissible --delta 4 --no-bipartite --format json");
    CHECK(nb.code == 0);
    json rows = json::parse(nb.out);
    REQUIRE(rows.size() == 22);
    CHECK(rows[0]["params"]["k1"] == 1);
    CHECK(rows[0]["params"]["k2"] == 3);
    CHECK(rows[0]["kind"] == "ANTIPODAL_NONBIPARTITE");
    CHECK(rows[0]["magic"] == json::array({2}));
    for (const json& row : rows) CHECK(row["params"]["k1"] != "inf");

    CHECK(run_cli("admissible --delta 2").code == 2);
}

TEST_CASE("cli completion of the reference cycles") {
    std::string good = write_scratch(
        "good.json", R"({"vertices": 4, "edges": [[0,1,1],[1,2,5],[2,3,5],[0,3,5]]})");
    CliResult r = run_cli("complete " + good + " " + kDoubledGap + " --trace");
    CHECK(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["status"] == "SUCCESS");
    CHECK(out["graph"]["vertices"] == 4);
    REQUIRE(out["graph"]["edges"].size() == 6);
    CHECK(out["graph"]["edges"][1] == json::array({0, 2, 4}));
    CHECK(out["graph"]["edges"][4] == json::array({1, 3, 4}));
    REQUIRE(out["trace"].size() == 2);
    CHECK(out["trace"][0]["edge"] == json::array({0, 2}));

    std::string bad = write_scratch(
        "bad.json", R"({"vertices": 5, "edges": [[0,1,1],[1,2,1],[2,3,5],[3,4,5],[0,4,5]]})");
    CliResult rb = run_cli("complete " + bad + " " + kDoubledGap);
    CHECK(rb.code == 1);
    json failed = json::parse(rb.out);
    CHECK(failed["status"] == "NO_COMPLETION");
    CHECK_FALSE(failed.contains("trace"));
    CHECK(rb.err.find("NO_COMPLETION: FORBIDDEN_TRIANGLE vertices=0,1,3 labels=1,2,4") !=
          std::string::npos);
}

TEST_CASE("cli completion input failures") {
    std::string garbled = write_scratch("garbled.json", "{ not json");
    CHECK(run_cli("complete " + garbled + " " + kDoubledGap).code == 3);
    CHECK(run_cli("complete /nonexistent/graph.json " + kDoubledGap).code == 3);

    std::string wide = write_scratch("wide.json", R"({"vertices": 2, "edges": [[0,1,9]]})");
    CHECK(run_cli("complete " + wide + " " + kDoubledGap).code == 3);

    std::string fine = write_scratch("fine.json", R"({"vertices": 2, "edges": [[0,1,1]]})");
    CHECK(run_cli("complete " + fine + " --delta 3 --k1 1 --k2 1 --c0 8 --c1 7").code == 2);
    CHECK(run_cli("complete " + fine).code == 2);  // missing required parameter flags

    std::string split = write_scratch(
        "split.json", R"({"vertices": 4, "edges": [[0,1,2],[2,3,2]]})");
    CliResult disc =
        run_cli("complete " + split + " --delta inf --k1 1 --k2 inf --c0 inf --c1 inf");
    CHECK(disc.code == 1);
    CHECK(disc.err.find("NO_COMPLETION") != std::string::npos);
}

TEST_CASE("cli poded antipodal completion") {
    std::string pairs = write_scratch(
        "pairs.json", R"({"vertices": 4, "edges": [[0,1,3],[2,3,3]]})");
    std::string tuple = " --delta 3 --k1 1 --k2 2 --c0 8 --c1 7";

    CliResult def = run_cli("complete " + pairs + tuple);
    CHECK(def.code == 0);
    json out = json::parse(def.out);
    CHECK(out["pode_dependent"] == true);
    CHECK(out["graph"]["edges"][1] == json::array({0, 2, 1}));

    CliResult other = run_cli("complete " + pairs + tuple + " --pode 0 3");
    CHECK(other.code == 0);
    json flipped = json::parse(other.out);
    CHECK(flipped["graph"]["edges"][1] == json::array({0, 2, 2}));
    CHECK(flipped["graph"]["edges"][2] == json::array({0, 3, 1}));
}

TEST_CASE("cli obstacle catalogue") {
    CliResult r = run_cli(std::string("obstacles ") + kDoubledGap + " --max-len 4");
    CHECK(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["bound_theoretical"] == 96);
    REQUIRE(out["cycles"]["3"].size() == 15);
    REQUIRE(out["cycles"]["4"].size() == 13);
    CHECK(out["cycles"]["4"][1] == "1 1 1 4");

    CHECK(run_cli("obstacles --delta 3 --k1 1 --k2 1 --c0 8 --c1 7 --max-len 4").code == 2);
    CHECK(run_cli("obstacles --delta 3 --k1 1 --k2 2 --c0 8 --c1 7 --max-len 4").code == 2);
}

TEST_CASE("cli verification suites") {
    CliResult sir = run_cli(std::string("verify --suite sir ") + kDoubledGap +
                            " --seed 7 --max-vertices 3");
    CHECK(sir.code == 0);
    json out = json::parse(sir.out);
    CHECK(out["suite"] == "sir");
    REQUIRE(out["rows"].size() == 1);
    CHECK(out["total_violations"] == 0);
    CHECK(out["total_checked"] > 0);

    CliResult oracle = run_cli(
        "verify --suite oracle --delta 3 --k1 1 --k2 2 --c0 10 --c1 9 --seed 5 --max-vertices 3");
    CHECK(oracle.code == 0);
    json ocheck = json::parse(oracle.out);
    CHECK(ocheck["rows"][0]["report"]["checked"] == 68);
    CHECK(ocheck["total_violations"] == 0);

    // sweep mode takes no henson restriction
    CHECK(run_cli("verify --suite sir --delta 3 --seed 7 --henson '[[3]]'").code == 2);
    // single-tuple mode needs the whole tuple
    CHECK(run_cli("verify --suite sir --delta 3 --k1 1 --seed 7").code == 2);
}

TEST_CASE("cli help and bad flags") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("admissible").code == 2);             // missing --delta
    CHECK(run_cli("frobnicate --delta 3").code == 2);   // unknown subcommand
    CHECK(run_cli("verify --suite nope --delta 3 --seed 1").code == 2);
}
