#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mhg/json_io.hpp"
#include "mhg/oracle.hpp"

namespace {

using namespace mhg;

// Exit codes: 0 success, 1 no-completion or verification violations,
// 2 invalid parameters, 3 I/O or malformed input.
constexpr int kExitOk = 0;
constexpr int kExitNoCompletion = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitBadInput = 3;

int parse_param_value(const std::string& s, const char* name) {
    if (s == "inf") return kInf;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
        throw Error(ErrorCode::Malformed,
                    std::string(name) + " must be a non-negative integer or \"inf\"");
    return v;
}

struct ParamFlags {
    std::string delta, k1, k2, c0, c1;
    std::string henson = "[]";

    void attach(CLI::App* cmd) {
        cmd->add_option("--delta", delta, "diameter (integer or inf)")->required();
        cmd->add_option("--k1", k1, "lower K bound (integer or inf)")->required();
        cmd->add_option("--k2", k2, "upper K bound")->required();
        cmd->add_option("--c0", c0, "even perimeter bound (integer or inf)")->required();
        cmd->add_option("--c1", c1, "odd perimeter bound (integer or inf)")->required();
        cmd->add_option("--henson", henson,
                        "forbidden (1,delta)-spaces as a JSON list of part-size lists");
    }

    ParameterSet build() const {
        ParameterSet p;
        p.delta = parse_param_value(delta, "delta");
        p.k1 = parse_param_value(k1, "k1");
        p.k2 = parse_param_value(k2, "k2");
        p.c0 = parse_param_value(c0, "c0");
        p.c1 = parse_param_value(c1, "c1");
        nlohmann::json hj;
        try {
            hj = nlohmann::json::parse(henson);
        } catch (const nlohmann::json::exception&) {
            throw Error(ErrorCode::Malformed, "--henson is not valid JSON");
        }
        nlohmann::json pj = to_json(p);
        pj["henson"] = hj;
        return parameter_set_from_json(pj);
    }
};

ParameterSet admissible_params_or_exit(const ParamFlags& flags) {
    ParameterSet p = flags.build();
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible) {
        std::string msg = "parameters are not admissible";
        for (const std::string& f : v.failed_conditions) msg += " [" + f + "]";
        throw Error(ErrorCode::NotAdmissible, msg);
    }
    return p;
}

// ---------------------------------------------------------------- admissible

std::string magic_column(const AdmissibleRow& r) {
    if (is_inf(r.params.k1) || r.m_min > r.m_max) return "--";
    std::string s;
    for (int m = r.m_min; m <= r.m_max; ++m) {
        if (!s.empty()) s += ", ";
        s += std::to_string(m);
    }
    return s;
}

void print_admissible_table(const std::vector<AdmissibleRow>& rows) {
    const std::vector<std::string> header = {"K1", "K2", "C0", "C1", "M", "Case"};
    std::vector<std::vector<std::string>> cells;
    for (const AdmissibleRow& r : rows)
        cells.push_back({value_to_string(r.params.k1), value_to_string(r.params.k2),
                         value_to_string(r.params.c0), value_to_string(r.params.c1),
                         magic_column(r), to_string(r.verdict.adm_case)});
    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) std::cout << "  ";
            // numeric columns right-aligned, the case label left-aligned
            if (c + 1 < row.size())
                std::cout << std::string(width[c] - row[c].size(), ' ') << row[c];
            else
                std::cout << row[c];
        }
        std::cout << "\n";
    };
    print_row(header);
    for (const auto& row : cells) print_row(row);
}

int run_admissible(int delta, bool no_bipartite, const std::string& format) {
    std::vector<AdmissibleRow> rows;
    try {
        rows = enumerate_admissible(delta, !no_bipartite);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const AdmissibleRow& r : rows) out.push_back(to_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        print_admissible_table(rows);
    }
    return kExitOk;
}

// ------------------------------------------------------------------ complete

int run_complete(const ParamFlags& flags, const std::string& input_path, bool trace,
                 const std::vector<int>& pode, int magic) {
    ParameterSet p;
    try {
        p = admissible_params_or_exit(flags);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }

    EdgeLabelledGraph g(0);
    try {
        std::ifstream in(input_path);
        if (!in) throw Error(ErrorCode::Io, "cannot open " + input_path);
        nlohmann::json j = nlohmann::json::parse(in);
        g = graph_from_json(j);
        if (!is_inf(p.delta))
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v)
                    if (g.has_edge(u, v) && g.get(u, v) > p.delta)
                        throw Error(ErrorCode::OutOfRange,
                                    "input distance exceeds the diameter");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: input is not valid JSON: " << e.what() << "\n";
        return kExitBadInput;
    }

    CompleteOptions opts;
    if (!pode.empty()) opts.pode = pode;
    opts.magic = magic;
    CompletionResult res;
    try {
        res = dispatch_complete(g, p, opts);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoCompletion || e.code() == ErrorCode::Disconnected) {
            std::cerr << "NO_COMPLETION: " << e.what() << "\n";
            return kExitNoCompletion;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }

    std::cout << to_json(res, trace).dump(2) << "\n";
    if (res.status != CompletionStatus::Success) {
        if (res.certificate) {
            std::cerr << "NO_COMPLETION: " << res.certificate->kind;
            std::cerr << " vertices=";
            for (size_t i = 0; i < res.certificate->vertices.size(); ++i)
                std::cerr << (i ? "," : "") << res.certificate->vertices[i];
            std::cerr << " labels=";
            for (size_t i = 0; i < res.certificate->labels.size(); ++i)
                std::cerr << (i ? "," : "") << res.certificate->labels[i];
            if (!res.certificate->detail.empty())
                std::cerr << " (" << res.certificate->detail << ")";
            std::cerr << "\n";
        }
        return kExitNoCompletion;
    }
    return kExitOk;
}

// ----------------------------------------------------------------- obstacles

int run_obstacles(const ParamFlags& flags, int max_len, const std::string& decider) {
    try {
        ParameterSet p = flags.build();
        ObstacleDecider d =
            decider == "oracle" ? ObstacleDecider::Oracle : ObstacleDecider::Engine;
        ObstacleCatalogue cat = enumerate_obstacles(p, max_len, d);
        std::cout << to_json(cat).dump(2) << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    int delta = 0;
    ParamFlags tuple;  // delta copied in; k1 empty means sweep the whole diameter
    unsigned seed = 0;
    int max_vertices = 4;
    int samples = 200;
    int max_len = 5;
};

std::vector<EdgeLabelledGraph> all_graphs(int n, int delta) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<EdgeLabelledGraph> out;
    std::vector<int> state(pairs.size(), 0);  // 0 encodes a missing pair
    while (true) {
        EdgeLabelledGraph g(n);
        for (size_t i = 0; i < pairs.size(); ++i)
            if (state[i]) g.set_edge(pairs[i].first, pairs[i].second, state[i]);
        out.push_back(std::move(g));
        size_t i = 0;
        while (i < state.size() && state[i] == delta) state[i++] = 0;
        if (i == state.size()) break;
        ++state[i];
    }
    return out;
}

EdgeLabelledGraph sample_graph(std::mt19937& gen, int n, int delta) {
    EdgeLabelledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (gen() % 2 == 0) g.set_edge(u, v, 1 + static_cast<int>(gen() % delta));
    return g;
}

void merge_report(VerifyReport& into, const VerifyReport& part) {
    into.checked += part.checked;
    into.violations.insert(into.violations.end(), part.violations.begin(),
                           part.violations.end());
    into.skipped.insert(into.skipped.end(), part.skipped.begin(), part.skipped.end());
}

VerifyReport verify_row(const std::string& suite, const ParameterSet& p,
                        const VerifyArgs& args) {
    VerifyReport rep;

    if (suite == "sir") {
        try {
            rep = sir_property_suite(p, completion_parameter(p), std::min(args.max_vertices, 6));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Unsupported) throw;
            rep.skipped.push_back(e.what());
        }
        return rep;
    }

    if (suite == "obstacles") {
        AdmissibilityVerdict v = admissibility_verdict(p);
        if (v.kind != ClassKind::Primitive) {
            rep.skipped.push_back("obstacle catalogues exist for primitive classes only");
            return rep;
        }
        ObstacleCatalogue engine_cat = enumerate_obstacles(p, args.max_len, ObstacleDecider::Engine);
        ObstacleCatalogue oracle_cat = enumerate_obstacles(p, args.max_len, ObstacleDecider::Oracle);
        ++rep.checked;
        if (engine_cat.by_length != oracle_cat.by_length)
            rep.violations.push_back({"catalogue", "engine and oracle deciders disagree"});
        merge_report(rep, verify_obstacle_closure(p, engine_cat, args.samples, args.seed));
        return rep;
    }

    int M = completion_parameter(p);
    std::vector<EdgeLabelledGraph> graphs;
    for (int n = 2; n <= std::min(args.max_vertices, 4); ++n) {
        std::vector<EdgeLabelledGraph> batch = all_graphs(n, p.delta);
        graphs.insert(graphs.end(), batch.begin(), batch.end());
    }
    std::mt19937 gen(args.seed);
    for (int n = 5; n <= args.max_vertices; ++n)
        for (int s = 0; s < args.samples; ++s) graphs.push_back(sample_graph(gen, n, p.delta));

    for (const EdgeLabelledGraph& g : graphs) {
        if (suite == "oracle") {
            bool oracle_ok = has_completion(g, p);
            CompletionResult res = dispatch_complete(g, p);
            bool engine_ok = res.status == CompletionStatus::Success;
            ++rep.checked;
            if (engine_ok != oracle_ok) {
                rep.violations.push_back(
                    {format_graph(g), engine_ok ? "engine completes but the oracle finds nothing"
                                                : "oracle completes but the engine fails"});
            } else if (engine_ok && !membership_check(res.graph, p).pass) {
                rep.violations.push_back({format_graph(g), "engine output is not a class member"});
            }
        } else if (suite == "optimality") {
            merge_report(rep, verify_optimality(g, p, M));
        } else if (suite == "parity") {
            merge_report(rep, verify_parity(g, p, M));
        } else {
            merge_report(rep, verify_automorphism_preservation(g, p));
        }
    }
    return rep;
}

int run_verify(const VerifyArgs& args) {
    std::vector<ParameterSet> rows;
    try {
        bool single = !args.tuple.k1.empty() || !args.tuple.k2.empty() ||
                      !args.tuple.c0.empty() || !args.tuple.c1.empty();
        if (single) {
            ParamFlags flags = args.tuple;
            flags.delta = std::to_string(args.delta);
            if (flags.k1.empty() || flags.k2.empty() || flags.c0.empty() || flags.c1.empty())
                throw Error(ErrorCode::Malformed,
                            "give all of --k1 --k2 --c0 --c1 or none of them");
            rows.push_back(admissible_params_or_exit(flags));
        } else {
            if (args.tuple.henson != "[]")
                throw Error(ErrorCode::Malformed, "--henson needs a full parameter tuple");
            for (AdmissibleRow& r : enumerate_admissible(args.delta, true))
                rows.push_back(std::move(r.params));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }

    nlohmann::json out;
    out["suite"] = args.suite;
    out["seed"] = args.seed;
    nlohmann::json row_reports = nlohmann::json::array();
    long long total_checked = 0, total_violations = 0, total_skipped = 0;
    for (const ParameterSet& p : rows) {
        VerifyReport rep;
        try {
            rep = verify_row(args.suite, p, args);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadParams;
        }
        nlohmann::json jr;
        jr["params"] = to_json(p);
        jr["report"] = to_json(rep);
        row_reports.push_back(std::move(jr));
        total_checked += rep.checked;
        total_violations += static_cast<long long>(rep.violations.size());
        total_skipped += static_cast<long long>(rep.skipped.size());
    }
    out["rows"] = row_reports;
    out["total_checked"] = total_checked;
    out["total_violations"] = total_violations;
    std::cout << out.dump(2) << "\n";
    std::cerr << "suite " << args.suite << ": " << total_checked << " checked, "
              << total_violations << " violations, " << total_skipped << " skipped\n";
    return total_violations == 0 ? kExitOk : kExitNoCompletion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Completion toolkit for metrically homogeneous graph classes"};
    app.require_subcommand(1);

    // admissible
    int adm_delta = 0;
    bool adm_no_bipartite = false;
    std::string adm_format = "text";
    CLI::App* adm = app.add_subcommand("admissible", "enumerate admissible parameter tuples");
    adm->add_option("--delta", adm_delta, "diameter")->required();
    adm->add_flag("--no-bipartite", adm_no_bipartite, "drop the infinite-K1 rows");
    adm->add_option("--format", adm_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // complete
    ParamFlags cmp_flags;
    std::string cmp_input;
    bool cmp_trace = false;
    std::vector<int> cmp_pode;
    int cmp_magic = -1;
    CLI::App* cmp = app.add_subcommand("complete", "complete a partial graph into the class");
    cmp->add_option("input", cmp_input, "graph JSON file")->required();
    cmp_flags.attach(cmp);
    cmp->add_flag("--trace", cmp_trace, "include the completion trace in the output");
    cmp->add_option("--pode", cmp_pode, "pode transversal for antipodal classes");
    cmp->add_option("--magic", cmp_magic, "completion parameter override");

    // obstacles
    ParamFlags obs_flags;
    int obs_max_len = 8;
    std::string obs_decider = "engine";
    CLI::App* obs = app.add_subcommand("obstacles", "enumerate non-completable cycles");
    obs_flags.attach(obs);
    obs->add_option("--max-len", obs_max_len, "largest cycle length to enumerate");
    obs->add_option("--decider", obs_decider, "engine or oracle")
        ->check(CLI::IsMember({"engine", "oracle"}));

    // verify
    VerifyArgs ver;
    CLI::App* verc = app.add_subcommand("verify", "run a verification suite");
    verc->add_option("--suite", ver.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"optimality", "parity", "aut", "sir", "oracle", "obstacles"}));
    verc->add_option("--delta", ver.delta, "diameter")->required();
    verc->add_option("--k1", ver.tuple.k1, "restrict to one tuple: lower K bound");
    verc->add_option("--k2", ver.tuple.k2, "restrict to one tuple: upper K bound");
    verc->add_option("--c0", ver.tuple.c0, "restrict to one tuple: even perimeter bound");
    verc->add_option("--c1", ver.tuple.c1, "restrict to one tuple: odd perimeter bound");
    verc->add_option("--henson", ver.tuple.henson, "forbidden (1,delta)-spaces (JSON)");
    verc->add_option("--seed", ver.seed, "seed for sampled workloads")->required();
    verc->add_option("--max-vertices", ver.max_vertices, "exhaustive bound, samples above 4");
    verc->add_option("--samples", ver.samples, "sample count per sampled size");
    verc->add_option("--max-len", ver.max_len, "cycle length bound for the obstacles suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadParams;
    }

    if (app.got_subcommand(adm)) return run_admissible(adm_delta, adm_no_bipartite, adm_format);
    if (app.got_subcommand(cmp))
        return run_complete(cmp_flags, cmp_input, cmp_trace, cmp_pode, cmp_magic);
    if (app.got_subcommand(obs)) return run_obstacles(obs_flags, obs_max_len, obs_decider);
    return run_verify(ver);
}
