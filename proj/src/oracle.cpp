#include "mhg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mhg {

namespace {

bool incident_triangles_ok(const EdgeLabelledGraph& g, const ParameterSet& p, int u, int v) {
    int d = g.get(u, v);
    for (int w = 0; w < g.n; ++w) {
        if (w == u || w == v) continue;
        int a = g.get(u, w), b = g.get(v, w);
        if (a != 0 && b != 0 && forbidden_reason(a, b, d, p) != TriangleReason::None) return false;
    }
    return true;
}

// Existing structure already rules out every completion.
bool hopeless(const EdgeLabelledGraph& g, const ParameterSet& p,
              const std::vector<HensonConstraint>& henson) {
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (!g.has_edge(i, j)) continue;
            if (!incident_triangles_ok(g, p, i, j)) return true;
        }
    for (const HensonConstraint& h : henson)
        if (henson_embeds(g, h, p.delta)) return true;
    return false;
}

struct Search {
    const ParameterSet& p;
    std::vector<HensonConstraint> henson;
    EdgeLabelledGraph g;
    std::vector<std::pair<int, int>> missing;
    std::vector<EdgeLabelledGraph>* collect = nullptr;
    bool found = false;

    void run(size_t idx) {
        if (found && collect == nullptr) return;
        if (idx == missing.size()) {
            for (const HensonConstraint& h : henson)
                if (henson_embeds(g, h, p.delta)) return;
            found = true;
            if (collect) collect->push_back(g);
            return;
        }
        auto [u, v] = missing[idx];
        for (int d = 1; d <= p.delta; ++d) {
            g.set_edge(u, v, d);
            if (incident_triangles_ok(g, p, u, v)) {
                run(idx + 1);
                if (found && collect == nullptr) break;
            }
        }
        g.set_edge(u, v, 0);
    }
};

void check_oracle_input(const EdgeLabelledGraph& g, const ParameterSet& p) {
    if (is_inf(p.delta))
        throw Error(ErrorCode::Unsupported, "oracle search needs a finite diameter");
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int d = g.get(u, v);
            if (d < 0 || d > p.delta)
                throw Error(ErrorCode::OutOfRange, "distance outside 1..delta");
        }
}

} // namespace

std::vector<EdgeLabelledGraph> enumerate_completions(const EdgeLabelledGraph& g,
                                                     const ParameterSet& p,
                                                     const OracleOptions& opts) {
    check_oracle_input(g, p);
    if (g.n > opts.max_vertices)
        throw Error(ErrorCode::TooLarge, "graph exceeds the oracle vertex bound");
    std::vector<std::pair<int, int>> missing = g.missing_pairs();
    if (static_cast<int>(missing.size()) > opts.max_unknown)
        throw Error(ErrorCode::TooLarge, "too many unknown pairs for exhaustive search");
    std::vector<EdgeLabelledGraph> out;
    Search s{p, normalized_henson(p), g, std::move(missing), &out};
    if (!hopeless(s.g, p, s.henson)) s.run(0);
    return out;
}

bool has_completion(const EdgeLabelledGraph& g, const ParameterSet& p) {
    check_oracle_input(g, p);
    Search s{p, normalized_henson(p), g, g.missing_pairs(), nullptr};
    if (hopeless(s.g, p, s.henson)) return false;
    s.run(0);
    return s.found;
}

std::vector<std::vector<int>> automorphisms(const EdgeLabelledGraph& g, int max_vertices) {
    if (g.n > max_vertices)
        throw Error(ErrorCode::TooLarge, "graph exceeds the automorphism vertex bound");
    std::vector<std::vector<int>> out;
    std::vector<int> image;
    std::vector<bool> used(g.n, false);
    std::function<void()> place = [&]() {
        int i = static_cast<int>(image.size());
        if (i == g.n) {
            out.push_back(image);
            return;
        }
        for (int c = 0; c < g.n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j)
                if (g.get(i, j) != g.get(c, image[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[c] = true;
            image.push_back(c);
            place();
            image.pop_back();
            used[c] = false;
        }
    };
    place();
    return out;
}

std::string format_graph(const EdgeLabelledGraph& g) {
    std::ostringstream os;
    os << "n=" << g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) os << ' ' << u << '-' << v << ':' << g.get(u, v);
    return os.str();
}

std::vector<EdgeLabelledGraph> class_members(const ParameterSet& p, int n) {
    if (is_inf(p.delta))
        throw Error(ErrorCode::Unsupported, "member enumeration needs a finite diameter");
    EdgeLabelledGraph empty(n);
    std::vector<EdgeLabelledGraph> out;
    Search s{p, normalized_henson(p), empty, empty.missing_pairs(), &out};
    s.run(0);
    return out;
}

namespace {

std::string pair_instance(const EdgeLabelledGraph& g, int u, int v, int bar, int prime) {
    std::ostringstream os;
    os << format_graph(g) << " pair " << u << '-' << v << " engine=" << bar
       << " oracle=" << prime;
    return os.str();
}

// Kind-aware context shared by the optimality and parity walks.
struct VerifySetup {
    AdmissibilityVerdict verdict;
    CompletionResult engine;
    EdgeLabelledGraph domain;  // graph the oracle enumerates over
    std::vector<int> side;     // antipodal: 1 on the canonical pode, 0 off it
    bool engine_ok = false;
};

VerifySetup make_setup(const EdgeLabelledGraph& g, const ParameterSet& p, int M,
                       VerifyReport& rep) {
    VerifySetup s;
    s.verdict = admissibility_verdict(p);
    if (!s.verdict.admissible || is_inf(p.delta))
        throw Error(ErrorCode::NotAdmissible, "verification needs an admissible finite-diameter class");
    switch (s.verdict.kind) {
    case ClassKind::Primitive:
        s.engine = magic_complete(g, p, M);
        s.domain = g;
        break;
    case ClassKind::Bipartite:
        s.engine = bipartite_complete(g, p, M);
        s.domain = g;
        break;
    default: {
        detail::SymmetrizeOutcome sym = detail::antipodal_symmetrize_detail(g, p.delta);
        if (!sym.ok) {
            rep.skipped.push_back(format_graph(g) + ": not antipodally completable");
            return s;
        }
        s.domain = sym.graph;
        s.engine = antipodal_complete_podefree(s.domain, p);
        if (s.engine.status == CompletionStatus::Success) {
            std::vector<int> partner = detail::delta_partners(s.domain, p.delta);
            s.side.assign(s.domain.n, 0);
            for (int x = 0; x < s.domain.n; ++x)
                if (partner[x] > x) s.side[x] = 1;
        }
        break;
    }
    }
    if (s.engine.status != CompletionStatus::Success) {
        rep.skipped.push_back(format_graph(g) + ": engine reported NO_COMPLETION");
        return s;
    }
    s.engine_ok = true;
    return s;
}

} // namespace

VerifyReport verify_optimality(const EdgeLabelledGraph& g, const ParameterSet& p, int M) {
    VerifyReport rep;
    VerifySetup s = make_setup(g, p, M, rep);
    if (!s.engine_ok) return rep;
    int d = p.delta;
    bool iib = s.verdict.adm_case == AdmCase::IIB;
    std::vector<EdgeLabelledGraph> all = enumerate_completions(s.domain, p);
    for (const EdgeLabelledGraph& cand : all) {
        for (int u = 0; u < s.domain.n; ++u)
            for (int v = u + 1; v < s.domain.n; ++v) {
                int bar = s.engine.graph.get(u, v);
                int prime = cand.get(u, v);
                bool ok = false;
                switch (s.verdict.kind) {
                case ClassKind::Primitive:
                    ok = (prime >= bar && bar >= M) || (prime <= bar && bar <= M) ||
                         (iib && prime != M && bar == M - 1);
                    break;
                case ClassKind::Bipartite:
                    ok = (prime >= bar && bar >= M + 1) || (prime <= bar && bar <= M) ||
                         (bar >= M && bar <= M + 1);
                    break;
                case ClassKind::AntipodalNonbipartite: {
                    int band = (s.side[u] == s.side[v]) ? d / 2 : d - d / 2;
                    ok = (prime >= bar && bar >= band) || (prime <= bar && bar <= band);
                    break;
                }
                case ClassKind::AntipodalBipartite: {
                    int m = d / 2;
                    if (s.side[u] == 1 && s.side[v] == 1) {
                        ok = (bar >= m && bar <= m + 1) || (prime >= bar && bar >= m + 1) ||
                             (prime <= bar && bar <= m);
                    } else if (d % 2 == 1 && is_connected(s.domain)) {
                        ok = (bar >= m && bar <= m + 1) || (prime >= bar && bar >= m + 1) ||
                             (prime <= bar && bar <= m);
                    } else {
                        continue;  // no claim off the pode here
                    }
                    break;
                }
                default:
                    continue;
                }
                ++rep.checked;
                if (!ok)
                    rep.violations.push_back({pair_instance(s.domain, u, v, bar, prime),
                                              "optimality"});
            }
    }
    return rep;
}

VerifyReport verify_parity(const EdgeLabelledGraph& g, const ParameterSet& p, int M) {
    VerifyReport rep;
    VerifySetup s = make_setup(g, p, M, rep);
    if (!s.engine_ok) return rep;
    int d = p.delta;
    if (s.verdict.kind == ClassKind::AntipodalNonbipartite) {
        rep.skipped.push_back("no parity claim for this kind");
        return rep;
    }
    if (s.verdict.kind != ClassKind::Primitive && !is_connected(s.domain)) {
        rep.skipped.push_back(format_graph(g) + ": disconnected input carries no parity claim");
        return rep;
    }
    bool case3 = s.verdict.adm_case == AdmCase::III;
    int C = p.c();
    bool exception_possible = case3 && C == 2 * d + p.k1 + 1 && C != 2 * p.k1 + 2 * p.k2 + 1 &&
                              M > p.k1 && p.k1 > 1;
    std::vector<EdgeLabelledGraph> all = enumerate_completions(s.domain, p);
    for (const EdgeLabelledGraph& cand : all) {
        for (int u = 0; u < s.domain.n; ++u)
            for (int v = u + 1; v < s.domain.n; ++v) {
                int bar = s.engine.graph.get(u, v);
                int prime = cand.get(u, v);
                if (s.verdict.kind == ClassKind::Primitive) {
                    bool in_range = bar <= std::min(p.k1, M - 1) || bar >= std::max(p.k2, M + 1);
                    if (!in_range) continue;
                    ++rep.checked;
                    bool ok = (bar % 2 == prime % 2) || (exception_possible && bar == p.k1);
                    if (!ok)
                        rep.violations.push_back({pair_instance(s.domain, u, v, bar, prime),
                                                  "parity"});
                } else {
                    ++rep.checked;
                    if (bar % 2 != prime % 2)
                        rep.violations.push_back({pair_instance(s.domain, u, v, bar, prime),
                                                  "parity"});
                }
            }
    }
    return rep;
}

VerifyReport verify_automorphism_preservation(const EdgeLabelledGraph& g, const ParameterSet& p) {
    VerifyReport rep;
    AdmissibilityVerdict verdict = admissibility_verdict(p);
    if (!verdict.admissible || is_inf(p.delta))
        throw Error(ErrorCode::NotAdmissible, "verification needs an admissible finite-diameter class");
    if (verdict.kind == ClassKind::Bipartite && !is_connected(g)) {
        rep.skipped.push_back(format_graph(g) + ": disconnected bipartite input, join breaks the claim");
        return rep;
    }
    CompletionResult engine = dispatch_complete(g, p);
    if (engine.status != CompletionStatus::Success) {
        rep.skipped.push_back(format_graph(g) + ": engine reported NO_COMPLETION");
        return rep;
    }
    std::vector<std::vector<int>> auts = automorphisms(g);
    bool antipodal = verdict.kind == ClassKind::AntipodalNonbipartite ||
                     verdict.kind == ClassKind::AntipodalBipartite;
    std::vector<int> partner;
    std::vector<int> side;
    if (antipodal) {
        partner = detail::delta_partners(engine.graph, p.delta);
        side.assign(engine.graph.n, 0);
        for (int x = 0; x < engine.graph.n; ++x)
            if (partner[x] > x) side[x] = 1;
    }
    for (const std::vector<int>& aut : auts) {
        std::vector<int> pi = aut;
        if (antipodal && engine.graph.n > g.n) {
            // extend over the vertices symmetrization added
            pi.resize(engine.graph.n, -1);
            for (int x = g.n; x < engine.graph.n; ++x) pi[x] = partner[aut[partner[x]]];
        }
        if (antipodal) {
            bool pode_free = (verdict.kind == ClassKind::AntipodalNonbipartite && p.delta % 2 == 0) ||
                             (verdict.kind == ClassKind::AntipodalBipartite && p.delta % 2 == 1 &&
                              is_connected(engine.graph));
            if (!pode_free) {
                bool preserves_pode = true;
                for (int x = 0; x < engine.graph.n; ++x)
                    if (side[x] == 1 && side[pi[x]] != 1) preserves_pode = false;
                if (!preserves_pode) continue;  // only poded automorphisms are claimed
            }
        }
        for (int u = 0; u < engine.graph.n; ++u)
            for (int v = u + 1; v < engine.graph.n; ++v) {
                ++rep.checked;
                if (engine.graph.get(pi[u], pi[v]) != engine.graph.get(u, v)) {
                    std::ostringstream os;
                    os << format_graph(g) << " automorphism breaks pair " << u << '-' << v;
                    rep.violations.push_back({os.str(), "automorphism"});
                }
            }
    }
    return rep;
}

namespace {

int amalgam_min_base(const AdmissibilityVerdict& v, const ParameterSet& p) {
    if (is_inf(p.delta)) return 1;
    switch (v.kind) {
    case ClassKind::Primitive:
        return 0;
    case ClassKind::Bipartite:
        return 1;
    case ClassKind::AntipodalNonbipartite:
        if (p.delta % 2 == 0) return 0;
        throw Error(ErrorCode::Unsupported, "no local amalgamation for this antipodal kind");
    case ClassKind::AntipodalBipartite:
        if (p.delta % 2 == 1) return 1;
        throw Error(ErrorCode::Unsupported, "no local amalgamation for this antipodal kind");
    default:
        throw Error(ErrorCode::NotAdmissible, "parameters are not admissible");
    }
}

void require_member(const EdgeLabelledGraph& g, const ParameterSet& p, const char* role) {
    if (g.n == 0) return;
    if (!g.is_complete())
        throw Error(ErrorCode::Malformed, std::string(role) + " factor must be complete");
    if (!membership_check(g, p).pass)
        throw Error(ErrorCode::Malformed, std::string(role) + " factor is not a class member");
}

} // namespace

EdgeLabelledGraph canonical_amalgam(const AmalgamTriple& t, const ParameterSet& p, int M) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible) throw Error(ErrorCode::NotAdmissible, "parameters are not admissible");
    int min_base = amalgam_min_base(v, p);
    if (t.c.n < min_base)
        throw Error(ErrorCode::EmptyBaseUnsupported,
                    "this kind amalgamates only over a non-empty base");
    if (t.c.n > t.a.n || t.c.n > t.b.n)
        throw Error(ErrorCode::Malformed, "base is larger than a factor");
    std::vector<int> base_ids(t.c.n);
    for (int i = 0; i < t.c.n; ++i) base_ids[i] = i;
    if (induced_subgraph(t.a, base_ids) != t.c || induced_subgraph(t.b, base_ids) != t.c)
        throw Error(ErrorCode::Malformed, "factors disagree with the base");
    require_member(t.a, p, "first");
    require_member(t.b, p, "second");

    int n = t.a.n + t.b.n - t.c.n;
    EdgeLabelledGraph free(n);
    for (int u = 0; u < t.a.n; ++u)
        for (int w = u + 1; w < t.a.n; ++w)
            if (t.a.has_edge(u, w)) free.set_edge(u, w, t.a.get(u, w));
    auto bmap = [&](int j) { return j < t.c.n ? j : t.a.n + (j - t.c.n); };
    for (int u = 0; u < t.b.n; ++u)
        for (int w = u + 1; w < t.b.n; ++w)
            if (t.b.has_edge(u, w)) free.set_edge(bmap(u), bmap(w), t.b.get(u, w));

    CompleteOptions opts;
    opts.magic = M;
    CompletionResult r = dispatch_complete(free, p, opts);
    if (r.status != CompletionStatus::Success) {
        std::string why = r.certificate ? r.certificate->kind : "no completion";
        throw Error(ErrorCode::NoCompletion, "amalgam admits no completion: " + why);
    }
    if (r.graph.n == n) return r.graph;
    std::vector<int> keep(n);
    for (int i = 0; i < n; ++i) keep[i] = i;
    return induced_subgraph(r.graph, keep);
}

namespace {

EdgeLabelledGraph relabel(const EdgeLabelledGraph& g, const std::vector<int>& pi) {
    EdgeLabelledGraph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) out.set_edge(pi[u], pi[v], g.get(u, v));
    return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace

VerifyReport sir_property_suite(const ParameterSet& p, int M, int size_bound) {
    VerifyReport rep;
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible) throw Error(ErrorCode::NotAdmissible, "parameters are not admissible");
    if (is_inf(p.delta))
        throw Error(ErrorCode::Unsupported, "property suite covers finite diameters only");
    int min_base = amalgam_min_base(v, p);  // throws for kinds without local amalgamation
    bool strong = v.kind == ClassKind::Primitive || v.kind == ClassKind::Bipartite;

    auto note_skip = [&](const std::string& what) {
        if (rep.skipped.size() < 200) rep.skipped.push_back(what);
    };
    auto amalgam_or_null = [&](const AmalgamTriple& t) -> std::optional<EdgeLabelledGraph> {
        try {
            return canonical_amalgam(t, p, M);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoCompletion) {
                if (strong) rep.violations.push_back({"amalgam failed to complete", "closure"});
                else note_skip("amalgam not completable, skipped");
                return std::nullopt;
            }
            throw;
        }
    };

    // Extensions of base on the first base.n vertices by extra fresh vertices.
    auto extensions = [&](const EdgeLabelledGraph& base, int extra) {
        EdgeLabelledGraph partial(base.n + extra);
        for (int u = 0; u < base.n; ++u)
            for (int w = u + 1; w < base.n; ++w)
                if (base.has_edge(u, w)) partial.set_edge(u, w, base.get(u, w));
        OracleOptions opts;
        opts.max_unknown = 64;
        return enumerate_completions(partial, p, opts);
    };

    for (int cn = min_base; cn <= size_bound - 2; ++cn) {
        std::vector<EdgeLabelledGraph> bases = class_members(p, cn);
        for (const EdgeLabelledGraph& base : bases) {
            for (int ea = 1; cn + ea + 1 <= size_bound; ++ea) {
                std::vector<EdgeLabelledGraph> as = extensions(base, ea);
                for (int eb = 1; cn + ea + eb <= size_bound; ++eb) {
                    std::vector<EdgeLabelledGraph> bs = extensions(base, eb);
                    for (const EdgeLabelledGraph& A : as)
                        for (const EdgeLabelledGraph& B : bs) {
                            AmalgamTriple t{base, A, B};
                            std::optional<EdgeLabelledGraph> D = amalgam_or_null(t);
                            ++rep.checked;
                            if (!D) continue;

                            // symmetry in the two factors
                            std::optional<EdgeLabelledGraph> R =
                                amalgam_or_null(AmalgamTriple{base, B, A});
                            ++rep.checked;
                            if (R) {
                                std::vector<int> pi(D->n);
                                for (int i = 0; i < cn; ++i) pi[i] = i;
                                for (int i = 0; i < ea; ++i) pi[cn + i] = cn + eb + i;
                                for (int i = 0; i < eb; ++i) pi[cn + ea + i] = cn + i;
                                if (relabel(*D, pi) != *R)
                                    rep.violations.push_back(
                                        {format_graph(A) + " | " + format_graph(B), "symmetry"});
                            }

                            // monotonicity under shrinking the second factor
                            for (int mask = 0; mask < (1 << eb); ++mask) {
                                std::vector<int> keep_b(base.n);
                                for (int i = 0; i < cn; ++i) keep_b[i] = i;
                                std::vector<int> keep_d(cn + ea);
                                for (int i = 0; i < cn + ea; ++i) keep_d[i] = i;
                                for (int i = 0; i < eb; ++i)
                                    if (mask & (1 << i)) {
                                        keep_b.push_back(cn + i);
                                        keep_d.push_back(cn + ea + i);
                                    }
                                EdgeLabelledGraph Bsub = induced_subgraph(B, keep_b);
                                std::optional<EdgeLabelledGraph> Dsub =
                                    amalgam_or_null(AmalgamTriple{base, A, Bsub});
                                ++rep.checked;
                                if (Dsub && *Dsub != induced_subgraph(*D, keep_d))
                                    rep.violations.push_back(
                                        {format_graph(A) + " | " + format_graph(B) +
                                             " mask=" + std::to_string(mask),
                                         "monotonicity"});
                            }

                            // stationarity under relabelling all three parts
                            for (const std::vector<int>& pc : all_permutations(cn))
                                for (const std::vector<int>& pa : all_permutations(ea))
                                    for (const std::vector<int>& pb : all_permutations(eb)) {
                                        std::vector<int> pia(cn + ea), pib(cn + eb), pid(D->n);
                                        for (int i = 0; i < cn; ++i)
                                            pia[i] = pib[i] = pid[i] = pc[i];
                                        for (int i = 0; i < ea; ++i)
                                            pia[cn + i] = pid[cn + i] = cn + pa[i];
                                        for (int i = 0; i < eb; ++i) {
                                            pib[cn + i] = cn + pb[i];
                                            pid[cn + ea + i] = cn + ea + pb[i];
                                        }
                                        AmalgamTriple rt{relabel(base, pc), relabel(A, pia),
                                                         relabel(B, pib)};
                                        std::optional<EdgeLabelledGraph> RD = amalgam_or_null(rt);
                                        ++rep.checked;
                                        if (RD && *RD != relabel(*D, pid))
                                            rep.violations.push_back(
                                                {format_graph(A) + " | " + format_graph(B),
                                                 "stationarity"});
                                    }

                            // associativity of nested amalgams over the same base
                            for (int ed = 1; cn + ea + eb + ed <= size_bound; ++ed) {
                                for (const EdgeLabelledGraph& Dg : extensions(base, ed)) {
                                    std::optional<EdgeLabelledGraph> left;
                                    std::optional<EdgeLabelledGraph> bd =
                                        amalgam_or_null(AmalgamTriple{base, B, Dg});
                                    if (D) left = amalgam_or_null(AmalgamTriple{base, *D, Dg});
                                    std::optional<EdgeLabelledGraph> right;
                                    if (bd) right = amalgam_or_null(AmalgamTriple{base, A, *bd});
                                    ++rep.checked;
                                    if (left && right && *left != *right)
                                        rep.violations.push_back(
                                            {format_graph(A) + " | " + format_graph(B) + " | " +
                                                 format_graph(Dg),
                                             "associativity"});
                                }
                            }
                        }
                }
            }
        }
    }
    return rep;
}

} // namespace mhg
