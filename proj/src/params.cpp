#include "mhg/params.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace mhg {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Malformed: return "MALFORMED";
    case ErrorCode::NotAdmissible: return "NOT_ADMISSIBLE";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::IncompleteGraph: return "INCOMPLETE_GRAPH";
    case ErrorCode::NoCompletion: return "NO_COMPLETION";
    case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::EmptyBaseUnsupported: return "EMPTY_BASE_UNSUPPORTED";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::Io: return "IO";
    }
    return "UNKNOWN";
}

std::string value_to_string(int v) {
    return is_inf(v) ? "inf" : std::to_string(v);
}

int HensonConstraint::order() const {
    int t = 0;
    for (int s : clique_sizes) t += s;
    return t;
}

const char* to_string(AdmCase c) {
    switch (c) {
    case AdmCase::I: return "I";
    case AdmCase::IIA: return "IIA";
    case AdmCase::IIB: return "IIB";
    case AdmCase::III: return "III";
    case AdmCase::None: break;
    }
    return "NONE";
}

const char* to_string(ClassKind k) {
    switch (k) {
    case ClassKind::Primitive: return "PRIMITIVE";
    case ClassKind::Bipartite: return "BIPARTITE";
    case ClassKind::AntipodalNonbipartite: return "ANTIPODAL_NONBIPARTITE";
    case ClassKind::AntipodalBipartite: return "ANTIPODAL_BIPARTITE";
    case ClassKind::None: break;
    }
    return "NONE";
}

const char* to_string(TriangleReason r) {
    switch (r) {
    case TriangleReason::NonMetric: return "NON_METRIC";
    case TriangleReason::K1Bound: return "K1_BOUND";
    case TriangleReason::K2Bound: return "K2_BOUND";
    case TriangleReason::C1Bound: return "C1_BOUND";
    case TriangleReason::C0Bound: return "C0_BOUND";
    case TriangleReason::None: break;
    }
    return "NONE";
}

TriangleReason forbidden_reason(int a, int b, int c, const ParameterSet& p) {
    int x = a, y = b, z = c;
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    if (static_cast<long long>(x) + y < z) return TriangleReason::NonMetric;
    long long per = static_cast<long long>(x) + y + z;
    if (per % 2 == 1) {
        if (is_inf(p.k1) || per < 2LL * p.k1 + 1) return TriangleReason::K1Bound;
        if (!is_inf(p.c1) && per >= p.c1) return TriangleReason::C1Bound;
        if (!is_inf(p.k2) && static_cast<long long>(y) + z >= 2LL * p.k2 + x)
            return TriangleReason::K2Bound;
    } else {
        if (!is_inf(p.c0) && per >= p.c0) return TriangleReason::C0Bound;
    }
    return TriangleReason::None;
}

namespace {

void validate_fields(const ParameterSet& p) {
    if (p.delta < 0 || p.k1 < 0 || p.k2 < 0 || p.c0 < 0 || p.c1 < 0)
        throw Error(ErrorCode::Malformed, "parameter values must be non-negative");
    if (!is_inf(p.c0) && p.c0 % 2 != 0)
        throw Error(ErrorCode::Malformed, "c0 must be even");
    if (!is_inf(p.c1) && p.c1 % 2 != 1)
        throw Error(ErrorCode::Malformed, "c1 must be odd");
    for (const HensonConstraint& h : p.henson) {
        if (h.clique_sizes.empty())
            throw Error(ErrorCode::Malformed, "henson constraint has no parts");
        for (int s : h.clique_sizes)
            if (s < 1) throw Error(ErrorCode::Malformed, "henson part size below 1");
        if (!std::is_sorted(h.clique_sizes.begin(), h.clique_sizes.end(), std::greater<int>()))
            throw Error(ErrorCode::Malformed, "henson part sizes must be non-increasing");
        if (h.companion && h.clique_sizes.size() != 2)
            throw Error(ErrorCode::Malformed, "companion constraints have exactly two parts");
    }
}

void numeric_acceptability(const ParameterSet& p, std::vector<std::string>& failed) {
    if (is_inf(p.delta)) {
        bool generic_bipartite = is_inf(p.k1) && p.k2 == 0;
        bool generic_primitive = !is_inf(p.k1) && p.k1 >= 1 && is_inf(p.k2);
        if (!(generic_bipartite || generic_primitive))
            failed.push_back("acceptable:infinite_k_family");
        if (!is_inf(p.c0) || !is_inf(p.c1))
            failed.push_back("acceptable:infinite_c_bounds");
        return;
    }
    if (p.delta < 3) failed.push_back("acceptable:delta_at_least_3");
    if (is_inf(p.k1)) {
        if (p.k2 != 0) failed.push_back("acceptable:k1_infinite_needs_k2_zero");
        if (p.c1 != 2 * p.delta + 1) failed.push_back("acceptable:k1_infinite_needs_c1_2delta+1");
    } else {
        if (!(1 <= p.k1 && p.k1 <= p.k2 && p.k2 <= 2 * p.delta))
            failed.push_back("acceptable:k_range");
    }
    long long lo = 2LL * p.delta, hi = 3LL * p.delta + 2;
    if (is_inf(p.c0) || !(lo < p.c0 && p.c0 <= hi)) failed.push_back("acceptable:c0_range");
    if (is_inf(p.c1) || !(lo < p.c1 && p.c1 <= hi)) failed.push_back("acceptable:c1_range");
}

// Distance multisets of triangles realizable inside a constraint.
std::vector<std::array<int, 3>> constraint_triangles(const HensonConstraint& h, int delta) {
    std::vector<std::array<int, 3>> out;
    int far = h.companion ? delta - 1 : delta;
    int parts = static_cast<int>(h.clique_sizes.size());
    int largest = h.clique_sizes.front();
    if (largest >= 3) out.push_back({1, 1, 1});
    if (largest >= 2 && parts >= 2) out.push_back({1, far, far});
    if (!h.companion && parts >= 3) out.push_back({far, far, far});
    return out;
}

bool is_anticlique(const HensonConstraint& h) {
    if (h.companion) return false;
    for (int s : h.clique_sizes)
        if (s != 1) return false;
    return true;
}

void henson_acceptability(const ParameterSet& p, std::vector<std::string>& failed) {
    if (p.henson.empty()) return;
    if (is_inf(p.delta)) {
        failed.push_back("henson:unsupported_for_infinite_diameter");
        return;
    }
    bool clique_regime = p.c1 == 2 * p.delta + 1 && p.c0 == 2 * p.delta + 2;
    for (const HensonConstraint& h : p.henson) {
        if (clique_regime) {
            bool single_clique = !h.companion && h.clique_sizes.size() == 1;
            if (!(single_clique || h.companion))
                failed.push_back("henson:cliques_and_companions_only");
        } else if (h.companion) {
            failed.push_back("henson:companions_need_antipodal_bounds");
        }
    }
}

// Shape restrictions that depend on the kind of the (numerically admissible)
// parameter set, followed by the content check that each constraint is a
// realizable member of the class.
void henson_admissibility(const ParameterSet& p, ClassKind kind, AdmCase adm_case,
                          std::vector<std::string>& failed) {
    if (p.henson.empty()) return;
    int d = p.delta;
    if (kind == ClassKind::AntipodalNonbipartite) {
        if (d < 4) failed.push_back("henson:antipodal_needs_delta_at_least_4");
        // one clique, optionally with its full companion family
        int clique = 0;
        std::vector<std::vector<int>> companions;
        bool shape_ok = true;
        for (const HensonConstraint& h : p.henson) {
            if (!h.companion && h.clique_sizes.size() == 1) {
                if (clique != 0) shape_ok = false;
                clique = h.clique_sizes.front();
            } else if (h.companion) {
                companions.push_back(h.clique_sizes);
            } else {
                shape_ok = false;
            }
        }
        if (clique < 2) shape_ok = false;
        if (shape_ok && !companions.empty()) {
            std::vector<std::vector<int>> expected;
            for (int a = 1; a <= clique / 2; ++a)
                expected.push_back({clique - a, a});
            std::sort(companions.begin(), companions.end());
            std::sort(expected.begin(), expected.end());
            if (companions != expected) shape_ok = false;
        }
        if (!shape_ok) failed.push_back("henson:antipodal_family_shape");
    } else if (kind == ClassKind::AntipodalBipartite) {
        failed.push_back("henson:antipodal_bipartite_unsupported");
    } else if (kind == ClassKind::Bipartite) {
        bool ok = p.henson.size() == 1 && is_anticlique(p.henson.front());
        if (!ok) failed.push_back("henson:bipartite_single_anticlique_only");
        if (d % 2 != 0) failed.push_back("henson:bipartite_needs_even_delta");
    } else if (adm_case == AdmCase::III) {
        if (p.k1 == d) failed.push_back("henson:case_III_k1_delta_needs_empty");
        if (p.c() == 2 * d + 2) failed.push_back("henson:case_III_c_2delta+2_needs_empty");
    }
    if (!failed.empty()) return;
    for (const HensonConstraint& h : p.henson)
        for (const auto& tri : constraint_triangles(h, d))
            if (forbidden_reason(tri[0], tri[1], tri[2], p) != TriangleReason::None) {
                failed.push_back("henson:redundant_constraint");
                return;
            }
}

} // namespace

bool is_acceptable(const ParameterSet& p) {
    validate_fields(p);
    std::vector<std::string> failed;
    numeric_acceptability(p, failed);
    if (failed.empty()) henson_acceptability(p, failed);
    return failed.empty();
}

AdmissibilityVerdict admissibility_verdict(const ParameterSet& p) {
    validate_fields(p);
    AdmissibilityVerdict v;
    std::vector<std::string> failed;
    numeric_acceptability(p, failed);
    if (failed.empty()) henson_acceptability(p, failed);
    v.acceptable = failed.empty();
    if (!v.acceptable) {
        v.failed_conditions = std::move(failed);
        return v;
    }

    if (is_inf(p.delta)) {
        // The two infinite-diameter families carry no further conditions. The
        // case II subdivision is meaningless here; IIA stands for the whole
        // finite-K1 family.
        v.admissible = true;
        v.adm_case = is_inf(p.k1) ? AdmCase::I : AdmCase::IIA;
        v.kind = is_inf(p.k1) ? ClassKind::Bipartite : ClassKind::Primitive;
        return v;
    }

    int d = p.delta;
    int C = p.c(), Cp = p.c_prime();
    AdmCase adm_case = AdmCase::None;
    if (is_inf(p.k1)) {
        adm_case = AdmCase::I;
    } else if (C <= 2 * d + p.k1) {
        if (C != 2 * p.k1 + 2 * p.k2 + 1) failed.push_back("caseII:c_equals_2k1+2k2+1");
        if (p.k1 + p.k2 < d) failed.push_back("caseII:k1+k2_at_least_delta");
        if (p.k1 + 2 * p.k2 > 2 * d - 1) failed.push_back("caseII:k1+2k2_at_most_2delta-1");
        if (failed.empty()) {
            if (Cp == C + 1)
                adm_case = AdmCase::IIA;
            else if (p.k1 == p.k2 && 3 * p.k2 == 2 * d - 1)
                adm_case = AdmCase::IIB;
            else
                failed.push_back("caseII:subcase_shape");
        }
    } else {
        if (p.k1 + 2 * p.k2 < 2 * d - 1) failed.push_back("caseIII:k1+2k2_at_least_2delta-1");
        if (3 * p.k2 < 2 * d) failed.push_back("caseIII:3k2_at_least_2delta");
        if (p.k1 + 2 * p.k2 == 2 * d - 1 && C < 2 * d + p.k1 + 2)
            failed.push_back("caseIII:c_gap_when_k1+2k2_minimal");
        if (Cp > C + 1 && C < 2 * d + p.k2)
            failed.push_back("caseIII:c_at_least_2delta+k2_when_spread");
        if (failed.empty()) adm_case = AdmCase::III;
    }

    if (failed.empty()) {
        ClassKind kind;
        if (is_inf(p.k1))
            kind = (p.c0 == 2 * d + 2) ? ClassKind::AntipodalBipartite : ClassKind::Bipartite;
        else
            kind = (C == 2 * d + 1) ? ClassKind::AntipodalNonbipartite : ClassKind::Primitive;
        henson_admissibility(p, kind, adm_case, failed);
        if (failed.empty()) {
            v.admissible = true;
            v.adm_case = adm_case;
            v.kind = kind;
        }
    }
    v.failed_conditions = std::move(failed);
    return v;
}

std::vector<int> magic_set(const ParameterSet& p) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible)
        throw Error(ErrorCode::NotAdmissible, "magic set requires admissible parameters");
    if (is_inf(p.delta))
        throw Error(ErrorCode::NotAdmissible, "magic set is undefined for infinite diameter");
    int d = p.delta;
    std::vector<int> out;
    switch (v.kind) {
    case ClassKind::Primitive: {
        int lo = std::max(p.k1, (d + 1) / 2);
        int hi = std::min(p.k2, (p.c() - d - 1) / 2);
        for (int m = lo; m <= hi; ++m) out.push_back(m);
        break;
    }
    case ClassKind::Bipartite: {
        int lo = d / 2;
        int hi = (p.c0 - d - 1) / 2 - 1;
        for (int m = lo; m <= hi; ++m) out.push_back(m);
        break;
    }
    default:
        out.push_back(d / 2);
        break;
    }
    return out;
}

bool is_completion_parameter(const ParameterSet& p, int M) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible || is_inf(p.delta)) return false;
    std::vector<int> ms = magic_set(p);
    if (!std::binary_search(ms.begin(), ms.end(), M)) return false;
    if (v.kind == ClassKind::Primitive && v.adm_case == AdmCase::III) {
        int d = p.delta, C = p.c();
        if (p.k1 + 2 * p.k2 == 2 * d - 1 && M <= p.k1) return false;
        if (p.c_prime() > C + 1 && C == 2 * d + p.k2 && M >= p.k2) return false;
    }
    return true;
}

int completion_parameter(const ParameterSet& p) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible)
        throw Error(ErrorCode::NotAdmissible, "completion parameter requires admissible parameters");
    if (is_inf(p.delta))
        throw Error(ErrorCode::NotAdmissible, "completion parameter is undefined for infinite diameter");
    for (int m : magic_set(p))
        if (is_completion_parameter(p, m)) return m;
    throw Error(ErrorCode::NotAdmissible, "no valid completion parameter exists");
}

std::vector<AdmissibleRow> enumerate_admissible(int delta, bool include_bipartite) {
    if (delta < 3 || delta > 16)
        throw Error(ErrorCode::OutOfRange, "delta must lie between 3 and 16");
    std::vector<AdmissibleRow> rows;
    auto consider = [&](ParameterSet q) {
        AdmissibilityVerdict v = admissibility_verdict(q);
        if (!v.admissible) return;
        AdmissibleRow r;
        if (!is_inf(q.k1)) {
            r.m_min = std::max(q.k1, (delta + 1) / 2);
            r.m_max = std::min(q.k2, (q.c() - delta - 1) / 2);
        }
        r.params = std::move(q);
        r.verdict = std::move(v);
        rows.push_back(std::move(r));
    };
    // K2 values above delta are acceptable but describe the same class as
    // K2 = delta (two sides of a triangle never sum past 2*delta), so the
    // catalogue keeps K2 <= delta as the canonical representative.
    for (int k1 = 1; k1 <= delta; ++k1)
        for (int k2 = k1; k2 <= delta; ++k2)
            for (int c0 = 2 * delta + 2; c0 <= 3 * delta + 2; c0 += 2)
                for (int c1 = 2 * delta + 1; c1 <= 3 * delta + 2; c1 += 2)
                    consider(ParameterSet{delta, k1, k2, c0, c1, {}});
    if (include_bipartite)
        for (int c0 = 2 * delta + 2; c0 <= 3 * delta + 2; c0 += 2)
            consider(ParameterSet{delta, kInf, 0, c0, 2 * delta + 1, {}});
    return rows;
}

std::vector<HensonConstraint> normalized_henson(const ParameterSet& p) {
    if (p.henson.empty()) return {};
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (v.kind != ClassKind::AntipodalNonbipartite) return p.henson;
    int clique = 0;
    for (const HensonConstraint& h : p.henson)
        if (!h.companion && h.clique_sizes.size() == 1)
            clique = std::max(clique, h.clique_sizes.front());
    if (clique < 2) return p.henson;
    std::vector<HensonConstraint> out;
    out.push_back({{clique}, false});
    for (int a = 1; a <= clique / 2; ++a)
        out.push_back({{clique - a, a}, true});
    return out;
}

} // namespace mhg
