#pragma once

#include <limits>
#include <string>
#include <vector>

#include "mhg/error.hpp"

namespace mhg {

// Parameter fields and distances share one integer domain with a saturating
// infinity sentinel. All arithmetic on parameter values must go through the
// sat_* helpers so that expressions like 2*K1+1 stay well defined.
inline constexpr int kInf = std::numeric_limits<int>::max();

inline bool is_inf(int v) { return v == kInf; }

inline int sat_add(int a, int b) {
    if (is_inf(a) || is_inf(b)) return kInf;
    long long s = static_cast<long long>(a) + b;
    return s >= kInf ? kInf : static_cast<int>(s);
}

inline int sat_mul(int a, int b) {
    if (a == 0 || b == 0) return 0;
    if (is_inf(a) || is_inf(b)) return kInf;
    long long s = static_cast<long long>(a) * b;
    return s >= kInf ? kInf : static_cast<int>(s);
}

std::string value_to_string(int v);

// One forbidden substructure: a space whose distances take only the values 1
// and delta, described by the sizes of its distance-1 cliques. With
// `companion` set the two parts sit at distance delta-1 instead, the shape
// arising from antipodal classes (exactly two parts in that case).
struct HensonConstraint {
    std::vector<int> clique_sizes; // non-increasing, each >= 1
    bool companion = false;

    int order() const;

    bool operator==(const HensonConstraint&) const = default;
};

struct ParameterSet {
    int delta = 3;
    int k1 = 1;
    int k2 = 1;
    int c0 = 0;
    int c1 = 0;
    std::vector<HensonConstraint> henson;

    // C and C' are always derived, never stored.
    int c() const { return c0 < c1 ? c0 : c1; }
    int c_prime() const { return c0 < c1 ? c1 : c0; }

    bool operator==(const ParameterSet&) const = default;
};

enum class AdmCase { None, I, IIA, IIB, III };
enum class ClassKind { None, Primitive, Bipartite, AntipodalNonbipartite, AntipodalBipartite };

const char* to_string(AdmCase c);
const char* to_string(ClassKind k);

struct AdmissibilityVerdict {
    bool acceptable = false;
    bool admissible = false;
    AdmCase adm_case = AdmCase::None;
    ClassKind kind = ClassKind::None;
    std::vector<std::string> failed_conditions;
};

// Triangle rules induced by a parameter set, evaluated on a multiset of three
// distances. Reported with a fixed priority: non-metric, K1, K2, C1, C0.
enum class TriangleReason { None, NonMetric, K1Bound, K2Bound, C1Bound, C0Bound };

const char* to_string(TriangleReason r);

// Classifies the triangle with side lengths a, b, c (any order, all >= 1).
// Returns TriangleReason::None when the triangle is allowed.
TriangleReason forbidden_reason(int a, int b, int c, const ParameterSet& p);

// Arithmetic acceptability of the tuple, including the constraint-family
// checks when henson is nonempty. Throws Error(Malformed) when a finite c0 is
// odd or a finite c1 is even, or when a field is structurally invalid.
bool is_acceptable(const ParameterSet& p);

// Full classification: acceptability, admissibility, case label and class
// kind, with the names of any failed conditions.
AdmissibilityVerdict admissibility_verdict(const ParameterSet& p);

// The magic interval for the class, as a sorted list. Primitive classes get
// max(K1, ceil(delta/2)) .. min(K2, floor((C-delta-1)/2)); bipartite classes
// get the interval where both M and M+1 stay below the C0 threshold;
// antipodal kinds get the single value floor(delta/2).
// Throws Error(NotAdmissible) when p is not admissible or delta is infinite.
std::vector<int> magic_set(const ParameterSet& p);

// Smallest magic M usable as the engine's completion parameter, after the two
// extra Case-III restrictions (M > K1 when K1+2K2 = 2delta-1, and M < K2 when
// C' > C+1 with C = 2delta+K2).
int completion_parameter(const ParameterSet& p);

// True when M lies in magic_set(p) and passes the extra restrictions above.
bool is_completion_parameter(const ParameterSet& p, int M);

struct AdmissibleRow {
    ParameterSet params;
    AdmissibilityVerdict verdict;
    // Literal endpoints of the primitive magic interval, recorded even for
    // rows of other kinds (the interval may be empty; infinite-K1 rows get
    // the empty marker 0 > -1).
    int m_min = 0;
    int m_max = -1;
};

// Every admissible tuple for the given diameter, ordered by (K1, K2, C0, C1)
// ascending with the infinite-K1 rows last. include_bipartite=false drops the
// infinite-K1 rows. Throws Error(OutOfRange) unless 3 <= delta <= 16.
std::vector<AdmissibleRow> enumerate_admissible(int delta, bool include_bipartite = true);

// For antipodal non-bipartite classes a single clique constraint stands for
// the clique together with all its two-part companions. Returns the expanded
// family for such parameter sets, or the input family unchanged otherwise.
std::vector<HensonConstraint> normalized_henson(const ParameterSet& p);

} // namespace mhg
