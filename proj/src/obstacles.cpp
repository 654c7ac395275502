#include "mhg/obstacles.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace mhg {

std::vector<int> canonical_cycle(const std::vector<int>& labels) {
    size_t k = labels.size();
    std::vector<int> best = labels;
    std::vector<int> cand(k);
    const std::vector<int> reversed(labels.rbegin(), labels.rend());
    for (const std::vector<int>* dir : {&labels, &reversed})
        for (size_t r = 0; r < k; ++r) {
            for (size_t i = 0; i < k; ++i) cand[i] = (*dir)[(r + i) % k];
            if (cand < best) best = cand;
        }
    return best;
}

EdgeLabelledGraph cycle_graph(const std::vector<int>& labels) {
    int k = static_cast<int>(labels.size());
    EdgeLabelledGraph g(k);
    for (int i = 0; i < k; ++i) g.set_edge(i, (i + 1) % k, labels[i]);
    return g;
}

ObstacleCatalogue enumerate_obstacles(const ParameterSet& p, int max_len,
                                      ObstacleDecider decider) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible || v.kind != ClassKind::Primitive || is_inf(p.delta))
        throw Error(ErrorCode::NotAdmissible,
                    "obstacle enumeration covers admissible primitive classes");
    long long bound = 3LL << p.delta;
    if (max_len < 3 || max_len > 8 || max_len > bound)
        throw Error(ErrorCode::TooLarge, "cycle length cap exceeded");
    int M = completion_parameter(p);

    auto completable = [&](const std::vector<int>& labels) {
        EdgeLabelledGraph g = cycle_graph(labels);
        if (decider == ObstacleDecider::Engine)
            return magic_complete(g, p, M).status == CompletionStatus::Success;
        return has_completion(g, p);
    };

    ObstacleCatalogue cat;
    cat.params = p;
    cat.bound_theoretical = bound;
    for (int k = 3; k <= max_len; ++k) {
        std::vector<std::vector<int>>& bucket = cat.by_length[k];
        std::vector<int> labels(k, 1);
        while (true) {
            if (labels == canonical_cycle(labels) && !completable(labels))
                bucket.push_back(labels);
            int i = k - 1;
            while (i >= 0 && labels[i] == p.delta) labels[i--] = 1;
            if (i < 0) break;
            ++labels[i];
        }
    }
    return cat;
}

std::vector<std::vector<int>> backward_expand(const std::vector<int>& cycle,
                                              const ParameterSet& p, int M) {
    int k = static_cast<int>(cycle.size());
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;
    for (int pos = 0; pos < k; ++pos) {
        int x = cycle[pos];
        if (x == M) continue;  // the fill value is never a fork target
        for (int a = 1; a <= p.delta; ++a)
            for (int b = 1; b <= p.delta; ++b) {
                if (fork_value(a, b, p, M) != x) continue;
                std::vector<int> spliced;
                spliced.reserve(k + 1);
                for (int i = 0; i < pos; ++i) spliced.push_back(cycle[i]);
                spliced.push_back(a);
                spliced.push_back(b);
                for (int i = pos + 1; i < k; ++i) spliced.push_back(cycle[i]);
                std::vector<int> canon = canonical_cycle(spliced);
                if (seen.insert(canon).second) out.push_back(std::move(canon));
            }
    }
    return out;
}

bool cycle_maps_into(const std::vector<int>& labels, const EdgeLabelledGraph& g) {
    int k = static_cast<int>(labels.size());
    if (g.n == 0) return false;
    std::vector<int> walk;
    std::function<bool()> step = [&]() -> bool {
        int i = static_cast<int>(walk.size());
        if (i == k) return g.get(walk.back(), walk.front()) == labels[k - 1];
        int need = labels[i - 1];
        for (int v = 0; v < g.n; ++v) {
            if (g.get(walk.back(), v) != need) continue;
            walk.push_back(v);
            if (step()) return true;
            walk.pop_back();
        }
        return false;
    };
    for (int start = 0; start < g.n; ++start) {
        walk.assign(1, start);
        if (step()) return true;
    }
    return false;
}

VerifyReport verify_obstacle_closure(const ParameterSet& p, const ObstacleCatalogue& catalogue,
                                     int samples, uint32_t seed) {
    VerifyReport rep;
    int M = completion_parameter(p);
    std::mt19937 gen(seed);
    int with_image = 0;
    for (int s = 0; s < samples; ++s) {
        int n = 3 + static_cast<int>(gen() % 4);
        EdgeLabelledGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (gen() % 2 == 0) g.set_edge(u, v, 1 + static_cast<int>(gen() % p.delta));
        bool image = false;
        for (const auto& [len, bucket] : catalogue.by_length) {
            for (const std::vector<int>& cyc : bucket)
                if (cycle_maps_into(cyc, g)) {
                    image = true;
                    break;
                }
            if (image) break;
        }
        if (image) {
            ++with_image;
            continue;
        }
        ++rep.checked;
        if (magic_complete(g, p, M).status != CompletionStatus::Success) {
            std::ostringstream os;
            os << "sample " << s << " (" << format_graph(g) << ") has no obstacle image yet fails";
            rep.violations.push_back({os.str(), "closure"});
        }
    }
    if (with_image > 0)
        rep.skipped.push_back(std::to_string(with_image) + " samples contained an obstacle image");
    return rep;
}

} // namespace mhg
