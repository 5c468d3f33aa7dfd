#include "semicut/oracle.hpp"

#include "semicut/error.hpp"

#include <algorithm>
#include <vector>

namespace semicut {

namespace {

void check_size(const SemiCompleteDigraph& t) {
    if (t.size() > kOracleMaxVertices)
        throw InstanceTooLargeForOracleError(t.size(), kOracleMaxVertices);
}

std::vector<std::pair<int, int>> arc_list(const SemiCompleteDigraph& t) {
    std::vector<std::pair<int, int>> arcs;
    const int n = t.size();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && t.has_arc(u, v)) arcs.emplace_back(u, v);
    return arcs;
}

/** Runs eval(pos) over all orderings in lexicographic order and keeps the
 *  first minimizer; eval sees pos[v] = position of v. */
template <class Value, class Eval>
std::pair<Value, Ordering> exhaustive_min(const SemiCompleteDigraph& t, Eval eval) {
    const int n = t.size();
    Ordering perm = Ordering::identity(n);
    std::vector<int> pos(n);

    bool first = true;
    Value best{};
    Ordering best_perm = perm;
    do {
        for (int i = 0; i < n; ++i) pos[perm.perm[i]] = i;
        Value value = eval(pos);
        if (first || value < best) {
            first = false;
            best = std::move(value);
            best_perm = perm;
        }
    } while (std::next_permutation(perm.perm.begin(), perm.perm.end()));
    return {best, best_perm};
}

} // namespace

BruteResult brute_min_fas(const SemiCompleteDigraph& t) {
    check_size(t);
    const auto arcs = arc_list(t);
    auto [value, ordering] = exhaustive_min<int64_t>(t, [&](const std::vector<int>& pos) {
        int64_t backward = 0;
        for (const auto& [u, v] : arcs)
            if (pos[u] > pos[v]) ++backward;
        return backward;
    });
    return {value, ordering};
}

BruteResult brute_cutwidth(const SemiCompleteDigraph& t) {
    check_size(t);
    const auto arcs = arc_list(t);
    const int n = t.size();
    std::vector<int64_t> cut(std::max(n - 1, 1));
    auto [value, ordering] = exhaustive_min<int64_t>(t, [&](const std::vector<int>& pos) {
        std::fill(cut.begin(), cut.end(), 0);
        for (const auto& [u, v] : arcs)
            if (pos[u] > pos[v])
                for (int i = pos[v]; i < pos[u]; ++i) ++cut[i];
        return n <= 1 ? 0 : *std::max_element(cut.begin(), cut.begin() + (n - 1));
    });
    return {value, ordering};
}

BruteResult brute_ola(const SemiCompleteDigraph& t) {
    check_size(t);
    const auto arcs = arc_list(t);
    auto [value, ordering] = exhaustive_min<int64_t>(t, [&](const std::vector<int>& pos) {
        int64_t cost = 0;
        for (const auto& [u, v] : arcs)
            if (pos[u] > pos[v]) cost += pos[u] - pos[v];
        return cost;
    });
    return {value, ordering};
}

BruteResultWeighted brute_min_fas_weighted(const SemiCompleteDigraph& t) {
    check_size(t);
    if (!t.is_weighted()) throw WeightedCalledOnUnweightedError();
    const auto arcs = arc_list(t);
    auto [value, ordering] = exhaustive_min<Weight>(t, [&](const std::vector<int>& pos) {
        Weight total = 0;
        for (const auto& [u, v] : arcs)
            if (pos[u] > pos[v]) total += t.arc_weight(u, v);
        return total;
    });
    return {value, ordering};
}

BruteResultWeighted brute_ola_weighted(const SemiCompleteDigraph& t) {
    check_size(t);
    if (!t.is_weighted()) throw WeightedCalledOnUnweightedError();
    const auto arcs = arc_list(t);
    auto [value, ordering] = exhaustive_min<Weight>(t, [&](const std::vector<int>& pos) {
        Weight total = 0;
        for (const auto& [u, v] : arcs)
            if (pos[u] > pos[v]) total += t.arc_weight(u, v) * (pos[u] - pos[v]);
        return total;
    });
    return {value, ordering};
}

} // namespace semicut
