#pragma once

#include "semicut/cuts.hpp"
#include "semicut/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace semicut::testing {

inline SemiCompleteDigraph from_rows(const std::vector<std::string>& rows) {
    std::vector<std::vector<bool>> m(rows.size(), std::vector<bool>(rows.size(), false));
    for (size_t u = 0; u < rows.size(); ++u)
        for (size_t v = 0; v < rows.size(); ++v) m[u][v] = rows[u][v] == '1';
    return SemiCompleteDigraph::validate(m);
}

/** The 3-cycle 0→1→2→0, the smallest tournament with a cycle. */
inline SemiCompleteDigraph directed_triangle() { return from_rows({"010", "001", "100"}); }

inline std::vector<std::vector<bool>> matrix_of(const SemiCompleteDigraph& t) {
    const int n = t.size();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) m[u][v] = t.has_arc(u, v);
    return m;
}

/** Copy of t with integer weights drawn uniformly from [lo, hi]. */
inline SemiCompleteDigraph with_random_int_weights(const SemiCompleteDigraph& t,
                                                   std::mt19937_64& rng, int lo, int hi) {
    std::vector<std::tuple<int, int, Weight>> weights;
    for (int u = 0; u < t.size(); ++u)
        for (int v = 0; v < t.size(); ++v)
            if (u != v && t.has_arc(u, v)) {
                const long w = lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
                weights.emplace_back(u, v, Weight(w));
            }
    return SemiCompleteDigraph::validate(matrix_of(t), weights);
}

inline SemiCompleteDigraph with_unit_weights(const SemiCompleteDigraph& t) {
    std::vector<std::tuple<int, int, Weight>> weights;
    for (int u = 0; u < t.size(); ++u)
        for (int v = 0; v < t.size(); ++v)
            if (u != v && t.has_arc(u, v)) weights.emplace_back(u, v, Weight(1));
    return SemiCompleteDigraph::validate(matrix_of(t), weights);
}

inline Ordering random_ordering(int n, std::mt19937_64& rng) {
    Ordering o = Ordering::identity(n);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
        std::swap(o.perm[i], o.perm[j]);
    }
    return o;
}

/** Deterministic mixed corpus: rotates tournament / semicomplete / noisy. */
inline SemiCompleteDigraph corpus_instance(int n, uint64_t index) {
    switch (index % 3) {
        case 0: return gen_random_tournament(n, 1000 + index);
        case 1: return gen_random_semicomplete(n, 0.25, 2000 + index);
        default:
            return gen_noisy_transitive(n, n >= 2 ? static_cast<int>(index % (n * (n - 1) / 2 + 1))
                                                  : 0,
                                        3000 + index);
    }
}

// --- independent brute-force oracles (no library code paths) -----------

/** Partitions of exactly s with parts <= max_part and at most max_parts
 *  parts, by direct recursive enumeration. */
inline int64_t brute_exact_partitions(int64_t s, int64_t max_part, int64_t max_parts) {
    if (s == 0) return 1;
    if (max_part <= 0 || max_parts <= 0) return 0;
    int64_t total = 0;
    for (int64_t first = std::min(max_part, s); first >= 1; --first)
        total += brute_exact_partitions(s - first, first, max_parts - 1);
    return total;
}

inline int64_t brute_partition_count(int64_t j) { return brute_exact_partitions(j, j, j); }

inline int64_t brute_bounded_partition_count(int64_t k, int64_t max_part, int64_t max_parts) {
    int64_t total = 0;
    for (int64_t s = 0; s <= k; ++s) total += brute_exact_partitions(s, max_part, max_parts);
    return total;
}

/** Minimum final cut value over all 2^f completions of a partial
 *  assignment; the independent check for the max-flow bound. */
inline int64_t brute_min_completion(const SemiCompleteDigraph& t, const PartialAssignment& pa) {
    const int n = t.size();
    const int fixed = pa.prefix_length();
    const int free_count = n - fixed;
    int64_t best = -1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << free_count); ++mask) {
        Cut cut{VertexSet(n), n};
        for (int v = 0; v < fixed; ++v)
            if (pa.side[v] == CutSide::X) cut.x.set(v);
        for (int i = 0; i < free_count; ++i)
            if ((mask >> i) & 1) cut.x.set(fixed + i);
        const int64_t value = cut_value(t, cut);
        if (best < 0 || value < best) best = value;
    }
    return best;
}

} // namespace semicut::testing
