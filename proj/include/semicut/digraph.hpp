#pragma once

#include "semicut/error.hpp"
#include "semicut/rational.hpp"
#include "semicut/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace semicut {

/** A permutation of {0,...,n-1}; perm[i] is the vertex at position i+1. */
struct Ordering {
    std::vector<int> perm;

    static Ordering identity(int n) {
        Ordering o;
        o.perm.resize(n);
        for (int i = 0; i < n; ++i) o.perm[i] = i;
        return o;
    }

    int size() const { return static_cast<int>(perm.size()); }

    friend bool operator==(const Ordering&, const Ordering&) = default;
};

/** A set of arcs whose removal leaves the digraph acyclic. Kept sorted. */
struct FeedbackArcSet {
    std::vector<std::pair<int, int>> arcs;

    int64_t size() const { return static_cast<int64_t>(arcs.size()); }

    friend bool operator==(const FeedbackArcSet&, const FeedbackArcSet&) = default;
};

/** Simple digraph where every vertex pair carries at least one arc
 *  (possibly both). Immutable once validated; safe to share across
 *  threads read-only.
 *
 *  Arc presence is a dense n×n boolean matrix held as bit rows, so cut
 *  values and flow steps reduce to word operations. Optional weights
 *  are exact rationals >= 1, defined exactly on present arcs.
 */
class SemiCompleteDigraph {
public:
    SemiCompleteDigraph() = default;

    /** Validates an arc matrix (and optional weights) into an instance.
     *  Throws ValidationError: LoopPresent, MissingArcPair, WeightBelowOne,
     *  WeightOnMissingArc. */
    static SemiCompleteDigraph validate(const std::vector<std::vector<bool>>& matrix);
    static SemiCompleteDigraph validate(
        const std::vector<std::vector<bool>>& matrix,
        const std::vector<std::tuple<int, int, Weight>>& weights);

    int size() const { return n_; }
    int words_per_row() const { return wpr_; }

    bool has_arc(int u, int v) const {
        return (rows_[static_cast<size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    /** Word block of the out-neighbourhood of u. */
    const uint64_t* row_words(int u) const { return rows_.data() + static_cast<size_t>(u) * wpr_; }

    VertexSet out_set(int u) const;

    int64_t arc_count() const { return arc_count_; }

    bool is_weighted() const { return !weights_.empty(); }

    /** Weight of a present arc; throws WeightedCalledOnUnweighted if the
     *  instance has no weights. */
    const Weight& arc_weight(int u, int v) const;

private:
    SemiCompleteDigraph(int n, std::vector<uint64_t> rows, std::vector<Weight> weights);

    int n_ = 0;
    int wpr_ = 0;                  // words per row
    int64_t arc_count_ = 0;
    std::vector<uint64_t> rows_;   // n * wpr_ words, row u = out-neighbours of u
    std::vector<Weight> weights_;  // n*n dense when weighted, else empty
};

// --- ordering evaluation ------------------------------------------------

/** True iff every pair carries exactly one arc. */
bool is_tournament(const SemiCompleteDigraph& t);

/** max_t |E(suffix_t, prefix_t)| over the n-1 prefix cuts; 0 when n <= 1. */
int64_t ordering_width(const SemiCompleteDigraph& t, const Ordering& ordering);

/** Sum over backward arcs of their position distance. */
int64_t ordering_cost(const SemiCompleteDigraph& t, const Ordering& ordering);

/** Weighted cost: each backward arc contributes weight * distance. */
Weight ordering_cost_weighted(const SemiCompleteDigraph& t, const Ordering& ordering);

/** Same value as ordering_cost, computed as the sum of all prefix-cut sizes. */
int64_t ordering_cost_by_cuts(const SemiCompleteDigraph& t, const Ordering& ordering);

/** The arcs directed backward in the ordering, sorted. Removing them
 *  leaves the digraph acyclic with the ordering as a topological order. */
FeedbackArcSet backward_arcs(const SemiCompleteDigraph& t, const Ordering& ordering);

/** Total weight of a set of arcs (used for weighted FAS objectives). */
Weight arc_set_weight(const SemiCompleteDigraph& t, const FeedbackArcSet& fas);

/** A topological order of T minus the given arcs, or nullopt if a cycle remains. */
std::optional<Ordering> topological_order_without(const SemiCompleteDigraph& t,
                                                  const FeedbackArcSet& removed);

/** Throws MalformedSolutionError unless ordering is a permutation of 0..n-1. */
void require_valid_ordering(const SemiCompleteDigraph& t, const Ordering& ordering);

// --- instance generators -------------------------------------------------

/** Tournament with all arcs directed from smaller to larger index. */
SemiCompleteDigraph gen_transitive(int n);

/** Uniformly random orientation per pair. Deterministic for a given seed. */
SemiCompleteDigraph gen_random_tournament(int n, uint64_t seed);

/** Transitive tournament with `flips` distinct arcs reversed, chosen
 *  uniformly; the result has a feedback arc set of size <= flips. */
SemiCompleteDigraph gen_noisy_transitive(int n, int flips, uint64_t seed);

/** Random orientation per pair; additionally both arcs with probability
 *  p_double. */
SemiCompleteDigraph gen_random_semicomplete(int n, double p_double, uint64_t seed);

} // namespace semicut
