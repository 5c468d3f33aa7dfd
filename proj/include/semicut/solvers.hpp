#pragma once

#include "semicut/cut_graph.hpp"
#include "semicut/digraph.hpp"
#include "semicut/partitions.hpp"

#include <cstdint>
#include <optional>

namespace semicut {

enum class Problem { Fas, Cutwidth, Ola };

enum class NoReason {
    CapExceeded,     // enumeration produced more k-cuts than any Yes-instance can have
    SearchExhausted  // cut graph complete but no path within budget
};

struct SolveStats {
    uint64_t cuts_emitted = 0;
    uint64_t cut_graph_vertices = 0;
    BigInt cap = 0;
    int64_t enumeration_k = 0; // the cut bound actually enumerated (b(k) for OLA)
    double elapsed_ms = 0.0;
};

/** Certified solver answer. A Yes outcome always carries a witness whose
 *  objective was re-evaluated from scratch by the digraph module. */
struct SolveOutcome {
    bool yes = false;
    NoReason reason = NoReason::SearchExhausted; // meaningful when !yes

    std::optional<Ordering> ordering;  // witness, all problems
    std::optional<FeedbackArcSet> fas; // witness, FAS only
    Weight objective = 0;              // witness objective; integral when unweighted

    SolveStats stats;
};

/** Either finds a feedback arc set of size (weight) at most k or correctly
 *  concludes none exists. Enumerates k-cuts capped at cap_fas(n,k), then
 *  runs budgeted Dijkstra over the cut graph. */
SolveOutcome fas_decide(const SemiCompleteDigraph& t, int64_t k);
SolveOutcome fas_decide_weighted(const SemiCompleteDigraph& t, const Weight& k);

/** Ordering of width at most k, via reachability in the k-cut graph
 *  capped at cap_cutwidth(n,k). */
SolveOutcome cutwidth_decide(const SemiCompleteDigraph& t, int64_t k);

/** Ordering of cost at most k: enumerates b(k)-cuts (the width budget for
 *  cost-k orderings) capped at cap_ola(n,k), then budgeted Dijkstra. */
SolveOutcome ola_decide(const SemiCompleteDigraph& t, int64_t k);
SolveOutcome ola_decide_weighted(const SemiCompleteDigraph& t, const Weight& k);

struct MinimizeOptions {
    bool weighted = false;    // FAS/OLA only
    bool linear_scan = false; // k = 0,1,2,... instead of doubling + binary search
};

struct MinimizeResult {
    /** Smallest feasible integer budget. Equals the optimum objective for
     *  unweighted problems and for integral weights. */
    int64_t k_star = 0;
    SolveOutcome outcome; // the Yes outcome at k_star; exact objective inside
};

/** Smallest k with a Yes answer plus its certificate. */
MinimizeResult minimize(Problem problem, const SemiCompleteDigraph& t,
                        MinimizeOptions options = {});

/** Certificate container for verify: an ordering (cutwidth/OLA) or a
 *  feedback arc set (FAS). */
struct Solution {
    std::optional<Ordering> ordering;
    std::optional<FeedbackArcSet> fas;
};

/** Recomputes the objective of a candidate solution from scratch; true iff
 *  it is <= k. Throws MalformedSolutionError for non-permutations, arcs
 *  absent from the instance, or a FAS whose removal leaves a cycle. */
bool verify(Problem problem, const SemiCompleteDigraph& t, const Solution& solution,
            const Weight& k, bool weighted = false);

} // namespace semicut
