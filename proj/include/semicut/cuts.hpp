#pragma once

#include "semicut/digraph.hpp"
#include "semicut/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace semicut {

/** A bipartition (X, Y) of the vertex set; Y is the complement of x. */
struct Cut {
    VertexSet x;
    int n = 0;

    int level() const { return x.count(); } // |X|

    friend bool operator==(const Cut&, const Cut&) = default;
};

enum class CutSide : uint8_t { X, Y };

/** Sides chosen for the first side.size() vertices in index order. */
struct PartialAssignment {
    std::vector<CutSide> side;

    int prefix_length() const { return static_cast<int>(side.size()); }
};

/** Exact number of arcs directed from Y to X. */
int64_t cut_value(const SemiCompleteDigraph& t, const Cut& cut);

/** Total weight of the arcs directed from Y to X. */
Weight cut_value_weighted(const SemiCompleteDigraph& t, const Cut& cut);

/** Minimum, over all completions of the unassigned vertices, of the
 *  number of arcs from the final Y to the final X. Computed as a
 *  unit-capacity max-flow from the Y-assigned to the X-assigned
 *  vertices; at a full assignment this equals cut_value. */
int64_t min_completion_cut(const SemiCompleteDigraph& t, const PartialAssignment& partial);

/** Outcome of bounded k-cut enumeration. */
struct CutEnumeration {
    enum class Outcome { Complete, CapExceeded };

    Outcome outcome = Outcome::Complete;
    std::vector<Cut> cuts;      // populated only for Complete
    uint64_t cap = 0;
    uint64_t cuts_emitted = 0;  // cap + 1 for CapExceeded
    uint64_t nodes_expanded = 0; // branch nodes touched; delay diagnostics

    bool complete() const { return outcome == Outcome::Complete; }
};

/** Enumerates every k-cut exactly once, in the deterministic order of a
 *  depth-first branching over vertices 0..n-1 that assigns X before Y
 *  and prunes branches whose completion max-flow exceeds k. Aborts with
 *  CapExceeded the moment cut number cap+1 is emitted. */
CutEnumeration enumerate_k_cuts(const SemiCompleteDigraph& t, int64_t k, uint64_t cap);

/** Testing oracle: exact k-cut count over all 2^n bipartitions.
 *  Throws InstanceTooLargeForOracle for n > 24. */
uint64_t brute_count_k_cuts(const SemiCompleteDigraph& t, int64_t k);

} // namespace semicut
