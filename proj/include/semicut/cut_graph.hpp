#pragma once

#include "semicut/cuts.hpp"
#include "semicut/digraph.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace semicut {

/** True iff X2 = X1 ∪ {v} for a single vertex v ∉ X1. */
bool extends(const Cut& c1, const Cut& c2);

/** The vertex v added when c2 extends c1, or nullopt. */
std::optional<int> extension_vertex(const Cut& c1, const Cut& c2);

/** |E({v}, X1)|: arcs from v into X1 — the arcs that become backward when
 *  v is appended to the prefix. */
int64_t arc_weight_fas(const SemiCompleteDigraph& t, const Cut& c1, int v);
Weight arc_weight_fas_weighted(const SemiCompleteDigraph& t, const Cut& c1, int v);

/** |E(Y1, X1)|: the full cut size of c1; accumulating it along a
 *  source-to-sink path yields the ordering cost. */
int64_t arc_weight_ola(const SemiCompleteDigraph& t, const Cut& c1);
Weight arc_weight_ola_weighted(const SemiCompleteDigraph& t, const Cut& c1);

enum class WeightMode { Reachability, Fas, Ola, FasWeighted, OlaWeighted };

/** The auxiliary digraph over an enumerated cut family: an arc from
 *  (X1,Y1) to (X2,Y2) whenever X2 extends X1 by one vertex, so arcs go
 *  from level ℓ to ℓ+1 and any source-to-sink path spells an ordering.
 *
 *  Cuts are stored sorted by (level, lexicographic X), giving stable ids;
 *  arcs are generated on demand from the bit-set index (out-degree <= n),
 *  so memory stays linear in the number of cuts. Immutable after build.
 */
class CutGraph {
public:
    static CutGraph build(const SemiCompleteDigraph& t, std::vector<Cut> cuts, WeightMode mode);

    const SemiCompleteDigraph& digraph() const { return *t_; }
    WeightMode mode() const { return mode_; }

    size_t vertex_count() const { return cuts_.size(); }
    const Cut& cut(int id) const { return cuts_[static_cast<size_t>(id)]; }

    /** Id of (∅,V) / (V,∅); throws SourceOrSinkMissingError if absent. */
    int source_id() const;
    int sink_id() const;

    /** Calls f(target_id, extension_vertex) for each out-arc of id, in
     *  increasing extension-vertex order. */
    template <class F>
    void for_each_out_arc(int id, F&& f) const {
        const Cut& c = cuts_[static_cast<size_t>(id)];
        for (int v = 0; v < c.n; ++v) {
            if (c.x.test(v)) continue;
            auto it = index_.find(c.x.with(v));
            if (it != index_.end()) f(it->second, v);
        }
    }

    /** Weight of the arc that appends v to the cut id's prefix, in the
     *  graph's unweighted modes (Fas/Ola; Reachability arcs weigh 0). */
    int64_t arc_cost(int id, int v) const;

    /** Same for the weighted modes. */
    Weight arc_cost_weighted(int id, int v) const;

private:
    const SemiCompleteDigraph* t_ = nullptr;
    WeightMode mode_ = WeightMode::Reachability;
    std::vector<Cut> cuts_;                            // sorted by (level, lex)
    std::unordered_map<VertexSet, int, VertexSetHash> index_;
    int source_ = -1;
    int sink_ = -1;
    std::vector<int64_t> ola_cost_;   // per-cut |E(Y,X)|, Ola mode only
    std::vector<Weight> ola_cost_weighted_;
};

/** A source-to-sink path; vertices[i] is the vertex whose move from Y to
 *  X realizes step i, so the path induces a unique ordering. */
struct CutGraphPath {
    std::vector<int> cut_ids;   // n+1 ids, source first
    std::vector<int> vertices;  // n extension vertices in path order
    Weight total_weight = 0;    // exact; integral in unweighted modes
};

/** Depth-first search for any source-to-sink path (Reachability mode);
 *  nullopt when the sink is unreachable. */
std::optional<CutGraphPath> solve_reachability(const CutGraph& graph);

/** Budgeted Dijkstra: the minimum-total-weight source-to-sink path if its
 *  weight is <= budget, else nullopt. Ties are broken toward the smaller
 *  (level, lexicographic X) cut, so results are reproducible. */
std::optional<CutGraphPath> solve_min_path(const CutGraph& graph, int64_t budget);
std::optional<CutGraphPath> solve_min_path_weighted(const CutGraph& graph, const Weight& budget);

/** The ordering that appends extension vertices in path order. */
Ordering path_to_ordering(const CutGraphPath& path);

/** Backward arcs of that ordering; in Fas mode |result| equals the path weight. */
FeedbackArcSet path_to_fas(const SemiCompleteDigraph& t, const CutGraphPath& path);

} // namespace semicut
