#include "semicut/cuts.hpp"

#include "semicut/error.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace semicut {

int64_t cut_value(const SemiCompleteDigraph& t, const Cut& cut) {
    const int n = t.size();
    const int wpr = t.words_per_row();
    int64_t total = 0;
    for (int u = 0; u < n; ++u) {
        if (cut.x.test(u)) continue;
        const uint64_t* row = t.row_words(u);
        for (int w = 0; w < wpr; ++w) total += std::popcount(row[w] & cut.x.words()[w]);
    }
    return total;
}

Weight cut_value_weighted(const SemiCompleteDigraph& t, const Cut& cut) {
    if (!t.is_weighted()) throw WeightedCalledOnUnweightedError();
    const int n = t.size();
    Weight total = 0;
    for (int u = 0; u < n; ++u) {
        if (cut.x.test(u)) continue;
        for (int v = 0; v < n; ++v)
            if (cut.x.test(v) && t.has_arc(u, v)) total += t.arc_weight(u, v);
    }
    return total;
}

namespace {

/** Incremental unit-capacity max-flow between the assigned sides.
 *
 *  Network: a super-source feeds every Y-assigned vertex and every
 *  X-assigned vertex feeds a super-sink, both through unbounded
 *  attachments; every arc of T carries capacity 1. The flow value is the
 *  minimum number of Y→X arcs over all completions of the assignment.
 *
 *  Assignments only add attachments, so the current flow stays feasible
 *  along the enumeration DFS; augmentations are logged and undone on
 *  backtrack. The value per node is identical to a from-scratch
 *  computation (max-flow values are unique), keeping enumeration
 *  outcomes independent of the reuse.
 */
class UnitFlow {
public:
    explicit UnitFlow(const SemiCompleteDigraph& t)
        : t_(t), n_(t.size()), wpr_(t.words_per_row()),
          flow_(static_cast<size_t>(n_) * wpr_, 0),
          flow_t_(static_cast<size_t>(n_) * wpr_, 0),
          xs_(n_), ys_(n_),
          visited_(static_cast<size_t>(wpr_), 0),
          parent_(static_cast<size_t>(n_), -1) {
        queue_.reserve(static_cast<size_t>(n_));
    }

    struct Mark {
        size_t undo_size;
        int64_t value;
    };

    Mark mark() const { return {undo_.size(), value_}; }

    void assign(int v, CutSide side) {
        if (side == CutSide::X)
            xs_.set(v);
        else
            ys_.set(v);
    }

    void rollback(int v, CutSide side, const Mark& m) {
        while (undo_.size() > m.undo_size) {
            const auto [u, w] = undo_.back();
            undo_.pop_back();
            toggle(u, w);
        }
        value_ = m.value;
        if (side == CutSide::X)
            xs_.reset(v);
        else
            ys_.reset(v);
    }

    /** Augments until the flow is maximum or its value exceeds bound;
     *  the returned value is exact whenever it is <= bound. */
    int64_t augment_to(int64_t bound) {
        while (value_ <= bound && find_augmenting_path()) ++value_;
        return value_;
    }

    int64_t value() const { return value_; }
    const VertexSet& x_set() const { return xs_; }

private:
    bool flow_on(int u, int v) const {
        return (flow_[static_cast<size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void toggle(int u, int v) {
        flow_[static_cast<size_t>(u) * wpr_ + (v >> 6)] ^= uint64_t{1} << (v & 63);
        flow_t_[static_cast<size_t>(v) * wpr_ + (u >> 6)] ^= uint64_t{1} << (u & 63);
    }

    void push(int u, int v) {
        // prefer cancelling opposite flow over layering a forward unit;
        // the undo log stores the pair that was actually toggled
        if (flow_on(v, u)) {
            toggle(v, u);
            undo_.emplace_back(v, u);
        } else {
            toggle(u, v);
            undo_.emplace_back(u, v);
        }
    }

    /** BFS from all Y-assigned vertices over residual arcs; on reaching
     *  any X-assigned vertex, pushes one unit along the path. */
    bool find_augmenting_path() {
        std::fill(visited_.begin(), visited_.end(), 0);
        queue_.clear();

        bool found = false;
        int goal = -1;
        ys_.for_each([&](int y) {
            if (found) return;
            visited_[static_cast<size_t>(y) >> 6] |= uint64_t{1} << (y & 63);
            parent_[y] = -1;
            queue_.push_back(y);
        });

        for (size_t head = 0; head < queue_.size() && !found; ++head) {
            const int u = queue_[head];
            const uint64_t* arc_row = t_.row_words(u);
            const uint64_t* f_row = flow_.data() + static_cast<size_t>(u) * wpr_;
            const uint64_t* ft_row = flow_t_.data() + static_cast<size_t>(u) * wpr_;
            for (int w = 0; w < wpr_ && !found; ++w) {
                uint64_t cand = ((arc_row[w] & ~f_row[w]) | ft_row[w]) & ~visited_[w];
                while (cand) {
                    const int bit = std::countr_zero(cand);
                    cand &= cand - 1;
                    const int v = w * 64 + bit;
                    visited_[w] |= uint64_t{1} << bit;
                    parent_[v] = u;
                    if (xs_.test(v)) {
                        goal = v;
                        found = true;
                        break;
                    }
                    queue_.push_back(v);
                }
            }
        }
        if (!found) return false;

        for (int v = goal; parent_[v] >= 0; v = parent_[v]) push(parent_[v], v);
        return true;
    }

    const SemiCompleteDigraph& t_;
    int n_;
    int wpr_;
    std::vector<uint64_t> flow_;   // flow_[u] bit v: one unit on arc (u,v)
    std::vector<uint64_t> flow_t_; // transpose, for reverse residual rows
    VertexSet xs_, ys_;
    int64_t value_ = 0;
    std::vector<std::pair<int, int>> undo_;

    // scratch
    std::vector<uint64_t> visited_;
    std::vector<int> parent_;
    std::vector<int> queue_;
};

} // namespace

int64_t min_completion_cut(const SemiCompleteDigraph& t, const PartialAssignment& partial) {
    const int n = t.size();
    if (partial.prefix_length() > n)
        throw InvalidParameterError("partial assignment longer than the vertex count");
    UnitFlow flow(t);
    for (int v = 0; v < partial.prefix_length(); ++v) flow.assign(v, partial.side[v]);
    // max flow is below n^2, so this bound is never binding
    return flow.augment_to(static_cast<int64_t>(n) * n + 1);
}

CutEnumeration enumerate_k_cuts(const SemiCompleteDigraph& t, int64_t k, uint64_t cap) {
    if (k < 0) throw InvalidParameterError("cut bound k must be non-negative");
    const int n = t.size();

    CutEnumeration out;
    out.cap = cap;

    UnitFlow flow(t);
    bool stopped = false;

    auto dfs = [&](auto&& self, int depth) -> void {
        ++out.nodes_expanded;
        if (depth == n) {
            ++out.cuts_emitted;
            if (cap != UINT64_MAX && out.cuts_emitted > cap) {
                out.outcome = CutEnumeration::Outcome::CapExceeded;
                out.cuts.clear();
                stopped = true;
                return;
            }
            out.cuts.push_back(Cut{flow.x_set(), n});
            return;
        }
        for (const CutSide side : {CutSide::X, CutSide::Y}) {
            const UnitFlow::Mark m = flow.mark();
            flow.assign(depth, side);
            if (flow.augment_to(k) <= k) self(self, depth + 1);
            flow.rollback(depth, side, m);
            if (stopped) return;
        }
    };
    dfs(dfs, 0);
    return out;
}

uint64_t brute_count_k_cuts(const SemiCompleteDigraph& t, int64_t k) {
    const int n = t.size();
    constexpr int kLimit = 24;
    if (n > kLimit) throw InstanceTooLargeForOracleError(n, kLimit);

    std::vector<uint64_t> row(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) row[u] = n == 0 ? 0 : t.row_words(u)[0];

    uint64_t count = 0;
    const uint64_t masks = uint64_t{1} << n;
    for (uint64_t x = 0; x < masks; ++x) {
        int64_t value = 0;
        for (int u = 0; u < n && value <= k; ++u)
            if (!((x >> u) & 1)) value += std::popcount(row[u] & x);
        if (value <= k) ++count;
    }
    return count;
}

} // namespace semicut
