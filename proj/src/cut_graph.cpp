#include "semicut/cut_graph.hpp"

#include "semicut/error.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace semicut {

std::optional<int> extension_vertex(const Cut& c1, const Cut& c2) {
    if (c1.n != c2.n) return std::nullopt;
    int added = -1;
    const auto& a = c1.x.words();
    const auto& b = c2.x.words();
    for (size_t w = 0; w < a.size(); ++w) {
        if (a[w] & ~b[w]) return std::nullopt; // X1 ⊄ X2
        uint64_t diff = b[w] & ~a[w];
        if (!diff) continue;
        if (added >= 0 || (diff & (diff - 1))) return std::nullopt; // more than one new vertex
        added = static_cast<int>(w * 64 + std::countr_zero(diff));
    }
    if (added < 0) return std::nullopt; // equal sets
    return added;
}

bool extends(const Cut& c1, const Cut& c2) { return extension_vertex(c1, c2).has_value(); }

int64_t arc_weight_fas(const SemiCompleteDigraph& t, const Cut& c1, int v) {
    const uint64_t* row = t.row_words(v);
    int64_t total = 0;
    for (int w = 0; w < t.words_per_row(); ++w)
        total += std::popcount(row[w] & c1.x.words()[w]);
    return total;
}

Weight arc_weight_fas_weighted(const SemiCompleteDigraph& t, const Cut& c1, int v) {
    if (!t.is_weighted()) throw WeightedCalledOnUnweightedError();
    Weight total = 0;
    c1.x.for_each([&](int x) {
        if (t.has_arc(v, x)) total += t.arc_weight(v, x);
    });
    return total;
}

int64_t arc_weight_ola(const SemiCompleteDigraph& t, const Cut& c1) { return cut_value(t, c1); }

Weight arc_weight_ola_weighted(const SemiCompleteDigraph& t, const Cut& c1) {
    return cut_value_weighted(t, c1);
}

CutGraph CutGraph::build(const SemiCompleteDigraph& t, std::vector<Cut> cuts, WeightMode mode) {
    CutGraph g;
    g.t_ = &t;
    g.mode_ = mode;

    std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) {
        const int la = a.level(), lb = b.level();
        if (la != lb) return la < lb;
        return VertexSet::lex_compare(a.x, b.x) < 0;
    });
    g.cuts_ = std::move(cuts);

    g.index_.reserve(g.cuts_.size());
    for (size_t i = 0; i < g.cuts_.size(); ++i) {
        auto [it, inserted] = g.index_.emplace(g.cuts_[i].x, static_cast<int>(i));
        if (!inserted) throw InvalidParameterError("duplicate cut in cut-graph input");
    }

    const int n = t.size();
    VertexSet empty(n), full(n);
    for (int v = 0; v < n; ++v) full.set(v);
    if (auto it = g.index_.find(empty); it != g.index_.end()) g.source_ = it->second;
    if (auto it = g.index_.find(full); it != g.index_.end()) g.sink_ = it->second;

    if (mode == WeightMode::Ola) {
        g.ola_cost_.resize(g.cuts_.size());
        for (size_t i = 0; i < g.cuts_.size(); ++i)
            g.ola_cost_[i] = arc_weight_ola(t, g.cuts_[i]);
    } else if (mode == WeightMode::OlaWeighted) {
        g.ola_cost_weighted_.resize(g.cuts_.size());
        for (size_t i = 0; i < g.cuts_.size(); ++i)
            g.ola_cost_weighted_[i] = arc_weight_ola_weighted(t, g.cuts_[i]);
    }
    return g;
}

int CutGraph::source_id() const {
    if (source_ < 0) throw SourceOrSinkMissingError();
    return source_;
}

int CutGraph::sink_id() const {
    if (sink_ < 0) throw SourceOrSinkMissingError();
    return sink_;
}

int64_t CutGraph::arc_cost(int id, int v) const {
    switch (mode_) {
        case WeightMode::Reachability: return 0;
        case WeightMode::Fas: return arc_weight_fas(*t_, cuts_[static_cast<size_t>(id)], v);
        case WeightMode::Ola: return ola_cost_[static_cast<size_t>(id)];
        default: throw InvalidParameterError("arc_cost called on a weighted cut graph");
    }
}

Weight CutGraph::arc_cost_weighted(int id, int v) const {
    switch (mode_) {
        case WeightMode::FasWeighted:
            return arc_weight_fas_weighted(*t_, cuts_[static_cast<size_t>(id)], v);
        case WeightMode::OlaWeighted: return ola_cost_weighted_[static_cast<size_t>(id)];
        default: throw InvalidParameterError("arc_cost_weighted called on an unweighted cut graph");
    }
}

namespace {

CutGraphPath reconstruct(const std::vector<int>& parent, const std::vector<int>& parent_vertex,
                         int sink) {
    CutGraphPath path;
    for (int id = sink; id >= 0; id = parent[id]) {
        path.cut_ids.push_back(id);
        if (parent[id] >= 0) path.vertices.push_back(parent_vertex[id]);
    }
    std::reverse(path.cut_ids.begin(), path.cut_ids.end());
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

template <class Cost, class ArcCostFn>
std::optional<CutGraphPath> dijkstra(const CutGraph& g, const Cost& budget, ArcCostFn arc_cost) {
    const int src = g.source_id();
    const int snk = g.sink_id();
    const size_t m = g.vertex_count();

    std::vector<Cost> dist(m, Cost(0));
    std::vector<char> reached(m, 0), settled(m, 0);
    std::vector<int> parent(m, -1), parent_vertex(m, -1);

    using Entry = std::pair<Cost, int>;
    auto later = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second; // cut ids are (level, lex)-sorted
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> frontier(later);

    reached[src] = 1;
    frontier.push({Cost(0), src});
    while (!frontier.empty()) {
        const auto [d, u] = frontier.top();
        frontier.pop();
        if (settled[static_cast<size_t>(u)]) continue;
        settled[static_cast<size_t>(u)] = 1;
        if (d > budget) return std::nullopt; // everything left is at least as far
        if (u == snk) {
            CutGraphPath path = reconstruct(parent, parent_vertex, snk);
            path.total_weight = Weight(d);
            return path;
        }
        g.for_each_out_arc(u, [&, du = d](int to, int v) {
            if (settled[static_cast<size_t>(to)]) return;
            Cost nd = du + arc_cost(u, v);
            if (!reached[static_cast<size_t>(to)] || nd < dist[static_cast<size_t>(to)]) {
                reached[static_cast<size_t>(to)] = 1;
                dist[static_cast<size_t>(to)] = nd;
                parent[static_cast<size_t>(to)] = u;
                parent_vertex[static_cast<size_t>(to)] = v;
                frontier.push({nd, to});
            }
        });
    }
    return std::nullopt;
}

} // namespace

std::optional<CutGraphPath> solve_reachability(const CutGraph& g) {
    if (g.mode() != WeightMode::Reachability)
        throw InvalidParameterError("solve_reachability requires a reachability-mode cut graph");
    const int src = g.source_id();
    const int snk = g.sink_id();
    const size_t m = g.vertex_count();

    std::vector<char> visited(m, 0);
    std::vector<int> parent(m, -1), parent_vertex(m, -1);
    std::vector<int> stack{src};
    visited[static_cast<size_t>(src)] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (u == snk) {
            CutGraphPath path = reconstruct(parent, parent_vertex, snk);
            path.total_weight = 0;
            return path;
        }
        // collect then push reversed so the smallest extension vertex pops first
        std::vector<std::pair<int, int>> children;
        g.for_each_out_arc(u, [&](int to, int v) {
            if (!visited[static_cast<size_t>(to)]) children.emplace_back(to, v);
        });
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
            visited[static_cast<size_t>(it->first)] = 1;
            parent[static_cast<size_t>(it->first)] = u;
            parent_vertex[static_cast<size_t>(it->first)] = it->second;
            stack.push_back(it->first);
        }
    }
    return std::nullopt;
}

std::optional<CutGraphPath> solve_min_path(const CutGraph& g, int64_t budget) {
    if (g.mode() != WeightMode::Fas && g.mode() != WeightMode::Ola)
        throw InvalidParameterError("solve_min_path requires Fas or Ola mode");
    return dijkstra<int64_t>(g, budget, [&g](int id, int v) { return g.arc_cost(id, v); });
}

std::optional<CutGraphPath> solve_min_path_weighted(const CutGraph& g, const Weight& budget) {
    if (g.mode() != WeightMode::FasWeighted && g.mode() != WeightMode::OlaWeighted)
        throw InvalidParameterError("solve_min_path_weighted requires a weighted mode");
    return dijkstra<Weight>(g, budget,
                            [&g](int id, int v) { return g.arc_cost_weighted(id, v); });
}

Ordering path_to_ordering(const CutGraphPath& path) {
    Ordering o;
    o.perm = path.vertices;
    return o;
}

FeedbackArcSet path_to_fas(const SemiCompleteDigraph& t, const CutGraphPath& path) {
    return backward_arcs(t, path_to_ordering(path));
}

} // namespace semicut
