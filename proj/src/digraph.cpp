#include "semicut/digraph.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace semicut {

namespace {

std::string arc_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

/** Bounded uniform draw from raw engine output; avoids the
 *  implementation-defined std distributions so instances are stable. */
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    // rejection sampling keeps the draw unbiased
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

SemiCompleteDigraph::SemiCompleteDigraph(int n, std::vector<uint64_t> rows,
                                         std::vector<Weight> weights)
    : n_(n), wpr_((n + 63) / 64), rows_(std::move(rows)), weights_(std::move(weights)) {
    for (uint64_t w : rows_) arc_count_ += std::popcount(w);
}

SemiCompleteDigraph SemiCompleteDigraph::validate(const std::vector<std::vector<bool>>& matrix) {
    return validate(matrix, {});
}

SemiCompleteDigraph SemiCompleteDigraph::validate(
    const std::vector<std::vector<bool>>& matrix,
    const std::vector<std::tuple<int, int, Weight>>& weights) {
    const int n = static_cast<int>(matrix.size());
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw InvalidParameterError("arc matrix is not square");

    for (int v = 0; v < n; ++v)
        if (matrix[v][v])
            throw ValidationError(ValidationError::Kind::LoopPresent, v, v,
                                  "loop present at vertex " + std::to_string(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!matrix[u][v] && !matrix[v][u])
                throw ValidationError(ValidationError::Kind::MissingArcPair, u, v,
                                      "no arc between vertices " + std::to_string(u) + " and " +
                                          std::to_string(v));

    const int wpr = (n + 63) / 64;
    std::vector<uint64_t> rows(static_cast<size_t>(n) * wpr, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (matrix[u][v])
                rows[static_cast<size_t>(u) * wpr + (v >> 6)] |= uint64_t{1} << (v & 63);

    std::vector<Weight> table;
    if (!weights.empty()) {
        table.assign(static_cast<size_t>(n) * n, Weight(0));
        std::vector<bool> seen(static_cast<size_t>(n) * n, false);
        for (const auto& [u, v, w] : weights) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InvalidParameterError("weight endpoint out of range: " + arc_str(u, v));
            if (!matrix[u][v])
                throw ValidationError(ValidationError::Kind::WeightOnMissingArc, u, v,
                                      "weight on missing arc " + arc_str(u, v));
            if (w < 1)
                throw ValidationError(ValidationError::Kind::WeightBelowOne, u, v,
                                      "weight below one on arc " + arc_str(u, v));
            seen[static_cast<size_t>(u) * n + v] = true;
            table[static_cast<size_t>(u) * n + v] = w;
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (matrix[u][v] && !seen[static_cast<size_t>(u) * n + v])
                    throw InvalidParameterError("missing weight for arc " + arc_str(u, v));
    }

    return SemiCompleteDigraph(n, std::move(rows), std::move(table));
}

VertexSet SemiCompleteDigraph::out_set(int u) const {
    VertexSet s(n_);
    std::copy(row_words(u), row_words(u) + wpr_, s.words().begin());
    return s;
}

const Weight& SemiCompleteDigraph::arc_weight(int u, int v) const {
    if (!is_weighted()) throw WeightedCalledOnUnweightedError();
    return weights_[static_cast<size_t>(u) * n_ + v];
}

// --- ordering evaluation ------------------------------------------------

bool is_tournament(const SemiCompleteDigraph& t) {
    const int n = t.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (t.has_arc(u, v) && t.has_arc(v, u)) return false;
    return true;
}

void require_valid_ordering(const SemiCompleteDigraph& t, const Ordering& ordering) {
    const int n = t.size();
    if (ordering.size() != n)
        throw MalformedSolutionError("ordering length " + std::to_string(ordering.size()) +
                                     " does not match instance size " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (int v : ordering.perm) {
        if (v < 0 || v >= n || seen[v])
            throw MalformedSolutionError("ordering is not a permutation of the vertices");
        seen[v] = true;
    }
}

namespace {

std::vector<int> positions_of(const Ordering& ordering) {
    std::vector<int> pos(ordering.perm.size());
    for (int i = 0; i < ordering.size(); ++i) pos[ordering.perm[i]] = i;
    return pos;
}

} // namespace

int64_t ordering_width(const SemiCompleteDigraph& t, const Ordering& ordering) {
    require_valid_ordering(t, ordering);
    const int n = t.size();
    if (n <= 1) return 0;
    // cut_load[i] = arcs crossing backward over the gap between positions i and i+1
    std::vector<int64_t> cut_load(n - 1, 0);
    const auto pos = positions_of(ordering);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (t.has_arc(u, v) && pos[u] > pos[v])
                for (int i = pos[v]; i < pos[u]; ++i) ++cut_load[i];
    return *std::max_element(cut_load.begin(), cut_load.end());
}

int64_t ordering_cost(const SemiCompleteDigraph& t, const Ordering& ordering) {
    require_valid_ordering(t, ordering);
    const int n = t.size();
    const auto pos = positions_of(ordering);
    int64_t cost = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (t.has_arc(u, v) && pos[u] > pos[v]) cost += pos[u] - pos[v];
    return cost;
}

Weight ordering_cost_weighted(const SemiCompleteDigraph& t, const Ordering& ordering) {
    if (!t.is_weighted()) throw WeightedCalledOnUnweightedError();
    require_valid_ordering(t, ordering);
    const int n = t.size();
    const auto pos = positions_of(ordering);
    Weight cost = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (t.has_arc(u, v) && pos[u] > pos[v])
                cost += t.arc_weight(u, v) * (pos[u] - pos[v]);
    return cost;
}

int64_t ordering_cost_by_cuts(const SemiCompleteDigraph& t, const Ordering& ordering) {
    require_valid_ordering(t, ordering);
    const int n = t.size();
    int64_t total = 0;
    // prefix = {v_1..v_t} as a bit set; add |E(suffix, prefix)| for each t
    VertexSet prefix(n);
    for (int i = 0; i + 1 < n; ++i) {
        prefix.set(ordering.perm[i]);
        int64_t crossing = 0;
        for (int j = i + 1; j < n; ++j) {
            const int u = ordering.perm[j];
            const uint64_t* row = t.row_words(u);
            for (int w = 0; w < t.words_per_row(); ++w)
                crossing += std::popcount(row[w] & prefix.words()[w]);
        }
        total += crossing;
    }
    return total;
}

FeedbackArcSet backward_arcs(const SemiCompleteDigraph& t, const Ordering& ordering) {
    require_valid_ordering(t, ordering);
    const int n = t.size();
    const auto pos = positions_of(ordering);
    FeedbackArcSet fas;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (t.has_arc(u, v) && pos[u] > pos[v]) fas.arcs.emplace_back(u, v);
    std::sort(fas.arcs.begin(), fas.arcs.end());
    return fas;
}

Weight arc_set_weight(const SemiCompleteDigraph& t, const FeedbackArcSet& fas) {
    Weight total = 0;
    for (const auto& [u, v] : fas.arcs) total += t.arc_weight(u, v);
    return total;
}

std::optional<Ordering> topological_order_without(const SemiCompleteDigraph& t,
                                                  const FeedbackArcSet& removed) {
    const int n = t.size();
    std::vector<std::vector<bool>> gone(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : removed.arcs) gone[u][v] = true;

    std::vector<int> indegree(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (t.has_arc(u, v) && !gone[u][v]) ++indegree[v];

    // Kahn's algorithm, smallest-index first for determinism
    Ordering order;
    order.perm.reserve(n);
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int next = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[v] && indegree[v] == 0) {
                next = v;
                break;
            }
        if (next < 0) return std::nullopt; // cycle remains
        placed[next] = true;
        order.perm.push_back(next);
        for (int v = 0; v < n; ++v)
            if (t.has_arc(next, v) && !gone[next][v] && !placed[v]) --indegree[v];
    }
    return order;
}

// --- instance generators -------------------------------------------------

namespace {

SemiCompleteDigraph from_matrix(const std::vector<std::vector<bool>>& m) {
    return SemiCompleteDigraph::validate(m);
}

void require_size(int n) {
    if (n < 0) throw InvalidParameterError("vertex count must be non-negative");
}

} // namespace

SemiCompleteDigraph gen_transitive(int n) {
    require_size(n);
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) m[u][v] = true;
    return from_matrix(m);
}

SemiCompleteDigraph gen_random_tournament(int n, uint64_t seed) {
    require_size(n);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1)
                m[u][v] = true;
            else
                m[v][u] = true;
        }
    return from_matrix(m);
}

SemiCompleteDigraph gen_noisy_transitive(int n, int flips, uint64_t seed) {
    require_size(n);
    const int64_t pairs = static_cast<int64_t>(n) * (n - 1) / 2;
    if (flips < 0 || flips > pairs)
        throw InvalidParameterError("flip count must lie in [0, n(n-1)/2]");

    std::vector<std::pair<int, int>> all;
    all.reserve(pairs);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);

    std::mt19937_64 rng(seed);
    // partial Fisher-Yates: the first `flips` entries are a uniform sample
    for (int i = 0; i < flips; ++i) {
        const auto j = i + static_cast<int64_t>(uniform_below(rng, all.size() - i));
        std::swap(all[i], all[j]);
    }

    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) m[u][v] = true;
    for (int i = 0; i < flips; ++i) {
        const auto [u, v] = all[i];
        m[u][v] = false;
        m[v][u] = true;
    }
    return from_matrix(m);
}

SemiCompleteDigraph gen_random_semicomplete(int n, double p_double, uint64_t seed) {
    require_size(n);
    if (!(p_double >= 0.0 && p_double <= 1.0))
        throw InvalidParameterError("double-arc probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1)
                m[u][v] = true;
            else
                m[v][u] = true;
            if (uniform_unit(rng) < p_double) {
                m[u][v] = true;
                m[v][u] = true;
            }
        }
    return from_matrix(m);
}

} // namespace semicut
