#include "semicut/solvers.hpp"

#include "semicut/cuts.hpp"
#include "semicut/error.hpp"

#include <algorithm>
#include <chrono>

namespace semicut {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

uint64_t cap_as_u64(const BigInt& cap) {
    // enumeration can never emit 2^64 cuts, so saturation preserves the
    // arbitrary-precision comparison semantics
    if (cap.fits_ulong_p()) return cap.get_ui();
    return UINT64_MAX;
}

int64_t floor_to_int64(const Weight& w) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), w.get_num().get_mpz_t(), w.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw InvalidParameterError("budget too large");
    return q.get_si();
}

void require_certificate(bool ok) {
    if (!ok) throw Error("internal error: solver certificate failed independent verification");
}

SolveOutcome no_outcome(NoReason reason, SolveStats stats) {
    SolveOutcome out;
    out.yes = false;
    out.reason = reason;
    out.stats = std::move(stats);
    return out;
}

} // namespace

SolveOutcome fas_decide(const SemiCompleteDigraph& t, int64_t k) {
    if (k < 0) throw InvalidParameterError("budget must be non-negative");
    Timer timer;
    SolveStats stats;
    stats.cap = cap_fas(t.size(), k);
    stats.enumeration_k = k;

    CutEnumeration enumeration = enumerate_k_cuts(t, k, cap_as_u64(stats.cap));
    stats.cuts_emitted = enumeration.cuts_emitted;
    if (!enumeration.complete()) {
        stats.elapsed_ms = timer.ms();
        return no_outcome(NoReason::CapExceeded, std::move(stats));
    }

    CutGraph graph = CutGraph::build(t, std::move(enumeration.cuts), WeightMode::Fas);
    stats.cut_graph_vertices = graph.vertex_count();
    auto path = solve_min_path(graph, k);
    stats.elapsed_ms = timer.ms();
    if (!path) return no_outcome(NoReason::SearchExhausted, std::move(stats));

    SolveOutcome out;
    out.yes = true;
    out.ordering = path_to_ordering(*path);
    out.fas = path_to_fas(t, *path);
    out.objective = Weight(static_cast<long>(out.fas->size()));
    require_certificate(verify(Problem::Fas, t, {out.ordering, out.fas}, Weight(static_cast<long>(k))));
    out.stats = std::move(stats);
    return out;
}

SolveOutcome fas_decide_weighted(const SemiCompleteDigraph& t, const Weight& k) {
    if (!t.is_weighted()) throw WeightedCalledOnUnweightedError();
    if (k < 0) throw InvalidParameterError("budget must be non-negative");
    Timer timer;
    // weights are >= 1, so a solution of weight <= k has at most ⌊k⌋ arcs
    // and the unweighted cut structure suffices
    const int64_t k_arcs = floor_to_int64(k);
    SolveStats stats;
    stats.cap = cap_fas(t.size(), k_arcs);
    stats.enumeration_k = k_arcs;

    CutEnumeration enumeration = enumerate_k_cuts(t, k_arcs, cap_as_u64(stats.cap));
    stats.cuts_emitted = enumeration.cuts_emitted;
    if (!enumeration.complete()) {
        stats.elapsed_ms = timer.ms();
        return no_outcome(NoReason::CapExceeded, std::move(stats));
    }

    CutGraph graph = CutGraph::build(t, std::move(enumeration.cuts), WeightMode::FasWeighted);
    stats.cut_graph_vertices = graph.vertex_count();
    auto path = solve_min_path_weighted(graph, k);
    stats.elapsed_ms = timer.ms();
    if (!path) return no_outcome(NoReason::SearchExhausted, std::move(stats));

    SolveOutcome out;
    out.yes = true;
    out.ordering = path_to_ordering(*path);
    out.fas = path_to_fas(t, *path);
    out.objective = arc_set_weight(t, *out.fas);
    require_certificate(verify(Problem::Fas, t, {out.ordering, out.fas}, k, /*weighted=*/true));
    out.stats = std::move(stats);
    return out;
}

SolveOutcome cutwidth_decide(const SemiCompleteDigraph& t, int64_t k) {
    if (k < 0) throw InvalidParameterError("budget must be non-negative");
    Timer timer;
    SolveStats stats;
    stats.cap = cap_cutwidth(t.size(), k);
    stats.enumeration_k = k;

    CutEnumeration enumeration = enumerate_k_cuts(t, k, cap_as_u64(stats.cap));
    stats.cuts_emitted = enumeration.cuts_emitted;
    if (!enumeration.complete()) {
        stats.elapsed_ms = timer.ms();
        return no_outcome(NoReason::CapExceeded, std::move(stats));
    }

    CutGraph graph = CutGraph::build(t, std::move(enumeration.cuts), WeightMode::Reachability);
    stats.cut_graph_vertices = graph.vertex_count();
    auto path = solve_reachability(graph);
    stats.elapsed_ms = timer.ms();
    if (!path) return no_outcome(NoReason::SearchExhausted, std::move(stats));

    SolveOutcome out;
    out.yes = true;
    out.ordering = path_to_ordering(*path);
    out.objective = Weight(static_cast<long>(ordering_width(t, *out.ordering)));
    require_certificate(verify(Problem::Cutwidth, t, {out.ordering, std::nullopt},
                               Weight(static_cast<long>(k))));
    out.stats = std::move(stats);
    return out;
}

namespace {

SolveOutcome ola_decide_impl(const SemiCompleteDigraph& t, const Weight& k, bool weighted) {
    Timer timer;
    // orderings of cost <= k only cross cuts within the width budget b(⌊k⌋)
    const int64_t k_int = floor_to_int64(k);
    const int64_t width_budget = ola_width_budget(k_int);
    SolveStats stats;
    stats.cap = cap_ola(t.size(), k_int);
    stats.enumeration_k = width_budget;

    CutEnumeration enumeration = enumerate_k_cuts(t, width_budget, cap_as_u64(stats.cap));
    stats.cuts_emitted = enumeration.cuts_emitted;
    if (!enumeration.complete()) {
        stats.elapsed_ms = timer.ms();
        return no_outcome(NoReason::CapExceeded, std::move(stats));
    }

    CutGraph graph = CutGraph::build(t, std::move(enumeration.cuts),
                                     weighted ? WeightMode::OlaWeighted : WeightMode::Ola);
    stats.cut_graph_vertices = graph.vertex_count();
    auto path = weighted ? solve_min_path_weighted(graph, k)
                         : solve_min_path(graph, k_int);
    stats.elapsed_ms = timer.ms();
    if (!path) return no_outcome(NoReason::SearchExhausted, std::move(stats));

    SolveOutcome out;
    out.yes = true;
    out.ordering = path_to_ordering(*path);
    out.objective = weighted ? ordering_cost_weighted(t, *out.ordering)
                             : Weight(static_cast<long>(ordering_cost(t, *out.ordering)));
    require_certificate(verify(Problem::Ola, t, {out.ordering, std::nullopt}, k, weighted));
    out.stats = std::move(stats);
    return out;
}

} // namespace

SolveOutcome ola_decide(const SemiCompleteDigraph& t, int64_t k) {
    if (k < 0) throw InvalidParameterError("budget must be non-negative");
    return ola_decide_impl(t, Weight(static_cast<long>(k)), /*weighted=*/false);
}

SolveOutcome ola_decide_weighted(const SemiCompleteDigraph& t, const Weight& k) {
    if (!t.is_weighted()) throw WeightedCalledOnUnweightedError();
    if (k < 0) throw InvalidParameterError("budget must be non-negative");
    return ola_decide_impl(t, k, /*weighted=*/true);
}

namespace {

int64_t guaranteed_yes_budget(Problem problem, const SemiCompleteDigraph& t) {
    const int64_t n = t.size();
    const int64_t arcs = std::max<int64_t>(t.arc_count(), 0);
    switch (problem) {
        case Problem::Fas:
        case Problem::Cutwidth: return arcs;
        case Problem::Ola: return arcs * std::max<int64_t>(n - 1, 0);
    }
    return 0;
}

} // namespace

MinimizeResult minimize(Problem problem, const SemiCompleteDigraph& t, MinimizeOptions options) {
    if (options.weighted && problem == Problem::Cutwidth)
        throw InvalidParameterError("cutwidth has no weighted variant");
    if (options.weighted && !t.is_weighted()) throw WeightedCalledOnUnweightedError();

    auto decide = [&](int64_t k) -> SolveOutcome {
        switch (problem) {
            case Problem::Fas:
                return options.weighted ? fas_decide_weighted(t, Weight(static_cast<long>(k)))
                                        : fas_decide(t, k);
            case Problem::Cutwidth: return cutwidth_decide(t, k);
            case Problem::Ola:
                return options.weighted ? ola_decide_weighted(t, Weight(static_cast<long>(k)))
                                        : ola_decide(t, k);
        }
        throw InvalidParameterError("unknown problem");
    };

    // with all weights >= 1, a weighted optimum is bounded by weight-sum
    // times the unweighted budget; doubling reaches it regardless
    SolveOutcome outcome = decide(0);
    if (outcome.yes) return {0, std::move(outcome)};

    if (options.linear_scan) {
        for (int64_t k = 1;; ++k) {
            outcome = decide(k);
            if (outcome.yes) return {k, std::move(outcome)};
        }
    }

    const int64_t unweighted_upper = guaranteed_yes_budget(problem, t);
    int64_t last_no = 0;
    int64_t hi = 1;
    for (;;) {
        outcome = decide(hi);
        if (outcome.yes) break;
        last_no = hi;
        if (!options.weighted && hi >= unweighted_upper)
            throw Error("internal error: decision stayed negative past the guaranteed budget");
        hi *= 2;
    }
    while (last_no + 1 < hi) {
        const int64_t mid = last_no + (hi - last_no) / 2;
        SolveOutcome probe = decide(mid);
        if (probe.yes) {
            hi = mid;
            outcome = std::move(probe);
        } else {
            last_no = mid;
        }
    }
    return {hi, std::move(outcome)};
}

bool verify(Problem problem, const SemiCompleteDigraph& t, const Solution& solution,
            const Weight& k, bool weighted) {
    if (weighted && problem == Problem::Cutwidth)
        throw InvalidParameterError("cutwidth has no weighted variant");
    switch (problem) {
        case Problem::Fas: {
            if (!solution.fas) throw MalformedSolutionError("feedback arc set missing");
            const FeedbackArcSet& fas = *solution.fas;
            auto sorted = fas.arcs;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw MalformedSolutionError("feedback arc set lists an arc twice");
            for (const auto& [u, v] : fas.arcs) {
                if (u < 0 || v < 0 || u >= t.size() || v >= t.size() || u == v || !t.has_arc(u, v))
                    throw MalformedSolutionError("feedback arc set contains a non-arc");
            }
            if (!topological_order_without(t, fas))
                throw MalformedSolutionError("removing the candidate set leaves a cycle");
            const Weight objective =
                weighted ? arc_set_weight(t, fas) : Weight(static_cast<long>(fas.size()));
            return objective <= k;
        }
        case Problem::Cutwidth: {
            if (!solution.ordering) throw MalformedSolutionError("ordering missing");
            return Weight(static_cast<long>(ordering_width(t, *solution.ordering))) <= k;
        }
        case Problem::Ola: {
            if (!solution.ordering) throw MalformedSolutionError("ordering missing");
            const Weight objective =
                weighted ? ordering_cost_weighted(t, *solution.ordering)
                         : Weight(static_cast<long>(ordering_cost(t, *solution.ordering)));
            return objective <= k;
        }
    }
    throw InvalidParameterError("unknown problem");
}

} // namespace semicut
