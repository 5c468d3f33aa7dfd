#include "semicut/cuts.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace semicut;
using namespace semicut::testing;

namespace {

Cut make_cut(int n, std::initializer_list<int> xs) {
    Cut c{VertexSet(n), n};
    for (int v : xs) c.x.set(v);
    return c;
}

} // namespace

TEST_CASE("cut_value") {
    for (int a = 0; a <= 6; ++a) {
        Cut prefix{VertexSet(6), 6};
        for (int v = 0; v < a; ++v) prefix.x.set(v);
        CHECK(cut_value(gen_transitive(6), prefix) == 0);
    }
    CHECK(cut_value(gen_transitive(3), make_cut(3, {2})) == 2); // arcs 0->2, 1->2
    CHECK(cut_value(directed_triangle(), make_cut(3, {0})) == 1); // arc 2->0

    std::mt19937_64 rng(5);
    const auto weighted = with_random_int_weights(directed_triangle(), rng, 2, 2);
    CHECK(cut_value_weighted(weighted, make_cut(3, {0})) == Weight(2));
    CHECK_THROWS_AS(cut_value_weighted(directed_triangle(), make_cut(3, {0})),
                    WeightedCalledOnUnweightedError);
}

TEST_CASE("min_completion_cut examples") {
    // all vertices unassigned: assign everything to X
    CHECK(min_completion_cut(gen_transitive(4), PartialAssignment{}) == 0);
    // transitive(3), 0 -> Y, 1 -> X, 2 free: sending 2 to Y leaves only
    // the arc 0->1 crossing (brute-force verified)
    CHECK(min_completion_cut(gen_transitive(3),
                             PartialAssignment{{CutSide::Y, CutSide::X}}) == 1);
    // full assignment 0,1 -> Y and 2 -> X pays arcs 0->2 and 1->2
    CHECK(min_completion_cut(gen_transitive(3),
                             PartialAssignment{{CutSide::Y, CutSide::Y, CutSide::X}}) == 2);
    // triangle: a -> X, b -> Y, c free
    CHECK(min_completion_cut(directed_triangle(),
                             PartialAssignment{{CutSide::X, CutSide::Y}}) == 1);
}

TEST_CASE("min_completion_cut equals the brute-force minimum over completions") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 120; ++round) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto t = corpus_instance(n, 500 + static_cast<uint64_t>(round));
        PartialAssignment pa;
        const int fixed = static_cast<int>(rng() % static_cast<uint64_t>(n + 1));
        for (int v = 0; v < fixed; ++v)
            pa.side.push_back((rng() & 1) ? CutSide::X : CutSide::Y);
        CHECK(min_completion_cut(t, pa) == brute_min_completion(t, pa));
    }
}

TEST_CASE("min_completion_cut is monotone under extension") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 80; ++round) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const auto t = corpus_instance(n, 700 + static_cast<uint64_t>(round));
        PartialAssignment pa;
        int64_t previous = min_completion_cut(t, pa);
        for (int v = 0; v < n; ++v) {
            pa.side.push_back((rng() & 1) ? CutSide::X : CutSide::Y);
            const int64_t next = min_completion_cut(t, pa);
            CHECK(next >= previous);
            previous = next;
        }
        // at a full assignment the flow equals the true cut value
        Cut cut{VertexSet(n), n};
        for (int v = 0; v < n; ++v)
            if (pa.side[v] == CutSide::X) cut.x.set(v);
        CHECK(previous == cut_value(t, cut));
    }
}

TEST_CASE("enumerate_k_cuts on transitive tournaments") {
    for (int n = 0; n <= 12; ++n) {
        const auto result = enumerate_k_cuts(gen_transitive(n), 0, 1000);
        REQUIRE(result.complete());
        CHECK(result.cuts_emitted == static_cast<uint64_t>(n) + 1); // the prefix cuts
        CHECK(result.cuts.size() == static_cast<size_t>(n) + 1);
        for (const Cut& c : result.cuts) {
            CHECK(cut_value(gen_transitive(n), c) == 0);
            // 0-cuts of a transitive tournament are exactly the prefixes
            const int level = c.level();
            for (int v = 0; v < level; ++v) CHECK(c.x.test(v));
        }
    }
    CHECK(enumerate_k_cuts(gen_transitive(4), 1, 1000).cuts_emitted == 8);
}

TEST_CASE("enumeration respects the cap") {
    const auto capped = enumerate_k_cuts(directed_triangle(), 0, 0);
    CHECK(capped.outcome == CutEnumeration::Outcome::CapExceeded);
    CHECK(capped.cap == 0);
    CHECK(capped.cuts_emitted == 1); // cap + 1 witnesses
    CHECK(capped.cuts.empty());

    const auto capped2 = enumerate_k_cuts(gen_transitive(6), 2, 5);
    CHECK(capped2.outcome == CutEnumeration::Outcome::CapExceeded);
    CHECK(capped2.cuts_emitted == 6);
}

TEST_CASE("enumeration is sound, complete, duplicate-free and deterministic") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 60; ++round) {
        const int n = static_cast<int>(rng() % 11); // up to 10
        const int64_t k = static_cast<int64_t>(rng() % 7);
        const auto t = corpus_instance(n, 900 + static_cast<uint64_t>(round));

        const auto result = enumerate_k_cuts(t, k, UINT64_MAX);
        REQUIRE(result.complete());

        std::set<std::vector<uint64_t>> seen;
        for (const Cut& c : result.cuts) {
            CHECK(cut_value(t, c) <= k); // soundness
            CHECK(seen.insert(c.x.words()).second); // no duplicates
        }
        CHECK(result.cuts_emitted == brute_count_k_cuts(t, k)); // completeness

        const auto again = enumerate_k_cuts(t, k, UINT64_MAX);
        REQUIRE(again.complete());
        CHECK(again.cuts.size() == result.cuts.size());
        for (size_t i = 0; i < result.cuts.size(); ++i)
            CHECK(again.cuts[i] == result.cuts[i]); // deterministic emission order
    }
}

TEST_CASE("enumeration touches O(n * emitted) branch nodes") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 30; ++round) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const int64_t k = static_cast<int64_t>(rng() % 5);
        const auto t = corpus_instance(n, 1200 + static_cast<uint64_t>(round));
        const uint64_t cap = (round % 3 == 0) ? 3 : UINT64_MAX;
        const auto result = enumerate_k_cuts(t, k, cap);
        CHECK(result.nodes_expanded <=
              static_cast<uint64_t>(n + 2) * (result.cuts_emitted + 2));
    }
}

TEST_CASE("brute_count_k_cuts") {
    CHECK(brute_count_k_cuts(gen_transitive(3), 0) == 4);
    CHECK(brute_count_k_cuts(directed_triangle(), 0) == 2); // only (∅,V) and (V,∅)
    CHECK(brute_count_k_cuts(directed_triangle(), 9) == 8); // k >= n^2: everything
    CHECK(brute_count_k_cuts(gen_transitive(0), 0) == 1);
    CHECK_THROWS_AS(brute_count_k_cuts(gen_transitive(25), 1), InstanceTooLargeForOracleError);
}
