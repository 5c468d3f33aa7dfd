#pragma once

#include "semicut/digraph.hpp"

namespace semicut {

/** Brute-force reference solvers: exhaustive minimum over all n!
 *  orderings, enumerated lexicographically with no pruning. Ground truth
 *  for tests and for the CLI's --engine brute. Guarded at n <= 9. */

inline constexpr int kOracleMaxVertices = 9;

struct BruteResult {
    int64_t value = 0;
    Ordering ordering; // lexicographically first minimizer
};

struct BruteResultWeighted {
    Weight value = 0;
    Ordering ordering;
};

BruteResult brute_min_fas(const SemiCompleteDigraph& t);
BruteResult brute_cutwidth(const SemiCompleteDigraph& t);
BruteResult brute_ola(const SemiCompleteDigraph& t);

BruteResultWeighted brute_min_fas_weighted(const SemiCompleteDigraph& t);
BruteResultWeighted brute_ola_weighted(const SemiCompleteDigraph& t);

} // namespace semicut
