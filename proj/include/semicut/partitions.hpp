#pragma once

#include "semicut/rational.hpp"

#include <cstdint>
#include <vector>

namespace semicut {

/** p[j] = number of integer partitions of j, exact. */
struct PartitionTable {
    std::vector<BigInt> p;

    const BigInt& operator[](size_t j) const { return p[j]; }
    size_t size() const { return p.size(); }

    /** Σ_{j<=m} p(j); m must be within the table. */
    BigInt prefix_sum(int64_t m) const;
};

/** Partition numbers p(0..m) via the pentagonal-number recurrence. */
PartitionTable partition_numbers(int64_t m);

/** C = π·√(2/3) ≈ 2.5650996603... */
double hardy_ramanujan_c();

/** c = 2π/(√3·ln 2) ≤ 5.24, the base-2 exponent constant:
 *  exp(C·√(2k)) = 2^{c·√k}. */
double base2_exponent_c();

/** Analytic partition bound A·exp(C√k)/(k+1); diagnostics only, the
 *  solvers use the exact caps below. */
double hr_bound(int64_t k, double a = 1.0);

/** Number of partitions of any value <= k with every part <= max_part
 *  and at most max_parts parts. Equals the exact count of k-cuts of a
 *  transitive tournament restricted to |X| = max_part, |Y| = max_parts. */
BigInt count_bounded_partitions(int64_t k, int64_t max_part, int64_t max_parts);

/** Exact k-cut cap for instances with a feedback arc set of size <= k:
 *  (n+1)·Σ_{j<=2k} p(j). Exceeding it certifies a negative answer. */
BigInt cap_fas(int64_t n, int64_t k);

/** t(k) = ⌊2k(1+ln 2k)⌋ for k >= 1, t(0) = 0: every k-cut of a width-<=k
 *  instance is a t(k)-cut of the aligned transitive tournament. */
int64_t cutwidth_transfer_threshold(int64_t k);

/** Exact k-cut cap for instances of cutwidth <= k: (n+1)·Σ_{j<=t(k)} p(j). */
BigInt cap_cutwidth(int64_t n, int64_t k);

/** b(k) = ⌊(4k)^{2/3}⌋ by exact integer arithmetic: the cut-width budget
 *  for orderings of cost <= k (largest b with b³ <= (4k)²). */
int64_t ola_width_budget(int64_t k);

/** Exact b(k)-cut cap for instances with an ordering of cost <= k:
 *  cap_cutwidth(n, b(k)). */
BigInt cap_ola(int64_t n, int64_t k);

} // namespace semicut
