#include "semicut/partitions.hpp"

#include "semicut/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace semicut {

BigInt PartitionTable::prefix_sum(int64_t m) const {
    BigInt total = 0;
    for (int64_t j = 0; j <= m; ++j) total += p[static_cast<size_t>(j)];
    return total;
}

PartitionTable partition_numbers(int64_t m) {
    if (m < 0) throw InvalidParameterError("partition table size must be non-negative");
    PartitionTable table;
    table.p.assign(static_cast<size_t>(m) + 1, BigInt(0));
    table.p[0] = 1;
    // Euler: p(j) = Σ_g (-1)^{g+1} [ p(j - g(3g-1)/2) + p(j - g(3g+1)/2) ]
    for (int64_t j = 1; j <= m; ++j) {
        BigInt value = 0;
        for (int64_t g = 1;; ++g) {
            const int64_t pent1 = g * (3 * g - 1) / 2;
            const int64_t pent2 = g * (3 * g + 1) / 2;
            if (pent1 > j) break;
            const bool add = (g % 2) == 1;
            if (add)
                value += table.p[static_cast<size_t>(j - pent1)];
            else
                value -= table.p[static_cast<size_t>(j - pent1)];
            if (pent2 <= j) {
                if (add)
                    value += table.p[static_cast<size_t>(j - pent2)];
                else
                    value -= table.p[static_cast<size_t>(j - pent2)];
            }
        }
        table.p[static_cast<size_t>(j)] = value;
    }
    return table;
}

double hardy_ramanujan_c() { return std::numbers::pi * std::sqrt(2.0 / 3.0); }

double base2_exponent_c() {
    return 2.0 * std::numbers::pi / (std::sqrt(3.0) * std::numbers::ln2);
}

double hr_bound(int64_t k, double a) {
    if (k < 0) throw InvalidParameterError("k must be non-negative");
    return a * std::exp(hardy_ramanujan_c() * std::sqrt(static_cast<double>(k))) /
           (static_cast<double>(k) + 1.0);
}

BigInt count_bounded_partitions(int64_t k, int64_t max_part, int64_t max_parts) {
    if (k < 0 || max_part < 0 || max_parts < 0)
        throw InvalidParameterError("count_bounded_partitions arguments must be non-negative");

    // N(c, a, s): Young diagrams of area s inside a c × a box (at most c
    // parts, each at most a). Either no part equals a, N(c, a-1, s), or
    // one part of size a is removed, N(c-1, a, s-a).
    const int64_t s_max = std::min(k, max_part * max_parts);
    const auto cols = static_cast<size_t>(s_max) + 1;

    std::vector<std::vector<BigInt>> prev(static_cast<size_t>(max_part) + 1,
                                          std::vector<BigInt>(cols, BigInt(0)));
    for (auto& row : prev) row[0] = 1; // c = 0: only the empty diagram
    auto cur = prev;

    for (int64_t c = 1; c <= max_parts; ++c) {
        for (int64_t s = 1; s <= s_max; ++s) cur[0][static_cast<size_t>(s)] = 0;
        for (int64_t a = 1; a <= max_part; ++a)
            for (int64_t s = 0; s <= s_max; ++s) {
                BigInt v = cur[static_cast<size_t>(a - 1)][static_cast<size_t>(s)];
                if (s >= a) v += prev[static_cast<size_t>(a)][static_cast<size_t>(s - a)];
                cur[static_cast<size_t>(a)][static_cast<size_t>(s)] = v;
            }
        prev = cur;
    }

    BigInt total = 0;
    for (int64_t s = 0; s <= s_max; ++s)
        total += prev[static_cast<size_t>(max_part)][static_cast<size_t>(s)];
    return total;
}

BigInt cap_fas(int64_t n, int64_t k) {
    if (n < 0 || k < 0) throw InvalidParameterError("cap arguments must be non-negative");
    const PartitionTable table = partition_numbers(2 * k);
    return BigInt(n + 1) * table.prefix_sum(2 * k);
}

int64_t cutwidth_transfer_threshold(int64_t k) {
    if (k < 0) throw InvalidParameterError("k must be non-negative");
    if (k == 0) return 0;
    const double x = 2.0 * static_cast<double>(k) *
                     (1.0 + std::log(2.0 * static_cast<double>(k)));
    return static_cast<int64_t>(std::floor(x));
}

BigInt cap_cutwidth(int64_t n, int64_t k) {
    if (n < 0 || k < 0) throw InvalidParameterError("cap arguments must be non-negative");
    const int64_t threshold = cutwidth_transfer_threshold(k);
    const PartitionTable table = partition_numbers(threshold);
    return BigInt(n + 1) * table.prefix_sum(threshold);
}

int64_t ola_width_budget(int64_t k) {
    if (k < 0) throw InvalidParameterError("k must be non-negative");
    if (k > (int64_t{1} << 60))
        throw InvalidParameterError("cost budget too large for the width-budget computation");
    // largest b with b^3 <= (4k)^2, exact in integers
    const unsigned __int128 four_k = static_cast<unsigned __int128>(4) * static_cast<uint64_t>(k);
    const unsigned __int128 target = four_k * four_k;
    uint64_t lo = 0, hi = 1;
    while (static_cast<unsigned __int128>(hi) * hi * hi <= target) hi *= 2;
    while (lo + 1 < hi) {
        const uint64_t mid = lo + (hi - lo) / 2;
        if (static_cast<unsigned __int128>(mid) * mid * mid <= target)
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<int64_t>(lo);
}

BigInt cap_ola(int64_t n, int64_t k) {
    return cap_cutwidth(n, ola_width_budget(k));
}

} // namespace semicut
