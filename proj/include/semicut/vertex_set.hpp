#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace semicut {

/** Dynamic bit-set over a fixed vertex universe {0,...,n-1}.
 *
 *  Vertex v lives in bit (v & 63) of word (v >> 6). The induced total
 *  order (lex_compare) is lexicographic on the characteristic vector
 *  v_0 v_1 ... v_{n-1} with "absent" < "present"; it is used for
 *  deterministic tie-breaking throughout.
 */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    VertexSet with(int v) const {
        VertexSet r = *this;
        r.set(v);
        return r;
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool none() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }

    bool all() const { return count() == n_; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    /** -1, 0, +1 with the characteristic-vector lexicographic order. */
    static int lex_compare(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        for (size_t i = 0; i < a.w_.size(); ++i) {
            uint64_t diff = a.w_[i] ^ b.w_[i];
            if (diff) {
                int bit = std::countr_zero(diff);
                return ((a.w_[i] >> bit) & 1u) ? +1 : -1;
            }
        }
        return 0;
    }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(n_);
        for (uint64_t x : w_) {
            x += h;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            h = x ^ (x >> 31);
        }
        return h;
    }

    /** Calls f(v) for every member, ascending. */
    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                int bit = std::countr_zero(x);
                f(static_cast<int>(i * 64 + bit));
                x &= x - 1;
            }
        }
    }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return static_cast<size_t>(s.hash()); }
};

} // namespace semicut
