#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ucgsynth/common.hpp"

namespace ucg {

// Invertible linear map over F2, row i = the linear combination of initial
// basis bits currently held by wire i. cnot(c, t) xors row c into row t,
// matching what the physical CNOT does to basis labels.
struct LinearState {
    int n = 0;
    std::vector<std::uint32_t> rows;

    LinearState() = default;
    explicit LinearState(int n_) : n(n_), rows(std::size_t(n_)) {
        for (int i = 0; i < n_; ++i) rows[std::size_t(i)] = std::uint32_t(1) << i;
    }

    void cnot(int c, int t) { rows[std::size_t(t)] ^= rows[std::size_t(c)]; }
    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            if (rows[std::size_t(i)] != (std::uint32_t(1) << i)) return false;
        return true;
    }
};

// Incremental independence test over F2, kept in echelon form with strictly
// decreasing leading bits so one reduction pass suffices.
struct F2Basis {
    std::vector<std::uint32_t> reduced;

    static std::uint32_t high_bit(std::uint32_t x) {
        while (x & (x - 1)) x &= x - 1;
        return x;
    }
    std::uint32_t reduce(std::uint32_t v) const {
        for (std::uint32_t b : reduced)
            if (v & high_bit(b)) v ^= b;
        return v;
    }
    bool independent(std::uint32_t v) const { return reduce(v) != 0; }
    bool try_insert(std::uint32_t v) {
        v = reduce(v);
        if (v == 0) return false;
        std::uint32_t hv = high_bit(v);
        auto it = reduced.begin();
        while (it != reduced.end() && high_bit(*it) > hv) ++it;
        reduced.insert(it, v);
        return true;
    }
    int rank() const { return int(reduced.size()); }
};

inline int f2_rank(const std::vector<std::uint32_t>& vecs) {
    F2Basis b;
    for (std::uint32_t v : vecs) b.try_insert(v);
    return b.rank();
}

// CNOT sequence (control, target pairs over local wire indices) turning state
// `from` into state `to`. Both must be invertible over the same wire count.
std::vector<std::pair<int, int>> f2_transition_cnots(const LinearState& from,
                                                     const LinearState& to);

// Complete the given independent rows to an invertible matrix: wires
// [0, fixed.size()) hold exactly the given combinations, the rest standard
// basis vectors chosen to keep the matrix invertible.
LinearState f2_complete(int n, const std::vector<std::uint32_t>& fixed);

} // namespace ucg
