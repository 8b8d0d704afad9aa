#include "ucgsynth/f2.hpp"

#include <stdexcept>

namespace ucg {

// Gauss-Jordan reduction to the identity, recording row additions as
// (control, target) pairs. After processing column c every row has bits <= c
// matching the identity, so the recorded ops applied in order map m to I.
static std::vector<std::pair<int, int>> gauss_to_identity(LinearState m) {
    std::vector<std::pair<int, int>> ops;
    const int n = m.n;
    for (int col = 0; col < n; ++col) {
        const std::uint32_t bit = std::uint32_t(1) << col;
        if (!(m.rows[std::size_t(col)] & bit)) {
            int piv = -1;
            for (int r = col + 1; r < n; ++r)
                if (m.rows[std::size_t(r)] & bit) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::logic_error("linear state not invertible");
            ops.emplace_back(piv, col);
            m.cnot(piv, col);
        }
        for (int r = 0; r < n; ++r)
            if (r != col && (m.rows[std::size_t(r)] & bit)) {
                ops.emplace_back(col, r);
                m.cnot(col, r);
            }
    }
    return ops;
}

std::vector<std::pair<int, int>> f2_transition_cnots(const LinearState& from,
                                                     const LinearState& to) {
    if (from.n != to.n) throw std::logic_error("wire count mismatch");
    if (from.rows == to.rows) return {};
    // from -> I, then I -> to (reverse of to's reduction, row adds self-invert)
    std::vector<std::pair<int, int>> ops = gauss_to_identity(from);
    std::vector<std::pair<int, int>> up = gauss_to_identity(to);
    ops.insert(ops.end(), up.rbegin(), up.rend());
    return ops;
}

LinearState f2_complete(int n, const std::vector<std::uint32_t>& fixed) {
    if (int(fixed.size()) > n) throw std::logic_error("too many fixed rows");
    F2Basis basis;
    for (std::uint32_t v : fixed)
        if (!basis.try_insert(v)) throw std::logic_error("fixed rows dependent");
    LinearState out(n);
    out.rows.assign(fixed.begin(), fixed.end());
    for (int i = 0; i < n && int(out.rows.size()) < n; ++i) {
        std::uint32_t e = std::uint32_t(1) << i;
        if (basis.try_insert(e)) out.rows.push_back(e);
    }
    if (int(out.rows.size()) != n) throw std::logic_error("completion failed");
    return out;
}

} // namespace ucg
