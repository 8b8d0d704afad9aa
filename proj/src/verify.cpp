#include "ucgsynth/verify.hpp"

#include <algorithm>
#include <cmath>

namespace ucg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// dense matrices above this many qubits do not fit small hosts
constexpr int kDenseCap = 13;
constexpr int kSimCap = 14;

std::array<cplx, 4> mat_h() {
    const double s = 1.0 / std::sqrt(2.0);
    return {cplx(s, 0), cplx(s, 0), cplx(s, 0), cplx(-s, 0)};
}
std::array<cplx, 4> mat_s() { return {cplx(1, 0), 0, 0, cplx(0, 1)}; }
std::array<cplx, 4> mat_sdg() { return {cplx(1, 0), 0, 0, cplx(0, -1)}; }

std::array<cplx, 4> mat_mul(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

std::array<cplx, 4> mat_1q(Realization r, double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    switch (r) {
    case Realization::rz:
        return {std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)};
    case Realization::rx:
        return {cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0)};
    case Realization::ry:
        return {cplx(c, 0), cplx(-s, 0), cplx(s, 0), cplx(c, 0)};
    default:
        throw InputError("not a single-qubit rotation realization");
    }
}

std::array<cplx, 4> named_mat(const std::string& label) {
    if (label == "h") return mat_h();
    if (label == "s") return mat_s();
    if (label == "sdg") return mat_sdg();
    throw InputError("gate label '" + label + "' is not simulable");
}

bool named_is_diagonal(const std::string& label) { return label == "s" || label == "sdg"; }

} // namespace

int qubit_bit(const QubitLayout& layout, int q) {
    if (q < layout.n) return layout.m + layout.anc + q;
    if (q < layout.n + layout.m) return layout.anc + (q - layout.n);
    return q - layout.n - layout.m;
}

// ---- compact simulation ----------------------------------------------------

namespace {

// diagonal phase the gate contributes on basis state s, for gates that are
// diagonal (possibly controlled); caller guarantees the gate qualifies
double diag_phase(const Gate& g, const QubitLayout& lay, std::uint32_t s) {
    auto bit = [&](int q) { return (s >> qubit_bit(lay, q)) & 1u; };
    switch (g.kind) {
    case GateKind::rot:
        if (g.axis == RotAxis::z) return bit(g.a) ? g.theta / 2 : -g.theta / 2;
        return bit(g.a) ? g.theta : 0.0;
    case GateKind::gphase:
        return g.theta;
    case GateKind::cu:
    case GateKind::u: {
        if (g.kind == GateKind::cu && !bit(g.a)) return 0.0;
        if (!g.label.empty()) {
            if (g.label == "s") return bit(g.targets[0]) ? kPi / 2 : 0.0;
            return bit(g.targets[0]) ? -kPi / 2 : 0.0; // sdg
        }
        switch (g.real) {
        case Realization::phase:
            return g.param[0];
        case Realization::rz:
            return bit(g.targets[0]) ? g.param[0] / 2 : -g.param[0] / 2;
        case Realization::diag: {
            std::uint32_t t = 0;
            for (std::size_t j = 0; j < g.targets.size(); ++j)
                t |= bit(g.targets[j]) << j;
            return g.param[t];
        }
        default:
            break;
        }
        break;
    }
    default:
        break;
    }
    throw std::logic_error("diag_phase on non-diagonal gate");
}

bool gate_is_ppable(const Gate& g) {
    switch (g.kind) {
    case GateKind::cnot:
    case GateKind::rot:
    case GateKind::gphase:
        return true;
    case GateKind::cu:
    case GateKind::u:
        if (!g.label.empty()) return named_is_diagonal(g.label);
        return g.real == Realization::phase || g.real == Realization::rz ||
               g.real == Realization::diag;
    }
    return false;
}

Mixer to_mixer(const Gate& g, const QubitLayout& lay) {
    Mixer mx;
    mx.bit = qubit_bit(lay, g.targets[0]);
    mx.m = g.label.empty() ? mat_1q(g.real, g.param[0]) : named_mat(g.label);
    return mx;
}

// compose (append `add` after the existing list); same-bit mixers multiply
void push_mixer(std::vector<Mixer>& list, const Mixer& add) {
    for (Mixer& mx : list)
        if (mx.bit == add.bit) {
            mx.m = mat_mul(add.m, mx.m);
            return;
        }
    list.push_back(add);
}

} // namespace

CompactUnitary simulate_compact(const CircuitIR& c) {
    c.check();
    const int nq = c.layout.total();
    if (nq > kSimCap) throw ResourceError("simulation capped at 14 qubits");

    // leading and trailing runs of unconditional single-qubit gates become
    // sandwich mixers (this keeps e.g. an sdg that belongs to a conjugator
    // pair together with its h instead of splitting it into the middle)
    auto mixerish = [](const Gate& g) {
        return g.kind == GateKind::u && g.targets.size() == 1 &&
               (!g.label.empty() || g.real == Realization::rx ||
                g.real == Realization::ry || g.real == Realization::rz);
    };
    std::size_t lo = 0, hi = c.gates.size();
    CompactUnitary u;
    u.nq = nq;
    while (lo < hi && mixerish(c.gates[lo])) {
        push_mixer(u.pre, to_mixer(c.gates[lo], c.layout));
        ++lo;
    }
    while (hi > lo && mixerish(c.gates[hi - 1])) --hi;
    // trailing mixers compose in circuit order
    for (std::size_t i = hi; i < c.gates.size(); ++i)
        push_mixer(u.post, to_mixer(c.gates[i], c.layout));

    const std::uint32_t N = std::uint32_t(1) << nq;
    u.pp.nq = nq;
    u.pp.perm.resize(N);
    u.pp.phase.assign(N, 0.0);
    for (std::uint32_t b = 0; b < N; ++b) u.pp.perm[b] = b;

    for (std::size_t i = lo; i < hi; ++i) {
        const Gate& g = c.gates[i];
        if (!gate_is_ppable(g)) throw InputError("gate not simulable in compact form");
        if (g.kind == GateKind::cnot) {
            const std::uint32_t cb = std::uint32_t(1) << qubit_bit(c.layout, g.a);
            const std::uint32_t tb = std::uint32_t(1) << qubit_bit(c.layout, g.b);
            for (std::uint32_t b = 0; b < N; ++b)
                if (u.pp.perm[b] & cb) u.pp.perm[b] ^= tb;
        } else if (g.kind == GateKind::gphase) {
            for (std::uint32_t b = 0; b < N; ++b) u.pp.phase[b] += g.theta;
        } else {
            for (std::uint32_t b = 0; b < N; ++b)
                u.pp.phase[b] += diag_phase(g, c.layout, u.pp.perm[b]);
        }
    }
    return u;
}

CompactUnitary project_ancillae(const CompactUnitary& u, int anc) {
    if (anc == 0) return u;
    CompactUnitary out;
    out.nq = u.nq - anc;
    const std::uint32_t amask = (std::uint32_t(1) << anc) - 1;
    for (const Mixer& mx : u.pre) {
        if (mx.bit < anc) throw std::logic_error("mixer on ancilla");
        out.pre.push_back({mx.bit - anc, mx.m});
    }
    for (const Mixer& mx : u.post) {
        if (mx.bit < anc) throw std::logic_error("mixer on ancilla");
        out.post.push_back({mx.bit - anc, mx.m});
    }
    const std::uint32_t M = std::uint32_t(1) << out.nq;
    out.pp.nq = out.nq;
    out.pp.perm.resize(M);
    out.pp.phase.resize(M);
    for (std::uint32_t i = 0; i < M; ++i) {
        std::uint32_t full = u.pp.perm[i << anc];
        if (full & amask)
            throw std::logic_error("ancillae not restored to |0>");
        out.pp.perm[i] = full >> anc;
        out.pp.phase[i] = u.pp.phase[i << anc];
    }
    return out;
}

SparseColumn compact_column(const CompactUnitary& u, std::uint32_t b) {
    SparseColumn col{{b, cplx(1, 0)}};
    auto apply_mixer = [&](const Mixer& mx) {
        SparseColumn next;
        next.reserve(col.size() * 2);
        const std::uint32_t bit = std::uint32_t(1) << mx.bit;
        for (auto& [s, a] : col) {
            const int row = (s & bit) ? 1 : 0;
            // column s of the 2x2: entries m[0][row], m[1][row]
            cplx a0 = mx.m[std::size_t(row)] * a;
            cplx a1 = mx.m[std::size_t(2 + row)] * a;
            if (a0 != cplx(0, 0)) next.emplace_back(s & ~bit, a0);
            if (a1 != cplx(0, 0)) next.emplace_back(s | bit, a1);
        }
        col = std::move(next);
    };
    for (const Mixer& mx : u.pre) apply_mixer(mx);
    for (auto& [s, a] : col) {
        a *= std::polar(1.0, u.pp.phase[s]);
        s = u.pp.perm[s];
    }
    for (const Mixer& mx : u.post) apply_mixer(mx);
    std::sort(col.begin(), col.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    // merge duplicates
    SparseColumn merged;
    for (auto& [s, a] : col) {
        if (!merged.empty() && merged.back().first == s)
            merged.back().second += a;
        else
            merged.emplace_back(s, a);
    }
    return merged;
}

DenseUnitary to_dense(const CompactUnitary& u) {
    if (u.nq > kDenseCap)
        throw ResourceError("dense materialization capped at " +
                            std::to_string(kDenseCap) + " qubits");
    DenseUnitary d;
    d.nq = u.nq;
    const std::size_t N = d.dim();
    d.a.assign(N * N, cplx(0, 0));
    for (std::uint32_t j = 0; j < N; ++j)
        for (auto& [r, v] : compact_column(u, j)) d.at(r, j) = v;
    return d;
}

// ---- dense simulation ------------------------------------------------------

namespace {

void dense_apply_1q(DenseUnitary& m, int bit, const std::array<cplx, 4>& g,
                    int control_bit /* -1 if none */) {
    const std::size_t N = m.dim();
    const std::size_t qb = std::size_t(1) << bit;
    for (std::size_t r0 = 0; r0 < N; ++r0) {
        if (r0 & qb) continue;
        if (control_bit >= 0 && !(r0 >> control_bit & 1)) continue;
        const std::size_t r1 = r0 | qb;
        cplx* row0 = m.a.data() + r0 * N;
        cplx* row1 = m.a.data() + r1 * N;
        for (std::size_t j = 0; j < N; ++j) {
            cplx x = row0[j], y = row1[j];
            row0[j] = g[0] * x + g[1] * y;
            row1[j] = g[2] * x + g[3] * y;
        }
    }
}

} // namespace

DenseUnitary simulate(const CircuitIR& c) {
    c.check();
    const int nq = c.layout.total();
    if (nq > kSimCap) throw ResourceError("simulation capped at 14 qubits");
    // fast path: compact form, then materialize
    try {
        CompactUnitary u = project_ancillae(simulate_compact(c), c.layout.anc);
        return to_dense(u);
    } catch (const InputError&) {
        // fall through to the generic product
    }
    if (nq > kDenseCap)
        throw ResourceError("dense simulation capped at " + std::to_string(kDenseCap) +
                            " qubits");
    DenseUnitary m = dense_identity(nq);
    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case GateKind::cnot: {
            const int cb = qubit_bit(c.layout, g.a);
            const std::uint32_t tb = std::uint32_t(1) << qubit_bit(c.layout, g.b);
            const std::size_t N = m.dim();
            // row permutation: swap row pairs where the control bit is set
            for (std::size_t r = 0; r < N; ++r)
                if ((r >> cb & 1) && !(r & tb))
                    for (std::size_t j = 0; j < N; ++j)
                        std::swap(m.at(r, j), m.at(r | tb, j));
            break;
        }
        case GateKind::rot: {
            std::array<cplx, 4> g2 = g.axis == RotAxis::z
                                         ? mat_1q(Realization::rz, g.theta)
                                         : std::array<cplx, 4>{cplx(1, 0), 0, 0,
                                                               std::polar(1.0, g.theta)};
            dense_apply_1q(m, qubit_bit(c.layout, g.a), g2, -1);
            break;
        }
        case GateKind::gphase: {
            const cplx f = std::polar(1.0, g.theta);
            for (cplx& v : m.a) v *= f;
            break;
        }
        case GateKind::cu:
        case GateKind::u: {
            const int cb = g.kind == GateKind::cu ? qubit_bit(c.layout, g.a) : -1;
            if (!g.label.empty()) {
                dense_apply_1q(m, qubit_bit(c.layout, g.targets[0]), named_mat(g.label), cb);
            } else if (g.real == Realization::diag || g.real == Realization::phase) {
                const std::size_t N = m.dim();
                for (std::size_t r = 0; r < N; ++r) {
                    if (cb >= 0 && !(r >> cb & 1)) continue;
                    std::uint32_t t = 0;
                    for (std::size_t j = 0; j < g.targets.size(); ++j)
                        t |= std::uint32_t(r >> qubit_bit(c.layout, g.targets[j]) & 1) << j;
                    const cplx f = std::polar(1.0, g.real == Realization::phase
                                                       ? g.param[0]
                                                       : g.param[t]);
                    for (std::size_t j = 0; j < N; ++j) m.at(r, j) *= f;
                }
            } else {
                dense_apply_1q(m, qubit_bit(c.layout, g.targets[0]),
                               mat_1q(g.real, g.param[0]), cb);
            }
            break;
        }
        }
    }
    if (c.layout.anc > 0) {
        const int anc = c.layout.anc;
        const std::size_t N = m.dim();
        const std::size_t amask = (std::size_t(1) << anc) - 1;
        DenseUnitary p;
        p.nq = nq - anc;
        const std::size_t M = p.dim();
        p.a.resize(M * M);
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t j = 0; j < M; ++j)
                if ((r & amask) != 0 && std::abs(m.at(r, j << anc)) > 1e-12)
                    throw std::logic_error("ancillae not restored to |0>");
        for (std::size_t r = 0; r < M; ++r)
            for (std::size_t j = 0; j < M; ++j) p.at(r, j) = m.at(r << anc, j << anc);
        return p;
    }
    return m;
}

// ---- references ------------------------------------------------------------

CompactUnitary reference_compact(const TargetVector& tv) {
    tv.validate();
    const int nq = tv.n + realization_targets(tv.realization, tv.m);
    if (nq > kSimCap) throw ResourceError("reference capped at 14 qubits");
    CompactUnitary u;
    u.nq = nq;
    const std::uint32_t N = std::uint32_t(1) << nq;
    u.pp.nq = nq;
    u.pp.perm.resize(N);
    u.pp.phase.resize(N);
    const int tbits = nq - tv.n;
    for (std::uint32_t b = 0; b < N; ++b) {
        u.pp.perm[b] = b;
        const std::uint32_t c = b >> tbits;
        const std::uint32_t t = b & ((std::uint32_t(1) << tbits) - 1);
        const double* blk = tv.entry(c);
        double ph = 0;
        switch (tv.realization) {
        case Realization::phase: ph = blk[0]; break;
        case Realization::diag: ph = blk[t]; break;
        default: ph = t ? blk[0] / 2 : -blk[0] / 2; break; // rz core for rz/rx/ry
        }
        u.pp.phase[b] = ph;
    }
    // rx = H rz H, ry = (S H) rz (H Sdg), exact clifford conjugations
    if (tv.realization == Realization::rx) {
        u.pre.push_back({0, mat_h()});
        u.post.push_back({0, mat_h()});
    } else if (tv.realization == Realization::ry) {
        u.pre.push_back({0, mat_mul(mat_h(), mat_sdg())});
        u.post.push_back({0, mat_mul(mat_s(), mat_h())});
    }
    return u;
}

DenseUnitary reference_unitary(const TargetVector& tv) {
    return to_dense(reference_compact(tv));
}

DenseUnitary realized_block(Realization r, const double* block, int m) {
    DenseUnitary d;
    switch (r) {
    case Realization::phase:
        d.nq = 0;
        d.a = {std::polar(1.0, block[0])};
        return d;
    case Realization::rz:
    case Realization::rx:
    case Realization::ry: {
        d.nq = 1;
        auto g = mat_1q(r, block[0]);
        d.a = {g[0], g[1], g[2], g[3]};
        return d;
    }
    case Realization::diag: {
        d.nq = m;
        const std::size_t N = d.dim();
        d.a.assign(N * N, cplx(0, 0));
        for (std::size_t t = 0; t < N; ++t) d.at(t, t) = std::polar(1.0, block[t]);
        return d;
    }
    }
    throw InputError("bad realization");
}

// ---- equivalence -----------------------------------------------------------

std::pair<bool, double> equiv_global_phase(const DenseUnitary& a, const DenseUnitary& b,
                                           double tol) {
    if (a.nq != b.nq) return {false, 1.0};
    double best = 0.0;
    std::size_t bi = 0;
    for (std::size_t i = 0; i < b.a.size(); ++i) {
        double m = std::abs(b.a[i]);
        if (m > best) {
            best = m;
            bi = i;
        }
    }
    if (best == 0.0) return {false, 1.0};
    cplx lambda = a.a[bi] / b.a[bi];
    double l = std::abs(lambda);
    lambda = l > 0 ? lambda / l : cplx(1, 0);
    double dev = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i)
        dev = std::max(dev, std::abs(a.a[i] - lambda * b.a[i]));
    return {dev <= tol, dev};
}

std::pair<bool, double> equiv_global_phase(const CompactUnitary& a,
                                           const CompactUnitary& b, double tol) {
    if (a.nq != b.nq) return {false, 1.0};
    const std::uint32_t N = std::uint32_t(1) << a.nq;
    // pass 1: largest entry of b
    double best = 0.0;
    std::uint32_t brow = 0, bcol = 0;
    for (std::uint32_t j = 0; j < N; ++j) {
        for (auto& [r, v] : compact_column(b, j)) {
            double m = std::abs(v);
            if (m > best) {
                best = m;
                brow = r;
                bcol = j;
            }
        }
        if (best > 0.999) break; // cannot beat a unit entry meaningfully
    }
    if (best == 0.0) return {false, 1.0};
    cplx bval(0, 0), aval(0, 0);
    for (auto& [r, v] : compact_column(b, bcol))
        if (r == brow) bval = v;
    for (auto& [r, v] : compact_column(a, bcol))
        if (r == brow) aval = v;
    cplx lambda = aval / bval;
    double l = std::abs(lambda);
    lambda = l > 0 ? lambda / l : cplx(1, 0);

    double dev = 0.0;
    for (std::uint32_t j = 0; j < N; ++j) {
        SparseColumn ca = compact_column(a, j);
        SparseColumn cb = compact_column(b, j);
        std::size_t ia = 0, ib = 0;
        while (ia < ca.size() || ib < cb.size()) {
            if (ib == cb.size() || (ia < ca.size() && ca[ia].first < cb[ib].first)) {
                dev = std::max(dev, std::abs(ca[ia].second));
                ++ia;
            } else if (ia == ca.size() || cb[ib].first < ca[ia].first) {
                dev = std::max(dev, std::abs(lambda * cb[ib].second));
                ++ib;
            } else {
                dev = std::max(dev, std::abs(ca[ia].second - lambda * cb[ib].second));
                ++ia;
                ++ib;
            }
        }
    }
    return {dev <= tol, dev};
}

VerifyResult verify_against_reference(const CircuitIR& c, const TargetVector& tv,
                                      double tol) {
    CompactUnitary ref = reference_compact(tv);
    try {
        CompactUnitary u = project_ancillae(simulate_compact(c), c.layout.anc);
        auto [ok, dev] = equiv_global_phase(u, ref, tol);
        return {ok, dev};
    } catch (const InputError&) {
        DenseUnitary u = simulate(c);
        auto [ok, dev] = equiv_global_phase(u, to_dense(ref), tol);
        return {ok, dev};
    }
}

DenseUnitary dense_identity(int nq) {
    if (nq > kDenseCap) throw ResourceError("dense matrices capped");
    DenseUnitary d;
    d.nq = nq;
    const std::size_t N = d.dim();
    d.a.assign(N * N, cplx(0, 0));
    for (std::size_t i = 0; i < N; ++i) d.at(i, i) = cplx(1, 0);
    return d;
}

DenseUnitary dense_mul(const DenseUnitary& a, const DenseUnitary& b) {
    DenseUnitary r;
    r.nq = a.nq;
    const std::size_t N = a.dim();
    r.a.assign(N * N, cplx(0, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            const cplx v = a.at(i, k);
            if (v == cplx(0, 0)) continue;
            for (std::size_t j = 0; j < N; ++j) r.at(i, j) += v * b.at(k, j);
        }
    return r;
}

bool is_unitary(const DenseUnitary& u, double tol) {
    const std::size_t N = u.dim();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            cplx dot(0, 0);
            for (std::size_t k = 0; k < N; ++k) dot += std::conj(u.at(k, i)) * u.at(k, j);
            if (std::abs(dot - (i == j ? cplx(1, 0) : cplx(0, 0))) > tol) return false;
        }
    return true;
}

} // namespace ucg
