#include "ucgsynth/synth_depth.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ucgsynth/gray_path.hpp"

namespace ucg {

namespace {

std::vector<std::vector<std::uint32_t>> greedy_groups(const std::vector<std::uint32_t>& univ) {
    std::vector<std::vector<std::uint32_t>> groups;
    std::vector<F2Basis> bases;
    for (std::uint32_t v : univ) {
        bool placed = false;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (bases[i].try_insert(v)) {
                groups[i].push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.emplace_back(1, v);
            bases.emplace_back();
            bases.back().try_insert(v);
        }
    }
    return groups;
}

bool fits(const std::vector<std::uint32_t>& grp, std::uint32_t v) {
    F2Basis b;
    for (std::uint32_t x : grp) b.try_insert(x);
    return b.independent(v);
}

// dissolve whole groups into the others when rank allows, smallest first;
// every success drops the group count by one
void rebalance(std::vector<std::vector<std::uint32_t>>& groups) {
    bool changed = true;
    while (changed && groups.size() > 1) {
        changed = false;
        std::vector<std::size_t> order(groups.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (groups[a].size() != groups[b].size())
                return groups[a].size() < groups[b].size();
            return a < b;
        });
        for (std::size_t victim : order) {
            std::vector<std::vector<std::uint32_t>> trial = groups;
            bool ok = true;
            for (std::uint32_t v : groups[victim]) {
                bool placed = false;
                for (std::size_t i = 0; i < trial.size() && !placed; ++i) {
                    if (i == victim) continue;
                    if (fits(trial[i], v)) {
                        trial[i].push_back(v);
                        placed = true;
                    }
                }
                if (!placed) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                trial.erase(trial.begin() + std::ptrdiff_t(victim));
                groups = std::move(trial);
                changed = true;
                break;
            }
        }
    }
}

} // namespace

std::vector<std::vector<std::uint32_t>> partition_nonzero(int n) {
    if (n < 1 || n > 20) throw InputError("qubit count out of range");
    const std::uint32_t N = std::uint32_t(1) << n;
    std::vector<std::uint32_t> univ;
    univ.reserve(N - 1);
    for (std::uint32_t v = 1; v < N; ++v) univ.push_back(v);
    std::vector<std::vector<std::uint32_t>> groups = greedy_groups(univ);
    const std::size_t bound = (std::size_t(N) - 1 + std::size_t(n) - 1) / std::size_t(n) + 1;
    if (groups.size() > bound) rebalance(groups);
    for (std::uint32_t seed = 1; groups.size() > bound && seed <= 16; ++seed) {
        std::vector<std::uint32_t> shuffled = univ;
        std::mt19937 rng(0x9e3779b9u + seed);
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<std::vector<std::uint32_t>> cand = greedy_groups(shuffled);
        rebalance(cand);
        if (cand.size() < groups.size()) groups = std::move(cand);
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    return groups;
}

std::vector<std::vector<std::uint32_t>> partition_constant_weight(int n, int k) {
    if (n < 1 || n > 20) throw InputError("qubit count out of range");
    if (k < 1 || k > n) throw InputError("weight must satisfy 1 <= k <= n");
    if (k == n) return {{(std::uint32_t(1) << n) - 1}};
    if (k == 1) {
        std::vector<std::uint32_t> g;
        for (int b = 0; b < n; ++b) g.push_back(std::uint32_t(1) << b);
        return {g};
    }
    std::vector<std::vector<std::uint32_t>> groups = partition_constant_weight(n - 1, k);
    std::vector<std::vector<std::uint32_t>> donors = partition_constant_weight(n - 1, k - 1);
    const std::uint32_t top = std::uint32_t(1) << (n - 1);
    for (auto& d : donors)
        for (std::uint32_t& v : d) v |= top;
    // one top-bit element per existing group is always rank-safe: the group
    // spans only the lower n-1 bits; drain the smallest donor group first so
    // whole donor groups disappear
    for (auto& g : groups) {
        if (donors.empty()) break;
        std::size_t si = 0;
        for (std::size_t i = 1; i < donors.size(); ++i)
            if (donors[i].size() < donors[si].size()) si = i;
        g.push_back(donors[si].back());
        donors[si].pop_back();
        if (donors[si].empty()) donors.erase(donors.begin() + std::ptrdiff_t(si));
    }
    for (auto& d : donors) groups.push_back(std::move(d));
    rebalance(groups);
    for (auto& g : groups) std::sort(g.begin(), g.end());
    return groups;
}

GenerateResult generate_stage(const std::vector<std::uint32_t>& group, const LinearState& from) {
    if ((int)group.size() > from.n) throw InputError("group larger than the suffix register");
    GenerateResult r;
    try {
        r.state = f2_complete(from.n, group);
    } catch (const std::logic_error&) {
        throw InputError("stage group is linearly dependent");
    }
    r.cnots = f2_transition_cnots(from, r.state);
    return r;
}

std::vector<std::pair<int, int>> reset_stage(const LinearState& state) {
    return f2_transition_cnots(state, LinearState(state.n));
}

namespace {

// fronts mirror layer_assignment while the circuit is still being built: a
// gate lands one past the busiest wire it touches
inline void push_tracked(std::vector<Gate>& gates, std::vector<long long>& front, Gate g) {
    long long l = 0;
    for (int x : g.qubits()) l = std::max(l, front[std::size_t(x)]);
    ++l;
    for (int x : g.qubits()) front[std::size_t(x)] = l;
    gates.push_back(std::move(g));
}

// prefix control pattern for pipeline j: same Gray cycle with the bit roles
// rotated by j, so no two pipelines ever pull on the same control qubit in
// the same step slot
inline std::uint32_t rotl_bits(std::uint32_t p, int s, int rc) {
    s %= rc;
    if (s == 0) return p;
    const std::uint32_t mask = (std::uint32_t(1) << rc) - 1;
    return ((p << s) | (p >> (rc - s))) & mask;
}

inline std::uint32_t map_bits(std::uint32_t local, const std::vector<int>& bits) {
    std::uint32_t w = 0;
    for (int b = 0; local; ++b, local >>= 1)
        if (local & 1) w |= std::uint32_t(1) << bits[std::size_t(b)];
    return w;
}

struct WalkStep {
    std::vector<int> flips; // base cycle control bits, one aligned cnot layer each
    std::uint32_t pattern = 0;
    bool rotate = true; // the closure step only walks the wires back
};

// closed prefix cycle: all 2^rc patterns when kc >= rc, weight <= kc
// otherwise; step 0 rotates at the all-zero pattern before any cnot
std::vector<WalkStep> prefix_walk(int rc, int kc) {
    std::vector<WalkStep> walk;
    walk.push_back(WalkStep{});
    if (rc <= 0 || kc <= 0) return walk;
    std::vector<std::uint32_t> states;
    if (kc >= rc) {
        for (std::uint32_t i = 1; i < (std::uint32_t(1) << rc); ++i)
            states.push_back(i ^ (i >> 1));
    } else {
        states = sparse_state_sequence(rc, kc);
    }
    std::uint32_t prev = 0;
    for (std::uint32_t st : states) {
        WalkStep ws;
        ws.pattern = st;
        for (int b = 0; b < rc; ++b)
            if ((prev ^ st) & (std::uint32_t(1) << b)) ws.flips.push_back(b);
        walk.push_back(std::move(ws));
        prev = st;
    }
    if (prev) {
        WalkStep ws;
        ws.rotate = false;
        for (int b = 0; b < rc; ++b)
            if (prev & (std::uint32_t(1) << b)) ws.flips.push_back(b);
        walk.push_back(std::move(ws));
    }
    return walk;
}

bool stage_silent(const FreqVector& f, const SynthOptions& opt, const std::vector<int>& bits,
                  int rc, const std::vector<std::uint32_t>& members,
                  const std::vector<WalkStep>& walk) {
    // the rotated pipelines visit the same prefix pattern set, so the base
    // cycle is enough to decide whether any rotation survives
    for (std::uint32_t m : members) {
        std::uint32_t wsuf = 0;
        for (int b = 0; (m >> b) != 0; ++b)
            if (m & (std::uint32_t(1) << b)) wsuf |= std::uint32_t(1) << bits[std::size_t(rc + b)];
        for (const WalkStep& ws : walk) {
            if (!ws.rotate) continue;
            std::uint32_t w = wsuf;
            std::uint32_t pat = ws.pattern;
            for (int b = 0; pat; ++b, pat >>= 1)
                if (pat & 1) w |= std::uint32_t(1) << bits[std::size_t(b)];
            if (!f.block_zero(w, opt.zero_tol)) return false;
        }
    }
    return true;
}

void emit_stage(std::vector<Gate>& gates, std::vector<long long>& front, const FreqVector& f,
                const SynthOptions& opt, const std::vector<int>& qubits,
                const std::vector<int>& bits, int rc, const std::vector<std::uint32_t>& members,
                LinearState& L, int kc) {
    const int g = (int)members.size();
    if (g == 0) return;
    std::vector<WalkStep> walk = prefix_walk(rc, kc);
    if (opt.skip_identities && stage_silent(f, opt, bits, rc, members, walk)) return;

    GenerateResult gen = generate_stage(members, L);
    for (auto [c, t] : gen.cnots)
        push_tracked(gates, front,
                     Gate::cnot(qubits[std::size_t(rc + c)], qubits[std::size_t(rc + t)]));
    L = gen.state;

    // the transition chain leaves the pipeline wires at unequal fronts, and
    // the walk never lets the pipelines interact after that, so a lagging
    // pipeline would smear its rotations across the others' cnot layers for
    // the whole stage; extra flips level the fronts first, each absorbed as
    // a constant pattern offset for its pipeline (the closed walk covers
    // every pattern when kc >= rc, so an offset only permutes the visit
    // order)
    std::vector<std::uint32_t> off(std::size_t(g), 0);
    if (kc >= rc && g > 1) {
        long long fmax = 0;
        for (int j = 0; j < g; ++j)
            fmax = std::max(fmax, front[std::size_t(qubits[std::size_t(rc + j)])]);
        for (int j = 0; j < g; ++j) {
            const int w = qubits[std::size_t(rc + j)];
            int used = 0;
            while (front[std::size_t(w)] < fmax && used < rc) {
                int pick = -1;
                long long best = -1;
                for (int i = 0; i < rc; ++i) {
                    const int cb = (i + j) % rc;
                    if (off[std::size_t(j)] & (std::uint32_t(1) << cb)) continue;
                    const long long fc = front[std::size_t(qubits[std::size_t(cb)])];
                    if (fc >= fmax) continue;
                    if (fc > best) {
                        best = fc;
                        pick = cb;
                    }
                }
                if (pick < 0) break;
                push_tracked(gates, front, Gate::cnot(qubits[std::size_t(pick)], w));
                off[std::size_t(j)] ^= std::uint32_t(1) << pick;
                ++used;
            }
        }
    }

    for (const WalkStep& ws : walk) {
        for (int slot : ws.flips)
            for (int j = 0; j < g; ++j)
                push_tracked(gates, front,
                             Gate::cnot(qubits[std::size_t((slot + j) % rc)],
                                        qubits[std::size_t(rc + j)]));
        if (!ws.rotate) continue;
        for (int j = 0; j < g; ++j) {
            std::uint32_t w =
                map_bits(rotl_bits(ws.pattern, j, std::max(rc, 1)) ^ off[std::size_t(j)], bits);
            std::uint32_t m = members[std::size_t(j)];
            for (int b = 0; (m >> b) != 0; ++b)
                if (m & (std::uint32_t(1) << b)) w |= std::uint32_t(1) << bits[std::size_t(rc + b)];
            if (opt.skip_identities && f.block_zero(w, opt.zero_tol)) continue;
            push_tracked(gates, front,
                         Gate::rot(qubits[std::size_t(rc + j)], f.at(w)[0], RotAxis::phase));
        }
    }

    for (int j = 0; j < g; ++j) {
        std::uint32_t o = off[std::size_t(j)];
        for (int b = 0; o; ++b, o >>= 1)
            if (o & 1)
                push_tracked(gates, front,
                             Gate::cnot(qubits[std::size_t(b)], qubits[std::size_t(rc + j)]));
    }
}

// size-optimal walk on <= 2 wires, angles looked up through the bit map
void emit_base(std::vector<Gate>& gates, std::vector<long long>& front, const FreqVector& f,
               const SynthOptions& opt, const std::vector<int>& qubits,
               const std::vector<int>& bits, int k) {
    const int r = (int)qubits.size();
    TraversalPlan plan = (k >= r) ? gp_star(r) : gp_k_star(r, k);
    if (opt.skip_identities) {
        bool silent = true;
        for (std::uint32_t wl : plan.visited)
            if (!f.block_zero(map_bits(wl, bits), opt.zero_tol)) {
                silent = false;
                break;
            }
        if (silent) return;
    }
    for (const TraversalStep& st : plan.steps) {
        for (auto [c, t] : st.cnots)
            push_tracked(gates, front, Gate::cnot(qubits[std::size_t(c)], qubits[std::size_t(t)]));
        for (auto [q, wl] : st.activations) {
            const std::uint32_t w = map_bits(wl, bits);
            if (opt.skip_identities && f.block_zero(w, opt.zero_tol)) continue;
            push_tracked(gates, front,
                         Gate::rot(qubits[std::size_t(q)], f.at(w)[0], RotAxis::phase));
        }
    }
}

// qubits[i] is the circuit qubit of local wire i, bits[i] the frequency bit;
// splits into prefix controls and suffix rotation pipelines, then recurses on
// the prefix alone (those gates overlap the suffix reset in the schedule)
void recurse(std::vector<Gate>& gates, std::vector<long long>& front, const FreqVector& f,
             const SynthOptions& opt, std::vector<int> qubits, std::vector<int> bits, int k) {
    const int r = (int)qubits.size();
    if (r <= 0 || k <= 0) return;
    if (r <= 2) {
        emit_base(gates, front, f, opt, qubits, bits, std::min(k, r));
        return;
    }
    const int rc = (r + 1) / 2;
    const int rt = r - rc;
    LinearState L(rt);
    if (k >= r) {
        for (const auto& grp : partition_nonzero(rt))
            emit_stage(gates, front, f, opt, qubits, bits, rc, grp, L, rc);
    } else {
        for (int kt = std::min(k, rt); kt >= 1; --kt)
            for (const auto& grp : partition_constant_weight(rt, kt))
                emit_stage(gates, front, f, opt, qubits, bits, rc, grp, L, std::min(k - kt, rc));
    }
    for (auto [c, t] : reset_stage(L))
        push_tracked(gates, front,
                     Gate::cnot(qubits[std::size_t(rc + c)], qubits[std::size_t(rc + t)]));
    qubits.resize(std::size_t(rc));
    bits.resize(std::size_t(rc));
    recurse(gates, front, f, opt, std::move(qubits), std::move(bits), k);
}

void check_phase_realization(const TargetVector& tv) {
    tv.validate();
    if (tv.realization != Realization::phase)
        throw InputError("depth-optimized diagonal synthesis expects a phase realization; "
                         "rotation realizations go through synth_rucg_rz_depth");
}

CircuitIR synth_diag_common(const TargetVector& tv, int k, const SynthOptions& opt) {
    CircuitIR c;
    c.layout = QubitLayout{tv.n, 0, 0};
    std::vector<long long> front(std::size_t(c.layout.total()), 0);
    FreqVector f = frequency_vector(tv);
    if (!(opt.skip_identities && f.block_zero(0, opt.zero_tol)))
        c.gates.push_back(Gate::gphase(f.at(0)[0]));
    std::vector<int> qubits(std::size_t(tv.n)), bits(std::size_t(tv.n));
    std::iota(qubits.begin(), qubits.end(), 0);
    std::iota(bits.begin(), bits.end(), 0);
    recurse(c.gates, front, f, opt, std::move(qubits), std::move(bits), k);
    return c;
}

} // namespace

CircuitIR synth_diag_depth(const TargetVector& tv, const SynthOptions& opt) {
    check_phase_realization(tv);
    return synth_diag_common(tv, tv.n, opt);
}

CircuitIR synth_kdiag_depth(const TargetVector& tv, int k, const SynthOptions& opt) {
    check_phase_realization(tv);
    if (k < 1) throw InputError("weight cap k must be at least 1");
    FreqVector f = frequency_vector(tv);
    if (max_support_weight(f, 1e-9) > k)
        throw InputError("spectral support weight exceeds the declared cap k");
    return synth_diag_common(tv, std::min(k, tv.n), opt);
}

CircuitIR synth_rucg_rz_depth(const TargetVector& tv, const SynthOptions& opt) {
    tv.validate();
    if (tv.realization != Realization::rz && tv.realization != Realization::rx &&
        tv.realization != Realization::ry)
        throw InputError("depth-optimized rotation synthesis expects an rz/rx/ry realization");

    // lift to a diagonal on n+1 qubits: Rz(a) contributes -a/2 on target 0 and
    // +a/2 on target 1, with the target as lifted bit 0
    const int n = tv.n;
    TargetVector lifted;
    lifted.n = n + 1;
    lifted.realization = Realization::phase;
    lifted.chi.resize(std::size_t(2) << n);
    for (std::uint32_t c = 0; c < (std::uint32_t(1) << n); ++c) {
        const double a = tv.chi[c];
        lifted.chi[(std::size_t(c) << 1) | 0] = -a / 2.0;
        lifted.chi[(std::size_t(c) << 1) | 1] = a / 2.0;
    }
    FreqVector f = frequency_vector(lifted);

    CircuitIR c;
    c.layout = QubitLayout{n, 1, 0};
    std::vector<long long> front(std::size_t(c.layout.total()), 0);
    const int tq = n;
    if (tv.realization == Realization::rx) {
        push_tracked(c.gates, front, Gate::named(tq, "h"));
    } else if (tv.realization == Realization::ry) {
        push_tracked(c.gates, front, Gate::named(tq, "sdg"));
        push_tracked(c.gates, front, Gate::named(tq, "h"));
    }
    if (!(opt.skip_identities && f.block_zero(0, opt.zero_tol)))
        c.gates.push_back(Gate::gphase(f.at(0)[0]));

    std::vector<int> qubits(1, tq);
    for (int i = 0; i < n; ++i) qubits.push_back(i);
    std::vector<int> bits(std::size_t(n) + 1);
    std::iota(bits.begin(), bits.end(), 0);
    recurse(c.gates, front, f, opt, std::move(qubits), std::move(bits),
            max_support_weight(f, opt.zero_tol));

    if (tv.realization == Realization::rx) {
        c.gates.push_back(Gate::named(tq, "h"));
    } else if (tv.realization == Realization::ry) {
        c.gates.push_back(Gate::named(tq, "h"));
        c.gates.push_back(Gate::named(tq, "s"));
    }
    return c;
}

} // namespace ucg
