#include "ucgsynth/gray_path.hpp"

#include <algorithm>

namespace ucg {

std::vector<std::uint32_t> revolving_door_cycle(int n, int k) {
    if (k < 0 || k > n) return {};
    if (k == 0) return {0};
    if (k == n) return {(std::uint32_t(1) << n) - 1};
    // L(n,k) = L(n-1,k) ++ reversed(L(n-1,k-1)) with the top bit added; the
    // junction and the wrap both come out as single swaps.
    std::vector<std::uint32_t> a = revolving_door_cycle(n - 1, k);
    std::vector<std::uint32_t> b = revolving_door_cycle(n - 1, k - 1);
    const std::uint32_t top = std::uint32_t(1) << (n - 1);
    a.reserve(a.size() + b.size());
    for (auto it = b.rbegin(); it != b.rend(); ++it) a.push_back(*it | top);
    return a;
}

std::vector<std::uint32_t> sparse_state_sequence(int n, int k) {
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<std::uint32_t> seq;
    std::uint32_t entry = 1;
    for (int j = 1; j <= k; ++j) {
        std::vector<std::uint32_t> cyc = revolving_door_cycle(n, j);
        auto it = std::find(cyc.begin(), cyc.end(), entry);
        std::rotate(cyc.begin(), it, cyc.end());
        seq.insert(seq.end(), cyc.begin(), cyc.end());
        if (j < k) {
            // enter the next class through the smallest absent index; the
            // transition must be a superset one bit up, so this is the
            // lexicographically smallest reachable entry state
            std::uint32_t exit = cyc.back();
            std::uint32_t absent = ~exit & full;
            entry = exit | (absent & (0u - absent));
        }
    }
    return seq;
}

// Visit `states` in order (starting from the all-zero state), flipping the
// changed control bits into `target`, then activate; finally undo the last
// state so the target wire returns to its original value.
static void emit_walk(TraversalPlan& plan, int target, std::uint32_t base_omega,
                      bool activate_base, const std::vector<std::uint32_t>& states) {
    auto push_flips = [&](TraversalStep& s, std::uint32_t flips) {
        for (int b = 0; flips; ++b, flips >>= 1)
            if (flips & 1) s.cnots.emplace_back(b, target);
    };
    if (activate_base) {
        TraversalStep s;
        s.activations.emplace_back(target, base_omega);
        plan.steps.push_back(std::move(s));
        plan.visited.push_back(base_omega);
    }
    std::uint32_t prev = 0;
    for (std::uint32_t st : states) {
        TraversalStep s;
        push_flips(s, prev ^ st);
        s.activations.emplace_back(target, st | base_omega);
        plan.steps.push_back(std::move(s));
        plan.visited.push_back(st | base_omega);
        prev = st;
    }
    if (prev) {
        TraversalStep s;
        push_flips(s, prev);
        plan.steps.push_back(std::move(s));
    }
}

// gray(1), gray(2), ... gray(2^n - 1): single-flip path through all nonzero
// states (the return to zero is the caller's closure step).
static std::vector<std::uint32_t> reflected_gray_states(int n) {
    std::vector<std::uint32_t> v;
    const std::uint32_t N = std::uint32_t(1) << n;
    v.reserve(N - 1);
    for (std::uint32_t i = 1; i < N; ++i) v.push_back(i ^ (i >> 1));
    return v;
}

static void require_n(int n) {
    if (n < 1 || n > 20) throw InputError("qubit count out of range");
}

static void require_k(int n, int k) {
    require_n(n);
    if (k < 1 || k > n) throw InputError("weight cap k must satisfy 1 <= k <= n");
}

TraversalPlan gp_ancilla(int n) {
    require_n(n);
    TraversalPlan p;
    p.n = n;
    p.k = n;
    p.uses_ancilla = true;
    p.carrier = n;
    emit_walk(p, n, 0, false, reflected_gray_states(n));
    return p;
}

static void build_star(TraversalPlan& p, int nb) {
    if (nb > 1) build_star(p, nb - 1);
    // states with the top bit set ride on that qubit itself: it already holds
    // c_top, so activate before any cnot, then walk the lower block into it
    const int carrier = nb - 1;
    emit_walk(p, carrier, std::uint32_t(1) << carrier, true,
              reflected_gray_states(nb - 1));
}

TraversalPlan gp_star(int n) {
    require_n(n);
    TraversalPlan p;
    p.n = n;
    p.k = n;
    build_star(p, n);
    return p;
}

TraversalPlan gp_k_ancilla(int n, int k) {
    require_k(n, k);
    TraversalPlan p;
    p.n = n;
    p.k = k;
    p.uses_ancilla = true;
    p.carrier = n;
    emit_walk(p, n, 0, false, sparse_state_sequence(n, k));
    return p;
}

static void build_k_star(TraversalPlan& p, int nb, int k) {
    if (k >= nb) {
        build_star(p, nb);
        return;
    }
    build_k_star(p, nb - 1, k);
    const int carrier = nb - 1;
    emit_walk(p, carrier, std::uint32_t(1) << carrier, true,
              k == 1 ? std::vector<std::uint32_t>{}
                     : sparse_state_sequence(nb - 1, k - 1));
}

TraversalPlan gp_k_star(int n, int k) {
    require_k(n, k);
    TraversalPlan p;
    p.n = n;
    p.k = k;
    build_k_star(p, n, k);
    return p;
}

} // namespace ucg
