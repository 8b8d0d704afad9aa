#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ucgsynth/common.hpp"

namespace ucg {

// One step of a control-state traversal: apply the cnots, then each listed
// activation qubit holds the parity c.omega of its declared omega for every
// control basis state c.
struct TraversalStep {
    std::vector<std::pair<int, int>> cnots; // (control qubit, target qubit)
    std::vector<std::pair<int, std::uint32_t>> activations;
};

// Closed walk over frequency states: composing all cnots over F2 gives the
// identity, and `visited` lists each activated omega exactly once.
struct TraversalPlan {
    int n = 0;
    int k = 0; // visited weight cap (n for the dense walks)
    bool uses_ancilla = false;
    int carrier = -1; // ancilla qubit when uses_ancilla
    std::vector<TraversalStep> steps;
    std::vector<std::uint32_t> visited;

    long long cnot_count() const {
        long long c = 0;
        for (const TraversalStep& s : steps) c += (long long)s.cnots.size();
        return c;
    }
};

// All C(n,k) weight-k masks in revolving-door order: consecutive entries (and
// the wrap-around pair) differ by one element swapped, i.e. two bit flips.
std::vector<std::uint32_t> revolving_door_cycle(int n, int k);

// Nonzero states of weight 1..k, each weight class in revolving-door order,
// single-flip transitions between classes, starting from {bit 0}. Consecutive
// states differ by at most two flips; so do 0 -> front and the wrap.
std::vector<std::uint32_t> sparse_state_sequence(int n, int k);

// Full walk, one cnot per step into the ancilla qubit n; 2^n cnots total.
TraversalPlan gp_ancilla(int n);

// Ancilla-free full walk: states on the lower block recursively, states
// involving the top qubit via that qubit as activation carrier; 2^n - 2 cnots.
TraversalPlan gp_star(int n);

// Weight <= k walk into the ancilla qubit n; <= 2 * sum_{i<=k} C(n,i) cnots.
TraversalPlan gp_k_ancilla(int n, int k);

// Ancilla-free weight <= k walk, same cnot bound; collapses to gp_star when
// k = n.
TraversalPlan gp_k_star(int n, int k);

} // namespace ucg
