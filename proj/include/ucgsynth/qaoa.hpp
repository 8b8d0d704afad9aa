#pragma once

#include "ucgsynth/circuit.hpp"
#include "ucgsynth/target_vector.hpp"

namespace ucg {

// Cost-layer diagonal of QAOA on the complete graph:
// chi_c = gamma * sum_{i<j} (-1)^{c_i xor c_j}. Its frequency support sits
// exactly on the weight-2 masks with Y = -2 gamma.
TargetVector qaoa_target_vector(int n, double gamma);

// Depth-optimized circuit for that diagonal: the weight-2 rotations are
// scheduled as a round-robin edge coloring, one Rzz block per edge, all
// blocks of a round in parallel. CNOT depth <= 2n, total depth <= 3n,
// exactly 9 at n = 4.
CircuitIR synth_qaoa(int n, double gamma);

// Naive comparison circuit: one CNOT * Rz * CNOT block per pair in index
// order, packed only by the scheduler.
CircuitIR baseline_rzz_ladder(int n, double gamma);

} // namespace ucg
