#pragma once

#include "ucgsynth/circuit.hpp"
#include "ucgsynth/gray_path.hpp"
#include "ucgsynth/kgate.hpp"
#include "ucgsynth/target_vector.hpp"

namespace ucg {

struct SynthOptions {
    // drop rotations / controlled gates whose angle block vanishes; the cnot
    // skeleton is kept either way so the walk stays closed
    bool skip_identities = true;
    double zero_tol = 1e-12;
};

// Gate-count-optimal decomposition: one unconditional U(Y0), a controlled
// U(Y_w) per traversal step of the full ancilla-free walk, 2^n - 2 cnots.
CircuitIR synth_rucg(const TargetVector& tv, const SynthOptions& opt = {});

// Same stitching over the weight <= k walk after polarity standardization;
// cu count <= sum_{i=1..k} C(n,i), cnots <= 2 sum_{i=0..k} C(n,i).
CircuitIR synth_krucg(const KGateList& list, const SynthOptions& opt = {});

// Per-gate comparator: each controlled gate is cascaded on its own over its
// control set (2^q - 1 controlled gates and 2^q - 2 cnots per q-control
// gate), with no sharing between gates. Used as the benchmark baseline.
CircuitIR synth_bruteforce(const KGateList& list, const SynthOptions& opt = {});

// Per-state comparator for plain target vectors: one cascade per control
// state with a nonzero angle block.
CircuitIR synth_bruteforce(const TargetVector& tv, const SynthOptions& opt = {});

// Shared plan stitcher: emits the plan's cnots and activation gates into
// `out`, mapping local wire i to circuit qubit qmap[i]. f indexes angle
// blocks by the plan's local frequency states.
void emit_plan(CircuitIR& out, const TraversalPlan& plan, const FreqVector& f,
               const std::vector<int>& qmap, const std::vector<int>& targets,
               Realization real, const SynthOptions& opt);

} // namespace ucg
