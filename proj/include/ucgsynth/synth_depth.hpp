#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ucgsynth/circuit.hpp"
#include "ucgsynth/f2.hpp"
#include "ucgsynth/synth_size.hpp"
#include "ucgsynth/target_vector.hpp"

namespace ucg {

// Partition {1, ..., 2^n - 1} into linearly independent groups over F2.
// Group count stays within ceil((2^n - 1) / n) + 1 for the sizes we target.
std::vector<std::vector<uint32_t>> partition_nonzero(int n);

// Partition all weight-k patterns of n bits into linearly independent groups,
// aiming for ceil(C(n, k) / (n / 2)) groups.
std::vector<std::vector<uint32_t>> partition_constant_weight(int n, int k);

struct GenerateResult {
    std::vector<std::pair<int, int>> cnots;  // local suffix wire indices
    LinearState state;
};

// CNOTs that take the suffix register from `from` to a state whose wire j
// computes the parity pattern group[j]; remaining wires are completed to a
// full-rank basis.
GenerateResult generate_stage(const std::vector<uint32_t>& group, const LinearState& from);

// CNOTs returning the suffix register to the identity map.
std::vector<std::pair<int, int>> reset_stage(const LinearState& state);

// Depth-optimized synthesis of a diagonal unitary given as a phase-realized
// target vector on n qubits.
CircuitIR synth_diag_depth(const TargetVector& tv, const SynthOptions& opt = {});

// Same, restricted to spectra supported on frequencies of weight <= k.
CircuitIR synth_kdiag_depth(const TargetVector& tv, int k, const SynthOptions& opt = {});

// Depth-optimized synthesis for rz/rx/ry realizations: the gate is lifted to
// a diagonal on n+1 qubits (target qubit last), with basis-change gates on the
// target for rx/ry.
CircuitIR synth_rucg_rz_depth(const TargetVector& tv, const SynthOptions& opt = {});

}  // namespace ucg
