#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucgsynth/target_vector.hpp"

namespace ucg {

// Gate alphabet of the synthesized circuits. Everything is expressed over a
// single flat qubit register, see QubitLayout for the role ranges.
//
//   cnot   : a = control, b = target
//   rot    : single-qubit diagonal on qubit a; axis z is Rz(theta) =
//            diag(e^{-i t/2}, e^{i t/2}), axis phase is diag(1, e^{i t})
//   cu     : U(param) on `targets` controlled by qubit a; `real` says how the
//            param block is turned into a unitary, `label` optionally names a
//            fixed gate (h, s, sdg) in which case param is empty
//   u      : same as cu without the control (also used for the uncontrolled
//            part of a decomposition and for fixed basis-change gates)
//   gphase : global phase e^{i theta}, occupies no qubits
enum class GateKind { cnot, rot, cu, u, gphase };

enum class RotAxis { z, phase };

struct Gate {
    GateKind kind = GateKind::gphase;
    int a = -1;
    int b = -1;
    std::vector<int> targets;
    double theta = 0.0;
    RotAxis axis = RotAxis::phase;
    Realization real = Realization::phase;
    std::vector<double> param;
    std::string label;

    static Gate cnot(int c, int t);
    static Gate rot(int q, double theta, RotAxis axis);
    static Gate cu(int c, std::vector<int> targets, Realization r, std::vector<double> param);
    static Gate u(std::vector<int> targets, Realization r, std::vector<double> param);
    static Gate named(int q, std::string label); // h, s, sdg
    static Gate gphase(double theta);

    // qubits the gate touches, in ascending order
    std::vector<int> qubits() const;
};

struct QubitLayout {
    int n = 0;   // controls, qubits [0, n)
    int m = 0;   // targets, qubits [n, n+m)
    int anc = 0; // ancillae, qubits [n+m, n+m+anc)
    int total() const { return n + m + anc; }
};

struct CircuitIR {
    QubitLayout layout;
    std::vector<Gate> gates;

    // throws InputError with the first few diagnostics if malformed
    void check() const;
};

// All invariant violations, one line each, prefixed with the gate index.
// Empty result means the circuit is well-formed.
std::vector<std::string> validate(const CircuitIR& c);

struct CostReport {
    long long count_cnot = 0;
    long long count_rot = 0;
    long long count_cu = 0;
    long long count_u = 0;
    long long depth_total = 0;
    long long depth_cnot = 0; // layers containing at least one cnot
    long long layers_rot = 0; // layers containing at least one rot
    long long layers_cu = 0;  // layers containing at least one cu
};

// Per-gate layer indices (1-based; 0 for gphase) under earliest-possible
// scheduling: a gate lands one past the latest layer among gates it shares a
// qubit with.
std::vector<long long> layer_assignment(const CircuitIR& c);

// Gate tallies plus depth metrics of the earliest-possible layering.
CostReport depth_schedule(const CircuitIR& c);

} // namespace ucg
