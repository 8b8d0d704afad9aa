#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucgsynth/common.hpp"

namespace ucg {

// How a scalar angle block is turned into a concrete unitary on the target
// register:
//   phase : e^{i theta}, no target qubits
//   rz/rx/ry : single-qubit rotation exp(-i theta P / 2)
//   diag  : m-qubit diagonal, block holds 2^m phases
enum class Realization { phase, rz, rx, ry, diag };

const char* realization_name(Realization r);
Realization realization_from_name(const std::string& s);

// Number of target qubits a realization acts on (diag takes it explicitly).
inline int realization_targets(Realization r, int m) {
    switch (r) {
    case Realization::phase: return 0;
    case Realization::rz:
    case Realization::rx:
    case Realization::ry: return 1;
    case Realization::diag: return m;
    }
    return 0;
}

// Control-indexed angle data for one uniformly controlled gate: entry c is the
// group element applied to the target register when the controls read c.
// Angles are stored flat, `block` doubles per entry (1 unless diag).
struct TargetVector {
    int n = 0; // control qubits
    Realization realization = Realization::phase;
    int m = 0;               // target qubits
    std::vector<double> chi; // (1 << n) * block() doubles

    std::size_t entries() const { return std::size_t(1) << n; }
    std::size_t block() const {
        return realization == Realization::diag ? (std::size_t(1) << m) : 1;
    }
    const double* entry(std::uint32_t c) const { return chi.data() + c * block(); }
    double* entry(std::uint32_t c) { return chi.data() + c * block(); }

    void validate() const;
};

// Walsh-frequency angles for a target vector, same block layout. y block at
// w=0 is the uncontrolled part; block at w!=0 is the rotation applied with
// parity popcount(c & w).
struct FreqVector {
    int n = 0;
    std::size_t block = 1;
    std::vector<double> y;

    const double* at(std::uint32_t w) const { return y.data() + w * block; }
    bool block_zero(std::uint32_t w, double tol) const {
        const double* p = at(w);
        for (std::size_t i = 0; i < block; ++i)
            if (p[i] > tol || p[i] < -tol) return false;
        return true;
    }
};

FreqVector frequency_vector(const TargetVector& tv);

// Largest popcount(w) over frequencies with a nonzero angle block, 0 if all
// vanish. Sparse target vectors keep this small and the k-variants of the
// synthesizers rely on it.
int max_support_weight(const FreqVector& f, double tol = 1e-12);

TargetVector random_target_vector(int n, Realization r, int m, std::uint64_t seed);

// random diagonal (phase realization) whose spectrum sits on weights <= k,
// built by drawing frequency angles and transforming back
TargetVector random_sparse_diag(int n, int k, std::uint64_t seed);

} // namespace ucg
