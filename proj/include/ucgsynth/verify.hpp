#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ucgsynth/circuit.hpp"
#include "ucgsynth/target_vector.hpp"

namespace ucg {

using cplx = std::complex<double>;

// Basis-index bit position of a circuit qubit. Controls form the high bits
// (control i at bit m+anc+i), targets the middle (target j at bit anc+j),
// ancillae the low bits, so a full index reads (c, t, a) and the reference
// block for control state c occupies rows c*2^m .. c*2^m + 2^m - 1.
int qubit_bit(const QubitLayout& layout, int q);

struct DenseUnitary {
    int nq = 0;
    std::vector<cplx> a; // row-major, dim = 2^nq

    std::size_t dim() const { return std::size_t(1) << nq; }
    cplx& at(std::size_t r, std::size_t c) { return a[r * dim() + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[r * dim() + c]; }
};

// Circuit whose action is |b> -> e^{i phase[b]} |perm[b]>; covers everything
// built from cnots and diagonal gates. Column b of the matrix has the single
// entry (perm[b], e^{i phase[b]}).
struct PhasePermUnitary {
    int nq = 0;
    std::vector<std::uint32_t> perm;
    std::vector<double> phase;
};

// Single-qubit matrix acting on one index bit.
struct Mixer {
    int bit = 0;
    std::array<cplx, 4> m; // row-major 2x2
};

// post * pp * pre with a handful of single-qubit mixers on each side; the
// form every synthesized circuit takes (the rx/ry paths conjugate a diagonal
// circuit by fixed cliffords on the target). Columns stay sparse: at most
// 2^(pre+post) entries, so equivalence checks run in O(2^n) regardless of
// realization.
struct CompactUnitary {
    int nq = 0;
    std::vector<Mixer> pre;
    PhasePermUnitary pp;
    std::vector<Mixer> post;

    bool diagonal_form() const { return pre.empty() && post.empty(); }
};

using SparseColumn = std::vector<std::pair<std::uint32_t, cplx>>; // sorted by row

SparseColumn compact_column(const CompactUnitary& u, std::uint32_t b);

// Simulates cnot/rot/diagonal cu-u/s/sdg exactly in the compact form; leading
// and trailing h (or unconditional rx/ry) gates become mixers. Throws
// InputError if the circuit leaves this family (e.g. a controlled rx mid
// circuit) — callers fall back to simulate_dense.
CompactUnitary simulate_compact(const CircuitIR& c);

// Checks the ancillae map the |0> sector to itself and restricts to it.
CompactUnitary project_ancillae(const CompactUnitary& u, int anc);

DenseUnitary to_dense(const CompactUnitary& u); // memory-guarded

// Full dense product, any gate mix; memory-guarded. Ancillae projected.
DenseUnitary simulate(const CircuitIR& c);

// Block-diagonal reference: block c is the realized U(chi_c).
CompactUnitary reference_compact(const TargetVector& tv);
DenseUnitary reference_unitary(const TargetVector& tv);

// true iff some unit scalar lambda makes max |A - lambda B| <= tol; second
// element is that deviation. lambda is read off at B's largest entry.
std::pair<bool, double> equiv_global_phase(const DenseUnitary& a, const DenseUnitary& b,
                                           double tol);
std::pair<bool, double> equiv_global_phase(const CompactUnitary& a,
                                           const CompactUnitary& b, double tol);

struct VerifyResult {
    bool ok = false;
    double max_dev = 0.0;
};

// simulate_compact (dense fallback) + ancilla projection + comparison against
// reference_compact, all in the sparse-column form.
VerifyResult verify_against_reference(const CircuitIR& c, const TargetVector& tv,
                                      double tol);

// Realized matrix of one group element: dim 1 for phase, 2 for rz/rx/ry,
// 2^m for diag.
DenseUnitary realized_block(Realization r, const double* block, int m);

DenseUnitary dense_identity(int nq);
DenseUnitary dense_mul(const DenseUnitary& a, const DenseUnitary& b);
bool is_unitary(const DenseUnitary& u, double tol);

} // namespace ucg
