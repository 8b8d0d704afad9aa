#include "ucgsynth/qaoa.hpp"

#include <bit>

namespace ucg {

TargetVector qaoa_target_vector(int n, double gamma) {
    if (n < 2 || n > 20) throw InputError("qaoa needs 2 <= n <= 20");
    TargetVector tv;
    tv.n = n;
    tv.realization = Realization::phase;
    tv.chi.resize(std::size_t(1) << n);
    for (std::uint32_t c = 0; c < (std::uint32_t(1) << n); ++c) {
        // pairs with equal bits contribute +1, differing bits -1
        const int ones = std::popcount(c);
        const int zeros = n - ones;
        const int aligned = ones * (ones - 1) / 2 + zeros * (zeros - 1) / 2;
        const int split = ones * zeros;
        tv.chi[c] = gamma * double(aligned - split);
    }
    return tv;
}

namespace {

// CNOT(a,b) Rz(-2 gamma, b) CNOT(a,b) multiplies basis state c by
// exp(i gamma (-1)^{c_a xor c_b}) exactly, so one block per edge of the
// complete graph reproduces the QAOA diagonal with no global phase left over.
void emit_rzz(std::vector<Gate>& gates, int a, int b, double gamma) {
    gates.push_back(Gate::cnot(a, b));
    gates.push_back(Gate::rot(b, -2.0 * gamma, RotAxis::z));
    gates.push_back(Gate::cnot(a, b));
}

} // namespace

CircuitIR synth_qaoa(int n, double gamma) {
    if (n < 2 || n > 20) throw InputError("qaoa needs 2 <= n <= 20");
    CircuitIR c;
    c.layout = QubitLayout{n, 0, 0};
    // round-robin tournament schedule: each round is a perfect matching, so
    // its blocks run in parallel (3 layers per round)
    if (n % 2 == 0) {
        const int m = n - 1;
        for (int r = 0; r < m; ++r) {
            std::vector<std::pair<int, int>> pairs;
            pairs.emplace_back(n - 1, r);
            for (int i = 1; i <= (n - 2) / 2; ++i)
                pairs.emplace_back(((r + i) % m), ((r - i + m) % m));
            for (std::size_t s = 0; s < 3; ++s) {
                for (auto [a, b] : pairs) {
                    if (s == 1)
                        c.gates.push_back(Gate::rot(b, -2.0 * gamma, RotAxis::z));
                    else
                        c.gates.push_back(Gate::cnot(a, b));
                }
            }
        }
    } else {
        for (int r = 0; r < n; ++r) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 1; i <= (n - 1) / 2; ++i)
                pairs.emplace_back(((r + i) % n), ((r - i + n) % n));
            for (std::size_t s = 0; s < 3; ++s) {
                for (auto [a, b] : pairs) {
                    if (s == 1)
                        c.gates.push_back(Gate::rot(b, -2.0 * gamma, RotAxis::z));
                    else
                        c.gates.push_back(Gate::cnot(a, b));
                }
            }
        }
    }
    return c;
}

CircuitIR baseline_rzz_ladder(int n, double gamma) {
    if (n < 2 || n > 20) throw InputError("qaoa needs 2 <= n <= 20");
    CircuitIR c;
    c.layout = QubitLayout{n, 0, 0};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            emit_rzz(c.gates, a, b, gamma);
    return c;
}

} // namespace ucg
