#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucgsynth/circuit.hpp"

namespace ucg {

struct BenchRow {
    std::string suite;
    std::string method; // bruteforce | size | depth | baseline
    int n = 0;
    int k = 0;
    CostReport cost;
    std::string verified; // true | false | skip
    double ms = 0.0;
};

// Synthesizes and measures every (n, method) instance of a suite. Suites:
// rucg, krucg, diag, kdiag, qaoa. Instances are generated deterministically
// from the seed; rows with at most 12 total qubits are checked against the
// reference unitary.
std::vector<BenchRow> run_bench(const std::string& suite, int n_min, int n_max, int k,
                                std::uint64_t seed);

// header: suite,method,n,k,cnot,cu,rot,u,depth_total,depth_cnot,layers_rot,verified,ms
std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace ucg
