#include <bit>
#include <cmath>

#include "doctest.h"
#include "ucgsynth/qaoa.hpp"
#include "ucgsynth/verify.hpp"

using namespace ucg;

TEST_SUITE("qaoa") {

TEST_CASE("complete graph spectrum sits on the weight-two masks") {
    const double gamma = 0.41;
    for (int n = 2; n <= 8; ++n) {
        TargetVector tv = qaoa_target_vector(n, gamma);
        FreqVector f = frequency_vector(tv);
        CHECK(std::abs(f.at(0)[0] - gamma * n * (n - 1) / 2) < 1e-12);
        for (std::uint32_t w = 1; w < tv.entries(); ++w) {
            double want = std::popcount(w) == 2 ? -2.0 * gamma : 0.0;
            CHECK(std::abs(f.at(w)[0] - want) < 1e-12);
        }
    }
}

TEST_CASE("angle vector counts aligned minus split pairs") {
    TargetVector tv = qaoa_target_vector(4, 1.0);
    // c = 0101: pairs (0,2),(1,3) aligned within their class ->
    // 2 aligned + ... enumerate directly
    for (std::uint32_t c = 0; c < 16; ++c) {
        int ones = std::popcount(c);
        int zeros = 4 - ones;
        double aligned = ones * (ones - 1) / 2.0 + zeros * (zeros - 1) / 2.0;
        double split = double(ones) * zeros;
        CHECK(tv.chi[c] == aligned - split); // gamma = 1, everything integral
    }
}

TEST_CASE("four qubits, depth nine, exact match") {
    const double gamma = 0.73;
    CircuitIR c = synth_qaoa(4, gamma);
    CostReport cost = depth_schedule(c);
    CHECK(cost.depth_total == 9);
    CHECK(cost.depth_cnot == 6);
    VerifyResult res = verify_against_reference(c, qaoa_target_vector(4, gamma), 1e-9);
    CHECK(res.ok);
    CHECK(res.max_dev < 1e-9);
}

TEST_CASE("round robin schedule matches the reference") {
    for (int n = 2; n <= 8; ++n) {
        const double gamma = 0.1 + 0.05 * n;
        VerifyResult res =
            verify_against_reference(synth_qaoa(n, gamma), qaoa_target_vector(n, gamma), 1e-9);
        CHECK(res.ok);
    }
}

TEST_CASE("depth bounds hold through twelve qubits") {
    for (int n = 2; n <= 12; ++n) {
        CostReport cost = depth_schedule(synth_qaoa(n, 0.37));
        CHECK(cost.depth_cnot <= 2 * n);
        CHECK(cost.depth_total <= 3 * n);
        long long pairs = (long long)n * (n - 1) / 2;
        CHECK(cost.count_cnot == 2 * pairs);
        CHECK(cost.count_rot == pairs);
    }
}

TEST_CASE("baseline ladder is exact but deeper") {
    CHECK(depth_schedule(baseline_rzz_ladder(2, 0.5)).depth_total == 3);
    VerifyResult res =
        verify_against_reference(baseline_rzz_ladder(4, 0.9), qaoa_target_vector(4, 0.9), 1e-9);
    CHECK(res.ok);
    for (int n = 4; n <= 10; ++n) {
        CostReport base = depth_schedule(baseline_rzz_ladder(n, 0.37));
        CostReport sched = depth_schedule(synth_qaoa(n, 0.37));
        CHECK(sched.depth_total < base.depth_total);
    }
}

TEST_CASE("qubit range is guarded") {
    CHECK_THROWS_AS(synth_qaoa(1, 0.5), InputError);
    CHECK_THROWS_AS(qaoa_target_vector(1, 0.5), InputError);
    CHECK_THROWS_AS(baseline_rzz_ladder(25, 0.5), InputError);
}

} // TEST_SUITE
