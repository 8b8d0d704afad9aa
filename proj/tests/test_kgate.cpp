#include <random>
#include <tuple>

#include "doctest.h"
#include "ucgsynth/kgate.hpp"

using namespace ucg;

namespace {

using MaskGate = std::tuple<std::uint32_t, std::uint32_t, Dyadic>;

std::vector<MaskGate> random_mask_gates(int n, int count, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> mask((std::uint32_t)0,
                                                      (std::uint32_t(1) << n) - 1);
    std::uniform_int_distribution<std::int64_t> num(-64, 64);
    std::uniform_int_distribution<std::int32_t> den(0, 4);
    std::vector<MaskGate> gates;
    for (int i = 0; i < count; ++i) {
        std::uint32_t pos = mask(rng);
        std::uint32_t neg = mask(rng) & ~pos;
        gates.emplace_back(pos, neg, Dyadic(num(rng), den(rng)));
    }
    return gates;
}

} // namespace

TEST_SUITE("kgate") {

TEST_CASE("two negative controls expand with alternating signs") {
    Dyadic mu(3, 1);
    auto terms = standardize_masks<Dyadic>({{0u, 0b11u, mu}});
    REQUIRE(terms.size() == 4);
    // map order: mask ascending
    CHECK(terms[0] == std::pair<std::uint32_t, Dyadic>{0u, mu});
    CHECK(terms[1] == std::pair<std::uint32_t, Dyadic>{1u, -mu});
    CHECK(terms[2] == std::pair<std::uint32_t, Dyadic>{2u, -mu});
    CHECK(terms[3] == std::pair<std::uint32_t, Dyadic>{3u, mu});
}

TEST_CASE("mixed polarity gate splits into two positive terms") {
    // positive on qubit 0, negative on qubit 1
    Dyadic mu(5, 2);
    auto terms = standardize_masks<Dyadic>({{0b01u, 0b10u, mu}});
    REQUIRE(terms.size() == 2);
    CHECK(terms[0] == std::pair<std::uint32_t, Dyadic>{0b01u, mu});
    CHECK(terms[1] == std::pair<std::uint32_t, Dyadic>{0b11u, -mu});
}

TEST_CASE("cancelling terms are dropped") {
    Dyadic mu(1, 0);
    // unconditional +mu plus a negative control on qubit 0 with -mu leaves
    // only the positive-control branch
    auto terms = standardize_masks<Dyadic>({{0u, 0u, mu}, {0u, 1u, -mu}});
    REQUIRE(terms.size() == 1);
    CHECK(terms[0] == std::pair<std::uint32_t, Dyadic>{1u, mu});
}

TEST_CASE("standardize_masks matches the direct truth table") {
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            auto gates = random_mask_gates(n, 1 + rep % 7, rng);
            auto direct = gate_terms_chi<Dyadic>(n, gates, Dyadic());
            auto merged = standardize_masks<Dyadic>(gates);
            auto rebuilt = masks_to_chi<Dyadic>(n, merged, Dyadic());
            CHECK(direct == rebuilt);
        }
    }
}

TEST_CASE("standardize produces positive pins and merges duplicates") {
    KGateList list;
    list.n = 3;
    list.realization = Realization::rz;
    list.m = 1;
    list.gates.push_back({{{0, true}, {1, false}}, {0.5}});
    list.gates.push_back({{{0, true}, {1, true}}, {0.25}});
    list.gates.push_back({{{2, false}}, {1.0}});
    KGateList std_list = standardize(list);
    for (const ControlledGateSpec& g : std_list.gates)
        for (const ControlPin& p : g.controls) CHECK(p.positive);
    // {0} -> 0.5, {0,1} -> -0.5 + 0.25, {} -> 1.0, {2} -> -1.0
    REQUIRE(std_list.gates.size() == 4);
    TargetVector tv = to_target_vector(std_list);
    // direct evaluation of the original list
    auto gates = std::vector<MaskGate>{};
    for (const ControlledGateSpec& g : list.gates) {
        std::uint32_t pos = 0, neg = 0;
        for (const ControlPin& p : g.controls)
            (p.positive ? pos : neg) |= std::uint32_t(1) << p.q;
        // mus here are exactly representable
        CHECK(g.mu.size() == 1);
        gates.emplace_back(pos, neg, Dyadic(std::int64_t(g.mu[0] * 4), 2));
    }
    auto want = gate_terms_chi<Dyadic>(list.n, gates, Dyadic());
    for (std::size_t c = 0; c < tv.chi.size(); ++c)
        CHECK(tv.chi[c] == want[c].to_double());
}

TEST_CASE("to_target_vector sums mu over covering control states") {
    KGateList list;
    list.n = 4;
    list.realization = Realization::phase;
    list.gates.push_back({{{1, true}, {3, true}}, {0.75}});
    list.gates.push_back({{}, {0.125}});
    TargetVector tv = to_target_vector(list);
    const std::uint32_t mask = (1u << 1) | (1u << 3);
    for (std::uint32_t c = 0; c < 16; ++c) {
        double want = 0.125 + (((c & mask) == mask) ? 0.75 : 0.0);
        CHECK(tv.chi[c] == want);
    }
}

TEST_CASE("to_target_vector rejects negative pins") {
    KGateList list;
    list.n = 2;
    list.realization = Realization::rz;
    list.m = 1;
    list.gates.push_back({{{0, false}}, {0.5}});
    CHECK_THROWS_AS(to_target_vector(list), InputError);
}

TEST_CASE("diag blocks ride along through standardization") {
    KGateList list;
    list.n = 2;
    list.realization = Realization::diag;
    list.m = 1;
    list.gates.push_back({{{1, false}}, {0.5, -0.25}});
    KGateList std_list = standardize(list);
    TargetVector tv = to_target_vector(std_list);
    tv.validate();
    // chi blocks: c in {0,1} get the block, c in {2,3} get zero
    CHECK(tv.chi == std::vector<double>{0.5, -0.25, 0.5, -0.25, 0.0, 0.0, 0.0, 0.0});
}

TEST_CASE("spectral support weight never exceeds the control count cap") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 3 + int(seed % 6);
        int k = 1 + int(seed % 4);
        if (k > n) k = n;
        KGateList list = random_kgate_list(n, k, 2 * n, Realization::rz, 1, seed);
        list.validate();
        CHECK(list.k() <= k);
        TargetVector tv = to_target_vector(standardize(list));
        FreqVector f = frequency_vector(tv);
        SpectralSupport s = spectral_support(f);
        CHECK(s.max_weight <= k);
        for (std::uint32_t w : s.support) CHECK_FALSE(f.block_zero(w, 1e-9));
    }
}

TEST_CASE("random lists are reproducible") {
    KGateList a = random_kgate_list(5, 3, 8, Realization::phase, 1, 99);
    KGateList b = random_kgate_list(5, 3, 8, Realization::phase, 1, 99);
    REQUIRE(a.gates.size() == 8);
    REQUIRE(b.gates.size() == 8);
    for (std::size_t i = 0; i < a.gates.size(); ++i) {
        CHECK(a.gates[i].mu == b.gates[i].mu);
        REQUIRE(a.gates[i].controls.size() == b.gates[i].controls.size());
        for (std::size_t j = 0; j < a.gates[i].controls.size(); ++j) {
            CHECK(a.gates[i].controls[j].q == b.gates[i].controls[j].q);
            CHECK(a.gates[i].controls[j].positive == b.gates[i].controls[j].positive);
        }
    }
}

TEST_CASE("validate catches bad gates") {
    KGateList list;
    list.n = 2;
    list.realization = Realization::rz;
    list.m = 1;
    list.gates.push_back({{{0, true}, {0, false}}, {1.0}});
    CHECK_THROWS_AS(list.validate(), InputError);
    list.gates[0].controls = {{5, true}};
    CHECK_THROWS_AS(list.validate(), InputError);
    list.gates[0].controls = {{1, true}};
    list.gates[0].mu = {1.0, 2.0};
    CHECK_THROWS_AS(list.validate(), InputError);
}

} // TEST_SUITE
