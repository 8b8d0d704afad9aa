#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "ucgsynth/f2.hpp"
#include "ucgsynth/synth_depth.hpp"

using namespace ucg;

namespace {

LinearState random_invertible(int n, std::mt19937& rng) {
    LinearState s(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 4 * n; ++i) {
        int c = pick(rng), t = pick(rng);
        if (c != t) s.cnot(c, t);
    }
    return s;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

void check_partition(const std::vector<std::vector<std::uint32_t>>& groups,
                     const std::set<std::uint32_t>& universe) {
    std::set<std::uint32_t> seen;
    for (const auto& g : groups) {
        CHECK(f2_rank(g) == (int)g.size());
        for (std::uint32_t v : g) {
            CHECK(universe.count(v) == 1);
            CHECK(seen.insert(v).second);
        }
    }
    CHECK(seen.size() == universe.size());
}

} // namespace

TEST_SUITE("f2_partition") {

TEST_CASE("linear state cnot algebra") {
    LinearState s(3);
    CHECK(s.is_identity());
    s.cnot(0, 1);
    CHECK(s.rows[1] == 0b011);
    s.cnot(1, 2);
    CHECK(s.rows[2] == 0b111);
    s.cnot(0, 1);
    s.cnot(1, 2); // rows[2] ^= 2 -> 0b101
    CHECK(s.rows[1] == 0b010);
    CHECK(s.rows[2] == 0b101);
}

TEST_CASE("basis independence") {
    F2Basis b;
    CHECK(b.try_insert(3));
    CHECK(b.try_insert(5));
    CHECK_FALSE(b.independent(6)); // 3 ^ 5
    CHECK_FALSE(b.try_insert(6));
    CHECK(b.rank() == 2);
    CHECK(b.try_insert(1));
    CHECK(b.rank() == 3);
    CHECK(f2_rank({3, 5, 6}) == 2);
}

TEST_CASE("transition cnots replay from one state to another") {
    std::mt19937 rng(21);
    for (int n = 2; n <= 8; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            LinearState from = random_invertible(n, rng);
            LinearState to = random_invertible(n, rng);
            LinearState s = from;
            for (auto [c, t] : f2_transition_cnots(from, to)) s.cnot(c, t);
            CHECK(s.rows == to.rows);
        }
    }
}

TEST_CASE("f2_complete pins the fixed rows") {
    LinearState s = f2_complete(3, {3, 5});
    CHECK(s.rows[0] == 3);
    CHECK(s.rows[1] == 5);
    CHECK(f2_rank(s.rows) == 3);
    CHECK_THROWS_AS(f2_complete(3, {3, 5, 6}), std::logic_error);
}

TEST_CASE("partition_nonzero covers every state independently") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::uint32_t> universe;
        for (std::uint32_t v = 1; v < (std::uint32_t(1) << n); ++v) universe.insert(v);
        auto groups = partition_nonzero(n);
        check_partition(groups, universe);
        const long long bound = ceil_div((1LL << n) - 1, n) + 1;
        CHECK((long long)groups.size() <= bound);
    }
}

TEST_CASE("partition_nonzero(3) needs only three groups") {
    CHECK(partition_nonzero(3).size() == 3);
}

TEST_CASE("partition_constant_weight covers the weight class") {
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k <= std::min(n, 4); ++k) {
            std::set<std::uint32_t> universe;
            for (std::uint32_t v = 1; v < (std::uint32_t(1) << n); ++v)
                if (std::popcount(v) == k) universe.insert(v);
            auto groups = partition_constant_weight(n, k);
            check_partition(groups, universe);
            const long long bound = ceil_div(2 * binom(n, k), n);
            CHECK((long long)groups.size() <= bound);
        }
    }
}

TEST_CASE("partition_constant_weight near-full weights") {
    // k = n collapses to one group; k = n - 1 fits the bound too
    CHECK(partition_constant_weight(5, 5).size() == 1);
    auto g = partition_constant_weight(6, 5);
    const long long bound = ceil_div(2 * binom(6, 5), 6);
    CHECK((long long)g.size() <= bound);
}

TEST_CASE("generate and reset stages move the register") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        LinearState from = random_invertible(4, rng);
        std::vector<std::uint32_t> group{0b0110, 0b1010, 0b0001};
        GenerateResult gen = generate_stage(group, from);
        LinearState s = from;
        for (auto [c, t] : gen.cnots) s.cnot(c, t);
        CHECK(s.rows == gen.state.rows);
        for (std::size_t j = 0; j < group.size(); ++j) CHECK(s.rows[j] == group[j]);
        for (auto [c, t] : reset_stage(s)) s.cnot(c, t);
        CHECK(s.is_identity());
    }
}

TEST_CASE("generate_stage rejects dependent groups") {
    CHECK_THROWS_AS(generate_stage({3, 5, 6}, LinearState(4)), InputError);
}

} // TEST_SUITE
