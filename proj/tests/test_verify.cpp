#include <cmath>
#include <random>

#include "doctest.h"
#include "ucgsynth/gray_path.hpp"
#include "ucgsynth/synth_depth.hpp"
#include "ucgsynth/synth_size.hpp"
#include "ucgsynth/verify.hpp"

using namespace ucg;

namespace {

double max_abs_diff(const DenseUnitary& a, const DenseUnitary& b) {
    REQUIRE(a.nq == b.nq);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i)
        worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
    return worst;
}

TargetVector random_tv(int n, Realization r, int m, std::uint64_t seed) {
    return random_target_vector(n, r, m, seed);
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("qubit_bit puts controls high, targets middle, ancillae low") {
    QubitLayout lay{2, 1, 1};
    CHECK(qubit_bit(lay, 0) == 2); // control 0
    CHECK(qubit_bit(lay, 1) == 3); // control 1
    CHECK(qubit_bit(lay, 2) == 1); // target
    CHECK(qubit_bit(lay, 3) == 0); // ancilla
}

TEST_CASE("single control rz reference is the expected diagonal") {
    const double theta = 0.93;
    TargetVector tv;
    tv.n = 1;
    tv.realization = Realization::rz;
    tv.m = 1;
    tv.chi = {0.0, theta};
    DenseUnitary u = reference_unitary(tv);
    REQUIRE(u.nq == 2);
    DenseUnitary want = dense_identity(2);
    want.at(2, 2) = std::polar(1.0, -theta / 2);
    want.at(3, 3) = std::polar(1.0, theta / 2);
    CHECK(max_abs_diff(u, want) < 1e-15);
}

TEST_CASE("global phase equivalence accepts a rotated copy and rejects X") {
    DenseUnitary id = dense_identity(1);
    DenseUnitary rot = id;
    for (auto& v : rot.a) v *= std::polar(1.0, 3.14159 / 7);
    CHECK(equiv_global_phase(id, rot, 1e-12).first);

    DenseUnitary x = dense_identity(1);
    x.a = {0, 1, 1, 0};
    auto [ok, dev] = equiv_global_phase(id, x, 1e-9);
    CHECK_FALSE(ok);
    CHECK(dev > 0.5);
}

TEST_CASE("a closed cnot walk simulates to the identity") {
    TraversalPlan plan = gp_star(3);
    CircuitIR c;
    c.layout = {3, 0, 0};
    for (const TraversalStep& st : plan.steps)
        for (auto [a, b] : st.cnots) c.gates.push_back(Gate::cnot(a, b));
    DenseUnitary u = simulate(c);
    CHECK(max_abs_diff(u, dense_identity(3)) == 0.0);
}

TEST_CASE("simulate is multiplicative over concatenation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    CircuitIR a, b;
    a.layout = b.layout = {3, 0, 0};
    a.gates = {Gate::cnot(0, 1), Gate::rot(1, ang(rng), RotAxis::phase),
               Gate::named(2, "h"), Gate::rot(2, ang(rng), RotAxis::z)};
    b.gates = {Gate::named(2, "h"), Gate::cnot(2, 0),
               Gate::rot(0, ang(rng), RotAxis::phase), Gate::cnot(2, 0)};
    CircuitIR ab;
    ab.layout = a.layout;
    ab.gates = a.gates;
    ab.gates.insert(ab.gates.end(), b.gates.begin(), b.gates.end());
    DenseUnitary prod = dense_mul(simulate(b), simulate(a));
    CHECK(max_abs_diff(simulate(ab), prod) < 1e-13);
    CHECK(is_unitary(prod, 1e-12));
}

TEST_CASE("compact and dense simulation agree off the diagonal family") {
    // the lifted rotation paths wrap a diagonal in fixed basis changes, which
    // the compact form absorbs as mixers
    for (Realization r : {Realization::rx, Realization::ry}) {
        TargetVector tv = random_tv(3, r, 1, 11 + int(r));
        CircuitIR c = synth_rucg_rz_depth(tv);
        CompactUnitary cu = simulate_compact(c);
        CHECK_FALSE(cu.diagonal_form());
        DenseUnitary dense = simulate(c);
        CHECK(max_abs_diff(to_dense(cu), dense) < 1e-12);
    }
    // mid-circuit controlled blocks off the diagonal family are rejected
    TargetVector rx = random_tv(2, Realization::rx, 1, 13);
    CHECK_THROWS_AS(simulate_compact(synth_rucg(rx)), InputError);
}

TEST_CASE("compact reference matches the dense reference") {
    TargetVector tv = random_tv(2, Realization::diag, 2, 23);
    CHECK(max_abs_diff(to_dense(reference_compact(tv)), reference_unitary(tv)) < 1e-13);
}

TEST_CASE("synthesized circuits verify against the reference") {
    struct Case {
        Realization r;
        int m;
    };
    for (Case cs : {Case{Realization::phase, 0}, Case{Realization::rz, 1},
                    Case{Realization::rx, 1}, Case{Realization::ry, 1},
                    Case{Realization::diag, 2}}) {
        for (int n = 1; n <= 4; ++n) {
            TargetVector tv = random_tv(n, cs.r, cs.m, 100 * n + int(cs.r));
            VerifyResult res = verify_against_reference(synth_rucg(tv), tv, 1e-9);
            CHECK(res.ok);
            CHECK(res.max_dev < 1e-9);
        }
    }
}

TEST_CASE("verification flags a wrong circuit") {
    TargetVector tv = random_tv(2, Realization::rz, 1, 5);
    CircuitIR c = synth_rucg(tv);
    c.gates.push_back(Gate::rot(2, 0.2, RotAxis::z)); // stray rotation on the target
    VerifyResult res = verify_against_reference(c, tv, 1e-9);
    CHECK_FALSE(res.ok);
    CHECK(res.max_dev > 1e-3);
}

TEST_CASE("ancilla projection keeps the clean sector") {
    // manually walk the full frequency cycle through an ancilla wire
    TargetVector tv = random_tv(2, Realization::phase, 0, 77);
    FreqVector f = frequency_vector(tv);
    TraversalPlan plan = gp_ancilla(2);
    CircuitIR c;
    c.layout = {2, 0, 1};
    c.gates.push_back(Gate::u({}, Realization::phase, {f.at(0)[0]}));
    for (const TraversalStep& st : plan.steps) {
        for (auto [a, b] : st.cnots) c.gates.push_back(Gate::cnot(a, b));
        for (auto [q, w] : st.activations)
            c.gates.push_back(Gate::cu(q, {}, Realization::phase, {f.at(w)[0]}));
    }
    VerifyResult res = verify_against_reference(c, tv, 1e-9);
    CHECK(res.ok);
}

TEST_CASE("realized blocks") {
    double th = 0.4;
    DenseUnitary ph = realized_block(Realization::phase, &th, 0);
    REQUIRE(ph.nq == 0);
    CHECK(std::abs(ph.a[0] - std::polar(1.0, th)) < 1e-15);

    DenseUnitary rz = realized_block(Realization::rz, &th, 1);
    REQUIRE(rz.nq == 1);
    CHECK(std::abs(rz.at(0, 0) - std::polar(1.0, -th / 2)) < 1e-15);
    CHECK(std::abs(rz.at(1, 1) - std::polar(1.0, th / 2)) < 1e-15);
    CHECK(std::abs(rz.at(0, 1)) == 0.0);

    DenseUnitary rx = realized_block(Realization::rx, &th, 1);
    CHECK(std::abs(rx.at(0, 0) - std::cos(th / 2)) < 1e-15);
    CHECK(std::abs(rx.at(0, 1) - cplx(0, -std::sin(th / 2))) < 1e-15);

    DenseUnitary ry = realized_block(Realization::ry, &th, 1);
    CHECK(std::abs(ry.at(0, 1) + std::sin(th / 2)) < 1e-15);
    CHECK(std::abs(ry.at(1, 0) - std::sin(th / 2)) < 1e-15);

    double blk[2] = {0.3, -0.9};
    DenseUnitary dg = realized_block(Realization::diag, blk, 1);
    CHECK(std::abs(dg.at(0, 0) - std::polar(1.0, 0.3)) < 1e-15);
    CHECK(std::abs(dg.at(1, 1) - std::polar(1.0, -0.9)) < 1e-15);
    CHECK(is_unitary(dg, 1e-12));
}

} // TEST_SUITE
