#include <cstdio>

#include "doctest.h"
#include "ucgsynth/io.hpp"
#include "ucgsynth/qaoa.hpp"
#include "ucgsynth/synth_depth.hpp"
#include "ucgsynth/synth_size.hpp"
#include "ucgsynth/verify.hpp"

using namespace ucg;

namespace {

void check_same_circuit(const CircuitIR& a, const CircuitIR& b) {
    CHECK(a.layout.n == b.layout.n);
    CHECK(a.layout.m == b.layout.m);
    CHECK(a.layout.anc == b.layout.anc);
    REQUIRE(a.gates.size() == b.gates.size());
    for (std::size_t i = 0; i < a.gates.size(); ++i) {
        const Gate& x = a.gates[i];
        const Gate& y = b.gates[i];
        CHECK(x.kind == y.kind);
        CHECK(x.a == y.a);
        CHECK(x.b == y.b);
        CHECK(x.targets == y.targets);
        CHECK(x.theta == y.theta);
        CHECK(x.axis == y.axis);
        CHECK(x.real == y.real);
        CHECK(x.param == y.param);
        CHECK(x.label == y.label);
    }
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("synthesized circuits round-trip through json") {
    TargetVector rz = random_target_vector(3, Realization::rz, 1, 1);
    TargetVector dg = random_target_vector(2, Realization::diag, 2, 2);
    TargetVector ph = random_target_vector(3, Realization::phase, 0, 3);
    TargetVector rx = random_target_vector(2, Realization::rx, 1, 4);
    for (const CircuitIR& c :
         {synth_rucg(rz), synth_rucg(dg), synth_diag_depth(ph), synth_rucg(rx),
          synth_rucg_rz_depth(rx), synth_qaoa(4, 0.3)}) {
        CircuitIR back = circuit_from_json(circuit_to_json(c));
        check_same_circuit(c, back);
    }
}

TEST_CASE("hand-built gate alphabet round-trips") {
    CircuitIR c;
    c.layout = {2, 1, 1};
    c.gates = {Gate::gphase(0.25),
               Gate::cnot(0, 3),
               Gate::rot(1, -0.5, RotAxis::phase),
               Gate::rot(2, 0.75, RotAxis::z),
               Gate::named(2, "h"),
               Gate::named(2, "sdg"),
               Gate::u({2}, Realization::ry, {1.5}),
               Gate::cu(1, {2}, Realization::diag, {0.1, -0.2})};
    check_same_circuit(c, circuit_from_json(circuit_to_json(c)));
}

TEST_CASE("target vectors round-trip, diag entries as arrays") {
    TargetVector tv = random_target_vector(2, Realization::diag, 2, 17);
    std::string js = target_vector_to_json(tv);
    CHECK(js.find("\"diag_m\"") != std::string::npos);
    TargetVector back = target_vector_from_json(js);
    CHECK(back.n == tv.n);
    CHECK(back.realization == tv.realization);
    CHECK(back.m == tv.m);
    CHECK(back.chi == tv.chi);

    TargetVector ph = random_target_vector(3, Realization::phase, 0, 18);
    TargetVector ph_back = target_vector_from_json(target_vector_to_json(ph));
    CHECK(ph_back.chi == ph.chi);
}

TEST_CASE("plain diag name without the target count is accepted") {
    TargetVector back = target_vector_from_json(
        R"({"n":1,"realization":"diag","m":1,"chi":[[0.1,0.2],[0.3,0.4]]})");
    CHECK(back.realization == Realization::diag);
    CHECK(back.m == 1);
    CHECK(back.chi == std::vector<double>{0.1, 0.2, 0.3, 0.4});
}

TEST_CASE("gate lists round-trip with polarities") {
    KGateList list = random_kgate_list(4, 3, 6, Realization::rz, 1, 5);
    KGateList back = kgate_list_from_json(kgate_list_to_json(list));
    CHECK(back.n == list.n);
    CHECK(back.realization == list.realization);
    REQUIRE(back.gates.size() == list.gates.size());
    for (std::size_t i = 0; i < list.gates.size(); ++i) {
        CHECK(back.gates[i].mu == list.gates[i].mu);
        REQUIRE(back.gates[i].controls.size() == list.gates[i].controls.size());
        for (std::size_t j = 0; j < list.gates[i].controls.size(); ++j) {
            CHECK(back.gates[i].controls[j].q == list.gates[i].controls[j].q);
            CHECK(back.gates[i].controls[j].positive == list.gates[i].controls[j].positive);
        }
    }

    KGateList dg = random_kgate_list(3, 2, 4, Realization::diag, 2, 6);
    KGateList dg_back = kgate_list_from_json(kgate_list_to_json(dg));
    CHECK(dg_back.m == 2);
    CHECK(dg_back.gates[0].mu == dg.gates[0].mu);
}

TEST_CASE("qasm output names the expected primitives") {
    TargetVector tv = random_target_vector(2, Realization::rz, 1, 7);
    std::string q = to_qasm(synth_rucg(tv, SynthOptions{false, 1e-12}));
    CHECK(q.find("OPENQASM 2.0") != std::string::npos);
    CHECK(q.find("qreg q[3];") != std::string::npos);
    CHECK(q.find("cx q[") != std::string::npos);
    CHECK(q.find("crz(") != std::string::npos);
    CHECK(q.find("rz(") != std::string::npos);

    std::string ph = to_qasm(synth_diag_depth(random_target_vector(3, Realization::phase, 0, 8)));
    CHECK(ph.find("p(") != std::string::npos);

    // controlled rx blocks leave qelib1 and get an opaque declaration
    std::string rx = to_qasm(synth_rucg(random_target_vector(2, Realization::rx, 1, 9)));
    CHECK(rx.find("opaque crx(theta)") != std::string::npos);

    TargetVector dg = random_target_vector(2, Realization::diag, 2, 10);
    std::string dq = to_qasm(synth_rucg(dg));
    CHECK(dq.find("opaque cdiag2(") != std::string::npos);
}

TEST_CASE("malformed input is reported as such") {
    CHECK_THROWS_AS(circuit_from_json("{not json"), InputError);
    CHECK_THROWS_AS(circuit_from_json(R"({"layout":{"n":1,"m":0,"anc":0},"gates":[{"kind":"zz"}]})"),
                    InputError);
    CHECK_THROWS_AS(target_vector_from_json(R"({"n":1,"realization":"nope","chi":[0,0]})"),
                    InputError);
    CHECK_THROWS_AS(target_vector_from_json(R"({"n":2,"realization":"phase","chi":[0,0]})"),
                    InputError);
    CHECK_THROWS_AS(kgate_list_from_json(R"({"n":1,"realization":"rz","gates":[
        {"controls":[{"q":0,"pol":"maybe"}],"mu":0.5}]})"),
                    InputError);
}

TEST_CASE("cost report serializes every tracked metric") {
    CircuitIR c = synth_qaoa(4, 0.4);
    std::string js = cost_to_json(depth_schedule(c));
    for (const char* key : {"\"cnot\"", "\"rot\"", "\"cu\"", "\"u\"", "\"depth_total\"",
                            "\"depth_cnot\"", "\"layers_rot\"", "\"layers_cu\""})
        CHECK(js.find(key) != std::string::npos);
    CHECK(js.find("\"depth_total\": 9") != std::string::npos);
}

TEST_CASE("text file round trip") {
    const std::string path = "io_test_scratch.txt";
    write_text_file(path, "alpha\nbeta\n");
    CHECK(read_text_file(path) == "alpha\nbeta\n");
    CHECK_THROWS_AS(read_text_file("definitely_missing_file.json"), InputError);
    std::remove(path.c_str());
}

} // TEST_SUITE
