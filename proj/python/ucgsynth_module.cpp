#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ucgsynth/bench.hpp"
#include "ucgsynth/io.hpp"
#include "ucgsynth/kgate.hpp"
#include "ucgsynth/qaoa.hpp"
#include "ucgsynth/synth_depth.hpp"
#include "ucgsynth/synth_size.hpp"
#include "ucgsynth/transform.hpp"
#include "ucgsynth/verify.hpp"

namespace py = pybind11;
using namespace ucg;

namespace {

SynthOptions make_opt(bool skip) {
    SynthOptions o;
    o.skip_identities = skip;
    return o;
}

// references may be target vectors or controlled-gate lists, same sniffing as
// the command line
TargetVector parse_reference(const std::string& text) {
    if (text.find("\"chi\"") != std::string::npos) return target_vector_from_json(text);
    return to_target_vector(standardize(kgate_list_from_json(text)));
}

py::dict cost_dict(const CostReport& r) {
    py::dict d;
    d["cnot"] = r.count_cnot;
    d["rot"] = r.count_rot;
    d["cu"] = r.count_cu;
    d["u"] = r.count_u;
    d["depth_total"] = r.depth_total;
    d["depth_cnot"] = r.depth_cnot;
    d["layers_rot"] = r.layers_rot;
    d["layers_cu"] = r.layers_cu;
    return d;
}

} // namespace

PYBIND11_MODULE(ucgsynth, mod) {
    mod.doc() = "circuit synthesis for uniformly controlled and diagonal gates";

    py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(mod, "ResourceError", PyExc_RuntimeError);

    // circuits and instance data travel as the same JSON strings the CLI and
    // the files use; helpers below generate and inspect them
    mod.def(
        "synth_rucg",
        [](const std::string& tv_json, bool skip) {
            return circuit_to_json(synth_rucg(target_vector_from_json(tv_json), make_opt(skip)));
        },
        py::arg("target_vector"), py::arg("skip_identities") = true,
        "size-optimal decomposition of a uniformly controlled gate");

    mod.def(
        "synth_krucg",
        [](const std::string& list_json, bool skip) {
            return circuit_to_json(synth_krucg(kgate_list_from_json(list_json), make_opt(skip)));
        },
        py::arg("gate_list"), py::arg("skip_identities") = true,
        "shared sparse walk over a controlled-gate list");

    mod.def(
        "synth_diag_depth",
        [](const std::string& tv_json, bool skip) {
            return circuit_to_json(
                synth_diag_depth(target_vector_from_json(tv_json), make_opt(skip)));
        },
        py::arg("target_vector"), py::arg("skip_identities") = true,
        "depth-optimized diagonal synthesis");

    mod.def(
        "synth_kdiag_depth",
        [](const std::string& tv_json, int k, bool skip) {
            return circuit_to_json(
                synth_kdiag_depth(target_vector_from_json(tv_json), k, make_opt(skip)));
        },
        py::arg("target_vector"), py::arg("k"), py::arg("skip_identities") = true,
        "depth-optimized synthesis for weight <= k spectra");

    mod.def(
        "synth_rucg_rz_depth",
        [](const std::string& tv_json, bool skip) {
            return circuit_to_json(
                synth_rucg_rz_depth(target_vector_from_json(tv_json), make_opt(skip)));
        },
        py::arg("target_vector"), py::arg("skip_identities") = true,
        "depth-optimized rotation path via the lifted diagonal");

    mod.def(
        "synth_qaoa",
        [](int n, double gamma) { return circuit_to_json(synth_qaoa(n, gamma)); },
        py::arg("n"), py::arg("gamma"), "scheduled complete-graph cost layer");

    mod.def(
        "baseline_rzz_ladder",
        [](int n, double gamma) { return circuit_to_json(baseline_rzz_ladder(n, gamma)); },
        py::arg("n"), py::arg("gamma"), "pair-by-pair comparison circuit");

    mod.def(
        "qaoa_target_vector",
        [](int n, double gamma) { return target_vector_to_json(qaoa_target_vector(n, gamma)); },
        py::arg("n"), py::arg("gamma"));

    mod.def(
        "verify",
        [](const std::string& circuit_json, const std::string& reference_json, double tol) {
            VerifyResult r = verify_against_reference(circuit_from_json(circuit_json),
                                                      parse_reference(reference_json), tol);
            return py::make_tuple(r.ok, r.max_dev);
        },
        py::arg("circuit"), py::arg("reference"), py::arg("tol") = 1e-9,
        "compare a circuit against its reference up to global phase; returns (ok, max_dev)");

    mod.def(
        "cost",
        [](const std::string& circuit_json) {
            return cost_dict(depth_schedule(circuit_from_json(circuit_json)));
        },
        py::arg("circuit"), "gate tallies and depth metrics of a circuit");

    mod.def(
        "to_qasm",
        [](const std::string& circuit_json) { return to_qasm(circuit_from_json(circuit_json)); },
        py::arg("circuit"));

    mod.def(
        "random_target_vector",
        [](int n, const std::string& realization, int m, std::uint64_t seed) {
            return target_vector_to_json(
                random_target_vector(n, realization_from_name(realization), m, seed));
        },
        py::arg("n"), py::arg("realization"), py::arg("m") = 1, py::arg("seed") = 1);

    mod.def(
        "random_sparse_diag",
        [](int n, int k, std::uint64_t seed) {
            return target_vector_to_json(random_sparse_diag(n, k, seed));
        },
        py::arg("n"), py::arg("k"), py::arg("seed") = 1);

    mod.def(
        "random_kgate_list",
        [](int n, int k, int count, const std::string& realization, int m, std::uint64_t seed) {
            return kgate_list_to_json(
                random_kgate_list(n, k, count, realization_from_name(realization), m, seed));
        },
        py::arg("n"), py::arg("k"), py::arg("count"), py::arg("realization") = "rz",
        py::arg("m") = 1, py::arg("seed") = 1);

    mod.def(
        "frequency_angles",
        [](const std::vector<double>& chi) { return freq_from_angles(chi); }, py::arg("chi"),
        "rotation angles Y from a control-indexed angle vector");

    mod.def(
        "reconstruct",
        [](const std::vector<double>& y, std::uint32_t c) { return reconstruct_entry(y, c); },
        py::arg("y"), py::arg("c"), "angle applied at control state c");

    mod.def(
        "bench",
        [](const std::string& suite, int n_min, int n_max, int k, std::uint64_t seed) {
            return bench_csv(run_bench(suite, n_min, n_max, k, seed));
        },
        py::arg("suite"), py::arg("n_min") = 1, py::arg("n_max") = 8, py::arg("k") = 2,
        py::arg("seed") = 1, "run a cost sweep, returns CSV text");
}
