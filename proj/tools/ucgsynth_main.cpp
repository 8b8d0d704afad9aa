#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ucgsynth/bench.hpp"
#include "ucgsynth/io.hpp"
#include "ucgsynth/kgate.hpp"
#include "ucgsynth/qaoa.hpp"
#include "ucgsynth/synth_depth.hpp"
#include "ucgsynth/synth_size.hpp"
#include "ucgsynth/verify.hpp"

namespace {

struct SynthArgs {
    std::string kind;
    std::string opt = "size";
    int n = 0;
    int k = 2;
    double gamma = 0.5;
    std::string input, out, qasm, stats, ref_out;
    std::uint64_t seed = 1;
    bool keep_identities = false;
};

// reference may be a target vector or a controlled-gate list; gate lists are
// standardized into a target vector first
ucg::TargetVector load_reference(const std::string& path) {
    const std::string text = ucg::read_text_file(path);
    if (text.find("\"chi\"") != std::string::npos)
        return ucg::target_vector_from_json(text);
    return ucg::to_target_vector(ucg::standardize(ucg::kgate_list_from_json(text)));
}

int run_synth(const SynthArgs& a) {
    using namespace ucg;
    const bool depth = a.opt == "depth";

    TargetVector tv;
    KGateList list;
    bool have_list = false;

    if (a.kind == "qaoa") {
        if (a.n < 2) throw InputError("qaoa needs --n >= 2");
        tv = qaoa_target_vector(a.n, a.gamma);
    } else if (!a.input.empty()) {
        const std::string text = read_text_file(a.input);
        if (a.kind == "krucg") {
            list = kgate_list_from_json(text);
            have_list = true;
            tv = to_target_vector(standardize(list));
        } else {
            tv = target_vector_from_json(text);
        }
    } else {
        if (a.n < 1) throw InputError("--n is required without --input");
        if (a.kind == "rucg") {
            tv = random_target_vector(a.n, Realization::rz, 1, a.seed);
        } else if (a.kind == "diag") {
            tv = random_target_vector(a.n, Realization::phase, 0, a.seed);
        } else if (a.kind == "kdiag") {
            tv = random_sparse_diag(a.n, std::min(a.k, a.n), a.seed);
        } else if (a.kind == "krucg") {
            list = random_kgate_list(a.n, std::min(a.k, a.n), a.n, Realization::rz, 1, a.seed);
            have_list = true;
            tv = to_target_vector(standardize(list));
        } else {
            throw InputError("unknown --kind '" + a.kind + "'");
        }
    }

    auto synth = [&](const SynthOptions& opt) -> CircuitIR {
        if (a.kind == "qaoa") {
            if (depth) return synth_qaoa(tv.n, a.gamma);
            return synth_rucg(tv, opt);
        }
        if (a.kind == "rucg") {
            if (depth) return synth_rucg_rz_depth(tv, opt);
            return synth_rucg(tv, opt);
        }
        if (a.kind == "diag") {
            if (depth) return synth_diag_depth(tv, opt);
            return synth_rucg(tv, opt);
        }
        if (a.kind == "kdiag") {
            if (depth) return synth_kdiag_depth(tv, std::min(a.k, tv.n), opt);
            return synth_rucg(tv, opt);
        }
        if (a.kind == "krucg") {
            if (have_list) {
                if (depth) return synth_rucg_rz_depth(tv, opt);
                return synth_krucg(list, opt);
            }
            throw InputError("krucg needs a gate list");
        }
        throw InputError("unknown --kind '" + a.kind + "'");
    };

    SynthOptions main_opt;
    main_opt.skip_identities = !a.keep_identities;
    CircuitIR c = synth(main_opt);
    const CostReport cost = depth_schedule(c);

    const std::string circuit_json = circuit_to_json(c);
    if (a.out.empty())
        std::cout << circuit_json << "\n";
    else
        write_text_file(a.out, circuit_json);
    if (!a.qasm.empty()) write_text_file(a.qasm, to_qasm(c));
    if (!a.ref_out.empty()) write_text_file(a.ref_out, target_vector_to_json(tv));

    if (!a.stats.empty()) {
        SynthOptions skip_opt, full_opt;
        skip_opt.skip_identities = true;
        full_opt.skip_identities = false;
        const std::string stats = std::string("{\n \"skipping\": ") +
                                  cost_to_json(depth_schedule(synth(skip_opt))) +
                                  ",\n \"full\": " +
                                  cost_to_json(depth_schedule(synth(full_opt))) + "\n}\n";
        write_text_file(a.stats, stats);
    }

    std::cerr << "kind=" << a.kind << " opt=" << a.opt << " n=" << tv.n
              << " cnot=" << cost.count_cnot << " rot=" << cost.count_rot
              << " cu=" << cost.count_cu << " depth=" << cost.depth_total
              << " depth_cnot=" << cost.depth_cnot << "\n";
    return 0;
}

int run_verify(const std::string& circuit_path, const std::string& reference_path, double tol) {
    using namespace ucg;
    CircuitIR c = circuit_from_json(read_text_file(circuit_path));
    TargetVector tv = load_reference(reference_path);
    VerifyResult r = verify_against_reference(c, tv, tol);
    std::cout << (r.ok ? "PASS" : "FAIL") << " max_dev=" << r.max_dev << "\n";
    return r.ok ? 0 : 2;
}

int run_bench_cmd(const std::string& suite, int n_min, int n_max, int k, std::uint64_t seed,
                  const std::string& csv_path) {
    using namespace ucg;
    std::vector<BenchRow> rows = run_bench(suite, n_min, n_max, k, seed);
    const std::string csv = bench_csv(rows);
    if (csv_path.empty())
        std::cout << csv;
    else
        write_text_file(csv_path, csv);
    for (const BenchRow& r : rows)
        if (r.verified == "false") return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuit synthesis for uniformly controlled and diagonal gates"};
    app.require_subcommand(1);

    SynthArgs sa;
    CLI::App* synth = app.add_subcommand("synth", "synthesize a circuit");
    synth->add_option("--kind", sa.kind, "rucg | krucg | diag | kdiag | qaoa")->required();
    synth->add_option("--opt", sa.opt, "size | depth")->check(CLI::IsMember({"size", "depth"}));
    synth->add_option("--n", sa.n, "control qubit count (random instances)");
    synth->add_option("--k", sa.k, "frequency weight cap for kdiag/krucg");
    synth->add_option("--gamma", sa.gamma, "qaoa angle");
    synth->add_option("--input", sa.input, "target-vector or gate-list JSON file");
    synth->add_option("--out", sa.out, "circuit JSON output file (default stdout)");
    synth->add_option("--qasm", sa.qasm, "QASM-like output file");
    synth->add_option("--stats", sa.stats, "cost JSON (with and without identity skipping)");
    synth->add_option("--ref-out", sa.ref_out, "write the synthesized instance's target vector");
    synth->add_option("--seed", sa.seed, "random instance seed");
    synth->add_flag("--keep-identities", sa.keep_identities, "emit zero-angle gates too");

    std::string v_circuit, v_reference;
    double v_tol = 1e-9;
    CLI::App* verify = app.add_subcommand("verify", "check a circuit against a reference");
    verify->add_option("--circuit", v_circuit, "circuit JSON file")->required();
    verify->add_option("--reference", v_reference, "target-vector or gate-list JSON file")
        ->required();
    verify->add_option("--tol", v_tol, "max deviation up to global phase");

    std::string b_suite, b_csv;
    int b_nmin = 1, b_nmax = 8, b_k = 2;
    std::uint64_t b_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "synthesize suites and report costs");
    bench->add_option("--suite", b_suite, "rucg | krucg | diag | kdiag | qaoa")->required();
    bench->add_option("--n-min", b_nmin, "smallest instance");
    bench->add_option("--n-max", b_nmax, "largest instance");
    bench->add_option("--k", b_k, "weight cap for the sparse suites");
    bench->add_option("--seed", b_seed, "instance seed");
    bench->add_option("--csv", b_csv, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return run_synth(sa);
        if (verify->parsed()) return run_verify(v_circuit, v_reference, v_tol);
        if (bench->parsed()) return run_bench_cmd(b_suite, b_nmin, b_nmax, b_k, b_seed, b_csv);
    } catch (const ucg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const ucg::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
