#include "ucgsynth/bench.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "ucgsynth/kgate.hpp"
#include "ucgsynth/qaoa.hpp"
#include "ucgsynth/synth_depth.hpp"
#include "ucgsynth/synth_size.hpp"
#include "ucgsynth/verify.hpp"

namespace ucg {

namespace {

struct Instance {
    std::string method;
    std::function<CircuitIR()> synth;
};

void push_rows(std::vector<BenchRow>& rows, const std::string& suite, int n, int k,
               const TargetVector& ref, const std::vector<Instance>& instances) {
    for (const Instance& inst : instances) {
        BenchRow row;
        row.suite = suite;
        row.method = inst.method;
        row.n = n;
        row.k = k;
        const auto t0 = std::chrono::steady_clock::now();
        CircuitIR c = inst.synth();
        const auto t1 = std::chrono::steady_clock::now();
        row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.cost = depth_schedule(c);
        if (c.layout.total() <= 12) {
            try {
                row.verified = verify_against_reference(c, ref, 1e-9).ok ? "true" : "false";
            } catch (const std::exception&) {
                row.verified = "false";
            }
        } else {
            row.verified = "skip";
        }
        rows.push_back(std::move(row));
    }
}

} // namespace

std::vector<BenchRow> run_bench(const std::string& suite, int n_min, int n_max, int k,
                                std::uint64_t seed) {
    if (n_min > n_max) throw InputError("empty n range");
    if (n_max > 14) throw InputError("bench caps at n = 14");
    std::vector<BenchRow> rows;

    for (int n = n_min; n <= n_max; ++n) {
        const std::uint64_t s = seed + 1000u * std::uint64_t(n) + std::uint64_t(k);

        if (suite == "rucg") {
            if (n < 1) throw InputError("rucg suite needs n >= 1");
            TargetVector tv = random_target_vector(n, Realization::rz, 1, s);
            std::vector<Instance> inst;
            if (n <= 10)
                inst.push_back({"bruteforce", [&] { return synth_bruteforce(tv); }});
            inst.push_back({"size", [&] { return synth_rucg(tv); }});
            inst.push_back({"depth", [&] { return synth_rucg_rz_depth(tv); }});
            push_rows(rows, suite, n, n, tv, inst);
        } else if (suite == "krucg") {
            if (n < 1) throw InputError("krucg suite needs n >= 1");
            const int kk = std::max(1, std::min(k, n));
            KGateList list = random_kgate_list(n, kk, n, Realization::rz, 1, s);
            TargetVector tv = to_target_vector(standardize(list));
            std::vector<Instance> inst;
            inst.push_back({"bruteforce", [&] { return synth_bruteforce(list); }});
            inst.push_back({"size", [&] { return synth_krucg(list); }});
            inst.push_back({"depth", [&] { return synth_rucg_rz_depth(tv); }});
            push_rows(rows, suite, n, kk, tv, inst);
        } else if (suite == "diag") {
            if (n < 1) throw InputError("diag suite needs n >= 1");
            TargetVector tv = random_target_vector(n, Realization::phase, 0, s);
            std::vector<Instance> inst;
            if (n <= 10)
                inst.push_back({"bruteforce", [&] { return synth_bruteforce(tv); }});
            inst.push_back({"size", [&] { return synth_rucg(tv); }});
            inst.push_back({"depth", [&] { return synth_diag_depth(tv); }});
            push_rows(rows, suite, n, n, tv, inst);
        } else if (suite == "kdiag") {
            if (n < 1) throw InputError("kdiag suite needs n >= 1");
            const int kk = std::max(1, std::min(k, n));
            TargetVector tv = random_sparse_diag(n, kk, s);
            std::vector<Instance> inst;
            if (n <= 10)
                inst.push_back({"bruteforce", [&] { return synth_bruteforce(tv); }});
            inst.push_back({"size", [&] { return synth_rucg(tv); }});
            inst.push_back({"depth", [&] { return synth_kdiag_depth(tv, kk); }});
            push_rows(rows, suite, n, kk, tv, inst);
        } else if (suite == "qaoa") {
            if (n < 2) continue;
            const double gamma = 0.37;
            TargetVector tv = qaoa_target_vector(n, gamma);
            std::vector<Instance> inst;
            inst.push_back({"baseline", [&] { return baseline_rzz_ladder(n, gamma); }});
            inst.push_back({"size", [&] { return synth_rucg(tv); }});
            inst.push_back({"depth", [&] { return synth_qaoa(n, gamma); }});
            push_rows(rows, suite, n, 2, tv, inst);
        } else {
            throw InputError("unknown suite '" + suite +
                             "' (expected rucg, krucg, diag, kdiag or qaoa)");
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "suite,method,n,k,cnot,cu,rot,u,depth_total,depth_cnot,layers_rot,verified,ms\n";
    char buf[256];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%s,%d,%d,%lld,%lld,%lld,%lld,%lld,%lld,%lld,%s,%.3f\n",
                      r.suite.c_str(), r.method.c_str(), r.n, r.k, r.cost.count_cnot,
                      r.cost.count_cu, r.cost.count_rot, r.cost.count_u, r.cost.depth_total,
                      r.cost.depth_cnot, r.cost.layers_rot, r.verified.c_str(), r.ms);
        out += buf;
    }
    return out;
}

} // namespace ucg
