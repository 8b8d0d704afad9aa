#include "ucgsynth/synth_size.hpp"

#include <algorithm>

namespace ucg {

namespace {

std::vector<int> target_qubits(const QubitLayout& lay) {
    std::vector<int> t(std::size_t(lay.m));
    for (int j = 0; j < lay.m; ++j) t[std::size_t(j)] = lay.n + j;
    return t;
}

void emit_head(CircuitIR& out, const FreqVector& f, const std::vector<int>& targets,
               Realization real, const SynthOptions& opt) {
    if (opt.skip_identities && f.block_zero(0, opt.zero_tol)) return;
    const double* y0 = f.at(0);
    if (targets.empty())
        out.gates.push_back(Gate::gphase(y0[0]));
    else
        out.gates.push_back(
            Gate::u(targets, real, std::vector<double>(y0, y0 + f.block)));
}

} // namespace

void emit_plan(CircuitIR& out, const TraversalPlan& plan, const FreqVector& f,
               const std::vector<int>& qmap, const std::vector<int>& targets,
               Realization real, const SynthOptions& opt) {
    for (const TraversalStep& step : plan.steps) {
        for (auto [cq, tq] : step.cnots)
            out.gates.push_back(Gate::cnot(qmap[std::size_t(cq)], qmap[std::size_t(tq)]));
        for (auto [aq, w] : step.activations) {
            if (opt.skip_identities && f.block_zero(w, opt.zero_tol)) continue;
            const int q = qmap[std::size_t(aq)];
            const double* y = f.at(w);
            if (targets.empty())
                out.gates.push_back(Gate::rot(q, y[0], RotAxis::phase));
            else
                out.gates.push_back(
                    Gate::cu(q, targets, real, std::vector<double>(y, y + f.block)));
        }
    }
}

CircuitIR synth_rucg(const TargetVector& tv, const SynthOptions& opt) {
    tv.validate();
    if (tv.n < 1) throw InputError("need at least one control qubit");
    CircuitIR out;
    out.layout = {tv.n, realization_targets(tv.realization, tv.m), 0};
    const FreqVector f = frequency_vector(tv);
    const std::vector<int> targets = target_qubits(out.layout);
    emit_head(out, f, targets, tv.realization, opt);
    TraversalPlan plan = gp_star(tv.n);
    std::vector<int> qmap(std::size_t(tv.n));
    for (int i = 0; i < tv.n; ++i) qmap[std::size_t(i)] = i;
    emit_plan(out, plan, f, qmap, targets, tv.realization, opt);
    return out;
}

CircuitIR synth_krucg(const KGateList& list, const SynthOptions& opt) {
    const int k_declared = std::max(list.k(), 1);
    KGateList std_list = standardize(list);
    CircuitIR out;
    out.layout = {list.n, realization_targets(list.realization, list.m), 0};
    if (std_list.gates.empty()) return out;

    const TargetVector tv = to_target_vector(std_list);
    const FreqVector f = frequency_vector(tv);
    // spectral sparsity is a theorem for this input family; exceeding the
    // declared k means the transform or the standardization broke
    if (max_support_weight(f, 1e-9) > k_declared)
        throw std::logic_error("frequency support exceeds declared k");

    const std::vector<int> targets = target_qubits(out.layout);
    emit_head(out, f, targets, tv.realization, opt);
    const int k_eff = std_list.k();
    if (k_eff == 0) return out; // only the unconditional part remains
    TraversalPlan plan = gp_k_star(list.n, k_eff);
    std::vector<int> qmap(std::size_t(list.n));
    for (int i = 0; i < list.n; ++i) qmap[std::size_t(i)] = i;
    emit_plan(out, plan, f, qmap, targets, tv.realization, opt);
    return out;
}

namespace {

// one multi-controlled gate on its own: impulse target vector over the gate's
// control set walked with the full ancilla-free path
void emit_cascade(CircuitIR& out, const std::vector<int>& qubits, std::uint32_t pattern,
                  const std::vector<double>& mu, const std::vector<int>& targets,
                  Realization real, const SynthOptions& opt) {
    const int q = int(qubits.size());
    if (q == 0) {
        if (targets.empty())
            out.gates.push_back(Gate::gphase(mu[0]));
        else
            out.gates.push_back(Gate::u(targets, real, mu));
        return;
    }
    TargetVector local;
    local.n = q;
    local.realization = real;
    local.m = targets.empty() ? 0 : int(targets.size());
    local.chi.assign((std::size_t(1) << q) * mu.size(), 0.0);
    std::copy(mu.begin(), mu.end(), local.chi.begin() + std::ptrdiff_t(pattern * mu.size()));
    const FreqVector f = frequency_vector(local);
    emit_head(out, f, targets, real, opt);
    emit_plan(out, gp_star(q), f, qubits, targets, real, opt);
}

} // namespace

CircuitIR synth_bruteforce(const KGateList& list, const SynthOptions& opt) {
    list.validate();
    CircuitIR out;
    out.layout = {list.n, realization_targets(list.realization, list.m), 0};
    const std::vector<int> targets = target_qubits(out.layout);
    for (const ControlledGateSpec& g : list.gates) {
        std::vector<ControlPin> pins = g.controls;
        std::sort(pins.begin(), pins.end(),
                  [](const ControlPin& a, const ControlPin& b) { return a.q < b.q; });
        std::vector<int> qubits;
        std::uint32_t pattern = 0;
        for (std::size_t i = 0; i < pins.size(); ++i) {
            qubits.push_back(pins[i].q);
            if (pins[i].positive) pattern |= std::uint32_t(1) << i;
        }
        emit_cascade(out, qubits, pattern, g.mu, targets, list.realization, opt);
    }
    return out;
}

CircuitIR synth_bruteforce(const TargetVector& tv, const SynthOptions& opt) {
    tv.validate();
    if (tv.n < 1) throw InputError("need at least one control qubit");
    CircuitIR out;
    out.layout = {tv.n, realization_targets(tv.realization, tv.m), 0};
    const std::vector<int> targets = target_qubits(out.layout);
    std::vector<int> qubits(std::size_t(tv.n));
    for (int i = 0; i < tv.n; ++i) qubits[std::size_t(i)] = i;
    const std::size_t B = tv.block();
    for (std::uint32_t c = 0; c < tv.entries(); ++c) {
        const double* blk = tv.entry(c);
        std::vector<double> mu(blk, blk + B);
        bool zero = true;
        for (double v : mu)
            if (v != 0.0) zero = false;
        if (zero) continue;
        emit_cascade(out, qubits, c, mu, targets, tv.realization, opt);
    }
    return out;
}

} // namespace ucg
