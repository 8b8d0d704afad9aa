#include "ucgsynth/circuit.hpp"

#include <algorithm>

namespace ucg {

Gate Gate::cnot(int c, int t) {
    Gate g;
    g.kind = GateKind::cnot;
    g.a = c;
    g.b = t;
    return g;
}

Gate Gate::rot(int q, double theta, RotAxis axis) {
    Gate g;
    g.kind = GateKind::rot;
    g.a = q;
    g.theta = theta;
    g.axis = axis;
    return g;
}

Gate Gate::cu(int c, std::vector<int> targets, Realization r, std::vector<double> param) {
    Gate g;
    g.kind = GateKind::cu;
    g.a = c;
    g.targets = std::move(targets);
    g.real = r;
    g.param = std::move(param);
    return g;
}

Gate Gate::u(std::vector<int> targets, Realization r, std::vector<double> param) {
    Gate g;
    g.kind = GateKind::u;
    g.targets = std::move(targets);
    g.real = r;
    g.param = std::move(param);
    return g;
}

Gate Gate::named(int q, std::string label) {
    Gate g;
    g.kind = GateKind::u;
    g.targets = {q};
    g.label = std::move(label);
    return g;
}

Gate Gate::gphase(double theta) {
    Gate g;
    g.kind = GateKind::gphase;
    g.theta = theta;
    return g;
}

std::vector<int> Gate::qubits() const {
    std::vector<int> q;
    switch (kind) {
    case GateKind::cnot: q = {a, b}; break;
    case GateKind::rot: q = {a}; break;
    case GateKind::cu:
        q = targets;
        q.push_back(a);
        break;
    case GateKind::u: q = targets; break;
    case GateKind::gphase: break;
    }
    std::sort(q.begin(), q.end());
    return q;
}

std::vector<std::string> validate(const CircuitIR& c) {
    std::vector<std::string> out;
    if (c.layout.n < 0 || c.layout.m < 0 || c.layout.anc < 0)
        out.push_back("layout: negative register size");
    if (c.layout.total() > 24) out.push_back("layout: too many qubits");
    const int nq = c.layout.total();
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        auto bad = [&](const std::string& why) {
            out.push_back("gate " + std::to_string(i) + ": " + why);
        };
        std::vector<int> q = g.qubits();
        for (int x : q)
            if (x < 0 || x >= nq) {
                bad("qubit index out of range");
                break;
            }
        for (std::size_t j = 1; j < q.size(); ++j)
            if (q[j] == q[j - 1]) {
                bad("repeated qubit");
                break;
            }
        switch (g.kind) {
        case GateKind::cnot:
            if (g.a == g.b) bad("control equals target");
            break;
        case GateKind::rot:
            break;
        case GateKind::cu:
        case GateKind::u: {
            if (!g.label.empty()) {
                if (!g.param.empty()) bad("named gate carries params");
                if (g.targets.size() != 1) bad("named gate takes one qubit");
                break;
            }
            std::size_t want = g.real == Realization::diag
                                   ? (std::size_t(1) << g.targets.size())
                                   : 1;
            int want_t = realization_targets(g.real, int(g.targets.size()));
            if (int(g.targets.size()) != want_t) bad("target count mismatch");
            if (g.param.size() != want) bad("param block size mismatch");
            break;
        }
        case GateKind::gphase:
            break;
        }
    }
    return out;
}

void CircuitIR::check() const {
    std::vector<std::string> diag = validate(*this);
    if (diag.empty()) return;
    std::string msg = "malformed circuit:";
    for (std::size_t i = 0; i < diag.size() && i < 4; ++i) msg += "\n  " + diag[i];
    if (diag.size() > 4) msg += "\n  ...";
    throw InputError(msg);
}

std::vector<long long> layer_assignment(const CircuitIR& c) {
    std::vector<long long> layer(c.gates.size(), 0);
    std::vector<long long> front(std::size_t(c.layout.total()), 0);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        std::vector<int> q = c.gates[i].qubits();
        if (q.empty()) continue; // gphase floats outside the schedule
        long long l = 0;
        for (int x : q) l = std::max(l, front[std::size_t(x)]);
        ++l;
        layer[i] = l;
        for (int x : q) front[std::size_t(x)] = l;
    }
    return layer;
}

CostReport depth_schedule(const CircuitIR& c) {
    CostReport r;
    std::vector<long long> layer = layer_assignment(c);
    std::vector<char> has_cnot, has_rot, has_cu;
    auto mark = [](std::vector<char>& v, long long l) {
        if (std::size_t(l) >= v.size()) v.resize(std::size_t(l) + 1, 0);
        v[std::size_t(l)] = 1;
    };
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        long long l = layer[i];
        if (l > r.depth_total) r.depth_total = l;
        switch (c.gates[i].kind) {
        case GateKind::cnot:
            ++r.count_cnot;
            mark(has_cnot, l);
            break;
        case GateKind::rot:
            ++r.count_rot;
            mark(has_rot, l);
            break;
        case GateKind::cu:
            ++r.count_cu;
            mark(has_cu, l);
            break;
        case GateKind::u:
            ++r.count_u;
            break;
        case GateKind::gphase:
            break;
        }
    }
    for (char v : has_cnot) r.depth_cnot += v;
    for (char v : has_rot) r.layers_rot += v;
    for (char v : has_cu) r.layers_cu += v;
    return r;
}

} // namespace ucg
