#include "ucgsynth/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ucg {

using nlohmann::json;

namespace {

std::string real_json_name(Realization r) {
    return r == Realization::diag ? "diag_m" : realization_name(r);
}

Realization real_from_json_name(std::string s) {
    if (s == "diag_m") s = "diag";
    return realization_from_name(s);
}

json param_json(const std::vector<double>& p) {
    return json(p);
}

std::vector<double> param_from_json(const json& j) {
    std::vector<double> p;
    if (j.is_number()) {
        p.push_back(j.get<double>());
    } else if (j.is_array()) {
        for (const auto& v : j) p.push_back(v.get<double>());
    } else {
        throw InputError("gate param must be a number or an array of numbers");
    }
    return p;
}

std::vector<int> targets_from_json(const json& j) {
    std::vector<int> t;
    if (j.is_number_integer()) {
        t.push_back(j.get<int>());
    } else if (j.is_array()) {
        for (const auto& v : j) t.push_back(v.get<int>());
    } else {
        throw InputError("gate target list must be an int or an array of ints");
    }
    return t;
}

bool is_fixed_label(const std::string& s) {
    return s == "h" || s == "s" || s == "sdg";
}

json gate_to_json(const Gate& g) {
    json j;
    switch (g.kind) {
    case GateKind::cnot:
        j["kind"] = "cx";
        j["c"] = g.a;
        j["t"] = g.b;
        break;
    case GateKind::rot:
        j["kind"] = g.axis == RotAxis::z ? "rz" : "phase";
        j["q"] = g.a;
        j["theta"] = g.theta;
        break;
    case GateKind::cu:
        j["kind"] = "cu";
        j["c"] = g.a;
        j["t"] = g.targets;
        if (g.label.empty()) {
            j["label"] = real_json_name(g.real);
            j["param"] = param_json(g.param);
        } else {
            j["label"] = g.label;
        }
        break;
    case GateKind::u:
        j["kind"] = "u";
        j["t"] = g.targets;
        if (g.label.empty()) {
            j["label"] = real_json_name(g.real);
            j["param"] = param_json(g.param);
        } else {
            j["label"] = g.label;
        }
        break;
    case GateKind::gphase:
        j["kind"] = "gphase";
        j["theta"] = g.theta;
        break;
    }
    return j;
}

Gate gate_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cx") return Gate::cnot(j.at("c").get<int>(), j.at("t").get<int>());
    if (kind == "rz") return Gate::rot(j.at("q").get<int>(), j.at("theta").get<double>(), RotAxis::z);
    if (kind == "phase")
        return Gate::rot(j.at("q").get<int>(), j.at("theta").get<double>(), RotAxis::phase);
    if (kind == "gphase") return Gate::gphase(j.at("theta").get<double>());
    if (kind == "cu" || kind == "u") {
        std::vector<int> t = targets_from_json(j.at("t"));
        std::string label = j.value("label", std::string("rz"));
        if (is_fixed_label(label)) {
            if (t.size() != 1) throw InputError("fixed gate '" + label + "' takes one target");
            Gate g = Gate::named(t[0], label);
            if (kind == "cu") {
                g.kind = GateKind::cu;
                g.a = j.at("c").get<int>();
            }
            return g;
        }
        Realization r = real_from_json_name(label);
        std::vector<double> param = param_from_json(j.at("param"));
        if (kind == "cu") return Gate::cu(j.at("c").get<int>(), std::move(t), r, std::move(param));
        return Gate::u(std::move(t), r, std::move(param));
    }
    throw InputError("unknown gate kind '" + kind + "'");
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

std::string circuit_to_json(const CircuitIR& c) {
    json j;
    j["layout"] = {{"n", c.layout.n}, {"m", c.layout.m}, {"anc", c.layout.anc}};
    json gates = json::array();
    for (const Gate& g : c.gates) gates.push_back(gate_to_json(g));
    j["gates"] = std::move(gates);
    return j.dump(1);
}

CircuitIR circuit_from_json(const std::string& text) {
    json j = parse(text);
    CircuitIR c;
    try {
        const json& lay = j.at("layout");
        c.layout.n = lay.at("n").get<int>();
        c.layout.m = lay.value("m", 0);
        c.layout.anc = lay.value("anc", 0);
        for (const auto& g : j.at("gates")) c.gates.push_back(gate_from_json(g));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad circuit JSON: ") + e.what());
    }
    c.check();
    return c;
}

std::string target_vector_to_json(const TargetVector& tv) {
    json j;
    j["n"] = tv.n;
    j["realization"] = real_json_name(tv.realization);
    j["m"] = tv.m;
    json chi = json::array();
    const std::size_t B = tv.block();
    for (std::size_t c = 0; c < tv.entries(); ++c) {
        if (tv.realization == Realization::diag) {
            json blk = json::array();
            for (std::size_t t = 0; t < B; ++t) blk.push_back(tv.chi[c * B + t]);
            chi.push_back(std::move(blk));
        } else {
            chi.push_back(tv.chi[c]);
        }
    }
    j["chi"] = std::move(chi);
    return j.dump(1);
}

TargetVector target_vector_from_json(const std::string& text) {
    json j = parse(text);
    TargetVector tv;
    try {
        tv.n = j.at("n").get<int>();
        tv.realization = real_from_json_name(j.at("realization").get<std::string>());
        tv.m = j.value("m", realization_targets(tv.realization, 0));
        const json& chi = j.at("chi");
        for (const auto& e : chi) {
            if (e.is_array()) {
                for (const auto& v : e) tv.chi.push_back(v.get<double>());
            } else {
                tv.chi.push_back(e.get<double>());
            }
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad target-vector JSON: ") + e.what());
    }
    tv.validate();
    return tv;
}

std::string kgate_list_to_json(const KGateList& list) {
    json j;
    j["n"] = list.n;
    j["realization"] = real_json_name(list.realization);
    if (list.realization == Realization::diag) j["m"] = list.m;
    json gates = json::array();
    for (const ControlledGateSpec& g : list.gates) {
        json controls = json::array();
        for (const ControlPin& p : g.controls)
            controls.push_back({{"q", p.q}, {"pol", p.positive ? "pos" : "neg"}});
        json gj;
        gj["controls"] = std::move(controls);
        if (g.mu.size() == 1)
            gj["mu"] = g.mu[0];
        else
            gj["mu"] = json(g.mu);
        gates.push_back(std::move(gj));
    }
    j["gates"] = std::move(gates);
    return j.dump(1);
}

KGateList kgate_list_from_json(const std::string& text) {
    json j = parse(text);
    KGateList list;
    try {
        list.n = j.at("n").get<int>();
        list.realization = real_from_json_name(j.at("realization").get<std::string>());
        list.m = j.value("m", realization_targets(list.realization, 0));
        for (const auto& gj : j.at("gates")) {
            ControlledGateSpec g;
            for (const auto& pj : gj.at("controls")) {
                ControlPin p;
                p.q = pj.at("q").get<int>();
                const std::string pol = pj.at("pol").get<std::string>();
                if (pol == "pos") {
                    p.positive = true;
                } else if (pol == "neg") {
                    p.positive = false;
                } else {
                    throw InputError("control polarity must be 'pos' or 'neg'");
                }
                g.controls.push_back(p);
            }
            g.mu = param_from_json(gj.at("mu"));
            list.gates.push_back(std::move(g));
        }
        if (list.realization == Realization::diag && !j.contains("m") && !list.gates.empty()) {
            std::size_t B = list.gates[0].mu.size();
            int m = 0;
            while ((std::size_t(1) << m) < B) ++m;
            list.m = m;
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad gate-list JSON: ") + e.what());
    }
    list.validate();
    return list;
}

std::string cost_to_json(const CostReport& r) {
    json j;
    j["cnot"] = r.count_cnot;
    j["rot"] = r.count_rot;
    j["cu"] = r.count_cu;
    j["u"] = r.count_u;
    j["depth_total"] = r.depth_total;
    j["depth_cnot"] = r.depth_cnot;
    j["layers_rot"] = r.layers_rot;
    j["layers_cu"] = r.layers_cu;
    return j.dump(1);
}

namespace {

std::string fmt_angle(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string qlist(const std::vector<int>& qs) {
    std::string s;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) s += ",";
        s += "q[" + std::to_string(qs[i]) + "]";
    }
    return s;
}

} // namespace

std::string to_qasm(const CircuitIR& c) {
    std::ostringstream body;
    std::set<std::string> opaque;

    auto block_gate = [&](const Gate& g, bool controlled) {
        std::vector<int> qs;
        if (controlled) qs.push_back(g.a);
        qs.insert(qs.end(), g.targets.begin(), g.targets.end());
        if (!g.label.empty()) {
            // fixed single-qubit gate, possibly controlled
            if (!controlled) {
                body << g.label << " " << qlist(qs) << ";\n";
            } else {
                std::string name = "c" + g.label;
                if (name != "ch") opaque.insert("opaque " + name + "() a,b;");
                body << name << " " << qlist(qs) << ";\n";
            }
            return;
        }
        switch (g.real) {
        case Realization::phase:
            // zero-target block: plain phase shift on the control line
            body << (controlled ? "p(" : "gphase(") << fmt_angle(g.param[0]) << ")";
            if (controlled) body << " q[" << g.a << "]";
            body << ";\n";
            return;
        case Realization::rz:
        case Realization::rx:
        case Realization::ry: {
            std::string name = realization_name(g.real);
            if (controlled) {
                name = "c" + name;
                if (name == "cp" || name == "crx" || name == "cry")
                    opaque.insert("opaque " + name + "(theta) a,b;");
            }
            body << name << "(" << fmt_angle(g.param[0]) << ") " << qlist(qs) << ";\n";
            return;
        }
        case Realization::diag: {
            const std::size_t B = g.param.size();
            std::string name = (controlled ? "cdiag" : "diag") + std::to_string(g.targets.size());
            std::string decl = "opaque " + name + "(";
            for (std::size_t i = 0; i < B; ++i) decl += (i ? ",p" : "p") + std::to_string(i);
            decl += ") ";
            for (std::size_t i = 0; i < qs.size(); ++i) decl += (i ? ",a" : "a") + std::to_string(i);
            decl += ";";
            opaque.insert(decl);
            body << name << "(";
            for (std::size_t i = 0; i < B; ++i) body << (i ? "," : "") << fmt_angle(g.param[i]);
            body << ") " << qlist(qs) << ";\n";
            return;
        }
        }
    };

    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case GateKind::cnot:
            body << "cx q[" << g.a << "],q[" << g.b << "];\n";
            break;
        case GateKind::rot:
            if (g.axis == RotAxis::z) {
                body << "rz(" << fmt_angle(g.theta) << ") q[" << g.a << "];\n";
            } else {
                opaque.insert("opaque p(lambda) a;");
                body << "p(" << fmt_angle(g.theta) << ") q[" << g.a << "];\n";
            }
            break;
        case GateKind::cu:
            block_gate(g, true);
            break;
        case GateKind::u:
            block_gate(g, false);
            break;
        case GateKind::gphase:
            body << "// global phase " << fmt_angle(g.theta) << "\n";
            break;
        }
    }

    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    for (const std::string& d : opaque) out << d << "\n";
    out << "qreg q[" << c.layout.total() << "];\n";
    out << body.str();
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
    if (!out.flush()) throw InputError("failed writing '" + path + "'");
}

} // namespace ucg
