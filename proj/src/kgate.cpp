#include "ucgsynth/kgate.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace ucg {

void KGateList::validate() const {
    if (n < 1 || n > 20) throw InputError("control register size out of range");
    if (realization == Realization::diag) {
        if (m < 1 || m > 20) throw InputError("diag target count out of range");
    } else if (m != realization_targets(realization, m)) {
        throw InputError("target count does not match realization");
    }
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const ControlledGateSpec& g = gates[i];
        std::uint32_t seen = 0;
        for (const ControlPin& p : g.controls) {
            if (p.q < 0 || p.q >= n)
                throw InputError("gate " + std::to_string(i) + ": control qubit out of range");
            std::uint32_t bit = std::uint32_t(1) << p.q;
            if (seen & bit)
                throw InputError("gate " + std::to_string(i) + ": duplicate control qubit");
            seen |= bit;
        }
        if (g.mu.size() != block())
            throw InputError("gate " + std::to_string(i) + ": mu block size mismatch");
    }
}

static std::vector<std::tuple<std::uint32_t, std::uint32_t, std::vector<double>>>
to_mask_terms(const KGateList& list) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::vector<double>>> terms;
    terms.reserve(list.gates.size());
    for (const ControlledGateSpec& g : list.gates) {
        std::uint32_t pos = 0, neg = 0;
        for (const ControlPin& p : g.controls)
            (p.positive ? pos : neg) |= std::uint32_t(1) << p.q;
        terms.emplace_back(pos, neg, g.mu);
    }
    return terms;
}

KGateList standardize(const KGateList& list) {
    list.validate();
    auto merged = standardize_masks(to_mask_terms(list));
    KGateList out;
    out.n = list.n;
    out.realization = list.realization;
    out.m = list.m;
    out.gates.reserve(merged.size());
    for (auto& [mask, mu] : merged) {
        ControlledGateSpec g;
        for (int q = 0; q < list.n; ++q)
            if (mask >> q & 1) g.controls.push_back({q, true});
        g.mu = std::move(mu);
        out.gates.push_back(std::move(g));
    }
    return out;
}

TargetVector to_target_vector(const KGateList& list) {
    list.validate();
    TargetVector tv;
    tv.n = list.n;
    tv.realization = list.realization;
    tv.m = list.m;
    const std::size_t B = list.block();
    const std::uint32_t N = std::uint32_t(1) << list.n;
    tv.chi.assign(std::size_t(N) * B, 0.0);
    for (const ControlledGateSpec& g : list.gates) {
        std::uint32_t mask = 0;
        for (const ControlPin& p : g.controls) {
            if (!p.positive)
                throw InputError("to_target_vector requires a standardized list");
            mask |= std::uint32_t(1) << p.q;
        }
        // mu applies to every control state whose support covers the mask
        std::uint32_t c = mask;
        while (true) {
            double* dst = tv.chi.data() + std::size_t(c) * B;
            for (std::size_t t = 0; t < B; ++t) dst[t] += g.mu[t];
            if (c == N - 1) break;
            c = (c + 1) | mask;
        }
    }
    return tv;
}

SpectralSupport spectral_support(const FreqVector& f, double tol) {
    SpectralSupport s;
    const std::uint32_t N = std::uint32_t(1) << f.n;
    for (std::uint32_t w = 1; w < N; ++w) {
        if (f.block_zero(w, tol)) continue;
        s.support.push_back(w);
        int wt = std::popcount(w);
        if (wt > s.max_weight) s.max_weight = wt;
    }
    return s;
}

KGateList random_kgate_list(int n, int k, int count, Realization r, int m,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(0, k);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::bernoulli_distribution pol(0.25);
    KGateList list;
    list.n = n;
    list.realization = r;
    list.m = realization_targets(r, m);
    for (int i = 0; i < count; ++i) {
        ControlledGateSpec g;
        int sz = size_dist(rng);
        std::vector<int> qubits(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) qubits[std::size_t(q)] = q;
        std::shuffle(qubits.begin(), qubits.end(), rng);
        qubits.resize(std::size_t(sz));
        std::sort(qubits.begin(), qubits.end());
        for (int q : qubits) g.controls.push_back({q, !pol(rng)});
        g.mu.resize(list.block());
        for (double& v : g.mu) v = angle(rng);
        list.gates.push_back(std::move(g));
    }
    return list;
}

} // namespace ucg
