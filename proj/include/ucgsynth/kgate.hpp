#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "ucgsynth/target_vector.hpp"
#include "ucgsynth/transform.hpp"

namespace ucg {

// componentwise angle group on diag blocks (only the ops the polarity
// expansion needs)
template <>
struct angle_ops<std::vector<double>> {
    using V = std::vector<double>;
    static V add(V a, const V& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    }
    static V neg(V a) {
        for (double& x : a) x = -x;
        return a;
    }
    static bool is_zero(const V& a, double tol) {
        for (double x : a)
            if (x > tol || x < -tol) return false;
        return true;
    }
};

struct ControlPin {
    int q = 0;
    bool positive = true;
};

// One multi-controlled gate: applies the group element mu to the target
// register when every listed control matches its polarity.
struct ControlledGateSpec {
    std::vector<ControlPin> controls;
    std::vector<double> mu; // 1 double, or 2^m for diag
};

struct KGateList {
    int n = 0;
    Realization realization = Realization::phase;
    int m = 0;
    std::vector<ControlledGateSpec> gates;

    int k() const {
        std::size_t k = 0;
        for (const ControlledGateSpec& g : gates)
            if (g.controls.size() > k) k = g.controls.size();
        return int(k);
    }
    std::size_t block() const {
        return realization == Realization::diag ? (std::size_t(1) << m) : 1;
    }
    void validate() const;
};

// Polarity elimination: a negative control splits a gate into an
// unconditional copy with +mu and a positive-control copy with -mu; expanding
// all negatives at once gives one term per subset S of the negated qubits
// with sign (-1)^|S|. Terms with equal control sets are then merged and terms
// whose coefficient cancels to zero are dropped. Generic over the angle type
// so the exactness tests can run it on dyadic rationals.
//
// Input tuples: (positive-control mask, negative-control mask, mu).
template <class T>
std::vector<std::pair<std::uint32_t, T>>
standardize_masks(const std::vector<std::tuple<std::uint32_t, std::uint32_t, T>>& gates) {
    using ops = angle_ops<T>;
    std::map<std::uint32_t, T> acc;
    for (const auto& [pos, neg, mu] : gates) {
        // iterate subsets s of neg
        std::uint32_t s = 0;
        while (true) {
            T term = (std::popcount(s) & 1) ? ops::neg(mu) : mu;
            auto it = acc.find(pos | s);
            if (it == acc.end())
                acc.emplace(pos | s, term);
            else
                it->second = ops::add(it->second, term);
            if (s == neg) break;
            s = (s - neg) & neg; // next subset
        }
    }
    std::vector<std::pair<std::uint32_t, T>> out;
    out.reserve(acc.size());
    for (auto& [mask, mu] : acc)
        if (!ops::is_zero(mu, 0.0)) out.emplace_back(mask, mu);
    return out;
}

// chi_c = sum of mu over gates whose polarity pattern matches c, evaluated
// directly from the definition. Oracle for standardize_masks.
template <class T>
std::vector<T> gate_terms_chi(int n,
                              const std::vector<std::tuple<std::uint32_t, std::uint32_t, T>>& gates,
                              T zero) {
    const std::uint32_t N = std::uint32_t(1) << n;
    std::vector<T> chi(N, zero);
    using ops = angle_ops<T>;
    for (std::uint32_t c = 0; c < N; ++c)
        for (const auto& [pos, neg, mu] : gates)
            if ((c & pos) == pos && (c & neg) == 0) chi[c] = ops::add(chi[c], mu);
    return chi;
}

// chi from positive-only merged terms: mu lands on every superset of its mask.
template <class T>
std::vector<T> masks_to_chi(int n, const std::vector<std::pair<std::uint32_t, T>>& terms,
                            T zero) {
    const std::uint32_t N = std::uint32_t(1) << n;
    std::vector<T> chi(N, zero);
    using ops = angle_ops<T>;
    for (const auto& [mask, mu] : terms) {
        std::uint32_t c = mask;
        while (true) {
            chi[c] = ops::add(chi[c], mu);
            if (c == N - 1) break;
            c = (c + 1) | mask;
        }
    }
    return chi;
}

// Positive-polarity-only equivalent list, duplicate control sets merged.
KGateList standardize(const KGateList& list);

// Embedding into the control-indexed angle vector. The list must already be
// standardized (no negative polarities).
TargetVector to_target_vector(const KGateList& list);

struct SpectralSupport {
    std::vector<std::uint32_t> support; // omegas with a nonzero angle block
    int max_weight = 0;
};

SpectralSupport spectral_support(const FreqVector& f, double tol = 1e-9);

KGateList random_kgate_list(int n, int k, int count, Realization r, int m,
                            std::uint64_t seed);

} // namespace ucg
