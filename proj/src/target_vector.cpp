#include "ucgsynth/target_vector.hpp"

#include <bit>
#include <random>

#include "ucgsynth/transform.hpp"

namespace ucg {

const char* realization_name(Realization r) {
    switch (r) {
    case Realization::phase: return "phase";
    case Realization::rz: return "rz";
    case Realization::rx: return "rx";
    case Realization::ry: return "ry";
    case Realization::diag: return "diag";
    }
    return "?";
}

Realization realization_from_name(const std::string& s) {
    if (s == "phase") return Realization::phase;
    if (s == "rz") return Realization::rz;
    if (s == "rx") return Realization::rx;
    if (s == "ry") return Realization::ry;
    if (s == "diag") return Realization::diag;
    throw InputError("unknown realization '" + s + "'");
}

void TargetVector::validate() const {
    if (n < 0 || n > 20) throw InputError("control count out of range");
    int want_m = realization_targets(realization, m);
    if (realization == Realization::diag) {
        if (m < 1 || m > 20) throw InputError("diag target count out of range");
    } else if (m != want_m) {
        throw InputError(std::string("realization ") + realization_name(realization) +
                         " expects " + std::to_string(want_m) + " target qubits");
    }
    if (chi.size() != entries() * block())
        throw InputError("angle data has " + std::to_string(chi.size()) +
                         " doubles, expected " + std::to_string(entries() * block()));
}

FreqVector frequency_vector(const TargetVector& tv) {
    tv.validate();
    const std::size_t N = tv.entries();
    const std::size_t B = tv.block();
    FreqVector f;
    f.n = tv.n;
    f.block = B;
    f.y = tv.chi;

    // Y[0] = (1/N) sum_w X[w], which collapses to chi[0]; grab it before the
    // butterfly overwrites the array
    std::vector<double> y0(tv.chi.begin(), tv.chi.begin() + B);

    // blockwise butterfly: X[w] = sum_i (-1)^{popcount(w&i)} chi[i]
    for (std::size_t len = 1; len < N; len <<= 1) {
        for (std::size_t i = 0; i < N; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                double* a = f.y.data() + j * B;
                double* b = f.y.data() + (j + len) * B;
                for (std::size_t t = 0; t < B; ++t) {
                    double x = a[t], y = b[t];
                    a[t] = x + y;
                    b[t] = x - y;
                }
            }
        }
    }
    // Y[w!=0] = -2 X[w]/N
    const double invN = 1.0 / double(N);
    for (std::size_t t = 0; t < B; ++t) f.y[t] = y0[t];
    for (std::size_t w = 1; w < N; ++w) {
        double* b = f.y.data() + w * B;
        for (std::size_t t = 0; t < B; ++t) b[t] *= -2.0 * invN;
    }
    return f;
}

int max_support_weight(const FreqVector& f, double tol) {
    int k = 0;
    const std::uint32_t N = std::uint32_t(1) << f.n;
    for (std::uint32_t w = 1; w < N; ++w) {
        int wt = std::popcount(w);
        if (wt > k && !f.block_zero(w, tol)) k = wt;
    }
    return k;
}

TargetVector random_target_vector(int n, Realization r, int m, std::uint64_t seed) {
    TargetVector tv;
    tv.n = n;
    tv.realization = r;
    tv.m = realization_targets(r, m);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    tv.chi.resize(tv.entries() * tv.block());
    for (double& v : tv.chi) v = dist(rng);
    return tv;
}

TargetVector random_sparse_diag(int n, int k, std::uint64_t seed) {
    if (k < 0 || k > n) throw InputError("weight cap k must satisfy 0 <= k <= n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    const std::uint32_t N = std::uint32_t(1) << n;
    std::vector<double> Y(N, 0.0);
    Y[0] = dist(rng);
    for (std::uint32_t w = 1; w < N; ++w)
        if (std::popcount(w) <= k) Y[w] = dist(rng);
    TargetVector tv;
    tv.n = n;
    tv.realization = Realization::phase;
    tv.chi = wht_inverse(spectrum_from_freq(Y));
    return tv;
}

} // namespace ucg
