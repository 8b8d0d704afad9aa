#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ucgsynth/common.hpp"
#include "ucgsynth/dyadic.hpp"

namespace ucg {

// The decomposition works in a "frequency" picture: a control-indexed angle
// vector chi is turned into Walsh coefficients X via the (unnormalized)
// Walsh-Hadamard transform, and those into the rotation angles Y that the
// Gray-path circuits actually apply. The arithmetic only needs addition,
// negation and halving, so the routines are generic over the angle type;
// production code instantiates double, the exactness tests instantiate Dyadic.

template <class T>
struct angle_ops {
    static T zero() { return T{}; }
    static T add(const T& a, const T& b) { return a + b; }
    static T neg(const T& a) { return -a; }
    static T halve(const T& a) { return a.halved(); }
    static T twice(const T& a) { return a.doubled(); }
    static bool is_zero(const T& a, double) { return a.is_zero(); }
};

template <>
struct angle_ops<double> {
    static double zero() { return 0.0; }
    static double add(double a, double b) { return a + b; }
    static double neg(double a) { return -a; }
    static double halve(double a) { return a * 0.5; }
    static double twice(double a) { return a * 2.0; }
    static bool is_zero(double a, double tol) { return a >= -tol && a <= tol; }
};

inline void check_pow2_size(std::size_t sz) {
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw InputError("angle vector length must be a power of two, got " +
                         std::to_string(sz));
}

// X[w] = sum_i (-1)^{popcount(w & i)} x[i], in-place butterfly, O(N log N).
template <class T>
std::vector<T> wht_forward(std::vector<T> x) {
    check_pow2_size(x.size());
    using ops = angle_ops<T>;
    const std::size_t n = x.size();
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                T a = x[j];
                T b = x[j + len];
                x[j] = ops::add(a, b);
                x[j + len] = ops::add(a, ops::neg(b));
            }
        }
    }
    return x;
}

// Reference O(N^2) evaluation of the same sum, kept as an independent oracle
// for the butterfly.
template <class T>
std::vector<T> naive_wht(const std::vector<T>& x) {
    check_pow2_size(x.size());
    using ops = angle_ops<T>;
    const std::size_t n = x.size();
    std::vector<T> out(n, ops::zero());
    for (std::size_t w = 0; w < n; ++w) {
        T acc = ops::zero();
        for (std::size_t i = 0; i < n; ++i) {
            if (std::popcount(w & i) & 1)
                acc = ops::add(acc, ops::neg(x[i]));
            else
                acc = ops::add(acc, x[i]);
        }
        out[w] = acc;
    }
    return out;
}

// chi[i] = (1/N) sum_w (-1)^{popcount(w & i)} X[w]: same butterfly followed by
// log2(N) halvings, so it stays exact for dyadic angles.
template <class T>
std::vector<T> wht_inverse(std::vector<T> X) {
    using ops = angle_ops<T>;
    X = wht_forward(std::move(X));
    std::size_t n = X.size();
    for (std::size_t len = 1; len < n; len <<= 1)
        for (auto& v : X) v = ops::halve(v);
    return X;
}

// Rotation angles used by the synthesized circuits:
//   Y[0] = (1/N) sum_w X[w]          (the uncontrolled part)
//   Y[w] = -(2/N) X[w]   for w != 0  (one angle per Walsh frequency)
// Only division by two is ever needed, which the angle group supports.
template <class T>
std::vector<T> freq_from_spectrum(const std::vector<T>& X) {
    check_pow2_size(X.size());
    using ops = angle_ops<T>;
    const std::size_t n = X.size();
    std::vector<T> Y(n, ops::zero());
    T mean = ops::zero();
    for (const T& v : X) mean = ops::add(mean, v);
    for (std::size_t len = 1; len < n; len <<= 1) mean = ops::halve(mean);
    Y[0] = mean;
    for (std::size_t w = 1; w < n; ++w) {
        T v = X[w];
        for (std::size_t len = 2; len < n; len <<= 1) v = ops::halve(v);
        Y[w] = ops::neg(v);
    }
    return Y;
}

template <class T>
std::vector<T> freq_from_angles(const std::vector<T>& chi) {
    return freq_from_spectrum(wht_forward(chi));
}

// Inverse of freq_from_spectrum, used by round-trip tests:
//   X[w] = -(N/2) Y[w] for w != 0, and X[0] = N*Y[0] - sum_{w!=0} X[w].
template <class T>
std::vector<T> spectrum_from_freq(const std::vector<T>& Y) {
    check_pow2_size(Y.size());
    using ops = angle_ops<T>;
    const std::size_t n = Y.size();
    std::vector<T> X(n, ops::zero());
    T rest = ops::zero();
    for (std::size_t w = 1; w < n; ++w) {
        T v = Y[w];
        for (std::size_t len = 2; len < n; len <<= 1) v = ops::twice(v);
        X[w] = ops::neg(v);
        rest = ops::add(rest, X[w]);
    }
    T total = Y[0];
    for (std::size_t len = 1; len < n; len <<= 1) total = ops::twice(total);
    X[0] = ops::add(total, ops::neg(rest));
    return X;
}

// chi[c] = Y[0] + sum over w != 0 with odd popcount(c & w) of Y[w]. This is
// the per-entry inverse the circuits realize implicitly: the activation qubit
// of each traversal step holds exactly the parity popcount(c & w) mod 2.
template <class T>
T reconstruct_entry(const std::vector<T>& Y, std::uint32_t c) {
    check_pow2_size(Y.size());
    using ops = angle_ops<T>;
    T acc = Y[0];
    for (std::uint32_t w = 1; w < Y.size(); ++w)
        if (std::popcount(c & w) & 1) acc = ops::add(acc, Y[w]);
    return acc;
}

} // namespace ucg
