#pragma once

#include <cstdint>
#include <string>

namespace ucg {

// Exact angle of the form (num / 2^log2den) * pi. The synthesis algebra only
// ever adds, negates and halves angles, so dyadic rationals are closed under
// everything we do and make bit-exact round-trip tests possible.
struct Dyadic {
    std::int64_t num = 0;
    std::int32_t log2den = 0; // denominator exponent, >= 0

    Dyadic() = default;
    Dyadic(std::int64_t n, std::int32_t d) : num(n), log2den(d) { normalize(); }

    void normalize() {
        if (num == 0) {
            log2den = 0;
            return;
        }
        while ((num & 1) == 0 && log2den > 0) {
            num >>= 1;
            --log2den;
        }
    }

    bool is_zero() const { return num == 0; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        std::int32_t d = a.log2den > b.log2den ? a.log2den : b.log2den;
        std::int64_t an = a.num << (d - a.log2den);
        std::int64_t bn = b.num << (d - b.log2den);
        return Dyadic(an + bn, d);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num, a.log2den); }

    Dyadic halved() const { return Dyadic(num, log2den + 1); }
    Dyadic doubled() const {
        if (log2den > 0) return Dyadic(num, log2den - 1);
        return Dyadic(num * 2, 0);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.log2den == b.log2den;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

    double to_double() const; // value in units of pi radians, i.e. num/2^log2den

    std::string str() const {
        std::string s = std::to_string(num);
        if (log2den > 0) s += "/2^" + std::to_string(log2den);
        return s + " pi";
    }
};

inline double Dyadic::to_double() const {
    double d = static_cast<double>(num);
    for (std::int32_t i = 0; i < log2den; ++i) d *= 0.5;
    return d;
}

} // namespace ucg
