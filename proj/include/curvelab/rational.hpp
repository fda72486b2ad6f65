#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "curvelab/errors.hpp"

namespace curvelab {

// Exact rational with int64 parts. Enough headroom for every divisor-degree
// bound at desk scale (deg(S) < 10^6).
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline bool operator<=(std::int64_t a, const Rat& r) { return Rat(a) <= r; }

}  // namespace curvelab
