#pragma once

// Truncated power series over a field spec. Derivatives are Hasse divided
// powers D^j t^k = C(k,j) t^(k-j) with the binomial taken mod p via Lucas;
// classical derivatives are never used (they collapse in characteristic p).

#include <optional>
#include <vector>

#include "curvelab/field.hpp"

namespace curvelab {

class PowerSeries {
public:
    PowerSeries(SpecPtr s, u32 precision) : s_(s), c_(precision, s->zero()) {}

    static PowerSeries constant(FieldElement a, u32 precision) {
        PowerSeries out(a.spec(), precision);
        out.c_[0] = a;
        return out;
    }

    SpecPtr spec() const { return s_; }
    u32 precision() const { return static_cast<u32>(c_.size()); }

    FieldElement coeff(u32 i) const { return i < c_.size() ? c_[i] : s_->zero(); }

    void set(u32 i, FieldElement v) {
        s_->check_same(v);
        if (i < c_.size()) c_[i] = v;
    }

    // order of vanishing; nullopt if zero to the full precision
    std::optional<u32> order() const {
        for (u32 i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }

    bool is_zero_to_precision() const { return !order().has_value(); }

    PowerSeries operator+(const PowerSeries& o) const {
        PowerSeries out(s_, std::min(precision(), o.precision()));
        for (u32 i = 0; i < out.precision(); ++i) out.c_[i] = c_[i] + o.c_[i];
        return out;
    }

    PowerSeries operator-(const PowerSeries& o) const {
        PowerSeries out(s_, std::min(precision(), o.precision()));
        for (u32 i = 0; i < out.precision(); ++i) out.c_[i] = c_[i] - o.c_[i];
        return out;
    }

    PowerSeries operator*(const PowerSeries& o) const {
        PowerSeries out(s_, std::min(precision(), o.precision()));
        for (u32 i = 0; i < out.precision(); ++i) {
            if (c_[i].is_zero()) continue;
            for (u32 j = 0; i + j < out.precision(); ++j) {
                if (o.c_[j].is_zero()) continue;
                out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
            }
        }
        return out;
    }

    PowerSeries scaled(FieldElement k) const {
        PowerSeries out(s_, precision());
        for (u32 i = 0; i < precision(); ++i) out.c_[i] = c_[i] * k;
        return out;
    }

    // Hasse derivative D^j; precision drops by j.
    PowerSeries hasse_deriv(u32 j) const {
        if (j == 0) return *this;
        if (j >= precision()) return PowerSeries(s_, 0);
        PowerSeries out(s_, precision() - j);
        u32 p = s_->p();
        for (u32 i = 0; i + j < precision(); ++i) {
            u32 b = binom_mod_p(i + j, j, p);
            out.c_[i] = b ? s_->from_int(b) * c_[i + j] : s_->zero();
        }
        return out;
    }

private:
    SpecPtr s_;
    std::vector<FieldElement> c_;
};

}  // namespace curvelab
