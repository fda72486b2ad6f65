#pragma once

// Dense univariate polynomials over a FieldSpec. This is the kernel behind
// rational-point enumeration: for each x the curve restricts to a univariate
// f(Y), whose rational roots are gcd(f, Y^Q - Y) followed by an equal-degree
// split of the (small, squarefree, fully split) gcd.

#include <optional>
#include <string>
#include <vector>

#include "curvelab/field.hpp"

namespace curvelab {

class UniPoly {
public:
    explicit UniPoly(SpecPtr s) : s_(s) {}
    UniPoly(SpecPtr s, std::vector<FieldElement> coeffs) : s_(s), c_(std::move(coeffs)) { trim(); }

    static UniPoly zero(SpecPtr s) { return UniPoly(s); }
    static UniPoly constant(FieldElement a) { return UniPoly(a.spec(), {a}); }
    static UniPoly x(SpecPtr s) { return UniPoly(s, {s->zero(), s->one()}); }
    // Y + shift
    static UniPoly x_plus(FieldElement shift) {
        return UniPoly(shift.spec(), {shift, shift.spec()->one()});
    }

    SpecPtr spec() const { return s_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : s_->zero(); }
    FieldElement lead() const { return c_.empty() ? s_->zero() : c_.back(); }

    void set_coeff(std::size_t i, FieldElement v) {
        s_->check_same(v);
        if (i >= c_.size()) {
            if (v.is_zero()) return;
            c_.resize(i + 1, s_->zero());
        }
        c_[i] = v;
        trim();
    }

    bool operator==(const UniPoly& o) const { return s_ == o.s_ && c_ == o.c_; }

    UniPoly operator+(const UniPoly& o) const {
        check(o);
        std::vector<FieldElement> out(std::max(c_.size(), o.c_.size()), s_->zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
        return UniPoly(s_, std::move(out));
    }

    UniPoly operator-(const UniPoly& o) const {
        check(o);
        std::vector<FieldElement> out(std::max(c_.size(), o.c_.size()), s_->zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
        return UniPoly(s_, std::move(out));
    }

    UniPoly operator*(const UniPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return UniPoly(s_);
        std::vector<FieldElement> out(c_.size() + o.c_.size() - 1, s_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] = out[i + j] + c_[i] * o.c_[j];
        }
        return UniPoly(s_, std::move(out));
    }

    UniPoly scaled(FieldElement k) const {
        std::vector<FieldElement> out = c_;
        for (auto& e : out) e = e * k;
        return UniPoly(s_, std::move(out));
    }

    UniPoly monic() const {
        if (is_zero() || lead() == s_->one()) return *this;
        return scaled(lead().inv());
    }

    FieldElement eval(FieldElement x) const {
        s_->check_same(x);
        FieldElement acc = s_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::string str(const std::string& var = "Y") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = c_[i].str();
            if (i == 0) {
                out += cs;
            } else {
                if (cs != "1") out += "{" + cs + "}*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check(const UniPoly& o) const {
        if (s_ != o.s_) fail(errc::spec_mismatch, "univariate polynomials over different specs");
    }

    SpecPtr s_;
    std::vector<FieldElement> c_;
};

inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial remainder by zero");
    SpecPtr s = a.spec();
    FieldElement li = b.lead().inv();
    while (!a.is_zero() && a.deg() >= b.deg()) {
        FieldElement f = a.lead() * li;
        int shift = a.deg() - b.deg();
        std::vector<FieldElement> cs(static_cast<std::size_t>(shift) + b.deg() + 1, s->zero());
        for (int j = 0; j <= b.deg(); ++j) cs[static_cast<std::size_t>(shift + j)] = b.coeff(j) * f;
        a = a - UniPoly(s, std::move(cs));
    }
    return a;
}

inline std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    SpecPtr s = a.spec();
    UniPoly r = a, q(s);
    FieldElement li = b.lead().inv();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        FieldElement f = r.lead() * li;
        int shift = r.deg() - b.deg();
        q.set_coeff(static_cast<std::size_t>(shift), f);
        std::vector<FieldElement> cs(static_cast<std::size_t>(shift) + b.deg() + 1, s->zero());
        for (int j = 0; j <= b.deg(); ++j) cs[static_cast<std::size_t>(shift + j)] = b.coeff(j) * f;
        r = r - UniPoly(s, std::move(cs));
    }
    return {q, r};
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = uni_rem(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

inline UniPoly uni_powmod(UniPoly base, u64 e, const UniPoly& mod) {
    SpecPtr s = base.spec();
    UniPoly r = UniPoly::constant(s->one());
    base = uni_rem(base, mod);
    while (e) {
        if (e & 1) r = uni_rem(r * base, mod);
        base = uni_rem(base * base, mod);
        e >>= 1;
    }
    return r;
}

namespace detail {

// Splits a monic squarefree product of distinct linear factors into roots.
// Shifts are walked in canonical element order, so results are deterministic.
inline void split_roots_rec(const UniPoly& g, std::vector<FieldElement>& out) {
    SpecPtr s = g.spec();
    int d = g.deg();
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(-(g.coeff(0) * g.coeff(1).inv()));
        return;
    }
    if (d == 2) {
        // monicize and use the quadratic formula; p is odd
        UniPoly f = g.monic();
        FieldElement b = f.coeff(1), c = f.coeff(0);
        FieldElement disc = b * b - 4 * c;
        auto sq = s->nth_roots(disc, 2);
        if (sq.empty()) fail(errc::internal, "split factor without rational roots");
        FieldElement half = s->from_int(2).inv();
        out.push_back((-b + sq[0]) * half);
        out.push_back((-b - sq[0]) * half);
        return;
    }
    u64 half = (s->q() - 1) / 2;
    for (u64 shift_idx = 0; shift_idx < s->q(); ++shift_idx) {
        FieldElement c = s->from_packed(shift_idx);
        UniPoly f = g;
        if (f.eval(-c).is_zero()) {
            out.push_back(-c);
            f = uni_divmod(f, UniPoly::x_plus(c)).first;
            split_roots_rec(f, out);
            return;
        }
        UniPoly h = uni_powmod(UniPoly::x_plus(c), half, f);
        h = h - UniPoly::constant(s->one());
        UniPoly d1 = uni_gcd(f, h);
        if (d1.deg() > 0 && d1.deg() < f.deg()) {
            split_roots_rec(d1, out);
            split_roots_rec(uni_divmod(f, d1).first, out);
            return;
        }
    }
    fail(errc::internal, "equal-degree split did not terminate");
}

}  // namespace detail

// All roots of f in its own coefficient field, sorted canonically.
inline std::vector<FieldElement> uni_roots(const UniPoly& f) {
    SpecPtr s = f.spec();
    if (f.is_zero()) fail(errc::bad_parameters, "root extraction from the zero polynomial");
    if (f.deg() == 0) return {};
    // restrict to rational roots, squarefree: gcd(f, Y^Q - Y)
    UniPoly yq = uni_powmod(UniPoly::x(s), s->q(), f);
    UniPoly g = uni_gcd(f, yq - UniPoly::x(s));
    std::vector<FieldElement> out;
    if (g.deg() >= 1 && g.coeff(0).is_zero()) {
        out.push_back(s->zero());
        g = uni_divmod(g, UniPoly::x(s)).first;
    }
    detail::split_roots_rec(g.monic(), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace curvelab
