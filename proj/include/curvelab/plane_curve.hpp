#pragma once

// Homogeneous trivariate polynomials over a field spec and projective points:
// evaluation, formal partials, tangent lines, Hessian, projective changes of
// coordinates, and rational-point enumeration over the base field and its
// small extensions.
//
// Enumeration works per affine x-slice: the curve restricts to a univariate
// f_x(Y) whose rational roots come from gcd(f_x, Y^Q - Y). That keeps the cost
// at O(Q * d * log Q) field ops instead of the O(Q^2) full-plane scan.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/field.hpp"
#include "curvelab/parallel.hpp"
#include "curvelab/unipoly.hpp"

namespace curvelab {

struct ProjPoint {
    std::array<FieldElement, 3> x;

    // Normalizes so the first nonzero coordinate (X0, X1, X2 order) is 1.
    static ProjPoint make(FieldElement a, FieldElement b, FieldElement c) {
        SpecPtr s = a.spec();
        s->check_same(b);
        s->check_same(c);
        std::array<FieldElement, 3> v{a, b, c};
        int lead = -1;
        for (int i = 0; i < 3; ++i)
            if (!v[i].is_zero()) {
                lead = i;
                break;
            }
        if (lead < 0) fail(errc::bad_parameters, "projective point cannot be (0,0,0)");
        FieldElement inv = v[lead].inv();
        for (auto& e : v) e = e * inv;
        return ProjPoint{v};
    }

    SpecPtr spec() const { return x[0].spec(); }

    bool operator==(const ProjPoint& o) const { return x == o.x; }
    bool operator<(const ProjPoint& o) const {
        for (int i = 0; i < 3; ++i)
            if (!(x[i] == o.x[i])) return x[i] < o.x[i];
        return false;
    }

    ProjPoint lift_to(SpecPtr big) const {
        const Embedding& e = spec()->embedding_into(big);
        return ProjPoint{{e.map(x[0]), e.map(x[1]), e.map(x[2])}};
    }

    // true iff fixed by the q0-power Frobenius (q0 = size of the subfield).
    bool rational_over(u64 q0) const {
        for (const auto& c : x)
            if (!(c.pow(static_cast<i64>(q0)) == c)) return false;
        return true;
    }

    std::string str() const { return "(" + x[0].str() + " : " + x[1].str() + " : " + x[2].str() + ")"; }
};

using Exps = std::array<u32, 3>;

class HomogPoly {
public:
    HomogPoly(SpecPtr s, u32 degree) : s_(s), d_(degree) {}

    static HomogPoly from_terms(SpecPtr s, u32 degree,
                                const std::vector<std::pair<Exps, FieldElement>>& terms) {
        HomogPoly out(s, degree);
        for (const auto& [e, c] : terms) out.add_term(e, c);
        return out;
    }

    SpecPtr spec() const { return s_; }
    u32 degree() const { return d_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Exps, FieldElement>& terms() const { return t_; }

    void add_term(Exps e, FieldElement c) {
        s_->check_same(c);
        if (e[0] + e[1] + e[2] != d_)
            fail(errc::not_homogeneous, "term degree does not match the form degree");
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    FieldElement coeff(Exps e) const {
        auto it = t_.find(e);
        return it == t_.end() ? s_->zero() : it->second;
    }

    bool operator==(const HomogPoly& o) const { return s_ == o.s_ && d_ == o.d_ && t_ == o.t_; }

    HomogPoly operator+(const HomogPoly& o) const {
        require_compatible(o);
        HomogPoly out = *this;
        for (const auto& [e, c] : o.t_) out.add_term(e, c);
        return out;
    }

    HomogPoly operator-(const HomogPoly& o) const {
        require_compatible(o);
        HomogPoly out = *this;
        for (const auto& [e, c] : o.t_) out.add_term(e, -c);
        return out;
    }

    HomogPoly mul(const HomogPoly& o) const {
        if (s_ != o.s_) fail(errc::spec_mismatch, "forms over different specs");
        HomogPoly out(s_, d_ + o.d_);
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : o.t_)
                out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        return out;
    }

    HomogPoly scaled(FieldElement k) const {
        HomogPoly out(s_, d_);
        if (k.is_zero()) return out;
        for (const auto& [e, c] : t_) out.t_.emplace(e, c * k);
        return out;
    }

    // Scales so the coefficient of the X0-major leading term is 1.
    HomogPoly normalized() const {
        if (t_.empty()) return *this;
        return scaled(t_.rbegin()->second.inv());
    }

    bool proportional_to(const HomogPoly& o) const {
        if (s_ != o.s_ || d_ != o.d_ || t_.size() != o.t_.size()) return false;
        if (t_.empty()) return true;
        return normalized() == o.normalized();
    }

    FieldElement evaluate(FieldElement a, FieldElement b, FieldElement c) const {
        SpecPtr ps = a.spec();
        std::array<std::vector<FieldElement>, 3> pows;
        std::array<FieldElement, 3> vals{a, b, c};
        for (int i = 0; i < 3; ++i) {
            pows[i].push_back(ps->one());
            for (u32 k = 1; k <= d_; ++k) pows[i].push_back(pows[i].back() * vals[i]);
        }
        const Embedding* emb = ps == s_ ? nullptr : &s_->embedding_into(ps);
        FieldElement acc = ps->zero();
        for (const auto& [e, coef] : t_) {
            FieldElement cc = emb ? emb->map(coef) : coef;
            acc = acc + cc * pows[0][e[0]] * pows[1][e[1]] * pows[2][e[2]];
        }
        return acc;
    }

    FieldElement evaluate(const ProjPoint& P) const { return evaluate(P.x[0], P.x[1], P.x[2]); }

    HomogPoly partial(int axis) const {
        HomogPoly out(s_, d_ > 0 ? d_ - 1 : 0);
        if (d_ == 0) return out;
        for (const auto& [e, c] : t_) {
            if (e[axis] == 0) continue;
            Exps ne = e;
            ne[axis] -= 1;
            out.add_term(ne, s_->from_int(static_cast<i64>(e[axis])) * c);
        }
        return out;
    }

    HomogPoly lift_to(SpecPtr big) const {
        if (big == s_) return *this;
        const Embedding& emb = s_->embedding_into(big);
        HomogPoly out(big, d_);
        for (const auto& [e, c] : t_) out.add_term(e, emb.map(c));
        return out;
    }

    // Composition with the monomial map X_i -> X_i^e (used by covering maps).
    HomogPoly substitute_powers(u32 e) const {
        HomogPoly out(s_, d_ * e);
        for (const auto& [ex, c] : t_) out.add_term({ex[0] * e, ex[1] * e, ex[2] * e}, c);
        return out;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            std::string cs = it->second.str();
            std::string mono;
            for (int i = 0; i < 3; ++i) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "X" + std::to_string(i);
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            if (mono.empty()) {
                out += cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                out += "{" + cs + "}*" + mono;
            }
        }
        return out;
    }

private:
    void require_compatible(const HomogPoly& o) const {
        if (s_ != o.s_) fail(errc::spec_mismatch, "forms over different specs");
        if (d_ != o.d_) fail(errc::bad_parameters, "forms of different degrees");
    }

    SpecPtr s_;
    u32 d_;
    std::map<Exps, FieldElement> t_;
};

// --- 3x3 matrices over a spec --------------------------------------------------

struct Mat3 {
    SpecPtr s;
    std::array<FieldElement, 9> a;

    static Mat3 identity(SpecPtr s) {
        Mat3 m{s, {}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.a[static_cast<std::size_t>(3 * i + j)] = i == j ? s->one() : s->zero();
        return m;
    }

    FieldElement& at(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
    const FieldElement& at(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

    FieldElement det() const {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    Mat3 mul(const Mat3& o) const {
        Mat3 out{s, {}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                FieldElement acc = s->zero();
                for (int k = 0; k < 3; ++k) acc = acc + at(i, k) * o.at(k, j);
                out.at(i, j) = acc;
            }
        return out;
    }

    Mat3 inverse() const {
        FieldElement d = det();
        if (d.is_zero()) fail(errc::bad_parameters, "matrix is singular");
        FieldElement di = d.inv();
        Mat3 out{s, {}};
        auto cof = [&](int i, int j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            return at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1);
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out.at(i, j) = cof(j, i) * di;
        return out;
    }

    ProjPoint apply(const ProjPoint& P) const {
        std::array<FieldElement, 3> y;
        for (int i = 0; i < 3; ++i) {
            FieldElement acc = s->zero();
            for (int j = 0; j < 3; ++j) acc = acc + at(i, j) * P.x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = acc;
        }
        return ProjPoint::make(y[0], y[1], y[2]);
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                out += at(i, j).str();
                if (j < 2) out += ",";
            }
            if (i < 2) out += ";";
        }
        return out;
    }
};

// C(M * X): substitutes the linear forms (M*X)_i for X_i.
inline HomogPoly transform(const HomogPoly& C, const Mat3& M) {
    SpecPtr s = C.spec();
    if (M.s != s) fail(errc::spec_mismatch, "matrix over a different spec");
    std::array<HomogPoly, 3> lin{HomogPoly(s, 1), HomogPoly(s, 1), HomogPoly(s, 1)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Exps e{0, 0, 0};
            e[static_cast<std::size_t>(j)] = 1;
            lin[static_cast<std::size_t>(i)].add_term(e, M.at(i, j));
        }
    // power caches
    std::array<std::vector<HomogPoly>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        pows[i].push_back(HomogPoly::from_terms(s, 0, {{{0, 0, 0}, s->one()}}));
        for (u32 k = 1; k <= C.degree(); ++k) pows[i].push_back(pows[i].back().mul(lin[i]));
    }
    HomogPoly out(s, C.degree());
    for (const auto& [e, c] : C.terms()) {
        HomogPoly term = pows[0][e[0]].mul(pows[1][e[1]]).mul(pows[2][e[2]]).scaled(c);
        out = out + term;
    }
    return out;
}

// --- curve operations -----------------------------------------------------------

// Restriction of C to the slice X0 = x0, X2 = 1 as a univariate in X1.
inline UniPoly restrict_to_slice(const HomogPoly& C, FieldElement x0) {
    SpecPtr s = C.spec();
    std::vector<FieldElement> pow0{s->one()};
    for (u32 k = 1; k <= C.degree(); ++k) pow0.push_back(pow0.back() * x0);
    std::vector<FieldElement> cs(C.degree() + 1, s->zero());
    for (const auto& [e, c] : C.terms()) cs[e[1]] = cs[e[1]] + c * pow0[e[0]];
    return UniPoly(s, std::move(cs));
}

// All points of C over GF(q^k), sorted canonically.
inline std::vector<ProjPoint> rational_points(const HomogPoly& C, u32 k = 1) {
    SpecPtr base = C.spec();
    double bits = static_cast<double>(k) * base->m() * std::log2(static_cast<double>(base->p()));
    if (bits > 24.0 + 1e-9) fail(errc::cap_exceeded, "q^k exceeds the 2^24 enumeration cap");
    SpecPtr big = extension_of(base, k);
    HomogPoly Cb = C.lift_to(big);
    u64 Q = big->q();

    std::vector<std::vector<ProjPoint>> chunks;
    std::size_t n_chunks = 0;
    {
        // worker count decided inside parallel_chunks; collect per-chunk output
        std::vector<std::vector<ProjPoint>> local(thread_budget() + 1);
        parallel_chunks(Q, [&](std::size_t w, std::size_t b, std::size_t e) {
            auto& out = local[w];
            for (u64 v = b; v < e; ++v) {
                FieldElement x0 = big->from_packed(v);
                UniPoly f = restrict_to_slice(Cb, x0);
                if (f.is_zero())
                    fail(errc::bad_parameters, "a full line lies on the curve; input is not irreducible");
                if (f.deg() < 1) continue;
                for (const auto& y : uni_roots(f)) out.push_back(ProjPoint::make(x0, y, big->one()));
            }
        });
        chunks = std::move(local);
        n_chunks = chunks.size();
    }

    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < n_chunks; ++i)
        pts.insert(pts.end(), chunks[i].begin(), chunks[i].end());

    // the line X2 = 0: points (1, y, 0), plus (0,1,0) if that monomial is absent
    {
        std::vector<FieldElement> cs(Cb.degree() + 1, big->zero());
        for (const auto& [e, c] : Cb.terms())
            if (e[2] == 0) cs[e[1]] = cs[e[1]] + c;
        UniPoly finf(big, std::move(cs));
        if (finf.is_zero())
            fail(errc::bad_parameters, "the line at infinity lies on the curve; input is not irreducible");
        for (const auto& y : uni_roots(finf)) pts.push_back(ProjPoint::make(big->one(), y, big->zero()));
        if (Cb.coeff({0, Cb.degree(), 0}).is_zero())
            pts.push_back(ProjPoint::make(big->zero(), big->one(), big->zero()));
    }

    std::sort(pts.begin(), pts.end());
    return pts;
}

struct SingularityScan {
    bool nonsingular = true;
    u32 searched_k = 0;
    std::optional<ProjPoint> witness;
};

// Bounded search for singular points of C over GF(q^k), k = 1..k_max, clamped
// by the enumeration cap. Not a proof; catalog curves carry analytic notes.
inline SingularityScan is_nonsingular(const HomogPoly& C, u32 k_max = 4) {
    SpecPtr base = C.spec();
    SingularityScan out;
    std::array<HomogPoly, 3> parts{C.partial(0), C.partial(1), C.partial(2)};
    for (u32 k = 1; k <= k_max; ++k) {
        double bits = static_cast<double>(k) * base->m() * std::log2(static_cast<double>(base->p()));
        if (bits > 24.0 + 1e-9) break;
        for (const auto& P : rational_points(C, k)) {
            bool sing = true;
            for (const auto& dp : parts)
                if (!dp.evaluate(P).is_zero()) {
                    sing = false;
                    break;
                }
            if (sing) {
                out.nonsingular = false;
                out.searched_k = k;
                out.witness = P;
                return out;
            }
        }
        out.searched_k = k;
    }
    return out;
}

// The degree-1 form grad(C)(P) . X, normalized to leading coefficient 1.
inline HomogPoly tangent_line(const HomogPoly& C, const ProjPoint& P) {
    SpecPtr ps = P.spec();
    if (!C.evaluate(P).is_zero()) fail(errc::not_on_curve, "tangent requested off the curve");
    std::array<FieldElement, 3> g{C.partial(0).evaluate(P), C.partial(1).evaluate(P),
                                  C.partial(2).evaluate(P)};
    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
        fail(errc::singular_point, "gradient vanishes at the point");
    HomogPoly line(ps, 1);
    for (int i = 0; i < 3; ++i) {
        Exps e{0, 0, 0};
        e[static_cast<std::size_t>(i)] = 1;
        line.add_term(e, g[static_cast<std::size_t>(i)]);
    }
    return line.normalized();
}

// Determinant of the matrix of second classical partials; degree 3(d-2).
// Meaningful as an inflexion detector only when the curve is classical for
// the line series (degree != 1 mod p).
inline HomogPoly hessian(const HomogPoly& C) {
    std::array<std::array<HomogPoly, 3>, 3> H{{{C.partial(0).partial(0), C.partial(0).partial(1),
                                                C.partial(0).partial(2)},
                                               {C.partial(1).partial(0), C.partial(1).partial(1),
                                                C.partial(1).partial(2)},
                                               {C.partial(2).partial(0), C.partial(2).partial(1),
                                                C.partial(2).partial(2)}}};
    auto mm = [&](const HomogPoly& x, const HomogPoly& y) { return x.mul(y); };
    HomogPoly det = mm(H[0][0], mm(H[1][1], H[2][2]) - mm(H[1][2], H[2][1])) -
                    mm(H[0][1], mm(H[1][0], H[2][2]) - mm(H[1][2], H[2][0])) +
                    mm(H[0][2], mm(H[1][0], H[2][1]) - mm(H[1][1], H[2][0]));
    return det;
}

}  // namespace curvelab
