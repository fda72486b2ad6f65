#pragma once

// Local geometry at a nonsingular point: branch expansions, intersection
// multiplicities, order sequences for the line and conic series, osculating
// conics, point classification, and the order of the line-series Wronskian.
//
// A branch is a truncated parametrization t -> (u(t), v(t)) in an affine chart
// through the point, with one coordinate serving as the local parameter. The
// dependent coordinate is produced by undetermined coefficients against the
// curve equation (the relevant partial is a unit at the center, so each new
// coefficient is determined linearly).

#include <array>
#include <optional>
#include <vector>

#include "curvelab/plane_curve.hpp"
#include "curvelab/series.hpp"

namespace curvelab {

struct Branch {
    ProjPoint center;
    int chart;                       // coordinate index set to 1
    std::array<int, 2> affine_axes;  // the two coordinate indices != chart, increasing
    int param;                       // 0 or 1: which affine series is center + t
    std::array<PowerSeries, 2> series;
    u32 precision;
};

namespace detail {

struct BivarTerm {
    u32 eu, ev;
    FieldElement c;
};

// C restricted to a chart, as terms in the two affine coordinate axes.
inline std::vector<BivarTerm> chart_terms(const HomogPoly& C, int au, int av) {
    std::vector<BivarTerm> out;
    out.reserve(C.terms().size());
    for (const auto& [e, c] : C.terms())
        out.push_back({e[static_cast<std::size_t>(au)], e[static_cast<std::size_t>(av)], c});
    return out;
}

inline FieldElement bivar_eval(const std::vector<BivarTerm>& f, FieldElement u, FieldElement v,
                               u32 du, u32 dv) {
    SpecPtr s = u.spec();
    std::vector<FieldElement> pu{s->one()}, pv{s->one()};
    for (u32 k = 1; k <= du; ++k) pu.push_back(pu.back() * u);
    for (u32 k = 1; k <= dv; ++k) pv.push_back(pv.back() * v);
    FieldElement acc = s->zero();
    for (const auto& t : f) acc = acc + t.c * pu[t.eu] * pv[t.ev];
    return acc;
}

// partial of the chart polynomial with respect to u (axis 0) or v (axis 1)
inline std::vector<BivarTerm> bivar_partial(const std::vector<BivarTerm>& f, int axis, SpecPtr s) {
    std::vector<BivarTerm> out;
    for (const auto& t : f) {
        u32 e = axis == 0 ? t.eu : t.ev;
        if (!e) continue;
        FieldElement c = s->from_int(static_cast<i64>(e)) * t.c;
        if (c.is_zero()) continue;
        out.push_back({axis == 0 ? t.eu - 1 : t.eu, axis == 0 ? t.ev : t.ev - 1, c});
    }
    return out;
}

inline PowerSeries bivar_compose(const std::vector<BivarTerm>& f, const PowerSeries& u,
                                 const PowerSeries& v, u32 prec) {
    SpecPtr s = u.spec();
    u32 du = 0, dv = 0;
    for (const auto& t : f) {
        du = std::max(du, t.eu);
        dv = std::max(dv, t.ev);
    }
    std::vector<PowerSeries> pu, pv;
    pu.reserve(du + 1);
    pv.reserve(dv + 1);
    pu.push_back(PowerSeries::constant(s->one(), prec));
    for (u32 k = 1; k <= du; ++k) pu.push_back(pu.back() * u);
    pv.push_back(PowerSeries::constant(s->one(), prec));
    for (u32 k = 1; k <= dv; ++k) pv.push_back(pv.back() * v);
    PowerSeries acc(s, prec);
    for (const auto& t : f) acc = acc + (pu[t.eu] * pv[t.ev]).scaled(t.c);
    return acc;
}

}  // namespace detail

inline u32 default_precision(u32 rootq) { return 2 * rootq + 4; }

// Branch of C at a nonsingular point P, to the requested precision. The chart
// and parameter are chosen deterministically: chart X2=1 when possible (else
// X1, else X0), and the first affine coordinate as parameter when the tangent
// is transverse to it (else the second).
inline Branch branch_at(const HomogPoly& C, const ProjPoint& P, u32 precision) {
    if (precision < 2) fail(errc::precision_too_small, "branch precision must be at least 2");
    SpecPtr ps = P.spec();
    HomogPoly Cp = C.spec() == ps ? C : C.lift_to(ps);
    if (!Cp.evaluate(P).is_zero()) fail(errc::not_on_curve, "branch requested off the curve");

    int chart = !P.x[2].is_zero() ? 2 : (!P.x[1].is_zero() ? 1 : 0);
    int au = chart == 0 ? 1 : 0;
    int av = chart == 2 ? 1 : 2;
    auto f = detail::chart_terms(Cp, au, av);

    FieldElement scale = P.x[static_cast<std::size_t>(chart)].inv();
    FieldElement a = P.x[static_cast<std::size_t>(au)] * scale;
    FieldElement b = P.x[static_cast<std::size_t>(av)] * scale;

    auto fu = detail::bivar_partial(f, 0, ps);
    auto fv = detail::bivar_partial(f, 1, ps);
    FieldElement fua = detail::bivar_eval(fu, a, b, Cp.degree(), Cp.degree());
    FieldElement fva = detail::bivar_eval(fv, a, b, Cp.degree(), Cp.degree());
    if (fua.is_zero() && fva.is_zero()) fail(errc::singular_point, "branch at a singular point");

    int param = fva.is_zero() ? 1 : 0;
    FieldElement unit = param == 0 ? fva : fua;  // partial w.r.t. the dependent coordinate
    FieldElement unit_inv = unit.inv();

    PowerSeries sp(ps, precision), sd(ps, precision);
    sp.set(0, param == 0 ? a : b);
    sp.set(1, ps->one());
    sd.set(0, param == 0 ? b : a);

    for (u32 step = 1; step < precision; ++step) {
        PowerSeries F = param == 0 ? detail::bivar_compose(f, sp, sd, step + 1)
                                   : detail::bivar_compose(f, sd, sp, step + 1);
        FieldElement fj = F.coeff(step);
        if (!fj.is_zero()) sd.set(step, -(fj * unit_inv));
    }

    std::array<PowerSeries, 2> series = param == 0
                                            ? std::array<PowerSeries, 2>{sp, sd}
                                            : std::array<PowerSeries, 2>{sd, sp};
    PowerSeries check = detail::bivar_compose(f, series[0], series[1], precision);
    if (!check.is_zero_to_precision())
        fail(errc::internal, "branch parametrization does not kill the curve equation");

    return Branch{P, chart, {au, av}, param, series, precision};
}

struct Mult {
    bool exact;
    u32 value;  // multiplicity, or the precision when !exact ("at least")
};

// D composed with the branch, as a series in the local parameter.
inline PowerSeries compose_on_branch(const HomogPoly& D, const Branch& B) {
    SpecPtr ps = B.center.spec();
    HomogPoly Dp = D.spec() == ps ? D : D.lift_to(ps);
    auto f = detail::chart_terms(Dp, B.affine_axes[0], B.affine_axes[1]);
    return detail::bivar_compose(f, B.series[0], B.series[1], B.precision);
}

// Intersection multiplicity of D with the curve along B.
inline Mult imult(const HomogPoly& D, const Branch& B) {
    auto o = compose_on_branch(D, B).order();
    if (!o) return {false, B.precision};
    return {true, *o};
}

inline std::array<u32, 3> sigma1_orders(const HomogPoly& C, const ProjPoint& P, u32 precision) {
    Branch B = branch_at(C, P, precision);
    Mult j2 = imult(tangent_line(C.spec() == P.spec() ? C : C.lift_to(P.spec()), P), B);
    if (!j2.exact) fail(errc::precision_exhausted, "tangent contact order not resolved at this precision");
    return {0, 1, j2.value};
}

namespace detail {

struct Sigma2Row {
    PowerSeries series;
    std::array<FieldElement, 6> combo;
};

struct Sigma2Result {
    std::array<u32, 6> orders;
    std::array<std::array<FieldElement, 6>, 6> combos;  // combos[i] achieves orders[i]
};

// Orders of vanishing of conic combinations along the branch: reduce the six
// monomial series 1, u, v, u^2, uv, v^2 to an order basis. Pivot orders are
// exactly the conic-series orders at the center.
inline Sigma2Result sigma2_reduce(const Branch& B) {
    SpecPtr ps = B.center.spec();
    u32 prec = B.precision;
    const PowerSeries& u = B.series[0];
    const PowerSeries& v = B.series[1];
    PowerSeries one = PowerSeries::constant(ps->one(), prec);
    std::vector<Sigma2Row> rows;
    auto unit = [&](int i) {
        std::array<FieldElement, 6> c{ps->zero(), ps->zero(), ps->zero(),
                                      ps->zero(), ps->zero(), ps->zero()};
        c[static_cast<std::size_t>(i)] = ps->one();
        return c;
    };
    rows.push_back({one, unit(0)});
    rows.push_back({u, unit(1)});
    rows.push_back({v, unit(2)});
    rows.push_back({u * u, unit(3)});
    rows.push_back({u * v, unit(4)});
    rows.push_back({v * v, unit(5)});

    Sigma2Result out{};
    for (int found = 0; found < 6; ++found) {
        std::optional<u32> best;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto o = rows[i].series.order();
            if (o && (!best || *o < *best)) {
                best = *o;
                best_i = i;
            }
        }
        if (!best)
            fail(errc::precision_exhausted,
                 "conic order basis not resolved at this precision (degenerate or precision too small)");
        Sigma2Row pivot = rows[best_i];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best_i));
        FieldElement lead = pivot.series.coeff(*best);
        FieldElement lead_inv = lead.inv();
        for (auto& r : rows) {
            FieldElement rc = r.series.coeff(*best);
            auto o = r.series.order();
            if (o && *o == *best && !rc.is_zero()) {
                FieldElement k = rc * lead_inv;
                r.series = r.series - pivot.series.scaled(k);
                for (int j = 0; j < 6; ++j)
                    r.combo[static_cast<std::size_t>(j)] =
                        r.combo[static_cast<std::size_t>(j)] - k * pivot.combo[static_cast<std::size_t>(j)];
            }
        }
        out.orders[static_cast<std::size_t>(found)] = *best;
        out.combos[static_cast<std::size_t>(found)] = pivot.combo;
    }
    return out;
}

// conic monomial basis order used by sigma2_reduce: 1, u, v, u^2, uv, v^2
inline HomogPoly conic_from_combo(const Branch& B, const std::array<FieldElement, 6>& combo) {
    SpecPtr ps = B.center.spec();
    int au = B.affine_axes[0], av = B.affine_axes[1], ch = B.chart;
    static constexpr int EU[6] = {0, 1, 0, 2, 1, 0};
    static constexpr int EV[6] = {0, 0, 1, 0, 1, 2};
    HomogPoly conic(ps, 2);
    for (int k = 0; k < 6; ++k) {
        FieldElement c = combo[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Exps e{0, 0, 0};
        e[static_cast<std::size_t>(au)] += static_cast<u32>(EU[k]);
        e[static_cast<std::size_t>(av)] += static_cast<u32>(EV[k]);
        e[static_cast<std::size_t>(ch)] += static_cast<u32>(2 - EU[k] - EV[k]);
        conic.add_term(e, c);
    }
    return conic;
}

}  // namespace detail

inline std::array<u32, 6> sigma2_orders(const HomogPoly& C, const ProjPoint& P, u32 precision) {
    Branch B = branch_at(C, P, precision);
    return detail::sigma2_reduce(B).orders;
}

// The unique conic with maximal contact at P, normalized. Requires the top
// two orders to be separated (otherwise the conic is not unique).
inline HomogPoly osculating_conic(const HomogPoly& C, const ProjPoint& P, u32 precision) {
    Branch B = branch_at(C, P, precision);
    auto red = detail::sigma2_reduce(B);
    if (red.orders[4] >= red.orders[5])
        fail(errc::not_unique, "top conic orders are not separated");
    return detail::conic_from_combo(B, red.combos[5]).normalized();
}

enum class PointKind { regular, inflexion };

// Rational-point dichotomy for plane maximal curves of degree (rootq+1)/2:
// tangent contact 2 (regular) or (rootq+1)/2 (inflexion). Anything else means
// the input is outside the theorem class.
inline PointKind classify_point(const HomogPoly& C, const ProjPoint& P, u32 rootq) {
    u32 n = (rootq + 1) / 2;
    auto j = sigma1_orders(C, P, n + 3);
    if (j[2] == 2) return PointKind::regular;
    if (j[2] == n) return PointKind::inflexion;
    fail(errc::contract_violation,
         "tangent contact order " + std::to_string(j[2]) + " is neither 2 nor " + std::to_string(n));
}

// Order at P of the Wronskian det for the line series with derivative orders
// (0,1,2), computed along the branch with Hasse derivatives. The classicality
// guard (degree != 1 mod p) keeps the generic orders at (0,1,2).
inline u32 wronskian_order_sigma1(const HomogPoly& C, const ProjPoint& P, u32 precision) {
    if (C.degree() % C.spec()->p() == 1)
        fail(errc::classicality_guard_failed, "degree is 1 mod p; line series may be non-classical");
    Branch B = branch_at(C, P, precision);
    const PowerSeries& x = B.series[0];
    const PowerSeries& y = B.series[1];
    PowerSeries w = x.hasse_deriv(1) * y.hasse_deriv(2) - x.hasse_deriv(2) * y.hasse_deriv(1);
    auto o = w.order();
    if (!o) fail(errc::precision_exhausted, "Wronskian order not resolved at this precision");

    // side assertion: v_P >= sum(j_i - eps_i), equality when the binomial
    // determinant det C(j_i, eps_j) is a unit mod p
    auto j = sigma1_orders(C, P, precision);
    u32 excess = j[2] - 2;
    if (*o < excess) fail(errc::internal, "Wronskian order below the order-excess lower bound");
    u32 p = C.spec()->p();
    std::array<u32, 3> eps{0, 1, 2};
    i64 det = 0;
    {
        std::array<std::array<i64, 3>, 3> M{};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    binom_mod_p(j[static_cast<std::size_t>(r)], eps[static_cast<std::size_t>(c)], p);
        det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
              M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
              M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        det %= static_cast<i64>(p);
    }
    if (det != 0 && *o != excess)
        fail(errc::internal, "binomial determinant is a unit but Wronskian order exceeds the bound");
    return *o;
}

struct OrderData {
    ProjPoint point;
    std::array<u32, 3> sigma1;
    std::array<u32, 6> sigma2;
    PointKind kind;
    HomogPoly osculating;
    u32 wronskian_order;
};

// Full local profile at a rational or extension point of a theorem-class curve.
inline OrderData analyze_point(const HomogPoly& C, const ProjPoint& P, u32 rootq,
                               std::optional<u32> precision = std::nullopt) {
    u32 prec = precision.value_or(default_precision(rootq));
    Branch B = branch_at(C, P, prec);
    SpecPtr ps = P.spec();
    HomogPoly Cp = C.spec() == ps ? C : C.lift_to(ps);
    Mult j2 = imult(tangent_line(Cp, P), B);
    if (!j2.exact) fail(errc::precision_exhausted, "tangent contact order not resolved");
    auto red = detail::sigma2_reduce(B);
    if (red.orders[4] >= red.orders[5]) fail(errc::not_unique, "top conic orders are not separated");
    HomogPoly conic = detail::conic_from_combo(B, red.combos[5]).normalized();
    u32 n = (rootq + 1) / 2;
    PointKind kind;
    if (j2.value == 2)
        kind = PointKind::regular;
    else if (j2.value == n)
        kind = PointKind::inflexion;
    else
        fail(errc::contract_violation, "tangent contact order outside the theorem class");
    u32 w = wronskian_order_sigma1(C, P, prec);
    return OrderData{P, {0, 1, j2.value}, red.orders, kind, conic, w};
}

}  // namespace curvelab
