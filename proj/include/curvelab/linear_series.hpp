#pragma once

// Global quantities for the line and conic series on a plane curve: generic
// order sequences from point samples, the ramification/Frobenius divisor
// degree formulas, the upper bound deg(S)/r on the rational point count, the
// Castelnuovo genus bound, and the point-level Frobenius osculation check.

#include <vector>

#include "curvelab/local_analysis.hpp"
#include "curvelab/rational.hpp"
#include "curvelab/rng.hpp"

namespace curvelab {

enum class Series { sigma1, sigma2 };

struct SeriesDescriptor {
    Series which;
    u32 r;         // projective dimension of the series
    u32 d_series;  // its degree

    static SeriesDescriptor sigma1_of(const HomogPoly& C) { return {Series::sigma1, 2, C.degree()}; }
    static SeriesDescriptor sigma2_of(const HomogPoly& C) { return {Series::sigma2, 5, 2 * C.degree()}; }
};

struct OrderSequences {
    std::vector<u32> epsilon;
    bool nu_verified = false;
    u32 evidence = 0;  // Frobenius membership checks passed
};

// Coordinatewise minimum of the per-point order lists over the sample; the
// generic value, since only finitely many points exceed it.
inline std::vector<u32> generic_orders(const HomogPoly& C, const SeriesDescriptor& S,
                                       const std::vector<ProjPoint>& samples, u32 precision) {
    if (samples.empty()) fail(errc::empty_sample, "generic orders need a nonempty sample");
    std::vector<u32> eps;
    for (const auto& P : samples) {
        std::vector<u32> here;
        if (S.which == Series::sigma1) {
            auto a = sigma1_orders(C, P, precision);
            here.assign(a.begin(), a.end());
        } else {
            auto a = sigma2_orders(C, P, precision);
            here.assign(a.begin(), a.end());
        }
        if (eps.empty()) {
            eps = here;
        } else {
            for (std::size_t i = 0; i < eps.size(); ++i) eps[i] = std::min(eps[i], here[i]);
        }
    }
    return eps;
}

// deg(R) = (2g-2) * sum(eps) + (r+1) * d
inline i64 ramification_degree(i64 g, const std::vector<u32>& epsilon, u32 r, u32 d_series) {
    i64 sum = 0;
    for (u32 e : epsilon) sum += e;
    return (2 * g - 2) * sum + static_cast<i64>(r + 1) * d_series;
}

// deg(S) = (2g-2) * sum(nu) + (q+r) * d
inline i64 frobenius_degree(i64 g, const std::vector<u32>& nu, u32 r, u32 d_series, u64 q) {
    i64 sum = 0;
    for (u32 v : nu) sum += v;
    return (2 * g - 2) * sum + (static_cast<i64>(q) + r) * static_cast<i64>(d_series);
}

// N <= deg(S)/r, as an exact rational
inline Rat sv_bound(i64 deg_s, u32 r) {
    if (r < 1) fail(errc::bad_parameters, "series dimension must be at least 1");
    return Rat(deg_s, static_cast<i64>(r));
}

// true iff the q-power Frobenius image of P lies on the osculating conic at P.
// q is the size of the curve's base field; P may live in an extension.
inline bool frobenius_osculation_check(const HomogPoly& C, const ProjPoint& P, u32 precision) {
    HomogPoly conic = osculating_conic(C, P, precision);
    u64 q = C.spec()->q();
    ProjPoint phi = ProjPoint::make(P.x[0].pow(static_cast<i64>(q)), P.x[1].pow(static_cast<i64>(q)),
                                    P.x[2].pow(static_cast<i64>(q)));
    return conic.evaluate(phi).is_zero();
}

// Castelnuovo bound on 2g for a nondegenerate curve of degree 2*rootq in P^n
// (floor of the even/odd-cased expression).
inline i64 castelnuovo_bound_2g(u32 n_dim, u32 rootq) {
    if (n_dim < 1) fail(errc::bad_parameters, "projective dimension must be at least 1");
    i64 t = 2 * static_cast<i64>(rootq) - n_dim;
    if (n_dim % 2 == 0) return t * t / (4 * static_cast<i64>(n_dim));
    return (t * t - 1) / (4 * static_cast<i64>(n_dim));
}

// Deterministic sample of points of C over GF(q^k): enumerate, sort
// canonically, filter by rationality over the base field, then draw seeded
// indices without replacement.
inline std::vector<ProjPoint> sample_points(const HomogPoly& C, u32 k, std::size_t count, u64 seed,
                                            bool want_nonrational) {
    auto pts = rational_points(C, k);
    u64 q0 = C.spec()->q();
    std::vector<ProjPoint> filtered;
    for (const auto& P : pts)
        if (P.rational_over(q0) != want_nonrational) filtered.push_back(P);
    Rng rng(seed);
    auto idx = rng.distinct(count, filtered.size());
    std::vector<ProjPoint> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(filtered[i]);
    return out;
}

// epsilon for sigma2 plus point-level verification that the Frobenius order
// sequence drops the fourth order: Phi(P) on the osculating conic at each
// sampled extension point.
inline OrderSequences sigma2_order_data(const HomogPoly& C, const std::vector<ProjPoint>& samples,
                                        u32 precision) {
    OrderSequences out;
    out.epsilon = generic_orders(C, SeriesDescriptor::sigma2_of(C), samples, precision);
    out.nu_verified = true;
    for (const auto& P : samples) {
        if (!frobenius_osculation_check(C, P, precision)) {
            out.nu_verified = false;
            continue;
        }
        ++out.evidence;
    }
    return out;
}

}  // namespace curvelab
