#pragma once

// Curve-level arithmetic reports: point counts against the Hasse-Weil and
// plane bounds, the regular/inflexion census, numerical semigroups with exact
// gap lists, Weierstrass pole-order evidence at the Fermat inflexions, and the
// semigroup-based non-isomorphism evidence between the Fermat and
// Artin-Schreier curves of the same genus.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "curvelab/catalog.hpp"
#include "curvelab/local_analysis.hpp"

namespace curvelab {

struct MaximalityReport {
    i64 N = 0;
    i64 genus = 0;
    u64 q = 0;
    u32 rootq = 0;
    i64 hasse_weil_gap = 0;  // q + 1 + 2g*rootq - N
    bool plane_bound_ok = false;
    bool maximal = false;
};

inline MaximalityReport maximality_report(const HomogPoly& C, i64 genus) {
    SpecPtr s = C.spec();
    if (s->m() % 2 != 0)
        fail(errc::bad_parameters, "maximality needs a square base field (even extension degree)");
    u32 rootq = 1;
    for (u32 i = 0; i < s->m() / 2; ++i) rootq *= s->p();
    MaximalityReport rep;
    rep.q = s->q();
    rep.rootq = rootq;
    rep.genus = genus;
    rep.N = static_cast<i64>(rational_points(C).size());
    i64 upper = static_cast<i64>(rep.q) + 1 + 2 * genus * rootq;
    rep.hasse_weil_gap = upper - rep.N;
    i64 dev = rep.N - static_cast<i64>(rep.q) - 1;
    if (dev < 0) dev = -dev;
    if (dev > 2 * genus * rootq)
        fail(errc::bound_violated, "point count violates the Hasse-Weil bound; genus or count is wrong");
    i64 d = C.degree();
    rep.plane_bound_ok = dev <= (d - 1) * (d - 2) * rootq;
    rep.maximal = rep.hasse_weil_gap == 0;
    return rep;
}

struct Census {
    i64 regular = 0;
    i64 inflexion = 0;
    i64 total() const { return regular + inflexion; }
};

// Classifies every rational point; no sampling (N is small at desk scale).
inline Census census(const HomogPoly& C, u32 rootq) {
    Census out;
    for (const auto& P : rational_points(C)) {
        if (classify_point(C, P, rootq) == PointKind::regular)
            ++out.regular;
        else
            ++out.inflexion;
    }
    return out;
}

struct NumericalSemigroup {
    std::vector<u64> generators;
    std::vector<u64> gaps;  // sorted

    u64 genus() const { return gaps.size(); }
    bool same_gaps(const NumericalSemigroup& o) const { return gaps == o.gaps; }
};

// Exact gap list by reachability sieve. The sieve runs to a bound past which
// everything is representable: (a-1)(b-1) for a coprime pair of generators,
// certified by checking a full window of max(gens) consecutive representable
// values at the end.
inline NumericalSemigroup semigroup_from_generators(std::vector<u64> gens) {
    if (gens.empty()) fail(errc::bad_parameters, "no generators");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() == 0) fail(errc::bad_parameters, "0 is not a semigroup generator");
    u64 g = 0;
    for (u64 x : gens) g = std::gcd(g, x);
    if (g != 1) fail(errc::not_coprime, "generators must have gcd 1");

    u64 bound = (gens.front() - 1) * (gens.back() - 1);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (std::gcd(gens[i], gens[j]) == 1)
                bound = std::min(bound, (gens[i] - 1) * (gens[j] - 1));
    u64 window = gens.back();
    std::vector<char> reach(bound + window + 1, 0);
    reach[0] = 1;
    for (u64 v = 1; v < reach.size(); ++v)
        for (u64 x : gens) {
            if (x > v) break;
            if (reach[v - x]) {
                reach[v] = 1;
                break;
            }
        }
    for (u64 v = bound; v <= bound + window; ++v)
        if (!reach[v]) fail(errc::internal, "semigroup sieve bound was not conclusive");

    NumericalSemigroup out;
    out.generators = gens;
    for (u64 v = 1; v < bound; ++v)
        if (!reach[v]) out.gaps.push_back(v);
    return out;
}

struct PoleEvidence {
    u32 pole_small = 0;  // (rootq-1)/2, from X1/(X0 - lambda*X2) after permuting P to (lambda,0,1)
    u32 pole_large = 0;  // (rootq+1)/2, from (X0 - lambda'*X2)/(X0 - lambda*X2)
    bool regular_at_infinity = false;  // both functions have order 0 at every point of X2 = 0
    NumericalSemigroup semigroup;
};

// Exhibits rational functions with pole divisors n*P and (n-1)*P at a Fermat
// inflexion P, with pole orders read off branch expansions and regularity
// checked at every point the denominator form could reach on the boundary
// line. Returns the generated semigroup <(rootq-1)/2, (rootq+1)/2>.
inline PoleEvidence inflexion_pole_orders(u32 rootq, const ProjPoint& P) {
    CatalogCurve fermat = make_fermat(rootq);
    SpecPtr s = fermat.poly.spec();
    u32 n = (rootq + 1) / 2;

    // inflexions have exactly one vanishing coordinate; permute axes so the
    // point reads (lambda, 0, 1) (the Fermat form is symmetric under this)
    int zero_at = -1;
    for (int i = 0; i < 3; ++i)
        if (P.x[static_cast<std::size_t>(i)].is_zero()) {
            if (zero_at >= 0) fail(errc::not_an_inflexion, "two coordinates vanish");
            zero_at = i;
        }
    if (zero_at < 0) fail(errc::not_an_inflexion, "no coordinate vanishes");
    std::array<int, 3> perm{};  // perm[new] = old
    perm[1] = zero_at;
    perm[0] = zero_at == 0 ? 1 : 0;
    perm[2] = 3 - perm[0] - perm[1];
    ProjPoint Pp = ProjPoint::make(P.x[static_cast<std::size_t>(perm[0])],
                                   P.x[static_cast<std::size_t>(perm[1])],
                                   P.x[static_cast<std::size_t>(perm[2])]);
    FieldElement lam = Pp.x[0] * Pp.x[2].inv();
    if (!(lam.pow(n) == -s->one())) fail(errc::not_an_inflexion, "point is not on the Fermat curve's inflexion locus");
    if (classify_point(fermat.poly, Pp, rootq) != PointKind::inflexion)
        fail(errc::not_an_inflexion, "tangent contact order is not (rootq+1)/2");

    auto lambdas = fermat_lambdas(rootq);
    FieldElement lam2 = lambdas[0] == lam ? lambdas[1] : lambdas[0];

    HomogPoly den(s, 1);   // X0 - lambda*X2, the tangent at Pp
    den.add_term({1, 0, 0}, s->one());
    den.add_term({0, 0, 1}, -lam);
    HomogPoly num_a(s, 1);  // X0 - lambda'*X2
    num_a.add_term({1, 0, 0}, s->one());
    num_a.add_term({0, 0, 1}, -lam2);
    HomogPoly num_b(s, 1);  // X1
    num_b.add_term({0, 1, 0}, s->one());

    u32 prec = default_precision(rootq);
    auto ratio_order = [&](const HomogPoly& num, const ProjPoint& at) -> i64 {
        Branch B = branch_at(fermat.poly, at, prec);
        auto on = compose_on_branch(num, B).order();
        auto od = compose_on_branch(den, B).order();
        if (!on || !od) fail(errc::precision_exhausted, "function order not resolved");
        return static_cast<i64>(*on) - static_cast<i64>(*od);
    };

    PoleEvidence out;
    i64 oa = ratio_order(num_a, Pp);
    i64 ob = ratio_order(num_b, Pp);
    if (oa != -static_cast<i64>(n) || ob != -(static_cast<i64>(n) - 1))
        fail(errc::internal, "pole orders at the inflexion are not ((rootq+1)/2, (rootq-1)/2)");
    out.pole_large = n;
    out.pole_small = n - 1;

    // candidate poles away from P: the denominator line meets the curve only
    // at Pp, but the affine-coordinate reading of both functions also has to
    // be checked along the boundary line X2 = 0
    out.regular_at_infinity = true;
    for (const auto& mu : s->nth_roots(-s->one(), n)) {
        ProjPoint Q = ProjPoint::make(s->one(), mu, s->zero());
        if (ratio_order(num_a, Q) != 0 || ratio_order(num_b, Q) != 0) out.regular_at_infinity = false;
    }

    out.semigroup = semigroup_from_generators({n - 1, n});
    return out;
}

struct BootstrapSemigroup {
    NumericalSemigroup semigroup;  // <m, rootq>
    bool valuations_consistent = false;  // v(x) = -rootq, v(y) = -m balances both sides
    bool genus_matches = false;          // gap count equals (rootq-1)(m-1)/2
};

// Weierstrass semigroup at the infinite place of y^rootq + y = x^m via the
// valuation bootstrap: the place is totally ramified (gcd(m, rootq) = 1), and
// assigning v(x) = -rootq, v(y) = -m gives both sides of the equation the
// same valuation -m*rootq, so x and y generate pole orders rootq and m there.
inline BootstrapSemigroup as_semigroup_at_infinity(u32 rootq, u32 m) {
    if (m < 2 || (rootq + 1) % m != 0)
        fail(errc::bad_parameters, "m must divide rootq + 1 (and be at least 2)");
    BootstrapSemigroup out;
    i64 lhs_main = -static_cast<i64>(m) * rootq;        // v(y^rootq)
    i64 lhs_tail = -static_cast<i64>(m);                // v(y)
    i64 rhs = -static_cast<i64>(m) * rootq;             // v(x^m)
    out.valuations_consistent = lhs_main == rhs && lhs_tail > lhs_main &&
                                std::gcd(static_cast<u64>(m), static_cast<u64>(rootq)) == 1;
    if (!out.valuations_consistent)
        fail(errc::bad_parameters, "valuation bootstrap is inconsistent for these parameters");
    out.semigroup = semigroup_from_generators({m, rootq});
    out.genus_matches =
        out.semigroup.genus() == static_cast<u64>(rootq - 1) * (m - 1) / 2;
    return out;
}

struct NonIsoReport {
    u32 rootq = 0;
    u32 m = 0;  // (rootq+1)/4
    i64 genus_fermat = 0;
    i64 genus_as = 0;
    i64 n_fermat = 0;
    i64 n_as = 0;
    NumericalSemigroup sg_fermat;  // at a Fermat inflexion
    NumericalSemigroup sg_as;      // at the Artin-Schreier infinite place
    bool genus_equal = false;
    bool counts_equal = false;
    bool semigroups_differ = false;
    // Evidence, not a proof: distinguishing the curves outright would need the
    // semigroup at every point of the second curve, which is outside what this
    // library verifies.
    std::string caveat =
        "evidence: the two distinguished semigroups differ while genus and point counts agree";
};

inline NonIsoReport non_isomorphism_evidence(u32 rootq) {
    if (rootq % 4 != 3) fail(errc::bad_parameters, "rootq must be 3 mod 4 so that (rootq+1)/4 is an integer");
    NonIsoReport rep;
    rep.rootq = rootq;
    rep.m = (rootq + 1) / 4;

    CatalogCurve fermat = make_fermat(rootq);
    rep.genus_fermat = fermat.genus;
    rep.n_fermat = static_cast<i64>(rational_points(fermat.poly).size());

    ArtinSchreierCurve as = make_artin_schreier(rootq, rep.m);
    rep.genus_as = as.genus;
    rep.n_as = as.count_points();

    auto lambdas = fermat_lambdas(rootq);
    ProjPoint P = ProjPoint::make(lambdas[0], fermat.poly.spec()->zero(), fermat.poly.spec()->one());
    rep.sg_fermat = inflexion_pole_orders(rootq, P).semigroup;
    rep.sg_as = as_semigroup_at_infinity(rootq, rep.m).semigroup;

    rep.genus_equal = rep.genus_fermat == rep.genus_as;
    rep.counts_equal = rep.n_fermat == rep.n_as;
    rep.semigroups_differ = !rep.sg_fermat.same_gaps(rep.sg_as);
    return rep;
}

}  // namespace curvelab
