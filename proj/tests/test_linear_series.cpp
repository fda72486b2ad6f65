#include <doctest.h>

#include "curvelab/catalog.hpp"
#include "curvelab/linear_series.hpp"

using namespace curvelab;

TEST_CASE("degree formulas") {
    // line series on the degree-6 curve of genus 10
    CHECK(ramification_degree(10, {0, 1, 2}, 2, 6) == 72);
    // conic series, same curve
    CHECK(ramification_degree(10, {0, 1, 2, 3, 4, 11}, 5, 12) == 450);
    // cubic Fermat curve over GF(25)
    CHECK(ramification_degree(1, {0, 1, 2}, 2, 3) == 9);

    CHECK(frobenius_degree(10, {0, 1, 2, 3, 11}, 5, 12, 121) == 1818);
    CHECK(frobenius_degree(10, {0, 1}, 2, 6, 121) == 756);
    // affine in g, so g = 0 just flips the first term's sign
    CHECK(frobenius_degree(0, {0, 1}, 2, 3, 25) == -2 + 27 * 3);

    CHECK(sv_bound(1818, 5) == Rat(1818, 5));
    CHECK(Rat(342) <= sv_bound(1818, 5));
    CHECK(sv_bound(0, 3) == Rat(0));
}

TEST_CASE("frobenius-order sign analysis") {
    // the maximality inequality (rootq-5)(rootq-6-nu) <= 0 is consistent with
    // nu = rootq and rules out nu = 4 once rootq > 10
    for (i64 rq : {11, 13}) {
        CHECK((rq - 5) * (rq - 6 - rq) <= 0);
        CHECK((rq - 5) * (rq - 6 - 4) > 0);
    }
}

TEST_CASE("castelnuovo bound") {
    CHECK(castelnuovo_bound_2g(5, 11) == 14);  // ((22-5)^2 - 1)/20 = 288/20, floored
    CHECK(castelnuovo_bound_2g(2, 11) == 50);  // (22-2)^2 / 8
    CHECK(castelnuovo_bound_2g(1, 11) == 110); // ((22-1)^2 - 1)/4
    // the step pinning the conic series: 2g = 18 exceeds the P^5 bound
    CHECK(18 > castelnuovo_bound_2g(5, 11));
}

TEST_CASE("generic orders from samples") {
    auto f6 = make_fermat(11);
    u32 prec = default_precision(11);
    auto rat = sample_points(f6.poly, 1, 10, 1, false);
    auto nonrat = sample_points(f6.poly, 2, 10, 1, true);
    std::vector<ProjPoint> mixed = rat;
    mixed.insert(mixed.end(), nonrat.begin(), nonrat.end());

    auto e1 = generic_orders(f6.poly, SeriesDescriptor::sigma1_of(f6.poly), mixed, prec);
    CHECK(e1 == std::vector<u32>{0, 1, 2});
    auto e2 = generic_orders(f6.poly, SeriesDescriptor::sigma2_of(f6.poly), mixed, prec);
    CHECK(e2 == std::vector<u32>{0, 1, 2, 3, 4, 11});

    // per-point orders dominate the generic orders coordinatewise
    for (const auto& P : mixed) {
        auto a = sigma2_orders(f6.poly, P, prec);
        for (int i = 0; i < 6; ++i) CHECK(a[i] >= e2[i]);
    }

    auto f3 = make_fermat(5);
    auto mixed3 = sample_points(f3.poly, 1, 12, 1, false);
    CHECK(generic_orders(f3.poly, SeriesDescriptor::sigma1_of(f3.poly), mixed3, default_precision(5)) ==
          std::vector<u32>{0, 1, 2});

    CHECK_THROWS_AS(generic_orders(f6.poly, SeriesDescriptor::sigma1_of(f6.poly), {}, prec), CurveError);
}

TEST_CASE("frobenius osculation") {
    auto f6 = make_fermat(11);
    u32 prec = default_precision(11);

    SUBCASE("holds at every sampled extension point of the maximal curve") {
        auto nonrat = sample_points(f6.poly, 2, 30, 7, true);
        REQUIRE(nonrat.size() == 30);
        for (const auto& P : nonrat) CHECK(frobenius_osculation_check(f6.poly, P, prec));
    }
    SUBCASE("trivial at rational points") {
        auto rat = sample_points(f6.poly, 1, 5, 7, false);
        for (const auto& P : rat) CHECK(frobenius_osculation_check(f6.poly, P, prec));
    }
    SUBCASE("fails somewhere on a non-maximal control curve") {
        // ordinary cubic: X1^2 X2 = X0^3 + X0 X2^2 + X2^3 over GF(121)
        SpecPtr s = f6.poly.spec();
        HomogPoly E(s, 3);
        E.add_term({3, 0, 0}, s->one());
        E.add_term({1, 0, 2}, s->one());
        E.add_term({0, 0, 3}, s->one());
        E.add_term({0, 2, 1}, -s->one());
        auto nonrat = sample_points(E, 2, 30, 7, true);
        bool all = true;
        for (const auto& P : nonrat) all = all && frobenius_osculation_check(E, P, prec);
        CHECK_FALSE(all);
    }
}

TEST_CASE("line-series ramification degree equals the Wronskian-order sum") {
    // cubic over GF(25): nine inflexions of valuation (5-3)/2 = 1, zero elsewhere
    auto f3 = make_fermat(5);
    u32 prec = default_precision(5);
    i64 sum = 0;
    for (const auto& P : rational_points(f3.poly)) sum += wronskian_order_sigma1(f3.poly, P, prec);
    CHECK(sum == ramification_degree(1, {0, 1, 2}, 2, 3));
}
