#include <doctest.h>

#include "curvelab/catalog.hpp"
#include "curvelab/local_analysis.hpp"
#include "curvelab/plane_curve.hpp"
#include "curvelab/rng.hpp"

using namespace curvelab;

namespace {

// oracle: brute-force scan of the projective plane
i64 brute_count(const HomogPoly& C) {
    SpecPtr s = C.spec();
    i64 n = 0;
    for (u64 a = 0; a < s->q(); ++a)
        for (u64 b = 0; b < s->q(); ++b)
            if (C.evaluate(s->from_packed(a), s->from_packed(b), s->one()).is_zero()) ++n;
    for (u64 b = 0; b < s->q(); ++b)
        if (C.evaluate(s->one(), s->from_packed(b), s->zero()).is_zero()) ++n;
    if (C.evaluate(s->zero(), s->one(), s->zero()).is_zero()) ++n;
    return n;
}

}  // namespace

TEST_CASE("evaluation") {
    auto f6 = make_fermat(11);
    SpecPtr s = f6.poly.spec();
    auto lams = fermat_lambdas(11);
    CHECK(f6.poly.evaluate(s->one(), lams[0], s->zero()).is_zero());

    auto f3 = make_fermat(5);
    SpecPtr s5 = f3.poly.spec();
    CHECK(f3.poly.evaluate(s5->one(), -s5->one(), s5->zero()).is_zero());
    CHECK(f3.poly.evaluate(s5->one(), s5->one(), s5->one()) == s5->from_int(3));
}

TEST_CASE("point enumeration") {
    auto f3 = make_fermat(5);
    auto pts = rational_points(f3.poly);
    CHECK(pts.size() == 36);
    CHECK(brute_count(f3.poly) == 36);

    auto f6 = make_fermat(11);
    auto pts6 = rational_points(f6.poly);
    CHECK(pts6.size() == 342);

    auto h = make_hermitian(11);
    auto hpts = rational_points(h.poly);
    CHECK(hpts.size() == 1332);
    CHECK(static_cast<i64>(hpts.size()) == 11 * 11 * 11 + 1);

    SUBCASE("every returned point is on the curve, without duplicates") {
        for (const auto& P : pts6) CHECK(f6.poly.evaluate(P).is_zero());
        for (std::size_t i = 1; i < pts6.size(); ++i) CHECK(pts6[i - 1] < pts6[i]);
    }
    SUBCASE("count is stable under coordinate permutation") {
        SpecPtr s = f6.poly.spec();
        Mat3 P{s, {}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) P.at(i, j) = (j == (i + 1) % 3) ? s->one() : s->zero();
        CHECK(rational_points(transform(f6.poly, P)).size() == pts6.size());
    }
    SUBCASE("plane bound holds") {
        for (u32 rq : {5u, 7u, 11u}) {
            auto f = make_fermat(rq);
            i64 N = static_cast<i64>(rational_points(f.poly).size());
            i64 q = static_cast<i64>(f.poly.spec()->q());
            i64 d = f.degree;
            CHECK(std::abs(N - q - 1) <= (d - 1) * (d - 2) * rq);
        }
    }
    SUBCASE("extension cap") {
        CHECK_THROWS_AS(rational_points(f6.poly, 4), CurveError);
    }
}

TEST_CASE("singularity scan") {
    auto f3 = make_fermat(5);
    CHECK(is_nonsingular(f3.poly, 2).nonsingular);

    // the Artin-Schreier plane model is singular at (1:0:0)
    auto as = make_artin_schreier(11, 3);
    auto scan = is_nonsingular(as.plane_model, 1);
    CHECK_FALSE(scan.nonsingular);
    REQUIRE(scan.witness.has_value());
    SpecPtr s = as.field;
    CHECK(*scan.witness == ProjPoint::make(s->one(), s->zero(), s->zero()));
}

TEST_CASE("tangent lines") {
    auto f3 = make_fermat(5);
    SpecPtr s5 = f3.poly.spec();
    auto P = ProjPoint::make(s5->one(), -s5->one(), s5->zero());
    HomogPoly expect(s5, 1);
    expect.add_term({1, 0, 0}, s5->one());
    expect.add_term({0, 1, 0}, s5->one());
    CHECK(tangent_line(f3.poly, P) == expect);

    auto f6 = make_fermat(11);
    SpecPtr s = f6.poly.spec();
    auto lam = fermat_lambdas(11)[0];
    auto Pl = ProjPoint::make(lam, s->zero(), s->one());
    HomogPoly expect6(s, 1);
    expect6.add_term({1, 0, 0}, s->one());
    expect6.add_term({0, 0, 1}, -lam);
    CHECK(tangent_line(f6.poly, Pl) == expect6);

    auto as = make_artin_schreier(11, 3);
    auto sing = ProjPoint::make(as.field->one(), as.field->zero(), as.field->zero());
    CHECK_THROWS_AS(tangent_line(as.plane_model, sing), CurveError);
    CHECK_THROWS_AS(tangent_line(f6.poly, ProjPoint::make(s->one(), s->one(), s->one())), CurveError);
}

TEST_CASE("hessian") {
    auto F = FieldSpec::make(11, 2);
    HomogPoly conic(F, 2);
    conic.add_term({2, 0, 0}, F->one());
    conic.add_term({0, 1, 1}, F->one());
    HomogPoly h = hessian(conic);
    CHECK(h.degree() == 0);
    CHECK(h.coeff({0, 0, 0}) == -F->from_int(2));

    // hessian zero set on the curve = the points with a vanishing coordinate
    auto f6 = make_fermat(11);
    HomogPoly h6 = hessian(f6.poly);
    CHECK(h6.degree() == 3 * (6 - 2));
    i64 inflexions = 0;
    for (const auto& P : rational_points(f6.poly))
        if (h6.evaluate(P).is_zero()) ++inflexions;
    CHECK(inflexions == 18);
}

TEST_CASE("hessian zero set equals the branch-based inflexion set") {
    // both curves are classical for the line series (degree != 1 mod p)
    for (u32 rq : {5u, 11u}) {
        auto f = make_fermat(rq);
        HomogPoly h = hessian(f.poly);
        for (const auto& P : rational_points(f.poly)) {
            bool on_hessian = h.evaluate(P).is_zero();
            bool inflexion = classify_point(f.poly, P, rq) == PointKind::inflexion;
            CHECK(on_hessian == inflexion);
        }
    }
}

TEST_CASE("projective transforms") {
    auto f6 = make_fermat(11);
    SpecPtr s = f6.poly.spec();
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
        Mat3 M{s, {}};
        do {
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) M.at(r, c) = s->from_packed(rng.below(s->q()));
        } while (M.det().is_zero());
        HomogPoly moved = transform(f6.poly, M);
        CHECK(transform(moved, M.inverse()) == f6.poly);
        // zero sets correspond through the matrix
        auto pts = rational_points(moved);
        CHECK(pts.size() == 342);
        for (std::size_t k = 0; k < 5; ++k) CHECK(f6.poly.evaluate(M.apply(pts[k])).is_zero());
    }
}
