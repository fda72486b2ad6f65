#include <doctest.h>

#include "curvelab/catalog.hpp"

using namespace curvelab;

TEST_CASE("catalog constructors") {
    auto f = make_fermat(11);
    CHECK(f.degree == 6);
    CHECK(f.genus == 10);
    CHECK(f.poly.spec()->q() == 121);

    auto h = make_hermitian(11);
    CHECK(h.degree == 12);
    CHECK(h.genus == 55);

    auto as = make_artin_schreier(11, 3);
    CHECK(as.genus == 10);
    CHECK_THROWS_AS(make_artin_schreier(11, 5), CurveError);  // 5 does not divide 12
    CHECK_THROWS_AS(make_fermat(6), CurveError);
    CHECK_THROWS_AS(make_fermat(3), CurveError);

    // plane genus (n-1)(n-2)/2 against (rootq-1)(rootq-3)/8
    for (u32 rq : {5u, 7u, 11u, 13u}) {
        auto c = make_fermat(rq);
        CHECK(c.genus == static_cast<i64>(rq - 1) * (rq - 3) / 8);
    }
}

TEST_CASE("lambda roots") {
    auto lams = fermat_lambdas(11);
    CHECK(lams.size() == 6);
    for (const auto& l : lams) CHECK(l.pow(6) == -l.spec()->one());
    for (std::size_t i = 1; i < lams.size(); ++i) CHECK(lams[i - 1] < lams[i]);
}

TEST_CASE("hermitian squaring cover") {
    SUBCASE("rootq = 11") {
        auto rep = hermitian_cover_check(11);
        CHECK(rep.identity_ok);
        CHECK(rep.hermitian_points == 1332);
        CHECK(rep.fermat_points == 342);
        CHECK(rep.all_land_on_fermat);
    }
    SUBCASE("rootq = 5") {
        auto rep = hermitian_cover_check(5);
        CHECK(rep.identity_ok);
        CHECK(rep.hermitian_points == 126);
        CHECK(rep.fermat_points == 36);
        CHECK(rep.all_land_on_fermat);
    }
}

TEST_CASE("one-variable model") {
    SUBCASE("construction invariants at rootq = 11") {
        RootModel m = root_model_build(11, 0);
        CHECK(m.F.deg() == 5);
        SpecPtr s = m.F.spec();
        CHECK(m.F.coeff(0) == -s->one());
        CHECK(m.F.coeff(0).pow(10) == s->one());
        CHECK(m.c_roots.size() == 5);
        for (const auto& c : m.c_roots) CHECK(m.F.eval(c).is_zero());
    }
    SUBCASE("degree at rootq = 7") {
        CHECK(root_model_build(7, 0).F.deg() == 3);
    }
    SUBCASE("matches the Hasse-derivative expansion") {
        // F(Y) = sum_j (-A_j) Y^(n-j) with A_j = C(n,j) lambda^(n-j)
        for (u32 rq : {5u, 7u, 11u}) {
            u32 n = (rq + 1) / 2;
            RootModel m = root_model_build(rq, 1);
            SpecPtr s = m.F.spec();
            UniPoly alt(s);
            for (u32 j = 1; j <= n; ++j) {
                u32 b = binom_mod_p(n, j, s->p());
                FieldElement aj = s->from_int(b) * m.lambda.pow(static_cast<i64>(n - j));
                alt.set_coeff(n - j, alt.coeff(n - j) - aj);
            }
            CHECK(m.F == alt);
        }
    }
    SUBCASE("identity holds for every lambda, fails after perturbation") {
        for (u32 rq : {5u, 7u}) {
            for (std::size_t i = 0; i < (rq + 1) / 2; ++i) CHECK(root_model_verify(rq, i));
        }
        RootModel m = root_model_build(7, 0);
        UniPoly bad = m.F;
        bad.set_coeff(1, bad.coeff(1) + bad.spec()->one());
        CHECK_FALSE(root_model_identity_holds(7, m.lambda, bad));
    }
    SUBCASE("bad lambda index") {
        CHECK_THROWS_AS(root_model_build(11, 6), CurveError);
    }
}

TEST_CASE("one-variable model point counts") {
    // the affine chart of X^n = F(Y) misses exactly one place of the curve
    for (u32 rq : {5u, 7u, 11u}) {
        auto rc = root_model_count_match(rq, 0);
        CHECK(rc.matches);
        CHECK(rc.model_affine + 1 == rc.fermat_points);
    }
}

TEST_CASE("artin-schreier point counts") {
    // the nonsingular model is maximal: N = q + 1 + 2 g rootq
    for (auto [rq, m] : std::vector<std::pair<u32, u32>>{{7, 2}, {11, 3}, {11, 4}}) {
        auto as = make_artin_schreier(rq, m);
        i64 expect = static_cast<i64>(as.field->q()) + 1 + 2 * as.genus * rq;
        CHECK(as.count_points() == expect);
    }
}
