#include <doctest.h>

#include "curvelab/catalog.hpp"
#include "curvelab/report.hpp"
#include "curvelab/specfile.hpp"

using namespace curvelab;

namespace {

const char* kFermatSpec =
    "# degree-6 diagonal curve\n"
    "field p=11 m=2 modulus=1,0,1\n"
    "term coeff=1 exps=6,0,0\n"
    "term coeff=1 exps=0,6,0\n"
    "term coeff=1 exps=0,0,6\n";

}  // namespace

TEST_CASE("curve-spec parsing") {
    ParsedCurve pc = parse_curve_spec(kFermatSpec);
    CHECK(pc.poly == make_fermat(11).poly);
    CHECK(pc.poly.degree() == 6);
    CHECK(pc.poly.terms().size() == 3);

    SUBCASE("round-trips byte-identically") {
        std::string canonical = serialize_curve_spec(pc.poly);
        ParsedCurve again = parse_curve_spec(canonical);
        CHECK(again.poly == pc.poly);
        CHECK(serialize_curve_spec(again.poly) == canonical);
    }
    SUBCASE("coefficients reduce through the modulus") {
        // t^2 = -1 = 10 under the modulus 1,0,1
        ParsedCurve pc2 = parse_curve_spec(
            "field p=11 m=2 modulus=1,0,1\n"
            "term coeff=t^2 exps=1,0,0\n"
            "term coeff=3+2t exps=0,1,0\n");
        SpecPtr s = pc2.spec;
        CHECK(pc2.poly.coeff({1, 0, 0}) == s->from_int(10));
        CHECK(pc2.poly.coeff({0, 1, 0}) == s->from_int(3) + s->from_int(2) * s->gen());
    }
    SUBCASE("inhomogeneous input is rejected") {
        CHECK_THROWS_AS(parse_curve_spec("field p=11 m=2 modulus=1,0,1\n"
                                         "term coeff=1 exps=6,0,0\n"
                                         "term coeff=1 exps=0,5,0\n"),
                        CurveError);
    }
    SUBCASE("parse errors carry position information") {
        try {
            parse_curve_spec("field p=11 m=2 modulus=1,0,1\nterm coeff=1x exps=1,0,0\n");
            FAIL("expected a parse error");
        } catch (const CurveError& e) {
            CHECK((e.code() == errc::parse_error || e.code() == errc::bad_coefficient));
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_curve_spec("term coeff=1 exps=1,0,0\n"), CurveError);
        CHECK_THROWS_AS(parse_curve_spec(""), CurveError);
        CHECK_THROWS_AS(parse_curve_spec("field p=12 m=1 modulus=0,1\nterm coeff=1 exps=1,0,0\n"),
                        CurveError);
    }
    SUBCASE("catalog curves serialize and re-parse") {
        for (u32 rq : {5u, 7u, 11u}) {
            auto c = make_fermat(rq);
            CHECK(parse_curve_spec(serialize_curve_spec(c.poly)).poly == c.poly);
        }
    }
}

TEST_CASE("reports are canonical and deterministic") {
    auto build = [] {
        Report rep("count", {{"rootq", 11}, {"curve", "fermat"}}, 7);
        rep.section("count")["N"] = 342;
        rep.section("count")["bound"] = rat_json(Rat(1818, 5));
        rep.claim("count attains the upper bound", true);
        return rep.str();
    };
    std::string a = build(), b = build();
    CHECK(a == b);
    CHECK(a.find("\"1818/5\"") != std::string::npos);
    CHECK(a.find("\"pass\": true") != std::string::npos);

    Report failing("count", Json::object());
    failing.claim("x", false);
    CHECK_FALSE(failing.all_claims_pass());
}
