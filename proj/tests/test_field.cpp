#include <doctest.h>

#include "curvelab/field.hpp"
#include "curvelab/rng.hpp"

using namespace curvelab;

namespace {

bool has_code(const CurveError& e, errc c) { return e.code() == c; }

}  // namespace

TEST_CASE("spec construction and modulus selection") {
    auto F11 = FieldSpec::make(11, 1);
    CHECK(F11->q() == 11);
    CHECK(F11->modulus() == std::vector<u32>{0, 1});  // modulus X for the prime field

    // t^2 = 2: the modulus t^2 + 9 is irreducible since 2 is a non-square mod 11;
    // oracle: scan all 11 candidate roots
    std::vector<u32> mod{9, 0, 1};
    for (u32 r = 0; r < 11; ++r) CHECK((r * r + 9) % 11 != 0);
    auto F121 = FieldSpec::make(11, 2, mod);
    CHECK(F121->q() == 121);

    // t^2 + 1 also works over GF(11) (11 = 3 mod 4), t^2 is reducible
    CHECK_NOTHROW(FieldSpec::make(11, 2, std::vector<u32>{1, 0, 1}));
    CHECK_THROWS_WITH_AS(FieldSpec::make(11, 2, std::vector<u32>{0, 0, 1}), doctest::Contains("Reducible"),
                         CurveError);

    CHECK_THROWS_AS(FieldSpec::make(4, 1), CurveError);
    CHECK_THROWS_AS(FieldSpec::make(2, 8), CurveError);

    // interning: same parameters give the same spec object
    CHECK(FieldSpec::make(11, 2) == FieldSpec::make(11, 2));
    CHECK(FieldSpec::make(11, 2) != F121);
}

TEST_CASE("basic arithmetic") {
    auto F11 = FieldSpec::make(11, 1);
    CHECK(F11->from_int(3).inv() == F11->from_int(4));
    CHECK_THROWS_AS(F11->zero().inv(), CurveError);

    auto F121 = FieldSpec::make(11, 2, std::vector<u32>{9, 0, 1});  // t^2 = 2
    auto t = F121->gen();
    // t^11 = (t^2)^5 * t = 32 t = 10 t
    CHECK(t.pow(11) == F121->from_int(10) * t);

    // cross-spec arithmetic is a hard error
    auto other = FieldSpec::make(11, 2);
    CHECK_THROWS_AS((void)(t + other->gen()), CurveError);

    // Lagrange on a sample
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        auto a = F121->from_packed(1 + rng.below(120));
        CHECK(a.pow(120) == F121->one());
        CHECK(a * a.inv() == F121->one());
    }
}

TEST_CASE("frobenius is a field automorphism on sampled pairs") {
    auto F121 = FieldSpec::make(11, 2);
    Rng rng(42);
    for (int i = 0; i < 1000; ++i) {
        auto a = F121->from_packed(rng.below(121));
        auto b = F121->from_packed(rng.below(121));
        CHECK(F121->frobenius(a + b) == F121->frobenius(a) + F121->frobenius(b));
        CHECK(F121->frobenius(a * b) == F121->frobenius(a) * F121->frobenius(b));
    }
}

TEST_CASE("nth roots") {
    auto F121 = FieldSpec::make(11, 2);
    auto roots = F121->nth_roots(-F121->one(), 6);

    // oracle: exhaustive scan
    std::vector<FieldElement> scan;
    for (u64 v = 0; v < 121; ++v) {
        auto x = F121->from_packed(v);
        if (x.pow(6) == -F121->one()) scan.push_back(x);
    }
    CHECK(roots == scan);
    CHECK(roots.size() == 6);

    auto F25 = FieldSpec::make(5, 2);
    CHECK(F25->nth_roots(-F25->one(), 3).size() == 3);

    // n = 1 returns the element itself
    auto a = F121->from_packed(37);
    CHECK(F121->nth_roots(a, 1) == std::vector<FieldElement>{a});

    // x^n = 0 only for x = 0
    CHECK(F121->nth_roots(F121->zero(), 4) == std::vector<FieldElement>{F121->zero()});

    // size is 0 or gcd(n, q-1) for nonzero arguments
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        u64 n = 1 + rng.below(20);
        auto x = F121->from_packed(1 + rng.below(120));
        auto rs = F121->nth_roots(x, n);
        u64 d = std::gcd(n, static_cast<u64>(120));
        CHECK((rs.empty() || rs.size() == d));
        for (const auto& r : rs) CHECK(r.pow(static_cast<i64>(n)) == x);
    }
}

TEST_CASE("binomial residues by Lucas") {
    CHECK(binom_mod_p(11, 5, 11) == 0);  // C(11,5) = 462 = 42*11
    CHECK(binom_mod_p(13, 2, 11) == 1);  // C(13,2) = 78 = 7*11 + 1
    for (u64 k = 0; k < 40; ++k) CHECK(binom_mod_p(k, 0, 7) == 1);

    // agreement with a Pascal table
    for (u32 p : {3u, 5u, 7u, 11u, 13u}) {
        std::vector<std::vector<u32>> pas(51, std::vector<u32>(51, 0));
        for (u32 k = 0; k <= 50; ++k) {
            pas[k][0] = 1 % p;
            for (u32 j = 1; j <= k; ++j)
                pas[k][j] = ((j <= k - 1 ? pas[k - 1][j] : 0) + pas[k - 1][j - 1]) % p;
            for (u32 j = 0; j <= k; ++j) CHECK(binom_mod_p(k, j, p) == pas[k][j]);
        }
    }
}

TEST_CASE("embeddings into extension fields") {
    auto F121 = FieldSpec::make(11, 2);
    auto F4 = extension_of(F121, 2);
    CHECK(F4->q() == 14641);
    const auto& emb = F121->embedding_into(F4);

    // ring homomorphism on sampled pairs, injective on a sample
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        auto a = F121->from_packed(rng.below(121));
        auto b = F121->from_packed(rng.below(121));
        CHECK(emb.map(a + b) == emb.map(a) + emb.map(b));
        CHECK(emb.map(a * b) == emb.map(a) * emb.map(b));
    }
    CHECK(emb.map(F121->one()) == F4->one());
    CHECK_THROWS_AS(F121->embedding_into(FieldSpec::make(5, 4)), CurveError);
}

TEST_CASE("element strings") {
    auto F121 = FieldSpec::make(11, 2);
    CHECK(F121->zero().str() == "0");
    CHECK(F121->one().str() == "1");
    CHECK((F121->from_int(3) + F121->from_int(2) * F121->gen()).str() == "3+2t");
    CHECK((F121->from_int(10) * F121->gen()).str() == "10t");
}
