#include <doctest.h>

#include "curvelab/rng.hpp"
#include "curvelab/unipoly.hpp"

using namespace curvelab;

namespace {

// oracle: full scan
std::vector<FieldElement> scan_roots(const UniPoly& f) {
    std::vector<FieldElement> out;
    SpecPtr s = f.spec();
    for (u64 v = 0; v < s->q(); ++v) {
        auto x = s->from_packed(v);
        if (f.eval(x).is_zero()) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("division and gcd") {
    auto F = FieldSpec::make(11, 2);
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FieldElement> ca, cb;
        for (int i = 0; i < 4; ++i) ca.push_back(F->from_packed(rng.below(121)));
        for (int i = 0; i < 3; ++i) cb.push_back(F->from_packed(rng.below(121)));
        UniPoly a(F, ca), b(F, cb);
        if (b.is_zero()) continue;
        auto [q, r] = uni_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.deg() < b.deg()));
        UniPoly prod = a * b;
        if (!a.is_zero()) CHECK(uni_rem(prod, a).is_zero());
    }
}

TEST_CASE("root extraction matches a full scan") {
    auto F = FieldSpec::make(11, 2);
    SUBCASE("fully split sextic") {
        // Y^6 - 1 has gcd(6, 120) = 6 roots
        std::vector<FieldElement> c(7, F->zero());
        c[0] = -F->one();
        c[6] = F->one();
        UniPoly f(F, c);
        CHECK(uni_roots(f) == scan_roots(f));
        CHECK(uni_roots(f).size() == 6);
    }
    SUBCASE("random polynomials") {
        Rng rng(77);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<FieldElement> c;
            int deg = 1 + static_cast<int>(rng.below(8));
            for (int i = 0; i <= deg; ++i) c.push_back(F->from_packed(rng.below(121)));
            UniPoly f(F, c);
            if (f.deg() < 1) continue;
            CHECK(uni_roots(f) == scan_roots(f));
        }
    }
    SUBCASE("extension field") {
        auto F4 = FieldSpec::make(11, 4);
        // Y^6 + 1 over GF(11^4): gcd(6, 14640) = 6 roots since -1 is a sixth power there
        std::vector<FieldElement> c(7, F4->zero());
        c[0] = F4->one();
        c[6] = F4->one();
        UniPoly f(F4, c);
        auto roots = uni_roots(f);
        CHECK(roots.size() == 6);
        for (const auto& r : roots) CHECK(r.pow(6) == -F4->one());
    }
}
