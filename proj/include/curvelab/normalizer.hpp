#pragma once

// Normal-form recovery: given a nonsingular plane curve of degree (rootq+1)/2
// over GF(q) in the maximal class, locate its rational inflexions, find the
// triangle whose sides carry them, move the triangle to the coordinate
// triangle, and scale the resulting diagonal form to the Fermat equation.
// The witness (matrix + diagonal coefficients + scalings) is independently
// re-checkable by exact polynomial identity.

#include <string>
#include <vector>

#include "curvelab/local_analysis.hpp"
#include "curvelab/plane_curve.hpp"
#include "curvelab/rng.hpp"

namespace curvelab {

struct InflexionConfig {
    std::vector<ProjPoint> inflexions;
    std::vector<HomogPoly> tangents;  // matching order
    u32 rootq;
};

inline InflexionConfig inflexion_config(const HomogPoly& C, u32 rootq) {
    u32 n = (rootq + 1) / 2;
    if (C.degree() != n)
        fail(errc::wrong_inflexion_count,
             "curve degree " + std::to_string(C.degree()) + " is not (rootq+1)/2 = " + std::to_string(n));
    InflexionConfig cfg;
    cfg.rootq = rootq;
    for (const auto& P : rational_points(C)) {
        if (classify_point(C, P, rootq) != PointKind::inflexion) continue;
        cfg.inflexions.push_back(P);
        cfg.tangents.push_back(tangent_line(C, P));
    }
    if (cfg.inflexions.size() != static_cast<std::size_t>(3) * n)
        fail(errc::wrong_inflexion_count,
             "found " + std::to_string(cfg.inflexions.size()) + " rational inflexions, expected " +
                 std::to_string(3 * n));
    return cfg;
}

struct Triangle {
    std::array<ProjPoint, 3> vertices;
    std::array<HomogPoly, 3> sides;
};

namespace detail {

// line through two distinct points, normalized: coefficients are the cross
// product of the coordinate vectors
inline HomogPoly line_through(const ProjPoint& A, const ProjPoint& B) {
    SpecPtr s = A.spec();
    std::array<FieldElement, 3> c{A.x[1] * B.x[2] - A.x[2] * B.x[1],
                                  A.x[2] * B.x[0] - A.x[0] * B.x[2],
                                  A.x[0] * B.x[1] - A.x[1] * B.x[0]};
    HomogPoly L(s, 1);
    Exps e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};
    L.add_term(e0, c[0]);
    L.add_term(e1, c[1]);
    L.add_term(e2, c[2]);
    if (L.is_zero()) fail(errc::bad_parameters, "line through coincident points");
    return L.normalized();
}

inline ProjPoint line_intersection(const HomogPoly& L1, const HomogPoly& L2) {
    SpecPtr s = L1.spec();
    std::array<FieldElement, 3> a{L1.coeff({1, 0, 0}), L1.coeff({0, 1, 0}), L1.coeff({0, 0, 1})};
    std::array<FieldElement, 3> b{L2.coeff({1, 0, 0}), L2.coeff({0, 1, 0}), L2.coeff({0, 0, 1})};
    FieldElement x = a[1] * b[2] - a[2] * b[1];
    FieldElement y = a[2] * b[0] - a[0] * b[2];
    FieldElement z = a[0] * b[1] - a[1] * b[0];
    if (x.is_zero() && y.is_zero() && z.is_zero())
        fail(errc::no_triangle, "candidate sides are not in general position");
    (void)s;
    return ProjPoint::make(x, y, z);
}

}  // namespace detail

// Sides are the lines carrying exactly (rootq+1)/2 config points. (Lines with
// exactly three config points, one from each side, exist whenever n is odd,
// so a plain ">= 3" incidence cut does not isolate the sides.)
inline Triangle find_triangle(const InflexionConfig& cfg) {
    u32 n = (cfg.rootq + 1) / 2;
    const auto& pts = cfg.inflexions;
    if (pts.size() < 2) fail(errc::no_triangle, "not enough inflexions");

    std::map<std::string, std::pair<HomogPoly, i64>> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            HomogPoly L = detail::line_through(pts[i], pts[j]);
            lines.emplace(L.str(), std::make_pair(L, 0));
        }
    for (auto& [key, entry] : lines) {
        for (const auto& P : pts)
            if (entry.first.evaluate(P).is_zero()) entry.second++;
    }

    std::vector<HomogPoly> sides;
    for (const auto& [key, entry] : lines)
        if (entry.second == static_cast<i64>(n)) sides.push_back(entry.first);
    if (sides.size() != 3)
        fail(errc::no_triangle, "expected exactly 3 lines carrying (rootq+1)/2 inflexions, found " +
                                    std::to_string(sides.size()));

    std::array<ProjPoint, 3> verts{detail::line_intersection(sides[1], sides[2]),
                                   detail::line_intersection(sides[0], sides[2]),
                                   detail::line_intersection(sides[0], sides[1])};
    if (verts[0] == verts[1] || verts[0] == verts[2] || verts[1] == verts[2])
        fail(errc::no_triangle, "triangle vertices are not distinct");
    // proper trilateral: the vertex opposite a side must stay off it
    for (int i = 0; i < 3; ++i)
        if (sides[static_cast<std::size_t>(i)].evaluate(verts[static_cast<std::size_t>(i)]).is_zero())
            fail(errc::no_triangle, "triangle is degenerate");

    // theorem-shape checks on the configuration
    for (const auto& P : pts)
        for (const auto& V : verts)
            if (P == V) fail(errc::no_triangle, "an inflexion coincides with a vertex");
    for (const auto& V : verts) {
        i64 through = 0;
        for (const auto& T : cfg.tangents)
            if (T.evaluate(V).is_zero()) ++through;
        if (through != static_cast<i64>(n))
            fail(errc::no_triangle, "a vertex does not carry (rootq+1)/2 inflexional tangents");
    }
    for (const auto& S : sides)
        for (const auto& T : cfg.tangents)
            if (S == T) fail(errc::no_triangle, "a side is an inflexional tangent");

    // canonical ordering: vertices sorted, sides matched opposite
    std::array<int, 3> ord{0, 1, 2};
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        return verts[static_cast<std::size_t>(a)] < verts[static_cast<std::size_t>(b)];
    });
    Triangle tri{{verts[static_cast<std::size_t>(ord[0])], verts[static_cast<std::size_t>(ord[1])],
                  verts[static_cast<std::size_t>(ord[2])]},
                 {sides[static_cast<std::size_t>(ord[0])], sides[static_cast<std::size_t>(ord[1])],
                  sides[static_cast<std::size_t>(ord[2])]}};
    return tri;
}

struct NormalizationWitness {
    Mat3 map;                              // C(map * X) is diagonal
    std::array<FieldElement, 3> diag;      // (a, b, c) of the diagonal form
    std::array<FieldElement, 2> scaling;   // (s, t) with s^n = a/c, t^n = b/c
    FieldElement global_scale;             // final form = global_scale * Fermat

    std::string str() const {
        return map.str() + "|" + diag[0].str() + "," + diag[1].str() + "," + diag[2].str() + "|" +
               scaling[0].str() + "," + scaling[1].str();
    }
};

// Exact recomputation: transform by the witness map, apply the scalings, and
// compare with the Fermat form up to one global scalar.
inline bool verify_witness(const HomogPoly& C, const NormalizationWitness& w) {
    SpecPtr s = C.spec();
    if (w.map.s != s) return false;
    u32 n = C.degree();
    if (w.map.det().is_zero() || w.scaling[0].is_zero() || w.scaling[1].is_zero()) return false;
    Mat3 scale = Mat3::identity(s);
    scale.at(0, 0) = w.scaling[0].inv();
    scale.at(1, 1) = w.scaling[1].inv();
    HomogPoly moved = transform(C, w.map.mul(scale));
    HomogPoly fermat(s, n);
    fermat.add_term({n, 0, 0}, s->one());
    fermat.add_term({0, n, 0}, s->one());
    fermat.add_term({0, 0, n}, s->one());
    if (w.global_scale.is_zero()) return false;
    return moved == fermat.scaled(w.global_scale);
}

// Theorem-backed normal-form recovery. The vertex-to-axis assignment and the
// n-th-root scalings are searched exhaustively and the lexicographically
// smallest serialized witness wins, so runs are byte-reproducible.
inline NormalizationWitness normalize(const HomogPoly& C, u32 rootq) {
    SpecPtr s = C.spec();
    u32 n = (rootq + 1) / 2;
    InflexionConfig cfg = inflexion_config(C, rootq);
    Triangle tri = find_triangle(cfg);

    static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    bool any_diagonal = false;
    bool any_scaling = false;
    std::optional<NormalizationWitness> best;
    for (const auto& perm : kPerms) {
        Mat3 M{s, {}};
        for (int col = 0; col < 3; ++col)
            for (int row = 0; row < 3; ++row)
                M.at(row, col) = tri.vertices[static_cast<std::size_t>(perm[col])].x[static_cast<std::size_t>(row)];
        if (M.det().is_zero()) continue;
        HomogPoly moved = transform(C, M);
        std::array<FieldElement, 3> diag{moved.coeff({n, 0, 0}), moved.coeff({0, n, 0}),
                                         moved.coeff({0, 0, n})};
        bool diagonal = moved.terms().size() == 3 && !diag[0].is_zero() && !diag[1].is_zero() &&
                        !diag[2].is_zero();
        if (!diagonal) continue;
        any_diagonal = true;
        auto s_roots = s->nth_roots(diag[0] * diag[2].inv(), n);
        auto t_roots = s->nth_roots(diag[1] * diag[2].inv(), n);
        if (s_roots.empty() || t_roots.empty()) continue;
        any_scaling = true;
        for (const auto& sr : s_roots)
            for (const auto& tr : t_roots) {
                NormalizationWitness w{M, diag, {sr, tr}, diag[2]};
                if (!best || w.str() < best->str()) best = w;
            }
    }
    if (!best) {
        if (any_diagonal && !any_scaling)
            fail(errc::no_scaling,
                 "diagonal coefficients are not n-th power ratios over GF(q); recheck that the input "
                 "is maximal of degree (rootq+1)/2");
        fail(errc::not_diagonal,
             "no vertex assignment diagonalizes the form; recheck that the input is maximal of "
             "degree (rootq+1)/2");
    }
    if (!verify_witness(C, *best)) fail(errc::internal, "constructed witness fails verification");
    return *best;
}

// Seeded invertible matrix over the spec (entries drawn canonically, singular
// draws rejected).
inline Mat3 random_gl3(SpecPtr s, Rng& rng) {
    for (int tries = 0; tries < 10000; ++tries) {
        Mat3 M{s, {}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M.at(i, j) = s->from_packed(rng.below(s->q()));
        if (!M.det().is_zero()) return M;
    }
    fail(errc::internal, "could not draw an invertible matrix");
}

}  // namespace curvelab
