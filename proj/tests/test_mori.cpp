#include "oracles.hpp"
#include "reflexkit/catalog.hpp"
#include "reflexkit/enumerator.hpp"
#include "reflexkit/mori.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace reflexkit;

namespace {

const Polytope p2 = catalog::smooth_simplex(2);
const Polytope cubic = catalog::cubic_surface_triangle();
const Polytope hex = catalog::hexagon();

Integer det2(const LatticePoint& a, const LatticePoint& b) { return a[0] * b[1] - a[1] * b[0]; }

// Intersection numbers on a toric surface: for the curve D_w with neighbours
// v1, w, v2 in counter-clockwise order, d1 = det(v1, w), d2 = det(w, v2),
//   D_v1 . D_w = 1/d1,  D_v2 . D_w = 1/d2,  D_w . D_w = -det(v1, v2)/(d1 d2).
struct SurfaceCurve {
    Rational with_prev, with_next, self, degree;
};

SurfaceCurve surface_curve(const LatticePoint& v1, const LatticePoint& w, const LatticePoint& v2) {
    const Integer d1 = det2(v1, w), d2 = det2(w, v2);
    SurfaceCurve c;
    c.with_prev = Rational(1) / Rational(d1);
    c.with_next = Rational(1) / Rational(d2);
    c.self = -Rational(det2(v1, v2)) / Rational(d1 * d2);
    c.degree = c.with_prev + c.with_next + c.self;
    return c;
}

// Neighbours of vertex w of a polygon in counter-clockwise order.
std::pair<LatticePoint, LatticePoint> neighbours(const Polytope& p, const LatticePoint& w) {
    std::optional<LatticePoint> prev, next;
    for (const auto& v : p.vertices()) {
        if (v == w) continue;
        // v is adjacent to w iff all other vertices lie on one side of the line vw.
        bool left = true, right = true;
        for (const auto& x : p.vertices()) {
            if (x == v || x == w) continue;
            const Integer s = det2(w - v, x - v);
            left = left && s > 0;
            right = right && s < 0;
        }
        if (!(left || right)) continue;
        if (det2(v, w) > 0) prev = v;
        else next = v;
    }
    return {*prev, *next};
}

} // namespace

TEST_CASE("wall relations", "[mori]") {
    for (const auto& w : ridges(p2)) {
        const Relation r = wall_relation(p2, w);
        CHECK(is_relation(p2, r));
        CHECK(r.degree == 3);
        for (std::size_t v = 0; v < 3; ++v) CHECK(r.coefficient(v) == 1);
        CHECK(wall_degree_by_pairing(p2, w) == 3);
    }
    for (const auto& w : ridges(cubic)) {
        const Relation r = wall_relation(cubic, w, WallSide::b);
        CHECK(is_relation(cubic, r));
        CHECK(r.degree == 3);
    }
    const Polytope c = catalog::cross_polytope(2);
    const std::size_t e2 = c.index_of_vertex({0, 1});
    for (const auto& w : ridges(c)) {
        if (w.common != std::vector<std::size_t>{e2}) continue;
        const Relation r = wall_relation(c, w);
        CHECK(r.degree == 2);
        CHECK(r.coefficients.size() == 2);
        CHECK(r.coefficient(c.index_of_vertex({1, 0})) == 1);
        CHECK(r.coefficient(c.index_of_vertex({-1, 0})) == 1);
    }
}

TEST_CASE("invalid walls are rejected", "[mori]") {
    auto w = ridges(p2).front();
    Wall bad = w;
    bad.facet_b = bad.facet_a;
    CHECK_THROWS_AS(wall_relation(p2, bad), PreconditionError);
    bad = w;
    bad.opp_a = bad.opp_b;
    CHECK_THROWS_AS(wall_relation(p2, bad), PreconditionError);
    std::vector<LatticePoint> cube;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) cube.push_back({a, b, c});
    CHECK_THROWS_AS(wall_relation(hull(cube), w), PreconditionError);
}

TEST_CASE("curve classes of the two triangles and the hexagon", "[mori]") {
    for (const auto& w : ridges(p2)) {
        const CurveClass c = curve_class(p2, w);
        CHECK(c.b == 1);
        CHECK(c.exact_degree == 3);
    }
    for (const auto& w : ridges(cubic)) {
        const CurveClass c = curve_class(cubic, w);
        CHECK(c.mult_wall == 1);
        CHECK(c.mult_other == 3);
        CHECK(c.mult_base == 3);
        CHECK(c.b == Rational(1, 3));
        CHECK(c.exact_degree == 1);
    }
    for (const auto& w : ridges(hex)) {
        const CurveClass c = curve_class(hex, w);
        CHECK(c.b == 1);
        CHECK(c.exact_degree == 1);
    }
}

TEST_CASE("pseudo-index reports", "[mori]") {
    const auto a = pseudo_index_report(p2);
    CHECK(a.upper_bound == 3);
    CHECK(a.min_invariant_degree == 3);
    CHECK(a.exact);
    const auto b = pseudo_index_report(cubic);
    CHECK(b.upper_bound == 3);
    CHECK(b.min_invariant_degree == 1);
    CHECK_FALSE(b.exact);
    CHECK(b.bound == 1);
    const auto c = pseudo_index_report(hex);
    CHECK(c.upper_bound == 1);
    CHECK(c.min_invariant_degree == 1);
    CHECK(c.exact);
    CHECK_THROWS_AS(pseudo_index_report(hull({{2, 0}, {0, 2}, {-2, -2}})), PreconditionError);
}

TEST_CASE("surface curve classes agree with intersection numbers", "[mori][oracle]") {
    for (const auto& cls : enumerate_reflexive_2d(3)) {
        for (const Polytope& p : {cls.representative, dual(cls.representative)}) {
            for (const auto& w : ridges(p)) {
                const LatticePoint& apex = p.vertex(w.common.front());
                const auto [prev, next] = neighbours(p, apex);
                const SurfaceCurve expected = surface_curve(prev, apex, next);
                for (WallSide side : {WallSide::a, WallSide::b}) {
                    const CurveClass c = curve_class(p, w, side);
                    CHECK(c.exact_degree == expected.degree);
                    CHECK(c.b * c.gamma.coefficient(p.index_of_vertex(prev)) == expected.with_prev);
                    CHECK(c.b * c.gamma.coefficient(p.index_of_vertex(next)) == expected.with_next);
                    CHECK(c.b * c.gamma.coefficient(w.common.front()) == expected.self);
                }
            }
        }
    }
}

TEST_CASE("wall invariants over random images", "[mori][property]") {
    std::mt19937_64 rng(5);
    const std::vector<Polytope> corpus{p2,
                                       cubic,
                                       hex,
                                       catalog::cross_polytope(3),
                                       catalog::smooth_simplex(3),
                                       free_sum(cubic, catalog::cross_polytope(1)),
                                       hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}}),
                                       dual(hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}))};
    for (const Polytope& base : corpus) {
        REQUIRE(reflexive(base));
        if (!base.is_simplicial()) continue;
        for (int t = 0; t < 5; ++t) {
            const Polytope p = base.transformed(random_unimodular(base.dim(), rng));
            const bool smooth = is_smooth(p);
            for (const auto& w : ridges(p)) {
                const CurveClass a = curve_class(p, w, WallSide::a);
                const CurveClass b = curve_class(p, w, WallSide::b);
                for (const CurveClass* c : {&a, &b}) {
                    CHECK(is_relation(p, c->gamma));
                    CHECK(c->gamma.degree == wall_degree_by_pairing(p, w, c->side));
                    CHECK(c->b > 0);
                    CHECK(c->b <= 1);
                    if (smooth) CHECK(c->b == 1);
                    CHECK(is_integral(c->exact_degree));
                    // Support: the opposite vertex and the base facet.
                    for (const auto& [v, q] : c->gamma.coefficients)
                        CHECK((v == c->opposite || std::find(w.common.begin(), w.common.end(), v) != w.common.end() ||
                               v == (c->side == WallSide::a ? w.opp_a : w.opp_b)));
                }
                // Both sides give the same ray, indeed the same class.
                for (std::size_t v = 0; v < p.vertices().size(); ++v)
                    CHECK(a.b * a.gamma.coefficient(v) == b.b * b.gamma.coefficient(v));
            }
            const auto r = pseudo_index_report(p);
            CHECK(r.min_invariant_degree <= Rational(r.upper_bound));
            CHECK(r.min_invariant_degree >= 1);
            if (smooth) CHECK(r.min_invariant_degree == Rational(r.upper_bound));
        }
    }
}
