#include "oracles.hpp"
#include "reflexkit/catalog.hpp"
#include "reflexkit/enumerator.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace reflexkit;

namespace {

std::set<CanonicalForm> forms(const std::vector<PolytopeClass>& cs) {
    std::set<CanonicalForm> out;
    for (const auto& c : cs) out.insert(c.canonical);
    return out;
}

// Lattice polygons in [-2, 2]^2 whose only interior lattice point is the
// origin, from every vertex subset of the box, deduplicated up to GL(2, Z).
std::set<CanonicalForm> one_interior_point_polygons() {
    std::vector<LatticePoint> box;
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
            if (x || y) box.push_back({x, y});
    std::set<CanonicalForm> out;
    std::vector<LatticePoint> cur;
    auto visit = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() >= 3) {
            // A point that is not a vertex stays a non-vertex in every superset.
            if (oracle::brute_force_vertices(cur).size() != cur.size()) return;
            bool full = false;
            for (std::size_t i = 2; i < cur.size() && !full; ++i)
                full = oracle::det_of({cur[1] - cur[0], cur[i] - cur[0]}) != 0;
            if (full) {
                const auto inner = oracle::interior_points(cur);
                // Interior points persist in supersets too.
                if (inner.size() > 1 || (inner.size() == 1 && !inner.front().is_zero())) return;
                if (inner.size() == 1) out.insert(canonical_form(Polytope::hull(cur)));
            }
        }
        if (cur.size() == 6) return;
        for (std::size_t i = from; i < box.size(); ++i) {
            cur.push_back(box[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    visit(visit, 0);
    return out;
}

} // namespace

TEST_CASE("sixteen classes of reflexive polygons", "[enumerator]") {
    const auto e = run_enumeration_2d(3);
    CHECK(e.classes.size() == 16);
    CHECK(e.probe_size == 7);
    CHECK(e.probe_hits.empty());
    CHECK(e.reflexive_hits >= 16);
    std::map<std::size_t, std::size_t> by_vertices;
    for (const auto& c : e.classes) {
        ++by_vertices[c.representative.vertices().size()];
        CHECK(reflexive(c.representative));
        CHECK(c.canonical == canonical_form(c.representative));
        CHECK(c.provenance.find("box r=3") == 0);
    }
    CHECK(by_vertices == std::map<std::size_t, std::size_t>{{3, 5}, {4, 7}, {5, 3}, {6, 1}});
    for (const auto& c : e.classes)
        if (c.representative.vertices().size() == 6) CHECK(are_isomorphic(c.representative, catalog::hexagon()));
}

TEST_CASE("the list is stable under enlarging the box", "[enumerator]") {
    const auto three = forms(enumerate_reflexive_2d(3));
    CHECK(forms(enumerate_reflexive_2d(2)) == three);
    CHECK(forms(enumerate_reflexive_2d(4)) == three);
}

TEST_CASE("enumeration agrees with the one-interior-point oracle", "[enumerator][oracle]") {
    const auto expected = one_interior_point_polygons();
    CHECK(expected.size() == 16);
    CHECK(forms(enumerate_reflexive_2d(3)) == expected);
}

TEST_CASE("boundary points of a polygon and its dual add up to twelve", "[enumerator][oracle]") {
    std::multiset<Integer> counts;
    for (const auto& c : enumerate_reflexive_2d(3)) {
        const Polytope d = dual(c.representative);
        const Integer b = oracle::polygon_boundary_points(c.representative.vertices());
        const Integer bd = oracle::polygon_boundary_points(d.vertices());
        CHECK(b + bd == 12);
        counts.insert(b);
    }
    // The dual of a class is again a class, so the counts are symmetric about 6.
    std::multiset<Integer> mirrored;
    for (const auto& b : counts) mirrored.insert(12 - b);
    CHECK(counts == mirrored);
}

TEST_CASE("the list is closed under duality", "[enumerator]") {
    const auto cs = enumerate_reflexive_2d(3);
    const auto all = forms(cs);
    std::size_t self_dual = 0;
    for (const auto& c : cs) {
        const CanonicalForm d = canonical_form(dual(c.representative));
        CHECK(all.count(d) == 1);
        if (d == c.canonical) ++self_dual;
    }
    CHECK(self_dual == 4);
}

TEST_CASE("parallel enumeration is deterministic", "[enumerator]") {
    const auto a = run_enumeration_2d(3, 7, 1);
    const auto b = run_enumeration_2d(3, 7, 4);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].canonical == b.classes[i].canonical);
        CHECK(a.classes[i].representative == b.classes[i].representative);
        CHECK(a.classes[i].provenance == b.classes[i].provenance);
    }
    CHECK(a.subsets_examined == b.subsets_examined);
    CHECK(a.reflexive_hits == b.reflexive_hits);
}

TEST_CASE("enumeration preconditions", "[enumerator]") {
    CHECK_THROWS_AS(run_enumeration_2d(1), PreconditionError);
    CHECK_THROWS_AS(run_enumeration_2d(5000), PreconditionError);
}

TEST_CASE("planar helpers", "[enumerator]") {
    using plane::Pt;
    CHECK(plane::cross({1, 0}, {0, 1}) == 1);
    CHECK(plane::gcd64(-4, 6) == 2);
    const auto pts = plane::candidate_points(2);
    CHECK(pts.size() == 16);
    for (const Pt& p : pts) CHECK(plane::gcd64(p[0], p[1]) == 1);
    CHECK(plane::reflexive_ccw({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK_FALSE(plane::reflexive_ccw({{1, 0}, {0, 1}, {-3, -3}}));
}

TEST_CASE("corpus verification", "[enumerator]") {
    std::vector<Polytope> corpus;
    for (const auto& c : enumerate_reflexive_2d(3)) {
        corpus.push_back(c.representative);
        corpus.push_back(dual(c.representative));
    }
    corpus.push_back(catalog::cross_polytope(3));
    corpus.push_back(free_sum(catalog::hexagon(), catalog::hexagon()));
    corpus.push_back(free_sum(catalog::smooth_simplex(2), catalog::smooth_simplex(2)));
    corpus.push_back(hull({{2, 0}, {0, 2}, {-2, -2}}));
    const CorpusSummary s = verify_corpus(corpus, 2);
    CHECK(s.input_count == corpus.size());
    CHECK(s.filtered_out == 1);
    CHECK(s.checked == corpus.size() - 1);
    CHECK(s.violations.empty());
    CHECK(s.ok());
    std::multiset<std::string> eq;
    for (const auto& e : s.equality_cases) eq.insert(e.which + ":" + e.variety);
    CHECK(eq.count("i:S3_power^1") == 2);
    CHECK(eq.count("i:S3_power^2") == 1);
    CHECK(eq.count("ii:projective_power(2)^2") == 1);
    CHECK(eq.count("ii:projective_power(1)^3") == 1);
    // Each planar class occurs twice, once listed and once as a dual. The
    // cubic triangle and the square are equality cases but not smooth.
    CHECK(eq.count("ii:projective_power(2)^1") == 2);
    CHECK(eq.count("ii:projective_power(1)^2") == 2);
    CHECK(eq.count("ii:other") == 4);
    CHECK(eq.size() == 13);
    CHECK(verify_corpus(corpus, 1).histogram == s.histogram);
}
