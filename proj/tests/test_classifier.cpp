#include "oracles.hpp"
#include "reflexkit/catalog.hpp"
#include "reflexkit/classifier.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace reflexkit;

namespace {

const Polytope p2 = catalog::smooth_simplex(2);
const Polytope cubic = catalog::cubic_surface_triangle();
const Polytope hex = catalog::hexagon();

using Partition = std::vector<std::vector<std::size_t>>;

std::size_t rank_of(const Polytope& p, const std::vector<std::size_t>& idx) {
    std::vector<LatticePoint> pts;
    for (std::size_t v : idx) pts.push_back(p.vertex(v));
    return rank_of_points(std::span<const LatticePoint>(pts));
}

void all_partitions(std::size_t k, std::size_t n, Partition& cur, std::vector<Partition>& out) {
    if (k == n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(k);
        all_partitions(k + 1, n, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({k});
    all_partitions(k + 1, n, cur, out);
    cur.pop_back();
}

// The finest split of the vertex set whose spans add up to the whole space,
// by scanning every set partition.
Partition finest_split_oracle(const Polytope& p) {
    std::vector<Partition> parts;
    Partition cur;
    all_partitions(0, p.vertices().size(), cur, parts);
    Partition best;
    for (auto& q : parts) {
        std::size_t total = 0;
        for (const auto& b : q) total += rank_of(p, b);
        if (total == p.dim() && q.size() > best.size()) best = q;
    }
    for (auto& b : best) std::sort(b.begin(), b.end());
    std::sort(best.begin(), best.end());
    return best;
}

Partition as_partition(const std::vector<Factor>& fs) {
    Partition out;
    for (const auto& f : fs) {
        auto v = f.vertices;
        std::sort(v.begin(), v.end());
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntMatrix> block_forms(const Decomposition& d) {
    std::vector<IntMatrix> out;
    for (const auto& b : d.blocks) out.push_back(canonical_form(b.local.polytope).matrix);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("bounds on the number of vertices", "[classifier]") {
    const auto a = verify_bounds(p2);
    CHECK(a.delta == 2);
    CHECK(a.bound_3n);
    CHECK(a.bound_delta == true);
    CHECK(a.equality_ii);
    CHECK_FALSE(a.equality_i);
    CHECK(a.passes());
    const auto b = verify_bounds(cubic);
    CHECK(b.equality_ii);
    const auto h = verify_bounds(hex);
    CHECK(h.delta == 0);
    CHECK_FALSE(h.bound_delta.has_value());
    CHECK(h.equality_i);
    CHECK_FALSE(h.equality_ii);
    const auto c = verify_bounds(catalog::cross_polytope(3));
    CHECK(c.delta == 1);
    CHECK(c.equality_ii);
    const auto s = verify_bounds(catalog::smooth_simplex(3));
    CHECK(s.delta == 3);
    CHECK(s.equality_ii);
    const auto pentagon = verify_bounds(hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}));
    CHECK(pentagon.delta == 0);
    CHECK_FALSE(pentagon.bound_delta.has_value());
    CHECK_FALSE(pentagon.equality_i);
    CHECK(pentagon.passes());
    std::vector<LatticePoint> cube;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) cube.push_back({x, y, z});
    CHECK_THROWS_AS(verify_bounds(hull(cube)), PreconditionError);
    CHECK_THROWS_AS(verify_bounds(hull({{2, 0}, {0, 2}, {-2, -2}})), PreconditionError);
}

TEST_CASE("restriction to a span", "[classifier]") {
    const Polytope s = free_sum(p2, p2);
    std::vector<std::size_t> first;
    for (std::size_t v = 0; v < s.vertices().size(); ++v)
        if (s.vertex(v)[2] == 0 && s.vertex(v)[3] == 0) first.push_back(v);
    const LocalPolytope l = restrict_to_span(s, first);
    CHECK(l.span_basis.size() == 2);
    CHECK(are_isomorphic(l.polytope, p2));
    // The segment from (1,1,0) to (-1,-1,0) is [-1,1] in its saturated line.
    const Polytope c = hull({{1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {-1, 1, 0}, {0, 0, 1}, {0, 0, -1}});
    const LocalPolytope seg = restrict_to_span(c, {c.index_of_vertex({-1, -1, 0}), c.index_of_vertex({1, 1, 0})});
    CHECK(seg.polytope.vertices() == std::vector<LatticePoint>{{-1}, {1}});
}

TEST_CASE("factor identification", "[classifier]") {
    CHECK(identify_factor(p2).kind == FactorKind::smooth_simplex);
    CHECK(identify_factor(cubic).kind == FactorKind::other);
    CHECK(identify_factor(hex).kind == FactorKind::hexagon);
    CHECK(identify_factor(dual(hex)).kind == FactorKind::hexagon);
    CHECK(identify_factor(catalog::cross_polytope(1)).kind == FactorKind::smooth_simplex);
    CHECK(identify_factor(hull({{2}, {-1}})).kind == FactorKind::segment);
    CHECK(identify_factor(catalog::smooth_simplex(4)).kind == FactorKind::smooth_simplex);
}

TEST_CASE("free-sum decomposition", "[classifier]") {
    CHECK(free_sum_decompose(catalog::cross_polytope(2)).size() == 2);
    CHECK(free_sum_decompose(catalog::cross_polytope(4)).size() == 4);
    CHECK(free_sum_decompose(hex).size() == 1);
    CHECK(free_sum_decompose(p2).size() == 1);
    const Polytope hh = free_sum(hex, hex);
    const auto fs = free_sum_decompose(hh);
    REQUIRE(fs.size() == 2);
    for (const auto& f : fs) {
        CHECK(f.vertices.size() == 6);
        CHECK(identify_factor(restrict_to_span(hh, f.vertices).polytope).kind == FactorKind::hexagon);
    }
}

TEST_CASE("free-sum decomposition agrees with a partition scan", "[classifier][oracle]") {
    for (const Polytope& p : {catalog::cross_polytope(2), catalog::cross_polytope(3), hex, p2, cubic,
                              free_sum(p2, catalog::cross_polytope(1)), free_sum(p2, p2),
                              hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 0}, {0, 0, -1}})})
        CHECK(as_partition(free_sum_decompose(p)) == finest_split_oracle(p));
}

TEST_CASE("free-sum factors survive unimodular embeddings", "[classifier][property]") {
    std::mt19937_64 rng(31);
    const Polytope hh = free_sum(hex, hex);
    const Polytope pp = free_sum(p2, p2);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix u = random_unimodular(4, rng);
        const Polytope a = hh.transformed(u);
        const auto fa = free_sum_decompose(a);
        REQUIRE(fa.size() == 2);
        for (const auto& f : fa)
            CHECK(identify_factor(restrict_to_span(a, f.vertices).polytope).kind == FactorKind::hexagon);
        CHECK(classify_equality_variety(a) == VarietyClass{VarietyKind::s3_power, 0, 2});
        const Polytope b = pp.transformed(u);
        CHECK(free_sum_decompose(b).size() == 2);
        CHECK(classify_equality_variety(b) == VarietyClass{VarietyKind::projective_power, 2, 2});
    }
}

TEST_CASE("decomposition in the equality case", "[classifier]") {
    const Polytope c3 = catalog::cross_polytope(3);
    for (std::size_t f = 0; f < c3.facets().size(); ++f) {
        const Decomposition d = decompose_equality(c3, f);
        CHECK(d.delta == 1);
        CHECK(d.remaining.size() == 3);
        REQUIRE(d.blocks.size() == 3);
        for (const auto& b : d.blocks) {
            CHECK(b.e.size() == 1);
            LatticePoint sum = c3.vertex(b.f);
            sum += c3.vertex(b.e.front());
            CHECK(sum.is_zero());
            CHECK(b.local.polytope.vertices() == std::vector<LatticePoint>{{-1}, {1}});
        }
    }
    const Decomposition d = decompose_equality(p2);
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks.front().e.size() == 2);
    CHECK(are_isomorphic(d.blocks.front().local.polytope, p2));
    const Decomposition dc = decompose_equality(cubic);
    REQUIRE(dc.blocks.size() == 1);
    // The block is the whole triangle, which is not unimodular to P2.
    CHECK(identify_factor(dc.blocks.front().local.polytope).kind == FactorKind::other);

    const Polytope pp = free_sum(p2, p2);
    const Decomposition dp = decompose_equality(pp);
    REQUIRE(dp.blocks.size() == 2);
    std::vector<LatticePoint> spans;
    for (const auto& b : dp.blocks) {
        CHECK(b.e.size() == 2);
        CHECK(are_isomorphic(b.local.polytope, p2));
        spans.insert(spans.end(), b.local.span_basis.begin(), b.local.span_basis.end());
    }
    CHECK(rank_of_points(std::span<const LatticePoint>(spans)) == 4);
    CHECK(cone_multiplicity(spans) == 1);

    CHECK_THROWS_AS(decompose_equality(hex), PreconditionError);
    CHECK_THROWS_AS(decompose_equality(p2, 7), PreconditionError);
}

TEST_CASE("decomposition does not depend on the base facet", "[classifier][property]") {
    std::mt19937_64 rng(37);
    for (const Polytope& base : {p2, cubic, catalog::cross_polytope(2), catalog::cross_polytope(3),
                                 dual(catalog::cross_polytope(2)), free_sum(p2, p2),
                                 free_sum(p2, catalog::smooth_simplex(2).transformed(IntMatrix{{1, 1}, {0, 1}})),
                                 catalog::smooth_simplex(4)}) {
        const Polytope p = base.transformed(random_unimodular(base.dim(), rng));
        const auto ref = block_forms(decompose_equality(p, 0));
        for (std::size_t f = 1; f < p.facets().size(); ++f) CHECK(block_forms(decompose_equality(p, f)) == ref);
    }
}

TEST_CASE("classification of equality cases", "[classifier]") {
    CHECK(classify_equality_variety(hex) == VarietyClass{VarietyKind::s3_power, 0, 1});
    CHECK(classify_equality_variety(p2) == VarietyClass{VarietyKind::projective_power, 2, 1});
    CHECK(classify_equality_variety(cubic).kind == VarietyKind::other);
    CHECK(classify_equality_variety(catalog::cross_polytope(4)) == VarietyClass{VarietyKind::projective_power, 1, 4});
    CHECK(classify_equality_variety(free_sum(p2, p2)) == VarietyClass{VarietyKind::projective_power, 2, 2});
    CHECK(classify_equality_variety(catalog::smooth_simplex(5)) == VarietyClass{VarietyKind::projective_power, 5, 1});
    CHECK(classify_equality_variety(hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}})).kind == VarietyKind::other);
    CHECK(std::string(to_string(VarietyKind::s3_power)) == "S3_power");
    CHECK(std::string(to_string(VarietyKind::projective_power)) == "projective_power");
}
