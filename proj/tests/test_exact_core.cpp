#include "oracles.hpp"
#include "reflexkit/exact_core.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace reflexkit;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int bound = 5) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

oracle::Mat to_mat(const IntMatrix& m) {
    oracle::Mat out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

bool is_diagonal_divisibility_chain(const SmithForm& s) {
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j && s.d(i, j) != 0) return false;
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        if (s.diagonal[i] < 0) return false;
        if (s.diagonal[i] == 0 && s.diagonal[i + 1] != 0) return false;
        if (s.diagonal[i] != 0 && s.diagonal[i + 1] % s.diagonal[i] != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("integers and rationals are exact", "[exact_core]") {
    Integer big = 1;
    for (int i = 0; i < 40; ++i) big *= 1000003;
    CHECK(big / 1000003 * 1000003 == big);
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-6, 3)) == "-2");
    CHECK(floor_div(Integer(-7), Integer(2)) == -4);
    CHECK(floor_div(Integer(7), Integer(-2)) == -4);
    CHECK(floor_div(Integer(6), Integer(3)) == 2);
}

TEST_CASE("points carry their lattice and pair only across lattices", "[exact_core]") {
    LatticePoint v{1, 2};
    LatticePoint u({3, -1}, Lattice::M);
    CHECK(pairing(v, u) == 1);
    CHECK_THROWS_AS(pairing(v, v), PreconditionError);
    CHECK_THROWS_AS(pairing(v, LatticePoint({1, 2, 3}, Lattice::M)), PreconditionError);
    try {
        pairing(v, v);
    } catch (const PreconditionError& e) {
        CHECK(e.reason() == "same_ambient");
    }
    CHECK(dual_lattice(Lattice::N) == Lattice::M);
    CHECK(primitive(LatticePoint{4, -6}) == LatticePoint{2, -3});
    CHECK(is_primitive(LatticePoint{2, -3}));
    CHECK_FALSE(is_primitive(LatticePoint{0, 0}));
    CHECK_THROWS_AS(primitive(LatticePoint{0, 0}), PreconditionError);
}

TEST_CASE("determinant agrees with cofactor expansion", "[exact_core][oracle]") {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 20; ++t) {
            const IntMatrix a = random_matrix(n, n, rng);
            CHECK(determinant(a) == oracle::cofactor_det(to_mat(a)));
            CHECK(determinant(to_rational(a)) == Rational(oracle::cofactor_det(to_mat(a))));
        }
    CHECK(determinant(IntMatrix{{2, 0}, {0, 3}}) == 6);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), PreconditionError);
}

TEST_CASE("rank and row reduction", "[exact_core]") {
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(IntMatrix{{1, 0, 0}, {0, 1, 0}}) == 2);
    CHECK(rank(IntMatrix(3, 3)) == 0);
    std::vector<LatticePoint> pts{{1, 1, 0}, {2, 2, 0}, {0, 0, 1}};
    CHECK(rank_of_points(std::span<const LatticePoint>(pts)) == 2);
}

TEST_CASE("inverse agrees with the adjugate", "[exact_core][oracle]") {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 30) {
        const std::size_t n = 1 + done % 4;
        const IntMatrix a = random_matrix(n, n, rng);
        if (determinant(a) == 0) {
            CHECK_THROWS_AS(inverse(to_rational(a)), PreconditionError);
            continue;
        }
        const RationalMatrix inv = inverse(to_rational(a));
        const auto expected = oracle::adjugate_inverse(to_mat(a));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(inv(i, j) == expected[i][j]);
        CHECK(inv * to_rational(a) == RationalMatrix::identity(n));
        ++done;
    }
}

TEST_CASE("coordinates in a basis", "[exact_core]") {
    std::vector<LatticePoint> basis{{1, 0}, {1, 2}};
    const auto c = coordinates_in(std::span<const LatticePoint>(basis), LatticePoint{3, 4});
    CHECK(c == std::vector<Rational>{1, 2});
    std::vector<LatticePoint> line{{1, 1, 0}};
    CHECK_THROWS_AS(coordinates_in(std::span<const LatticePoint>(line), LatticePoint{1, 0, 0}),
                    PreconditionError);
}

TEST_CASE("Hermite normal form", "[exact_core][property]") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
        const IntMatrix a = random_matrix(r, c, rng);
        const HermiteForm h = hermite_normal_form(a);
        CHECK(h.u * a == h.h);
        CHECK(is_unimodular(h.u));
        CHECK(h.rank == rank(a));
        // Echelon shape with positive pivots and reduced entries above them.
        std::size_t last = 0;
        for (std::size_t i = 0; i < h.rank; ++i) {
            std::size_t p = 0;
            while (h.h(i, p) == 0) ++p;
            if (i) CHECK(p > last);
            last = p;
            CHECK(h.h(i, p) > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h.h(k, p) >= 0);
                CHECK(h.h(k, p) < h.h(i, p));
            }
        }
        for (std::size_t i = h.rank; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) CHECK(h.h(i, j) == 0);
    }
    // The HNF is an invariant of the row lattice.
    const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    std::mt19937_64 rng2(5);
    const IntMatrix u = random_unimodular(3, rng2);
    CHECK(hermite_normal_form(u * a).h == hermite_normal_form(a).h);
    CHECK(hermite_normal_form(a).h == IntMatrix{{2, 4, 4}, {0, 6, 0}, {0, 0, 12}});
}

TEST_CASE("Smith normal form", "[exact_core][property]") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
        const IntMatrix a = random_matrix(r, c, rng);
        const SmithForm s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(s.v * s.v_inverse == IntMatrix::identity(c));
        CHECK(is_unimodular(s.u));
        CHECK(is_diagonal_divisibility_chain(s));
        CHECK(s.rank == rank(a));
        if (r == c) {
            Integer prod = 1;
            for (const auto& x : s.diagonal) prod *= x;
            CHECK(prod == abs(oracle::cofactor_det(to_mat(a))));
        }
    }
    // diag(2, 3) has invariant factors 1, 6.
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal == std::vector<Integer>{1, 6});
}

TEST_CASE("dual basis is the inverse transpose", "[exact_core][oracle]") {
    std::vector<LatticePoint> e{{1, 0}, {1, 1}};
    const auto d = dual_basis(e);
    CHECK(d[0] == RationalPoint{1, -1});
    CHECK(d[1] == RationalPoint{0, 1});
    CHECK(d[0].ambient == Lattice::M);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3;
        const IntMatrix a = random_matrix(n, n, rng, 3);
        if (determinant(a) == 0) continue;
        std::vector<LatticePoint> basis;
        for (std::size_t i = 0; i < n; ++i) basis.emplace_back(a.row(i));
        const auto dual = dual_basis(basis);
        const auto inv = oracle::adjugate_inverse(to_mat(a));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(dual[j][i] == inv[i][j]);
                CHECK(dot(to_rational(basis[i]), dual[j]) == Rational(i == j ? 1 : 0));
            }
    }
    std::vector<LatticePoint> dep{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(dual_basis(dep), PreconditionError);
}

TEST_CASE("cone multiplicity and saturation", "[exact_core]") {
    CHECK(cone_multiplicity(std::vector<LatticePoint>{{1, 0}, {0, 1}}) == 1);
    CHECK(cone_multiplicity(std::vector<LatticePoint>{{2, -1}, {-1, 2}}) == 3);
    // index of <(1,1,0),(1,-1,0)> in its saturation Z^2 x 0 is 2.
    CHECK(cone_multiplicity(std::vector<LatticePoint>{{1, 1, 0}, {1, -1, 0}}) == 2);
    CHECK_THROWS_AS(cone_multiplicity(std::vector<LatticePoint>{{1, 1}, {2, 2}}), PreconditionError);
    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
        const IntMatrix a = random_matrix(3, 3, rng, 4);
        const Integer d = oracle::cofactor_det(to_mat(a));
        if (d == 0) continue;
        std::vector<LatticePoint> g;
        for (std::size_t i = 0; i < 3; ++i) g.emplace_back(a.row(i));
        CHECK(cone_multiplicity(g) == abs(d));
    }
    std::vector<LatticePoint> v{{2, 2, 0}, {0, 3, 3}};
    const auto basis = saturation_basis(std::span<const LatticePoint>(v));
    REQUIRE(basis.size() == 2);
    CHECK(cone_multiplicity(basis) == 1);
    for (const auto& x : v) CHECK_NOTHROW(coordinates_in(std::span<const LatticePoint>(basis), x));
    // (1,1,0) lies in the saturation.
    const auto c = coordinates_in(std::span<const LatticePoint>(basis), LatticePoint{1, 1, 0});
    for (const auto& q : c) CHECK(is_integral(q));
}

TEST_CASE("random unimodular matrices", "[exact_core][property]") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + t % 5;
        const IntMatrix u = random_unimodular(n, rng);
        CHECK(is_unimodular(u));
        CHECK(u * unimodular_inverse(u) == IntMatrix::identity(n));
    }
    std::mt19937_64 a(99), b(99);
    CHECK(random_unimodular(4, a) == random_unimodular(4, b));
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), PreconditionError);
}
