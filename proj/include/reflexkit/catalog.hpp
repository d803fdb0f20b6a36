#pragma once

// Named polytopes used throughout the tests and the CLI.

#include "reflexkit/polytope.hpp"

#include <cstddef>
#include <vector>

namespace reflexkit::catalog {

inline LatticePoint unit(std::size_t n, std::size_t i, int sign = 1) {
    LatticePoint e(n);
    e[i] = sign;
    return e;
}

// Conv(e_1, ..., e_n, -e_1-...-e_n): the fan of projective n-space.
inline Polytope smooth_simplex(std::size_t n) {
    std::vector<LatticePoint> pts;
    LatticePoint last(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(unit(n, i));
        last[i] = -1;
    }
    pts.push_back(last);
    return Polytope::hull(std::move(pts));
}

// Conv(+-e_1, ..., +-e_n): the fan of (P^1)^n.
inline Polytope cross_polytope(std::size_t n) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(unit(n, i));
        pts.push_back(unit(n, i, -1));
    }
    return Polytope::hull(std::move(pts));
}

// Conv(+-e_1, +-e_2, +-(e_1+e_2)): the fan of P^2 blown up in three points.
inline Polytope hexagon() {
    return Polytope::hull({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
}

// Conv(2e_1-e_2, 2e_2-e_1, -e_1-e_2) in N: the dual of the P^2 triangle,
// i.e. the fan of the cubic surface {xyz = w^3}.
inline Polytope cubic_surface_triangle() { return Polytope::hull({{2, -1}, {-1, 2}, {-1, -1}}); }

} // namespace reflexkit::catalog
