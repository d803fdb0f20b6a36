#pragma once

// Full-dimensional lattice polytopes in V-representation with an eagerly
// computed facet list.

#include "reflexkit/exact_core.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace reflexkit {

// A facet is the hyperplane <x, normal> = -offset. The normal is primitive,
// lives in the dual lattice and points into the polytope, so every vertex
// satisfies <v, normal> >= -offset. offset > 0 iff the origin is interior.
struct FacetData {
    LatticePoint normal;
    Integer offset;
    std::vector<std::size_t> incident;  // sorted vertex indices on the hyperplane

    bool contains_vertex(std::size_t v) const {
        return std::binary_search(incident.begin(), incident.end(), v);
    }
};

// A ridge of a simplicial polytope: the n-1 vertices shared by facets a < b,
// together with the vertex of each facet that is not shared.
struct Wall {
    std::size_t facet_a = 0;
    std::size_t facet_b = 0;
    std::vector<std::size_t> common;
    std::size_t opp_a = 0;
    std::size_t opp_b = 0;

    friend bool operator==(const Wall&, const Wall&) = default;
};

namespace detail {

inline void check_points(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw PreconditionError("empty_input", "no points given");
    const std::size_t n = points.front().size();
    if (n == 0) throw PreconditionError("zero_dimension", "points have no coordinates");
    for (const auto& p : points)
        if (p.size() != n)
            throw PreconditionError("dimension_mismatch", "points of different dimensions");
}

inline std::size_t affine_dimension(const std::vector<LatticePoint>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<LatticePoint> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    return rank_of_points(std::span<const LatticePoint>(diffs));
}

// Normal of the hyperplane through points[idx[0..n-1]], by cofactor expansion.
// Zero when the points are affinely dependent.
inline LatticePoint hyperplane_normal(const std::vector<LatticePoint>& points,
                                      const std::vector<std::size_t>& idx, std::size_t n) {
    IntMatrix d(n - 1, n);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) d(r - 1, j) = points[idx[r]][j] - points[idx[0]][j];
    LatticePoint normal(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r, cc++) = d(r, c);
            }
        Integer det = determinant(minor);
        normal[j] = (j % 2 == 0) ? det : Integer(-det);
    }
    return normal;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t total) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < total - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

class Polytope {
public:
    // Convex hull of a full-dimensional point set. Facets come from an
    // exhaustive scan of n-subsets; coplanar supports merge into one facet.
    static Polytope hull(std::vector<LatticePoint> points) {
        detail::check_points(points);
        const std::size_t n = points.front().size();
        const Lattice ambient = points.front().ambient;
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        for (auto& p : points) p.ambient = ambient;

        const std::size_t adim = detail::affine_dimension(points);
        if (adim < n)
            throw PreconditionError("lower_dimensional",
                                    "points span an affine subspace of dimension " +
                                        std::to_string(adim) + " in ambient dimension " +
                                        std::to_string(n));

        std::set<std::pair<LatticePoint, Integer>> seen;
        std::vector<std::pair<LatticePoint, Integer>> supports;
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            LatticePoint normal = detail::hyperplane_normal(points, idx, n);
            if (normal.is_zero()) continue;
            normal = primitive(normal);
            Integer offset = -dot(points[idx[0]], normal);
            // Orientation-free key so a rejected hyperplane is not re-tested.
            auto first = std::find_if(normal.coords.begin(), normal.coords.end(),
                                      [](const Integer& x) { return x != 0; });
            std::pair<LatticePoint, Integer> key{normal, offset};
            if (*first < 0) key = {-normal, Integer(-offset)};
            if (!seen.insert(key).second) continue;

            bool above = false, below = false;
            for (const auto& p : points) {
                const Integer s = dot(p, normal) + offset;
                if (s > 0) above = true;
                if (s < 0) below = true;
                if (above && below) break;
            }
            if (above && below) continue;
            if (below) {
                normal = -normal;
                offset = -offset;
            }
            supports.emplace_back(std::move(normal), std::move(offset));
        } while (detail::next_combination(idx, points.size()));

        // A point is a vertex iff the normals of its tight facets have rank n.
        std::vector<LatticePoint> vertices;
        for (const auto& p : points) {
            std::vector<LatticePoint> tight;
            for (const auto& [u, c] : supports)
                if (dot(p, u) + c == 0) tight.push_back(u);
            if (rank_of_points(std::span<const LatticePoint>(tight)) == n) vertices.push_back(p);
        }
        std::vector<FacetData> facets;
        for (auto& [u, c] : supports) {
            u.ambient = dual_lattice(ambient);
            facets.push_back(FacetData{u, c, {}});
        }
        return Polytope(n, ambient, std::move(vertices), std::move(facets));
    }

    // Builds a polytope from vertices and a complete facet list that the caller
    // already knows (e.g. by duality). Incidences are recomputed and every
    // facet inequality is checked; completeness of the list is trusted.
    static Polytope from_vertices_and_facets(std::vector<LatticePoint> vertices,
                                             std::vector<FacetData> facets) {
        detail::check_points(vertices);
        const std::size_t n = vertices.front().size();
        const Lattice ambient = vertices.front().ambient;
        for (auto& v : vertices) v.ambient = ambient;
        for (auto& f : facets) {
            if (f.normal.size() != n || !is_primitive(f.normal))
                throw PreconditionError("invalid_facet", "facet normal must be primitive");
            f.normal.ambient = dual_lattice(ambient);
            for (const auto& v : vertices)
                if (dot(v, f.normal) + f.offset < 0)
                    throw PreconditionError("invalid_facet", "vertex violates a facet inequality");
        }
        std::sort(vertices.begin(), vertices.end());
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw PreconditionError("duplicate_vertex", "vertex list has duplicates");
        Polytope p(n, ambient, std::move(vertices), std::move(facets));
        for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
            std::vector<LatticePoint> tight;
            for (const auto& f : p.facets_)
                if (f.contains_vertex(v)) tight.push_back(f.normal);
            if (rank_of_points(std::span<const LatticePoint>(tight)) != n)
                throw PreconditionError("not_a_vertex", "listed point is not a vertex");
        }
        return p;
    }

    std::size_t dim() const noexcept { return n_; }
    Lattice ambient() const noexcept { return ambient_; }
    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    const std::vector<FacetData>& facets() const noexcept { return facets_; }
    const LatticePoint& vertex(std::size_t i) const { return vertices_.at(i); }
    const FacetData& facet(std::size_t i) const { return facets_.at(i); }

    bool is_simplicial() const {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](const FacetData& f) { return f.incident.size() == n_; });
    }

    bool origin_is_interior() const {
        return std::all_of(facets_.begin(), facets_.end(),
                           [](const FacetData& f) { return f.offset > 0; });
    }

    // Indices of facets containing every vertex in `vs`.
    std::vector<std::size_t> facets_containing(const std::vector<std::size_t>& vs) const {
        std::vector<std::size_t> out;
        for (std::size_t f = 0; f < facets_.size(); ++f)
            if (std::all_of(vs.begin(), vs.end(),
                            [&](std::size_t v) { return facets_[f].contains_vertex(v); }))
                out.push_back(f);
        return out;
    }

    std::size_t index_of_vertex(const LatticePoint& v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || !(*it == v))
            throw PreconditionError("not_a_vertex", "point is not a vertex of the polytope");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    // Image under an invertible integer matrix acting on N. Unimodular maps
    // carry the facet data along (normals by the inverse transpose);
    // anything else goes through a fresh hull.
    Polytope transformed(const IntMatrix& t) const {
        if (!is_unimodular(t)) {
            std::vector<LatticePoint> img;
            for (const auto& v : vertices_) img.push_back(apply(t, v));
            return hull(std::move(img));
        }
        const IntMatrix inv_t = unimodular_inverse(t).transpose();
        std::vector<LatticePoint> img;
        for (const auto& v : vertices_) img.push_back(apply(t, v));
        std::vector<FacetData> fs;
        for (const auto& f : facets_) fs.push_back(FacetData{apply(inv_t, f.normal), f.offset, {}});
        return from_vertices_and_facets(std::move(img), std::move(fs));
    }

    // Same vertex set (the facet cache is then determined).
    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.n_ == b.n_ && a.vertices_ == b.vertices_;
    }

private:
    Polytope(std::size_t n, Lattice ambient, std::vector<LatticePoint> vertices,
             std::vector<FacetData> facets)
        : n_(n), ambient_(ambient), vertices_(std::move(vertices)), facets_(std::move(facets)) {
        std::sort(vertices_.begin(), vertices_.end());
        for (auto& f : facets_) {
            f.incident.clear();
            for (std::size_t v = 0; v < vertices_.size(); ++v)
                if (dot(vertices_[v], f.normal) + f.offset == 0) f.incident.push_back(v);
        }
        std::sort(facets_.begin(), facets_.end(),
                  [](const FacetData& a, const FacetData& b) { return a.normal < b.normal; });
    }

    std::size_t n_ = 0;
    Lattice ambient_ = Lattice::N;
    std::vector<LatticePoint> vertices_;
    std::vector<FacetData> facets_;
};

inline Polytope hull(std::vector<LatticePoint> points) { return Polytope::hull(std::move(points)); }

// ---------------------------------------------------------------------------

inline std::vector<Wall> ridges(const Polytope& p) {
    if (!p.is_simplicial())
        throw PreconditionError("non_simplicial", "ridges() needs a simplicial polytope");
    std::vector<Wall> walls;
    const auto& fs = p.facets();
    for (std::size_t a = 0; a < fs.size(); ++a) {
        for (std::size_t drop : fs[a].incident) {
            std::vector<std::size_t> common;
            for (std::size_t v : fs[a].incident)
                if (v != drop) common.push_back(v);
            std::vector<std::size_t> partners = p.facets_containing(common);
            partners.erase(std::remove(partners.begin(), partners.end(), a), partners.end());
            if (partners.size() != 1)
                throw TheoremViolation("ridge_two_facets",
                                       "a ridge lies on " + std::to_string(partners.size() + 1) +
                                           " facets");
            const std::size_t b = partners.front();
            if (b < a) continue;
            std::size_t opp_b = 0;
            for (std::size_t v : fs[b].incident)
                if (!std::binary_search(common.begin(), common.end(), v)) opp_b = v;
            walls.push_back(Wall{a, b, common, drop, opp_b});
        }
    }
    return walls;
}

enum class Location { interior, boundary, outside };

struct Containment {
    Location location = Location::outside;
    std::vector<std::size_t> tight;  // facets whose hyperplane contains the point
};

inline Containment contains(const Polytope& p, const RationalPoint& x) {
    if (x.size() != p.dim())
        throw PreconditionError("dimension_mismatch", "point and polytope dimensions differ");
    Containment out;
    bool outside = false;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        const auto& fd = p.facets()[f];
        const Rational s = dot(x, to_rational(fd.normal)) + Rational(fd.offset);
        if (s < 0) outside = true;
        if (s == 0) out.tight.push_back(f);
    }
    out.location = outside            ? Location::outside
                   : out.tight.empty() ? Location::interior
                                       : Location::boundary;
    if (outside) out.tight.clear();
    return out;
}

inline Containment contains(const Polytope& p, const LatticePoint& x) {
    return contains(p, to_rational(x));
}

// Bounding-box scan.
inline std::vector<LatticePoint> interior_lattice_points(const Polytope& p) {
    const std::size_t n = p.dim();
    LatticePoint lo = p.vertices().front(), hi = lo;
    for (const auto& v : p.vertices())
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<LatticePoint> out;
    LatticePoint x = lo;
    for (;;) {
        if (contains(p, x).location == Location::interior) out.push_back(x);
        std::size_t i = 0;
        while (i < n && x[i] == hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++x[i];
    }
    return out;
}

// Affine dimension of the face spanned by the given vertices.
inline std::size_t affine_dimension(const Polytope& p, const std::vector<std::size_t>& vs) {
    std::vector<LatticePoint> pts;
    for (std::size_t v : vs) pts.push_back(p.vertex(v));
    return detail::affine_dimension(pts);
}

// Conv(A x {0} ∪ {0} x B) in the direct sum of the two ambient lattices.
inline Polytope free_sum(const Polytope& a, const Polytope& b) {
    const std::size_t n = a.dim(), m = b.dim();
    std::vector<LatticePoint> pts;
    for (const auto& v : a.vertices()) {
        LatticePoint w(n + m, a.ambient());
        for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
        pts.push_back(std::move(w));
    }
    for (const auto& v : b.vertices()) {
        LatticePoint w(n + m, a.ambient());
        for (std::size_t i = 0; i < m; ++i) w[n + i] = v[i];
        pts.push_back(std::move(w));
    }
    return Polytope::hull(std::move(pts));
}

} // namespace reflexkit
