#pragma once

// Invariants of (simplicial) reflexive polytopes: delta, smoothness, Picard
// number, facet volumes, the Minkowski relation, adjacency and level counts.

#include "reflexkit/reflexive.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace reflexkit {

struct DeltaWitness {
    Integer value;
    std::size_t vertex = 0;  // v with v not on F_u
    std::size_t facet = 0;   // F_u, i.e. u = facet normal
};

// min <v, u> over vertices v of P and vertices u of P* with v not on F_u.
inline DeltaWitness delta(const Polytope& p) {
    require_reflexive(p);
    std::optional<DeltaWitness> best;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        const auto& fd = p.facet(f);
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
            if (fd.contains_vertex(v)) continue;
            Integer val = dot(p.vertex(v), fd.normal);
            if (!best || val < best->value) best = DeltaWitness{val, v, f};
        }
    }
    return *best;
}

// All (vertex, facet) pairs attaining delta.
inline std::vector<DeltaWitness> delta_pairs(const Polytope& p) {
    const Integer d = delta(p).value;
    std::vector<DeltaWitness> out;
    for (std::size_t f = 0; f < p.facets().size(); ++f)
        for (std::size_t v = 0; v < p.vertices().size(); ++v)
            if (!p.facet(f).contains_vertex(v) && dot(p.vertex(v), p.facet(f).normal) == d)
                out.push_back(DeltaWitness{d, v, f});
    return out;
}

inline IntMatrix facet_vertex_matrix(const Polytope& p, std::size_t facet) {
    std::vector<LatticePoint> rows;
    for (std::size_t v : p.facet(facet).incident) rows.push_back(p.vertex(v));
    return IntMatrix::from_rows(std::span<const LatticePoint>(rows));
}

// Determinant of the vertex matrix of each facet (simplicial only).
inline std::vector<Integer> facet_determinants(const Polytope& p) {
    if (!p.is_simplicial())
        throw PreconditionError("non_simplicial", "facet determinants need a simplicial polytope");
    std::vector<Integer> out;
    for (std::size_t f = 0; f < p.facets().size(); ++f)
        out.push_back(determinant(facet_vertex_matrix(p, f)));
    return out;
}

// Every facet is simplicial and its vertices form a lattice basis.
inline bool is_smooth(const Polytope& p) {
    if (!p.is_simplicial()) return false;
    for (const auto& d : facet_determinants(p))
        if (d != 1 && d != -1) return false;
    return true;
}

inline std::size_t picard_number(const Polytope& p) {
    if (!p.is_simplicial())
        throw PreconditionError("non_simplicial", "Picard number needs a simplicial polytope");
    return p.vertices().size() - p.dim();
}

// ---------------------------------------------------------------------------
// Facet volumes

enum class PullFrom { lowest, highest };

namespace detail {

inline void pulling_triangulation(const Polytope& p, const std::vector<std::size_t>& face,
                                  std::size_t d, PullFrom rule,
                                  std::vector<std::vector<std::size_t>>& out) {
    if (face.size() == d + 1) {
        out.push_back(face);
        return;
    }
    const std::size_t apex = rule == PullFrom::lowest ? face.front() : face.back();
    // The (d-1)-faces of a face are its intersections with facets of P that
    // have the right dimension.
    std::set<std::vector<std::size_t>> subfaces;
    for (const auto& f : p.facets()) {
        std::vector<std::size_t> sub;
        std::set_intersection(face.begin(), face.end(), f.incident.begin(), f.incident.end(),
                              std::back_inserter(sub));
        if (sub.size() < d || std::binary_search(sub.begin(), sub.end(), apex)) continue;
        if (affine_dimension(p, sub) == d - 1) subfaces.insert(std::move(sub));
    }
    for (const auto& sub : subfaces) {
        std::vector<std::vector<std::size_t>> part;
        pulling_triangulation(p, sub, d - 1, rule, part);
        for (auto& s : part) {
            s.insert(std::upper_bound(s.begin(), s.end(), apex), apex);
            out.push_back(std::move(s));
        }
    }
}

} // namespace detail

// Maximal simplices (as vertex index sets) of the pulling triangulation of a facet.
inline std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& p,
                                                                   std::size_t facet,
                                                                   PullFrom rule = PullFrom::lowest) {
    std::vector<std::vector<std::size_t>> out;
    detail::pulling_triangulation(p, p.facet(facet).incident, p.dim() - 1, rule, out);
    return out;
}

// Normalized (n-1)-volume of a facet at lattice distance 1: the sum of
// |det| over a pulling triangulation.
inline Integer facet_lattice_volume(const Polytope& p, std::size_t facet,
                                    PullFrom rule = PullFrom::lowest) {
    require_reflexive(p);
    Integer vol = 0;
    for (const auto& simplex : pulling_triangulation(p, facet, rule)) {
        std::vector<LatticePoint> rows;
        for (std::size_t v : simplex) rows.push_back(p.vertex(v));
        vol += abs(determinant(IntMatrix::from_rows(std::span<const LatticePoint>(rows))));
    }
    return vol;
}

struct MinkowskiRelation {
    std::vector<Integer> coefficients;  // per vertex u of P: volume of F_u in P*
    LatticePoint residual;              // sum of coefficient * vertex

    bool holds() const { return residual.is_zero(); }
};

// sum over vertices u of P of Vol(F_u) u, with F_u the facet of P* dual to u.
inline MinkowskiRelation minkowski_relation(const Polytope& p) {
    const Polytope q = dual(p);
    MinkowskiRelation out;
    out.residual = LatticePoint(p.dim(), p.ambient());
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        // dual() puts the facet of P* dual to vertex i at index i.
        if (!(q.facet(i).normal == p.vertex(i)))
            throw TheoremViolation("dual_facet_order", "dual facet order does not match vertex order");
        Integer vol = facet_lattice_volume(q, i);
        out.residual += vol * p.vertex(i);
        out.coefficients.push_back(std::move(vol));
    }
    return out;
}

// ---------------------------------------------------------------------------

// v is adjacent to F = Conv(e_1..e_n) if swapping some e_i for v gives a facet.
inline bool is_adjacent(const Polytope& p, std::size_t vertex, std::size_t facet) {
    if (!p.is_simplicial())
        throw PreconditionError("non_simplicial", "adjacency needs a simplicial polytope");
    const auto& f = p.facet(facet);
    if (f.contains_vertex(vertex))
        throw PreconditionError("vertex_on_facet", "vertex lies on the facet");
    for (std::size_t drop : f.incident) {
        std::vector<std::size_t> swapped;
        for (std::size_t v : f.incident)
            if (v != drop) swapped.push_back(v);
        swapped.push_back(vertex);
        std::sort(swapped.begin(), swapped.end());
        for (const auto& g : p.facets())
            if (g.incident == swapped) return true;
    }
    return false;
}

// Histogram of <v, u> over the vertices v, for u the normal of `facet`.
inline std::map<Integer, std::size_t> level_counts(const Polytope& p, std::size_t facet) {
    std::map<Integer, std::size_t> hist;
    for (const auto& v : p.vertices()) ++hist[dot(v, p.facet(facet).normal)];
    return hist;
}

// ---------------------------------------------------------------------------

struct FanoReport {
    std::size_t n = 0;
    std::size_t vertex_count = 0;
    std::size_t facet_count = 0;
    bool origin_interior = false;
    bool is_reflexive = false;
    bool is_simplicial = false;
    bool is_smooth = false;
    std::optional<Integer> delta;
    std::optional<std::size_t> picard;
    std::vector<Integer> facet_determinants;  // simplicial only
    std::vector<Integer> volume_per_facet;    // reflexive only
    std::optional<MinkowskiRelation> minkowski;
};

inline FanoReport fano_report(const Polytope& p) {
    FanoReport r;
    r.n = p.dim();
    r.vertex_count = p.vertices().size();
    r.facet_count = p.facets().size();
    r.origin_interior = p.origin_is_interior();
    r.is_reflexive = reflexive(p);
    r.is_simplicial = p.is_simplicial();
    r.is_smooth = is_smooth(p);
    if (r.is_simplicial) {
        r.picard = picard_number(p);
        r.facet_determinants = facet_determinants(p);
    }
    if (r.is_reflexive) {
        r.delta = delta(p).value;
        for (std::size_t f = 0; f < p.facets().size(); ++f)
            r.volume_per_facet.push_back(facet_lattice_volume(p, f));
        r.minkowski = minkowski_relation(p);
    }
    return r;
}

} // namespace reflexkit
