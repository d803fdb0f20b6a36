#pragma once

// Vertex-count bounds for simplicial reflexive polytopes, the structure of
// the equality cases, free-sum splitting and identification of the factors.

#include "reflexkit/catalog.hpp"
#include "reflexkit/fano.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace reflexkit {

struct BoundsVerdict {
    Integer delta;
    bool bound_3n = false;             // |V| <= 3n
    std::optional<bool> bound_delta;   // |V| <= n + n/delta, only when delta > 0
    bool equality_i = false;           // |V| == 3n
    bool equality_ii = false;          // delta > 0 and |V| == n + n/delta

    bool passes() const { return bound_3n && bound_delta.value_or(true); }
};

inline void require_simplicial_reflexive(const Polytope& p) {
    if (!p.is_simplicial())
        throw PreconditionError("non_simplicial", "polytope is not simplicial");
    require_reflexive(p);
}

inline BoundsVerdict verify_bounds(const Polytope& p) {
    require_simplicial_reflexive(p);
    const Integer nv = p.vertices().size();
    const Integer n = p.dim();
    BoundsVerdict out;
    out.delta = delta(p).value;
    out.bound_3n = nv <= 3 * n;
    out.equality_i = nv == 3 * n;
    if (out.delta > 0) {
        // |V| <= n + n/delta  <=>  |V| delta <= n (delta + 1)
        out.bound_delta = nv * out.delta <= n * (out.delta + 1);
        out.equality_ii = nv * out.delta == n * (out.delta + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Restriction to a linear span

// Q = Conv(vertices) written in a Z-basis of N ∩ span(Q).
struct LocalPolytope {
    std::vector<std::size_t> vertices;      // indices into the ambient polytope
    std::vector<LatticePoint> span_basis;   // Z-basis of the saturated sublattice
    Polytope polytope;
};

inline LocalPolytope restrict_to_span(const Polytope& p, const std::vector<std::size_t>& vertices) {
    std::vector<LatticePoint> pts;
    for (std::size_t v : vertices) pts.push_back(p.vertex(v));
    std::vector<LatticePoint> basis = saturation_basis(std::span<const LatticePoint>(pts));
    std::vector<LatticePoint> local;
    for (const auto& x : pts) {
        auto c = coordinates_in(std::span<const LatticePoint>(basis), x);
        LatticePoint y(c.size(), p.ambient());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!is_integral(c[i]))
                throw TheoremViolation("saturation", "vertex has non-integral coordinates in N ∩ H");
            y[i] = numerator(c[i]);
        }
        local.push_back(std::move(y));
    }
    if (detail::affine_dimension(local) != basis.size())
        throw PreconditionError("not_full_dimensional_in_span",
                                "vertex subset is not full-dimensional in its linear span");
    return LocalPolytope{vertices, std::move(basis), Polytope::hull(std::move(local))};
}

enum class FactorKind { smooth_simplex, hexagon, segment, other };

inline const char* to_string(FactorKind k) {
    switch (k) {
    case FactorKind::smooth_simplex: return "simplex_P";
    case FactorKind::hexagon: return "hexagon";
    case FactorKind::segment: return "segment";
    case FactorKind::other: return "other";
    }
    return "other";
}

struct FactorIdentity {
    FactorKind kind = FactorKind::other;
    std::size_t dim = 0;
};

// Q is taken in its own lattice (see restrict_to_span). The segment [-1, 1]
// is the smooth 1-simplex; other segments report as `segment`.
inline FactorIdentity identify_factor(const Polytope& q) {
    const std::size_t d = q.dim();
    if (are_isomorphic(q, catalog::smooth_simplex(d))) return {FactorKind::smooth_simplex, d};
    if (d == 2 && are_isomorphic(q, catalog::hexagon())) return {FactorKind::hexagon, d};
    if (d == 1) return {FactorKind::segment, d};
    return {FactorKind::other, d};
}

// ---------------------------------------------------------------------------
// Free sums

struct Factor {
    std::vector<std::size_t> vertices;
    std::vector<LatticePoint> span_basis;
};

// Finest partition of V(P) whose linear spans form a direct sum, i.e. the
// connected components of the linear matroid on the vertices. Components
// are merged along the fundamental circuits of a greedy basis.
inline std::vector<Factor> free_sum_decompose(const Polytope& p) {
    const std::size_t nv = p.vertices().size();
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    std::vector<std::size_t> basis_idx;
    std::vector<LatticePoint> basis;
    for (std::size_t v = 0; v < nv; ++v) {
        basis.push_back(p.vertex(v));
        if (rank_of_points(std::span<const LatticePoint>(basis)) == basis.size()) {
            basis_idx.push_back(v);
        } else {
            basis.pop_back();
        }
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (std::find(basis_idx.begin(), basis_idx.end(), v) != basis_idx.end()) continue;
        auto c = coordinates_in(std::span<const LatticePoint>(basis), p.vertex(v));
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) unite(v, basis_idx[i]);
    }

    std::vector<Factor> factors;
    std::vector<std::size_t> slot(nv, nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t root = find(v);
        if (slot[root] == nv) {
            slot[root] = factors.size();
            factors.emplace_back();
        }
        factors[slot[root]].vertices.push_back(v);
    }
    std::size_t total = 0;
    for (auto& f : factors) {
        std::vector<LatticePoint> pts;
        for (std::size_t v : f.vertices) pts.push_back(p.vertex(v));
        f.span_basis = saturation_basis(std::span<const LatticePoint>(pts));
        total += f.span_basis.size();
    }
    if (total != p.dim())
        throw TheoremViolation("matroid_components", "component spans do not form a direct sum");
    return factors;
}

// ---------------------------------------------------------------------------
// Equality case |V| = n + n/delta

struct Block {
    std::size_t f = 0;               // the vertex f_j
    std::vector<std::size_t> e;      // the e_k with phi(k) = j
    LocalPolytope local;             // Q_j = Conv(f_j, e_k) in N ∩ H_j
};

struct Decomposition {
    std::size_t base_facet = 0;
    LatticePoint u;                        // normal of the base facet
    Integer delta;
    std::vector<std::size_t> base_vertices; // e_1..e_n
    std::vector<std::size_t> remaining;     // f_1..f_r
    std::vector<std::size_t> phi;           // phi[k] in [0, r): F_k = Conv(f_phi(k), e without e_k)
    std::vector<Block> blocks;
};

inline Decomposition decompose_equality(const Polytope& p, std::size_t base_facet = 0) {
    require_simplicial_reflexive(p);
    const BoundsVerdict bv = verify_bounds(p);
    if (!bv.equality_ii)
        throw PreconditionError("equality_fails", "|V| != n + n/delta (or delta = 0)");
    if (base_facet >= p.facets().size())
        throw PreconditionError("invalid_facet", "base facet index out of range");
    const std::size_t n = p.dim();
    const Integer& d = bv.delta;
    auto violation = [](const std::string& check, const std::string& msg) {
        return TheoremViolation(check, msg);
    };

    for (const auto& f : p.facets())
        for (const auto& v : p.vertices()) {
            const Integer s = dot(v, f.normal);
            if (s != -1 && s != d)
                throw violation("levels_minus_one_or_delta", "pairing " + to_string(s) + " not in {-1, delta}");
        }

    Decomposition out;
    out.base_facet = base_facet;
    out.u = p.facet(base_facet).normal;
    out.delta = d;
    out.base_vertices = p.facet(base_facet).incident;
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
        if (!p.facet(base_facet).contains_vertex(v)) out.remaining.push_back(v);
    const std::size_t r = out.remaining.size();
    if (Integer(r) * d != n) throw violation("block_count", "r * delta != n");

    std::vector<LatticePoint> e_pts;
    for (std::size_t v : out.base_vertices) e_pts.push_back(p.vertex(v));
    const auto e_dual = dual_basis(e_pts);

    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> common;
        for (std::size_t i = 0; i < n; ++i)
            if (i != k) common.push_back(out.base_vertices[i]);
        auto partners = p.facets_containing(common);
        partners.erase(std::remove(partners.begin(), partners.end(), base_facet), partners.end());
        if (partners.size() != 1) throw violation("ridge_two_facets", "ridge not on exactly two facets");
        const auto& fk = p.facet(partners.front());
        std::size_t extra = p.vertices().size();
        for (std::size_t v : fk.incident)
            if (!std::binary_search(common.begin(), common.end(), v)) extra = v;
        auto it = std::find(out.remaining.begin(), out.remaining.end(), extra);
        if (it == out.remaining.end()) throw violation("phi_target", "adjacent facet gains an e-vertex");
        out.phi.push_back(static_cast<std::size_t>(it - out.remaining.begin()));

        // u_k = u + (delta + 1) e_k*
        RationalPoint expected = to_rational(out.u) + Rational(d + 1) * e_dual[k];
        if (!(expected == to_rational(fk.normal)))
            throw violation("u_k_formula", "normal of F_k differs from u + (delta+1) e_k*");
    }

    for (std::size_t j = 0; j < r; ++j) {
        const std::size_t f = out.remaining[j];
        std::vector<std::size_t> e;
        for (std::size_t k = 0; k < n; ++k)
            if (out.phi[k] == j) e.push_back(out.base_vertices[k]);
        if (Integer(e.size()) != d) throw violation("partition_sizes", "|phi^-1(j)| != delta");
        LatticePoint sum = p.vertex(f);
        for (std::size_t v : e) sum += p.vertex(v);
        if (!sum.is_zero()) throw violation("block_relation", "f_j + sum e_k != 0");
        std::vector<std::size_t> vs = e;
        vs.push_back(f);
        std::sort(vs.begin(), vs.end());
        Block b{f, std::move(e), restrict_to_span(p, vs)};
        if (Integer(b.local.span_basis.size()) != d) throw violation("block_dimension", "dim H_j != delta");
        if (!reflexive(b.local.polytope))
            throw violation("block_reflexive", "Q_j is not reflexive in N ∩ H_j");
        out.blocks.push_back(std::move(b));
    }

    std::vector<LatticePoint> all;
    for (const auto& b : out.blocks)
        all.insert(all.end(), b.local.span_basis.begin(), b.local.span_basis.end());
    if (all.size() != n || rank_of_points(std::span<const LatticePoint>(all)) != n)
        throw violation("direct_sum", "spans H_j do not form a direct sum");
    return out;
}

// ---------------------------------------------------------------------------

enum class VarietyKind { s3_power, projective_power, other };

inline const char* to_string(VarietyKind k) {
    switch (k) {
    case VarietyKind::s3_power: return "S3_power";
    case VarietyKind::projective_power: return "projective_power";
    case VarietyKind::other: return "other";
    }
    return "other";
}

struct VarietyClass {
    VarietyKind kind = VarietyKind::other;
    std::size_t delta = 0;     // projective_power: dimension of each factor
    std::size_t exponent = 0;  // number of factors

    friend bool operator==(const VarietyClass&, const VarietyClass&) = default;
};

inline VarietyClass classify_equality_variety(const Polytope& p) {
    const BoundsVerdict bv = verify_bounds(p);
    const std::size_t n = p.dim();
    if (bv.equality_i) {
        const auto factors = free_sum_decompose(p);
        const bool hexagons =
            factors.size() * 2 == n && std::all_of(factors.begin(), factors.end(), [&](const Factor& f) {
                return identify_factor(restrict_to_span(p, f.vertices).polytope).kind == FactorKind::hexagon;
            });
        if (hexagons) return {VarietyKind::s3_power, 0, n / 2};
    }
    if (bv.equality_ii) {
        const Decomposition dec = decompose_equality(p);
        const bool simplices = std::all_of(dec.blocks.begin(), dec.blocks.end(), [](const Block& b) {
            return identify_factor(b.local.polytope).kind == FactorKind::smooth_simplex;
        });
        if (simplices && is_smooth(p))
            return {VarietyKind::projective_power, static_cast<std::size_t>(bv.delta), dec.blocks.size()};
    }
    return {};
}

} // namespace reflexkit
