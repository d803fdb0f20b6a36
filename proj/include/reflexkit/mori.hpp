#pragma once

// Toric Mori theory on simplicial polytopes. A 1-cycle class is a rational
// linear relation among the vertices; its anticanonical degree is the sum of
// the coefficients. Each wall (ridge) carries an invariant curve whose class
// is b times the wall relation normalized at the opposite vertex.

#include "reflexkit/fano.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace reflexkit {

struct Relation {
    std::map<std::size_t, Rational> coefficients;  // vertex index -> coefficient, zeros omitted
    Rational degree;                               // sum of coefficients

    Rational coefficient(std::size_t v) const {
        auto it = coefficients.find(v);
        return it == coefficients.end() ? Rational(0) : it->second;
    }
};

// Recomputes sum coeff(v) * v from scratch.
inline bool is_relation(const Polytope& p, const Relation& r) {
    RationalPoint sum(p.dim(), p.ambient());
    for (const auto& [v, c] : r.coefficients) sum += c * to_rational(p.vertex(v));
    return sum.is_zero();
}

enum class WallSide { a, b };

namespace detail {

struct WallFrame {
    std::size_t base_facet;    // Conv(e_1..e_n)
    std::size_t other_facet;   // contains f0
    std::size_t opposite;      // f0
    std::size_t dropped;       // vertex of the base facet not on the wall
};

inline WallFrame wall_frame(const Polytope& p, const Wall& w, WallSide side) {
    if (!p.is_simplicial())
        throw PreconditionError("non_simplicial", "wall relations need a simplicial polytope");
    const std::size_t nf = p.facets().size();
    if (w.facet_a >= nf || w.facet_b >= nf || w.facet_a == w.facet_b)
        throw PreconditionError("invalid_wall", "wall facets out of range");
    std::vector<std::size_t> common;
    const auto& ia = p.facet(w.facet_a).incident;
    const auto& ib = p.facet(w.facet_b).incident;
    std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(common));
    if (common != w.common || common.size() + 1 != p.dim() || !p.facet(w.facet_a).contains_vertex(w.opp_a) ||
        !p.facet(w.facet_b).contains_vertex(w.opp_b) || w.opp_a == w.opp_b)
        throw PreconditionError("invalid_wall", "facets do not meet in the stated ridge");
    if (side == WallSide::a) return {w.facet_a, w.facet_b, w.opp_b, w.opp_a};
    return {w.facet_b, w.facet_a, w.opp_a, w.opp_b};
}

} // namespace detail

// f0 + sum a_i e_i = 0 where Conv(e_1..e_n) is the base facet and f0 the
// vertex across the wall.
inline Relation wall_relation(const Polytope& p, const Wall& w, WallSide side = WallSide::a) {
    const auto frame = detail::wall_frame(p, w, side);
    const auto& base = p.facet(frame.base_facet).incident;
    std::vector<LatticePoint> basis;
    for (std::size_t v : base) basis.push_back(p.vertex(v));
    const auto c = coordinates_in(std::span<const LatticePoint>(basis), p.vertex(frame.opposite));
    Relation r;
    r.coefficients[frame.opposite] = 1;
    r.degree = 1;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (c[i] == 0) continue;
        r.coefficients[base[i]] = -c[i];
        r.degree -= c[i];
    }
    return r;
}

// Degree of the wall relation read off the pairing: 1 + <f0, u> / offset,
// u the normal of the base facet.
inline Rational wall_degree_by_pairing(const Polytope& p, const Wall& w, WallSide side = WallSide::a) {
    const auto frame = detail::wall_frame(p, w, side);
    const auto& f = p.facet(frame.base_facet);
    return Rational(1) + Rational(dot(p.vertex(frame.opposite), f.normal)) / Rational(f.offset);
}

struct CurveClass {
    Wall wall;
    WallSide side = WallSide::a;
    std::size_t opposite = 0;  // f0
    Relation gamma;            // coefficient 1 on f0
    Rational b;                // class of the invariant curve is b * gamma
    Rational exact_degree;     // b * degree(gamma)
    Integer mult_wall;         // mult of the cone over the common vertices
    Integer mult_base;         // mult of the cone over the base facet
    Integer mult_other;        // mult of the cone over the facet through f0
};

inline CurveClass curve_class(const Polytope& p, const Wall& w, WallSide side = WallSide::a) {
    const auto frame = detail::wall_frame(p, w, side);
    auto gens = [&](const std::vector<std::size_t>& idx) {
        std::vector<LatticePoint> g;
        for (std::size_t v : idx) g.push_back(p.vertex(v));
        return g;
    };
    CurveClass cc;
    cc.wall = w;
    cc.side = side;
    cc.opposite = frame.opposite;
    cc.gamma = wall_relation(p, w, side);
    cc.mult_wall = cone_multiplicity(gens(w.common));
    cc.mult_base = cone_multiplicity(gens(p.facet(frame.base_facet).incident));
    cc.mult_other = cone_multiplicity(gens(p.facet(frame.other_facet).incident));
    cc.b = Rational(cc.mult_wall) / Rational(cc.mult_other);
    cc.exact_degree = cc.b * cc.gamma.degree;

    // Primitive integer form alpha f0 + beta e_drop + ... = 0 must satisfy
    // alpha * mult(other) = beta * mult(base).
    Integer den = 1;
    for (const auto& [v, c] : cc.gamma.coefficients) den = lcm(den, denominator(c));
    Integer g = 0;
    for (const auto& [v, c] : cc.gamma.coefficients) g = gcd(g, numerator(c) * (den / denominator(c)));
    const Rational scale = Rational(den) / Rational(g);
    const Rational alpha = cc.gamma.coefficient(frame.opposite) * scale;
    const Rational beta = cc.gamma.coefficient(frame.dropped) * scale;
    if (!(alpha > 0 && beta > 0) || alpha * Rational(cc.mult_other) != beta * Rational(cc.mult_base))
        throw TheoremViolation("wall_multiplicity_identity",
                               "alpha*mult(other) != beta*mult(base) on a wall");
    if (!(cc.b > 0 && cc.b <= 1))
        throw TheoremViolation("wall_b_range", "scaling factor b outside (0,1]");
    return cc;
}

inline std::vector<CurveClass> curve_classes(const Polytope& p) {
    std::vector<CurveClass> out;
    for (const auto& w : ridges(p)) out.push_back(curve_class(p, w));
    return out;
}

struct PseudoIndexReport {
    Integer upper_bound;            // delta + 1
    Rational min_invariant_degree;  // over all invariant curves
    bool exact = false;             // smooth: the pseudo-index equals upper_bound
    Rational bound;                 // min(upper_bound, min_invariant_degree)
};

inline PseudoIndexReport pseudo_index_report(const Polytope& p) {
    if (!p.is_simplicial())
        throw PreconditionError("non_simplicial", "pseudo-index report needs a simplicial polytope");
    require_reflexive(p);
    PseudoIndexReport r;
    r.upper_bound = delta(p).value + 1;
    std::optional<Rational> lowest;
    for (const auto& cc : curve_classes(p))
        if (!lowest || cc.exact_degree < *lowest) lowest = cc.exact_degree;
    r.min_invariant_degree = *lowest;
    r.exact = is_smooth(p);
    r.bound = std::min(Rational(r.upper_bound), r.min_invariant_degree);
    if (r.exact && r.min_invariant_degree != Rational(r.upper_bound))
        throw TheoremViolation("smooth_pseudo_index",
                               "smooth polytope with min invariant degree " +
                                   to_string(r.min_invariant_degree) + " != delta+1 = " +
                                   to_string(r.upper_bound));
    return r;
}

} // namespace reflexkit
