#pragma once

// Exhaustive search for reflexive polygons in a box, and a harness that runs
// every invariant check of the library over a collection of polytopes.

#include "reflexkit/classifier.hpp"
#include "reflexkit/mori.hpp"
#include "reflexkit/parallel.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace reflexkit {

// ---------------------------------------------------------------------------
// Planar search on machine integers. Coordinates are bounded by the box
// radius, so every product below is far from overflow.

namespace plane {

using Pt = std::array<std::int64_t, 2>;

inline std::int64_t cross(const Pt& a, const Pt& b) { return a[0] * b[1] - a[1] * b[0]; }
inline std::int64_t orient(const Pt& a, const Pt& b, const Pt& c) {
    return cross(Pt{b[0] - a[0], b[1] - a[1]}, Pt{c[0] - a[0], c[1] - a[1]});
}

inline bool in_segment(const Pt& q, const Pt& a, const Pt& b) {
    return orient(a, b, q) == 0 && std::min(a[0], b[0]) <= q[0] && q[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= q[1] && q[1] <= std::max(a[1], b[1]);
}

// q in the closed convex hull of a, b, c (possibly collinear).
inline bool in_triangle(const Pt& q, const Pt& a, const Pt& b, const Pt& c) {
    const std::int64_t o = orient(a, b, c);
    if (o == 0) return in_segment(q, a, b) || in_segment(q, b, c) || in_segment(q, a, c);
    const std::int64_t d1 = orient(a, b, q), d2 = orient(b, c, q), d3 = orient(c, a, q);
    if (o > 0) return d1 >= 0 && d2 >= 0 && d3 >= 0;
    return d1 <= 0 && d2 <= 0 && d3 <= 0;
}

// Whether adding p to a set already in convex position keeps it so. In the
// plane, q lies in the hull of a set iff it lies in a triangle of three of them.
inline bool keeps_convex_position(const std::vector<Pt>& s, const Pt& p) {
    const std::size_t k = s.size();
    if (k == 1) return true;
    if (k == 2) return !in_segment(p, s[0], s[1]) && !in_segment(s[0], p, s[1]) && !in_segment(s[1], p, s[0]);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            for (std::size_t c = b + 1; c < k; ++c)
                if (in_triangle(p, s[a], s[b], s[c])) return false;
            for (std::size_t q = 0; q < k; ++q)
                if (q != a && q != b && in_triangle(s[q], p, s[a], s[b])) return false;
        }
    return true;
}

inline bool upper_half(const Pt& p) { return p[1] > 0 || (p[1] == 0 && p[0] > 0); }

// Points in convex position, returned in counter-clockwise order around the
// origin when the origin is strictly interior; empty otherwise.
inline std::vector<Pt> ccw_if_origin_interior(std::vector<Pt> s) {
    std::sort(s.begin(), s.end(), [](const Pt& a, const Pt& b) {
        const bool ua = upper_half(a), ub = upper_half(b);
        if (ua != ub) return ua;
        return cross(a, b) > 0;
    });
    for (std::size_t i = 0; i < s.size(); ++i)
        if (cross(s[i], s[(i + 1) % s.size()]) <= 0) return {};
    return s;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Every edge at lattice distance one from the origin.
inline bool reflexive_ccw(const std::vector<Pt>& ccw) {
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Pt& a = ccw[i];
        const Pt& b = ccw[(i + 1) % ccw.size()];
        if (cross(a, b) != gcd64(b[0] - a[0], b[1] - a[1])) return false;
    }
    return true;
}

struct CellResult {
    std::vector<std::vector<Pt>> hits;   // reflexive polygons with at most `keep` vertices
    std::vector<std::vector<Pt>> extra;  // reflexive polygons with more vertices (probe)
    std::uint64_t subsets = 0;           // convex-position subsets of size >= 3 examined
};

inline void search(const std::vector<Pt>& pts, std::size_t from, std::vector<Pt>& cur,
                   std::size_t max_size, std::size_t keep, CellResult& out) {
    if (cur.size() >= 3) {
        ++out.subsets;
        auto ccw = ccw_if_origin_interior(cur);
        if (!ccw.empty() && reflexive_ccw(ccw)) (cur.size() <= keep ? out.hits : out.extra).push_back(ccw);
    }
    if (cur.size() == max_size) return;
    for (std::size_t j = from; j < pts.size(); ++j) {
        if (!keeps_convex_position(cur, pts[j])) continue;
        cur.push_back(pts[j]);
        search(pts, j + 1, cur, max_size, keep, out);
        cur.pop_back();
    }
}

// Primitive nonzero points of [-r, r]^2 in lexicographic order. A vertex of a
// reflexive polygon is primitive: otherwise v/k would be a second interior
// lattice point.
inline std::vector<Pt> candidate_points(int r) {
    std::vector<Pt> pts;
    for (std::int64_t x = -r; x <= r; ++x)
        for (std::int64_t y = -r; y <= r; ++y)
            if (gcd64(x, y) == 1) pts.push_back({x, y});
    return pts;
}

} // namespace plane

namespace detail {

inline std::string vertex_list(const Polytope& p) {
    std::ostringstream os;
    for (const auto& v : p.vertices()) os << v;
    return os.str();
}

} // namespace detail

// ---------------------------------------------------------------------------

struct PolytopeClass {
    CanonicalForm canonical;
    Polytope representative;  // vertices are the canonical rows
    std::string provenance;
    FanoReport report;
    BoundsVerdict bounds;
    VarietyClass variety;
};

inline PolytopeClass make_class(const Polytope& p, std::string provenance) {
    CanonicalForm c = canonical_form(p);
    Polytope rep = polytope_of(c, p.ambient());
    FanoReport report = fano_report(rep);
    BoundsVerdict bounds = verify_bounds(rep);
    VarietyClass variety = classify_equality_variety(rep);
    return PolytopeClass{std::move(c), std::move(rep), std::move(provenance), std::move(report),
                         std::move(bounds), variety};
}

struct Enumeration2d {
    int box_radius = 3;
    std::vector<PolytopeClass> classes;             // sorted by canonical form
    std::uint64_t subsets_examined = 0;
    std::uint64_t reflexive_hits = 0;               // before deduplication
    std::size_t probe_size = 0;                     // largest subset size searched
    std::vector<std::vector<LatticePoint>> probe_hits;  // reflexive polygons above 6 vertices
};

// Scans all convex-position vertex subsets of sizes 3..probe_size among the
// candidate points of [-r, r]^2. Polygons with at most 6 vertices are kept;
// larger ones are reported separately and must not exist.
inline Enumeration2d run_enumeration_2d(int box_radius = 3, std::size_t probe_size = 7, unsigned jobs = 1) {
    if (box_radius < 2) throw PreconditionError("box_too_small", "box radius must be at least 2");
    if (box_radius > 1000) throw PreconditionError("box_too_large", "box radius must be at most 1000");
    constexpr std::size_t keep = 6;
    const auto pts = plane::candidate_points(box_radius);
    std::vector<plane::CellResult> cells(pts.size());
    parallel_for(pts.size(), jobs, [&](std::size_t i) {
        std::vector<plane::Pt> cur{pts[i]};
        plane::search(pts, i + 1, cur, std::max(probe_size, keep), keep, cells[i]);
    });

    auto to_lattice = [](const std::vector<plane::Pt>& poly) {
        std::vector<LatticePoint> out;
        for (const auto& p : poly) out.push_back(LatticePoint{Integer(p[0]), Integer(p[1])});
        return out;
    };

    Enumeration2d out;
    out.box_radius = box_radius;
    out.probe_size = std::max(probe_size, keep);
    std::map<IntMatrix, std::size_t> first_cell;
    std::vector<std::pair<std::size_t, Polytope>> found;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out.subsets_examined += cells[i].subsets;
        for (const auto& e : cells[i].extra) out.probe_hits.push_back(to_lattice(e));
        for (const auto& h : cells[i].hits) {
            ++out.reflexive_hits;
            Polytope p = Polytope::hull(to_lattice(h));
            if (!reflexive(p) || p.vertices().size() != h.size())
                throw TheoremViolation("planar_filter", "machine-integer filter disagrees with exact check");
            const CanonicalForm c = canonical_form(p);
            if (first_cell.emplace(c.matrix, i).second) found.emplace_back(i, std::move(p));
        }
    }
    std::vector<std::optional<PolytopeClass>> slots(found.size());
    parallel_for(found.size(), jobs, [&](std::size_t k) {
        std::ostringstream prov;
        prov << "box r=" << box_radius << ", cell " << found[k].first << ", first hit " << detail::vertex_list(found[k].second);
        slots[k] = make_class(found[k].second, prov.str());
    });
    std::vector<PolytopeClass> classes;
    for (auto& s : slots) classes.push_back(std::move(*s));
    std::sort(classes.begin(), classes.end(),
              [](const PolytopeClass& a, const PolytopeClass& b) { return a.canonical < b.canonical; });
    out.classes = std::move(classes);
    return out;
}

inline std::vector<PolytopeClass> enumerate_reflexive_2d(int box_radius = 3, unsigned jobs = 1) {
    return run_enumeration_2d(box_radius, 6, jobs).classes;
}

// ---------------------------------------------------------------------------
// Corpus verification

struct Violation {
    std::size_t index = 0;  // position in the input
    std::string check;
    std::string witness;
};

struct EqualityCase {
    std::size_t index = 0;
    std::string which;    // "i" (|V| = 3n) or "ii" (|V| = n + n/delta)
    std::string variety;  // e.g. "S3_power^2", "projective_power(2)^2", "other"
};

struct CorpusSummary {
    std::size_t input_count = 0;
    std::size_t filtered_out = 0;  // not reflexive or not simplicial
    std::size_t checked = 0;
    std::map<std::string, std::size_t> histogram;  // "V=..,delta=..,rho=..,min_degree=.."
    std::vector<Violation> violations;
    std::vector<EqualityCase> equality_cases;

    bool ok() const { return violations.empty(); }
};

inline std::string describe(const VarietyClass& v) {
    switch (v.kind) {
    case VarietyKind::s3_power: return "S3_power^" + std::to_string(v.exponent);
    case VarietyKind::projective_power:
        return "projective_power(" + std::to_string(v.delta) + ")^" + std::to_string(v.exponent);
    case VarietyKind::other: return "other";
    }
    return "other";
}

namespace detail {

struct PolytopeVerdict {
    bool checked = false;
    std::string histogram_key;
    std::vector<Violation> violations;
    std::vector<EqualityCase> equality_cases;
};

inline bool centrally_symmetric(const Polytope& p) {
    for (const auto& v : p.vertices()) {
        const LatticePoint w = -v;
        if (!std::binary_search(p.vertices().begin(), p.vertices().end(), w)) return false;
    }
    return true;
}

inline PolytopeVerdict verify_one(const Polytope& p, std::size_t index) {
    PolytopeVerdict out;
    if (!reflexive(p) || !p.is_simplicial()) return out;
    out.checked = true;
    const std::size_t n = p.dim();
    auto fail = [&](const std::string& check, const std::string& witness) {
        out.violations.push_back(Violation{index, check, witness + " in " + vertex_list(p)});
    };
    auto guarded = [&](const std::string& check, auto&& body) {
        try {
            body();
        } catch (const Error& e) {
            fail(check, std::string("exception: ") + e.what());
        }
    };

    const DeltaWitness dw = delta(p);
    const Integer d = dw.value;
    const bool smooth = is_smooth(p);

    guarded("level_counts", [&] {
        for (std::size_t f = 0; f < p.facets().size(); ++f) {
            auto h = level_counts(p, f);
            if (h[Integer(-1)] != n) fail("level_counts", "count(-1) != n at facet " + std::to_string(f));
            if (h[Integer(0)] > n) fail("level_counts", "count(0) > n at facet " + std::to_string(f));
        }
    });
    guarded("delta_adjacency", [&] {
        for (const auto& w : delta_pairs(p))
            if (!is_adjacent(p, w.vertex, w.facet))
                fail("delta_adjacency", "vertex " + std::to_string(w.vertex) + " not adjacent to facet " +
                                            std::to_string(w.facet));
    });
    guarded("minkowski", [&] {
        auto m = minkowski_relation(p);
        if (!m.holds()) fail("minkowski", "residual " + std::string([&] {
            std::ostringstream os;
            os << m.residual;
            return os.str();
        }()));
        if (!minkowski_relation(dual(p)).holds()) fail("minkowski", "residual nonzero on the dual");
        if (smooth) {
            LatticePoint s(n, dual_lattice(p.ambient()));
            const Polytope q = dual(p);
            for (const auto& u : q.vertices()) s += u;
            if (!s.is_zero()) fail("minkowski", "smooth polytope whose dual vertices do not sum to zero");
        }
    });
    guarded("facet_volume_triangulation", [&] {
        for (std::size_t f = 0; f < p.facets().size(); ++f)
            if (facet_lattice_volume(p, f, PullFrom::lowest) != facet_lattice_volume(p, f, PullFrom::highest))
                fail("facet_volume_triangulation", "pulling orders disagree at facet " + std::to_string(f));
    });
    guarded("duality", [&] {
        const Polytope q = dual(p);
        if (!(dual(q) == p)) fail("duality", "(P*)* != P");
        std::vector<LatticePoint> normals;
        for (const auto& f : p.facets()) normals.push_back(f.normal);
        if (!(Polytope::hull(normals) == q)) fail("duality", "dual vertices are not the hull of the normals");
        if (!reflexive(q)) fail("duality", "dual is not reflexive");
    });

    std::optional<Rational> min_degree;
    guarded("walls", [&] {
        for (const auto& w : ridges(p)) {
            const CurveClass a = curve_class(p, w, WallSide::a);
            const CurveClass b = curve_class(p, w, WallSide::b);
            for (const CurveClass* c : {&a, &b}) {
                if (!is_relation(p, c->gamma)) fail("walls", "wall relation is not a relation");
                if (c->gamma.degree != wall_degree_by_pairing(p, w, c->side))
                    fail("walls", "degree by coefficients != degree by pairing");
                if (!(c->b > 0 && c->b <= 1)) fail("walls", "b outside (0,1]");
                if (smooth && c->b != 1) fail("walls", "b != 1 on a smooth polytope");
                if (c->mult_base == 1 && c->mult_other == 1 && c->b != 1)
                    fail("walls", "b != 1 between unimodular cones");
                if (!is_integral(c->exact_degree)) fail("walls", "non-integral anticanonical degree");
            }
            // Both sides describe the same invariant curve.
            for (std::size_t v = 0; v < p.vertices().size(); ++v)
                if (a.b * a.gamma.coefficient(v) != b.b * b.gamma.coefficient(v)) {
                    fail("walls", "the two sides of a wall give different curve classes");
                    break;
                }
            if (a.exact_degree != b.exact_degree) fail("walls", "exact degree depends on the side");
            if (!min_degree || a.exact_degree < *min_degree) min_degree = a.exact_degree;
        }
    });
    guarded("pseudo_index", [&] {
        const auto r = pseudo_index_report(p);
        if (r.min_invariant_degree > Rational(d + 1)) fail("pseudo_index", "min degree > delta + 1");
        if (r.min_invariant_degree < 1) fail("pseudo_index", "min degree < 1");
        if (smooth && r.min_invariant_degree != Rational(d + 1))
            fail("pseudo_index", "smooth but min degree != delta + 1");
    });

    guarded("bounds", [&] {
        const BoundsVerdict bv = verify_bounds(p);
        if (!bv.bound_3n) fail("bound_3n", "|V| > 3n");
        if (bv.bound_delta && !*bv.bound_delta) fail("bound_delta", "|V| > n + n/delta");
        const VarietyClass vc = classify_equality_variety(p);
        if (bv.equality_i) {
            const IntMatrix t = vertex_facet_table(p);
            for (const auto& x : t.data())
                if (x < -1 || x > 1) {
                    fail("equality_i_levels", "pairing outside {-1,0,1}");
                    break;
                }
            if (!centrally_symmetric(p) || !centrally_symmetric(dual(p)))
                fail("equality_i_symmetry", "P or P* not centrally symmetric");
            if (n % 2 != 0) fail("equality_i_parity", "|V| = 3n with n odd");
            if (vc.kind != VarietyKind::s3_power) fail("equality_i_structure", "not a power of the hexagon");
            out.equality_cases.push_back(EqualityCase{index, "i", describe(vc)});
        }
        if (bv.equality_ii) {
            std::optional<std::vector<IntMatrix>> reference;
            for (std::size_t f = 0; f < p.facets().size(); ++f) {
                const Decomposition dec = decompose_equality(p, f);
                std::vector<IntMatrix> blocks;
                for (const auto& b : dec.blocks) blocks.push_back(canonical_form(b.local.polytope).matrix);
                std::sort(blocks.begin(), blocks.end());
                if (!reference) reference = blocks;
                else if (*reference != blocks)
                    fail("equality_ii_base_facet", "block multiset depends on the base facet");
            }
            if (smooth != (vc.kind == VarietyKind::projective_power))
                fail("equality_ii_smoothness", "smoothness and projective-power structure disagree");
            out.equality_cases.push_back(EqualityCase{index, "ii", describe(vc)});
        }
        // Consequences for the variety: rho <= 2n always; rho (iota - 1) <= n when smooth.
        const Integer rho = picard_number(p);
        if (rho > 2 * Integer(n)) fail("picard_bound", "rho > 2n");
        if (smooth && rho * d > Integer(n)) fail("picard_pseudo_index", "rho (iota - 1) > n");
    });

    std::ostringstream key;
    key << "V=" << p.vertices().size() << ",delta=" << d << ",rho=" << p.vertices().size() - n
        << ",min_degree=" << (min_degree ? to_string(*min_degree) : std::string("?"));
    out.histogram_key = key.str();
    return out;
}

} // namespace detail

inline CorpusSummary verify_corpus(const std::vector<Polytope>& polytopes, unsigned jobs = 1) {
    std::vector<detail::PolytopeVerdict> verdicts(polytopes.size());
    parallel_for(polytopes.size(), jobs,
                 [&](std::size_t i) { verdicts[i] = detail::verify_one(polytopes[i], i); });
    CorpusSummary s;
    s.input_count = polytopes.size();
    for (auto& v : verdicts) {
        if (!v.checked) {
            ++s.filtered_out;
            continue;
        }
        ++s.checked;
        ++s.histogram[v.histogram_key];
        s.violations.insert(s.violations.end(), v.violations.begin(), v.violations.end());
        s.equality_cases.insert(s.equality_cases.end(), v.equality_cases.begin(), v.equality_cases.end());
    }
    return s;
}

} // namespace reflexkit
