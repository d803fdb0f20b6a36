#pragma once

// JSON views of the computed invariants. Integers that fit in 64 bits are JSON
// integers, larger ones are decimal strings; rationals are "p/q" strings.

#include "reflexkit/enumerator.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace reflexkit::report {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline Json integer(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

inline Json rational(const Rational& q) { return to_string(q); }

inline Json point(const LatticePoint& p) {
    Json a = Json::array();
    for (const auto& x : p.coords) a.push_back(integer(x));
    return a;
}

inline Json points(const std::vector<LatticePoint>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(point(p));
    return a;
}

inline Json integers(const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(integer(x));
    return a;
}

inline Json matrix_rows(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(integer(m(i, j)));
        a.push_back(std::move(r));
    }
    return a;
}

inline Json index_list(const std::vector<std::size_t>& xs) {
    Json a = Json::array();
    for (auto x : xs) a.push_back(x);
    return a;
}

inline Json variety(const VarietyClass& v) {
    Json j;
    j["kind"] = to_string(v.kind);
    j["delta"] = v.delta;
    j["exponent"] = v.exponent;
    j["description"] = describe(v);
    return j;
}

inline Json decomposition(const Polytope& p, const Decomposition& d) {
    Json j;
    j["base_facet"] = d.base_facet;
    j["u"] = point(d.u);
    j["delta"] = integer(d.delta);
    j["base_vertices"] = index_list(d.base_vertices);
    j["remaining"] = index_list(d.remaining);
    j["phi"] = index_list(d.phi);
    Json blocks = Json::array();
    for (const auto& b : d.blocks) {
        Json bj;
        bj["f"] = b.f;
        bj["e"] = index_list(b.e);
        std::vector<LatticePoint> vs;
        for (auto v : b.local.vertices) vs.push_back(p.vertex(v));
        bj["vertices"] = points(vs);
        bj["span_basis"] = points(b.local.span_basis);
        bj["local_vertices"] = points(b.local.polytope.vertices());
        bj["factor"] = to_string(identify_factor(b.local.polytope).kind);
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

inline Json curve(const CurveClass& c) {
    Json j;
    j["facets"] = {c.wall.facet_a, c.wall.facet_b};
    j["common"] = index_list(c.wall.common);
    j["side"] = c.side == WallSide::a ? "a" : "b";
    j["opposite"] = c.opposite;
    Json coeffs = Json::object();
    for (const auto& [v, q] : c.gamma.coefficients) coeffs[std::to_string(v)] = rational(q);
    j["relation"] = std::move(coeffs);
    j["relation_degree"] = rational(c.gamma.degree);
    j["b"] = rational(c.b);
    j["degree"] = rational(c.exact_degree);
    j["mult_wall"] = integer(c.mult_wall);
    j["mult_base"] = integer(c.mult_base);
    j["mult_other"] = integer(c.mult_other);
    return j;
}

// Full analysis of one polytope. Fields that are undefined for the input
// (delta for non-reflexive, Picard number for non-simplicial, ...) are null.
inline Json analyze(const Polytope& p) {
    const FanoReport r = fano_report(p);
    Json j;
    j["schema"] = schema_version;
    j["dimension"] = p.dim();
    j["ambient"] = to_string(p.ambient());
    j["vertices"] = points(p.vertices());
    j["vertex_count"] = r.vertex_count;
    j["facet_count"] = r.facet_count;
    j["flags"] = {{"origin_interior", r.origin_interior},
                  {"reflexive", r.is_reflexive},
                  {"simplicial", r.is_simplicial},
                  {"smooth", r.is_smooth}};
    j["delta"] = r.delta ? integer(*r.delta) : Json();
    j["picard"] = r.picard ? Json(*r.picard) : Json();
    j["facet_determinants"] = r.is_simplicial ? integers(r.facet_determinants) : Json();
    j["facet_volumes"] = r.is_reflexive ? integers(r.volume_per_facet) : Json();

    const bool sr = r.is_reflexive && r.is_simplicial;
    if (sr) {
        const auto pi = pseudo_index_report(p);
        j["pseudo_index"] = {{"upper_bound", integer(pi.upper_bound)},
                             {"min_invariant_degree", rational(pi.min_invariant_degree)},
                             {"exact", pi.exact},
                             {"bound", rational(pi.bound)}};
    } else {
        j["pseudo_index"] = Json();
    }
    if (r.minkowski)
        j["minkowski"] = {{"coefficients", integers(r.minkowski->coefficients)},
                          {"residual", point(r.minkowski->residual)}};
    else
        j["minkowski"] = Json();

    if (sr) {
        const BoundsVerdict bv = verify_bounds(p);
        bool adjacency = true;
        for (const auto& w : delta_pairs(p)) adjacency = adjacency && is_adjacent(p, w.vertex, w.facet);
        bool levels = true;
        for (std::size_t f = 0; f < p.facets().size(); ++f) {
            auto h = level_counts(p, f);
            levels = levels && h[Integer(-1)] == p.dim() && h[Integer(0)] <= p.dim();
        }
        j["theorems"] = {{"bound_3n", bv.bound_3n},
                         {"bound_delta", bv.bound_delta ? Json(*bv.bound_delta) : Json()},
                         {"equality_i", bv.equality_i},
                         {"equality_ii", bv.equality_ii},
                         {"delta_pairs_adjacent", adjacency},
                         {"level_counts", levels}};
        j["decomposition"] = bv.equality_ii ? decomposition(p, decompose_equality(p)) : Json();
        j["classification"] = variety(classify_equality_variety(p));
    } else {
        j["theorems"] = Json();
        j["decomposition"] = Json();
        j["classification"] = Json();
    }
    j["canonical_form"] = matrix_rows(canonical_form(p).matrix);
    return j;
}

inline Json curves(const Polytope& p) {
    Json j;
    j["schema"] = schema_version;
    j["vertices"] = points(p.vertices());
    Json walls = Json::array();
    for (const auto& w : ridges(p))
        for (WallSide s : {WallSide::a, WallSide::b}) walls.push_back(curve(curve_class(p, w, s)));
    j["walls"] = std::move(walls);
    const auto pi = pseudo_index_report(p);
    j["pseudo_index"] = {{"upper_bound", integer(pi.upper_bound)},
                         {"min_invariant_degree", rational(pi.min_invariant_degree)},
                         {"exact", pi.exact},
                         {"bound", rational(pi.bound)}};
    return j;
}

inline Json canonical(const Polytope& p) {
    const CanonicalForm c = canonical_form(p);
    Json j;
    j["schema"] = schema_version;
    j["vertices"] = points(p.vertices());
    j["canonical_form"] = matrix_rows(c.matrix);
    j["vertex_order"] = index_list(c.vertex_order);
    j["transform"] = matrix_rows(c.transform);
    return j;
}

inline Json summary(const CorpusSummary& s) {
    Json j;
    j["schema"] = schema_version;
    j["input_count"] = s.input_count;
    j["checked"] = s.checked;
    j["filtered_out"] = s.filtered_out;
    Json h = Json::object();
    for (const auto& [k, v] : s.histogram) h[k] = v;
    j["histogram"] = std::move(h);
    Json eq = Json::array();
    for (const auto& e : s.equality_cases) eq.push_back({{"index", e.index}, {"case", e.which}, {"variety", e.variety}});
    j["equality_cases"] = std::move(eq);
    Json vs = Json::array();
    for (const auto& v : s.violations) vs.push_back({{"index", v.index}, {"check", v.check}, {"witness", v.witness}});
    j["violations"] = std::move(vs);
    j["ok"] = s.ok();
    return j;
}

inline Json enumeration(const Enumeration2d& e) {
    Json j;
    j["schema"] = schema_version;
    j["box_radius"] = e.box_radius;
    j["class_count"] = e.classes.size();
    j["subsets_examined"] = e.subsets_examined;
    j["reflexive_hits"] = e.reflexive_hits;
    j["probe_size"] = e.probe_size;
    j["probe_hits"] = e.probe_hits.size();
    Json cs = Json::array();
    for (const auto& c : e.classes) {
        Json cj;
        cj["vertices"] = points(c.representative.vertices());
        cj["vertex_count"] = c.report.vertex_count;
        cj["delta"] = c.report.delta ? integer(*c.report.delta) : Json();
        cj["smooth"] = c.report.is_smooth;
        cj["bound_3n"] = c.bounds.bound_3n;
        cj["bound_delta"] = c.bounds.bound_delta ? Json(*c.bounds.bound_delta) : Json();
        cj["equality_i"] = c.bounds.equality_i;
        cj["equality_ii"] = c.bounds.equality_ii;
        cj["classification"] = variety(c.variety);
        cj["provenance"] = c.provenance;
        cs.push_back(std::move(cj));
    }
    j["classes"] = std::move(cs);
    return j;
}

} // namespace reflexkit::report
