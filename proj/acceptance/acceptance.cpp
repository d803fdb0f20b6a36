// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "reflexkit/io.hpp"
#include "reflexkit/reflexkit.hpp"
#include "reflexkit/report.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace reflexkit;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
};

struct Named {
    std::string name;
    Polytope p;
};

const Polytope p2 = catalog::smooth_simplex(2);

std::vector<PolytopeClass>& polygons() {
    static std::vector<PolytopeClass> cs = enumerate_reflexive_2d(3);
    return cs;
}

// Free sums of smooth simplices (including the simplices themselves) up to dimension 5.
std::vector<Named> simplex_sums() {
    const std::vector<std::vector<std::size_t>> parts{{2}, {3}, {4}, {5}, {1, 2}, {2, 2}, {1, 3},
                                                      {2, 3}, {1, 4}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2}};
    std::vector<Named> out;
    for (const auto& part : parts) {
        Polytope s = catalog::smooth_simplex(part.front());
        std::string name = "P" + std::to_string(part.front());
        for (std::size_t k = 1; k < part.size(); ++k) {
            s = free_sum(s, catalog::smooth_simplex(part[k]));
            name += "+P" + std::to_string(part[k]);
        }
        out.push_back({name, s});
    }
    return out;
}

std::vector<Named> smooth_corpus() {
    std::vector<Named> out{{"hexagon", catalog::hexagon()}};
    for (std::size_t n = 2; n <= 5; ++n) out.push_back({"cross" + std::to_string(n), catalog::cross_polytope(n)});
    for (auto& s : simplex_sums()) out.push_back(std::move(s));
    return out;
}

std::vector<Named> full_corpus() {
    std::vector<Named> out;
    for (std::size_t i = 0; i < polygons().size(); ++i) {
        out.push_back({"class" + std::to_string(i + 1), polygons()[i].representative});
        out.push_back({"dual class" + std::to_string(i + 1), dual(polygons()[i].representative)});
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        out.push_back({"cross" + std::to_string(n), catalog::cross_polytope(n)});
        out.push_back({"dual cross" + std::to_string(n), dual(catalog::cross_polytope(n))});
    }
    const Polytope hh = free_sum(catalog::hexagon(), catalog::hexagon());
    out.push_back({"hex+hex", hh});
    out.push_back({"dual hex+hex", dual(hh)});
    for (auto& s : simplex_sums()) {
        out.push_back({"dual " + s.name, dual(s.p)});
        out.push_back(std::move(s));
    }
    return out;
}

std::string str(const Integer& x) { return to_string(x); }
std::string str(const Rational& x) { return to_string(x); }

// ---------------------------------------------------------------------------

Outcome triangles() {
    Outcome o;
    const FanoReport a = fano_report(p2);
    o.require(a.is_reflexive && a.is_simplicial && a.is_smooth, "P2 reflexive, simplicial, smooth");
    o.require(a.delta && *a.delta == 2, "P2 delta = 2");
    o.require(a.picard && *a.picard == 1, "P2 Picard number 1");
    const auto pa = pseudo_index_report(p2);
    o.require(pa.upper_bound == 3 && pa.min_invariant_degree == 3 && pa.exact, "P2 pseudo-index exactly 3");

    const Polytope d = dual(p2);
    const FanoReport b = fano_report(d);
    o.require(b.is_reflexive && b.is_simplicial && !b.is_smooth, "dual reflexive, simplicial, not smooth");
    o.require(b.delta && *b.delta == 2, "dual delta = 2");
    const auto pb = pseudo_index_report(d);
    o.require(pb.min_invariant_degree == 1, "dual minimum invariant degree 1");
    o.require(pb.upper_bound == 3, "dual upper bound 3");
    for (const auto& det : facet_determinants(d)) o.require(abs(det) == 3, "dual facet determinant +-3");
    o.notes.push_back("P2: delta " + str(*a.delta) + ", min degree " + str(pa.min_invariant_degree) + "; dual: min degree " +
                      str(pb.min_invariant_degree) + ", bound " + str(pb.upper_bound));
    return o;
}

Outcome enumeration() {
    Outcome o;
    const auto r3 = run_enumeration_2d(3);
    const auto r4 = run_enumeration_2d(4);
    o.require(r3.classes.size() == 16, "16 classes at box radius 3");
    std::vector<CanonicalForm> f3, f4;
    for (const auto& c : r3.classes) f3.push_back(c.canonical);
    for (const auto& c : r4.classes) f4.push_back(c.canonical);
    o.require(f3 == f4, "same classes at box radius 4");
    std::size_t max_v = 0, at_max = 0;
    for (const auto& c : r3.classes) max_v = std::max(max_v, c.representative.vertices().size());
    for (const auto& c : r3.classes)
        if (c.representative.vertices().size() == max_v) {
            ++at_max;
            o.require(are_isomorphic(c.representative, catalog::hexagon()), "the 6-vertex class is the hexagon");
        }
    o.require(max_v == 6 && at_max == 1, "exactly one class with the maximal 6 vertices");
    o.require(r3.probe_size == 7 && r3.probe_hits.empty() && r4.probe_hits.empty(), "no reflexive 7-gon");
    o.notes.push_back(std::to_string(r3.classes.size()) + " classes; r=3 examined " + std::to_string(r3.subsets_examined) +
                      " subsets, r=4 " + std::to_string(r4.subsets_examined));
    return o;
}

Outcome delta_bound() {
    Outcome o;
    std::vector<std::string> eq1, eq2;
    for (const auto& c : polygons()) {
        const Polytope& p = c.representative;
        const BoundsVerdict v = verify_bounds(p);
        if (v.delta == 0) continue;
        o.require(*v.bound_delta, "|V| <= 2 + 2/delta");
        if (!v.equality_ii) continue;
        // Every base facet must decompose.
        std::vector<Decomposition> ds;
        for (std::size_t f = 0; f < p.facets().size(); ++f) ds.push_back(decompose_equality(p, f));
        const auto& d = ds.front();
        if (v.delta == 1) {
            bool segments = d.blocks.size() == 2;
            for (const auto& b : d.blocks)
                segments = segments && b.local.polytope.vertices() == std::vector<LatticePoint>{{-1}, {1}};
            o.require(segments, "delta = 1 equality case has two segment blocks");
            if (are_isomorphic(p, catalog::cross_polytope(2))) eq1.push_back("cross2");
            else if (are_isomorphic(p, dual(catalog::cross_polytope(2)))) eq1.push_back("square");
            else eq1.push_back("unexpected");
        } else if (v.delta == 2) {
            o.require(d.blocks.size() == 1, "delta = 2 equality case is a single block");
            if (are_isomorphic(p, p2)) eq2.push_back("P2");
            else if (are_isomorphic(p, dual(p2))) eq2.push_back("dual P2");
            else eq2.push_back("unexpected");
        } else {
            o.require(false, "equality only for delta in {1, 2}");
        }
    }
    std::sort(eq1.begin(), eq1.end());
    std::sort(eq2.begin(), eq2.end());
    // At delta = 1 the bound 4 is attained by the cross-polytope and by its dual
    // [-1,1]^2 as well; both split into two segments.
    o.require(eq1 == std::vector<std::string>{"cross2", "square"}, "delta = 1 equality: cross-polytope and its dual");
    o.require(eq2 == std::vector<std::string>{"P2", "dual P2"}, "delta = 2 equality: P2 and its dual");
    o.notes.push_back("delta=1 equality: cross2, square; delta=2 equality: P2, dual P2");
    return o;
}

Outcome minkowski() {
    Outcome o;
    std::vector<Named> base;
    for (std::size_t i = 0; i < polygons().size(); ++i) {
        base.push_back({"class", polygons()[i].representative});
        base.push_back({"dual class", dual(polygons()[i].representative)});
    }
    for (std::size_t n = 2; n <= 5; ++n) base.push_back({"cross", catalog::cross_polytope(n)});
    base.push_back({"hex+hex", free_sum(catalog::hexagon(), catalog::hexagon())});
    base.push_back({"P2+P2", free_sum(p2, p2)});
    std::size_t checked = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const Polytope& p = base[i].p;
        o.require(minkowski_relation(p).holds(), "Minkowski relation for " + base[i].name);
        ++checked;
        std::mt19937_64 rng(1000 + i);
        for (int t = 0; t < 50; ++t) {
            const auto m = minkowski_relation(p.transformed(random_unimodular(p.dim(), rng)));
            o.require(m.holds(), "Minkowski relation for an image of " + base[i].name);
            ++checked;
        }
    }
    o.notes.push_back(std::to_string(checked) + " polytopes, all residuals zero");
    return o;
}

Outcome pseudo_index() {
    Outcome o;
    for (const auto& s : smooth_corpus()) {
        o.require(is_smooth(s.p), s.name + " is smooth");
        const auto r = pseudo_index_report(s.p);
        const Integer d = delta(s.p).value;
        o.require(r.min_invariant_degree == Rational(d + 1), s.name + ": minimum degree = delta + 1");
    }
    std::size_t walls = 0, members = 0;
    for (const auto& c : full_corpus()) {
        if (!c.p.is_simplicial()) continue;
        ++members;
        const bool smooth = is_smooth(c.p);
        const auto r = pseudo_index_report(c.p);
        o.require(r.min_invariant_degree <= Rational(delta(c.p).value + 1), c.name + ": minimum degree <= delta + 1");
        for (const auto& w : ridges(c.p))
            for (WallSide side : {WallSide::a, WallSide::b}) {
                const CurveClass cc = curve_class(c.p, w, side);
                o.require(cc.b > 0 && cc.b <= 1, c.name + ": b in (0, 1]");
                if (smooth) o.require(cc.b == 1, c.name + ": b = 1 on a smooth fan");
                ++walls;
            }
    }
    o.notes.push_back(std::to_string(smooth_corpus().size()) + " smooth, " + std::to_string(members) +
                      " simplicial members, " + std::to_string(walls) + " wall sides");
    return o;
}

Outcome levels() {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& c : full_corpus()) {
        if (!c.p.is_simplicial()) continue;
        const std::size_t n = c.p.dim();
        for (std::size_t f = 0; f < c.p.facets().size(); ++f) {
            const auto h = level_counts(c.p, f);
            const auto minus = h.find(Integer(-1)), zero = h.find(Integer(0));
            o.require(minus != h.end() && minus->second == n, c.name + ": n vertices at level -1");
            o.require(zero == h.end() || zero->second <= n, c.name + ": at most n vertices at level 0");
        }
        for (const auto& w : delta_pairs(c.p)) {
            o.require(is_adjacent(c.p, w.vertex, w.facet), c.name + ": delta-pair adjacent");
            ++pairs;
        }
    }
    o.notes.push_back(std::to_string(pairs) + " delta-pairs, all adjacent");
    return o;
}

Outcome classification() {
    Outcome o;
    const Polytope hh = free_sum(catalog::hexagon(), catalog::hexagon());
    o.require(hh.vertices().size() == 12, "hex+hex has 12 vertices");
    o.require(classify_equality_variety(hh) == VarietyClass{VarietyKind::s3_power, 0, 2}, "hex+hex is S3_power^2");
    const Polytope pp = free_sum(p2, p2);
    o.require(is_smooth(pp), "P2+P2 is smooth");
    o.require(classify_equality_variety(pp) == VarietyClass{VarietyKind::projective_power, 2, 2},
              "P2+P2 is projective_power(2,2)");
    o.require(classify_equality_variety(catalog::cross_polytope(4)) == VarietyClass{VarietyKind::projective_power, 1, 4},
              "cross4 is projective_power(1,4)");
    o.notes.push_back("hex+hex S3_power^2, P2+P2 projective_power(2)^2, cross4 projective_power(1)^4");
    return o;
}

Outcome canonical_and_io() {
    Outcome o;
    const auto corpus = full_corpus();
    std::size_t images = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Polytope& p = corpus[i].p;
        const CanonicalForm c = canonical_form(p);
        std::mt19937_64 rng(5000 + i);
        for (int t = 0; t < 100; ++t) {
            o.require(canonical_form(p.transformed(random_unimodular(p.dim(), rng))) == c,
                      corpus[i].name + ": canonical form invariant");
            ++images;
        }
        o.require(dual(dual(p)) == p, corpus[i].name + ": (P*)* = P");
    }
    std::vector<Polytope> ps;
    for (const auto& c : corpus) ps.push_back(c.p);
    const std::string text = emit(ps);
    o.require(parse_polytopes(text) == ps, "parse(emit(corpus)) = corpus");
    o.require(emit(parse_polytopes(text)) == text, "emit(parse(text)) = text");

    const auto e1 = run_enumeration_2d(3, 7, 1), e4 = run_enumeration_2d(3, 7, 4);
    o.require(report::enumeration(e1).dump() == report::enumeration(e4).dump(), "enumeration output independent of jobs");
    o.require(report::summary(verify_corpus(ps, 1)).dump() == report::summary(verify_corpus(ps, 4)).dump(),
              "verification output independent of jobs");
    std::vector<std::string> a(ps.size()), b(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) a[i] = report::analyze(ps[i]).dump();
    parallel_for(ps.size(), 4, [&](std::size_t i) { b[i] = report::analyze(ps[i]).dump(); });
    o.require(a == b, "analysis output independent of jobs");
    o.notes.push_back(std::to_string(corpus.size()) + " polytopes, " + std::to_string(images) + " images");
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"P2 triangle and its dual", 1, triangles},
        {"enumeration of reflexive polygons", 600, enumeration},
        {"vertex bound in terms of delta and its equality cases", 60, delta_bound},
        {"Minkowski relation", 60, minkowski},
        {"pseudo-index and wall degrees", 60, pseudo_index},
        {"levels of facets and adjacency of delta-pairs", 60, levels},
        {"classification of free sums", 60, classification},
        {"canonical forms, duality, I/O and determinism", 300, canonical_and_io},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            o.pass = false;
            o.notes.push_back("over the time budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + "s");
        }
        all = all && o.pass;
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << " (" << std::fixed
             << std::setprecision(2) << secs << "s)";
        std::cout << line.str();
        // Deduplicate repeated failure notes.
        std::set<std::string> seen;
        for (const auto& n : o.notes)
            if (seen.insert(n).second) std::cout << "; " << n;
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
