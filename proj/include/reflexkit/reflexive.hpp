#pragma once

// Reflexivity, polar duality and GL(n,Z) normal forms.

#include "reflexkit/polytope.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace reflexkit {

struct ReflexivityCheck {
    bool reflexive = false;
    std::vector<std::size_t> offending;  // facets at lattice distance != 1

    explicit operator bool() const noexcept { return reflexive; }
};

inline ReflexivityCheck is_reflexive(const Polytope& p) {
    if (!p.origin_is_interior())
        throw PreconditionError("origin_not_interior",
                                "reflexivity needs the origin in the interior");
    ReflexivityCheck out;
    for (std::size_t f = 0; f < p.facets().size(); ++f)
        if (p.facet(f).offset != 1) out.offending.push_back(f);
    out.reflexive = out.offending.empty();
    return out;
}

// Total version: false when the origin is not interior.
inline bool reflexive(const Polytope& p) {
    return p.origin_is_interior() && is_reflexive(p).reflexive;
}

inline void require_reflexive(const Polytope& p) {
    if (!reflexive(p)) throw PreconditionError("non_reflexive", "polytope is not reflexive");
}

// Rows indexed by facets (equivalently, vertices u of the dual), columns by
// vertices v; entry <v, u>.
inline IntMatrix vertex_facet_table(const Polytope& p) {
    IntMatrix t(p.facets().size(), p.vertices().size());
    for (std::size_t f = 0; f < p.facets().size(); ++f)
        for (std::size_t v = 0; v < p.vertices().size(); ++v)
            t(f, v) = dot(p.vertex(v), p.facet(f).normal);
    return t;
}

// The polar dual of a reflexive polytope. Its vertices are the facet normals,
// and facet i of the dual has normal vertex(i) of the input, so facet order of
// the dual matches vertex order of the input and vice versa.
inline Polytope dual(const Polytope& p) {
    require_reflexive(p);
    std::vector<LatticePoint> vertices;
    for (const auto& f : p.facets()) vertices.push_back(f.normal);
    std::vector<FacetData> facets;
    for (const auto& v : p.vertices()) {
        if (!is_primitive(v))
            throw TheoremViolation("primitive_vertices", "reflexive polytope has a non-primitive vertex");
        facets.push_back(FacetData{v, Integer(1), {}});
    }
    return Polytope::from_vertices_and_facets(std::move(vertices), std::move(facets));
}

// Index of the facet F_u = {x in P : <x, u> = -1}.
inline std::size_t facet_of(const Polytope& p, const LatticePoint& u) {
    require_reflexive(p);
    for (std::size_t f = 0; f < p.facets().size(); ++f)
        if (p.facet(f).normal == u) return f;
    throw PreconditionError("not_a_dual_vertex", "point is not a vertex of the dual polytope");
}

// Inverse of facet_of.
inline LatticePoint dual_vertex_of(const Polytope& p, std::size_t facet) {
    require_reflexive(p);
    return p.facet(facet).normal;
}

// ---------------------------------------------------------------------------
// Normal form

struct CanonicalForm {
    IntMatrix matrix;                       // |V| x n, one canonical vertex per row
    std::vector<std::size_t> vertex_order;  // row k is the image of input vertex vertex_order[k]
    IntMatrix transform;                    // unimodular; transform * vertex_order[k] = row k

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.matrix == b.matrix;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return a.matrix < b.matrix;
    }
};

namespace detail {

// Columns in order, split into blocks of still-interchangeable columns.
struct PermState {
    std::vector<std::uint16_t> cols;
    std::vector<std::uint16_t> starts;  // block start offsets, ending with cols.size()
    std::vector<std::uint8_t> used;     // rows already placed

    std::string key() const {
        std::string k(used.begin(), used.end());
        for (std::size_t b = 0; b + 1 < starts.size(); ++b) {
            std::vector<std::uint16_t> block(cols.begin() + starts[b], cols.begin() + starts[b + 1]);
            std::sort(block.begin(), block.end());
            for (auto c : block) {
                k.push_back(static_cast<char>(c & 0xff));
                k.push_back(static_cast<char>(c >> 8));
            }
            k.push_back('|');
        }
        return k;
    }
};

// Row r as it would read under the best column order compatible with `s`.
inline void sorted_row(const std::vector<std::vector<int>>& t, std::size_t r, const PermState& s,
                       std::vector<int>& out) {
    out.resize(s.cols.size());
    for (std::size_t i = 0; i < s.cols.size(); ++i) out[i] = t[r][s.cols[i]];
    for (std::size_t b = 0; b + 1 < s.starts.size(); ++b)
        if (s.starts[b + 1] - s.starts[b] > 1)
            std::sort(out.begin() + s.starts[b], out.begin() + s.starts[b + 1], std::greater<>());
}

inline PermState refine(const std::vector<std::vector<int>>& t, const PermState& s, std::size_t r) {
    PermState next;
    next.used = s.used;
    next.used[r] = 1;
    next.cols = s.cols;
    const auto& row = t[r];
    for (std::size_t b = 0; b + 1 < s.starts.size(); ++b) {
        auto first = next.cols.begin() + s.starts[b];
        auto last = next.cols.begin() + s.starts[b + 1];
        std::sort(first, last, [&](std::uint16_t x, std::uint16_t y) { return row[x] > row[y]; });
        for (auto it = first; it != last; ++it)
            if (it == first || row[*it] != row[*(it - 1)])
                next.starts.push_back(static_cast<std::uint16_t>(it - next.cols.begin()));
    }
    next.starts.push_back(static_cast<std::uint16_t>(next.cols.size()));
    return next;
}

// All column orders under which the vertex-facet table, with rows and columns
// permuted independently, is lexicographically maximal. Ties are explored
// exhaustively level by level.
inline std::set<std::vector<std::size_t>> maximal_column_orders(const IntMatrix& table) {
    if (table.cols() > 0xffff)
        throw PreconditionError("too_many_vertices", "normal form supports at most 65535 vertices");
    // Entries only matter through their order; compress them to small ints.
    std::map<Integer, int> rank_of;
    for (const auto& x : table.data()) rank_of.emplace(x, 0);
    int next_rank = 0;
    for (auto& [value, r] : rank_of) r = next_rank++;
    std::vector<std::vector<int>> t(table.rows(), std::vector<int>(table.cols()));
    for (std::size_t i = 0; i < table.rows(); ++i)
        for (std::size_t j = 0; j < table.cols(); ++j) t[i][j] = rank_of.at(table(i, j));

    PermState start;
    start.used.assign(table.rows(), 0);
    start.cols.resize(table.cols());
    std::iota(start.cols.begin(), start.cols.end(), std::uint16_t{0});
    start.starts = {0, static_cast<std::uint16_t>(table.cols())};
    std::vector<PermState> states{start};

    std::vector<int> best, row;
    for (std::size_t level = 0; level < table.rows(); ++level) {
        best.clear();
        std::vector<PermState> next;
        std::unordered_set<std::string> seen;
        for (const auto& s : states) {
            for (std::size_t r = 0; r < table.rows(); ++r) {
                if (s.used[r]) continue;
                sorted_row(t, r, s, row);
                if (!next.empty() && row < best) continue;
                if (next.empty() || best < row) {
                    best = row;
                    next.clear();
                    seen.clear();
                }
                PermState child = refine(t, s, r);
                if (seen.insert(child.key()).second) next.push_back(std::move(child));
            }
        }
        states = std::move(next);
    }

    std::set<std::vector<std::size_t>> orders;
    for (const auto& s : states) {
        if (s.starts.size() != s.cols.size() + 1)
            throw TheoremViolation("distinct_columns", "two vertices pair identically with all facets");
        orders.emplace(s.cols.begin(), s.cols.end());
    }
    return orders;
}

} // namespace detail

// Representative of the orbit under GL(n,Z) and vertex relabeling: among all
// vertex orders that maximize the vertex-facet table, the lexicographically
// smallest Hermite normal form of the n x |V| vertex matrix.
inline CanonicalForm canonical_form(const Polytope& p) {
    const std::size_t n = p.dim();
    const std::size_t nv = p.vertices().size();
    bool have = false;
    HermiteForm best;
    std::vector<std::size_t> best_order;
    for (const auto& order : detail::maximal_column_orders(vertex_facet_table(p))) {
        IntMatrix a(n, nv);
        for (std::size_t k = 0; k < nv; ++k)
            for (std::size_t i = 0; i < n; ++i) a(i, k) = p.vertex(order[k])[i];
        HermiteForm h = hermite_normal_form(a);
        if (!have || h.h < best.h) {
            best = std::move(h);
            best_order = order;
            have = true;
        }
    }
    return CanonicalForm{best.h.transpose(), std::move(best_order), std::move(best.u)};
}

inline bool are_isomorphic(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim())
        throw PreconditionError("dimension_mismatch", "isomorphism test across dimensions");
    if (a.vertices().size() != b.vertices().size() || a.facets().size() != b.facets().size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

// The polytope whose vertices are the rows of a canonical form.
inline Polytope polytope_of(const CanonicalForm& c, Lattice ambient = Lattice::N) {
    std::vector<LatticePoint> pts;
    for (std::size_t r = 0; r < c.matrix.rows(); ++r) pts.emplace_back(c.matrix.row(r), ambient);
    return Polytope::hull(std::move(pts));
}

} // namespace reflexkit
